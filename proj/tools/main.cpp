// Command-line front end: link | web | theta | ring | verify.

#include "webfoam/cohomology.hpp"
#include "webfoam/foam.hpp"
#include "webfoam/link.hpp"
#include "webfoam/relations.hpp"
#include "webfoam/web.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace webfoam;

constexpr int kOk = 0, kFail = 1, kUsage = 2;

struct Options {
    int n = 3;
    std::string pd, file, suite = "all", builtin;
    long budget = MoyOptions{}.budget;
    int jobs = 1;
    bool euler = false, direct = false, machine = false;
    std::string kind;
    std::vector<int> indices;
    int ring_k = 1, ring_n = 2;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

StateSumOptions sum_options(const Options& o) {
    StateSumOptions s;
    s.moy.budget = o.budget;
    s.jobs = o.jobs;
    return s;
}

int cmd_link(const Options& o) {
    std::string text = o.pd;
    if (text.empty() && !o.file.empty()) text = slurp(o.file);
    if (text.empty()) throw UsageError("link: give a PD code with --pd or --file");
    const LinkDiagram d = parse_pd(text);
    const auto v = o.euler ? euler_characteristic(d, o.n, sum_options(o)) : state_sum(d, o.n, sum_options(o));
    std::cout << v.str() << '\n';
    return kOk;
}

int cmd_web(const Options& o) {
    Web w;
    if (!o.builtin.empty()) {
        if (o.builtin == "circle") w = webs::simple_circle();
        else if (o.builtin == "double-circle") w = webs::double_circle();
        else if (o.builtin == "theta") w = webs::theta();
        else if (o.builtin == "dr1") w = webs::double_digons();
        else if (o.builtin == "dr2") w = webs::simple_double_digons();
        else if (o.builtin == "sqr1") w = webs::square_closure();
        else throw UsageError("web: unknown builtin " + o.builtin);
    } else if (!o.file.empty()) {
        w = web_from_json(slurp(o.file));
    } else {
        throw UsageError("web: give --file or --builtin");
    }
    const auto bad = validate(w);
    if (!bad.empty()) {
        for (const auto& b : bad) std::cerr << "invalid web: " << b.what << '\n';
        return kUsage;
    }
    MoyOptions m;
    m.budget = o.budget;
    std::cout << moy_eval(w, o.n, m).str() << '\n';
    return kOk;
}

void print_table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows,
                 bool machine) {
    if (machine) {
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? " " : "") << r[i];
            std::cout << '\n';
        }
        return;
    }
    std::vector<std::size_t> w(head.size());
    for (std::size_t i = 0; i < head.size(); ++i) w[i] = head[i].size();
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "  " : "") << std::setw(static_cast<int>(w[i])) << r[i];
        std::cout << '\n';
    };
    line(head);
    for (const auto& r : rows) line(r);
}

int cmd_theta(const Options& o) {
    const int N = o.n;
    auto S = [](auto x) {
        std::ostringstream s;
        s << x;
        return s.str();
    };
    if (o.kind == "112") {
        if (N < 2) throw UsageError("theta 112 needs N >= 2");
        if (!o.indices.empty()) {
            if (o.indices.size() != 4) throw UsageError("theta 112 takes indices d1 d2 j k");
            const Partition dec{o.indices[2], o.indices[3]};
            if (!dec.valid()) throw UsageError("theta 112: need j >= k >= 0");
            const auto v = o.direct ? theta112_direct(N, o.indices[0], o.indices[1], dec)
                                    : theta112_closed(N, o.indices[0], o.indices[1], dec);
            std::cout << v.get_str() << '\n';
            return kOk;
        }
        std::vector<std::vector<std::string>> rows;
        for (const auto& [d1, d2, dec, v] : theta112_table(N))
            rows.push_back({S(d1), S(d2), S(dec[0]), S(dec[1]), v.get_str()});
        print_table({"d1", "d2", "j", "k", "value"}, rows, o.machine);
        return kOk;
    }
    if (o.kind == "123") {
        if (N < 4) throw UsageError("theta 123 needs N >= 4");
        if (!o.indices.empty()) {
            if (o.indices.size() != 6) throw UsageError("theta 123 takes indices p q r j k i");
            const Partition d3{o.indices[0], o.indices[1], o.indices[2]}, d2{o.indices[3], o.indices[4]};
            if (!d3.valid() || !d2.valid()) throw UsageError("theta 123: need p >= q >= r >= 0 and j >= k >= 0");
            const auto v = o.direct ? theta123_direct(N, d3, d2, o.indices[5])
                                    : theta123_closed(N, d3, d2, o.indices[5]);
            std::cout << v.get_str() << '\n';
            return kOk;
        }
        std::vector<std::vector<std::string>> rows;
        for (const auto& [d3, d2, i, v] : theta123_table(N))
            rows.push_back({S(d3[0]), S(d3[1]), S(d3[2]), S(d2[0]), S(d2[1]), S(i), v.get_str()});
        print_table({"p", "q", "r", "j", "k", "i", "value"}, rows, o.machine);
        return kOk;
    }
    throw UsageError("theta: kind must be 112 or 123");
}

int cmd_ring(const Options& o) {
    if (o.ring_k < 1 || o.ring_k > 3 || o.ring_n <= o.ring_k) throw UsageError("ring: need 1 <= k <= 3 and N > k");
    const GrassRing r(o.ring_n, o.ring_k);
    std::vector<std::vector<std::string>> rows;
    for (const auto& lam : r.basis()) {
        const SchurSum dual = r.dual(lam);
        rows.push_back({lam.str(), dual.str(), r.trace(r.mul(SchurSum(lam), dual)).get_str()});
    }
    if (o.machine) {
        print_table({}, rows, true);
        return kOk;
    }
    std::size_t w0 = 0, w1 = 0;
    for (const auto& row : rows) w0 = std::max(w0, row[0].size()), w1 = std::max(w1, row[1].size());
    for (const auto& row : rows)
        std::cout << "pi" << std::left << std::setw(static_cast<int>(w0)) << row[0] << "  dual " << std::setw(static_cast<int>(w1))
                  << row[1] << std::right << "  trace " << row[2] << '\n';
    return kOk;
}

int cmd_verify(const Options& o) {
    const auto& rel = relation_ids();
    const auto& rp = reidemeister_pairs();
    const bool all = o.suite == "all";
    const bool rels = all || o.suite == "relations";
    const bool links = all || o.suite == "links";
    const bool one_rel = std::find(rel.begin(), rel.end(), o.suite) != rel.end();
    const bool one_pair = std::find(rp.begin(), rp.end(), o.suite) != rp.end();
    if (!rels && !links && !one_rel && !one_pair) throw UsageError("verify: unknown suite " + o.suite);

    int failed = 0, run = 0;
    auto report = [&](bool pass, const std::string& text) {
        ++run;
        failed += pass ? 0 : 1;
        std::cout << text << '\n';
    };
    for (const auto& id : rel) {
        if (!(rels || o.suite == id)) continue;
        try {
            const auto r = verify_relation(id, o.n, o.jobs);
            report(r.pass, r.summary());
        } catch (const std::domain_error& e) {
            if (one_rel) throw UsageError(e.what());
            std::cout << id << " N=" << o.n << ": skipped (" << e.what() << ")\n";
        }
    }
    if (links || one_pair) {
        for (const auto& id : rp) {
            if (!(links || o.suite == id)) continue;
            const auto r = verify_reidemeister(id, o.n);
            report(r.pass, id + " N=" + std::to_string(o.n) + ": " + (r.pass ? "pass" : "FAIL") + " (" +
                               r.before.str() + " vs " + r.after.str() + ")");
        }
    }
    if (links) {
        for (const auto& t : skein_triples()) {
            const auto r = skein_check(t.plus, t.minus, t.zero, o.n);
            report(r.pass, "skein " + t.name + " N=" + std::to_string(o.n) + ": " + (r.pass ? "pass" : "FAIL"));
        }
        for (const auto& c : link_corpus()) {
            const auto s = state_sum(c.diagram, o.n, sum_options(o));
            const auto chi = euler_characteristic(c.diagram, o.n, sum_options(o));
            mpz_class expect = 1;
            for (int i = 0; i < c.diagram.components(); ++i) expect *= o.n;
            const bool ok = s == chi && s.eval_at_one() == expect;
            report(ok, c.name + " N=" + std::to_string(o.n) + ": " + (ok ? "pass" : "FAIL") + " " + s.str());
        }
    }
    std::cout << (failed == 0 ? "PASS" : "FAIL") << ": " << run - failed << " of " << run << " checks passed\n";
    return failed == 0 ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Exact sl(N) web and foam calculator"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto add_n = [&](CLI::App* c) {
        c->add_option("--n,-N", o.n, "rank N")->envname("WEBFOAM_N")->check(CLI::Range(2, 64));
    };
    auto add_budget = [&](CLI::App* c) {
        c->add_option("--budget", o.budget, "move budget for web evaluation")
            ->envname("WEBFOAM_BUDGET")
            ->check(CLI::PositiveNumber);
    };
    auto add_jobs = [&](CLI::App* c) {
        c->add_option("--jobs,-j", o.jobs, "worker threads")->envname("WEBFOAM_JOBS")->check(CLI::Range(1, 256));
    };

    auto* link = app.add_subcommand("link", "sl(N) polynomial of a PD code");
    add_n(link);
    add_budget(link);
    add_jobs(link);
    link->add_option("--pd,pd", o.pd, "PD code, e.g. X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]")->envname("WEBFOAM_PD");
    link->add_option("--file", o.file, "file holding a PD code")->envname("WEBFOAM_FILE");
    link->add_flag("--euler", o.euler, "graded Euler characteristic of the shifted complex");

    auto* web = app.add_subcommand("web", "MOY evaluation of a web");
    add_n(web);
    add_budget(web);
    web->add_option("--file,file", o.file, "web JSON file")->envname("WEBFOAM_FILE");
    web->add_option("--builtin", o.builtin, "circle | double-circle | theta | dr1 | dr2 | sqr1");

    auto* theta = app.add_subcommand("theta", "theta foam values");
    add_n(theta);
    theta->add_option("kind", o.kind, "112 or 123")->required();
    theta->add_option("indices", o.indices, "d1 d2 j k (112) or p q r j k i (123); omit for the table");
    theta->add_flag("--direct", o.direct, "use the determinant formula instead of the closed form");
    theta->add_flag("--machine", o.machine, "space separated rows without header");

    auto* ring = app.add_subcommand("ring", "Schur basis, dual basis and trace of H*(G(k,N))");
    ring->add_option("k", o.ring_k)->required();
    ring->add_option("N", o.ring_n)->required();
    ring->add_flag("--machine", o.machine, "space separated rows");

    auto* verify = app.add_subcommand("verify", "relation, skein and Reidemeister checks");
    add_n(verify);
    add_budget(verify);
    add_jobs(verify);
    verify->add_option("--suite,suite", o.suite, "all | relations | links | a relation id | a Reidemeister pair")
        ->envname("WEBFOAM_SUITE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*link) return cmd_link(o);
        if (*web) return cmd_web(o);
        if (*theta) return cmd_theta(o);
        if (*ring) return cmd_ring(o);
        if (*verify) return cmd_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const PdParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidWeb& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IrreducibleWeb& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
