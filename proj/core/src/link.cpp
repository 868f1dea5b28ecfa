#include "webfoam/link.hpp"

#include "moy_engine.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

namespace webfoam {

namespace {

// Position where the over strand enters / leaves.
int over_in(const Crossing& c) { return c.positive ? 3 : 1; }
int over_out(const Crossing& c) { return c.positive ? 1 : 3; }

struct Ends {
    std::map<int, std::pair<int, int>> head, tail;  // arc -> (crossing, position)
};

// Head and tail positions of every arc; throws when an arc does not have
// exactly one of each.
Ends arc_ends(const std::vector<Crossing>& cs) {
    Ends e;
    for (int i = 0; i < static_cast<int>(cs.size()); ++i) {
        const auto& c = cs[i];
        const std::pair<int, int> heads[2] = {{c.arcs[0], 0}, {c.arcs[over_in(c)], over_in(c)}};
        const std::pair<int, int> tails[2] = {{c.arcs[2], 2}, {c.arcs[over_out(c)], over_out(c)}};
        for (auto [arc, p] : heads)
            if (!e.head.emplace(arc, std::pair{i, p}).second)
                throw PdParseError("invalid PD: arc " + std::to_string(arc) + " enters crossings twice");
        for (auto [arc, p] : tails)
            if (!e.tail.emplace(arc, std::pair{i, p}).second)
                throw PdParseError("invalid PD: arc " + std::to_string(arc) + " leaves crossings twice");
    }
    for (const auto& [arc, _] : e.head)
        if (!e.tail.count(arc)) throw PdParseError("invalid PD: arc " + std::to_string(arc) + " never leaves");
    for (const auto& [arc, _] : e.tail)
        if (!e.head.count(arc)) throw PdParseError("invalid PD: arc " + std::to_string(arc) + " never enters");
    return e;
}

// The four-valent diagram graph must be planar on every connected piece.
void check_planar(const std::vector<Crossing>& cs) {
    const int n = static_cast<int>(cs.size());
    std::map<int, std::vector<int>> where;  // arc -> darts 4i+p
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < 4; ++p) where[cs[i].arcs[p]].push_back(4 * i + p);
    std::vector<int> opp(4 * n);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [arc, ds] : where) {
        opp[ds[0]] = ds[1];
        opp[ds[1]] = ds[0];
        parent[find(ds[0] / 4)] = find(ds[1] / 4);
    }
    std::map<int, long> chi;
    for (int i = 0; i < n; ++i) chi[find(i)] += 1 - 2;  // V - E, two arcs per crossing
    std::vector<bool> seen(4 * n, false);
    for (int d = 0; d < 4 * n; ++d) {
        if (seen[d]) continue;
        ++chi[find(d / 4)];
        for (int x = d; !seen[x];) {
            seen[x] = true;
            const int o = opp[x];
            x = 4 * (o / 4) + (o % 4 + 1) % 4;
        }
    }
    for (const auto& [root, c] : chi)
        if (c != 2) throw PdParseError("invalid PD: the diagram is not planar");
}

// Relabel arcs 1, 2, ... along each component in traversal order.
LinkDiagram normalized(LinkDiagram d) {
    if (d.crossings.empty()) return d;
    const Ends e = arc_ends(d.crossings);
    std::map<int, int> label;
    int next = 1;
    for (const auto& [start, _] : e.tail) {
        if (label.count(start)) continue;
        for (int arc = start; !label.count(arc);) {
            label[arc] = next++;
            const auto [i, p] = e.head.at(arc);
            const auto& c = d.crossings[i];
            arc = p == 0 ? c.arcs[2] : c.arcs[over_out(c)];
        }
    }
    for (auto& c : d.crossings)
        for (int& a : c.arcs) a = label.at(a);
    return d;
}

LaurentPoly qpow(int e) { return LaurentPoly::monomial(e); }

std::vector<LaurentPoly> state_values(const LinkDiagram& d, int N, const StateSumOptions& opt) {
    const int n = static_cast<int>(d.crossings.size());
    if (n > 24) throw std::domain_error("state sum: too many crossings");
    const std::size_t states = std::size_t{1} << n;
    std::vector<LaurentPoly> out(states);
    const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(states)));
    auto work = [&](int t, std::exception_ptr& err) {
        try {
            detail::MoyEngine eng(N, opt.moy);
            for (std::size_t s = t; s < states; s += jobs) out[s] = eng.eval(resolve(d, s));
        } catch (...) {
            err = std::current_exception();
        }
    };
    std::vector<std::exception_ptr> errs(jobs);
    if (jobs == 1) {
        work(0, errs[0]);
    } else {
        std::vector<std::thread> ts;
        for (int t = 0; t < jobs; ++t) ts.emplace_back(work, t, std::ref(errs[t]));
        for (auto& t : ts) t.join();
    }
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return out;
}

int shift(const LinkDiagram& d, int N) { return (N - 1) * d.n_plus() - N * d.n_minus(); }

}  // namespace

int LinkDiagram::n_plus() const {
    return static_cast<int>(std::count_if(crossings.begin(), crossings.end(), [](auto& c) { return c.positive; }));
}

int LinkDiagram::n_minus() const { return static_cast<int>(crossings.size()) - n_plus(); }

int LinkDiagram::components() const {
    if (crossings.empty()) return unknots;
    const Ends e = arc_ends(crossings);
    std::map<int, bool> seen;
    int count = 0;
    for (const auto& [start, _] : e.tail) {
        if (seen[start]) continue;
        ++count;
        for (int arc = start; !seen[arc];) {
            seen[arc] = true;
            const auto [i, p] = e.head.at(arc);
            const auto& c = crossings[i];
            arc = p == 0 ? c.arcs[2] : c.arcs[over_out(c)];
        }
    }
    return count + unknots;
}

std::string LinkDiagram::to_pd() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& c : crossings) {
        os << (first ? "" : ",") << "X[" << c.arcs[0] << ',' << c.arcs[1] << ',' << c.arcs[2] << ',' << c.arcs[3]
           << ']';
        first = false;
    }
    for (int i = 0; i < unknots; ++i) {
        os << (first ? "" : ",") << 'U';
        first = false;
    }
    return os.str();
}

LinkDiagram parse_pd(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() >= 4 && s.compare(0, 3, "PD[") == 0 && s.back() == ']') s = s.substr(3, s.size() - 4);
    if (s.empty()) throw PdParseError("invalid PD: empty input");

    LinkDiagram d;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw PdParseError("invalid PD: " + why + " at offset " + std::to_string(i));
    };
    auto number = [&] {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i || j - i > 9) fail("expected an arc label");
        const int v = std::stoi(s.substr(i, j - i));
        i = j;
        return v;
    };
    while (true) {
        if (s[i] == 'U') {
            ++d.unknots;
            ++i;
        } else if (s.compare(i, 2, "X[") == 0) {
            i += 2;
            Crossing c;
            for (int k = 0; k < 4; ++k) {
                c.arcs[k] = number();
                if (s[i] != (k == 3 ? ']' : ',')) fail(k == 3 ? "expected ']'" : "expected ','");
                ++i;
            }
            d.crossings.push_back(c);
        } else {
            fail("expected X[...] or U");
        }
        if (i == s.size()) break;
        if (s[i] != ',') fail("expected ','");
        if (++i == s.size()) fail("trailing ','");
    }

    std::map<int, int> count;
    for (const auto& c : d.crossings)
        for (int a : c.arcs) ++count[a];
    for (const auto& [a, k] : count)
        if (k != 2)
            throw PdParseError("invalid PD: arc " + std::to_string(a) + " occurs " + std::to_string(k) +
                               " times, expected 2");
    for (auto& c : d.crossings) {
        if (c.arcs[0] == c.arcs[2] || c.arcs[1] == c.arcs[3])
            throw PdParseError("invalid PD: an arc joins opposite sides of a crossing");
        // The over strand runs from the smaller to the larger of b, d; a gap
        // larger than one marks the wrap from a component's last arc to its first.
        const int b = c.arcs[1], dd = c.arcs[3];
        const bool small_to_large = std::abs(b - dd) == 1;
        const int from = small_to_large ? std::min(b, dd) : std::max(b, dd);
        c.positive = from == dd;
    }
    arc_ends(d.crossings);
    check_planar(d.crossings);
    return d;
}

LinkDiagram braid_closure(const std::vector<int>& word, int strands) {
    if (strands < 1) throw std::domain_error("braid closure: need at least one strand");
    LinkDiagram d;
    std::vector<int> cur(strands);
    std::iota(cur.begin(), cur.end(), 1);
    const std::vector<int> init = cur;
    int next = strands + 1;
    for (int g : word) {
        const int i = std::abs(g) - 1;
        if (g == 0 || i + 1 >= strands) throw std::domain_error("braid closure: generator out of range");
        const int l_in = cur[i], r_in = cur[i + 1], l_out = next++, r_out = next++;
        Crossing c;
        // Positions counterclockwise from the incoming under arc; the strand
        // from the left ends on the right.
        if (g > 0) {
            c.arcs = {r_in, l_out, r_out, l_in};
            c.positive = true;
        } else {
            c.arcs = {l_in, r_in, l_out, r_out};
            c.positive = false;
        }
        d.crossings.push_back(c);
        cur[i] = r_out;
        cur[i + 1] = l_out;
    }
    for (int j = 0; j < strands; ++j) {
        if (cur[j] == init[j]) {
            ++d.unknots;  // untouched strand
            continue;
        }
        for (auto& c : d.crossings)
            for (int& a : c.arcs)
                if (a == cur[j]) a = init[j];
    }
    d = normalized(d);
    check_planar(d.crossings);
    return d;
}

LinkDiagram change_crossing(const LinkDiagram& d, int i) {
    LinkDiagram out = d;
    auto& c = out.crossings.at(i);
    const auto a = c.arcs;
    if (c.positive) {
        c.arcs = {a[3], a[0], a[1], a[2]};
    } else {
        c.arcs = {a[1], a[2], a[3], a[0]};
    }
    c.positive = !c.positive;
    return out;
}

LinkDiagram mirror(const LinkDiagram& d) {
    LinkDiagram out = d;
    for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i) out = change_crossing(out, i);
    return out;
}

LinkDiagram smooth_crossing(const LinkDiagram& d, int i) {
    LinkDiagram out = d;
    const Crossing c = out.crossings.at(i);
    out.crossings.erase(out.crossings.begin() + i);
    // Incoming arc continues as the outgoing arc of the same smoothing strand.
    const std::pair<int, int> pairs[2] = {c.positive ? std::pair{0, 1} : std::pair{0, 3},
                                          c.positive ? std::pair{3, 2} : std::pair{1, 2}};
    std::array<int, 4> arcs = c.arcs;
    for (auto [pin, pout] : pairs) {
        const int in = arcs[pin], outl = arcs[pout];
        if (in == outl) {
            ++out.unknots;
            continue;
        }
        for (auto& x : out.crossings)
            for (int& a : x.arcs)
                if (a == outl) a = in;
        for (int& a : arcs)
            if (a == outl) a = in;
    }
    return normalized(out);
}

Web resolve(const LinkDiagram& d, std::uint64_t state) {
    const int n = static_cast<int>(d.crossings.size());
    const Ends e = arc_ends(d.crossings);
    Web w;
    for (int i = 0; i < d.unknots; ++i) w.circles.push_back(1);

    std::vector<bool> thick(n);
    std::vector<int> merge(n, -1), split(n, -1), dbl(n, -1);
    for (int i = 0; i < n; ++i) {
        const bool one = (state >> i) & 1;
        thick[i] = d.crossings[i].positive ? one : !one;
        if (thick[i]) {
            merge[i] = w.add_vertex();
            split[i] = w.add_vertex();
            dbl[i] = w.add_edge(2, merge[i], split[i]);
            w.edges[dbl[i]].oriented = false;
        }
    }
    // Smoothed crossings pass each incoming position to an outgoing one.
    auto pass = [&](int i, int p) {
        if (d.crossings[i].positive) return p == 0 ? 1 : 2;
        return p == 0 ? 3 : 2;
    };

    std::map<int, int> edge_of;  // arc -> web edge
    std::map<std::pair<int, int>, int> at_position;  // (crossing, position) -> web edge
    for (const auto& [arc, tail] : e.tail) {
        if (!thick[tail.first]) continue;
        std::vector<int> chain;
        int x = arc;
        std::pair<int, int> h;
        while (true) {
            chain.push_back(x);
            h = e.head.at(x);
            if (thick[h.first]) break;
            x = d.crossings[h.first].arcs[pass(h.first, h.second)];
        }
        const int id = w.add_edge(1, split[tail.first], merge[h.first]);
        for (int a : chain) edge_of[a] = id;
        at_position[tail] = id;
        at_position[h] = id;
    }
    // Arcs left over close up through smoothings only.
    for (const auto& [arc, tail] : e.tail) {
        if (edge_of.count(arc)) continue;
        for (int x = arc; !edge_of.count(x);) {
            edge_of[x] = -1;
            const auto h = e.head.at(x);
            x = d.crossings[h.first].arcs[pass(h.first, h.second)];
        }
        w.circles.push_back(1);
    }
    for (int i = 0; i < n; ++i) {
        if (!thick[i]) continue;
        auto at = [&](int p) { return at_position.at({i, p}); };
        if (d.crossings[i].positive) {
            w.vertices[merge[i]].halfedges = {dbl[i], at(3), at(0)};
            w.vertices[split[i]].halfedges = {dbl[i], at(1), at(2)};
        } else {
            w.vertices[merge[i]].halfedges = {dbl[i], at(0), at(1)};
            w.vertices[split[i]].halfedges = {dbl[i], at(2), at(3)};
        }
    }
    return w;
}

LaurentPoly state_sum(const LinkDiagram& d, int N, const StateSumOptions& opt) {
    const auto vals = state_values(d, N, opt);
    LaurentPoly sum;
    for (std::size_t s = 0; s < vals.size(); ++s) {
        const int k = __builtin_popcountll(s);
        sum += (k % 2 ? -vals[s] : vals[s]).shift(k);
    }
    const LaurentPoly pre = qpow(shift(d, N));
    return d.n_minus() % 2 ? -(pre * sum) : pre * sum;
}

LaurentPoly euler_characteristic(const LinkDiagram& d, int N, const StateSumOptions& opt) {
    const auto vals = state_values(d, N, opt);
    const int n = static_cast<int>(d.crossings.size());
    std::vector<LaurentPoly> chain(n + 1);  // graded dimension of each chain group
    for (std::size_t s = 0; s < vals.size(); ++s) chain[__builtin_popcountll(s)] += vals[s];
    LaurentPoly chi;
    for (int i = 0; i <= n; ++i) {
        const LaurentPoly t = chain[i].shift(shift(d, N) + i);
        chi += ((i - d.n_minus()) % 2 != 0) ? -t : t;
    }
    return chi;
}

SkeinReport skein_check(const LinkDiagram& plus, const LinkDiagram& minus, const LinkDiagram& zero, int N) {
    SkeinReport r;
    r.lhs = state_sum(minus, N).shift(N) - state_sum(plus, N).shift(-N);
    r.rhs = (qpow(1) - qpow(-1)) * state_sum(zero, N);
    r.pass = r.lhs == r.rhs;
    return r;
}

std::vector<SkeinTriple> skein_triples() {
    std::vector<SkeinTriple> out;
    for (auto [name, pd] : {std::pair{"kink", "X[2,2,1,1]"}, std::pair{"trefoil", "X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]"}}) {
        const LinkDiagram p = parse_pd(pd);
        out.push_back({name, p, change_crossing(p, 0), smooth_crossing(p, 0)});
    }
    return out;
}

namespace {

struct PairDef {
    std::string id;
    LinkDiagram before, after;
};

const std::vector<PairDef>& pair_defs() {
    static const std::vector<PairDef> defs = [] {
        std::vector<PairDef> v;
        v.push_back({"R1+", parse_pd("X[2,2,1,1]"), parse_pd("U")});
        v.push_back({"R1-", parse_pd("X[2,1,1,2]"), parse_pd("U")});
        v.push_back({"R2", braid_closure({1, -1}, 2), braid_closure({}, 2)});
        v.push_back({"R2b", braid_closure({1, 2, -2}, 3), braid_closure({1}, 3)});
        v.push_back({"R3", braid_closure({1, 2, 1}, 3), braid_closure({2, 1, 2}, 3)});
        v.push_back({"R3b", braid_closure({-1, 2, 1}, 3), braid_closure({2, 1, -2}, 3)});
        return v;
    }();
    return defs;
}

}  // namespace

const std::vector<std::string>& reidemeister_pairs() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& p : pair_defs()) v.push_back(p.id);
        return v;
    }();
    return ids;
}

ReidemeisterReport verify_reidemeister(const std::string& pair_id, int N) {
    for (const auto& p : pair_defs()) {
        if (p.id != pair_id) continue;
        ReidemeisterReport r;
        r.id = p.id;
        r.before = state_sum(p.before, N);
        r.after = state_sum(p.after, N);
        r.pass = r.before == r.after;
        return r;
    }
    throw std::domain_error("unknown Reidemeister pair: " + pair_id);
}

const std::vector<CorpusEntry>& link_corpus() {
    static const std::vector<CorpusEntry> corpus = [] {
        const std::pair<const char*, const char*> raw[] = {
            {"unknot", "U"},
            {"unknot-kink-positive", "X[2,2,1,1]"},
            {"unknot-kink-negative", "X[2,1,1,2]"},
            {"unlink-2", "U,U"},
            {"hopf-negative", "X[4,1,3,2],X[2,3,1,4]"},
            {"hopf-positive", "X[2,4,1,3],X[4,2,3,1]"},
            {"trefoil-left", "X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]"},
            {"trefoil-right", "X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]"},
            {"figure-eight", "X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]"},
        };
        std::vector<CorpusEntry> v;
        for (auto [name, pd] : raw) v.push_back({name, parse_pd(pd)});
        return v;
    }();
    return corpus;
}

}  // namespace webfoam
