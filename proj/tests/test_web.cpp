#include "oracles.hpp"
#include "webfoam/link.hpp"
#include "webfoam/web.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace webfoam;

namespace {

Web disjoint_union(const Web& a, const Web& b) {
    Web w = a;
    const int dv = static_cast<int>(a.vertices.size());
    int next_id = 0;
    for (const auto& e : a.edges) next_id = std::max(next_id, e.id + 1);
    std::map<int, int> remap;
    for (const auto& e : b.edges) {
        remap[e.id] = next_id;
        w.edges.push_back({next_id++, e.label, e.from + dv, e.to + dv, e.oriented});
    }
    for (auto v : b.vertices) {
        for (int& h : v.halfedges) h = remap[h];
        w.vertices.push_back(v);
    }
    w.circles.insert(w.circles.end(), b.circles.begin(), b.circles.end());
    return w;
}

bool has_violation(const Web& w, const std::string& needle) {
    for (const auto& v : validate(w))
        if (v.what.find(needle) != std::string::npos) return true;
    return false;
}

// Every flattening of every corpus diagram, plus a few 3-braid closures.
std::vector<Web> flattening_corpus() {
    std::vector<LinkDiagram> ds;
    for (const auto& c : link_corpus()) ds.push_back(c.diagram);
    ds.push_back(braid_closure({1, 2, 1, 2}, 3));
    ds.push_back(braid_closure({1, -2, 1, -2}, 3));
    ds.push_back(braid_closure({1, 1, 2, -1}, 3));
    std::vector<Web> out;
    for (const auto& d : ds)
        for (std::uint64_t s = 0; s < (1ull << d.crossings.size()); ++s) out.push_back(resolve(d, s));
    return out;
}

}  // namespace

TEST(Web, ValidateExamples) {
    EXPECT_TRUE(validate(webs::simple_circle()).empty());
    EXPECT_TRUE(validate(webs::theta()).empty());
    EXPECT_TRUE(validate(webs::square_closure()).empty());

    // two vertices joined by three simple edges
    Web bad;
    const int a = bad.add_vertex(), b = bad.add_vertex();
    for (int i = 0; i < 3; ++i) bad.add_edge(1, a, b);
    bad.vertices[a].halfedges = {0, 1, 2};
    bad.vertices[b].halfedges = {2, 1, 0};
    EXPECT_FALSE(validate(bad).empty());
    EXPECT_THROW(moy_eval(bad, 3), InvalidWeb);
    try {
        moy_eval(bad, 3);
    } catch (const InvalidWeb& e) {
        EXPECT_FALSE(e.violations().empty());
    }
}

TEST(Web, ValidateDetectsStructuralErrors) {
    Web w = webs::theta();
    std::swap(w.vertices[0].halfedges[0], w.vertices[0].halfedges[1]);
    EXPECT_TRUE(has_violation(w, "planar"));

    Web loops = webs::theta();
    loops.edges[0].to = loops.edges[0].from;
    EXPECT_TRUE(has_violation(loops, "loop"));

    Web lab = webs::theta();
    lab.edges[0].label = 3;
    EXPECT_FALSE(validate(lab).empty());

    Web circ;
    circ.circles = {3};
    EXPECT_FALSE(validate(circ).empty());

    // both simple edges of a vertex must point the same way relative to it
    Web flow = webs::theta();
    for (auto& e : flow.edges)
        if (e.label == 1) {
            std::swap(e.from, e.to);
            break;
        }
    EXPECT_FALSE(validate(flow).empty());
}

TEST(Web, JsonRoundTrip) {
    for (const Web& w : {webs::simple_circle(), webs::double_circle(), webs::theta(), webs::double_digons(),
                         webs::simple_double_digons(), webs::square_closure()}) {
        const std::string text = web_to_json(w);
        const Web back = web_from_json(text);
        EXPECT_EQ(web_to_json(back), text);
        EXPECT_EQ(moy_eval(back, 3), moy_eval(w, 3));
    }
    EXPECT_THROW(web_from_json("{"), std::invalid_argument);
    EXPECT_THROW(web_from_json(R"({"edges": [{"id": "x"}]})"), std::invalid_argument);
}

TEST(Web, BasicValues) {
    for (int N = 2; N <= 6; ++N) {
        EXPECT_EQ(moy_eval(webs::simple_circle(), N), qint(N));
        EXPECT_EQ(moy_eval(webs::double_circle(), N), qbinom(N, 2));
        EXPECT_EQ(moy_eval(webs::theta(), N), qint(2) * qbinom(N, 2));
        EXPECT_EQ(moy_eval(Web{}, N), LaurentPoly(1));
    }
}

TEST(Web, ProofWebDimensions) {
    for (int N = 2; N <= 5; ++N) {
        EXPECT_EQ(moy_eval(webs::double_digons(), N).eval_at_one(), 2 * N * (N - 1));
        EXPECT_EQ(moy_eval(webs::simple_double_digons(), N).eval_at_one(), N * (N - 1) * (N - 1));
        EXPECT_EQ(moy_eval(webs::square_closure(), N).eval_at_one(),
                  N * N + 2 * N * (N - 2) + N * N * (N - 2) * (N - 2));
    }
}

TEST(Web, AgreesWithColouringCountAtOne) {
    for (int N = 2; N <= 4; ++N) {
        for (const Web& w : {webs::theta(), webs::double_digons(), webs::simple_double_digons(), webs::square_closure()})
            EXPECT_EQ(moy_eval(w, N).eval_at_one(), oracle::colourings(w, N));
        for (const Web& w : flattening_corpus()) EXPECT_EQ(moy_eval(w, N).eval_at_one(), oracle::colourings(w, N));
    }
}

TEST(Web, ValuesAreSymmetricWithNonnegativeCoefficients) {
    for (int N = 2; N <= 4; ++N)
        for (const Web& w : flattening_corpus()) {
            const LaurentPoly p = moy_eval(w, N);
            EXPECT_EQ(p, p.invert_q());
            for (const auto& [e, c] : p.terms()) EXPECT_GT(c, 0);
        }
}

TEST(Web, StrategyIndependence) {
    const auto corpus = flattening_corpus();
    for (int N = 2; N <= 4; ++N)
        for (const Web& w : corpus) {
            const LaurentPoly ref = moy_eval(w, N);
            for (unsigned long seed = 1; seed <= 3; ++seed) {
                MoyOptions opt;
                opt.seed = seed * 7919 + N;
                EXPECT_EQ(moy_eval(w, N, opt), ref);
            }
        }
}

TEST(Web, DisjointUnionMultiplies) {
    const std::vector<Web> ws{webs::theta(), webs::square_closure(), webs::simple_double_digons(), webs::double_circle()};
    for (int N = 2; N <= 4; ++N)
        for (const auto& a : ws)
            for (const auto& b : ws) {
                const Web u = disjoint_union(a, b);
                ASSERT_TRUE(validate(u).empty());
                EXPECT_EQ(moy_eval(u, N), moy_eval(a, N) * moy_eval(b, N));
            }
}

TEST(Web, BudgetExhaustionIsExplicit) {
    MoyOptions opt;
    opt.budget = 0;
    EXPECT_THROW(moy_eval(webs::square_closure(), 3, opt), IrreducibleWeb);
}
