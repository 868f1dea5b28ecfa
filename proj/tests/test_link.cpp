#include "oracles.hpp"
#include "webfoam/link.hpp"

#include <gtest/gtest.h>

#include <regex>
#include <stdexcept>

using namespace webfoam;

namespace {

const LaurentPoly qmq = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);

mpz_class power(int b, int e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), b, e);
    return r;
}

// Crossing signs straight from the PD text, with no library parsing.
std::vector<bool> signs_from_text(const std::string& pd) {
    std::vector<bool> out;
    static const std::regex x(R"(X\[(\d+),(\d+),(\d+),(\d+)\])");
    for (auto it = std::sregex_iterator(pd.begin(), pd.end(), x); it != std::sregex_iterator(); ++it) {
        const auto& m = *it;
        out.push_back(oracle::pd_positive(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4])));
    }
    return out;
}

}  // namespace

TEST(Link, ParseAndSigns) {
    const std::vector<std::pair<std::string, std::string>> texts{
        {"unknot-kink-positive", "X[2,2,1,1]"},
        {"unknot-kink-negative", "X[2,1,1,2]"},
        {"hopf-negative", "X[4,1,3,2],X[2,3,1,4]"},
        {"hopf-positive", "X[2,4,1,3],X[4,2,3,1]"},
        {"trefoil-left", "X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]"},
        {"trefoil-right", "X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]"},
        {"figure-eight", "X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]"},
    };
    for (const auto& [name, pd] : texts) {
        const LinkDiagram d = parse_pd(pd);
        const auto want = signs_from_text(pd);
        ASSERT_EQ(d.crossings.size(), want.size()) << name;
        for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(d.crossings[i].positive, want[i]) << name << " " << i;
        EXPECT_EQ(d.n_plus() + d.n_minus(), static_cast<int>(want.size()));
    }
    EXPECT_EQ(parse_pd("U").unknots, 1);
    EXPECT_EQ(parse_pd("U, U").components(), 2);
    EXPECT_EQ(parse_pd("X[4,1,3,2],X[2,3,1,4]").components(), 2);
    EXPECT_EQ(parse_pd("X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]").components(), 1);
}

TEST(Link, ParseErrors) {
    for (const char* bad : {"X[1,1,2,2]", "X[1,2,3]", "Y[1,2,3,4]", "X[1,2,3,4]", "X[1,a,2,2]", "", "U,"})
        EXPECT_THROW(parse_pd(bad), PdParseError) << bad;
}

TEST(Link, ResolveExamples) {
    const LinkDiagram kink = parse_pd("X[2,2,1,1]");
    const Web w0 = resolve(kink, 0);
    EXPECT_TRUE(validate(w0).empty());
    EXPECT_EQ(moy_eval(w0, 3), qint(3) * qint(3));  // smoothing a kink leaves two circles

    const Web w1 = resolve(kink, 1);
    EXPECT_TRUE(validate(w1).empty());
    int doubles = 0;
    for (const auto& e : w1.edges) doubles += e.label == 2;
    EXPECT_EQ(doubles, 1);
    EXPECT_EQ(w1.vertices.size(), 2u);

    const Web u = resolve(parse_pd("U"), 0);
    EXPECT_EQ(u.circles, std::vector<int>{1});
    EXPECT_TRUE(u.vertices.empty());

    for (const auto& c : link_corpus())
        for (std::uint64_t s = 0; s < (1ull << c.diagram.crossings.size()); ++s)
            EXPECT_TRUE(validate(resolve(c.diagram, s)).empty()) << c.name << " " << s;
}

TEST(Link, StateSumExamples) {
    for (int N = 2; N <= 5; ++N) {
        EXPECT_EQ(state_sum(parse_pd("U"), N), qint(N));
        EXPECT_EQ(state_sum(parse_pd("X[2,2,1,1]"), N), qint(N));
        EXPECT_EQ(state_sum(parse_pd("X[2,1,1,2]"), N), qint(N));
        EXPECT_EQ(state_sum(parse_pd("U,U"), N), qint(N) * qint(N));
    }
}

TEST(Link, JonesOracleAtN2) {
    // the oracle itself must see the kinks as unknots
    EXPECT_EQ(oracle::sl2_from_jones(parse_pd("X[2,2,1,1]")), qint(2));
    EXPECT_EQ(oracle::sl2_from_jones(parse_pd("X[2,1,1,2]")), qint(2));
    for (const auto& c : link_corpus()) EXPECT_EQ(state_sum(c.diagram, 2), oracle::sl2_from_jones(c.diagram)) << c.name;
    for (const auto& word : std::vector<std::vector<int>>{{1, 2, 1, 2}, {1, -2, 1, -2}, {1, 1, 1, 2, -1, 2}, {-1, -1, -2}}) {
        const LinkDiagram d = braid_closure(word, 3);
        EXPECT_EQ(state_sum(d, 2), oracle::sl2_from_jones(d));
    }
}

TEST(Link, KnownValues) {
    EXPECT_EQ(state_sum(parse_pd("X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]"), 2).str(), "q + q^3 + q^5 - q^9");
    EXPECT_EQ(state_sum(parse_pd("X[4,1,3,2],X[2,3,1,4]"), 2).str(), "q^-6 + q^-4 + q^-2 + 1");
    EXPECT_EQ(state_sum(parse_pd("X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]"), 2).str(), "q^-5 + q^5");
}

TEST(Link, CorpusInvariants) {
    for (int N = 2; N <= 4; ++N)
        for (const auto& c : link_corpus()) {
            const LaurentPoly p = state_sum(c.diagram, N);
            EXPECT_EQ(p.eval_at_one(), power(N, c.diagram.components())) << c.name;
            EXPECT_EQ(state_sum(mirror(c.diagram), N), p.invert_q()) << c.name;
            EXPECT_EQ(euler_characteristic(c.diagram, N), p) << c.name;
        }
}

TEST(Link, SkeinTriples) {
    for (int N = 2; N <= 4; ++N)
        for (const auto& t : skein_triples()) {
            const SkeinReport r = skein_check(t.plus, t.minus, t.zero, N);
            EXPECT_TRUE(r.pass) << t.name;
            // recompute both sides here
            const LaurentPoly lhs =
                state_sum(t.minus, N).shift(N) - state_sum(t.plus, N).shift(-N);
            EXPECT_EQ(lhs, qmq * state_sum(t.zero, N)) << t.name;
        }
}

TEST(Link, SkeinTripleShapes) {
    for (const auto& t : skein_triples()) {
        EXPECT_EQ(t.plus.n_plus() - 1, t.minus.n_plus()) << t.name;
        EXPECT_EQ(t.zero.crossings.size() + 1, t.plus.crossings.size()) << t.name;
    }
    const auto ts = skein_triples();
    const auto& tre = ts[1];
    EXPECT_EQ(tre.name, "trefoil");
    EXPECT_EQ(state_sum(tre.minus, 3), qint(3));                                  // unknot
    EXPECT_EQ(state_sum(tre.zero, 3), state_sum(parse_pd("X[2,4,1,3],X[4,2,3,1]"), 3));  // positive Hopf
}

TEST(Link, SkeinMismatchFails) {
    const auto ts = skein_triples();
    const SkeinReport r = skein_check(ts[1].plus, ts[1].plus, ts[1].zero, 3);
    EXPECT_FALSE(r.pass);
    EXPECT_NE(r.lhs, r.rhs);
}

TEST(Link, Reidemeister) {
    for (int N = 2; N <= 3; ++N)
        for (const auto& id : reidemeister_pairs()) {
            const auto r = verify_reidemeister(id, N);
            EXPECT_TRUE(r.pass) << id << " N=" << N;
            EXPECT_EQ(r.before, r.after);
        }
    EXPECT_THROW(verify_reidemeister("R4", 2), std::domain_error);
}

TEST(Link, DiagramOperations) {
    const LinkDiagram t = parse_pd("X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]");
    const LinkDiagram m = mirror(t);
    EXPECT_EQ(m.n_minus(), t.n_plus());
    const LinkDiagram c = change_crossing(t, 0);
    EXPECT_EQ(c.n_plus(), 2);
    EXPECT_EQ(c.n_minus(), 1);
    EXPECT_EQ(smooth_crossing(t, 0).components(), 2);
    // a two-strand closure of sigma_1^3 is a trefoil
    EXPECT_EQ(state_sum(braid_closure({1, 1, 1}, 2), 3), state_sum(t, 3));
    EXPECT_EQ(braid_closure({}, 3).components(), 3);
}

TEST(Link, ParallelStateSumIsDeterministic) {
    const LinkDiagram d = parse_pd("X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]");
    StateSumOptions one, four;
    four.jobs = 4;
    for (int N = 2; N <= 4; ++N) EXPECT_EQ(state_sum(d, N, one), state_sum(d, N, four));
}
