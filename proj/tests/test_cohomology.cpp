#include "oracles.hpp"
#include "webfoam/cohomology.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

using namespace webfoam;

TEST(Cohomology, BasisSize) {
    for (int N = 2; N <= 8; ++N)
        for (int k = 1; k <= std::min(3, N); ++k) {
            GrassRing g(N, k);
            EXPECT_EQ(static_cast<long>(g.basis().size()), binomial(N, k).get_si());
            for (const auto& p : g.basis()) EXPECT_TRUE(g.in_box(p));
        }
}

TEST(Cohomology, ReduceExamples) {
    GrassRing g23(3, 2), g24(4, 2);
    const SchurSum e1(Partition{1, 0});
    EXPECT_EQ(g23.reduce(e1 * e1), SchurSum(Partition{1, 1}));
    EXPECT_EQ(g24.reduce(e1 * e1), SchurSum(Partition{2, 0}) + SchurSum(Partition{1, 1}));
    const SchurSum v = SchurSum(Partition{2, 1}).scale(3) - e1;
    EXPECT_EQ(g24.reduce(SchurSum(Partition{0, 0}) * v), g24.reduce(v));
    EXPECT_THROW(g24.reduce(SchurSum(Partition{1})), std::domain_error);
}

TEST(Cohomology, TraceSigns) {
    for (int N = 3; N <= 6; ++N) {
        EXPECT_EQ(GrassRing(N, 2).trace(SchurSum(Partition{N - 2, N - 2})), -1);
        EXPECT_EQ(GrassRing(N, 2).trace(SchurSum(Partition{0, 0})), 0);
        EXPECT_EQ(GrassRing(N, 1).trace(SchurSum(Partition{N - 1})), 1);
    }
    for (int N = 4; N <= 6; ++N) EXPECT_EQ(GrassRing(N, 3).trace(SchurSum(Partition{N - 3, N - 3, N - 3})), -1);
}

TEST(Cohomology, DualExamples) {
    EXPECT_EQ(GrassRing(3, 2).dual({1, 0}), SchurSum(Partition{1, 0}, -1));
    for (int N = 2; N <= 6; ++N) {
        for (int i = 0; i < N; ++i) EXPECT_EQ(GrassRing(N, 1).dual({i}), SchurSum(Partition{N - 1 - i}));
        EXPECT_EQ(GrassRing(N, 2).dual({N - 2, N - 2}), SchurSum(Partition{0, 0}, -1));
    }
    EXPECT_THROW(GrassRing(3, 2).dual({2, 0}), std::domain_error);
}

TEST(Cohomology, DualityExhaustive) {
    for (int N = 2; N <= 6; ++N)
        for (int k = 1; k <= std::min(3, N); ++k) {
            GrassRing g(N, k);
            for (const auto& mu : g.basis())
                for (const auto& lam : g.basis())
                    EXPECT_EQ(g.trace(g.reduce(SchurSum(mu) * g.dual(lam))), mu == lam ? 1 : 0)
                        << N << " " << mu.str() << " " << lam.str();
        }
}

TEST(Cohomology, ReduceIsHomomorphism) {
    std::mt19937 rng(3);
    for (int N = 2; N <= 5; ++N)
        for (int k = 1; k <= std::min(3, N); ++k) {
            GrassRing g(N, k);
            auto sample = [&] {
                SchurSum s(k);
                std::uniform_int_distribution<int> part(0, N), coef(-2, 2);
                for (int t = 0; t < 3; ++t) {
                    std::vector<int> p(k);
                    for (auto& v : p) v = part(rng);
                    std::sort(p.rbegin(), p.rend());
                    s.add(Partition(p), coef(rng));
                }
                return s;
            };
            for (int t = 0; t < 10; ++t) {
                const auto a = sample(), b = sample();
                EXPECT_EQ(g.reduce(a * b), g.reduce(g.reduce(a) * g.reduce(b)));
                EXPECT_EQ(g.reduce(g.reduce(a)), g.reduce(a));
            }
        }
}

TEST(Cohomology, DotConversionVanishing) {
    for (int N = 2; N <= 6; ++N) {
        for (int i = N; i <= N + 2; ++i) EXPECT_TRUE(GrassRing(N, 1).reduce(SchurSum(Partition{i})).is_zero());
        for (int a = N - 1; a <= N + 1; ++a)
            for (int b = 0; b <= a; ++b) EXPECT_TRUE(GrassRing(N, 2).reduce(SchurSum(Partition{a, b})).is_zero());
        if (N >= 3)
            for (int p = N - 2; p <= N; ++p) EXPECT_TRUE(GrassRing(N, 3).reduce(SchurSum(Partition{p, 0, 0})).is_zero());
    }
}

TEST(Cohomology, Qdim) {
    EXPECT_EQ(GrassRing(2, 1).qdim().str(), "1 + q^2");
    EXPECT_EQ(GrassRing(3, 2).qdim().str(), "1 + q^2 + q^4");
    for (int N = 2; N <= 8; ++N)
        for (int k = 1; k <= std::min(3, N); ++k)
            EXPECT_EQ(GrassRing(N, k).qdim(), oracle::qbinom(N, k).shift(k * (N - k)));
}

TEST(Cohomology, FlagRing) {
    FlagRing f(FlagRing::Kind::Fl12, 3);
    const RingPtr r = f.ring();
    const MultiPoly x1 = MultiPoly::var(r, 0), x2 = MultiPoly::var(r, 1);
    const MultiPoly pi20 = x1 * x1 + x1 * x2 + x2 * x2;
    EXPECT_TRUE(flag_reduce(f, pi20).is_zero());
    EXPECT_TRUE(flag_reduce(f, MultiPoly(r)).is_zero());
    const MultiPoly nf = flag_reduce(f, x1 * x1);
    EXPECT_EQ(flag_reduce(f, nf), nf);
    EXPECT_TRUE(flag_reduce(f, x1 * x1 - nf).is_zero());
    for (const auto& g : f.generators()) EXPECT_TRUE(flag_reduce(f, g).is_zero());
}

TEST(Cohomology, FlagRingDimensions) {
    // Fl(1,2,N) has total Betti number N(N-1), Fl(2,3,N) has N(N-1)(N-2)/2.
    for (int N = 3; N <= 6; ++N) {
        EXPECT_EQ(FlagRing(FlagRing::Kind::Fl12, N).dimension(), N * (N - 1));
        if (N >= 4) EXPECT_EQ(FlagRing(FlagRing::Kind::Fl23, N).dimension(), N * (N - 1) * (N - 2) / 2);
    }
}

TEST(Cohomology, FlagDim) {
    EXPECT_EQ(flag_dim({1, 2}), 2);
    for (int N = 2; N <= 8; ++N) {
        EXPECT_EQ(flag_dim({N}), 0);
        for (int k = 1; k < N; ++k) EXPECT_EQ(flag_dim({k, N}), 2 * k * (N - k));
        if (N >= 3) EXPECT_EQ(flag_dim({1, 2, N}), N * N - (N - 2) * (N - 2) - 2);
    }
    EXPECT_THROW(flag_dim({2, 2, 3}), std::domain_error);
}
