#include "oracles.hpp"
#include "webfoam/laurent.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

using namespace webfoam;

TEST(Laurent, QintExamples) {
    EXPECT_EQ(qint(1).str(), "1");
    EXPECT_EQ(qint(2).str(), "q^-1 + q");
    EXPECT_EQ(qint(3).str(), "q^-2 + 1 + q^2");
    EXPECT_THROW(qint(0), std::domain_error);
    EXPECT_THROW(qint(-2), std::domain_error);
}

TEST(Laurent, QintMatchesDefiningQuotient) {
    const LaurentPoly den = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
    for (int n = 1; n <= 12; ++n) {
        EXPECT_EQ(qint(n), oracle::qint(n));
        EXPECT_EQ(qint(n) * den, LaurentPoly::monomial(n) - LaurentPoly::monomial(-n));
        EXPECT_EQ(qint(n).eval_at_one(), n);
    }
}

TEST(Laurent, QbinomExamples) {
    EXPECT_EQ(qbinom(5, 0), LaurentPoly(1));
    EXPECT_EQ(qbinom(5, 1), qint(5));
    EXPECT_EQ(qbinom(4, 2).str(), "q^-4 + q^-2 + 2 + q^2 + q^4");
    EXPECT_THROW(qbinom(2, 3), std::domain_error);
    EXPECT_THROW(qbinom(-1, 0), std::domain_error);
}

TEST(Laurent, QbinomAgainstSubsetCount) {
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k) {
            EXPECT_EQ(qbinom(n, k), oracle::qbinom(n, k)) << n << " " << k;
            EXPECT_EQ(qbinom(n, k).eval_at_one(), binomial(n, k));
            EXPECT_EQ(qbinom(n, k), qbinom(n, k).invert_q());
        }
}

TEST(Laurent, QbinomSymmetryAndPascal) {
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            EXPECT_EQ(qbinom(n, k), qbinom(n, n - k));
            if (k == 0 || k == n) continue;
            const LaurentPoly rhs = qbinom(n - 1, k).shift(k) + qbinom(n - 1, k - 1).shift(-(n - k));
            EXPECT_EQ(qbinom(n, k), rhs) << n << " " << k;
        }
}

TEST(Laurent, ShiftedTripleProductStartsAtOne) {
    for (int N = 3; N <= 8; ++N) {
        const LaurentPoly p = (qint(N) * qint(N - 1) * qint(N - 2)).shift(3 * N - 6);
        EXPECT_EQ(p.min_exp(), 0);
        EXPECT_EQ(p.coeff(0), 1);
    }
}

TEST(Laurent, RingOperations) {
    EXPECT_EQ(qint(3).eval_at_one(), 3);
    EXPECT_EQ((qint(2) * qint(2)).str(), "q^-2 + 2 + q^2");
    const LaurentPoly p = qint(4) - LaurentPoly::monomial(7, 3);
    EXPECT_TRUE((p + (-p)).is_zero());
    EXPECT_EQ(LaurentPoly().str(), "0");
    EXPECT_EQ(LaurentPoly::monomial(1, -1).str(), "-q");
    EXPECT_EQ((LaurentPoly::monomial(-1, 2) - 5).str(), "2q^-1 - 5");
}

TEST(Laurent, RandomAlgebraLaws) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> e(-5, 5), c(-4, 4);
    auto sample = [&] {
        LaurentPoly p;
        for (int i = 0; i < 4; ++i) p += LaurentPoly::monomial(e(rng), c(rng));
        return p;
    };
    for (int t = 0; t < 200; ++t) {
        const auto a = sample(), b = sample(), d = sample();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * d, a * (b * d));
        EXPECT_EQ(a * (b + d), a * b + a * d);
        const LaurentPoly ab = a * b;
        for (const auto& [exp, coef] : ab.terms()) EXPECT_NE(coef, 0);
        if (!b.is_zero()) EXPECT_EQ((a * b).exact_div(b), a);
    }
}

TEST(Laurent, InexactDivisionThrows) {
    EXPECT_THROW(qint(3).exact_div(qint(2)), std::logic_error);
}
