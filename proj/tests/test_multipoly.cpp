#include "webfoam/multipoly.hpp"
#include "webfoam/symmetric.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

using namespace webfoam;

namespace {

struct XY {
    RingPtr r = make_ring({"x", "y", "s", "t", "u"}, {2, 2, 2, 4, 2});
    MultiPoly x = MultiPoly::var(r, "x"), y = MultiPoly::var(r, "y");
    MultiPoly s = MultiPoly::var(r, "s"), t = MultiPoly::var(r, "t"), u = MultiPoly::var(r, "u");
    MultiPoly c(long v) const { return MultiPoly::constant(r, v); }
};

// Random homogeneous polynomial of weighted degree 2*d in x, y, s, t.
MultiPoly random_homogeneous(const XY& v, int d, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    MultiPoly p(v.r);
    for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b)
            for (int tt = 0; a + b + 2 * tt <= d; ++tt) {
                const int ss = d - a - b - 2 * tt;
                p.add_term({a, b, ss, tt, 0}, coef(rng));
            }
    return p;
}

}  // namespace

TEST(MultiPoly, ExactDivideExamples) {
    XY v;
    EXPECT_EQ(exact_divide(v.x * v.x - v.y * v.y, v.x - v.y), v.x + v.y);
    const MultiPoly f = v.x.pow(3) * v.s - v.t + v.c(2);
    EXPECT_EQ(exact_divide(f, v.c(1)), f);
    EXPECT_THROW(exact_divide(v.x * v.x + v.y, v.x - v.y), std::domain_error);
    EXPECT_THROW(exact_divide(v.x, MultiPoly(v.r)), std::domain_error);
}

TEST(MultiPoly, DifferenceQuotientOfPotentialIsExact) {
    // (W(x+y, xy) - W(s, xy)) / (x+y-s) for W = s^3 - 3st.
    XY v;
    const MultiPoly xy = v.x * v.y, e1 = v.x + v.y;
    auto W = [&](const MultiPoly& a, const MultiPoly& b) { return a.pow(3) - v.c(3) * a * b; };
    const MultiPoly num = W(e1, xy) - W(v.s, xy);
    const MultiPoly q = exact_divide(num, e1 - v.s);
    EXPECT_EQ(q * (e1 - v.s), num);
}

TEST(MultiPoly, DifferenceQuotientExamples) {
    XY v;
    EXPECT_EQ(difference_quotient(v.x.pow(3), "x", "y"), v.x * v.x + v.x * v.y + v.y * v.y);
    EXPECT_EQ(difference_quotient(v.x, "x", "y"), v.c(1));
    EXPECT_EQ(difference_quotient(v.s * v.s * v.t, "s", "u"), (v.s + v.u) * v.t);
    EXPECT_THROW(difference_quotient(v.x, "x", "x"), std::domain_error);
}

TEST(MultiPoly, DerivativeDeterminantSubstitute) {
    XY v;
    EXPECT_EQ(determinant({{v.x, v.c(1)}, {v.y, v.c(1)}}), v.x - v.y);
    EXPECT_EQ(partial_derivative(v.s.pow(3) - v.c(3) * v.s * v.t, "t"), v.c(-3) * v.s);
    EXPECT_THROW(determinant({{v.x, v.y}}), std::domain_error);

    const Potential W = potential(2, 2);
    const RingPtr xr = make_ring({"x", "y"});
    const MultiPoly x = MultiPoly::var(xr, 0), y = MultiPoly::var(xr, 1);
    EXPECT_EQ(substitute(W.poly, {x + y, x * y}), x.pow(3) + y.pow(3));
}

TEST(MultiPoly, Determinant3x3ByPermutations) {
    XY v;
    const std::vector<std::vector<MultiPoly>> m{
        {v.x, v.y, v.c(2)}, {v.s, v.x * v.y, v.c(-1)}, {v.c(1), v.t, v.x + v.s}};
    MultiPoly expect(v.r);
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    const int sign[6] = {1, -1, -1, 1, 1, -1};
    for (int p = 0; p < 6; ++p)
        expect += (m[0][perms[p][0]] * m[1][perms[p][1]] * m[2][perms[p][2]]).scale(sign[p]);
    EXPECT_EQ(determinant(m), expect);
}

TEST(MultiPoly, RandomHomogeneousProperties) {
    XY v;
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const MultiPoly f = random_homogeneous(v, 1 + trial % 3, rng);
        const MultiPoly g = random_homogeneous(v, 1 + trial % 2, rng);
        if (f.is_zero() || g.is_zero()) continue;
        const MultiPoly fg = f * g;
        EXPECT_TRUE(fg.is_homogeneous());
        EXPECT_EQ(fg.degree(), f.degree() + g.degree());
        EXPECT_EQ(exact_divide(fg, g), f);

        const MultiPoly dq = difference_quotient(f, "x", "y");
        if (!dq.is_zero()) {
            EXPECT_TRUE(dq.is_homogeneous());
            EXPECT_EQ(dq.degree(), f.degree() - 2);
        }
        EXPECT_EQ(dq * (v.x - v.y), f - substitute(f, 0, v.y));

        // Schwarz
        for (const char* a : {"x", "s", "t"})
            for (const char* b : {"y", "t"})
                EXPECT_EQ(partial_derivative(partial_derivative(f, a), b),
                          partial_derivative(partial_derivative(f, b), a));
    }
}

TEST(MultiPoly, ZeroPolynomial) {
    XY v;
    const MultiPoly z(v.r);
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), -1);
    EXPECT_TRUE((v.x - v.x).is_zero());
    EXPECT_EQ(z * v.x, z);
}
