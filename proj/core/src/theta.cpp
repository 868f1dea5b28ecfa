// Direct evaluation of the two theta foams from their determinant formulas.
#include "webfoam/foam.hpp"

#include <memory>
#include <mutex>
#include <utility>
#include <stdexcept>

namespace webfoam {

namespace {

// Powers of elementary classes in H*(G_{k,N}), memoized per call site.
class ElementaryPowers {
public:
    explicit ElementaryPowers(const GrassRing& g) : g_(g) {}

    const SchurSum& get(const std::vector<int>& powers) {
        auto it = memo_.find(powers);
        if (it != memo_.end()) return it->second;
        SchurSum r(zero_partition(g_.k()));
        // multiply e_1^{a} e_2^{b} e_3^{c} by vertical strips
        for (std::size_t m = 0; m < powers.size(); ++m) {
            for (int rep = 0; rep < powers[m]; ++rep) {
                SchurSum next(g_.k());
                for (const auto& [p, c] : r.terms())
                    next += mult_elementary(p, static_cast<int>(m) + 1).scale(c);
                r = g_.reduce(next);
            }
        }
        return memo_.emplace(powers, std::move(r)).first->second;
    }

private:
    const GrassRing& g_;
    std::map<std::vector<int>, SchurSum> memo_;
};

struct Table112 {
    // (x exponent, y exponent, G2 class) -> coefficient
    std::map<std::tuple<int, int, Partition>, mpq_class> coef;
};

struct Table123 {
    std::map<std::tuple<int, Partition, Partition>, mpq_class> coef;
};

MultiPoly embed(const MultiPoly& f, const RingPtr& R, const std::vector<MultiPoly>& images) {
    (void)R;
    return substitute(f, images);
}

std::unique_ptr<Table112> build112(int N) {
    RingPtr R = make_ring({"x", "y", "s", "t", "u", "v"}, {2, 2, 2, 4, 2, 4});
    auto V = [&](const char* n) { return MultiPoly::var(R, n); };
    MultiPoly x = V("x"), y = V("y"), s = V("s"), t = V("t"), u = V("u"), v = V("v");
    Potential W = potential(N, 2);
    MultiPoly W1 = partial_derivative(W.poly, 0), W2 = partial_derivative(W.poly, 1);

    const int iu = R->index("u"), is = R->index("s"), iv = R->index("v"), it = R->index("t");
    // (F(x+y) - F(s)) / (x+y-s) with F(z) = W'_i(z, xy)
    auto first = [&](const MultiPoly& Wi) {
        MultiPoly F = embed(Wi, R, {u, x * y});
        return substitute(difference_quotient(F, iu, is), iu, x + y);
    };
    // (G(xy) - G(t)) / (xy - t) with G(z) = W'_i(s, z)
    auto second = [&](const MultiPoly& Wi) {
        MultiPoly G = embed(Wi, R, {s, v});
        return substitute(difference_quotient(G, iv, it), iv, x * y);
    };
    MultiPoly alpha = first(W1), beta = first(W2), gamma = second(W1), delta = second(W2);
    MultiPoly KL = (y - x) * determinant({{alpha, beta}, {gamma, delta}});
    if (!KL.is_homogeneous() || KL.degree() != 4 * N - 6)
        throw std::logic_error("theta112: determinant has the wrong degree");

    GrassRing g2(N, 2);
    ElementaryPowers pw(g2);
    auto tab = std::make_unique<Table112>();
    for (const auto& [e, c] : KL.terms()) {
        if (e[0] >= N || e[1] >= N) continue;
        for (const auto& [p, d] : pw.get({e[2], e[3]}).terms()) {
            auto& slot = tab->coef[{e[0], e[1], p}];
            slot += c * d;
        }
    }
    return tab;
}

std::unique_ptr<Table123> build123(int N) {
    RingPtr R = make_ring({"x", "s", "t", "p", "q", "r", "u", "v", "w"}, {2, 2, 4, 2, 4, 6, 2, 4, 6});
    auto V = [&](const char* n) { return MultiPoly::var(R, n); };
    MultiPoly x = V("x"), s = V("s"), t = V("t"), p = V("p"), q = V("q"), r = V("r");
    MultiPoly u = V("u"), v = V("v"), w = V("w");
    Potential W = potential(N, 3);
    const int iu = R->index("u"), iv = R->index("v"), iw = R->index("w");
    const int ip = R->index("p"), iq = R->index("q"), ir = R->index("r");

    std::vector<std::vector<MultiPoly>> a(3);
    for (int i = 0; i < 3; ++i) {
        MultiPoly Wi = partial_derivative(W.poly, i);
        MultiPoly F = embed(Wi, R, {u, x * s + t, x * t});
        a[0].push_back(substitute(difference_quotient(F, iu, ip), iu, x + s));
        MultiPoly G = embed(Wi, R, {p, v, x * t});
        a[1].push_back(substitute(difference_quotient(G, iv, iq), iv, x * s + t));
        MultiPoly H = embed(Wi, R, {p, q, w});
        a[2].push_back(substitute(difference_quotient(H, iw, ir), iw, x * t));
    }
    // Rows in the order (q, p, r): the literal order (p, q, r) puts -(N+1)^3 on the top
    // class in the constant term, against the normalization the closed values assume.
    std::swap(a[0], a[1]);
    MultiPoly KL = -((t - s * x + x * x) * determinant(a));
    if (!KL.is_homogeneous() || KL.degree() != 6 * N - 14)
        throw std::logic_error("theta123: determinant has the wrong degree");

    GrassRing g2(N, 2), g3(N, 3);
    ElementaryPowers pw2(g2), pw3(g3);
    auto tab = std::make_unique<Table123>();
    for (const auto& [e, c] : KL.terms()) {
        if (e[0] >= N) continue;
        const SchurSum& A = pw2.get({e[1], e[2]});
        if (A.is_zero()) continue;
        const SchurSum& B = pw3.get({e[3], e[4], e[5]});
        for (const auto& [l2, c2] : A.terms())
            for (const auto& [l3, c3] : B.terms()) tab->coef[{e[0], l2, l3}] += c * c2 * c3;
    }
    return tab;
}

template <class T>
const T& cached(int N, std::map<int, std::unique_ptr<T>>& cache, std::mutex& mu,
                std::unique_ptr<T> (*build)(int)) {
    std::lock_guard lk(mu);
    auto it = cache.find(N);
    if (it == cache.end()) it = cache.emplace(N, build(N)).first;
    return *it->second;
}

std::mutex mu112, mu123;
std::map<int, std::unique_ptr<Table112>> cache112;
std::map<int, std::unique_ptr<Table123>> cache123;

mpq_class lookup(const std::map<std::tuple<int, int, Partition>, mpq_class>& m, int a, int b, const Partition& p) {
    auto it = m.find({a, b, p});
    return it == m.end() ? mpq_class(0) : it->second;
}

}  // namespace

mpq_class theta112_direct(int N, int d1, int d2, const Partition& dec2) {
    if (N < 2) throw std::domain_error("theta112: N >= 2");
    if (dec2.length() != 2 || !dec2.valid()) throw std::domain_error("theta112: bad double-facet decoration");
    GrassRing g2(N, 2);
    if (d1 < 0 || d2 < 0 || d1 >= N || d2 >= N || !g2.in_box(dec2)) return 0;
    const Table112& tab = cached(N, cache112, mu112, &build112);
    // epsilon(pi_lambda pi_mu) is nonzero only for the complementary pair
    mpq_class c = lookup(tab.coef, N - 1 - d1, N - 1 - d2, g2.complement(dec2));
    mpq_class norm = (N + 1) * (N + 1);
    return c * g2.sign() / norm;
}

mpq_class theta123_direct(int N, const Partition& dec3, const Partition& dec2, int d1) {
    if (N < 4) throw std::domain_error("theta123: N >= 4 required");
    if (dec3.length() != 3 || !dec3.valid() || dec2.length() != 2 || !dec2.valid())
        throw std::domain_error("theta123: bad decoration");
    GrassRing g2(N, 2), g3(N, 3);
    if (d1 < 0 || d1 >= N || !g2.in_box(dec2) || !g3.in_box(dec3)) return 0;
    const Table123& tab = cached(N, cache123, mu123, &build123);
    auto it = tab.coef.find({N - 1 - d1, g2.complement(dec2), g3.complement(dec3)});
    if (it == tab.coef.end()) return 0;
    mpq_class norm = (N + 1) * (N + 1) * (N + 1);
    return it->second * g2.sign() * g3.sign() / norm;
}

}  // namespace webfoam
