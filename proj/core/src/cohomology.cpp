#include "webfoam/cohomology.hpp"

#include <stdexcept>

namespace webfoam {

GrassRing::GrassRing(int N, int k) : N_(N), k_(k) {
    if (k < 1 || k > 3) throw std::domain_error("GrassRing: k must be 1..3");
    if (N < k) throw std::domain_error("GrassRing: N must be at least k");
    const int w = N - k;
    if (k == 1)
        for (int a = 0; a <= w; ++a) basis_.push_back(Partition{a});
    else if (k == 2)
        for (int a = 0; a <= w; ++a)
            for (int b = 0; b <= a; ++b) basis_.push_back(Partition{a, b});
    else
        for (int a = 0; a <= w; ++a)
            for (int b = 0; b <= a; ++b)
                for (int c = 0; c <= b; ++c) basis_.push_back(Partition{a, b, c});
}

bool GrassRing::in_box(const Partition& p) const {
    return p.length() == k_ && p.valid() && p[0] <= N_ - k_;
}

Partition GrassRing::top() const { return Partition(std::vector<int>(k_, N_ - k_)); }

SchurSum GrassRing::reduce(const SchurSum& v) const {
    if (v.k() && v.k() != k_) throw std::domain_error("reduce: variable count mismatch");
    SchurSum out(k_);
    for (const auto& [p, c] : v.terms())
        if (p[0] <= N_ - k_) out.add(p, c);
    return out;
}

SchurSum GrassRing::reduce(const MultiPoly& v) const {
    if (v.ring() && static_cast<int>(v.ring()->size()) != k_)
        throw std::domain_error("reduce: variable count mismatch");
    return reduce(to_schur_basis(v, k_));
}

SchurSum GrassRing::mul(const SchurSum& a, const SchurSum& b) const {
    // Truncation is a ring map, so reducing factors first only saves work.
    return reduce(reduce(a) * reduce(b));
}

mpq_class GrassRing::trace(const SchurSum& v) const { return reduce(v).coeff(top()) * sign(); }

Partition GrassRing::complement(const Partition& lambda) const {
    if (!in_box(lambda)) throw std::domain_error("complement: partition outside the box");
    std::vector<int> v(k_);
    for (int i = 0; i < k_; ++i) v[i] = N_ - k_ - lambda[k_ - 1 - i];
    return Partition(v);
}

SchurSum GrassRing::dual(const Partition& lambda) const {
    return SchurSum(complement(lambda), sign());
}

LaurentPoly GrassRing::qdim() const {
    LaurentPoly r;
    for (const auto& p : basis_) r += LaurentPoly::monomial(2 * p.size());
    return r;
}

long flag_dim(const std::vector<int>& d) {
    if (d.empty()) throw std::domain_error("flag_dim: empty list");
    if (d.front() < 1) throw std::domain_error("flag_dim: dimensions start at 1");
    for (std::size_t i = 1; i < d.size(); ++i)
        if (d[i] <= d[i - 1]) throw std::domain_error("flag_dim: list must be increasing");
    const long N = d.back();
    long r = N * N - static_cast<long>(d.front()) * d.front();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) r -= static_cast<long>(d[i + 1] - d[i]) * (d[i + 1] - d[i]);
    return r;
}

}  // namespace webfoam
