#include "webfoam/cohomology.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace webfoam {

namespace {

struct Ordered {
    const Ring* ring;

    int wdeg(const Exponents& e) const {
        int d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * ring->weights[i];
        return d;
    }
    bool less(const Exponents& a, const Exponents& b) const {
        int da = wdeg(a), db = wdeg(b);
        return da != db ? da < db : a < b;
    }
    const std::pair<const Exponents, mpq_class>& lead(const MultiPoly& p) const {
        auto best = p.terms().begin();
        for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
            if (less(best->first, it->first)) best = it;
        return *best;
    }
};

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Exponents minus(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

MultiPoly full_reduce(const Ordered& ord, MultiPoly p, const std::vector<MultiPoly>& G) {
    const RingPtr& R = p.ring();
    MultiPoly rem(R);
    while (!p.is_zero()) {
        auto [lt, lc] = ord.lead(p);
        bool hit = false;
        for (const auto& g : G) {
            const auto& [gt, gc] = ord.lead(g);
            if (!divides(gt, lt)) continue;
            p -= MultiPoly::monomial(R, minus(lt, gt), lc / gc) * g;
            hit = true;
            break;
        }
        if (!hit) {
            rem.add_term(lt, lc);
            p -= MultiPoly::monomial(R, lt, lc);
        }
    }
    return rem;
}

std::vector<MultiPoly> buchberger(const Ordered& ord, std::vector<MultiPoly> G) {
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) pairs.emplace_back(j, i);
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const auto& [ti, ci] = ord.lead(G[i]);
        const auto& [tj, cj] = ord.lead(G[j]);
        Exponents L = lcm(ti, tj);
        const RingPtr& R = G[i].ring();
        MultiPoly s = MultiPoly::monomial(R, minus(L, ti), 1 / ci) * G[i] -
                      MultiPoly::monomial(R, minus(L, tj), 1 / cj) * G[j];
        MultiPoly r = full_reduce(ord, s, G);
        if (r.is_zero()) continue;
        G.push_back(r);
        for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
    }
    // minimal, interreduced, monic
    std::vector<MultiPoly> min;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& ti = ord.lead(G[i]).first;
            const auto& tj = ord.lead(G[j]).first;
            if (divides(tj, ti) && (tj != ti || j < i)) redundant = true;
        }
        if (!redundant) min.push_back(G[i]);
    }
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < min.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < min.size(); ++j)
            if (j != i) others.push_back(min[j]);
        const auto& [t, c] = ord.lead(min[i]);
        MultiPoly tail = min[i] - MultiPoly::monomial(min[i].ring(), t, c);
        MultiPoly g = MultiPoly::monomial(min[i].ring(), t, c) + full_reduce(ord, tail, others);
        out.push_back(g.scale(1 / c));
    }
    return out;
}

}  // namespace

FlagRing::FlagRing(Kind kind, int N) : kind_(kind), N_(N) {
    if (kind == Kind::Fl12) {
        if (N < 2) throw std::domain_error("Fl(1,2,N) needs N >= 2");
        ring_ = schur_ring(2);
        gens_ = {schur(Partition{N - 1, 0}, 2), schur(Partition{N, 0}, 2)};
    } else {
        if (N < 3) throw std::domain_error("Fl(2,3,N) needs N >= 3");
        ring_ = make_ring({"s", "t", "x3"}, {2, 4, 2});
        MultiPoly s = MultiPoly::var(ring_, 0), t = MultiPoly::var(ring_, 1), x3 = MultiPoly::var(ring_, 2);
        // h_j(x1,x2) via h_j = s h_{j-1} - t h_{j-2}
        std::vector<MultiPoly> h{MultiPoly::constant(ring_, 1), s};
        for (int j = 2; j <= N; ++j) h.push_back(s * h[j - 1] - t * h[j - 2]);
        for (int m = N - 2; m <= N; ++m) {
            MultiPoly g(ring_);
            for (int c = 0; c <= m; ++c) g += h[m - c] * x3.pow(c);
            gens_.push_back(g);
        }
    }
    gb_ = buchberger(Ordered{ring_.get()}, gens_);
}

MultiPoly FlagRing::normal_form(const MultiPoly& p) const {
    if (p.is_zero()) return MultiPoly(ring_);
    if (!p.ring() || p.ring()->names != ring_->names) throw std::domain_error("flag_reduce: wrong variables");
    MultiPoly q(ring_);
    q += p;
    return full_reduce(Ordered{ring_.get()}, q, gb_);
}

long FlagRing::dimension() const {
    Ordered ord{ring_.get()};
    std::vector<Exponents> leads;
    for (const auto& g : gb_) leads.push_back(ord.lead(g).first);
    auto standard = [&](const Exponents& e) {
        return std::none_of(leads.begin(), leads.end(), [&](const Exponents& l) { return divides(l, e); });
    };
    std::set<Exponents> seen;
    std::deque<Exponents> todo{Exponents(ring_->size(), 0)};
    seen.insert(todo.front());
    while (!todo.empty()) {
        Exponents e = todo.front();
        todo.pop_front();
        for (std::size_t i = 0; i < e.size(); ++i) {
            Exponents f = e;
            ++f[i];
            if (standard(f) && seen.insert(f).second) todo.push_back(f);
            if (seen.size() > 100000) throw std::logic_error("flag ring quotient is not finite dimensional");
        }
    }
    return static_cast<long>(seen.size());
}

MultiPoly flag_reduce(const FlagRing& f, const MultiPoly& p) { return f.normal_form(p); }

}  // namespace webfoam
