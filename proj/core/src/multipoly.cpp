#include "webfoam/multipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace webfoam {

int Ring::index(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw std::domain_error("unknown variable " + name);
    return static_cast<int>(it - names.begin());
}

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights) {
    if (names.size() != weights.size()) throw std::domain_error("ring: names/weights size mismatch");
    for (int w : weights)
        if (w <= 0 || w % 2 != 0) throw std::domain_error("ring: weights must be positive and even");
    auto r = std::make_shared<Ring>();
    r->names = std::move(names);
    r->weights = std::move(weights);
    return r;
}

RingPtr make_ring(std::vector<std::string> names) {
    std::vector<int> w(names.size(), 2);
    return make_ring(std::move(names), std::move(w));
}

MultiPoly MultiPoly::constant(RingPtr ring, const mpq_class& c) {
    Exponents z(ring->size(), 0);
    MultiPoly p(std::move(ring));
    p.add_term(z, c);
    return p;
}

MultiPoly MultiPoly::var(RingPtr ring, int i) {
    Exponents e(ring->size(), 0);
    e.at(i) = 1;
    MultiPoly p(std::move(ring));
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::var(RingPtr ring, const std::string& name) {
    int i = ring->index(name);
    return var(std::move(ring), i);
}

MultiPoly MultiPoly::monomial(RingPtr ring, Exponents e, const mpq_class& c) {
    if (e.size() != ring->size()) throw std::domain_error("monomial: arity mismatch");
    MultiPoly p(std::move(ring));
    p.add_term(e, c);
    return p;
}

mpq_class MultiPoly::coeff(const Exponents& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? mpq_class(0) : it->second;
}

int MultiPoly::weighted_degree(const Exponents& e) const {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * ring_->weights[i];
    return d;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, weighted_degree(e));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (t_.empty()) return true;
    int d = weighted_degree(t_.begin()->first);
    return std::all_of(t_.begin(), t_.end(),
                       [&](const auto& kv) { return weighted_degree(kv.first) == d; });
}

void MultiPoly::add_term(const Exponents& e, const mpq_class& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(e, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) t_.erase(it);
}

static void adopt_ring(RingPtr& mine, const RingPtr& other) {
    if (!mine) {
        mine = other;
        return;
    }
    if (other && mine != other && mine->names != other->names)
        throw std::domain_error("polynomials over different rings");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    adopt_ring(ring_, o.ring_);
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    adopt_ring(ring_, o.ring_);
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const { return scale(-1); }

MultiPoly MultiPoly::scale(const mpq_class& c) const {
    MultiPoly r(ring_);
    if (c == 0) return r;
    for (const auto& [e, v] : t_) r.t_.emplace_hint(r.t_.end(), e, v * c);
    return r;
}

MultiPoly MultiPoly::pow(int k) const {
    if (k < 0) throw std::domain_error("negative power");
    MultiPoly r = constant(ring_, 1), b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    RingPtr r = a.ring();
    adopt_ring(r, b.ring());
    MultiPoly out(r);
    Exponents e;
    for (const auto& [e1, c1] : a.terms()) {
        for (const auto& [e2, c2] : b.terms()) {
            e = e1;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            out.add_term(e, c1 * c2);
        }
    }
    return out;
}

std::string MultiPoly::str() const {
    if (t_.empty()) return "0";
    std::vector<std::pair<Exponents, mpq_class>> v(t_.begin(), t_.end());
    // graded-lex, largest first
    std::stable_sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
        int da = weighted_degree(a.first), db = weighted_degree(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : v) {
        mpq_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (mag != 1 || unit) {
            os << mag.get_str();
            if (!unit) os << "*";
        }
        bool sep = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (sep) os << "*";
            os << ring_->names[i];
            if (e[i] != 1) os << "^" << e[i];
            sep = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

static bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw std::domain_error("exact_divide: zero divisor");
    RingPtr r = f.ring() ? f.ring() : g.ring();
    MultiPoly rem = f, quo(r);
    const auto& [lg, cg] = *g.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& [lf, cf] = *rem.terms().rbegin();
        // Lex leading term of the remainder must be divisible, otherwise it would
        // stay in the remainder forever.
        if (!divides(lg, lf)) throw std::domain_error("exact_divide: not divisible");
        Exponents e = lf;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] -= lg[i];
        MultiPoly step = MultiPoly::monomial(r, e, cf / cg);
        quo += step;
        rem -= step * g;
    }
    return quo;
}

MultiPoly difference_quotient(const MultiPoly& f, int a, int b) {
    if (a == b) throw std::domain_error("difference_quotient: same variable twice");
    MultiPoly out(f.ring());
    for (const auto& [e, c] : f.terms()) {
        const int ka = e[a];
        if (ka == 0) continue;
        Exponents m = e;
        // a^ka b^kb -> sum_{i<ka} a^i b^{ka-1-i+kb}
        for (int i = 0; i < ka; ++i) {
            m[a] = i;
            m[b] = e[b] + ka - 1 - i;
            out.add_term(m, c);
        }
    }
    return out;
}

MultiPoly difference_quotient(const MultiPoly& f, const std::string& a, const std::string& b) {
    return difference_quotient(f, f.ring()->index(a), f.ring()->index(b));
}

MultiPoly partial_derivative(const MultiPoly& f, int v) {
    MultiPoly out(f.ring());
    for (const auto& [e, c] : f.terms()) {
        if (e[v] == 0) continue;
        Exponents m = e;
        m[v] -= 1;
        out.add_term(m, c * e[v]);
    }
    return out;
}

MultiPoly partial_derivative(const MultiPoly& f, const std::string& v) {
    return partial_derivative(f, f.ring()->index(v));
}

MultiPoly substitute(const MultiPoly& f, const std::vector<MultiPoly>& images) {
    if (!f.ring() || images.size() != f.ring()->size())
        throw std::domain_error("substitute: one image per variable required");
    RingPtr target = images.empty() ? f.ring() : images.front().ring();
    // powers[i][k] = images[i]^k, filled lazily
    std::vector<std::vector<MultiPoly>> powers(images.size());
    auto power = [&](std::size_t i, int k) -> const MultiPoly& {
        auto& p = powers[i];
        if (p.empty()) p.push_back(MultiPoly::constant(target, 1));
        while (static_cast<int>(p.size()) <= k) p.push_back(p.back() * images[i]);
        return p[k];
    };
    MultiPoly out(target);
    for (const auto& [e, c] : f.terms()) {
        MultiPoly term = MultiPoly::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) term = term * power(i, e[i]);
        out += term;
    }
    return out;
}

MultiPoly substitute(const MultiPoly& f, int v, const MultiPoly& image) {
    std::vector<MultiPoly> imgs;
    imgs.reserve(f.ring()->size());
    for (std::size_t i = 0; i < f.ring()->size(); ++i)
        imgs.push_back(static_cast<int>(i) == v ? image : MultiPoly::var(f.ring(), static_cast<int>(i)));
    return substitute(f, imgs);
}

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::domain_error("determinant: matrix not square");
    if (n == 0 || n > 3) throw std::domain_error("determinant: size must be 1..3");
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    MultiPoly d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
    d -= m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]);
    d += m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return d;
}

}  // namespace webfoam
