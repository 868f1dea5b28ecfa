#include "webfoam/laurent.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace webfoam {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) t_.emplace(0, mpz_class(c));
}

LaurentPoly LaurentPoly::monomial(int e, const mpz_class& c) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(int e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(e, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) t_.erase(it);
}

mpz_class LaurentPoly::coeff(int e) const {
    auto it = t_.find(e);
    return it == t_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::min_exp() const {
    if (t_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return t_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (t_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return t_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    LaurentPoly r;
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_) r.add_term(e1 + e2, c1 * c2);
    t_ = std::move(r.t_);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::scale(const mpz_class& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, v] : t_) r.t_.emplace(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::shift(int s) const {
    LaurentPoly r;
    for (const auto& [e, c] : t_) r.t_.emplace(e + s, c);
    return r;
}

LaurentPoly LaurentPoly::invert_q() const {
    LaurentPoly r;
    for (const auto& [e, c] : t_) r.t_.emplace(-e, c);
    return r;
}

mpz_class LaurentPoly::eval_at_one() const {
    mpz_class s = 0;
    for (const auto& [e, c] : t_) s += c;
    return s;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
    LaurentPoly rem = *this, quo;
    const int dlo = d.min_exp();
    const mpz_class& lead = d.t_.begin()->second;
    // Cancel lowest terms first; the loop is bounded by the span of the dividend.
    while (!rem.is_zero()) {
        const int e = rem.min_exp();
        const mpz_class& c = rem.t_.begin()->second;
        if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t()) || rem.max_exp() < e + (d.max_exp() - dlo))
            throw std::logic_error("inexact Laurent division");
        mpz_class qc = c / lead;
        LaurentPoly step = monomial(e - dlo, qc);
        quo += step;
        rem -= step * d;
    }
    return quo;
}

std::string LaurentPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str();
        os << "q";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

LaurentPoly qint(int n) {
    if (n <= 0) throw std::domain_error("qint: n must be positive");
    LaurentPoly r;
    for (int e = 1 - n; e <= n - 1; e += 2) r += LaurentPoly::monomial(e);
    return r;
}

LaurentPoly qbinom(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::domain_error("qbinom: need 0 <= k <= n");
    LaurentPoly num(1), den(1);
    for (int i = 1; i <= k; ++i) {
        num *= qint(n - k + i);
        den *= qint(i);
    }
    return num.exact_div(den);
}

}  // namespace webfoam
