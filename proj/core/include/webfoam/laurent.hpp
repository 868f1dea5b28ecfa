#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace webfoam {

// Integer Laurent polynomial in q. Zero coefficients are never stored.
class LaurentPoly {
public:
    using Terms = std::map<int, mpz_class>;

    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT: constants convert implicitly
    static LaurentPoly monomial(int e, const mpz_class& c = 1);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    mpz_class coeff(int e) const;
    int min_exp() const;  // requires nonzero
    int max_exp() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;

    LaurentPoly scale(const mpz_class& c) const;
    LaurentPoly shift(int e) const;   // multiply by q^e
    LaurentPoly invert_q() const;     // q -> q^{-1}
    mpz_class eval_at_one() const;

    // Exact quotient; throws std::logic_error on a nonzero remainder.
    LaurentPoly exact_div(const LaurentPoly& d) const;

    std::string str() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    void add_term(int e, const mpz_class& c);
    Terms t_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// [n] = q^{1-n} + q^{3-n} + ... + q^{n-1}
LaurentPoly qint(int n);
// [n choose k], built by exact division of quantum factorials.
LaurentPoly qbinom(int n, int k);

}  // namespace webfoam
