#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace webfoam {

// Variable names with their weighted degrees. Shared by all polynomials built over it.
struct Ring {
    std::vector<std::string> names;
    std::vector<int> weights;

    std::size_t size() const { return names.size(); }
    int index(const std::string& name) const;  // throws std::domain_error if absent
};
using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights);
// All variables of weight 2.
RingPtr make_ring(std::vector<std::string> names);

using Exponents = std::vector<int>;

// Sparse polynomial with rational coefficients. The map is ordered lexicographically
// on exponent vectors (first declared variable most significant); division uses that order.
class MultiPoly {
public:
    using Terms = std::map<Exponents, mpq_class>;

    MultiPoly() = default;
    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
    static MultiPoly constant(RingPtr ring, const mpq_class& c);
    static MultiPoly var(RingPtr ring, int i);
    static MultiPoly var(RingPtr ring, const std::string& name);
    static MultiPoly monomial(RingPtr ring, Exponents e, const mpq_class& c = 1);

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    mpq_class coeff(const Exponents& e) const;

    int weighted_degree(const Exponents& e) const;
    // -1 for the zero polynomial; otherwise the largest monomial degree.
    int degree() const;
    bool is_homogeneous() const;

    void add_term(const Exponents& e, const mpq_class& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator-() const;
    MultiPoly scale(const mpq_class& c) const;
    MultiPoly pow(int k) const;

    std::string str() const;
    bool operator==(const MultiPoly& o) const { return t_ == o.t_; }

private:
    RingPtr ring_;
    Terms t_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// f = g*h with zero remainder, else std::domain_error.
MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g);

// (f - f[a := b]) / (a - b), expanded as a geometric sum per monomial.
MultiPoly difference_quotient(const MultiPoly& f, int a, int b);
MultiPoly difference_quotient(const MultiPoly& f, const std::string& a, const std::string& b);

MultiPoly partial_derivative(const MultiPoly& f, int v);
MultiPoly partial_derivative(const MultiPoly& f, const std::string& v);

// images[i] replaces variable i of f's ring; all images must share one ring.
MultiPoly substitute(const MultiPoly& f, const std::vector<MultiPoly>& images);
// Replace one variable by a polynomial over the same ring.
MultiPoly substitute(const MultiPoly& f, int v, const MultiPoly& image);

// Square matrices up to 3x3 by cofactor expansion.
MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m);

}  // namespace webfoam
