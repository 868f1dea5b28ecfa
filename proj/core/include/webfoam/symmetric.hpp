#pragma once

#include "webfoam/multipoly.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace webfoam {

// Fixed-length partition with explicit trailing zeros, length 1..3.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p) : parts(p) {}
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {}

    int length() const { return static_cast<int>(parts.size()); }
    int size() const;  // |lambda|
    int operator[](int i) const { return parts[i]; }
    bool valid() const;
    std::string str() const;  // "(2,1,0)"

    auto operator<=>(const Partition&) const = default;
};

Partition zero_partition(int k);
Partition parse_partition(const std::string& s);

// Rational combination of Schur classes in k variables.
class SchurSum {
public:
    using Terms = std::map<Partition, mpq_class>;

    SchurSum() = default;
    explicit SchurSum(int k) : k_(k) {}
    SchurSum(const Partition& p, const mpq_class& c = 1);

    int k() const { return k_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    mpq_class coeff(const Partition& p) const;

    void add(const Partition& p, const mpq_class& c);
    SchurSum& operator+=(const SchurSum& o);
    SchurSum& operator-=(const SchurSum& o);
    SchurSum scale(const mpq_class& c) const;

    std::string str() const;
    bool operator==(const SchurSum& o) const { return k_ == o.k_ && t_ == o.t_; }

private:
    int k_ = 0;
    Terms t_;
};

SchurSum operator+(SchurSum a, const SchurSum& b);
SchurSum operator-(SchurSum a, const SchurSum& b);
// Product in the ring of symmetric polynomials (no truncation).
SchurSum operator*(const SchurSum& a, const SchurSum& b);
std::ostream& operator<<(std::ostream& os, const SchurSum& s);

// Ring x1..xk with all weights 2.
RingPtr schur_ring(int k);

MultiPoly schur(const Partition& lambda, int k);
MultiPoly to_poly(const SchurSum& s);
SchurSum to_schur_basis(const MultiPoly& f, int k);

SchurSum mult2(const Partition& a, const Partition& b);
SchurSum mult3(const Partition& a, const Partition& b);
// pi_lambda * e_m via vertical strips, lambda of length k.
SchurSum mult_elementary(const Partition& lambda, int m);

std::vector<std::pair<Partition, int>> decompose3(const Partition& lambda);

struct Potential {
    int N = 0;
    int k = 0;
    MultiPoly poly;  // in the elementary variables (x | s,t | p,q,r)
    // For k = 2: a_{ij} with i + 2j = N + 1, keyed by (i, j).
    std::map<std::pair<int, int>, mpq_class> coeffs;
};

// W with W(e_1,...,e_k) = y_1^{N+1} + ... + y_k^{N+1}.
Potential potential(int N, int k);
// Variable names used by potential() for thickness k.
std::vector<std::string> elementary_names(int k);

mpz_class binomial(long n, long k);

}  // namespace webfoam
