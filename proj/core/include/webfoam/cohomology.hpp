#pragma once

#include "webfoam/laurent.hpp"
#include "webfoam/multipoly.hpp"
#include "webfoam/symmetric.hpp"

#include <functional>
#include <vector>

namespace webfoam {

// H*(G_{k,N}) in the Schur basis of the k x (N-k) box.
class GrassRing {
public:
    GrassRing(int N, int k);

    int N() const { return N_; }
    int k() const { return k_; }
    const std::vector<Partition>& basis() const { return basis_; }
    bool in_box(const Partition& p) const;
    Partition top() const;  // (N-k, ..., N-k)
    int sign() const { return (k_ / 2) % 2 ? -1 : 1; }

    SchurSum reduce(const SchurSum& v) const;
    SchurSum reduce(const MultiPoly& v) const;
    SchurSum mul(const SchurSum& a, const SchurSum& b) const;  // reduced product
    mpq_class trace(const SchurSum& v) const;
    SchurSum dual(const Partition& lambda) const;
    Partition complement(const Partition& lambda) const;
    LaurentPoly qdim() const;

private:
    int N_, k_;
    std::vector<Partition> basis_;
};

// Weighted degree first, then lex; used only by the flag rings.
using MonomialOrder = std::function<bool(const Exponents&, const Exponents&)>;

class FlagRing {
public:
    enum class Kind { Fl12, Fl23 };
    FlagRing(Kind kind, int N);

    Kind kind() const { return kind_; }
    int N() const { return N_; }
    const RingPtr& ring() const { return ring_; }
    const std::vector<MultiPoly>& generators() const { return gens_; }
    const std::vector<MultiPoly>& groebner() const { return gb_; }

    MultiPoly normal_form(const MultiPoly& p) const;
    // Number of standard monomials, i.e. the rational dimension of the quotient.
    long dimension() const;

private:
    Kind kind_;
    int N_;
    RingPtr ring_;
    std::vector<MultiPoly> gens_, gb_;
};

MultiPoly flag_reduce(const FlagRing& f, const MultiPoly& p);

// Real dimension N^2 - sum (d_{i+1}-d_i)^2 - d_1^2 of the partial flag variety.
long flag_dim(const std::vector<int>& d);

}  // namespace webfoam
