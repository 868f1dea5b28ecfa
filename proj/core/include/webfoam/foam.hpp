#pragma once

#include "webfoam/cohomology.hpp"
#include "webfoam/symmetric.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace webfoam {

struct Sphere {
    int label = 1;
    Partition dec;
    bool operator==(const Sphere&) const = default;
};

// Two simple disks and a double disk on one singular circle. The order of the
// simple facets encodes the circle orientation.
struct Theta112 {
    int d1 = 0;
    int d2 = 0;
    Partition dec2{0, 0};
    bool operator==(const Theta112&) const = default;
};

struct Theta123 {
    Partition dec3{0, 0, 0};
    Partition dec2{0, 0};
    int d1 = 0;
    int orient = 1;
    bool operator==(const Theta123&) const = default;
};

using FoamAtom = std::variant<Sphere, Theta112, Theta123>;

std::string describe(const FoamAtom& a);

// Rational combination of disjoint unions of atoms.
struct ClosedFoam {
    std::vector<std::pair<mpq_class, std::vector<FoamAtom>>> terms;

    static ClosedFoam atom(const FoamAtom& a, const mpq_class& c = 1);
    ClosedFoam& operator+=(const ClosedFoam& o);
    ClosedFoam scale(const mpq_class& c) const;
};
// Disjoint union, bilinear.
ClosedFoam operator*(const ClosedFoam& a, const ClosedFoam& b);

int q_grading(const FoamAtom& a, int N);

mpq_class sphere_eval(int label, const Partition& dec, int N);
mpq_class sphere_eval(const SchurSum& dec, int N);

mpq_class theta112_direct(int N, int d1, int d2, const Partition& dec2);
mpq_class theta123_direct(int N, const Partition& dec3, const Partition& dec2, int d1);

mpq_class theta112_closed(int N, int d1, int d2, const Partition& dec2);
mpq_class theta123_closed(int N, const Partition& dec3, const Partition& dec2, int d1, int orient = 1);

mpq_class eval(const FoamAtom& a, int N);
mpq_class eval(const ClosedFoam& f, int N);

// Which facet of a theta carries the elementary class being moved.
enum class Facet { Simple1, Simple2, Double, Triple };
// Direction: Inward moves a class from the thicker facet onto the thinner ones
// (s = x+y, t = xy or p = x+s, q = xs+t, r = xt); Outward rewrites a class on a
// thinner facet through the thicker ones (s = p - x, t = q - xp + x^2).
enum class MigrationDir { Inward, Outward };

// Multiplies the chosen facet by the elementary class e_m (before) and rewrites it
// through the neighbouring facets (after); eval(before) == eval(after).
struct Migration {
    ClosedFoam before;
    ClosedFoam after;
};
Migration migrate(const FoamAtom& a, Facet where, int m, MigrationDir dir);

// Decoration left on a double facet after removing a (1,1,2) bubble whose simple
// facets carry i and j dots.
SchurSum bubble_double(int N, int i, int j);

// kind 1: (1,2,3) bubble on a double facet, indices (p,q,r,i), decoration on the
//         triple facet pi_{p,q,r} and i dots on the simple facet.
// kind 2: bubble on a triple facet, indices (i,k,m): i dots, double facet pi_{k,m}.
// kind 3: bubble on a simple facet, indices (p,q,r,k,m): triple pi_{p,q,r}, double pi_{k,m}.
SchurSum bubble_triple(int N, int kind, const std::vector<int>& idx);

// Nonzero theta values for display: rows (p,q,r,j,k,i,value).
std::vector<std::tuple<Partition, Partition, int, mpq_class>> theta123_table(int N);
std::vector<std::tuple<int, int, Partition, mpq_class>> theta112_table(int N);

}  // namespace webfoam
