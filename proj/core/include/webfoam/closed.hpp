#pragma once

#include "webfoam/foam.hpp"

#include <vector>

namespace webfoam {

// Closed foam whose singular graph is a disjoint union of circles. Every facet
// is a sphere with holes and handles; each hole lies on one singular circle.
class VertexFreeFoam {
public:
    struct FacetData {
        int k;
        SchurSum dec;
        int handles = 0;
    };
    // kind 112: (first simple, second simple, double); the order fixes the orientation.
    // kind 123: (simple, double, triple) with orient = +-1.
    struct Circle {
        int kind;
        int a, b, c;
        int orient = 1;
    };

    int add_facet(int k, const SchurSum& dec);
    int add_facet(int k, const Partition& dec) { return add_facet(k, SchurSum(dec)); }
    // Undecorated facet of thickness k.
    int add_facet(int k) { return add_facet(k, zero_partition(k)); }
    // Multiplies the decoration of facet f by d.
    void decorate(int f, const SchurSum& d);
    // Handles are removed by neck cutting during evaluation.
    void add_handles(int f, int g);

    void add_circle112(int first, int second, int dbl);
    void add_circle123(int simple, int dbl, int triple, int orient = 1);

    const std::vector<FacetData>& facets() const { return facets_; }
    const std::vector<Circle>& circles() const { return circles_; }

private:
    std::vector<FacetData> facets_;
    std::vector<Circle> circles_;
};

// Cuts every handle and every facet next to each of its circles except the
// first, then evaluates the resulting thetas and spheres by the closed-form tables.
mpq_class evaluate(const VertexFreeFoam& f, int N);

}  // namespace webfoam
