#pragma once
// Gluing of two vertex-free half foams along a common boundary web.

#include "webfoam/closed.hpp"

#include <array>
#include <utility>
#include <vector>

namespace webfoam::detail {

// Boundary web with trivalent vertices. roles[v] lists the edge at v whose facet
// comes first along the singular circle through v, then the second simple edge,
// then the double edge.
struct BoundaryWeb {
    int vertices = 0;
    std::vector<int> edge_k;
    std::vector<std::pair<int, int>> edge_ends;
    std::vector<std::array<int, 3>> roles;
};

// A foam from the empty web to the boundary web. Every facet is a disk.
struct HalfFoam {
    struct Piece {
        int k;
        SchurSum dec;
        std::vector<int> edges;
    };
    std::vector<Piece> pieces;
    std::vector<std::pair<int, int>> arcs;  // singular arcs between boundary vertices
};

// Linear combination of half foams.
using HalfSum = std::vector<std::pair<mpq_class, HalfFoam>>;

// The closed foam u followed by the reflection of v, where v's boundary is
// identified with u's by (vmap, emap). Throws std::logic_error when a circle's
// facet roles disagree.
VertexFreeFoam glue(const BoundaryWeb& g, const HalfFoam& u, const HalfFoam& v, const std::vector<int>& vmap,
                    const std::vector<int>& emap);

mpq_class pairing(const BoundaryWeb& g, const HalfSum& u, const HalfSum& v, const std::vector<int>& vmap,
                  const std::vector<int>& emap, int N);

}  // namespace webfoam::detail
