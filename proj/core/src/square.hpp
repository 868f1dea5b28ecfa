#pragma once
// Closed pairings on the web obtained by closing a square with its mirror image.

#include "gluing.hpp"

#include <array>
#include <string>

namespace webfoam::detail {

struct SquareShape {
    // How a half foam caps one square: two vertical sheets through the double
    // edges, or a horizontal simple square with the double edges capped apart.
    enum class End { Vertical, Horizontal };
    std::array<End, 2> ends{};
    std::array<int, 2> square_dots{};  // dots on the simple square at a horizontal end
    std::array<int, 2> outer{};        // dots on the outer facets, in leg order
};

struct SquareSymmetry {
    std::vector<int> vmap, emap;
};

BoundaryWeb square_closure_web();
HalfFoam square_half(const SquareShape& s);
// The identity foam of the square, bent into a foam on the closure.
HalfFoam square_identity();
SquareSymmetry square_symmetry(bool swap_ends, bool flip);

struct SquareBasisElement {
    std::string name;
    HalfSum element, dual;
};
// N^2 + 2N(N-2) + N^2(N-2)^2 basis elements with their proposed duals.
std::vector<SquareBasisElement> square_basis(int N);
// Right-hand side of the square removal relation, bent onto the closure.
HalfSum square_relation_rhs(int N);

}  // namespace webfoam::detail
