#pragma once
// Rotation-system graphs shared by web validation and evaluation.

#include "webfoam/web.hpp"

#include <array>
#include <vector>

namespace webfoam::detail {

// Dart 2e sits at the tail of edge e, dart 2e+1 at its head. Double edges run
// from the merge vertex to the split vertex.
struct Graph {
    struct E {
        int label = 1;
        int from = -1;
        int to = -1;
    };
    std::vector<E> e;
    std::vector<std::array<int, 3>> rot;
    int circles1 = 0, circles2 = 0;

    int vertices() const { return static_cast<int>(rot.size()); }
    int vertex_of(int dart) const { return (dart & 1) ? e[dart >> 1].to : e[dart >> 1].from; }
    int slot_of(int dart) const;
    // Next dart after the opposite end of d at its vertex; orbits are faces.
    int phi(int d) const;
    bool is_merge(int v) const;
};

// Structure must already be valid (incidence and vertex types).
Graph graph_of(const Web& w);

std::vector<std::vector<int>> faces(const Graph& g);
// Connected components as vertex lists, in order of smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);
// One vertex from every component that fails V - E + F = 2.
std::vector<int> nonplanar_components(const Graph& g);

}  // namespace webfoam::detail
