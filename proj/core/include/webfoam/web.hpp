#pragma once

#include "webfoam/laurent.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace webfoam {

// Closed trivalent web with simple (1) and double (2) edges. Each vertex lists
// its incident edge ids in cyclic order; edges run from `from` to `to`.
struct Web {
    struct Edge {
        int id = 0;
        int label = 1;
        int from = 0;
        int to = 0;
        bool oriented = true;
    };
    struct Vertex {
        std::array<int, 3> halfedges{};
    };

    std::vector<int> circles;  // labels of vertex-free loops
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    int add_vertex() {
        vertices.push_back({});
        return static_cast<int>(vertices.size()) - 1;
    }
    // Appends the edge; the caller fills in the vertex cyclic orders.
    int add_edge(int label, int from, int to);
};

struct WebViolation {
    std::string what;
    int vertex = -1;
    int edge = -1;
};

// Structural and planarity checks; never throws.
std::vector<WebViolation> validate(const Web& w);

class InvalidWeb : public std::domain_error {
public:
    explicit InvalidWeb(const std::vector<WebViolation>& v);
    const std::vector<WebViolation>& violations() const { return v_; }

private:
    std::vector<WebViolation> v_;
};

Web web_from_json(const std::string& text);
std::string web_to_json(const Web& w);

class IrreducibleWeb : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MoyOptions {
    long budget = 1'000'000;  // move applications before giving up
    // Nonzero: pick among applicable moves in a seeded random order instead of
    // circles, digons, squares, five-edge. The value must not depend on it.
    unsigned long seed = 0;
};

// Evaluation by circle, digon, square and five-edge moves.
LaurentPoly moy_eval(const Web& w, int N, const MoyOptions& opt = {});

namespace webs {
Web simple_circle();
Web double_circle();
Web theta();
// A double circle with two simple digons inserted in series.
Web double_digons();
// A simple circle with two simple-double digons inserted in series.
Web simple_double_digons();
// A square with double top and bottom edges glued to its mirror image along the four legs.
Web square_closure();
}  // namespace webs

}  // namespace webfoam
