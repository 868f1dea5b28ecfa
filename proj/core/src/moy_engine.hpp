#pragma once

#include "planar.hpp"
#include "webfoam/web.hpp"

#include <map>
#include <random>
#include <set>
#include <vector>

namespace webfoam::detail {

// Memoizing evaluator. One instance per thread; the memo is reused across calls
// with the same N.
class MoyEngine {
public:
    MoyEngine(int N, MoyOptions opt);

    // Both throw IrreducibleWeb when no sequence of moves finishes.
    LaurentPoly eval(const Web& w);  // validates first
    LaurentPoly eval(const Graph& g);
    long steps() const { return steps_; }

private:
    struct Rewrite;
    LaurentPoly eval_graph(const Graph& g);
    LaurentPoly eval_connected(const Graph& g);
    std::vector<Rewrite> moves(const Graph& g) const;
    void charge();

    int N_;
    MoyOptions opt_;
    long steps_ = 0;
    std::mt19937_64 rng_;
    std::map<std::vector<int>, LaurentPoly> memo_;
    std::set<std::vector<int>> active_;
};

// Lexicographically least traversal code over all starting darts. g must be
// connected and without circles.
std::vector<int> canonical_code(const Graph& g);

}  // namespace webfoam::detail
