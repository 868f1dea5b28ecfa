#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace webfoam {

// One family of closed-pairing comparisons inside a relation check.
struct RelationCheck {
    RelationCheck() = default;
    explicit RelationCheck(std::string n) : name(std::move(n)) {}

    std::string name;
    long checked = 0;
    long failures = 0;
    std::string counterexample;  // first failing entry
};

struct RelationReport {
    std::string id;
    int N = 0;
    bool pass = false;
    std::vector<RelationCheck> checks;
    std::string note;
    // Pairing of basis elements (rows) with proposed duals (columns), when the
    // relation is proved through a pair of dual bases.
    std::vector<std::string> labels;
    std::vector<std::vector<mpq_class>> matrix;

    bool has_matrix() const { return !matrix.empty(); }
    bool matrix_is_identity() const;
    long checked() const;
    long failures() const;
    std::string summary() const;
};

const std::vector<std::string>& relation_ids();

// Throws std::domain_error for an unknown id or an N outside the relation's range.
RelationReport verify_relation(const std::string& id, int N, int jobs = 1);

}  // namespace webfoam
