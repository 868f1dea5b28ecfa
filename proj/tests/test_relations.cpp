#include "webfoam/relations.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace webfoam;

namespace {

const char* kIdentity = "pairing matrix is the identity";

RelationReport run_smallest(const std::string& id) {
    try {
        return verify_relation(id, 3);
    } catch (const std::domain_error&) {
        return verify_relation(id, 4);
    }
}

}  // namespace

// Every relation holds entry by entry against its closure family. The pairing
// matrices of DR1 and SqR1 are reported separately and checked by the acceptance run.
TEST(Relations, AllRelationsHoldAtSmallN) {
    for (const auto& id : relation_ids()) {
        const RelationReport r = run_smallest(id);
        EXPECT_EQ(r.id, id);
        EXPECT_GT(r.checked(), 0) << id;
        for (const auto& c : r.checks) {
            if (c.name == kIdentity) continue;
            EXPECT_EQ(c.failures, 0) << id << ": " << c.name << " " << c.counterexample;
        }
    }
}

TEST(Relations, Dr2MatrixIsIdentity) {
    const RelationReport r = verify_relation("DR2", 3);
    ASSERT_TRUE(r.has_matrix());
    EXPECT_EQ(r.matrix.size(), 12u);
    EXPECT_TRUE(r.matrix_is_identity());
    EXPECT_TRUE(r.pass);
}

TEST(Relations, PairingMatrixSizes) {
    for (int N = 2; N <= 3; ++N)
        EXPECT_EQ(verify_relation("DR1", N).matrix.size(), static_cast<std::size_t>(2 * N * (N - 1)));
    EXPECT_EQ(verify_relation("SqR1", 3).matrix.size(), 24u);
}

TEST(Relations, Errors) {
    EXPECT_THROW(verify_relation("nope", 4), std::domain_error);
    EXPECT_THROW(verify_relation("Sstar", 3), std::domain_error);
    EXPECT_THROW(verify_relation("S1", 1), std::domain_error);
}

TEST(Relations, SummaryMentionsOutcome) {
    const RelationReport r = verify_relation("S1", 3);
    EXPECT_TRUE(r.pass);
    EXPECT_NE(r.summary().find("S1"), std::string::npos);
}

TEST(Relations, JobsDoNotChangeResults) {
    for (const char* id : {"Theta", "CN2", "DR2"}) {
        const RelationReport a = verify_relation(id, 4, 1), b = verify_relation(id, 4, 3);
        EXPECT_EQ(a.checked(), b.checked());
        EXPECT_EQ(a.failures(), b.failures());
        EXPECT_EQ(a.matrix, b.matrix);
    }
}
