#include <set>
#include <gtest/gtest.h>

#include "wm/verify.hpp"

using namespace wm;

namespace {

const Identity& find(const std::string& id) {
    for (auto& i : wreath_identities())
        if (i.id == id) return i;
    throw std::runtime_error("unknown identity " + id);
}

void expect_all_pass(const std::string& id, const VerifyConfig& cfg) {
    auto res = run_identity(find(id), cfg);
    ASSERT_FALSE(res.empty()) << id;
    for (auto& c : res) EXPECT_EQ(c.status, Status::pass) << id << " " << c.lhs << " vs " << c.rhs << " " << c.note;
}

}  // namespace

TEST(Verify, IdsAreUnique) {
    std::set<std::string> seen;
    for (auto& i : wreath_identities()) EXPECT_TRUE(seen.insert(i.id).second) << i.id;
}

TEST(Verify, CheapIdentitiesAtDegreeOne) {
    VerifyConfig cfg;
    cfg.max_quot = 1;
    for (const char* id : {"definition", "biorthogonality", "nabla-ev", "nabla-ev-shifted", "mk", "eval-one",
                           "reciprocity", "fourier-pairing", "interpolation", "kostka", "e-expansion", "skew",
                           "down-arrow", "fourier-kernel", "delta-eigen"})
        expect_all_pass(id, cfg);
}

TEST(Verify, TeslerAtDegreeZero) {
    VerifyConfig cfg;
    cfg.max_quot = 0;
    expect_all_pass("tesler", cfg);
    expect_all_pass("tesler-shifted", cfg);
}

TEST(Verify, DetectsFailure) {
    auto c = compare("x", {}, RatFunc(1), RatFunc(2));
    EXPECT_EQ(c.status, Status::fail);
}

TEST(Verify, ResultsIndependentOfJobs) {
    VerifyConfig a, b;
    a.max_quot = b.max_quot = 1;
    b.jobs = 3;
    auto ra = run_identity(find("reciprocity"), a);
    auto rb = run_identity(find("reciprocity"), b);
    ASSERT_EQ(ra.size(), rb.size());
    for (size_t i = 0; i < ra.size(); ++i) {
        EXPECT_EQ(ra[i].params, rb[i].params);
        EXPECT_EQ(ra[i].lhs, rb[i].lhs);
        EXPECT_EQ(ra[i].rhs, rb[i].rhs);
    }
}

TEST(Verify, OneColorSkipsColoredIdentities) {
    VerifyConfig cfg;
    cfg.r = 1;
    auto res = run_identity(find("tesler"), cfg);
    ASSERT_EQ(res.size(), 1u);
    EXPECT_EQ(res[0].status, Status::skipped);
}
