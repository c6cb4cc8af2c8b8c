#include <set>
#include <gtest/gtest.h>

#include "wm/verify.hpp"
#include "wm/vertexops.hpp"

using namespace wm;

namespace {

RatFunc q() { return RatFunc::var(kQ); }
RatFunc t() { return RatFunc::var(kT); }
RatFunc z() { return RatFunc::var(zgen(0)); }

void expect_all_pass(const std::string& id, const VerifyConfig& cfg) {
    const Identity* ident = find_identity(id);
    ASSERT_NE(ident, nullptr) << id;
    auto res = run_identity(*ident, cfg);
    ASSERT_FALSE(res.empty()) << id;
    for (auto& c : res) EXPECT_EQ(c.status, Status::pass) << id << " " << c.lhs << " vs " << c.rhs << " " << c.note;
}

}  // namespace

TEST(Fock, PsiOnVacuum) {
    Partition empty;
    FockElement e = fock_current(Current::psi, 0, empty, empty, 3);
    RatFunc qq = fock_qq(), v = fock_v();
    EXPECT_EQ(e.coeff, (qq * z() - qq.inv() * v) / (z() - v));
    // colors without addable boxes act trivially
    EXPECT_EQ(fock_current(Current::psi, 1, empty, empty, 3).coeff, RatFunc(1));
}

TEST(Fock, CreationFromVacuum) {
    Partition empty, one({1});
    FockElement e = fock_current(Current::e, 0, empty, one, 3);
    EXPECT_FALSE(e.zero);
    EXPECT_EQ(e.coeff, RatFunc(1));
    EXPECT_EQ(e.point, fock_v());
    EXPECT_TRUE(fock_current(Current::e, 1, empty, one, 3).zero);
    EXPECT_TRUE(fock_current(Current::f, 0, empty, Partition({2}), 3).zero);
}

TEST(Fock, FieldMap) {
    RatFunc f = (RatFunc(1) - q() * t()) / (RatFunc(1) - q());
    RatFunc qq = fock_qq(), dd = fock_dd();
    EXPECT_EQ(to_fock(f), (RatFunc(1) - qq * qq) / (RatFunc(1) - qq * dd));
}

TEST(Boson, VacuumValues) {
    Partition empty;
    EXPECT_EQ(boson_eigen(empty, 0, 1, 3), fock_v() / fock_qq());
    EXPECT_EQ(boson_eigen_from_psi(empty, 0, 1, 3), fock_v() / fock_qq());
    EXPECT_EQ(dd_eigenvalue(empty, 0, false, 3), geometric(3)[0]);
    EXPECT_EQ(dual_boson_eigen(empty, 0, 1, 3), to_fock(geometric(3)[0]));
}

TEST(DSeries, VacuumConstantTerm) {
    CoreLabel core{{0, 0, 0}};
    WreathPoly one{MultiSymFunc::one(3), core};
    SeriesSym got = dd_apply(one, {0, 0, 0}, false, 4);
    EXPECT_TRUE(series_equal(got, series_scale(to_series(one, 4), geometric(3)[0])));
}

TEST(DSeries, SmallWindowIsDetected) {
    CoreLabel core{{0, 0, 0}};
    WreathPoly one{MultiSymFunc::one(3), core};
    EXPECT_THROW(dd_apply(one, {0, 0, 0}, false, 4, 1), window_error);
}

TEST(DSeries, ColumnOnLargerPartition) {
    Partition l({4, 2, 2});
    CoreLabel core = core_label(l, 3);
    WreathPoly h{wreath_H(l, 3), core};
    RatFunc ev = colrow_eigenvalue(l, 1, 0, ColRow::column, false, 3);
    std::string why;
    EXPECT_TRUE(series_equal(delta_colrow_apply(h, 1, 0, ColRow::column, false, 4), series_scale(to_series(h, 4), ev), &why))
        << why;
}

TEST(ConstTerm, SinglePole) {
    ConstTermProblem p{{RatFunc(5), RatFunc(-1)}, {t()}, {{kQ, 1}, {kT, 1}}, 4};
    ConstTermResult r = const_term(p, ConstTermMethod::residue);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.value, RatFunc(5) - t());
}

TEST(ConstTerm, RepeatedPoleFallsBack) {
    ConstTermProblem p{{RatFunc(1)}, {q(), q()}, {{kQ, 1}, {kT, 1}}, 4};
    ConstTermResult r = const_term(p, ConstTermMethod::residue);
    EXPECT_EQ(r.method, ConstTermMethod::window);
    EXPECT_FALSE(r.report.empty());
}

TEST(VertexSuite, IdsAreUnique) {
    std::set<std::string> seen;
    for (auto& i : all_identities()) EXPECT_TRUE(seen.insert(i.id).second) << i.id;
    EXPECT_EQ(find_identity("no-such-identity"), nullptr);
}

TEST(VertexSuite, AllIdentitiesPass) {
    VerifyConfig cfg;
    for (auto& i : vertex_identities()) expect_all_pass(i.id, cfg);
}
