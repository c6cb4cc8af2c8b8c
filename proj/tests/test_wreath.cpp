#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wm/wreath.hpp"

using namespace wm;

namespace {

RatFunc R(const char* s) { return parse_ratfunc(s); }
Partition P(std::vector<int> v) { return Partition(std::move(v)); }

MultiSymFunc from_p(const std::map<Partition, RatFunc>& c) {
    MultiSymFunc f(1);
    for (auto& [rho, x] : c) {
        PIndex k;
        for (int part : rho.parts()) k.push_back(pcode(part, 0));
        f.add_term(k, x);
    }
    return f;
}

CoreLabel core11() { return core_label(P({1, 1}), 3); }

}  // namespace

TEST(OneColor, MatchesMonomialOracle) {
    for (int n = 1; n <= 3; ++n)
        for (auto& l : partitions_of(n)) EXPECT_EQ(wreath_H(l, 1), from_p(oracle::modified_macdonald(l))) << l.str();
}

TEST(OneColor, DegreeTwo) {
    auto s = h_table(CoreLabel::zero(1), 2).schur;
    Multipartition two{P({2})}, ones{P({1, 1})};
    EXPECT_EQ(s[0].at(two), R("1"));
    EXPECT_EQ(s[0].at(ones), R("t"));  // lambdas sorted: (1,1) before (2)
    EXPECT_EQ(s[1].at(ones), R("q"));
}

TEST(Modified, ElementaryDegreeOne) {
    MultiSymFunc e = modified_e(3, 1, 0);
    RatFunc den = R("1 - t^-3");
    EXPECT_EQ(e.coeff(PIndex{pcode(1, 0)}), RatFunc(1) / den);
    EXPECT_EQ(e.coeff(PIndex{pcode(1, 1)}), R("t^-2") / den);
    EXPECT_EQ(e.coeff(PIndex{pcode(1, 2)}), R("t^-1") / den);
}

TEST(Table, SampledEqualsExact) {
    for (auto& core : {CoreLabel::zero(3), core11(), CoreLabel::zero(2), core_label(P({1}), 2)})
        for (int n = 1; n <= 2; ++n) {
            HTable e = compute_H(core, n, HMethod::exact);
            HTable s = compute_H(core, n, HMethod::sampled);
            EXPECT_EQ(e.schur, s.schur) << core.str() << " n=" << n;
            for (int d : e.intersection_dim) EXPECT_EQ(d, 1);
            for (size_t i = 0; i < s.lambdas.size(); ++i)
                EXPECT_TRUE(satisfies_definition(s.H[i], s.lambdas[i], core.r()));
        }
}

TEST(Table, NonzeroCoreHasLaurentCoefficients) {
    const HTable& tb = h_table(core11(), 1);
    ASSERT_EQ(tb.lambdas.size(), 3u);
    EXPECT_EQ(tb.lambdas[0], P({1, 1, 1, 1, 1}));
    const auto& s = tb.schur[0];
    Multipartition a{P({1}), P({}), P({})}, b{P({}), P({1}), P({})}, c{P({}), P({}), P({1})};
    EXPECT_EQ(s.at(a), R("1"));
    EXPECT_EQ(s.at(b), R("t"));
    EXPECT_EQ(s.at(c), R("t^-1"));
}

TEST(Table, RejectsWrongCandidate) {
    const HTable& tb = h_table(CoreLabel::zero(3), 1);
    EXPECT_FALSE(satisfies_definition(tb.H[0], tb.lambdas[1], 3));
    EXPECT_FALSE(satisfies_definition(tb.H[0].scale(R("2")), tb.lambdas[0], 3));
}

TEST(Nabla, EigenvalueOfRow) {
    EXPECT_EQ(nabla_eigen(P({3}), 3), R("-1"));
    EXPECT_EQ(nabla_eigen(P({}), 3), R("1"));
    const MultiSymFunc& h = wreath_H(P({3}), 3);
    EXPECT_EQ(nabla(h, CoreLabel::zero(3)), -h);
    EXPECT_EQ(nabla(nabla(h, CoreLabel::zero(3), 1), CoreLabel::zero(3), -1), h);
}

TEST(Norm, PairingIsTheNorm) {
    for (auto& l : enumerate(core11(), 1)) EXPECT_EQ(qt_pairing(wreath_Hdag(l, 3), wreath_H(l, 3)), wreath_norm(l, 3));
}

TEST(DownArrow, Involution) {
    WreathPoly f{MultiSymFunc::p(3, 2, 1).scale(R("q/(1-t)")) + MultiSymFunc::p(3, 1, 0), core11()};
    EXPECT_EQ(down_arrow(down_arrow(f)), f);
    EXPECT_EQ(down_arrow(f).core, w0_act(core11()));
}

TEST(Sigma, ShiftsCore) {
    WreathPoly f{MultiSymFunc::p(3, 1, 0), core11()};
    WreathPoly g = sigma_apply(f, 1);
    EXPECT_EQ(g.core, sigma_act(core11(), 1));
    EXPECT_EQ(g.value, MultiSymFunc::p(3, 1, 1));
    EXPECT_EQ(sigma_apply(g, 2), f);
}

TEST(Evaluation, ShiftedIotaD) {
    ColoredCharSum d = char_sums(P({1}), 3).D;
    ColoredCharSum s = iota_D(P({1}), 3, 1);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(s[i], d[1 - i]);
}

TEST(Delta, FunctionPairsToEvaluation) {
    Partition l = enumerate(CoreLabel::zero(3), 1)[0];
    MultiSymFunc e = delta_fn(l, 3, 0, 2);
    for (auto& g : multipartitions(2, 3)) EXPECT_EQ(qt_pairing(schur(g), e), evaluate(schur(g), iota_D(l, 3)));
}

TEST(Kostka, RoutesAgreeOnCore11) {
    for (auto& m : enumerate(core11(), 1))
        for (auto& g : multipartitions(1, 3)) EXPECT_EQ(kostka(g, m, 3), kostka_plethystic(g, m, 3));
}

TEST(Interpolation, DeltaOnGrid) {
    for (auto& m : enumerate(CoreLabel::zero(3), 1))
        for (auto& l : enumerate(CoreLabel::zero(3), 1))
            EXPECT_EQ(evaluate(interpolation(m, 3), iota_D(l, 3)), RatFunc(l == m ? 1 : 0));
}
