#include <random>

#include <gtest/gtest.h>

#include "wm/symfunc.hpp"

using namespace wm;

namespace {

RatFunc R(const char* s) { return parse_ratfunc(s); }
Partition P(std::vector<int> v) { return Partition(std::move(v)); }

MultiSymFunc random_sym(std::mt19937& rng, int r, int max_deg) {
    static const char* coeffs[] = {"1", "q", "-t", "2*q*t-1", "1/(1-q)", "(q-t)/(1+t)", "3", "-q^2"};
    std::uniform_int_distribution<int> pick(0, 7), deg(0, max_deg), color(0, r - 1), part(1, max_deg);
    MultiSymFunc f(r);
    for (int k = 0; k < 4; ++k) {
        int d = deg(rng);
        PIndex key;
        while (d > 0) {
            int n = std::min(d, part(rng));
            key.push_back(pcode(n, color(rng)));
            d -= n;
        }
        std::sort(key.rbegin(), key.rend());
        f.add_term(key, R(coeffs[pick(rng)]));
    }
    return f;
}

long hook_dimension(const Partition& l) {
    Partition c = l.conjugate();
    mpz_class num = 1, den = 1;
    for (int k = 2; k <= l.size(); ++k) num *= k;
    for (auto& x : l.boxes()) den *= (l[x.b] - x.a - 1) + (c[x.a] - x.b - 1) + 1;
    return mpz_class(num / den).get_si();
}

}  // namespace

TEST(Characters, OrthogonalityAndDimension) {
    for (int n = 1; n <= 7; ++n) {
        const auto& ps = partitions_of(n);
        for (auto& l : ps) {
            Partition ones(std::vector<int>(n, 1));
            EXPECT_EQ(sn_character(l, ones), hook_dimension(l));
            for (auto& m : ps) {
                mpq_class s = 0;
                for (auto& mu : ps) s += mpq_class(sn_character(l, mu) * sn_character(m, mu)) / mpq_class(zee(mu));
                EXPECT_EQ(s, l == m ? 1 : 0);
            }
        }
    }
}

TEST(Basis, SimpleConversions) {
    auto s = to_schur(MultiSymFunc::p(3, 1, 0));
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s.begin()->first, (Multipartition{P({1}), P({}), P({})}));
    EXPECT_EQ(s.begin()->second, RatFunc(1));
    auto s2 = to_schur(MultiSymFunc::p(1, 1, 0) * MultiSymFunc::p(1, 1, 0));
    EXPECT_EQ(s2.size(), 2u);
    EXPECT_EQ(s2[Multipartition{P({2})}], RatFunc(1));
    EXPECT_EQ(s2[Multipartition{P({1, 1})}], RatFunc(1));
    // e_(k) = e_1^k and e_k = e_(1^k)
    EXPECT_EQ(basis_element(1, Basis::e, P({2}), 0), MultiSymFunc::p(1, 1, 0) * MultiSymFunc::p(1, 1, 0));
    EXPECT_EQ(basis_element(1, Basis::e, P({1, 1}), 0), e_n(1, 2, 0));
    EXPECT_EQ(basis_element(1, Basis::h, P({2}), 0), h_n(1, 2, 0));
    EXPECT_EQ(omega(e_n(2, 3, 1)), h_n(2, 3, 1));
}

TEST(Basis, RoundTrips) {
    std::mt19937 rng(1);
    for (int k = 0; k < 10; ++k) {
        MultiSymFunc f = random_sym(rng, 3, 4);
        for (Basis b : {Basis::s, Basis::e, Basis::h, Basis::p}) {
            std::vector<Basis> bs(3, b);
            EXPECT_EQ(from_basis(3, to_basis(f, bs), bs), f);
        }
        std::vector<Basis> mixed{Basis::s, Basis::h, Basis::e};
        EXPECT_EQ(from_basis(3, to_basis(f, mixed), mixed), f);
    }
}

TEST(Pleth, SigmaIotaAndInverses) {
    int r = 3;
    for (int i = 0; i < r; ++i) {
        EXPECT_EQ(pleth_apply(MultiSymFunc::p(r, 2, i), PlethMatrix::sigma(r)), MultiSymFunc::p(r, 2, i + 1));
        EXPECT_EQ(pleth_apply(MultiSymFunc::p(r, 2, i), PlethMatrix::iota(r)), MultiSymFunc::p(r, 2, -i));
    }
    RatFunc q = RatFunc::var(kQ), t = RatFunc::var(kT);
    for (int dir : {1, -1}) {
        PlethMatrix a = PlethMatrix::one_minus(r, q, dir), ai = PlethMatrix::one_minus_inv(r, q, dir);
        EXPECT_EQ(a.inverse(), ai);
        EXPECT_EQ(ai * a, PlethMatrix::identity(r));
    }
    std::mt19937 rng(2);
    for (int k = 0; k < 5; ++k) {
        MultiSymFunc f = random_sym(rng, r, 4);
        MultiSymFunc g = pleth_apply(f, PlethMatrix::one_minus(r, q, 1));
        EXPECT_EQ(pleth_apply(g, PlethMatrix::one_minus_inv(r, q, 1)), f);
        EXPECT_EQ(pleth_apply(pleth_apply(f, PlethMatrix::iota(r)), PlethMatrix::iota(r)), f);
    }
}

TEST(Pleth, HomomorphismAndComposition) {
    int r = 3;
    std::mt19937 rng(3);
    PlethMatrix a = PlethMatrix::one_minus(r, RatFunc::var(kT), -1) * PlethMatrix::iota(r);
    PlethMatrix b = PlethMatrix::sigma(r) + PlethMatrix::scalar(r, R("q^2"));
    b.at(0, 1) = R("u");
    for (int k = 0; k < 5; ++k) {
        MultiSymFunc f = random_sym(rng, r, 3), g = random_sym(rng, r, 3);
        EXPECT_EQ(pleth_apply(f * g, a), pleth_apply(f, a) * pleth_apply(g, a));
        EXPECT_EQ(pleth_apply(pleth_apply(f, a), b), pleth_apply(f, b * a));
    }
}

TEST(Pleth, Translate) {
    int r = 3;
    MultiSymFunc p1 = MultiSymFunc::p(r, 1, 0);
    EXPECT_EQ(pleth_translate(p1, 0, RatFunc(1)), p1 + MultiSymFunc::one(r));
    // h_n[X - 1] = h_n[X] - h_{n-1}[X] since Omega[-z] = 1 - z
    for (int n = 1; n <= 4; ++n)
        EXPECT_EQ(pleth_translate(h_n(r, n, 1), 1, RatFunc(-1)), h_n(r, n, 1) - h_n(r, n - 1, 1));
    std::mt19937 rng(4);
    for (int k = 0; k < 5; ++k) {
        MultiSymFunc f = random_sym(rng, r, 4);
        EXPECT_EQ(pleth_translate(pleth_translate(f, 2, RatFunc(1)), 2, RatFunc(-1)), f);
    }
}

TEST(Eval, ColoredSums) {
    int r = 3;
    ColoredCharSum d0 = char_sums(Partition(), r).D;
    EXPECT_EQ(eval_colored(MultiSymFunc::one(r), d0), RatFunc(1));
    EXPECT_EQ(eval_colored(MultiSymFunc::p(r, 1, 0), d0), RatFunc(-1));
    // f[1 + u S] two ways
    RatFunc u = RatFunc::var(kU);
    ColoredCharSum s = char_sums(P({4, 2, 2}), r).B;
    ColoredCharSum direct = s.scale(u);
    direct[0] += RatFunc(1);
    std::mt19937 rng(5);
    for (int k = 0; k < 5; ++k) {
        MultiSymFunc f = random_sym(rng, r, 3);
        EXPECT_EQ(eval_colored(pleth_translate(f, 0, RatFunc(1)), s.scale(u)), eval_colored(f, direct));
        PlethMatrix a = PlethMatrix::iota(r) * PlethMatrix::sigma(r);
        EXPECT_EQ(eval_colored(f, a, s), eval_colored(pleth_apply(f, a), s));
    }
}

TEST(Pairing, HallAndSchurOrthonormality) {
    int r = 3;
    std::vector<Multipartition> all;
    for (int n = 0; n <= 3; ++n)
        for (auto& m : multipartitions(n, r)) all.push_back(m);
    for (auto& a : all)
        for (auto& b : all) EXPECT_EQ(hall(schur(a), schur(b)), RatFunc(a == b ? 1 : 0));
    EXPECT_EQ(hall(MultiSymFunc::p(r, 2, 0), MultiSymFunc::p(r, 2, 0)), RatFunc(2));
}

TEST(Pairing, SymmetryAndAdjoints) {
    int r = 3;
    std::mt19937 rng(6);
    PlethMatrix s = PlethMatrix::sigma(r), si = PlethMatrix::sigma(r, -1);
    for (int k = 0; k < 6; ++k) {
        MultiSymFunc f = random_sym(rng, r, 3), g = random_sym(rng, r, 3), h = random_sym(rng, r, 3);
        EXPECT_EQ(qt_pairing(f, g), qt_pairing(g, f));
        EXPECT_EQ(hall(pleth_apply(f, s), g), hall(f, pleth_apply(g, si)));
        EXPECT_EQ(star_pairing(pleth_apply(f, s), g), star_pairing(f, pleth_apply(g, s)));
        EXPECT_EQ(hall(f * g, h), hall(g, skew(f, h)));
    }
}

TEST(Pairing, TranslationAdjunction) {
    // <f, Omega[-X^(i) z] g>' = <T[(1 - q sigma)(1 - t sigma^{-1}) X^(-i) z] f, g>'
    int r = 3;
    RatFunc q = RatFunc::var(kQ), t = RatFunc::var(kT), z = RatFunc::var(zgen(0));
    PlethMatrix a = PlethMatrix::one_minus(r, q, 1) * PlethMatrix::one_minus(r, t, -1);
    std::mt19937 rng(7);
    for (int k = 0; k < 4; ++k) {
        MultiSymFunc f = random_sym(rng, r, 3), g = random_sym(rng, r, 2);
        for (int i = 0; i < r; ++i) {
            std::vector<RatFunc> c(r);
            c[i] = -z;
            MultiSymFunc lhs_g = omega_series(c, 3) * g;
            std::vector<RatFunc> shift = pleth_column(a, -i);
            for (auto& x : shift) x *= z;
            EXPECT_EQ(qt_pairing(f, lhs_g), qt_pairing(pleth_translate(f, shift), g)) << i;
        }
    }
}

TEST(Omega, SeriesIdentities) {
    int r = 3;
    std::vector<RatFunc> one{RatFunc(1), RatFunc(), RatFunc()};
    EXPECT_EQ(omega_series(one, 2), MultiSymFunc::one(r) + h_n(r, 1, 0) + h_n(r, 2, 0));
    std::vector<RatFunc> a{R("q"), R("1/(1-t)"), R("u")}, b{R("-1"), R("q*t"), R("0")};
    std::vector<RatFunc> na, ab;
    for (int i = 0; i < r; ++i) {
        na.push_back(-a[i]);
        ab.push_back(a[i] + b[i]);
    }
    EXPECT_EQ(omega_series(a, 4).mul_trunc(omega_series(na, 4), 4), MultiSymFunc::one(r));
    EXPECT_EQ(omega_series(a, 4).mul_trunc(omega_series(b, 4), 4), omega_series(ab, 4));
}

TEST(Kernel, DegreeZeroAndSymmetry) {
    TwoAlphabetElem k = cauchy_kernel(3, 3);
    ASSERT_TRUE(k.terms().count(PIndex{}));
    EXPECT_EQ(k.terms().at(PIndex{}), MultiSymFunc::one(3));
    EXPECT_TRUE((k - k.swap()).is_zero());
}

TEST(Kernel, ClassicalRankOne) {
    // Omega[-XY/((1-q)(1-t))] to degree 2, written out by hand
    TwoAlphabetElem k = cauchy_kernel(1, 2);
    TwoAlphabetElem e(1, 2);
    MultiSymFunc one = MultiSymFunc::one(1), p1 = MultiSymFunc::p(1, 1, 0), p2 = MultiSymFunc::p(1, 2, 0);
    e.add(one, one);
    e.add(p1, p1.scale(R("-1/((1-q)*(1-t))")));
    e.add(p1 * p1, (p1 * p1).scale(R("1/(2*(1-q)^2*(1-t)^2)")));
    e.add(p2, p2.scale(R("-1/(2*(1-q^2)*(1-t^2))")));
    EXPECT_TRUE((k - e).is_zero());
}
