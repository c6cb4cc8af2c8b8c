#include <functional>

#include <gtest/gtest.h>

#include "wm/partitions.hpp"

using namespace wm;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
RatFunc R(const char* s) { return parse_ratfunc(s); }

// r-core test by hook lengths: no hook length divisible by r.
bool is_core_by_hooks(const Partition& l, int r) {
    Partition c = l.conjugate();
    for (auto& x : l.boxes()) {
        int hook = (l[x.b] - x.a - 1) + (c[x.a] - x.b - 1) + 1;
        if (hook % r == 0) return false;
    }
    return true;
}

// Remove one rim hook of length r if there is one (walk the outer boundary).
bool remove_rim_hook(Partition& l, int r) {
    Partition c = l.conjugate();
    for (auto& x : l.boxes()) {
        int arm = l[x.b] - x.a - 1, leg = c[x.a] - x.b - 1;
        if (arm + leg + 1 != r) continue;
        // the rim hook from (x.a + arm, x.b) to (x.a, x.b + leg): shrink rows x.b..x.b+leg
        std::vector<int> p = l.parts();
        for (int row = x.b; row <= x.b + leg; ++row) {
            int next = row + 1 <= x.b + leg ? l[row + 1] - 1 : x.a;
            p[row] = next;
        }
        l = Partition(p);
        return true;
    }
    return false;
}

}  // namespace

TEST(Maya, FigureExample) {
    MayaDiagram m = maya_of(P({4, 2, 2}));
    for (int n : {2, 1, -2, -3, -5}) EXPECT_TRUE(m.black(n)) << n;
    for (int n : {3, 0, -1, -4}) EXPECT_FALSE(m.black(n)) << n;
    EXPECT_TRUE(m.black(-6));
    EXPECT_FALSE(m.black(7));
    EXPECT_EQ(m.charge(), 0);
    EXPECT_EQ(maya_of(Partition()), MayaDiagram());
}

TEST(Maya, RoundTripAndCharge) {
    for (int n = 0; n <= 8; ++n)
        for (auto& l : partitions_of(n)) {
            MayaDiagram m = maya_of(l);
            EXPECT_EQ(m.charge(), 0);
            EXPECT_EQ(partition_of(m), l);
        }
    EXPECT_THROW(partition_of(MayaDiagram({0})), std::invalid_argument);
}

TEST(CoreQuot, RunningExample) {
    CoreQuotient cq = core_quot(P({4, 2, 2}), 3);
    EXPECT_EQ(cq.quot, (Multipartition{P({}), P({}), P({1, 1})}));
    EXPECT_EQ(cq.core, P({1, 1}));
    EXPECT_EQ(cq.charges.charges, (std::vector<int>{0, 1, -1}));
    EXPECT_EQ(from_core_quot(cq.charges, cq.quot), P({4, 2, 2}));
}

TEST(CoreQuot, EmptyPartition) {
    for (int r = 1; r <= 4; ++r) {
        CoreQuotient cq = core_quot(Partition(), r);
        EXPECT_TRUE(cq.core.empty());
        EXPECT_EQ(cq.quot, Multipartition(r));
        EXPECT_EQ(cq.charges, CoreLabel::zero(r));
    }
}

TEST(CoreQuot, ExhaustiveBijectionAndChargeIdentity) {
    for (int r : {2, 3, 4})
        for (int n = 0; n <= 8; ++n)
            for (auto& l : partitions_of(n)) {
                CoreQuotient cq = core_quot(l, r);
                int sum = 0;
                for (int c : cq.charges.charges) sum += c;
                EXPECT_EQ(sum, 0);
                EXPECT_EQ(from_core_quot(cq.charges, cq.quot), l);
                EXPECT_EQ(l.size(), cq.core.size() + r * multipartition_size(cq.quot));
                EXPECT_TRUE(is_core_by_hooks(cq.core, r));
                // independent core: strip rim hooks until none remain
                Partition s = l;
                while (remove_rim_hook(s, r)) {
                }
                EXPECT_EQ(s, cq.core) << l.str();
                // #A_i - #R_i = delta_{i,0} + c_{i-1} - c_i by box enumeration
                std::vector<int> diff(r, 0);
                for (auto& x : l.addable()) ++diff[color(x, r)];
                for (auto& x : l.removable()) --diff[color(x, r)];
                for (int i = 0; i < r; ++i)
                    EXPECT_EQ(diff[i], (i == 0) + cq.charges.charges[mod(i - 1, r)] - cq.charges.charges[i]);
            }
}

TEST(PermAct, RunningExample) {
    Partition l = P({4, 2, 2});
    EXPECT_EQ(w0_act(l, 3), P({6, 4}));
    EXPECT_EQ(sigma_act(l, 3), P({6, 4, 1}));
    EXPECT_EQ(sigma_act(l, 3, 2), P({5, 3}));
    EXPECT_EQ(perm_act(l, std::vector<int>{0, 1, 2}), l);
}

TEST(PermAct, GroupActionAndColorBoxes) {
    int r = 3;
    std::vector<std::vector<int>> perms;
    std::vector<int> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
        // (a o b)(i) = a(b(i)); m_i(a(b lambda)) = m_{a(i)}(b lambda) = m_{b(a(i))}(lambda)
        std::vector<int> c(r);
        for (int i = 0; i < r; ++i) c[i] = b[a[i]];
        return c;
    };
    auto color_boxes = [&](const Partition& l, int k) {
        std::vector<Box> out;
        for (auto& x : l.boxes())
            if (color(x, r) == k) out.push_back(x);
        return out;
    };
    for (int n = 0; n <= 8; ++n)
        for (auto& l : partitions_of(n)) {
            for (auto& a : perms)
                for (auto& b : perms)
                    EXPECT_EQ(perm_act(perm_act(l, b), a), perm_act(l, compose(a, b)));
            EXPECT_EQ(color_boxes(w0_act(l, r), 0), color_boxes(l, 0));
            for (auto& pi : perms) {
                EXPECT_EQ(core_label(perm_act(l, pi), r), perm_act(core_label(l, r), pi));
                // pi preserving {0..k-1} preserves color-k boxes
                for (int k = 1; k < r; ++k) {
                    bool stable = true;
                    for (int i = 0; i < k; ++i)
                        if (pi[i] >= k) stable = false;
                    if (stable) EXPECT_EQ(color_boxes(perm_act(l, pi), k), color_boxes(l, k));
                }
            }
        }
}

TEST(CoreQuot, AddingOneBoxOfEachColorKeepsCore) {
    int r = 3;
    for (int n = 0; n <= 6; ++n)
        for (auto& l : partitions_of(n)) {
            // add boxes of colors 0, 1, 2 in every admissible order, depth-first
            std::function<void(const Partition&, std::vector<bool>)> rec = [&](const Partition& m,
                                                                               std::vector<bool> used) {
                bool all = true;
                for (bool u : used) all = all && u;
                if (all) {
                    EXPECT_EQ(core_label(m, r), core_label(l, r));
                    return;
                }
                for (auto& x : m.addable())
                    if (!used[color(x, r)]) {
                        auto u2 = used;
                        u2[color(x, r)] = true;
                        rec(m.add_box(x), u2);
                    }
            };
            rec(l, std::vector<bool>(r, false));
        }
}

TEST(Enumerate, Counts) {
    EXPECT_EQ(enumerate(CoreLabel::zero(3), 0), std::vector<Partition>{Partition()});
    EXPECT_EQ(enumerate(CoreLabel::zero(3), 1).size(), 3u);
    std::vector<size_t> counts{1, 3, 9, 22, 51};
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(enumerate(CoreLabel::zero(3), n).size(), counts[n]);
    auto l = enumerate(core_label(P({1, 1}), 3), 2);
    EXPECT_EQ(l.size(), 9u);
    EXPECT_NE(std::find(l.begin(), l.end(), P({4, 2, 2})), l.end());
    for (auto& m : l) EXPECT_EQ(core_quot(m, 3).core, P({1, 1}));
    EXPECT_TRUE(std::is_sorted(l.begin(), l.end()));
}

TEST(CharSums, EmptyAndExample) {
    CharSums e = char_sums(Partition(), 3);
    EXPECT_EQ(e.D[0], RatFunc(-1));
    EXPECT_TRUE(e.D[1].is_zero());
    EXPECT_TRUE(e.D[2].is_zero());
    // colors of (4,2,2): 0 at (0,0), (3,0), (1,1); 1 at (2,0), (0,1), (1,2); 2 at (1,0), (0,2)
    CharSums cs = char_sums(P({4, 2, 2}), 3);
    EXPECT_EQ(cs.B[0], R("1+q^3+q*t"));
    EXPECT_EQ(cs.B[1], R("q^2+t+q*t^2"));
    EXPECT_EQ(cs.B[2], R("q+t^2"));
}

TEST(CharSums, CornerFormulaAndTotal) {
    RatFunc q = RatFunc::var(kQ), t = RatFunc::var(kT);
    for (int r : {1, 2, 3, 4})
        for (int n = 0; n <= 7; ++n)
            for (auto& l : partitions_of(n)) {
                CharSums cs = char_sums(l, r);
                EXPECT_EQ(cs.D, d_from_corners(l, r));
                EXPECT_EQ(cs.D.total(), (RatFunc(1) - q) * (RatFunc(1) - t) * cs.B.total() - RatFunc(1));
            }
}

TEST(CharSums, GeometricComponentsMatchSeries) {
    for (int r : {1, 2, 3, 4}) {
        ColoredCharSum g = geometric(r);
        EXPECT_EQ(g.total(), R("1/((1-q)*(1-t))"));
        TruncSeries whole = TruncSeries::expand(R("1/((1-q)*(1-t))"), {kQ, kT}, 12);
        for (int i = 0; i < r; ++i) {
            TruncSeries part = TruncSeries::expand(g[i], {kQ, kT}, 12);
            for (auto& [e, c] : whole.terms()) {
                bool mine = mod(e[1] - e[0], r) == i;
                auto it = part.terms().find(e);
                if (mine) {
                    ASSERT_NE(it, part.terms().end());
                    EXPECT_EQ(it->second, c);
                } else {
                    EXPECT_EQ(it, part.terms().end());
                }
            }
        }
    }
}

TEST(Dominance, CoreRestricted) {
    EXPECT_TRUE(dominated(P({2, 1, 1}), P({2, 2})));
    EXPECT_FALSE(dominated(P({3, 3}), P({4, 1, 1})));
    EXPECT_FALSE(dominated(P({4, 1, 1}), P({3, 3})));
    // same size, different cores
    EXPECT_TRUE(dominated(P({2, 1}), P({3})));
    EXPECT_FALSE(dominated_r(P({2, 1}), P({3}), 2));
    EXPECT_TRUE(dominated_r(P({1, 1, 1}), P({3}), 3));
}
