// Independent oracle for one-color modified Macdonald polynomials: solves the
// triangularity conditions on explicit polynomials in n variables.
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "wm/partitions.hpp"
#include "wm/symfunc.hpp"

namespace oracle {

using wm::Partition;
using wm::RatFunc;

using Exps = std::vector<int>;
using Poly = std::map<Exps, RatFunc>;

inline Poly power_sum(int k, int nvars) {
    Poly p;
    for (int i = 0; i < nvars; ++i) {
        Exps e(nvars, 0);
        e[i] = k;
        p[e] = RatFunc(1);
    }
    return p;
}

inline Poly times(const Poly& a, const Poly& b) {
    Poly out;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) {
            Exps e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            RatFunc& c = out[e];
            c = c + ca * cb;
        }
    return out;
}

inline Poly p_rho(const Partition& rho, int nvars) {
    Exps zero(nvars, 0);
    Poly out{{zero, RatFunc(1)}};
    for (int k : rho.parts()) out = times(out, power_sum(k, nvars));
    return out;
}

// Reduced row echelon solve of a consistent system with a unique solution.
inline std::vector<RatFunc> solve(std::vector<std::vector<RatFunc>> rows, int nvars) {
    int row = 0;
    std::vector<int> pivots;
    for (int c = 0; c < nvars; ++c) {
        int p = row;
        while (p < int(rows.size()) && rows[p][c].is_zero()) ++p;
        if (p == int(rows.size())) continue;
        std::swap(rows[p], rows[row]);
        RatFunc inv = rows[row][c].inv();
        for (auto& x : rows[row]) x = x * inv;
        for (int i = 0; i < int(rows.size()); ++i) {
            if (i == row || rows[i][c].is_zero()) continue;
            RatFunc f = rows[i][c];
            for (int j = 0; j <= nvars; ++j) rows[i][j] = rows[i][j] - f * rows[row][j];
        }
        pivots.push_back(c);
        ++row;
    }
    if (row != nvars) throw std::runtime_error("oracle system is not uniquely solvable");
    for (int i = row; i < int(rows.size()); ++i)
        if (!rows[i][nvars].is_zero()) throw std::runtime_error("oracle system is inconsistent");
    std::vector<RatFunc> x(nvars);
    for (int i = 0; i < row; ++i) x[pivots[i]] = rows[i][nvars];
    return x;
}

// H_lambda in the power-sum basis, keyed by rho.
inline std::map<Partition, RatFunc> modified_macdonald(const Partition& lambda) {
    int n = lambda.size();
    const auto& rhos = wm::partitions_of(n);
    int m = int(rhos.size());
    RatFunc q = RatFunc::var(wm::kQ), t = RatFunc::var(wm::kT);
    Partition lc = lambda.conjugate();
    std::vector<Poly> ps;
    for (auto& rho : rhos) ps.push_back(p_rho(rho, n));
    std::vector<std::vector<RatFunc>> rows;
    auto sorted_partition = [](Exps e) {
        std::sort(e.rbegin(), e.rend());
        return Partition(e);
    };
    // coefficient of x^e in sum_rho c_rho w_rho p_rho must vanish when the exponent partition is outside `allowed`
    auto add_support = [&](const std::vector<RatFunc>& w, const Partition& bound) {
        std::map<Exps, std::vector<RatFunc>> coeff;
        for (int j = 0; j < m; ++j)
            for (auto& [e, c] : ps[j]) {
                auto& v = coeff[e];
                if (v.empty()) v.assign(m + 1, RatFunc(0));
                v[j] = v[j] + c * w[j];
            }
        for (auto& [e, v] : coeff)
            if (!wm::dominated(sorted_partition(e), bound)) rows.push_back(v);
    };
    std::vector<RatFunc> wt(m), wq(m);
    for (int j = 0; j < m; ++j) {
        RatFunc a(1), b(1);
        for (int k : rhos[j].parts()) {
            a = a * (RatFunc(1) - t.inv().pow(k));
            b = b * (RatFunc(1) - q.pow(k));
        }
        wt[j] = a;
        int sign = (n - rhos[j].length()) % 2 ? -1 : 1;  // omega on p_rho
        wq[j] = b * RatFunc(sign);
    }
    add_support(wt, lambda);
    add_support(wq, lc);
    Exps top(n, 0);
    top[0] = n;
    std::vector<RatFunc> norm(m + 1, RatFunc(0));
    for (int j = 0; j < m; ++j) {
        auto it = ps[j].find(top);
        if (it != ps[j].end()) norm[j] = it->second;
    }
    norm[m] = RatFunc(1);
    rows.push_back(norm);
    auto x = solve(rows, m);
    std::map<Partition, RatFunc> out;
    for (int j = 0; j < m; ++j)
        if (!x[j].is_zero()) out[rhos[j]] = x[j];
    return out;
}

}  // namespace oracle
