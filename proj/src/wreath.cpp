#include "wm/wreath.hpp"

#include <algorithm>
#include <future>
#include <mutex>
#include <random>
#include <stdexcept>

#include "modp.hpp"

namespace wm {

namespace {

RatFunc q_() { return RatFunc::var(kQ); }
RatFunc t_() { return RatFunc::var(kT); }

Multipartition empty_multi(int r) { return Multipartition(r); }

Multipartition row_in_color0(int n, int r) {
    Multipartition m(r);
    if (n > 0) m[0] = Partition({n});
    return m;
}

}  // namespace

MultiSymFunc modified_e(int r, int n, int p) {
    return pleth_apply(e_n(r, n, p), PlethMatrix::one_minus_inv(r, t_().inv(), -1));
}

MultiSymFunc modified_h(int r, int n, int p) {
    return pleth_apply(h_n(r, n, p), PlethMatrix::one_minus_inv(r, q_(), -1));
}

MultiSymFunc modified_eh(const Multipartition& g, Basis kind) {
    int r = int(g.size());
    if (kind != Basis::e && kind != Basis::h) throw std::invalid_argument("modified_eh: kind must be e or h");
    PlethMatrix a = kind == Basis::e ? PlethMatrix::one_minus_inv(r, t_().inv(), -1)
                                     : PlethMatrix::one_minus_inv(r, q_(), -1);
    return pleth_apply(basis_element(r, kind, g), a);
}

bool satisfies_definition(const MultiSymFunc& h, const Partition& lambda, int r, std::string* why) {
    auto cq = core_quot(lambda, r);
    int n = multipartition_size(cq.quot);
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (h.max_degree() > n || h.homogeneous(n) != h) return fail("not homogeneous of degree |quot|");
    auto upper = to_schur(pleth_apply(h, PlethMatrix::one_minus(r, q_(), -1)));
    for (auto& [g, c] : upper) {
        Partition mu = from_core_quot(cq.charges, g);
        if (!dominated_r(lambda, mu, r)) return fail("q-side support contains " + mu.str());
    }
    auto lower = to_schur(pleth_apply(h, PlethMatrix::one_minus(r, t_().inv(), -1)));
    for (auto& [g, c] : lower) {
        Partition mu = from_core_quot(cq.charges, g);
        if (!dominated_r(mu, lambda, r)) return fail("t-side support contains " + mu.str());
    }
    auto s = to_schur(h);
    auto it = s.find(row_in_color0(n, r));
    if (it == s.end() || !it->second.is_one()) return fail("coefficient of s_n[X^(0)] is not 1");
    return true;
}

// ---- sampled construction ----

namespace {

// Dense change-of-basis data between multi-Schur and power sums in degree n.
struct Frame {
    int r = 1, n = 0, d = 0;
    std::vector<Multipartition> basis;
    std::map<Multipartition, int> bindex;
    std::vector<PIndex> pkeys;
    std::map<PIndex, int> pindex;
    modp::Matrix s2p, p2s;  // s2p[p][s], p2s[s][p]

    Frame(int r_, int n_) : r(r_), n(n_) {
        basis = multipartitions(n, r);
        d = int(basis.size());
        for (int i = 0; i < d; ++i) bindex[basis[i]] = i;
        for (auto& m : basis) {
            PIndex k = pindex_of(m);
            pindex[k] = int(pkeys.size());
            pkeys.push_back(k);
        }
        modp::Point any;
        s2p.assign(d, std::vector<uint64_t>(d, 0));
        p2s.assign(d, std::vector<uint64_t>(d, 0));
        for (int s = 0; s < d; ++s) {
            MultiSymFunc f = schur(basis[s]);
            for (auto& [k, c] : f.terms()) s2p[pindex.at(k)][s] = *modp::eval(c, any);
        }
        for (int p = 0; p < d; ++p)
            for (auto& [g, c] : to_schur(MultiSymFunc::p(r, pkeys[p]))) p2s[bindex.at(g)][p] = *modp::eval(c, any);
    }
};

modp::Matrix matmul(const modp::Matrix& a, const modp::Matrix& b) {
    size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    modp::Matrix c(n, std::vector<uint64_t>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            uint64_t x = a[i][l];
            if (!x) continue;
            for (size_t j = 0; j < m; ++j) c[i][j] = modp::add(c[i][j], modp::mul(x, b[l][j]));
        }
    return c;
}

// Matrix of the plethysm by a in the multi-Schur basis, at the point x.
std::optional<modp::Matrix> schur_pleth_matrix(const Frame& fr, const PlethMatrix& a, const modp::Point& x) {
    int r = fr.r;
    // images of p_m[X^(c)]
    std::vector<std::vector<std::vector<uint64_t>>> img(fr.n + 1, std::vector<std::vector<uint64_t>>(r));
    for (int m = 1; m <= fr.n; ++m) {
        modp::Point xm = x.adams(m);
        for (int c = 0; c < r; ++c) {
            img[m][c].resize(r);
            for (int j = 0; j < r; ++j) {
                auto v = modp::eval(a.at(j, c), xm);
                if (!v) return std::nullopt;
                img[m][c][j] = *v;
            }
        }
    }
    modp::Matrix pl(fr.d, std::vector<uint64_t>(fr.d, 0));
    for (int col = 0; col < fr.d; ++col) {
        std::map<PIndex, uint64_t> cur{{PIndex{}, 1}};
        for (int code : fr.pkeys[col]) {
            int m = pdeg(code), c = pcolor(code);
            std::map<PIndex, uint64_t> next;
            for (auto& [k, v] : cur)
                for (int j = 0; j < r; ++j) {
                    if (!img[m][c][j]) continue;
                    PIndex nk = pindex_merge(k, PIndex{pcode(m, j)});
                    auto& slot = next[nk];
                    slot = modp::add(slot, modp::mul(v, img[m][c][j]));
                }
            cur = std::move(next);
        }
        for (auto& [k, v] : cur) pl[fr.pindex.at(k)][col] = v;
    }
    return matmul(fr.p2s, matmul(pl, fr.s2p));
}

struct Sampler {
    const Frame& fr;
    std::vector<Partition> lambdas;
    std::vector<int> bidx;  // basis position of quot(lambda_i)
    int b0 = 0;
    PlethMatrix ratio, hat;

    Sampler(const Frame& f, const CoreLabel& core) : fr(f) {
        int r = fr.r;
        lambdas = enumerate(core, fr.n);
        for (auto& l : lambdas) bidx.push_back(fr.bindex.at(quotient(l, r)));
        b0 = fr.bindex.at(row_in_color0(fr.n, r));
        hat = PlethMatrix::one_minus_inv(r, q_(), -1);
        ratio = PlethMatrix::one_minus(r, t_().inv(), -1) * hat;
    }

    // Schur coefficients of every H_lambda at (q, t) = (a, b); nullopt at unlucky points.
    std::optional<std::vector<std::vector<uint64_t>>> at(uint64_t a, uint64_t b) const {
        modp::Point x;
        x.set(kQ, a);
        x.set(kT, b);
        auto T = schur_pleth_matrix(fr, ratio, x);
        auto A = schur_pleth_matrix(fr, hat, x);
        if (!T || !A) return std::nullopt;
        int d = int(lambdas.size());
        // R is T restricted to the lambda order and reversed; R = L U without pivoting.
        modp::Matrix R(d, std::vector<uint64_t>(d));
        for (int x1 = 0; x1 < d; ++x1)
            for (int y = 0; y < d; ++y) R[x1][y] = (*T)[bidx[d - 1 - x1]][bidx[d - 1 - y]];
        for (int k = 0; k < d; ++k) {
            if (!R[k][k]) return std::nullopt;
            uint64_t iv = modp::inv(R[k][k]);
            for (int i = k + 1; i < d; ++i) {
                if (!R[i][k]) continue;
                uint64_t f = modp::mul(R[i][k], iv);
                for (int j = k; j < d; ++j) R[i][j] = modp::sub(R[i][j], modp::mul(f, R[k][j]));
            }
        }
        // columns of U^{-1}
        std::vector<uint64_t> dinv(d);
        for (int k = 0; k < d; ++k) dinv[k] = modp::inv(R[k][k]);
        modp::Matrix W(d, std::vector<uint64_t>(d, 0));
        for (int col = 0; col < d; ++col) {
            W[col][col] = dinv[col];
            for (int i = col - 1; i >= 0; --i) {
                uint64_t s = 0;
                for (int j = i + 1; j <= col; ++j) s = modp::add(s, modp::mul(R[i][j], W[j][col]));
                W[i][col] = modp::mul(modp::neg(s), dinv[i]);
            }
        }
        std::vector<std::vector<uint64_t>> out(d);
        for (int i = 0; i < d; ++i) {
            int col = d - 1 - i;
            std::vector<uint64_t> g(fr.d, 0);
            for (int y = 0; y <= col; ++y) g[bidx[d - 1 - y]] = W[y][col];
            std::vector<uint64_t> h(fr.d, 0);
            for (int s = 0; s < fr.d; ++s) {
                uint64_t acc = 0;
                for (int j = 0; j < fr.d; ++j)
                    if (g[j]) acc = modp::add(acc, modp::mul((*A)[s][j], g[j]));
                h[s] = acc;
            }
            if (!h[b0]) return std::nullopt;
            uint64_t iv = modp::inv(h[b0]);
            for (auto& v : h) v = modp::mul(v, iv);
            out[i] = std::move(h);
        }
        return out;
    }
};

// Bivariate interpolation of (qt)^shift times every coefficient on a (deg+1) x (deg+1)
// grid. Returns poly[lambda][schur] as coefficient grids c[i][j] of q^i t^j.
using Grid = std::vector<std::vector<uint64_t>>;

std::optional<std::vector<std::vector<Grid>>> interpolate_all(const Sampler& s, int deg, int shift) {
    int d = int(s.lambdas.size()), db = s.fr.d;
    std::vector<uint64_t> qs;
    // rows[i][lambda][schur] = coefficients in t for q = qs[i]
    std::vector<std::vector<std::vector<std::vector<uint64_t>>>> rows;
    uint64_t a = 1000003;
    while (int(qs.size()) <= deg) {
        a += 7919;
        std::vector<uint64_t> ts;
        std::vector<std::vector<std::vector<uint64_t>>> vals;  // [point][lambda][schur]
        uint64_t b = 2000003;
        int tries = 0;
        while (int(ts.size()) <= deg && tries < 4 * (deg + 1)) {
            b += 104729;
            ++tries;
            auto v = s.at(a, b);
            if (!v) continue;
            uint64_t m = modp::pow(modp::mul(a, b), shift);
            for (auto& row : *v)
                for (auto& x : row) x = modp::mul(x, m);
            ts.push_back(b);
            vals.push_back(std::move(*v));
        }
        if (int(ts.size()) <= deg) continue;
        std::vector<std::vector<std::vector<uint64_t>>> row(d, std::vector<std::vector<uint64_t>>(db));
        std::vector<uint64_t> ys(deg + 1);
        modp::Interpolator in_t(ts);
        for (int l = 0; l < d; ++l)
            for (int g = 0; g < db; ++g) {
                for (int p = 0; p <= deg; ++p) ys[p] = vals[p][l][g];
                row[l][g] = in_t(ys);
            }
        qs.push_back(a);
        rows.push_back(std::move(row));
        if (a > 1000003 + 7919ull * 64 * (deg + 1)) return std::nullopt;
    }
    std::vector<std::vector<Grid>> out(d, std::vector<Grid>(db, Grid(deg + 1, std::vector<uint64_t>(deg + 1))));
    std::vector<uint64_t> ys(deg + 1);
    modp::Interpolator in_q(qs);
    for (int l = 0; l < d; ++l)
        for (int g = 0; g < db; ++g)
            for (int j = 0; j <= deg; ++j) {
                for (int i = 0; i <= deg; ++i) ys[i] = rows[i][l][g][j];
                auto c = in_q(ys);
                for (int i = 0; i <= deg; ++i) out[l][g][i][j] = c[i];
            }
    return out;
}

uint64_t eval_grid(const Grid& c, uint64_t a, uint64_t b) {
    uint64_t s = 0, ai = 1;
    for (auto& row : c) {
        uint64_t bj = 1, rs = 0;
        for (uint64_t x : row) {
            rs = modp::add(rs, modp::mul(x, bj));
            bj = modp::mul(bj, b);
        }
        s = modp::add(s, modp::mul(rs, ai));
        ai = modp::mul(ai, a);
    }
    return s;
}

RatFunc grid_to_poly(const Grid& c, int shift) {
    std::vector<Term> terms;
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c[i].size(); ++j) {
            if (!c[i][j]) continue;
            Monomial m;
            m.e[kQ] = int16_t(i);
            m.e[kT] = int16_t(j);
            terms.push_back(Term{m, modp::lift(c[i][j])});
        }
    Monomial lo;
    lo.e[kQ] = lo.e[kT] = int16_t(shift);
    return RatFunc::normalize(MultiPoly::from_terms(std::move(terms)), MultiPoly::monomial(lo));
}

bool sampled_schur(const CoreLabel& core, int n, std::vector<std::map<Multipartition, RatFunc>>& out) {
    Frame fr(core.r(), n);
    Sampler s(fr, core);
    std::mt19937_64 rng(0x5eed + n);
    for (int deg = 8; deg <= 128; deg *= 2) {
        int shift = deg / 2;
        auto polys = interpolate_all(s, deg, shift);
        if (!polys) return false;
        bool ok = true;
        for (int check = 0; check < 3 && ok; ++check) {
            uint64_t a = rng() % modp::kP, b = rng() % modp::kP;
            auto v = s.at(a, b);
            if (!v) continue;
            uint64_t m = modp::pow(modp::mul(a, b), shift);
            for (size_t l = 0; l < s.lambdas.size() && ok; ++l)
                for (int g = 0; g < fr.d && ok; ++g)
                    if (eval_grid((*polys)[l][g], a, b) != modp::mul((*v)[l][g], m)) ok = false;
        }
        if (!ok) continue;
        out.assign(s.lambdas.size(), {});
        for (size_t l = 0; l < s.lambdas.size(); ++l)
            for (int g = 0; g < fr.d; ++g) {
                RatFunc c = grid_to_poly((*polys)[l][g], shift);
                if (!c.is_zero()) out[l][fr.basis[g]] = c;
            }
        return true;
    }
    return false;
}

// ---- exact construction ----

using RMatrix = std::vector<std::vector<RatFunc>>;

MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly g = gcd(a, b);
    return *(a * b).divide_exact(g);
}

// Nullspace of a matrix over Q(q, t) by fraction-free elimination on the
// column-cleared polynomial matrix. Returns the nullity and, if it is 1, the vector.
int exact_nullspace(const RMatrix& m, std::vector<RatFunc>* vec) {
    int rows = int(m.size()), cols = rows ? int(m[0].size()) : 0;
    std::vector<MultiPoly> scale(cols, MultiPoly(1));
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i)
            if (!m[i][j].is_zero()) scale[j] = poly_lcm(scale[j], m[i][j].den());
    std::vector<std::vector<MultiPoly>> a(rows, std::vector<MultiPoly>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!m[i][j].is_zero()) a[i][j] = m[i][j].num() * *scale[j].divide_exact(m[i][j].den());
    MultiPoly prev(1);
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                MultiPoly v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                auto q = v.divide_exact(prev);
                if (!q) throw arith_error("fraction-free step not exact");
                a[i][j] = std::move(*q);
            }
            a[i][c] = MultiPoly();
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }
    int nullity = cols - r;
    if (vec && nullity == 1) {
        int free = 0;
        while (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) ++free;
        std::vector<RatFunc> x(cols);
        x[free] = RatFunc(1);
        for (int i = r - 1; i >= 0; --i) {
            RatFunc s;
            for (int j = pivots[i] + 1; j < cols; ++j)
                if (!x[j].is_zero() && !a[i][j].is_zero()) s += RatFunc(a[i][j]) * x[j];
            x[pivots[i]] = -s / RatFunc(a[i][pivots[i]]);
        }
        for (int j = 0; j < cols; ++j) x[j] = x[j] * RatFunc(scale[j]);
        *vec = std::move(x);
    }
    return nullity;
}

void exact_schur(const CoreLabel& core, int n, std::vector<std::map<Multipartition, RatFunc>>& out,
                 std::vector<int>& dims) {
    int r = core.r();
    auto lambdas = enumerate(core, n);
    auto basis = multipartitions(n, r);
    std::map<Multipartition, int> bindex;
    for (size_t i = 0; i < basis.size(); ++i) bindex[basis[i]] = int(i);
    std::map<Partition, std::vector<RatFunc>> hhat, ehat;
    auto column = [&](const MultiSymFunc& f) {
        std::vector<RatFunc> v(basis.size());
        for (auto& [g, c] : to_schur(f)) v[bindex.at(g)] = c;
        return v;
    };
    for (auto& mu : lambdas) {
        auto qmu = quotient(mu, r);
        hhat[mu] = column(modified_eh(qmu, Basis::h));
        ehat[mu] = column(modified_eh(qmu, Basis::e));
    }
    out.assign(lambdas.size(), {});
    dims.assign(lambdas.size(), 0);
    int b0 = bindex.at(row_in_color0(n, r));
    for (size_t l = 0; l < lambdas.size(); ++l) {
        std::vector<Partition> up, down;
        for (auto& mu : lambdas) {
            if (dominated_r(lambdas[l], mu, r)) up.push_back(mu);
            if (dominated_r(mu, lambdas[l], r)) down.push_back(mu);
        }
        RMatrix m(basis.size(), std::vector<RatFunc>(up.size() + down.size()));
        for (size_t i = 0; i < basis.size(); ++i) {
            for (size_t j = 0; j < up.size(); ++j) m[i][j] = hhat[up[j]][i];
            for (size_t j = 0; j < down.size(); ++j) m[i][up.size() + j] = -ehat[down[j]][i];
        }
        std::vector<RatFunc> x;
        dims[l] = exact_nullspace(m, &x);
        if (dims[l] != 1)
            throw arith_error("intersection for " + lambdas[l].str() + " has dimension " + std::to_string(dims[l]));
        std::vector<RatFunc> h(basis.size());
        for (size_t j = 0; j < up.size(); ++j)
            if (!x[j].is_zero())
                for (size_t i = 0; i < basis.size(); ++i)
                    if (!hhat[up[j]][i].is_zero()) h[i] += x[j] * hhat[up[j]][i];
        if (h[b0].is_zero()) throw arith_error("H has no s_n[X^(0)] term");
        RatFunc iv = h[b0].inv();
        for (size_t i = 0; i < basis.size(); ++i)
            if (!h[i].is_zero()) out[l][basis[i]] = h[i] * iv;
    }
}

}  // namespace

int HTable::index(const Partition& lambda) const {
    auto it = std::lower_bound(lambdas.begin(), lambdas.end(), lambda);
    return it != lambdas.end() && *it == lambda ? int(it - lambdas.begin()) : -1;
}

std::vector<RatFunc> HTable::expand(const MultiSymFunc& f) const {
    std::vector<RatFunc> c(lambdas.size());
    for (size_t i = 0; i < lambdas.size(); ++i) c[i] = hall(dual[i], f);
    return c;
}

std::vector<RatFunc> HTable::expand_dag(const MultiSymFunc& f) const {
    std::vector<RatFunc> c(lambdas.size());
    for (size_t i = 0; i < lambdas.size(); ++i) c[i] = hall(dual_dag[i], f);
    return c;
}

HTable compute_H(const CoreLabel& core, int n, HMethod method) {
    int r = core.r();
    HTable t;
    t.r = r;
    t.n = n;
    t.core = core;
    t.lambdas = enumerate(core, n);
    t.basis = multipartitions(n, r);
    t.method = method;
    bool done = false;
    if (n == 0) {
        t.schur.assign(1, {{empty_multi(r), RatFunc(1)}});
        t.intersection_dim.assign(1, 1);
        done = true;
    } else if (method == HMethod::sampled) {
        if (sampled_schur(core, n, t.schur)) {
            done = true;
            for (size_t i = 0; i < t.lambdas.size() && done; ++i)
                done = satisfies_definition(from_basis(r, t.schur[i], std::vector<Basis>(r, Basis::s)), t.lambdas[i], r);
            // Nonzero pivots at a sample bound the intersection dimension by 1 and the
            // certified H shows it is at least 1.
            if (done) t.intersection_dim.assign(t.lambdas.size(), 1);
        }
        if (!done) t.method = HMethod::exact;
    }
    if (!done) exact_schur(core, n, t.schur, t.intersection_dim);

    PlethMatrix iota = PlethMatrix::iota(r), neg_iota = iota.scale(RatFunc(-1));
    PlethMatrix m = PlethMatrix::pairing_matrix(r), mt = m.transpose();
    for (size_t i = 0; i < t.lambdas.size(); ++i) {
        MultiSymFunc h = from_basis(r, t.schur[i], std::vector<Basis>(r, Basis::s));
        MultiSymFunc hd = pleth_apply(h, neg_iota).invert_qt();
        RatFunc nrm = qt_pairing(hd, h);
        if (nrm.is_zero()) throw arith_error("vanishing norm for " + t.lambdas[i].str());
        RatFunc inv = nrm.inv();
        t.dual.push_back(pleth_apply(pleth_apply(hd, iota), mt).scale(inv));
        t.dual_dag.push_back(pleth_apply(pleth_apply(h, m), iota).scale(inv));
        t.H.push_back(std::move(h));
        t.Hdag.push_back(std::move(hd));
        t.norm.push_back(nrm);
    }
    return t;
}

namespace {

std::mutex g_tables_mu;
std::map<std::pair<CoreLabel, int>, std::shared_future<std::shared_ptr<const HTable>>> g_tables;

}  // namespace

const HTable& h_table(const CoreLabel& core, int n) {
    std::shared_future<std::shared_ptr<const HTable>> fut;
    std::promise<std::shared_ptr<const HTable>> prom;
    bool owner = false;
    {
        std::lock_guard<std::mutex> lock(g_tables_mu);
        auto key = std::make_pair(core, n);
        auto it = g_tables.find(key);
        if (it == g_tables.end()) {
            fut = prom.get_future().share();
            g_tables.emplace(key, fut);
            owner = true;
        } else {
            fut = it->second;
        }
    }
    if (owner) {
        try {
            prom.set_value(std::make_shared<const HTable>(compute_H(core, n)));
        } catch (...) {
            prom.set_exception(std::current_exception());
        }
    }
    return *fut.get();
}

void clear_h_tables() {
    std::lock_guard<std::mutex> lock(g_tables_mu);
    g_tables.clear();
}

namespace {

const HTable& table_of(const Partition& lambda, int r, int* idx) {
    auto cq = core_quot(lambda, r);
    const HTable& t = h_table(cq.charges, multipartition_size(cq.quot));
    *idx = t.index(lambda);
    return t;
}

}  // namespace

const MultiSymFunc& wreath_H(const Partition& lambda, int r) {
    int i;
    const HTable& t = table_of(lambda, r, &i);
    return t.H[i];
}

const MultiSymFunc& wreath_Hdag(const Partition& lambda, int r) {
    int i;
    const HTable& t = table_of(lambda, r, &i);
    return t.Hdag[i];
}

const RatFunc& wreath_norm(const Partition& lambda, int r) {
    int i;
    const HTable& t = table_of(lambda, r, &i);
    return t.norm[i];
}

// ---- nabla ----

RatFunc nabla_eigen(const Partition& lambda, int r) {
    auto cq = core_quot(lambda, r);
    RatFunc v = box_product(lambda, cq.core, 0, r);
    return multipartition_size(cq.quot) % 2 ? -v : v;
}

MultiSymFunc nabla(const MultiSymFunc& f, const CoreLabel& core, int power) {
    int r = core.r();
    MultiSymFunc out(r);
    for (int d = 0; d <= f.max_degree(); ++d) {
        MultiSymFunc fd = f.homogeneous(d);
        if (fd.is_zero()) continue;
        const HTable& t = h_table(core, d);
        auto c = t.expand(fd);
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i].is_zero()) continue;
            out += t.H[i].scale(c[i] * nabla_eigen(t.lambdas[i], r).pow(power));
        }
    }
    return out;
}

WreathPoly nabla(const WreathPoly& f, int power) { return WreathPoly{nabla(f.value, f.core, power), f.core}; }

// ---- evaluations ----

ColoredCharSum iota_D(const Partition& lambda, int r, int k) { return char_sums(lambda, r).D.shift(k).iota(); }

RatFunc evaluate(const MultiSymFunc& f, const ColoredCharSum& s) { return eval_colored(f, s); }

// ---- delta functions and the Tesler operator ----

MultiSymFunc delta_fn(const Partition& lambda, int r, int k, int n_max) {
    ColoredCharSum g = geometric(r) - char_sums(lambda, r).B;
    std::vector<RatFunc> c(r);
    for (int i = 0; i < r; ++i) c[i] = g[i + k];
    return omega_series(c, n_max);
}

MultiSymFunc star_delta_fn(const Partition& lambda, int r, int k, int n_max) {
    ColoredCharSum g = char_sums(lambda, r).B - geometric(r);
    std::vector<RatFunc> c(r);
    for (int j = 0; j < r; ++j) c[j] = invert_qt(g[k - j]);
    return omega_series(c, n_max);
}

MultiSymFunc V_apply(const MultiSymFunc& f, const CoreLabel& core, int k, int n_max) {
    int r = core.r();
    MultiSymFunc g = pleth_translate(nabla(f, core, 1), mod(-k, r), RatFunc(1));
    auto c = pleth_column(PlethMatrix::pairing_matrix(r).inverse(), mod(-k, r));
    g = omega_series(c, n_max).mul_trunc(g, n_max);
    return nabla(g, core, 1);
}

MultiSymFunc V_star_apply(const MultiSymFunc& f, const CoreLabel& core, int k, int n_max) {
    int r = core.r();
    RatFunc qi = q_().inv(), ti = t_().inv();
    PlethMatrix m = PlethMatrix::one_minus(r, qi, 1) * (PlethMatrix::one_minus(r, ti, -1).scale(RatFunc(-1)));
    MultiSymFunc g = pleth_translate(nabla(f, core, -1), mod(k, r), RatFunc(-1));
    auto c = pleth_column(m.inverse().scale(RatFunc(-1)), mod(k, r));
    g = omega_series(c, n_max).mul_trunc(g, n_max);
    return nabla(g, core, -1);
}

// ---- Delta operators ----

MultiSymFunc delta_op(const MultiSymFunc& f, const MultiSymFunc& g, const CoreLabel& core) {
    int r = core.r();
    MultiSymFunc out(r);
    for (int d = 0; d <= g.max_degree(); ++d) {
        MultiSymFunc gd = g.homogeneous(d);
        if (gd.is_zero()) continue;
        const HTable& t = h_table(core, d);
        auto c = t.expand(gd);
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i].is_zero()) continue;
            RatFunc ev = eval_colored(f, char_sums(t.lambdas[i], r).D.scale(RatFunc(-1)));
            out += t.H[i].scale(c[i] * ev);
        }
    }
    return out;
}

MultiSymFunc delta_op_dag(const MultiSymFunc& f, const MultiSymFunc& g, const CoreLabel& core) {
    int r = core.r();
    CoreLabel base = w0_act(core);
    MultiSymFunc out(r);
    for (int d = 0; d <= g.max_degree(); ++d) {
        MultiSymFunc gd = g.homogeneous(d);
        if (gd.is_zero()) continue;
        const HTable& t = h_table(base, d);
        auto c = t.expand_dag(gd);
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i].is_zero()) continue;
            RatFunc ev = eval_colored(f, char_sums(t.lambdas[i], r).D.scale(RatFunc(-1)));
            out += t.Hdag[i].scale(c[i] * ev);
        }
    }
    return out;
}

MultiSymFunc delta_op_shifted(const MultiSymFunc& f, const MultiSymFunc& g, const CoreLabel& core, int k) {
    int r = core.r();
    MultiSymFunc h = delta_op(f, pleth_apply(g, PlethMatrix::sigma(r, k)), sigma_act(core, k));
    return pleth_apply(h, PlethMatrix::sigma(r, -k));
}

// ---- other constructions ----

WreathPoly sigma_apply(const WreathPoly& f, int k) {
    return WreathPoly{pleth_apply(f.value, PlethMatrix::sigma(f.core.r(), k)), sigma_act(f.core, k)};
}

WreathPoly down_arrow(const WreathPoly& f) {
    PlethMatrix m = PlethMatrix::iota(f.core.r()).scale(RatFunc(-1));
    return WreathPoly{pleth_apply(f.value, m).invert_qt(), w0_act(f.core)};
}

MultiSymFunc skew_H(const Partition& lambda, const Partition& mu, int r) {
    auto cl = core_quot(lambda, r), cm = core_quot(mu, r);
    if (cl.charges != cm.charges) throw std::invalid_argument("skew_H: cores differ");
    int d = multipartition_size(cl.quot) - multipartition_size(cm.quot);
    MultiSymFunc out(r);
    if (d < 0) return out;
    const MultiSymFunc& hl = wreath_H(lambda, r);
    const MultiSymFunc& hm = wreath_Hdag(mu, r);
    const HTable& t = h_table(cl.charges, d);
    for (size_t i = 0; i < t.lambdas.size(); ++i) {
        RatFunc c = qt_pairing(hm * t.Hdag[i], hl);
        if (!c.is_zero()) out += t.H[i].scale(c / t.norm[i]);
    }
    return out;
}

MultiSymFunc interpolation(const Partition& mu, int r) {
    CoreLabel a = core_label(mu, r);
    MultiSymFunc h = pleth_translate(wreath_Hdag(mu, r), 0, RatFunc(-1));
    return nabla(h, w0_act(a), -1).scale(wreath_norm(mu, r).inv());
}

MultiSymFunc fourier_transform(const MultiSymFunc& f, const CoreLabel& alpha) {
    return nabla(pleth_translate(f, 0, RatFunc(-1)), w0_act(alpha), -1);
}

RatFunc fourier_pairing(const MultiSymFunc& f, const MultiSymFunc& g, const CoreLabel& alpha) {
    MultiSymFunc a = pleth_translate(nabla(f, w0_act(alpha), 1), 0, RatFunc(1));
    MultiSymFunc b = pleth_translate(nabla(g, alpha, 1), 0, RatFunc(1));
    return qt_pairing(a, b);
}

MultiSymFunc fourier_kernel_at_y(const CoreLabel& alpha, const Partition& lambda) {
    int r = alpha.r();
    int n = multipartition_size(quotient(lambda, r));
    MultiSymFunc out(r);
    ColoredCharSum s = iota_D(lambda, r);
    for (int d = 0; d <= n; ++d) {
        const HTable& t = h_table(alpha, d);
        for (size_t i = 0; i < t.lambdas.size(); ++i) {
            if (!lambda.contains(t.lambdas[i])) continue;
            RatFunc c = eval_colored(interpolation(t.lambdas[i], r), s);
            if (c.is_zero()) continue;
            out += nabla(pleth_translate(t.H[i], 0, RatFunc(-1)), alpha, -1).scale(c);
        }
    }
    return out;
}

MultiSymFunc fourier_kernel_at_x(const CoreLabel& alpha, const Partition& nu) {
    int r = alpha.r();
    CoreLabel beta = w0_act(alpha);
    int n = multipartition_size(quotient(nu, r));
    MultiSymFunc out(r);
    ColoredCharSum s = iota_D(nu, r);
    for (int d = 0; d <= n; ++d) {
        const HTable& t = h_table(beta, d);
        for (size_t i = 0; i < t.lambdas.size(); ++i) {
            if (!nu.contains(t.lambdas[i])) continue;
            RatFunc c = eval_colored(interpolation(t.lambdas[i], r), s);
            if (c.is_zero()) continue;
            out += nabla(pleth_translate(t.H[i], 0, RatFunc(-1)), beta, -1).scale(c);
        }
    }
    return out;
}

RatFunc kostka(const Multipartition& gamma, const Partition& mu, int r) {
    int i;
    const HTable& t = table_of(mu, r, &i);
    auto it = t.schur[i].find(gamma);
    return it == t.schur[i].end() ? RatFunc() : it->second;
}

RatFunc kostka_plethystic(const Multipartition& gamma, const Partition& mu, int r) {
    if (multipartition_size(gamma) != multipartition_size(quotient(mu, r)))
        throw std::invalid_argument("kostka: size mismatch");
    CoreLabel a = core_label(mu, r);
    Multipartition g(r);
    std::vector<int> rest;
    if (!gamma[0].empty()) rest.assign(gamma[0].parts().begin() + 1, gamma[0].parts().end());
    g[0] = Partition(rest);
    for (int i = 1; i < r; ++i) g[mod(-i, r)] = gamma[i];
    MultiSymFunc f = pleth_translate(schur(g), 0, RatFunc(-1));
    f = pleth_apply(f, PlethMatrix::pairing_matrix(r).inverse());
    return eval_colored(fourier_transform(f, a), iota_D(mu, r));
}

}  // namespace wm
