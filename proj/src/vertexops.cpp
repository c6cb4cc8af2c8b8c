#include "wm/vertexops.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

namespace wm {

namespace {

RatFunc V(int g, int k = 1) { return RatFunc::var(g, k); }

RatFunc qt_mono(int a, int b) { return V(kQ, a) * V(kT, b); }

std::vector<Box> colored(const std::vector<Box>& xs, int i, int r) {
    std::vector<Box> out;
    for (auto& x : xs)
        if (color(x, r) == mod(i, r)) out.push_back(x);
    return out;
}

int count_color(const Partition& l, int i, int r) { return int(colored(l.boxes(), i, r).size()); }

// [k]_qq
RatFunc qnum(int k) {
    RatFunc qq = fock_qq();
    return (qq.pow(k) - qq.pow(-k)) / (qq - qq.inv());
}

// sum_{A_i} chi^k - sum_{R_i} (qt chi)^k in the Fock field
RatFunc corner_power_sum(const Partition& l, int i, int k, int r) {
    RatFunc s, qt = to_fock(V(kQ) * V(kT));
    for (auto& x : colored(l.addable(), i, r)) s += fock_character(x).pow(k);
    for (auto& x : colored(l.removable(), i, r)) s -= (qt * fock_character(x)).pow(k);
    return s;
}

// truncated power series in w: coefficient list
using WSeries = std::vector<RatFunc>;

WSeries wmul(const WSeries& a, const WSeries& b) {
    WSeries c(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// (a - b w) / (1 - x w)
WSeries wfactor(const RatFunc& a, const RatFunc& b, const RatFunc& x, int n) {
    WSeries g(n + 1), lin(n + 1);
    RatFunc p(1);
    for (int k = 0; k <= n; ++k, p *= x) g[k] = p;
    lin[0] = a;
    if (n >= 1) lin[1] = -b;
    return wmul(lin, g);
}

// log of c (1 + ...): coefficients L_1..L_n, L[0] unused
WSeries wlog(const WSeries& s) {
    int n = int(s.size()) - 1;
    WSeries a(n + 1), L(n + 1);
    RatFunc c0 = s[0].inv();
    for (int k = 1; k <= n; ++k) a[k] = s[k] * c0;
    for (int k = 1; k <= n; ++k) {
        RatFunc acc = a[k];
        for (int j = 1; j < k; ++j) acc -= RatFunc(j) * L[j] * a[k - j] / RatFunc(k);
        L[k] = acc;
    }
    return L;
}

}  // namespace

// ---------------------------------------------------------------- Fock field

RatFunc fock_qq() { return V(kQh, 2); }
RatFunc fock_dd() { return V(kDh, 2); }
RatFunc fock_v() { return V(kV); }

RatFunc to_fock(const RatFunc& f) {
    std::array<Monomial, kNumGens> im;
    for (int g = 0; g < kNumGens; ++g) im[g] = Monomial::var(g);
    im[kQ] = Monomial::var(kQh, 2) * Monomial::var(kDh, 2);
    im[kT] = Monomial::var(kQh, 2) * Monomial::var(kDh, -2);
    return substitute_monomial(f, im);
}

RatFunc fock_character(const Box& x) { return V(kQh, 2 * (x.a + x.b)) * V(kDh, 2 * (x.a - x.b)); }

FockElement fock_current(Current kind, int i, const Partition& lambda, const Partition& mu, int r) {
    FockElement out;
    RatFunc qq = fock_qq(), v = fock_v(), mdd = -fock_dd();
    i = mod(i, r);
    if (kind == Current::psi) {
        if (mu != lambda) return out;
        RatFunc z = V(zgen(0)), c(1);
        for (auto& x : colored(lambda.addable(), i, r)) {
            RatFunc cv = fock_character(x) * v;
            c *= (qq * z - qq.inv() * cv) / (z - cv);
        }
        for (auto& x : colored(lambda.removable(), i, r)) {
            RatFunc cv = fock_character(x) * v;
            c *= (qq.inv() * z - qq * cv) / (z - cv);
        }
        out.zero = false;
        out.coeff = c;
        return out;
    }
    if (mu.size() != lambda.size() + 1 || !mu.contains(lambda)) return out;
    Box box;
    for (auto& x : lambda.addable())
        if (lambda.add_box(x) == mu) box = x;
    if (color(box, r) != i) return out;
    RatFunc cb = fock_character(box);
    int d = count_color(lambda, i + 1, r);
    RatFunc c(1);
    if (kind == Current::e) {
        c = mdd.pow(d);
        for (auto& x : colored(lambda.removable(), i, r)) c *= cb - qq.pow(2) * fock_character(x);
        for (auto& x : colored(lambda.addable(), i, r))
            if (x != box) c /= cb - fock_character(x);
    } else {
        c = mdd.pow(-d);
        for (auto& x : colored(lambda.addable(), i, r))
            if (x != box) c *= qq * cb - qq.inv() * fock_character(x);
        for (auto& x : colored(lambda.removable(), i, r)) c /= qq * (cb - fock_character(x));
    }
    out.zero = false;
    out.coeff = c;
    out.point = cb * v;
    return out;
}

std::vector<RatFunc> psi_series(int i, const Partition& lambda, int r, bool plus, int n) {
    RatFunc qq = fock_qq(), v = fock_v();
    WSeries s(n + 1);
    s[0] = RatFunc(1);
    for (auto& x : colored(lambda.addable(), i, r)) {
        RatFunc cv = fock_character(x) * v;
        s = wmul(s, plus ? wfactor(qq, qq.inv() * cv, cv, n) : wfactor(qq.inv(), qq / cv, cv.inv(), n));
    }
    for (auto& x : colored(lambda.removable(), i, r)) {
        RatFunc cv = fock_character(x) * v;
        s = wmul(s, plus ? wfactor(qq.inv(), qq * cv, cv, n) : wfactor(qq, qq.inv() / cv, cv.inv(), n));
    }
    return s;
}

RatFunc boson_eigen(const Partition& lambda, int i, int k, int r) {
    if (k == 0) throw std::invalid_argument("boson_eigen: k must be nonzero");
    RatFunc qq = fock_qq(), v = fock_v();
    int m = std::abs(k);
    if (k > 0) return v.pow(m) * qnum(m) / (qq.pow(m) * RatFunc(m)) * corner_power_sum(lambda, i, m, r);
    return qq.pow(m) * qnum(m) / (v.pow(m) * RatFunc(m)) * corner_power_sum(lambda, i, -m, r);
}

RatFunc boson_eigen_from_psi(const Partition& lambda, int i, int k, int r) {
    if (k == 0) throw std::invalid_argument("boson_eigen_from_psi: k must be nonzero");
    int m = std::abs(k);
    WSeries L = wlog(psi_series(i, lambda, r, k > 0, m));
    RatFunc qq = fock_qq();
    RatFunc b = L[m] / (qq - qq.inv());
    return k > 0 ? b : -b;
}

RatFunc dual_boson_eigen(const Partition& lambda, int p, int sign, int r) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("dual_boson_eigen: sign must be +-1");
    RatFunc qq = fock_qq(), v = fock_v();
    RatFunc q = to_fock(V(kQ)), t = to_fock(V(kT));
    RatFunc pre = qq * (qq - qq.inv()) / ((RatFunc(1) - q.pow(r)) * (RatFunc(1) - t.pow(r)));
    RatFunc s;
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k)
            s += q.pow(j) * t.pow(k) * boson_eigen(lambda, p + sign * (j - k), sign, r);
    RatFunc norm = sign > 0 ? ((qq - qq.inv()) * v).inv() : v / (qq - qq.inv());
    return norm * pre * s;
}

RatFunc dd_eigenvalue(const Partition& lambda, int p, bool star, int r) {
    ColoredCharSum d = char_sums(lambda, r).D, g = geometric(r);
    RatFunc s;
    for (int i = 0; i < r; ++i) s -= d[i] * g[p - i];
    return star ? invert_qt(s) : s;
}

// ---------------------------------------------------------------- series

const std::vector<int>& series_vars() {
    static const std::vector<int> v{kQ, kT};
    return v;
}

namespace {

TruncSeries expand_qt(const RatFunc& c, int order, bool inverted) {
    return TruncSeries::expand(inverted ? invert_qt(c) : c, series_vars(), order);
}

void accumulate(std::map<PIndex, TruncSeries>& m, const PIndex& k, const TruncSeries& s) {
    auto it = m.find(k);
    if (it == m.end())
        m.emplace(k, s);
    else
        it->second = it->second + s;
}

int min_order(const std::map<PIndex, TruncSeries>& terms, int fallback) {
    int o = fallback;
    for (auto& [k, s] : terms) o = std::min(o, s.order());
    return o;
}

}  // namespace

std::string SeriesSym::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [k, s] : terms) {
        if (s.terms().empty()) continue;
        if (!first) os << " + ";
        first = false;
        os << '[' << s.str() << ']';
        for (int c : k) os << "*p" << pdeg(c) << "[X" << pcolor(c) << ']';
    }
    if (first) os << "0";
    os << " (order " << order << (inverted ? ", in 1/q, 1/t" : "") << ')';
    return os.str();
}

SeriesSym to_series(const WreathPoly& f, int order, bool inverted) {
    SeriesSym s{f.value.r(), f.core, inverted, order, {}};
    for (auto& [k, c] : f.value.terms()) s.terms.emplace(k, expand_qt(c, order, inverted));
    s.order = min_order(s.terms, order);
    return s;
}

SeriesSym series_mul(const SeriesSym& a, const MultiSymFunc& g) {
    SeriesSym out{a.r, a.core, a.inverted, a.order, {}};
    std::map<PIndex, TruncSeries> gs;
    for (auto& [k, c] : g.terms()) gs.emplace(k, expand_qt(c, a.order, a.inverted));
    for (auto& [ka, sa] : a.terms)
        for (auto& [kg, sg] : gs) accumulate(out.terms, pindex_merge(ka, kg), sa * sg);
    out.order = min_order(out.terms, a.order);
    return out;
}

SeriesSym series_scale(const SeriesSym& a, const RatFunc& c) {
    SeriesSym out{a.r, a.core, a.inverted, a.order, {}};
    TruncSeries cs = expand_qt(c, a.order, a.inverted);
    for (auto& [k, s] : a.terms) out.terms.emplace(k, s * cs);
    out.order = min_order(out.terms, a.order);
    return out;
}

SeriesSym series_sub(const SeriesSym& a, const SeriesSym& b) {
    if (a.inverted != b.inverted) throw arith_error("series_sub: mixed expansion directions");
    SeriesSym out{a.r, a.core, a.inverted, std::min(a.order, b.order), a.terms};
    for (auto& [k, s] : b.terms) accumulate(out.terms, k, s.scale(RatFunc(-1)));
    out.order = min_order(out.terms, out.order);
    return out;
}

bool series_equal(const SeriesSym& a, const SeriesSym& b, std::string* mismatch) {
    if (a.inverted != b.inverted) {
        if (mismatch) *mismatch = "different expansion directions";
        return false;
    }
    int order = std::min(a.order, b.order);
    TruncSeries zero(series_vars(), order);
    std::set<PIndex> keys;
    for (auto& [k, s] : a.terms) keys.insert(k);
    for (auto& [k, s] : b.terms) keys.insert(k);
    for (auto& k : keys) {
        auto ia = a.terms.find(k), ib = b.terms.find(k);
        TruncSeries sa = ia == a.terms.end() ? zero : ia->second + zero;
        TruncSeries sb = ib == b.terms.end() ? zero : ib->second + zero;
        if (sa != sb) {
            if (mismatch) {
                std::ostringstream os;
                os << "coefficient of";
                for (int c : k) os << " p" << pdeg(c) << "[X" << pcolor(c) << ']';
                os << ": " << sa.str() << " vs " << sb.str();
                *mismatch = os.str();
            }
            return false;
        }
    }
    return true;
}

TruncSeries series_pairing(const SeriesSym& a, const MultiSymFunc& g) {
    TruncSeries out(series_vars(), a.order);
    for (auto& [k, s] : a.terms) {
        RatFunc c = qt_pairing(MultiSymFunc::p(a.r, k), g);
        if (!c.is_zero()) out = out + s * expand_qt(c, a.order, a.inverted);
    }
    return out;
}

// ---------------------------------------------------------------- constant-term engine

namespace {

using ZExp = std::vector<int>;

// (1 - c z^m), c = sign q^qa t^tb
struct ZFactor {
    int sign, qa, tb;
    ZExp m;
};

// X^(color(v) + offset) += sign q^qa t^tb z_v^-1
struct Shift {
    int sign, qa, tb, offset;
};

struct Kernel {
    int r = 1;
    std::vector<int> color;  // per variable
    RatFunc constant{1};
    std::vector<ZFactor> num, den;
    ZExp monomial;
    int omega_sign = -1;
    std::vector<Shift> translation;
    int h_sign = -1;

    int nz() const { return int(color.size()); }
    ZExp unit(int v, int k = 1) const {
        ZExp e(nz(), 0);
        e[v] = k;
        return e;
    }
    ZExp ratio(int a, int b) const {  // z_a / z_b
        ZExp e(nz(), 0);
        e[a] += 1;
        e[b] -= 1;
        return e;
    }
};

using QTPoly = std::map<std::pair<int, int>, mpz_class>;
using ZSeries = std::map<ZExp, QTPoly>;

void qt_add(QTPoly& p, std::pair<int, int> e, const mpz_class& c) {
    auto [it, ins] = p.try_emplace(e, c);
    if (!ins) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

ZSeries zmul(const ZSeries& a, const ZSeries& b, int M) {
    ZSeries out;
    for (auto& [ea, pa] : a)
        for (auto& [eb, pb] : b) {
            ZExp e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            QTPoly acc;
            for (auto& [ma, ca] : pa)
                for (auto& [mb, cb] : pb) {
                    if (ma.first + mb.first + ma.second + mb.second > M) continue;
                    qt_add(acc, {ma.first + mb.first, ma.second + mb.second}, ca * cb);
                }
            if (acc.empty()) continue;
            QTPoly& dst = out[e];
            for (auto& [m, c] : acc) qt_add(dst, m, c);
            if (dst.empty()) out.erase(e);
        }
    return out;
}

ZSeries kernel_series(const Kernel& K, int M) {
    int nz = K.nz();
    ZExp zero(nz, 0);
    ZSeries s;
    {
        TruncSeries c = TruncSeries::expand(K.constant, series_vars(), M);
        if (c.low() < 0) {
            for (auto& [e, x] : c.terms())
                if (e[0] + e[1] < 0) throw arith_error("kernel constant has negative valuation");
        }
        QTPoly p;
        for (auto& [e, x] : c.terms()) {
            if (!x.is_constant() || !x.den().is_one()) throw arith_error("kernel constant is not integral");
            qt_add(p, {e[0], e[1]}, x.num().constant_value());
        }
        s[K.monomial] = p;
    }
    for (auto& f : K.num) {
        if (f.qa + f.tb < 0) throw arith_error("numerator factor with negative valuation");
        ZSeries g;
        g[zero][{0, 0}] = 1;
        qt_add(g[f.m], {f.qa, f.tb}, -f.sign);
        s = zmul(s, g, M);
    }
    for (auto& f : K.den) {
        int v = f.qa + f.tb;
        if (v == 0) throw arith_error("denominator factor on the unit circle");
        ZSeries g;
        if (v > 0) {
            // sum_n (c z^m)^n
            for (int n = 0; n * v <= M; ++n) {
                ZExp e(nz);
                for (int i = 0; i < nz; ++i) e[i] = n * f.m[i];
                g[e][{n * f.qa, n * f.tb}] = (n % 2 && f.sign < 0) ? -1 : 1;
            }
        } else {
            // -(c z^m)^-1 sum_n (c z^m)^-n
            for (int n = 1; n * -v <= M; ++n) {
                ZExp e(nz);
                for (int i = 0; i < nz; ++i) e[i] = -n * f.m[i];
                g[e][{-n * f.qa, -n * f.tb}] = (n % 2 && f.sign < 0) ? 1 : -1;
            }
        }
        s = zmul(s, g, M);
    }
    return s;
}

int norm1(const ZExp& e) {
    int s = 0;
    for (int x : e) s += std::abs(x);
    return s;
}

void check_window(const ZExp& e, int W, const char* what) {
    for (int x : e)
        if (std::abs(x) >= W) throw window_error(std::string("nonzero mass at the z-window edge (") + what + ")");
}

// Constant term in all z of K(z) applied to f (x) e^core, as a series to order M.
SeriesSym apply_kernel(const Kernel& K, const WreathPoly& f, int M, int window) {
    int r = K.r, nz = K.nz();
    const auto& alpha = f.core.charges;
    ZExp h(nz);
    for (int v = 0; v < nz; ++v) {
        int i = K.color[v];
        h[v] = K.h_sign * (alpha[mod(i - 1, r)] - alpha[i]);
    }
    int d = std::max(0, f.value.max_degree());
    int W = window >= 0 ? window : d + norm1(K.monomial) + M + norm1(h) + 1;

    // translation, then the z^H factor
    std::map<ZExp, MultiSymFunc> G;
    for (auto& [key, c] : f.value.terms()) {
        std::map<ZExp, std::map<PIndex, RatFunc>> cur;
        cur[h][PIndex{}] = c;
        for (int code : key) {
            int n = pdeg(code), j = pcolor(code);
            std::map<ZExp, std::map<PIndex, RatFunc>> next;
            for (auto& [e, terms] : cur)
                for (auto& [k2, c2] : terms) {
                    RatFunc& x = next[e][pindex_merge(k2, PIndex{code})];
                    x += c2;
                    for (int v = 0; v < nz; ++v)
                        for (auto& s : K.translation) {
                            if (mod(K.color[v] + s.offset, r) != j) continue;
                            ZExp e2 = e;
                            e2[v] -= n;
                            RatFunc& y = next[e2][k2];
                            y += RatFunc(s.sign) * qt_mono(n * s.qa, n * s.tb) * c2;
                        }
                }
            cur = std::move(next);
        }
        for (auto& [e, terms] : cur) {
            MultiSymFunc& g = G.try_emplace(e, MultiSymFunc(r)).first->second;
            for (auto& [k2, c2] : terms) g.add_term(k2, c2);
        }
    }

    ZSeries Ks = kernel_series(K, M);
    for (auto& [e, p] : Ks) check_window(e, W, "kernel");
    int TK = 0;
    for (int x : K.monomial) TK += x;

    // Omega[omega_sign X^(color v) z_v] = sum_m h_m[omega_sign X^(color v)] z_v^m
    std::map<std::pair<int, int>, MultiSymFunc> hcache;
    auto hm = [&](int m, int c) -> const MultiSymFunc& {
        auto it = hcache.find({m, c});
        if (it != hcache.end()) return it->second;
        MultiSymFunc x = K.omega_sign > 0 ? h_n(r, m, c) : e_n(r, m, c).scale(RatFunc(m % 2 ? -1 : 1));
        return hcache.emplace(std::make_pair(m, c), x).first->second;
    };

    SeriesSym out{r, f.core, false, M, {}};
    ZExp comp(nz);
    for (auto& [e, g] : G) {
        if (g.is_zero()) continue;
        check_window(e, W, "translation");
        int tau = 0;
        for (int x : e) tau += x;
        int mtot = -tau - TK;
        if (mtot < 0) continue;
        // compositions of mtot into nz parts
        std::function<void(int, int, const MultiSymFunc&)> rec = [&](int v, int left, const MultiSymFunc& acc) {
            if (v == nz - 1) {
                comp[v] = left;
                MultiSymFunc full = acc * hm(left, K.color[v]);
                ZExp E(nz);
                for (int i = 0; i < nz; ++i) E[i] = e[i] + comp[i];
                check_window(E, W, "exponential");
                ZExp need(nz);
                for (int i = 0; i < nz; ++i) need[i] = -E[i];
                auto it = Ks.find(need);
                if (it == Ks.end()) return;
                TruncSeries ks(series_vars(), M);
                for (auto& [m, c] : it->second) ks.add_term({m.first, m.second}, RatFunc(c));
                for (auto& [k2, c2] : full.terms()) accumulate(out.terms, k2, expand_qt(c2, M, false) * ks);
                return;
            }
            for (int m = 0; m <= left; ++m) {
                comp[v] = m;
                rec(v + 1, left - m, m == 0 ? acc : acc * hm(m, K.color[v]));
            }
        };
        rec(0, mtot, g);
    }
    out.order = min_order(out.terms, M);
    return out;
}

Kernel dd_kernel(int r, const std::vector<int>& k, bool prime) {
    Kernel K;
    K.r = r;
    for (int i = 0; i < r; ++i) K.color.push_back(i);
    K.constant = (RatFunc(1) - qt_mono(1, 1)).pow(r - 1);
    for (int i = 0; i < r; ++i) {
        int j = mod(i + 1, r);
        if (!prime) {
            K.den.push_back({1, 1, 0, K.ratio(j, i)});
            K.den.push_back({1, 0, 1, K.ratio(i, j)});
        } else {
            K.den.push_back({1, 0, 1, K.ratio(j, i)});
            K.den.push_back({1, 1, 0, K.ratio(i, j)});
        }
    }
    K.monomial = k;
    if (!prime) {
        K.omega_sign = -1;
        K.translation = {{1, 0, 0, 0}, {1, 1, 1, 0}, {-1, 1, 0, 1}, {-1, 0, 1, -1}};
        K.h_sign = -1;
    } else {
        K.omega_sign = 1;
        K.translation = {{-1, 0, 0, 0}, {-1, 1, 1, 0}, {1, 1, 0, -1}, {1, 0, 1, 1}};
        K.h_sign = 1;
    }
    return K;
}

Kernel colrow_kernel(int r, int n, int p, ColRow kind, bool adjoint) {
    Kernel K;
    K.r = r;
    auto var = [&](int i, int a) { return mod(i, r) * n + a; };
    for (int i = 0; i < r; ++i)
        for (int a = 0; a < n; ++a) K.color.push_back(i);
    K.monomial.assign(K.nz(), 0);
    RatFunc qt = qt_mono(1, 1), c = (RatFunc(1) - qt).pow(n * r);
    for (int j = 1; j <= n; ++j) c /= RatFunc(1) - qt.pow(j);
    K.constant = kind == ColRow::column ? c * V(kT, n) : c * RatFunc(n % 2 ? -1 : 1);
    K.omega_sign = -1;
    K.translation = {{1, 0, 0, 0}, {1, 1, 1, 0}, {-1, 1, 0, 1}, {-1, 0, 1, -1}};
    K.h_sign = -1;
    // special color of the cross terms and of the per-variable chain
    int s = kind == ColRow::row && adjoint ? p + 1 : p;
    s = mod(s, r);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int i = 0; i < r; ++i) {
                K.num.push_back({1, 0, 0, K.ratio(var(i, a), var(i, b))});
                K.num.push_back({1, 1, 1, K.ratio(var(i, a), var(i, b))});
                if (i != s) {
                    K.den.push_back({1, 1, 0, K.ratio(var(i + 1, a), var(i, b))});
                    K.den.push_back({1, 0, 1, K.ratio(var(i - 1, a), var(i, b))});
                } else if (kind == ColRow::column) {
                    K.den.push_back({1, 0, -1, K.ratio(var(i + 1, a), var(i, b))});
                    K.den.push_back({1, 0, 1, K.ratio(var(i - 1, a), var(i, b))});
                } else {
                    K.den.push_back({1, -1, 0, K.ratio(var(i - 1, a), var(i, b))});
                    K.den.push_back({1, 1, 0, K.ratio(var(i + 1, a), var(i, b))});
                }
            }
    for (int a = 0; a < n; ++a) {
        for (int i = 0; i < r; ++i) {
            if (kind == ColRow::column) {
                K.den.push_back({1, 0, 1, K.ratio(var(i, a), var(i + 1, a))});
                if (i != s) K.den.push_back({1, 1, 0, K.ratio(var(i + 1, a), var(i, a))});
            } else {
                K.den.push_back({1, 1, 0, K.ratio(var(i, a), var(i - 1, a))});
                if (i != s) K.den.push_back({1, 0, 1, K.ratio(var(i - 1, a), var(i, a))});
            }
        }
        int num_c, den_c;
        if (kind == ColRow::column) {
            num_c = adjoint ? 0 : p;
            den_c = adjoint ? p + 1 : 0;
        } else {
            num_c = adjoint ? 0 : p;
            den_c = adjoint ? p : 0;
        }
        K.monomial[var(num_c, a)] += 1;
        K.monomial[var(den_c, a)] -= 1;
    }
    return K;
}

}  // namespace

SeriesSym dd_apply(const WreathPoly& f, const std::vector<int>& k, bool star, int order, int window) {
    int r = f.value.r();
    if (int(k.size()) != r) throw std::invalid_argument("dd_apply: k needs one entry per color");
    if (!star) return apply_kernel(dd_kernel(r, k, false), f, order, window);
    WreathPoly g{f.value.invert_qt(), f.core};
    SeriesSym s = apply_kernel(dd_kernel(r, k, true), g, order, window);
    s.inverted = true;
    return s;
}

SeriesSym delta_colrow_apply(const WreathPoly& f, int n, int p, ColRow kind, bool adjoint, int order, int window) {
    if (n < 1) throw std::invalid_argument("delta_colrow_apply: n must be positive");
    return apply_kernel(colrow_kernel(f.value.r(), n, mod(p, f.value.r()), kind, adjoint), f, order, window);
}

RatFunc colrow_eigenvalue(const Partition& lambda, int n, int p, ColRow kind, bool adjoint, int r) {
    ColoredCharSum d = char_sums(lambda, r).D;
    if (adjoint) {
        MultiSymFunc f = kind == ColRow::column ? modified_e(r, n, p) : modified_h(r, n, p);
        f = pleth_apply(f, PlethMatrix::iota(r).scale(RatFunc(-1)));
        return evaluate(f, d.scale(RatFunc(-1)));
    }
    RatFunc a;
    if (kind == ColRow::column) {
        RatFunc t = V(kT);
        for (int i = 0; i < r; ++i) a -= t.pow(i) * d[p - i];
        a /= RatFunc(1) - t.pow(r);
        ColoredCharSum s = ColoredCharSum::zero(1);
        s[0] = a;
        return t.pow(n) * evaluate(e_n(1, n, 0), s);
    }
    RatFunc q = V(kQ);
    for (int i = 0; i < r; ++i) a += q.pow(i) * d[p + i];
    a /= RatFunc(1) - q.pow(r);
    ColoredCharSum s = ColoredCharSum::zero(1);
    s[0] = a;
    return evaluate(h_n(1, n, 0), s);
}

// ---------------------------------------------------------------- one-variable constant terms

namespace {

// g -> 1/g for generators declared large
RatFunc to_small(const RatFunc& f, const std::vector<std::pair<int, int>>& region) {
    std::array<Monomial, kNumGens> im;
    for (int g = 0; g < kNumGens; ++g) im[g] = Monomial::var(g);
    for (auto [g, s] : region)
        if (s < 0) im[g] = Monomial::var(g, -1);
    return substitute_monomial(f, im);
}

// valuation of a pole: total degree of its single monomial in the region variables
int pole_valuation(const RatFunc& P, const std::vector<int>& vars) {
    TruncSeries s = TruncSeries::expand(P, vars, 64);
    if (s.terms().size() != 1) throw std::invalid_argument("const_term: pole is not a monomial in the region");
    int v = 0;
    for (int x : s.terms().begin()->first) v += x;
    return v;
}

}  // namespace

ConstTermResult const_term(const ConstTermProblem& p, ConstTermMethod method) {
    std::vector<int> vars;
    for (auto [g, s] : p.region) vars.push_back(g);
    std::vector<RatFunc> poles, F;
    for (auto& x : p.poles) poles.push_back(to_small(x, p.region));
    for (auto& x : p.F) F.push_back(to_small(x, p.region));
    std::vector<int> val;
    for (auto& x : poles) {
        int v = pole_valuation(x, vars);
        if (v == 0) throw std::invalid_argument("const_term: pole on |z| = 1");
        val.push_back(v);
    }
    ConstTermResult out;
    out.method = method;
    std::ostringstream rep;
    bool simple = true;
    for (size_t i = 0; i < poles.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (poles[i] == poles[j]) simple = false;
    if (method == ConstTermMethod::residue && !simple) {
        rep << "repeated pole, residue method unavailable; used the window method. ";
        method = out.method = ConstTermMethod::window;
    }
    if (method == ConstTermMethod::residue) {
        RatFunc s;
        int inside = 0;
        for (size_t i = 0; i < poles.size(); ++i) {
            if (val[i] < 0) continue;
            ++inside;
            RatFunc fv, pw(1);
            for (auto& c : F) {
                fv += c * pw;
                pw *= poles[i];
            }
            for (size_t j = 0; j < poles.size(); ++j)
                if (j != i) fv /= poles[i] - poles[j];
            s += fv;
        }
        rep << inside << " of " << poles.size() << " poles inside";
        out.exact = true;
        out.value = to_small(s, p.region);
        out.series = TruncSeries::expand(s, vars, p.order);
        out.report = rep.str();
        return out;
    }
    // window method: expand each 1/(z - P) in the annulus and read off the z^0 coefficient of z F(z) prod(...)
    int W = p.window >= 0 ? p.window : int(F.size()) + int(poles.size()) * (p.order + 1) + 1;
    int M = p.order;
    std::map<int, TruncSeries> cur;
    for (size_t j = 0; j < F.size(); ++j) cur.emplace(int(j) + 1, TruncSeries::expand(F[j], vars, M));
    int low = 0;
    for (auto& [e, s] : cur) low = std::min(low, s.low());
    for (size_t i = 0; i < poles.size(); ++i) {
        std::map<int, TruncSeries> g;
        int v = std::abs(val[i]);
        RatFunc x = val[i] > 0 ? poles[i] : poles[i].inv();
        for (int n = 0; n * v <= M - low; ++n) {
            if (val[i] > 0)
                g.emplace(-1 - n, TruncSeries::expand(x.pow(n), vars, M - low));
            else
                g.emplace(n, TruncSeries::expand(-x.pow(n + 1), vars, M - low));
        }
        std::map<int, TruncSeries> next;
        for (auto& [e1, s1] : cur)
            for (auto& [e2, s2] : g) {
                int e = e1 + e2;
                if (std::abs(e) >= W) throw window_error("nonzero mass at the z-window edge");
                auto it = next.find(e);
                TruncSeries pr = s1 * s2;
                if (it == next.end())
                    next.emplace(e, pr);
                else
                    it->second = it->second + pr;
            }
        cur = std::move(next);
    }
    auto it = cur.find(0);
    TruncSeries res = it == cur.end() ? TruncSeries(vars, M) : it->second;
    rep << "window " << W;
    out.series = res;
    out.report = rep.str();
    return out;
}

}  // namespace wm
