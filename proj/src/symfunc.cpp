#include "wm/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace wm {

// ---------------------------------------------------------------- indices

int pindex_degree(const PIndex& k) {
    int d = 0;
    for (int c : k) d += pdeg(c);
    return d;
}

PIndex pindex_of(const Multipartition& m) {
    PIndex k;
    for (int i = 0; i < int(m.size()); ++i)
        for (int part : m[i].parts()) k.push_back(pcode(part, i));
    std::sort(k.rbegin(), k.rend());
    return k;
}

Multipartition multipartition_of(const PIndex& k, int r) {
    std::vector<std::vector<int>> parts(r);
    for (int c : k) parts[pcolor(c)].push_back(pdeg(c));
    Multipartition m;
    for (auto& p : parts) {
        std::sort(p.rbegin(), p.rend());
        m.emplace_back(p);
    }
    return m;
}

PIndex pindex_merge(const PIndex& a, const PIndex& b) {
    PIndex out(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin(), std::greater<int>());
    return out;
}

namespace {

mpz_class zee_of_counts(const std::map<int, int>& mult, bool by_code) {
    mpz_class z = 1;
    for (auto [part, m] : mult) {
        int n = by_code ? pdeg(part) : part;
        for (int j = 1; j <= m; ++j) z *= n * j;
    }
    return z;
}

}  // namespace

mpz_class zee(const PIndex& k) {
    std::map<int, int> mult;
    for (int c : k) ++mult[c];
    return zee_of_counts(mult, true);
}

mpz_class zee(const Partition& l) {
    std::map<int, int> mult;
    for (int p : l.parts()) ++mult[p];
    return zee_of_counts(mult, false);
}

// ---------------------------------------------------------------- MultiSymFunc

MultiSymFunc::MultiSymFunc(int r, const RatFunc& c) : r_(r) { add_term(PIndex{}, c); }

MultiSymFunc MultiSymFunc::p(int r, const PIndex& k, const RatFunc& c) {
    MultiSymFunc f(r);
    f.add_term(k, c);
    return f;
}

RatFunc MultiSymFunc::coeff(const PIndex& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? RatFunc() : it->second;
}

void MultiSymFunc::add_term(const PIndex& k, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int MultiSymFunc::max_degree() const {
    int d = -1;
    for (auto& [k, c] : terms_) d = std::max(d, pindex_degree(k));
    return d;
}

MultiSymFunc MultiSymFunc::homogeneous(int d) const {
    MultiSymFunc out(r_);
    for (auto& [k, c] : terms_)
        if (pindex_degree(k) == d) out.terms_.emplace(k, c);
    return out;
}

MultiSymFunc MultiSymFunc::truncate(int max_deg) const {
    MultiSymFunc out(r_);
    for (auto& [k, c] : terms_)
        if (pindex_degree(k) <= max_deg) out.terms_.emplace(k, c);
    return out;
}

MultiSymFunc MultiSymFunc::operator-() const {
    MultiSymFunc out(r_);
    for (auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

MultiSymFunc& MultiSymFunc::operator+=(const MultiSymFunc& o) {
    for (auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

MultiSymFunc& MultiSymFunc::operator-=(const MultiSymFunc& o) {
    for (auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

MultiSymFunc MultiSymFunc::operator+(const MultiSymFunc& o) const {
    MultiSymFunc out = *this;
    return out += o;
}

MultiSymFunc MultiSymFunc::operator-(const MultiSymFunc& o) const {
    MultiSymFunc out = *this;
    return out -= o;
}

MultiSymFunc MultiSymFunc::mul_trunc(const MultiSymFunc& o, int max_deg) const {
    MultiSymFunc out(r_);
    for (auto& [ka, ca] : terms_) {
        int da = pindex_degree(ka);
        if (max_deg >= 0 && da > max_deg) continue;
        for (auto& [kb, cb] : o.terms_) {
            if (max_deg >= 0 && da + pindex_degree(kb) > max_deg) continue;
            out.add_term(pindex_merge(ka, kb), ca * cb);
        }
    }
    return out;
}

MultiSymFunc MultiSymFunc::operator*(const MultiSymFunc& o) const { return mul_trunc(o, -1); }

MultiSymFunc MultiSymFunc::scale(const RatFunc& c) const {
    MultiSymFunc out(r_);
    if (c.is_zero()) return out;
    for (auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
    return out;
}

MultiSymFunc MultiSymFunc::invert_qt() const {
    return map_coeffs([](const RatFunc& c) { return wm::invert_qt(c); });
}

std::string MultiSymFunc::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int code : k) os << "*p" << pdeg(code) << "[" << pcolor(code) << "]";
    }
    return os.str();
}

// ---------------------------------------------------------------- bases

const char* basis_name(Basis b) {
    switch (b) {
        case Basis::p: return "p";
        case Basis::s: return "s";
        case Basis::e: return "e";
        case Basis::h: return "h";
    }
    return "?";
}

Basis basis_of(const std::string& name) {
    if (name == "p") return Basis::p;
    if (name == "s") return Basis::s;
    if (name == "e") return Basis::e;
    if (name == "h") return Basis::h;
    throw std::invalid_argument("unknown basis: " + name);
}

namespace {

// Murnaghan-Nakayama on beta-sets.
long mn_character(std::vector<int> beta, const std::vector<int>& mu, size_t pos) {
    if (pos == mu.size()) {
        // remaining shape must be empty: beta = {0, 1, ..., len-1}
        std::sort(beta.begin(), beta.end());
        for (int i = 0; i < int(beta.size()); ++i)
            if (beta[i] != i) return 0;
        return 1;
    }
    int k = mu[pos];
    long total = 0;
    for (size_t j = 0; j < beta.size(); ++j) {
        int b = beta[j], nb = b - k;
        if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int between = 0;
        for (int x : beta)
            if (x > nb && x < b) ++between;
        std::vector<int> next = beta;
        next[j] = nb;
        long sub = mn_character(std::move(next), mu, pos + 1);
        total += (between % 2 ? -sub : sub);
    }
    return total;
}

std::mutex g_char_mu;
std::map<std::pair<Partition, Partition>, long> g_char_memo;

using PExp = std::map<Partition, mpq_class>;  // single-color p-expansion

Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> v = a.parts();
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    std::sort(v.rbegin(), v.rend());
    return Partition(v);
}

PExp pexp_mul(const PExp& a, const PExp& b) {
    PExp out;
    for (auto& [ka, ca] : a)
        for (auto& [kb, cb] : b) {
            mpq_class& slot = out[merge_parts(ka, kb)];
            slot += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

PExp pexp_en(int n, bool elementary) {
    PExp out;
    for (auto& mu : partitions_of(n)) {
        mpq_class c(1, 1);
        c /= mpq_class(zee(mu));
        if (elementary && (n - mu.length()) % 2) c = -c;
        out[mu] = c;
    }
    return out;
}

PExp pexp_basis(Basis b, const Partition& lambda) {
    PExp out;
    if (b == Basis::p) {
        out[lambda] = 1;
        return out;
    }
    if (b == Basis::s) {
        for (auto& mu : partitions_of(lambda.size())) {
            long chi = sn_character(lambda, mu);
            if (chi) out[mu] = mpq_class(chi) / mpq_class(zee(mu));
        }
        return out;
    }
    out[Partition()] = 1;
    std::vector<int> parts = b == Basis::e ? lambda.conjugate().parts() : lambda.parts();
    for (int k : parts) out = pexp_mul(out, pexp_en(k, b == Basis::e));
    return out;
}

// Coefficients of b_lambda in p_mu for all lambda, mu of size n: result[mu][lambda].
using Transition = std::map<Partition, std::vector<std::pair<Partition, mpq_class>>>;

Transition invert_transition(Basis b, int n) {
    const auto& parts = partitions_of(n);
    int m = int(parts.size());
    std::map<Partition, int> idx;
    for (int i = 0; i < m; ++i) idx[parts[i]] = i;
    // column lambda = p-expansion of b_lambda; solve M x = e_mu
    std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(2 * m));
    for (int l = 0; l < m; ++l)
        for (auto& [mu, c] : pexp_basis(b, parts[l])) a[idx[mu]][l] = c;
    for (int i = 0; i < m; ++i) a[i][m + i] = 1;
    for (int col = 0; col < m; ++col) {
        int piv = col;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) throw arith_error("singular basis transition");
        std::swap(a[piv], a[col]);
        mpq_class inv = 1 / a[col][col];
        for (auto& x : a[col]) x *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == col || a[i][col] == 0) continue;
            mpq_class f = a[i][col];
            for (int j = 0; j < 2 * m; ++j) a[i][j] -= f * a[col][j];
        }
    }
    // inverse matrix rows are lambda, columns mu
    Transition out;
    for (int mu = 0; mu < m; ++mu) {
        auto& row = out[parts[mu]];
        for (int l = 0; l < m; ++l)
            if (a[l][m + mu] != 0) row.emplace_back(parts[l], a[l][m + mu]);
    }
    return out;
}

std::mutex g_trans_mu;
std::map<std::pair<Basis, int>, Transition> g_trans_memo;

const std::vector<std::pair<Partition, mpq_class>>& p_to_basis(Basis b, const Partition& mu) {
    std::lock_guard<std::mutex> lock(g_trans_mu);
    auto key = std::make_pair(b, mu.size());
    auto it = g_trans_memo.find(key);
    if (it == g_trans_memo.end()) {
        Transition t;
        if (b == Basis::p) {
            for (auto& m : partitions_of(mu.size())) t[m].emplace_back(m, 1);
        } else if (b == Basis::s) {
            for (auto& m : partitions_of(mu.size()))
                for (auto& l : partitions_of(mu.size())) {
                    long chi = sn_character(l, m);
                    if (chi) t[m].emplace_back(l, chi);
                }
        } else {
            t = invert_transition(b, mu.size());
        }
        it = g_trans_memo.emplace(key, std::move(t)).first;
    }
    return it->second.at(mu);
}

MultiSymFunc from_pexp(int r, const PExp& e, int color) {
    MultiSymFunc f(r);
    for (auto& [mu, c] : e) {
        PIndex k;
        for (int part : mu.parts()) k.push_back(pcode(part, mod(color, r)));
        f.add_term(k, RatFunc(c));
    }
    return f;
}

}  // namespace

long sn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("character: size mismatch");
    {
        std::lock_guard<std::mutex> lock(g_char_mu);
        auto it = g_char_memo.find({lambda, mu});
        if (it != g_char_memo.end()) return it->second;
    }
    int len = lambda.length();
    std::vector<int> beta(len);
    for (int j = 0; j < len; ++j) beta[j] = lambda[j] + (len - 1 - j);
    long v = mn_character(beta, mu.parts(), 0);
    std::lock_guard<std::mutex> lock(g_char_mu);
    g_char_memo.emplace(std::make_pair(lambda, mu), v);
    return v;
}

MultiSymFunc basis_element(int r, Basis b, const Partition& lambda, int color) {
    return from_pexp(r, pexp_basis(b, lambda), color);
}

MultiSymFunc basis_element(int r, Basis b, const Multipartition& m) {
    MultiSymFunc f = MultiSymFunc::one(r);
    for (int i = 0; i < int(m.size()); ++i)
        if (!m[i].empty()) f = f * basis_element(r, b, m[i], i);
    return f;
}

MultiSymFunc schur(const Multipartition& m) { return basis_element(int(m.size()), Basis::s, m); }

MultiSymFunc e_n(int r, int n, int color) { return from_pexp(r, pexp_en(n, true), color); }

MultiSymFunc h_n(int r, int n, int color) { return from_pexp(r, pexp_en(n, false), color); }

std::map<Multipartition, RatFunc> to_basis(const MultiSymFunc& f, const std::vector<Basis>& per_color) {
    int r = f.r();
    if (int(per_color.size()) != r) throw std::invalid_argument("to_basis: need one basis per color");
    std::map<Multipartition, RatFunc> out;
    for (auto& [k, c] : f.terms()) {
        Multipartition mu = multipartition_of(k, r);
        // running Cartesian product over colors
        std::vector<std::pair<Multipartition, mpq_class>> acc{{Multipartition(), mpq_class(1)}};
        for (int i = 0; i < r; ++i) {
            std::vector<std::pair<Multipartition, mpq_class>> next;
            for (auto& [lam, w] : p_to_basis(per_color[i], mu[i]))
                for (auto& [prefix, v] : acc) {
                    Multipartition m = prefix;
                    m.push_back(lam);
                    next.emplace_back(std::move(m), v * w);
                }
            acc = std::move(next);
        }
        for (auto& [m, w] : acc) {
            RatFunc& slot = out[m];
            slot += c * RatFunc(w);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::map<Multipartition, RatFunc> to_schur(const MultiSymFunc& f) {
    return to_basis(f, std::vector<Basis>(f.r(), Basis::s));
}

MultiSymFunc from_basis(int r, const std::map<Multipartition, RatFunc>& coeffs, const std::vector<Basis>& per_color) {
    MultiSymFunc out(r);
    for (auto& [m, c] : coeffs) {
        MultiSymFunc term = MultiSymFunc::one(r);
        for (int i = 0; i < r; ++i)
            if (!m[i].empty()) term = term * basis_element(r, per_color[i], m[i], i);
        out += term.scale(c);
    }
    return out;
}

// ---------------------------------------------------------------- PlethMatrix

PlethMatrix PlethMatrix::identity(int r) { return scalar(r, RatFunc(1)); }

PlethMatrix PlethMatrix::scalar(int r, const RatFunc& c) {
    PlethMatrix m(r);
    for (int i = 0; i < r; ++i) m.at(i, i) = c;
    return m;
}

PlethMatrix PlethMatrix::sigma(int r, int k) {
    PlethMatrix m(r);
    for (int j = 0; j < r; ++j) m.at(j + k, j) = RatFunc(1);
    return m;
}

PlethMatrix PlethMatrix::iota(int r) {
    PlethMatrix m(r);
    for (int j = 0; j < r; ++j) m.at(-j, j) = RatFunc(1);
    return m;
}

PlethMatrix PlethMatrix::one_minus(int r, const RatFunc& s, int dir) {
    return identity(r) - sigma(r, dir).scale(s);
}

PlethMatrix PlethMatrix::one_minus_inv(int r, const RatFunc& s, int dir) {
    // sum_{k<r} s^k sigma^{dir k} / (1 - s^r)
    PlethMatrix m(r);
    RatFunc den = (RatFunc(1) - s.pow(r)).inv();
    for (int k = 0; k < r; ++k) m = m + sigma(r, dir * k).scale(s.pow(k) * den);
    return m;
}

PlethMatrix PlethMatrix::pairing_matrix(int r) {
    RatFunc q = RatFunc::var(kQ), t = RatFunc::var(kT);
    return one_minus(r, q, -1) * (sigma(r, 1).scale(t) - identity(r));
}

PlethMatrix PlethMatrix::operator+(const PlethMatrix& o) const {
    PlethMatrix m(r_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

PlethMatrix PlethMatrix::operator-(const PlethMatrix& o) const {
    PlethMatrix m(r_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

PlethMatrix PlethMatrix::operator*(const PlethMatrix& o) const {
    PlethMatrix m(r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j) {
            RatFunc s;
            for (int k = 0; k < r_; ++k)
                if (!at(i, k).is_zero() && !o.at(k, j).is_zero()) s += at(i, k) * o.at(k, j);
            m.at(i, j) = s;
        }
    return m;
}

PlethMatrix PlethMatrix::scale(const RatFunc& c) const {
    PlethMatrix m(r_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * c;
    return m;
}

PlethMatrix PlethMatrix::inverse() const {
    int n = r_;
    std::vector<std::vector<RatFunc>> a(n, std::vector<RatFunc>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = at(i, j);
        a[i][n + i] = RatFunc(1);
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw arith_error("singular plethysm matrix");
        std::swap(a[piv], a[col]);
        RatFunc inv = a[col][col].inv();
        for (auto& x : a[col]) x *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            RatFunc f = a[i][col];
            for (int j = 0; j < 2 * n; ++j)
                if (!a[col][j].is_zero()) a[i][j] -= f * a[col][j];
        }
    }
    PlethMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = a[i][n + j];
    return m;
}

PlethMatrix PlethMatrix::transpose() const {
    PlethMatrix m(r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j) m.at(i, j) = at(j, i);
    return m;
}

PlethMatrix PlethMatrix::invert_qt() const {
    PlethMatrix m(r_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = wm::invert_qt(a_[i]);
    return m;
}

// ---------------------------------------------------------------- plethysm

MultiSymFunc pleth_map(const MultiSymFunc& f, const std::function<MultiSymFunc(int, int)>& image, int max_deg) {
    std::map<int, MultiSymFunc> cache;
    auto img = [&](int code) -> const MultiSymFunc& {
        auto it = cache.find(code);
        if (it == cache.end()) it = cache.emplace(code, image(pdeg(code), pcolor(code))).first;
        return it->second;
    };
    MultiSymFunc out(f.r());
    for (auto& [k, c] : f.terms()) {
        MultiSymFunc acc(f.r(), c);
        for (int code : k) {
            acc = acc.mul_trunc(img(code), max_deg);
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return out;
}

MultiSymFunc pleth_apply(const MultiSymFunc& f, const PlethMatrix& a) {
    int r = f.r();
    return pleth_map(f, [&](int n, int j) {
        MultiSymFunc img(r);
        for (int i = 0; i < r; ++i)
            if (!a.at(i, j).is_zero()) img.add_term(PIndex{pcode(n, i)}, adams(a.at(i, j), n));
        return img;
    });
}

MultiSymFunc pleth_translate(const MultiSymFunc& f, const std::vector<RatFunc>& c) {
    int r = f.r();
    return pleth_map(f, [&](int n, int j) {
        MultiSymFunc img = MultiSymFunc::p(r, n, j);
        img.add_term(PIndex{}, adams(c[j], n));
        return img;
    });
}

MultiSymFunc pleth_translate(const MultiSymFunc& f, int color, const RatFunc& c) {
    std::vector<RatFunc> v(f.r());
    v[mod(color, f.r())] = c;
    return pleth_translate(f, v);
}

MultiSymFunc omega(const MultiSymFunc& f) {
    MultiSymFunc out(f.r());
    for (auto& [k, c] : f.terms()) {
        int sign = 1;
        for (int code : k)
            if (pdeg(code) % 2 == 0) sign = -sign;
        out.add_term(k, sign > 0 ? c : -c);
    }
    return out;
}

namespace {

RatFunc eval_with(const MultiSymFunc& f, const std::function<RatFunc(int, int)>& image) {
    std::map<int, RatFunc> cache;
    RatFunc total;
    for (auto& [k, c] : f.terms()) {
        RatFunc v = c;
        for (int code : k) {
            auto it = cache.find(code);
            if (it == cache.end()) it = cache.emplace(code, image(pdeg(code), pcolor(code))).first;
            v *= it->second;
            if (v.is_zero()) break;
        }
        total += v;
    }
    return total;
}

}  // namespace

RatFunc eval_colored(const MultiSymFunc& f, const ColoredCharSum& s) {
    return eval_with(f, [&](int n, int i) { return adams(s[i], n); });
}

RatFunc eval_colored(const MultiSymFunc& f, const PlethMatrix& a, const ColoredCharSum& s) {
    int r = f.r();
    return eval_with(f, [&](int n, int j) {
        RatFunc v;
        for (int i = 0; i < r; ++i)
            if (!a.at(i, j).is_zero() && !s[i].is_zero()) v += adams(a.at(i, j) * s[i], n);
        return v;
    });
}

// ---------------------------------------------------------------- pairings

RatFunc hall(const MultiSymFunc& f, const MultiSymFunc& g) {
    const MultiSymFunc& small = f.size() <= g.size() ? f : g;
    const MultiSymFunc& big = f.size() <= g.size() ? g : f;
    RatFunc total;
    for (auto& [k, c] : small.terms()) {
        auto it = big.terms().find(k);
        if (it != big.terms().end()) total += c * it->second * RatFunc(mpq_class(zee(k)));
    }
    return total;
}

RatFunc star_pairing(const MultiSymFunc& f, const MultiSymFunc& g) {
    return hall(pleth_apply(f, PlethMatrix::iota(f.r())), g);
}

RatFunc qt_pairing(const MultiSymFunc& f, const MultiSymFunc& g) {
    int r = f.r();
    return hall(pleth_apply(f, PlethMatrix::iota(r)), pleth_apply(g, PlethMatrix::pairing_matrix(r)));
}

MultiSymFunc skew(const MultiSymFunc& f, const MultiSymFunc& g) {
    MultiSymFunc out(g.r());
    for (auto& [kf, cf] : f.terms())
        for (auto& [kg, cg] : g.terms()) {
            PIndex rest = kg;
            long factor = 1;
            for (int code : kf) {
                auto lo = std::find(rest.begin(), rest.end(), code);
                if (lo == rest.end()) {
                    factor = 0;
                    break;
                }
                long m = std::count(rest.begin(), rest.end(), code);
                factor *= m * pdeg(code);
                rest.erase(lo);
            }
            if (factor) out.add_term(rest, cf * cg * RatFunc(factor));
        }
    return out;
}

// ---------------------------------------------------------------- Omega and kernels

MultiSymFunc omega_series(const std::vector<RatFunc>& c, int n_max) {
    int r = int(c.size());
    std::vector<MultiSymFunc> pk(n_max + 1, MultiSymFunc(r));
    for (int k = 1; k <= n_max; ++k)
        for (int i = 0; i < r; ++i)
            if (!c[i].is_zero()) pk[k].add_term(PIndex{pcode(k, i)}, adams(c[i], k));
    std::vector<MultiSymFunc> h(n_max + 1, MultiSymFunc(r));
    h[0] = MultiSymFunc::one(r);
    MultiSymFunc total = h[0];
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1; k <= n; ++k) h[n] += pk[k] * h[n - k];
        h[n] = h[n].scale(RatFunc(mpq_class(1, n)));
        total += h[n];
    }
    return total;
}

std::vector<RatFunc> pleth_column(const PlethMatrix& a, int j) {
    std::vector<RatFunc> c(a.r());
    for (int i = 0; i < a.r(); ++i) c[i] = a.at(i, j);
    return c;
}

void TwoAlphabetElem::add_key(const PIndex& k, const MultiSymFunc& y) {
    if (pindex_degree(k) > n_max_) return;
    MultiSymFunc yt = y.truncate(n_max_);
    if (yt.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, yt);
        return;
    }
    it->second += yt;
    if (it->second.is_zero()) terms_.erase(it);
}

void TwoAlphabetElem::add(const MultiSymFunc& x, const MultiSymFunc& y) {
    for (auto& [k, c] : x.terms()) add_key(k, y.scale(c));
}

TwoAlphabetElem TwoAlphabetElem::swap() const {
    TwoAlphabetElem out(r_, n_max_);
    for (auto& [kx, y] : terms_)
        for (auto& [ky, c] : y.terms()) out.add_key(ky, MultiSymFunc::p(r_, kx, c));
    return out;
}

TwoAlphabetElem TwoAlphabetElem::map_x(const std::function<MultiSymFunc(const MultiSymFunc&)>& f) const {
    TwoAlphabetElem out(r_, n_max_);
    for (auto& [kx, y] : terms_) out.add(f(MultiSymFunc::p(r_, kx)), y);
    return out;
}

TwoAlphabetElem TwoAlphabetElem::map_y(const std::function<MultiSymFunc(const MultiSymFunc&)>& f) const {
    TwoAlphabetElem out(r_, n_max_);
    for (auto& [kx, y] : terms_) out.add_key(kx, f(y));
    return out;
}

TwoAlphabetElem TwoAlphabetElem::operator-(const TwoAlphabetElem& o) const {
    TwoAlphabetElem out = *this;
    for (auto& [kx, y] : o.terms_) out.add_key(kx, -y);
    return out;
}

TwoAlphabetElem kernel(const PlethMatrix& a, int n_max) {
    int r = a.r();
    TwoAlphabetElem out(r, n_max);
    for (int n = 0; n <= n_max; ++n)
        for (auto& m : multipartitions(n, r)) {
            PIndex k = pindex_of(m);
            PIndex kx;
            for (int code : k) kx.push_back(pcode(pdeg(code), mod(-pcolor(code), r)));
            std::sort(kx.rbegin(), kx.rend());
            MultiSymFunc y = pleth_apply(MultiSymFunc::p(r, k, RatFunc(mpq_class(1, 1) / mpq_class(zee(k)))), a);
            out.add(MultiSymFunc::p(r, kx), y);
        }
    return out;
}

TwoAlphabetElem cauchy_kernel(int r, int n_max) { return kernel(PlethMatrix::pairing_matrix(r).inverse(), n_max); }

}  // namespace wm
