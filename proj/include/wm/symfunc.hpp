// Colored symmetric functions in Lambda^{(x)r} over the rational-function field,
// stored in the colored power-sum basis.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wm/partitions.hpp"
#include "wm/ratfield.hpp"

namespace wm {

constexpr int kMaxColors = 16;

// A colored power-sum monomial p_{n1}[X^(i1)] p_{n2}[X^(i2)] ..., each factor coded as
// n * kMaxColors + i, sorted in decreasing order.
using PIndex = std::vector<int>;

inline int pcode(int n, int color) { return n * kMaxColors + color; }
inline int pdeg(int code) { return code / kMaxColors; }
inline int pcolor(int code) { return code % kMaxColors; }
int pindex_degree(const PIndex& k);
PIndex pindex_of(const Multipartition& m);
Multipartition multipartition_of(const PIndex& k, int r);
PIndex pindex_merge(const PIndex& a, const PIndex& b);
// prod_i z_{lambda^(i)}
mpz_class zee(const PIndex& k);
mpz_class zee(const Partition& l);

class MultiSymFunc {
public:
    MultiSymFunc() = default;
    explicit MultiSymFunc(int r) : r_(r) {}
    MultiSymFunc(int r, const RatFunc& c);
    static MultiSymFunc one(int r) { return MultiSymFunc(r, RatFunc(1)); }
    static MultiSymFunc p(int r, const PIndex& k, const RatFunc& c = RatFunc(1));
    static MultiSymFunc p(int r, int n, int color) { return p(r, PIndex{pcode(n, mod(color, r))}); }

    int r() const { return r_; }
    const std::map<PIndex, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    RatFunc coeff(const PIndex& k) const;
    void add_term(const PIndex& k, const RatFunc& c);

    int max_degree() const;  // -1 for zero
    MultiSymFunc homogeneous(int d) const;
    MultiSymFunc truncate(int max_deg) const;
    RatFunc constant_term() const { return coeff(PIndex{}); }

    MultiSymFunc operator-() const;
    MultiSymFunc operator+(const MultiSymFunc& o) const;
    MultiSymFunc operator-(const MultiSymFunc& o) const;
    MultiSymFunc operator*(const MultiSymFunc& o) const;
    MultiSymFunc& operator+=(const MultiSymFunc& o);
    MultiSymFunc& operator-=(const MultiSymFunc& o);
    MultiSymFunc scale(const RatFunc& c) const;
    // product dropping all terms of degree above max_deg
    MultiSymFunc mul_trunc(const MultiSymFunc& o, int max_deg) const;

    // apply a function to every coefficient (zero results dropped)
    template <class F>
    MultiSymFunc map_coeffs(F&& f) const {
        MultiSymFunc out(r_);
        for (auto& [k, c] : terms_) out.add_term(k, f(c));
        return out;
    }
    // f[X; 1/q, 1/t]
    MultiSymFunc invert_qt() const;

    bool operator==(const MultiSymFunc& o) const { return r_ == o.r_ && terms_ == o.terms_; }
    bool operator!=(const MultiSymFunc& o) const { return !(*this == o); }
    std::string str() const;

private:
    int r_ = 1;
    std::map<PIndex, RatFunc> terms_;
};

// ---- classical bases, one color at a time ----

enum class Basis { p, s, e, h };
const char* basis_name(Basis b);
Basis basis_of(const std::string& name);

// Irreducible character chi^lambda at cycle type mu (Murnaghan-Nakayama).
long sn_character(const Partition& lambda, const Partition& mu);

// f[X^(color)] for the single-color basis element b_lambda. The e-basis follows the
// convention e_lambda = prod e_{lambda'_i}, so e_(k) = e_1^k and e_k = e_(1^k).
MultiSymFunc basis_element(int r, Basis b, const Partition& lambda, int color);
// b_{lambda^(0)}[X^(0)] ... b_{lambda^(r-1)}[X^(r-1)]
MultiSymFunc basis_element(int r, Basis b, const Multipartition& m);
MultiSymFunc schur(const Multipartition& m);
MultiSymFunc e_n(int r, int n, int color);
MultiSymFunc h_n(int r, int n, int color);

// Expansion of f in the product basis with per-color basis choice.
std::map<Multipartition, RatFunc> to_basis(const MultiSymFunc& f, const std::vector<Basis>& per_color);
std::map<Multipartition, RatFunc> to_schur(const MultiSymFunc& f);
MultiSymFunc from_basis(int r, const std::map<Multipartition, RatFunc>& coeffs, const std::vector<Basis>& per_color);

// ---- matrix plethysm ----

// r x r matrix over Q(q, t, ...); entry (i, j) is the coefficient of X^(i) in the image of X^(j).
class PlethMatrix {
public:
    PlethMatrix() = default;
    explicit PlethMatrix(int r) : r_(r), a_(size_t(r) * r) {}
    static PlethMatrix identity(int r);
    static PlethMatrix scalar(int r, const RatFunc& c);
    static PlethMatrix sigma(int r, int k = 1);  // p_n[sigma X^(i)] = p_n[X^(i+1)]
    static PlethMatrix iota(int r);              // p_n[iota X^(i)] = p_n[X^(-i)]
    // 1 - s sigma^dir
    static PlethMatrix one_minus(int r, const RatFunc& s, int dir);
    // (1 - s sigma^dir)^{-1} by the closed geometric formula
    static PlethMatrix one_minus_inv(int r, const RatFunc& s, int dir);
    // (1 - q sigma^{-1})(t sigma - 1), the matrix inside the modified pairing
    static PlethMatrix pairing_matrix(int r);

    int r() const { return r_; }
    RatFunc& at(int i, int j) { return a_[size_t(mod(i, r_)) * r_ + mod(j, r_)]; }
    const RatFunc& at(int i, int j) const { return a_[size_t(mod(i, r_)) * r_ + mod(j, r_)]; }

    PlethMatrix operator+(const PlethMatrix& o) const;
    PlethMatrix operator-(const PlethMatrix& o) const;
    PlethMatrix operator*(const PlethMatrix& o) const;
    PlethMatrix scale(const RatFunc& c) const;
    PlethMatrix inverse() const;  // Gauss-Jordan; throws arith_error if singular
    PlethMatrix transpose() const;
    PlethMatrix invert_qt() const;
    bool operator==(const PlethMatrix& o) const { return r_ == o.r_ && a_ == o.a_; }

private:
    int r_ = 1;
    std::vector<RatFunc> a_;
};

// Ring map p_n[X^(j)] -> sum_i A_ij(q^n, t^n, u^n, ...) p_n[X^(i)]. Coefficients of f are
// untouched. pleth_apply(pleth_apply(f, A), B) = pleth_apply(f, B * A).
MultiSymFunc pleth_apply(const MultiSymFunc& f, const PlethMatrix& a);
// p_n[X^(color)] -> p_n[X^(color)] + c(q^n, t^n, ...), other colors fixed.
MultiSymFunc pleth_translate(const MultiSymFunc& f, int color, const RatFunc& c);
// p_n[X^(i)] -> p_n[X^(i)] + c_i(q^n, ...) for every color at once.
MultiSymFunc pleth_translate(const MultiSymFunc& f, const std::vector<RatFunc>& c);
// p_k -> (-1)^{k+1} p_k in every color
MultiSymFunc omega(const MultiSymFunc& f);
// General ring map given by the images of the generators p_n[X^(i)].
MultiSymFunc pleth_map(const MultiSymFunc& f, const std::function<MultiSymFunc(int n, int color)>& image,
                       int max_deg = -1);

// p_n[X^(i)] -> S^(i)(q^n, t^n, u^n, ...), extended multiplicatively.
RatFunc eval_colored(const MultiSymFunc& f, const ColoredCharSum& s);
// f[A S]: evaluate f[A X] at S without forming f[A X].
RatFunc eval_colored(const MultiSymFunc& f, const PlethMatrix& a, const ColoredCharSum& s);

// ---- pairings ----

RatFunc hall(const MultiSymFunc& f, const MultiSymFunc& g);
RatFunc star_pairing(const MultiSymFunc& f, const MultiSymFunc& g);
RatFunc qt_pairing(const MultiSymFunc& f, const MultiSymFunc& g);
// f^perp g, the Hall adjoint of multiplication by f
MultiSymFunc skew(const MultiSymFunc& f, const MultiSymFunc& g);

// ---- exponentials and kernels ----

// Omega[sum_i c_i X^(i)] truncated to degree n_max.
MultiSymFunc omega_series(const std::vector<RatFunc>& c, int n_max);
// Column j of A as a linear form: the Omega argument A X^(j).
std::vector<RatFunc> pleth_column(const PlethMatrix& a, int j);

// Finite sum of separable terms p_key[X] (x) g_key[Y].
class TwoAlphabetElem {
public:
    TwoAlphabetElem() = default;
    TwoAlphabetElem(int r, int n_max) : r_(r), n_max_(n_max) {}
    int r() const { return r_; }
    int n_max() const { return n_max_; }
    const std::map<PIndex, MultiSymFunc>& terms() const { return terms_; }
    void add(const MultiSymFunc& x, const MultiSymFunc& y);  // adds x (x) y, truncated
    TwoAlphabetElem swap() const;
    TwoAlphabetElem map_x(const std::function<MultiSymFunc(const MultiSymFunc&)>& f) const;
    TwoAlphabetElem map_y(const std::function<MultiSymFunc(const MultiSymFunc&)>& f) const;
    TwoAlphabetElem operator-(const TwoAlphabetElem& o) const;
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const TwoAlphabetElem& o) const { return r_ == o.r_ && terms_ == o.terms_; }

private:
    void add_key(const PIndex& k, const MultiSymFunc& y);
    int r_ = 1, n_max_ = 0;
    std::map<PIndex, MultiSymFunc> terms_;
};

// Omega[X^{-.} (A Y^.)] truncated to total degree n_max in each alphabet.
TwoAlphabetElem kernel(const PlethMatrix& a, int n_max);
// Kernel of the modified pairing: A = ((1 - q sigma^{-1})(t sigma - 1))^{-1}.
TwoAlphabetElem cauchy_kernel(int r, int n_max);

}  // namespace wm
