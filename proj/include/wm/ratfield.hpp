// Exact multivariate polynomials and rational functions over Z.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace wm {

// Generator alphabet. Q and D are the square roots of the quantum parameters,
// so q = Q^2 D^2 and t = Q^2 D^-2.
enum Gen : int { kQ = 0, kT, kU, kQh, kDh, kV, kZ0 };
constexpr int kNumGens = 16;
constexpr int kNumZ = kNumGens - kZ0;

const char* gen_name(int g);
int gen_of(const std::string& name);  // -1 if unknown
inline int zgen(int i) { return kZ0 + i; }

class arith_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Monomial {
    std::array<int16_t, kNumGens> e{};

    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool is_one() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumGens; ++i) r.e[i] = int16_t(e[i] + o.e[i]);
        return r;
    }
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumGens; ++i) r.e[i] = int16_t(e[i] - o.e[i]);
        return r;
    }
    bool divisible_by(const Monomial& o) const {
        for (int i = 0; i < kNumGens; ++i)
            if (e[i] < o.e[i]) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
    static Monomial var(int g, int k = 1) {
        Monomial m;
        m.e[g] = int16_t(k);
        return m;
    }
};

// Graded lexicographic comparison: -1, 0, 1.
int grlex_cmp(const Monomial& a, const Monomial& b);
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

struct Term {
    Monomial m;
    mpz_class c;
};

// Sparse polynomial, terms sorted by decreasing grlex order, no zero coefficients.
// Negative exponents are representable; gcd and division expect polynomials.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(long c);
    MultiPoly(const mpz_class& c);
    static MultiPoly var(int g, int k = 1);
    static MultiPoly monomial(const Monomial& m, const mpz_class& c = 1);
    static MultiPoly from_terms(std::vector<Term> terms);  // sorts and merges

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].c == 1; }
    mpz_class constant_value() const { return terms_.empty() || !terms_.back().m.is_one() ? mpz_class(0) : terms_.back().c; }
    const Term& lead() const { return terms_.front(); }
    size_t size() const { return terms_.size(); }

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly mul_term(const Monomial& m, const mpz_class& c) const;
    MultiPoly mul_scalar(const mpz_class& c) const;
    MultiPoly div_scalar_exact(const mpz_class& c) const;
    MultiPoly pow(unsigned k) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Exact quotient, or nullopt if the division leaves a remainder.
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;

    mpz_class content() const;  // positive gcd of coefficients, 0 for zero
    Monomial min_monomial() const;  // componentwise minimum exponents
    int degree_in(int g) const;
    int min_degree_in(int g) const;
    int total_degree() const;
    uint32_t var_mask() const;
    // Coefficients with respect to generator g: exponent -> coefficient.
    std::map<int, MultiPoly> coeffs_in(int g) const;
    MultiPoly eval_int(int g, const mpz_class& x) const;  // substitute integer for g
    mpz_class max_norm() const;

    // Apply a monomial map: generator i -> images[i] (a monomial with exponent vector).
    MultiPoly map_monomials(const std::array<Monomial, kNumGens>& images) const;

    std::string str() const;

private:
    std::vector<Term> terms_;
    friend MultiPoly add_impl(const MultiPoly&, const MultiPoly&, bool);
};

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

// Exact rational function num/den in canonical form: polynomial num and den,
// gcd(num, den) = 1, leading coefficient of den positive.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const mpz_class& c) : num_(c), den_(1) {}
    RatFunc(const mpq_class& c);
    RatFunc(const MultiPoly& p);
    static RatFunc var(int g, int k = 1);
    static RatFunc normalize(MultiPoly num, MultiPoly den);
    // Caller guarantees canonical form.
    static RatFunc unchecked(MultiPoly num, MultiPoly den) { return RatFunc(std::move(num), std::move(den), true); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    RatFunc inv() const;
    RatFunc pow(int k) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string str() const;

private:
    RatFunc(MultiPoly n, MultiPoly d, bool) : num_(std::move(n)), den_(std::move(d)) {}
    MultiPoly num_, den_;
};

// Substitute each generator present in the map by a rational function.
RatFunc substitute(const RatFunc& f, const std::map<int, RatFunc>& images);
// Substitute generators by monomials (fast path used for q -> q^n and inversions).
RatFunc substitute_monomial(const RatFunc& f, const std::array<Monomial, kNumGens>& images);
// Every generator raised to the n-th power (the plethystic Adams operation).
RatFunc adams(const RatFunc& f, int n);
// f(1/q, 1/t).
RatFunc invert_qt(const RatFunc& f);
// Coefficient of u^k after expanding f as a polynomial in u (f must be polynomial in u).
std::vector<RatFunc> coeffs_in_gen(const RatFunc& f, int g);

MultiPoly parse_poly(const std::string& s);
RatFunc parse_ratfunc(const std::string& s);

// Truncated power series in a set of small generators with coefficients that are
// rational functions in the remaining generators.
class TruncSeries {
public:
    using Exps = std::vector<int>;

    TruncSeries() = default;
    TruncSeries(std::vector<int> small, int order, int low = 0)
        : small_(std::move(small)), order_(order), low_(low) {}

    static TruncSeries constant(std::vector<int> small, int order, const RatFunc& c);
    static TruncSeries expand(const RatFunc& f, const std::vector<int>& small, int order);

    const std::vector<int>& small() const { return small_; }
    int order() const { return order_; }
    int low() const { return low_; }
    const std::map<Exps, RatFunc>& terms() const { return terms_; }

    void add_term(const Exps& e, const RatFunc& c);
    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries scale(const RatFunc& c) const;
    bool operator==(const TruncSeries& o) const;
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }
    // Rational function sum of all stored terms.
    RatFunc to_ratfunc() const;
    std::string str() const;

private:
    int degree_of(const Exps& e) const;
    std::vector<int> small_;
    int order_ = 0;
    int low_ = 0;
    std::map<Exps, RatFunc> terms_;
};

}  // namespace wm
