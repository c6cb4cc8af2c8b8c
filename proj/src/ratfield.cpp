#include "wm/ratfield.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wm {

namespace {

const char* const kGenNames[kNumGens] = {"q",  "t",  "u",  "Q",  "D",  "v",  "z0", "z1",
                                         "z2", "z3", "z4", "z5", "z6", "z7", "z8", "z9"};

mpz_class abs_mpz(const mpz_class& x) { return x < 0 ? mpz_class(-x) : x; }

}  // namespace

const char* gen_name(int g) { return kGenNames[g]; }

int gen_of(const std::string& name) {
    for (int i = 0; i < kNumGens; ++i)
        if (name == kGenNames[i]) return i;
    return -1;
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (int i = 0; i < kNumGens; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(long c) {
    if (c != 0) terms_.push_back({Monomial{}, mpz_class(c)});
}

MultiPoly::MultiPoly(const mpz_class& c) {
    if (c != 0) terms_.push_back({Monomial{}, c});
}

MultiPoly MultiPoly::var(int g, int k) { return monomial(Monomial::var(g, k), 1); }

MultiPoly MultiPoly::monomial(const Monomial& m, const mpz_class& c) {
    MultiPoly p;
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grlex_cmp(a.m, b.m) > 0; });
    MultiPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().m == t.m)
            p.terms_.back().c += t.c;
        else {
            if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
    return p;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

MultiPoly add_impl(const MultiPoly& a, const MultiPoly& b, bool negate) {
    MultiPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        int c;
        if (i == a.terms_.size())
            c = -1;
        else if (j == b.terms_.size())
            c = 1;
        else
            c = grlex_cmp(a.terms_[i].m, b.terms_[j].m);
        if (c > 0) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(b.terms_[j++]);
            if (negate) r.terms_.back().c = -r.terms_.back().c;
        } else {
            mpz_class s = negate ? mpz_class(a.terms_[i].c - b.terms_[j].c)
                                 : mpz_class(a.terms_[i].c + b.terms_[j].c);
            if (s != 0) r.terms_.push_back({a.terms_[i].m, std::move(s)});
            ++i;
            ++j;
        }
    }
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const { return add_impl(*this, o, false); }
MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return add_impl(*this, o, true); }

MultiPoly MultiPoly::mul_term(const Monomial& m, const mpz_class& c) const {
    MultiPoly r;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    return r;
}

MultiPoly MultiPoly::mul_scalar(const mpz_class& c) const { return mul_term(Monomial{}, c); }

MultiPoly MultiPoly::div_scalar_exact(const mpz_class& c) const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (is_zero() || o.is_zero()) return MultiPoly();
    if (terms_.size() == 1) return o.mul_term(terms_[0].m, terms_[0].c);
    if (o.terms_.size() == 1) return mul_term(o.terms_[0].m, o.terms_[0].c);
    struct P {
        Monomial m;
        uint32_t i, j;
    };
    std::vector<P> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    for (uint32_t i = 0; i < terms_.size(); ++i)
        for (uint32_t j = 0; j < o.terms_.size(); ++j)
            prods.push_back({terms_[i].m * o.terms_[j].m, i, j});
    std::sort(prods.begin(), prods.end(), [](const P& a, const P& b) { return grlex_cmp(a.m, b.m) > 0; });
    MultiPoly r;
    mpz_class acc;
    size_t k = 0;
    while (k < prods.size()) {
        size_t l = k;
        acc = 0;
        while (l < prods.size() && prods[l].m == prods[k].m) {
            mpz_addmul(acc.get_mpz_t(), terms_[prods[l].i].c.get_mpz_t(), o.terms_[prods[l].j].c.get_mpz_t());
            ++l;
        }
        if (acc != 0) r.terms_.push_back({prods[k].m, acc});
        k = l;
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly r(1), b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
    if (d.is_zero()) throw arith_error("division by zero polynomial");
    if (is_zero()) return MultiPoly();
    if (d.terms_.size() == 1) {
        MultiPoly r;
        r.terms_.reserve(terms_.size());
        const Term& dt = d.terms_[0];
        for (auto& t : terms_) {
            if (!t.m.divisible_by(dt.m) || !mpz_divisible_p(t.c.get_mpz_t(), dt.c.get_mpz_t())) return std::nullopt;
            mpz_class c;
            mpz_divexact(c.get_mpz_t(), t.c.get_mpz_t(), dt.c.get_mpz_t());
            r.terms_.push_back({t.m / dt.m, std::move(c)});
        }
        return r;
    }
    const Term& L = d.terms_[0];
    if (!terms_[0].m.divisible_by(L.m)) return std::nullopt;
    // the last term of a product is the product of the last terms
    const Term& dl = d.terms_.back();
    if (!terms_.back().m.divisible_by(dl.m) || !mpz_divisible_p(terms_.back().c.get_mpz_t(), dl.c.get_mpz_t()))
        return std::nullopt;
    std::map<Monomial, mpz_class, GrlexGreater> rem;
    for (auto& t : terms_) rem.emplace(t.m, t.c);
    MultiPoly q;
    mpz_class qc;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!it->first.divisible_by(L.m) || !mpz_divisible_p(it->second.get_mpz_t(), L.c.get_mpz_t()))
            return std::nullopt;
        Monomial qm = it->first / L.m;
        mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), L.c.get_mpz_t());
        rem.erase(it);
        for (size_t k = 1; k < d.terms_.size(); ++k) {
            Monomial m = d.terms_[k].m * qm;
            auto [pos, inserted] = rem.try_emplace(m);
            mpz_submul(pos->second.get_mpz_t(), qc.get_mpz_t(), d.terms_[k].c.get_mpz_t());
            if (pos->second == 0) rem.erase(pos);
        }
        q.terms_.push_back({qm, qc});
    }
    return q;
}

mpz_class MultiPoly::content() const {
    mpz_class g = 0;
    for (auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Monomial MultiPoly::min_monomial() const {
    Monomial m;
    if (terms_.empty()) return m;
    m = terms_[0].m;
    for (auto& t : terms_)
        for (int i = 0; i < kNumGens; ++i) m.e[i] = std::min(m.e[i], t.m.e[i]);
    return m;
}

int MultiPoly::degree_in(int g) const {
    int d = 0;
    bool first = true;
    for (auto& t : terms_) {
        if (first || t.m.e[g] > d) d = t.m.e[g];
        first = false;
    }
    return d;
}

int MultiPoly::min_degree_in(int g) const {
    int d = 0;
    bool first = true;
    for (auto& t : terms_) {
        if (first || t.m.e[g] < d) d = t.m.e[g];
        first = false;
    }
    return d;
}

int MultiPoly::total_degree() const { return terms_.empty() ? 0 : terms_[0].m.degree(); }

uint32_t MultiPoly::var_mask() const {
    uint32_t mask = 0;
    for (auto& t : terms_)
        for (int i = 0; i < kNumGens; ++i)
            if (t.m.e[i]) mask |= 1u << i;
    return mask;
}

std::map<int, MultiPoly> MultiPoly::coeffs_in(int g) const {
    std::map<int, std::vector<Term>> parts;
    for (auto& t : terms_) {
        Term s = t;
        s.m.e[g] = 0;
        parts[t.m.e[g]].push_back(std::move(s));
    }
    std::map<int, MultiPoly> r;
    for (auto& [k, v] : parts) {
        MultiPoly p;
        p.terms_ = std::move(v);  // removing one variable keeps grlex order within a slice
        r.emplace(k, std::move(p));
    }
    return r;
}

MultiPoly MultiPoly::eval_int(int g, const mpz_class& x) const {
    int hi = degree_in(g), lo = min_degree_in(g);
    if (lo < 0) throw arith_error("eval_int on Laurent polynomial");
    std::vector<mpz_class> pw(hi + 1);
    pw[0] = 1;
    for (int k = 1; k <= hi; ++k) pw[k] = pw[k - 1] * x;
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (auto& t : terms_) {
        Term s{t.m, t.c * pw[t.m.e[g]]};
        s.m.e[g] = 0;
        ts.push_back(std::move(s));
    }
    return from_terms(std::move(ts));
}

mpz_class MultiPoly::max_norm() const {
    mpz_class m = 0;
    for (auto& t : terms_)
        if (mpz_cmpabs(t.c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs_mpz(t.c);
    return m;
}

MultiPoly MultiPoly::map_monomials(const std::array<Monomial, kNumGens>& images) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (auto& t : terms_) {
        Monomial m;
        for (int i = 0; i < kNumGens; ++i)
            if (t.m.e[i])
                for (int j = 0; j < kNumGens; ++j) m.e[j] = int16_t(m.e[j] + t.m.e[i] * images[i].e[j]);
        ts.push_back({m, t.c});
    }
    return from_terms(std::move(ts));
}

namespace {

void append_monomial(std::ostringstream& os, const Monomial& m, bool& first_factor) {
    for (int i = 0; i < kNumGens; ++i) {
        if (!m.e[i]) continue;
        if (!first_factor) os << '*';
        first_factor = false;
        os << kGenNames[i];
        if (m.e[i] != 1) os << '^' << m.e[i];
    }
}

}  // namespace

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        mpz_class c = t.c;
        if (c < 0) {
            os << '-';
            c = -c;
        } else if (!first) {
            os << '+';
        }
        first = false;
        bool first_factor = true;
        if (c != 1 || t.m.is_one()) {
            os << c.get_str();
            first_factor = false;
        }
        append_monomial(os, t.m, first_factor);
    }
    return os.str();
}

// ---------------------------------------------------------------- gcd

namespace {

MultiPoly positive_lead(MultiPoly p) {
    if (!p.is_zero() && p.lead().c < 0) return -p;
    return p;
}

MultiPoly primitive_part(const MultiPoly& p) {
    if (p.is_zero()) return p;
    mpz_class c = p.content();
    MultiPoly r = c == 1 ? p : p.div_scalar_exact(c);
    return positive_lead(std::move(r));
}

MultiPoly gcd_primitive(const MultiPoly& a, const MultiPoly& b);

// Symmetric residue of every coefficient modulo m.
MultiPoly symmetric_mod(const MultiPoly& p, const mpz_class& m, const mpz_class& half) {
    std::vector<Term> ts;
    for (auto& t : p.terms()) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), t.c.get_mpz_t(), m.get_mpz_t());
        if (r > half) r -= m;
        if (r != 0) ts.push_back({t.m, r});
    }
    return MultiPoly::from_terms(std::move(ts));
}

std::optional<MultiPoly> heuristic_gcd(const MultiPoly& f, const MultiPoly& g) {
    uint32_t mask = f.var_mask() | g.var_mask();
    if (!mask) return MultiPoly(gcd(f.constant_value(), g.constant_value()));
    int x = __builtin_ctz(mask);
    mpz_class fn = f.max_norm(), gn = g.max_norm();
    mpz_class B = 2 * std::min(fn, gn) + 29;
    mpz_class s = sqrt(B);
    mpz_class xi = std::min(B, mpz_class(99 * s));
    auto lcx = [x](const MultiPoly& p) {
        auto cs = p.coeffs_in(x);
        return cs.rbegin()->second.max_norm();
    };
    mpz_class alt = 2 * std::min(mpz_class(fn / lcx(f)), mpz_class(gn / lcx(g))) + 2;
    xi = std::max(xi, alt);
    for (int attempt = 0; attempt < 6; ++attempt) {
        MultiPoly ff = f.eval_int(x, xi), gg = g.eval_int(x, xi);
        if (!ff.is_zero() && !gg.is_zero()) {
            MultiPoly h = gcd(ff, gg);
            MultiPoly H;
            mpz_class half = xi / 2;
            int i = 0;
            while (!h.is_zero()) {
                MultiPoly digit = symmetric_mod(h, xi, half);
                H += digit.mul_term(Monomial::var(x, i), 1);
                h = (h - digit).div_scalar_exact(xi);
                ++i;
            }
            H = primitive_part(H);
            if (!H.is_zero() && f.divide_exact(H) && g.divide_exact(H)) return H;
        }
        mpz_class r = sqrt(sqrt(xi));
        xi = xi * 73794 * r / 27011;
    }
    return std::nullopt;
}

using UPoly = std::vector<MultiPoly>;  // dense in main variable, index = exponent

UPoly to_upoly(const MultiPoly& p, int x) {
    auto cs = p.coeffs_in(x);
    UPoly u(cs.rbegin()->first + 1);
    for (auto& [k, c] : cs) u[k] = c;
    return u;
}

void trim(UPoly& u) {
    while (!u.empty() && u.back().is_zero()) u.pop_back();
}

MultiPoly ucontent(const UPoly& u) {
    MultiPoly g;
    for (auto& c : u) {
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

UPoly udiv_content(const UPoly& u, const MultiPoly& c) {
    UPoly r(u.size());
    for (size_t i = 0; i < u.size(); ++i) r[i] = u[i].is_zero() ? MultiPoly() : *u[i].divide_exact(c);
    return r;
}

// Pseudo-remainder of a by b.
UPoly uprem(UPoly a, const UPoly& b) {
    const MultiPoly& lb = b.back();
    size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        size_t shift = a.size() - b.size();
        MultiPoly la = a.back();
        for (auto& c : a) c = c * lb;
        for (size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        trim(a);
    }
    return a;
}

MultiPoly prs_gcd(const MultiPoly& a, const MultiPoly& b) {
    uint32_t mask = a.var_mask() & b.var_mask();
    int x = __builtin_ctz(mask);
    UPoly A = to_upoly(a, x), B = to_upoly(b, x);
    MultiPoly ca = ucontent(A), cb = ucontent(B);
    MultiPoly cont = gcd(ca, cb);
    A = udiv_content(A, ca);
    B = udiv_content(B, cb);
    if (A.size() < B.size()) std::swap(A, B);
    while (!B.empty()) {
        UPoly R = uprem(A, B);
        A = std::move(B);
        trim(R);
        if (R.empty()) break;
        if (R.size() == 1) {
            A = UPoly{MultiPoly(1)};
            break;
        }
        B = udiv_content(R, ucontent(R));
    }
    MultiPoly g;
    for (size_t i = 0; i < A.size(); ++i) g += A[i].mul_term(Monomial::var(x, int(i)), 1);
    g = primitive_part(g);
    return positive_lead(cont * g);
}

// a, b: content 1, no monomial factor, positive leading coefficient.
MultiPoly gcd_primitive(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_constant() || b.is_constant()) return MultiPoly(1);
    if (a == b) return a;
    uint32_t ma = a.var_mask(), mb = b.var_mask();
    if (ma != mb) {
        uint32_t only_a = ma & ~mb, only_b = mb & ~ma;
        const MultiPoly& src = only_a ? a : b;
        const MultiPoly& other = only_a ? b : a;
        int x = __builtin_ctz(only_a ? only_a : only_b);
        MultiPoly g = other;
        for (auto& [k, c] : src.coeffs_in(x)) {
            g = gcd(g, c);
            if (g.is_one()) break;
        }
        return positive_lead(g);
    }
    if (a.size() >= b.size()) {
        if (a.divide_exact(b)) return b;
    } else if (b.divide_exact(a)) {
        return a;
    }
    if (auto h = heuristic_gcd(a, b)) return *h;
    return prs_gcd(a, b);
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return positive_lead(b);
    if (b.is_zero()) return positive_lead(a);
    Monomial ma = a.min_monomial(), mb = b.min_monomial(), m;
    for (int i = 0; i < kNumGens; ++i) m.e[i] = std::min(ma.e[i], mb.e[i]);
    mpz_class ca = a.content(), cb = b.content(), c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a.is_monomial() || b.is_monomial()) return MultiPoly::monomial(m, c);
    MultiPoly pa = positive_lead(*a.divide_exact(MultiPoly::monomial(ma, ca)));
    MultiPoly pb = positive_lead(*b.divide_exact(MultiPoly::monomial(mb, cb)));
    MultiPoly g = gcd_primitive(pa, pb);
    return g.mul_term(m, c);
}

// ---------------------------------------------------------------- RatFunc

namespace {

// Shift num and den by a common monomial so that both are polynomials and share no monomial factor.
void clear_monomials(MultiPoly& num, MultiPoly& den) {
    Monomial mn = num.min_monomial(), md = den.min_monomial(), shift;
    bool any = false;
    for (int i = 0; i < kNumGens; ++i) {
        int lo = num.is_zero() ? md.e[i] : std::min(mn.e[i], md.e[i]);
        shift.e[i] = int16_t(-lo);
        if (lo) any = true;
    }
    if (any) {
        num = num.mul_term(shift, 1);
        den = den.mul_term(shift, 1);
    }
}

void fix_sign(MultiPoly& num, MultiPoly& den) {
    if (den.lead().c < 0) {
        num = -num;
        den = -den;
    }
}

}  // namespace

RatFunc::RatFunc(const mpq_class& c) {
    *this = normalize(MultiPoly(c.get_num()), MultiPoly(c.get_den()));
}

RatFunc::RatFunc(const MultiPoly& p) : num_(p), den_(1) {
    if (!p.is_zero()) {
        Monomial m = p.min_monomial();
        bool neg = false;
        for (auto e : m.e)
            if (e < 0) neg = true;
        if (neg) *this = normalize(p, MultiPoly(1));
    }
}

RatFunc RatFunc::var(int g, int k) { return RatFunc(MultiPoly::var(g, k)); }

RatFunc RatFunc::normalize(MultiPoly num, MultiPoly den) {
    if (den.is_zero()) throw arith_error("division by zero");
    if (num.is_zero()) return RatFunc();
    clear_monomials(num, den);
    MultiPoly g = gcd(num, den);
    if (!g.is_one()) {
        num = *num.divide_exact(g);
        den = *den.divide_exact(g);
    }
    fix_sign(num, den);
    return RatFunc(std::move(num), std::move(den), true);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, true); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_.is_one() && o.den_.is_one()) return RatFunc(num_ + o.num_, den_, true);
    if (den_ == o.den_) {
        MultiPoly n = num_ + o.num_;
        if (n.is_zero()) return RatFunc();
        MultiPoly g = gcd(n, den_);
        if (g.is_one()) return RatFunc(std::move(n), den_, true);
        return RatFunc(*n.divide_exact(g), *den_.divide_exact(g), true);
    }
    MultiPoly g = gcd(den_, o.den_);
    if (g.is_one()) return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_, true);
    MultiPoly b1 = *den_.divide_exact(g), d1 = *o.den_.divide_exact(g);
    MultiPoly n = num_ * d1 + o.num_ * b1;
    if (n.is_zero()) return RatFunc();
    MultiPoly den = b1 * o.den_;
    MultiPoly g2 = gcd(n, g);
    if (!g2.is_one()) {
        n = *n.divide_exact(g2);
        den = *den.divide_exact(g2);
    }
    return RatFunc(std::move(n), std::move(den), true);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    if (den_.is_one() && o.den_.is_one()) return RatFunc(num_ * o.num_, den_, true);
    MultiPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    MultiPoly a = g1.is_one() ? num_ : *num_.divide_exact(g1);
    MultiPoly d = g1.is_one() ? o.den_ : *o.den_.divide_exact(g1);
    MultiPoly c = g2.is_one() ? o.num_ : *o.num_.divide_exact(g2);
    MultiPoly b = g2.is_one() ? den_ : *den_.divide_exact(g2);
    return RatFunc(a * c, b * d, true);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw arith_error("division by zero");
    MultiPoly n = den_, d = num_;
    fix_sign(n, d);
    return RatFunc(std::move(n), std::move(d), true);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::pow(int k) const {
    if (k < 0) return inv().pow(-k);
    MultiPoly n = num_.pow(unsigned(k)), d = den_.pow(unsigned(k));
    return RatFunc(std::move(n), std::move(d), true);
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc substitute(const RatFunc& f, const std::map<int, RatFunc>& images) {
    auto eval = [&](const MultiPoly& p, std::map<int, std::pair<int, int>>& range) {
        // range[g] = (lo, hi) exponents of g across num and den
        std::map<int, std::vector<MultiPoly>> npow, dpow;
        for (auto& [g, img] : images) {
            auto [lo, hi] = range[g];
            int span = hi - lo;
            auto& np = npow[g];
            auto& dp = dpow[g];
            np.assign(span + 1, MultiPoly(1));
            dp.assign(span + 1, MultiPoly(1));
            for (int k = 1; k <= span; ++k) {
                np[k] = np[k - 1] * img.num();
                dp[k] = dp[k - 1] * img.den();
            }
        }
        MultiPoly out;
        for (auto& t : p.terms()) {
            Monomial rest = t.m;
            MultiPoly term = MultiPoly::monomial(Monomial{}, t.c);
            for (auto& [g, img] : images) {
                auto [lo, hi] = range[g];
                int e = t.m.e[g];
                rest.e[g] = 0;
                term = term * npow[g][e - lo] * dpow[g][hi - e];
            }
            out += term.mul_term(rest, 1);
        }
        return out;
    };
    std::map<int, std::pair<int, int>> range;
    for (auto& [g, img] : images) {
        int lo = std::min(f.num().min_degree_in(g), f.den().min_degree_in(g));
        int hi = std::max(f.num().degree_in(g), f.den().degree_in(g));
        range[g] = {lo, hi};
    }
    MultiPoly n = eval(f.num(), range), d = eval(f.den(), range);
    return RatFunc::normalize(std::move(n), std::move(d));
}

namespace {

RatFunc monomial_map(const RatFunc& f, const std::array<Monomial, kNumGens>& images, bool trusted) {
    MultiPoly n = f.num().map_monomials(images), d = f.den().map_monomials(images);
    if (!trusted) return RatFunc::normalize(std::move(n), std::move(d));
    clear_monomials(n, d);
    fix_sign(n, d);
    // coprimality is preserved by injective monomial maps
    return RatFunc::unchecked(std::move(n), std::move(d));
}

}  // namespace

RatFunc substitute_monomial(const RatFunc& f, const std::array<Monomial, kNumGens>& images) {
    return monomial_map(f, images, false);
}

RatFunc adams(const RatFunc& f, int n) {
    if (n == 1 || f.is_constant()) return f;
    if (f.den().is_constant()) {
        MultiPoly p = f.num();
        std::vector<Term> ts;
        for (auto& t : p.terms()) {
            Term s = t;
            for (auto& e : s.m.e) e = int16_t(e * n);
            ts.push_back(std::move(s));
        }
        return RatFunc(MultiPoly::from_terms(std::move(ts))) / RatFunc(f.den());
    }
    std::array<Monomial, kNumGens> img;
    for (int i = 0; i < kNumGens; ++i) img[i] = Monomial::var(i, n);
    return monomial_map(f, img, true);
}

RatFunc invert_qt(const RatFunc& f) {
    std::array<Monomial, kNumGens> img;
    for (int i = 0; i < kNumGens; ++i) img[i] = Monomial::var(i, 1);
    img[kQ] = Monomial::var(kQ, -1);
    img[kT] = Monomial::var(kT, -1);
    return monomial_map(f, img, true);
}

std::vector<RatFunc> coeffs_in_gen(const RatFunc& f, int g) {
    if (f.den().degree_in(g) != 0) throw arith_error("coeffs_in_gen: generator in denominator");
    std::vector<RatFunc> out;
    if (f.is_zero()) return out;
    auto cs = f.num().coeffs_in(g);
    if (cs.begin()->first < 0) throw arith_error("coeffs_in_gen: negative exponent");
    out.resize(cs.rbegin()->first + 1);
    RatFunc dinv = RatFunc(f.den()).inv();
    for (auto& [k, c] : cs) out[k] = RatFunc(c) * dinv;
    return out;
}

// ---------------------------------------------------------------- parsing

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at " + std::to_string(pos) + ": " + what);
    }
    RatFunc expr() {
        RatFunc r;
        bool neg = eat('-');
        if (!neg) eat('+');
        r = term();
        if (neg) r = -r;
        for (;;) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                break;
        }
        return r;
    }
    RatFunc term() {
        RatFunc r = power();
        for (;;) {
            if (eat('*'))
                r *= power();
            else if (eat('/'))
                r /= power();
            else
                break;
        }
        return r;
    }
    RatFunc power() {
        RatFunc b = atom();
        if (eat('^')) {
            skip();
            bool neg = false;
            if (eat('-')) neg = true;
            skip();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) fail("exponent");
            int k = std::stoi(s.substr(start, pos - start));
            b = b.pow(neg ? -k : k);
        }
        return b;
    }
    RatFunc atom() {
        skip();
        if (eat('(')) {
            RatFunc r = expr();
            if (!eat(')')) fail("expected )");
            return r;
        }
        if (eat('-')) return -atom();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return RatFunc(mpz_class(s.substr(start, pos - start)));
        }
        size_t start = pos;
        while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
        int g = gen_of(s.substr(start, pos - start));
        if (g < 0) fail("unknown generator '" + s.substr(start, pos - start) + "'");
        return RatFunc::var(g);
    }
};

}  // namespace

RatFunc parse_ratfunc(const std::string& s) {
    Parser p{s};
    RatFunc r = p.expr();
    p.skip();
    if (p.pos != s.size()) p.fail("trailing input");
    return r;
}

MultiPoly parse_poly(const std::string& s) {
    RatFunc r = parse_ratfunc(s);
    if (!r.den().is_one()) throw std::invalid_argument("not a polynomial: " + s);
    return r.num();
}

// ---------------------------------------------------------------- TruncSeries

int TruncSeries::degree_of(const Exps& e) const {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

TruncSeries TruncSeries::constant(std::vector<int> small, int order, const RatFunc& c) {
    TruncSeries s(std::move(small), order);
    s.add_term(Exps(s.small_.size(), 0), c);
    return s;
}

void TruncSeries::add_term(const Exps& e, const RatFunc& c) {
    if (c.is_zero()) return;
    int d = degree_of(e);
    if (d > order_) return;
    if (d < low_) throw arith_error("series term below window");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    TruncSeries r(small_, std::min(order_, o.order_), std::min(low_, o.low_));
    for (auto& [e, c] : terms_) r.add_term(e, c);
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + o.scale(RatFunc(-1)); }

TruncSeries TruncSeries::scale(const RatFunc& c) const {
    TruncSeries r(small_, order_, low_);
    if (c.is_zero()) return r;
    for (auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    if (small_ != o.small_) throw arith_error("series with different small variables");
    // the product of terms of degree a >= low and b >= o.low is kept up to the tighter order
    int order = std::min(order_ + o.low_, o.order_ + low_);
    TruncSeries r(small_, order, low_ + o.low_);
    for (auto& [e1, c1] : terms_) {
        int d1 = degree_of(e1);
        for (auto& [e2, c2] : o.terms_) {
            if (d1 + degree_of(e2) > order) continue;
            Exps e(e1.size());
            for (size_t k = 0; k < e.size(); ++k) e[k] = e1[k] + e2[k];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
    if (small_ != o.small_) return false;
    int order = std::min(order_, o.order_);
    auto it1 = terms_.begin(), it2 = o.terms_.begin();
    auto skip = [&](auto& it, const auto& end) {
        while (it != end && degree_of(it->first) > order) ++it;
    };
    for (;;) {
        skip(it1, terms_.end());
        skip(it2, o.terms_.end());
        bool e1 = it1 == terms_.end(), e2 = it2 == o.terms_.end();
        if (e1 || e2) return e1 && e2;
        if (it1->first != it2->first || it1->second != it2->second) return false;
        ++it1;
        ++it2;
    }
}

RatFunc TruncSeries::to_ratfunc() const {
    RatFunc r;
    for (auto& [e, c] : terms_) {
        Monomial m;
        for (size_t k = 0; k < small_.size(); ++k) m.e[small_[k]] = int16_t(e[k]);
        r += c * RatFunc(MultiPoly::monomial(m));
    }
    return r;
}

std::string TruncSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.str() << ')';
        for (size_t k = 0; k < small_.size(); ++k)
            if (e[k]) os << '*' << kGenNames[small_[k]] << '^' << e[k];
    }
    os << " + O(" << order_ + 1 << ')';
    return first ? "0 + O(" + std::to_string(order_ + 1) + ")" : os.str();
}

TruncSeries TruncSeries::expand(const RatFunc& f, const std::vector<int>& small, int order) {
    auto split = [&](const MultiPoly& p) {
        // exponent vector over small vars -> coefficient polynomial in the others
        std::map<Exps, std::vector<Term>> parts;
        for (auto& t : p.terms()) {
            Exps e(small.size());
            Term rest = t;
            for (size_t k = 0; k < small.size(); ++k) {
                e[k] = t.m.e[small[k]];
                rest.m.e[small[k]] = 0;
            }
            parts[e].push_back(std::move(rest));
        }
        std::map<Exps, MultiPoly> out;
        for (auto& [e, ts] : parts) out.emplace(e, MultiPoly::from_terms(std::move(ts)));
        return out;
    };
    auto nparts = split(f.num());
    auto dparts = split(f.den());
    // factor the smallest small-variable monomial out of the denominator
    Exps shift(small.size(), 0);
    bool firstd = true;
    for (auto& [e, c] : dparts) {
        for (size_t k = 0; k < small.size(); ++k) shift[k] = firstd ? e[k] : std::min(shift[k], e[k]);
        firstd = false;
    }
    Exps zero(small.size(), 0);
    std::map<Exps, MultiPoly> dshift;
    for (auto& [e, c] : dparts) {
        Exps e2(e);
        for (size_t k = 0; k < small.size(); ++k) e2[k] -= shift[k];
        dshift.emplace(e2, c);
    }
    auto it0 = dshift.find(zero);
    if (it0 == dshift.end()) throw arith_error("series_expand: denominator is not a unit");
    int sdeg = 0;
    for (int x : shift) sdeg += x;
    int nlow = 0;
    bool firstn = true;
    for (auto& [e, c] : nparts) {
        int d = 0;
        for (int x : e) d += x;
        nlow = firstn ? d : std::min(nlow, d);
        firstn = false;
    }
    // work at order + sdeg, then shift down
    int work = order + sdeg;
    RatFunc d0inv = RatFunc(it0->second).inv();
    TruncSeries u(small, work);
    for (auto& [e, c] : dshift)
        if (e != zero) u.add_term(e, -(RatFunc(c) * d0inv));
    TruncSeries inv = constant(small, work, RatFunc(1)), pw = inv;
    for (int k = 1; k <= work; ++k) {
        pw = pw * u;
        if (pw.terms_.empty()) break;
        inv = inv + pw;
    }
    inv = inv.scale(d0inv);
    TruncSeries num(small, work, std::min(0, nlow));
    for (auto& [e, c] : nparts) num.add_term(e, RatFunc(c));
    TruncSeries prod = num * inv;
    TruncSeries out(small, order, std::min(0, nlow) - sdeg);
    for (auto& [e, c] : prod.terms_) {
        Exps e2(e);
        for (size_t k = 0; k < small.size(); ++k) e2[k] -= shift[k];
        out.add_term(e2, c);
    }
    return out;
}

}  // namespace wm
