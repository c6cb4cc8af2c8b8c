#include "modp.hpp"

namespace wm::modp {

uint64_t pow(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long required");

uint64_t of(const mpz_class& z) { return mpz_fdiv_ui(z.get_mpz_t(), kP); }

uint64_t of(long z) {
    long m = z % long(kP);
    if (m < 0) m += long(kP);
    return uint64_t(m);
}

mpz_class lift(uint64_t a) {
    mpz_class r((unsigned long)a);
    if (a > kP / 2) r -= mpz_class((unsigned long)kP);
    return r;
}

void Point::set(int g, uint64_t v) {
    val[g] = v;
    inv[g] = v ? modp::inv(v) : 0;
}

Point Point::adams(int n) const {
    Point p;
    for (int g = 0; g < kNumGens; ++g) {
        p.val[g] = pow(val[g], n);
        p.inv[g] = pow(inv[g], n);
    }
    return p;
}

uint64_t eval(const MultiPoly& p, const Point& x) {
    uint64_t s = 0;
    for (auto& t : p.terms()) {
        uint64_t v = of(t.c);
        for (int g = 0; g < kNumGens; ++g) {
            int e = t.m.e[g];
            if (e > 0) v = mul(v, pow(x.val[g], e));
            else if (e < 0) v = mul(v, pow(x.inv[g], -e));
        }
        s = add(s, v);
    }
    return s;
}

std::optional<uint64_t> eval(const RatFunc& f, const Point& x) {
    uint64_t d = eval(f.den(), x);
    if (!d) return std::nullopt;
    return mul(eval(f.num(), x), inv(d));
}

int nullity(Matrix a, std::vector<uint64_t>* vec) {
    int rows = int(a.size());
    int cols = rows ? int(a[0].size()) : 0;
    if (vec) vec->clear();
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = r;
        while (piv < rows && !a[piv][c]) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        uint64_t iv = inv(a[r][c]);
        for (int j = c; j < cols; ++j) a[r][j] = mul(a[r][j], iv);
        for (int i = 0; i < rows; ++i) {
            if (i == r || !a[i][c]) continue;
            uint64_t f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] = sub(a[i][j], mul(f, a[r][j]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    int null = cols - r;
    if (vec && null > 0) {
        std::vector<bool> is_pivot(cols, false);
        for (int c : pivot_col) is_pivot[c] = true;
        int free = 0;
        while (is_pivot[free]) ++free;
        vec->assign(cols, 0);
        (*vec)[free] = 1;
        for (int i = 0; i < r; ++i) (*vec)[pivot_col[i]] = neg(a[i][free]);
    }
    return null;
}

Interpolator::Interpolator(std::vector<uint64_t> xs) : xs_(std::move(xs)) {
    int n = int(xs_.size());
    inv_.assign(n, {});
    for (int j = 1; j < n; ++j) {
        inv_[j].assign(n, 0);
        for (int i = j; i < n; ++i) inv_[j][i] = inv(sub(xs_[i], xs_[i - j]));
    }
}

std::vector<uint64_t> Interpolator::operator()(const std::vector<uint64_t>& ys) const {
    int n = int(xs_.size());
    std::vector<uint64_t> dd = ys;
    for (int j = 1; j < n; ++j)
        for (int i = n - 1; i >= j; --i) dd[i] = mul(sub(dd[i], dd[i - 1]), inv_[j][i]);
    // Horner on the Newton form: c = c * (x - xs[i]) + dd[i]
    std::vector<uint64_t> c(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        for (int k = n - 1; k >= 1; --k) c[k] = sub(c[k - 1], mul(c[k], xs_[i]));
        c[0] = add(neg(mul(c[0], xs_[i])), dd[i]);
    }
    return c;
}

std::vector<uint64_t> interpolate(const std::vector<uint64_t>& xs, const std::vector<uint64_t>& ys) {
    return Interpolator(xs)(ys);
}

}  // namespace wm::modp
