// Arithmetic modulo the Mersenne prime 2^61 - 1, used for sampling exact systems.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "wm/ratfield.hpp"

namespace wm::modp {

constexpr uint64_t kP = (uint64_t(1) << 61) - 1;

inline uint64_t reduce(unsigned __int128 x) {
    uint64_t lo = uint64_t(x & kP), hi = uint64_t(x >> 61);
    uint64_t s = lo + hi;
    if (s >= kP) s -= kP;
    return s;
}
inline uint64_t mul(uint64_t a, uint64_t b) { return reduce((unsigned __int128)a * b); }
inline uint64_t add(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    return s >= kP ? s - kP : s;
}
inline uint64_t sub(uint64_t a, uint64_t b) { return a >= b ? a - b : a + kP - b; }
inline uint64_t neg(uint64_t a) { return a ? kP - a : 0; }
uint64_t pow(uint64_t a, uint64_t e);
inline uint64_t inv(uint64_t a) { return pow(a, kP - 2); }
uint64_t of(const mpz_class& z);
uint64_t of(long z);
// symmetric lift to (-P/2, P/2]
mpz_class lift(uint64_t a);

// Values of the generators; negative exponents use the inverses.
struct Point {
    std::array<uint64_t, kNumGens> val{};
    std::array<uint64_t, kNumGens> inv{};
    void set(int g, uint64_t v);
    // the point with every generator raised to the n-th power
    Point adams(int n) const;
};

uint64_t eval(const MultiPoly& p, const Point& x);
// nullopt when the denominator vanishes at x
std::optional<uint64_t> eval(const RatFunc& f, const Point& x);

using Matrix = std::vector<std::vector<uint64_t>>;
// Dimension of the nullspace and one basis vector of it (when nonzero).
int nullity(Matrix a, std::vector<uint64_t>* vec = nullptr);

// Polynomial through (xs[i], ys[i]); coefficients in increasing degree.
std::vector<uint64_t> interpolate(const std::vector<uint64_t>& xs, const std::vector<uint64_t>& ys);

// Interpolation at fixed nodes, reused for many value vectors.
class Interpolator {
public:
    explicit Interpolator(std::vector<uint64_t> xs);
    std::vector<uint64_t> operator()(const std::vector<uint64_t>& ys) const;

private:
    std::vector<uint64_t> xs_;
    std::vector<std::vector<uint64_t>> inv_;  // inv_[j][i] = 1 / (xs[i] - xs[i - j])
};

}  // namespace wm::modp
