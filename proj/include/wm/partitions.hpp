// Partitions, Maya diagrams, cores and quotients, colored character sums.
#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "wm/ratfield.hpp"

namespace wm {

// Box (a, b) sits in column a and row b; its character is q^a t^b.
struct Box {
    int a = 0, b = 0;
    int content() const { return b - a; }
    auto operator<=>(const Box&) const = default;
};

inline int mod(int x, int r) { return ((x % r) + r) % r; }
inline int color(const Box& x, int r) { return mod(x.content(), r); }
RatFunc character(const Box& x);

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // drops trailing zeros, validates

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return int(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }

    Partition conjugate() const;
    bool contains(const Partition& mu) const;
    bool has_box(const Box& x) const { return x.a >= 0 && x.b >= 0 && x.a < (*this)[x.b]; }
    std::vector<Box> boxes() const;
    std::vector<Box> addable() const;
    std::vector<Box> removable() const;
    Partition add_box(const Box& x) const;
    Partition remove_box(const Box& x) const;

    std::string str() const;  // comma-separated parts, empty string for the empty partition
    static Partition parse(const std::string& s);

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

using Multipartition = std::vector<Partition>;
std::string multipartition_str(const Multipartition& m);
int multipartition_size(const Multipartition& m);

// Dominance order lambda <= mu (sizes must agree).
bool dominated(const Partition& lambda, const Partition& mu);

// All partitions of n in reverse lexicographic order (n), (n-1,1), ...
const std::vector<Partition>& partitions_of(int n);
// All r-multipartitions of total size n, deterministic order.
std::vector<Multipartition> multipartitions(int n, int r);

// Maya diagram: m(n) = 1 (black) or -1 (white); vacuum is black exactly for n < 0.
class MayaDiagram {
public:
    MayaDiagram() = default;
    explicit MayaDiagram(std::set<int> flips) : flips_(std::move(flips)) {}

    const std::set<int>& flips() const { return flips_; }
    bool black(int n) const { return (n < 0) != (flips_.count(n) > 0); }
    int charge() const;
    // black positions that are >= low
    std::vector<int> black_above(int low) const;
    bool operator==(const MayaDiagram& o) const { return flips_ == o.flips_; }

private:
    std::set<int> flips_;
};

MayaDiagram maya_of(const Partition& lambda);
Partition partition_of(const MayaDiagram& m);  // throws std::invalid_argument on nonzero charge

struct CoreLabel {
    std::vector<int> charges;
    int r() const { return int(charges.size()); }
    bool operator==(const CoreLabel&) const = default;
    auto operator<=>(const CoreLabel&) const = default;
    std::string str() const;
    static CoreLabel parse(const std::string& s);
    static CoreLabel zero(int r) { return CoreLabel{std::vector<int>(r, 0)}; }
};

struct CoreQuotient {
    Partition core;
    Multipartition quot;
    CoreLabel charges;
};

CoreQuotient core_quot(const Partition& lambda, int r);
Partition from_core_quot(const CoreLabel& charges, const Multipartition& quot);
Partition core_partition(const CoreLabel& charges);
CoreLabel core_label(const Partition& lambda, int r);
Multipartition quotient(const Partition& lambda, int r);

// pi acts by m_i(pi lambda) = m_{pi(i)}(lambda); pi given as the image list.
Partition perm_act(const Partition& lambda, const std::vector<int>& pi);
CoreLabel perm_act(const CoreLabel& c, const std::vector<int>& pi);
std::vector<int> sigma_perm(int r, int k = 1);  // sigma^k: i -> i - k
std::vector<int> w0_perm(int r);                // i -> -i-1
Partition sigma_act(const Partition& lambda, int r, int k = 1);
Partition w0_act(const Partition& lambda, int r);
CoreLabel sigma_act(const CoreLabel& c, int k = 1);
CoreLabel w0_act(const CoreLabel& c);

// Partitions with the given core and quotient size n, sorted lexicographically by parts.
std::vector<Partition> enumerate(const CoreLabel& core, int n);

// lambda <=_r mu: dominance with equal core.
bool dominated_r(const Partition& lambda, const Partition& mu, int r);

// Color-indexed family of rational functions.
struct ColoredCharSum {
    std::vector<RatFunc> comp;
    int r() const { return int(comp.size()); }
    RatFunc& operator[](int i) { return comp[mod(i, r())]; }
    const RatFunc& operator[](int i) const { return comp[mod(i, r())]; }
    static ColoredCharSum zero(int r) { return ColoredCharSum{std::vector<RatFunc>(r)}; }
    ColoredCharSum operator+(const ColoredCharSum& o) const;
    ColoredCharSum operator-(const ColoredCharSum& o) const;
    ColoredCharSum scale(const RatFunc& c) const;
    // (q, t) -> (1/q, 1/t) componentwise, colors fixed.
    ColoredCharSum star() const;
    // Component i of the result is component i + k of this (evaluation at sigma^k X).
    ColoredCharSum shift(int k) const;
    // Component i of the result is component -i of this.
    ColoredCharSum iota() const;
    RatFunc total() const;
    bool operator==(const ColoredCharSum& o) const { return comp == o.comp; }
};

// Split a Laurent polynomial in q, t by the color (b - a) mod r of each monomial q^a t^b.
ColoredCharSum colored_split(const RatFunc& poly, int r);

struct CharSums {
    ColoredCharSum B, D;
};
CharSums char_sums(const Partition& lambda, int r);
// D by the addable/removable corner formula.
ColoredCharSum d_from_corners(const Partition& lambda, int r);
// Colored components of 1/((1-q)(1-t)).
ColoredCharSum geometric(int r);

// Product of characters over boxes of lambda minus core with color c.
RatFunc box_product(const Partition& lambda, const Partition& core, int c, int r);

}  // namespace wm
