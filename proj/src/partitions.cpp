#include "wm/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace wm {

RatFunc character(const Box& x) {
    Monomial m;
    m.e[kQ] = int16_t(x.a);
    m.e[kT] = int16_t(x.b);
    return RatFunc(MultiPoly::monomial(m));
}

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

Partition Partition::conjugate() const {
    std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu[i] > (*this)[i]) return false;
    return true;
}

std::vector<Box> Partition::boxes() const {
    std::vector<Box> out;
    for (int b = 0; b < length(); ++b)
        for (int a = 0; a < parts_[b]; ++a) out.push_back({a, b});
    return out;
}

std::vector<Box> Partition::addable() const {
    std::vector<Box> out;
    for (int b = 0; b <= length(); ++b)
        if (b == 0 || (*this)[b - 1] > (*this)[b]) out.push_back({(*this)[b], b});
    return out;
}

std::vector<Box> Partition::removable() const {
    std::vector<Box> out;
    for (int b = 0; b < length(); ++b)
        if ((*this)[b] > (*this)[b + 1]) out.push_back({(*this)[b] - 1, b});
    return out;
}

Partition Partition::add_box(const Box& x) const {
    std::vector<int> p = parts_;
    if (x.b == length()) p.push_back(0);
    if (x.b > length() || p[x.b] != x.a) throw std::invalid_argument("box is not addable");
    ++p[x.b];
    return Partition(std::move(p));
}

Partition Partition::remove_box(const Box& x) const {
    std::vector<int> p = parts_;
    if (x.b >= length() || p[x.b] != x.a + 1) throw std::invalid_argument("box is not removable");
    --p[x.b];
    return Partition(std::move(p));
}

std::string Partition::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    return os.str();
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) p.push_back(std::stoi(tok));
    return Partition(std::move(p));
}

std::string multipartition_str(const Multipartition& m) {
    std::string s = "(";
    for (size_t i = 0; i < m.size(); ++i) s += (i ? "|" : "") + m[i].str();
    return s + ")";
}

int multipartition_size(const Multipartition& m) {
    int s = 0;
    for (auto& p : m) s += p.size();
    return s;
}

bool dominated(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) return false;
    int sl = 0, sm = 0;
    for (int i = 0; i < std::max(lambda.length(), mu.length()); ++i) {
        sl += lambda[i];
        sm += mu[i];
        if (sl > sm) return false;
    }
    return true;
}

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Multipartition> multipartitions(int n, int r) {
    std::vector<Multipartition> out;
    Multipartition cur(r);
    // distribute sizes over colors, color 0 first
    auto rec = [&](auto&& self, int color, int remaining) -> void {
        if (color == r - 1) {
            for (auto& p : partitions_of(remaining)) {
                cur[color] = p;
                out.push_back(cur);
            }
            return;
        }
        for (int s = remaining; s >= 0; --s)
            for (auto& p : partitions_of(s)) {
                cur[color] = p;
                self(self, color + 1, remaining - s);
            }
    };
    if (r == 0) return out;
    rec(rec, 0, n);
    return out;
}

// ---------------------------------------------------------------- Maya diagrams

namespace {

// Black positions of a charge-0 diagram read off a partition: {conj_j - j : j >= 1}.
// Positions below -lambda_1 are all black.
std::set<int> partition_blacks(const Partition& lambda) {
    Partition c = lambda.conjugate();
    std::set<int> s;
    for (int j = 1; j <= c.length(); ++j) s.insert(c[j - 1] - j);
    return s;
}

bool partition_black(const Partition& lambda, const std::set<int>& blacks, int n) {
    if (n < -lambda[0]) return true;
    return blacks.count(n) > 0;
}

// Partition of a charge-0 diagram given its black positions >= low (everything below low black).
Partition partition_from_blacks(std::vector<int> blacks, int low) {
    std::sort(blacks.rbegin(), blacks.rend());
    int k = int(blacks.size());
    // below the window the blacks are consecutive, so the charge is low + k
    if (low + k != 0) throw std::invalid_argument("Maya diagram has nonzero charge");
    std::vector<int> conj;
    for (int j = 1; j <= k; ++j) {
        int cj = blacks[j - 1] + j;
        if (cj <= 0) break;
        conj.push_back(cj);
    }
    return Partition(std::move(conj)).conjugate();
}

}  // namespace

int MayaDiagram::charge() const {
    int c = 0;
    for (int n : flips_) c += n >= 0 ? 1 : -1;
    return c;
}

std::vector<int> MayaDiagram::black_above(int low) const {
    std::vector<int> out;
    int hi = flips_.empty() ? 0 : std::max(0, *flips_.rbegin() + 1);
    for (int n = low; n < hi; ++n)
        if (black(n)) out.push_back(n);
    return out;
}

MayaDiagram maya_of(const Partition& lambda) {
    std::set<int> blacks = partition_blacks(lambda), flips;
    for (int n : blacks)
        if (n >= 0) flips.insert(n);
    for (int n = -lambda[0]; n < 0; ++n)
        if (!blacks.count(n)) flips.insert(n);
    return MayaDiagram(std::move(flips));
}

Partition partition_of(const MayaDiagram& m) {
    if (m.charge() != 0) throw std::invalid_argument("Maya diagram has nonzero charge");
    int low = m.flips().empty() ? 0 : std::min(0, *m.flips().begin());
    return partition_from_blacks(m.black_above(low), low);
}

// ---------------------------------------------------------------- cores and quotients

std::string CoreLabel::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < charges.size(); ++i) os << (i ? "," : "") << charges[i];
    return os.str();
}

CoreLabel CoreLabel::parse(const std::string& s) {
    CoreLabel c;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) c.charges.push_back(std::stoi(tok));
    int sum = 0;
    for (int x : c.charges) sum += x;
    if (c.charges.empty() || sum != 0) throw std::invalid_argument("core charges must be nonempty and sum to zero");
    return c;
}

CoreQuotient core_quot(const Partition& lambda, int r) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    MayaDiagram m = maya_of(lambda);
    int low = m.flips().empty() ? 0 : std::min(0, *m.flips().begin());
    int high = m.flips().empty() ? 0 : std::max(0, *m.flips().rbegin() + 1);
    CoreQuotient cq;
    cq.charges.charges.assign(r, 0);
    cq.quot.resize(r);
    for (int i = 0; i < r; ++i) {
        // m_i(n) = m(i + n r); window of n covering [low, high)
        int nlo = (low - i) / r - 1, nhi = (high - i) / r + 1;
        int c = 0;
        std::vector<int> blacks;
        for (int n = nlo; n <= nhi; ++n) {
            bool b = m.black(i + n * r);
            if (n >= 0 && b) ++c;
            if (n < 0 && !b) --c;
            if (b) blacks.push_back(n);
        }
        cq.charges.charges[i] = c;
        // shift so the diagram has charge zero: m'(n) = m_i(n + c)
        for (int& b : blacks) b -= c;
        cq.quot[i] = partition_from_blacks(blacks, nlo - c);
    }
    cq.core = core_partition(cq.charges);
    return cq;
}

Partition from_core_quot(const CoreLabel& charges, const Multipartition& quot) {
    int r = charges.r();
    if (int(quot.size()) != r) throw std::invalid_argument("quotient length must equal r");
    int bound = 2;
    for (int i = 0; i < r; ++i) bound += quot[i].size() + std::abs(charges.charges[i]) + quot[i][0];
    int low = -r * bound, high = r * bound;
    std::vector<std::set<int>> qb(r);
    for (int i = 0; i < r; ++i) qb[i] = partition_blacks(quot[i]);
    std::vector<int> blacks;
    for (int pos = low; pos <= high; ++pos) {
        int i = mod(pos, r);
        int n = (pos - i) / r - charges.charges[i];
        if (partition_black(quot[i], qb[i], n)) blacks.push_back(pos);
    }
    return partition_from_blacks(blacks, low);
}

Partition core_partition(const CoreLabel& charges) {
    return from_core_quot(charges, Multipartition(charges.r()));
}

CoreLabel core_label(const Partition& lambda, int r) { return core_quot(lambda, r).charges; }

Multipartition quotient(const Partition& lambda, int r) { return core_quot(lambda, r).quot; }

Partition perm_act(const Partition& lambda, const std::vector<int>& pi) {
    int r = int(pi.size());
    CoreQuotient cq = core_quot(lambda, r);
    CoreLabel c = perm_act(cq.charges, pi);
    Multipartition qt(r);
    for (int i = 0; i < r; ++i) qt[i] = cq.quot[mod(pi[i], r)];
    return from_core_quot(c, qt);
}

CoreLabel perm_act(const CoreLabel& c, const std::vector<int>& pi) {
    int r = c.r();
    CoreLabel out;
    out.charges.resize(r);
    for (int i = 0; i < r; ++i) out.charges[i] = c.charges[mod(pi[i], r)];
    return out;
}

std::vector<int> sigma_perm(int r, int k) {
    std::vector<int> p(r);
    for (int i = 0; i < r; ++i) p[i] = mod(i - k, r);
    return p;
}

std::vector<int> w0_perm(int r) {
    std::vector<int> p(r);
    for (int i = 0; i < r; ++i) p[i] = mod(-i - 1, r);
    return p;
}

Partition sigma_act(const Partition& lambda, int r, int k) { return perm_act(lambda, sigma_perm(r, k)); }
Partition w0_act(const Partition& lambda, int r) { return perm_act(lambda, w0_perm(r)); }
CoreLabel sigma_act(const CoreLabel& c, int k) { return perm_act(c, sigma_perm(c.r(), k)); }
CoreLabel w0_act(const CoreLabel& c) { return perm_act(c, w0_perm(c.r())); }

std::vector<Partition> enumerate(const CoreLabel& core, int n) {
    std::vector<Partition> out;
    for (auto& mp : multipartitions(n, core.r())) out.push_back(from_core_quot(core, mp));
    std::sort(out.begin(), out.end());
    return out;
}

bool dominated_r(const Partition& lambda, const Partition& mu, int r) {
    return dominated(lambda, mu) && core_label(lambda, r) == core_label(mu, r);
}

// ---------------------------------------------------------------- colored character sums

ColoredCharSum ColoredCharSum::operator+(const ColoredCharSum& o) const {
    ColoredCharSum s = *this;
    for (int i = 0; i < r(); ++i) s.comp[i] += o.comp[i];
    return s;
}

ColoredCharSum ColoredCharSum::operator-(const ColoredCharSum& o) const {
    ColoredCharSum s = *this;
    for (int i = 0; i < r(); ++i) s.comp[i] -= o.comp[i];
    return s;
}

ColoredCharSum ColoredCharSum::scale(const RatFunc& c) const {
    ColoredCharSum s = *this;
    for (auto& x : s.comp) x *= c;
    return s;
}

ColoredCharSum ColoredCharSum::star() const {
    ColoredCharSum s = *this;
    for (auto& x : s.comp) x = invert_qt(x);
    return s;
}

ColoredCharSum ColoredCharSum::shift(int k) const {
    ColoredCharSum s = zero(r());
    for (int i = 0; i < r(); ++i) s.comp[i] = (*this)[i + k];
    return s;
}

ColoredCharSum ColoredCharSum::iota() const {
    ColoredCharSum s = zero(r());
    for (int i = 0; i < r(); ++i) s.comp[i] = (*this)[-i];
    return s;
}

RatFunc ColoredCharSum::total() const {
    RatFunc s;
    for (auto& x : comp) s += x;
    return s;
}

ColoredCharSum colored_split(const RatFunc& f, int r) {
    if (!f.den().is_monomial()) throw std::invalid_argument("colored_split expects a Laurent polynomial");
    const Term& d = f.den().lead();
    std::vector<std::vector<Term>> parts(r);
    for (auto& t : f.num().terms()) {
        Monomial m = t.m / d.m;
        parts[mod(m.e[kT] - m.e[kQ], r)].push_back({t.m, t.c});
    }
    ColoredCharSum s = ColoredCharSum::zero(r);
    for (int i = 0; i < r; ++i) s.comp[i] = RatFunc(MultiPoly::from_terms(parts[i])) / RatFunc(f.den());
    return s;
}

CharSums char_sums(const Partition& lambda, int r) {
    CharSums cs{ColoredCharSum::zero(r), ColoredCharSum::zero(r)};
    std::vector<std::vector<Term>> parts(r);
    for (auto& x : lambda.boxes()) {
        Monomial m;
        m.e[kQ] = int16_t(x.a);
        m.e[kT] = int16_t(x.b);
        parts[color(x, r)].push_back({m, 1});
    }
    for (int i = 0; i < r; ++i) cs.B.comp[i] = RatFunc(MultiPoly::from_terms(parts[i]));
    RatFunc q = RatFunc::var(kQ), t = RatFunc::var(kT);
    for (int i = 0; i < r; ++i)
        cs.D.comp[i] = (RatFunc(1) + q * t) * cs.B[i] - q * cs.B[i + 1] - t * cs.B[i - 1] - RatFunc(i == 0 ? 1 : 0);
    return cs;
}

ColoredCharSum d_from_corners(const Partition& lambda, int r) {
    ColoredCharSum d = ColoredCharSum::zero(r);
    RatFunc qt = RatFunc::var(kQ) * RatFunc::var(kT);
    for (auto& x : lambda.removable()) d[color(x, r)] += qt * character(x);
    for (auto& x : lambda.addable()) d[color(x, r)] -= character(x);
    return d;
}

ColoredCharSum geometric(int r) {
    ColoredCharSum g = ColoredCharSum::zero(r);
    RatFunc den = (RatFunc(1) - RatFunc::var(kQ, r)) * (RatFunc(1) - RatFunc::var(kT, r));
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) g[k - j] += character(Box{j, k});
    for (auto& x : g.comp) x /= den;
    return g;
}

RatFunc box_product(const Partition& lambda, const Partition& core, int c, int r) {
    Monomial m;
    for (auto& x : lambda.boxes())
        if (!core.has_box(x) && color(x, r) == mod(c, r)) {
            m.e[kQ] = int16_t(m.e[kQ] + x.a);
            m.e[kT] = int16_t(m.e[kT] + x.b);
        }
    return RatFunc(MultiPoly::monomial(m));
}

}  // namespace wm
