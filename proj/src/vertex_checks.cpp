#include <random>
#include <sstream>

#include "wm/verify.hpp"
#include "wm/vertexops.hpp"
#include "wm/wreath.hpp"

namespace wm {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::string pstr(const Partition& l) { return "(" + l.str() + ")"; }

std::string vstr(const std::vector<int>& k) {
    std::string s;
    for (size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
    return s;
}

std::vector<CoreLabel> cores_of(const VerifyConfig& cfg) { return cfg.cores.empty() ? default_cores(cfg.r) : cfg.cores; }

std::vector<Partition> upto(const CoreLabel& core, int n) {
    std::vector<Partition> out;
    for (int m = 0; m <= n; ++m)
        for (auto& l : enumerate(core, m)) out.push_back(l);
    return out;
}

std::vector<Partition> partitions_upto(int n) {
    std::vector<Partition> out;
    for (int m = 0; m <= n; ++m)
        for (auto& l : partitions_of(m)) out.push_back(l);
    return out;
}

std::vector<int> eps(int r, int i) {
    std::vector<int> e(r, 0);
    e[mod(i, r)] = 1;
    return e;
}

std::vector<int> operator+(std::vector<int> a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

std::vector<int> operator-(std::vector<int> a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

std::vector<int> iota_vec(const std::vector<int>& k) {
    std::vector<int> out(k.size());
    int r = int(k.size());
    for (int i = 0; i < r; ++i) out[i] = k[mod(-i, r)];
    return out;
}

CheckResult series_check(const std::string& id, const Params& p, const SeriesSym& lhs, const SeriesSym& rhs) {
    std::string why;
    bool ok = series_equal(lhs, rhs, &why);
    return boolean(id, p, ok, lhs.str(), rhs.str(), ok ? "order " + std::to_string(std::min(lhs.order, rhs.order)) : why);
}

CheckResult trunc_check(const std::string& id, const Params& p, const TruncSeries& lhs, const TruncSeries& rhs) {
    return boolean(id, p, lhs == rhs, lhs.str(), rhs.str());
}

// ---- Fock space ----

std::vector<Check> charge_checks(const VerifyConfig& cfg, int) {
    std::vector<Check> out;
    int r = cfg.r;
    for (auto& l : partitions_upto(8)) {
        Params p{{"lambda", pstr(l)}};
        out.push_back(guarded("charge-ar", p, [=]() {
            auto c = core_label(l, r).charges;
            RatFunc qq = fock_qq();
            std::ostringstream lhs, rhs;
            bool ok = true;
            for (int i = 0; i < r; ++i) {
                int na = 0, nr = 0;
                for (auto& x : l.addable()) na += color(x, r) == i;
                for (auto& x : l.removable()) nr += color(x, r) == i;
                int expect = (i == 0) + c[mod(i - 1, r)] - c[i];
                // leading coefficients of psi^+ at z = infinity and psi^- at z = 0
                RatFunc inf = psi_series(i, l, r, true, 0)[0], zero = psi_series(i, l, r, false, 0)[0];
                ok = ok && na - nr == expect && inf == qq.pow(expect) && zero == qq.pow(-expect);
                lhs << (i ? " " : "") << na - nr;
                rhs << (i ? " " : "") << expect;
            }
            return boolean("charge-ar", p, ok, lhs.str(), rhs.str(), "addable minus removable per color vs charges");
        }));
    }
    return out;
}

std::vector<Check> boson_checks(const VerifyConfig& cfg, int) {
    std::vector<Check> out;
    int r = cfg.r;
    for (auto& l : partitions_upto(4))
        for (int i = 0; i < r; ++i)
            for (int k : {1, 2, 3, -1, -2, -3}) {
                Params p{{"lambda", pstr(l)}, {"i", std::to_string(i)}, {"k", std::to_string(k)}};
                out.push_back(guarded("boson", p, [=]() {
                    RatFunc closed = boson_eigen(l, i, k, r);
                    RatFunc logged = boson_eigen_from_psi(l, i, k, r);
                    int m = std::abs(k);
                    ColoredCharSum d = char_sums(l, r).D;
                    if (k < 0) d = d.star();
                    RatFunc pk = to_fock(eval_colored(MultiSymFunc::p(r, m, i), d.scale(RatFunc(-1))));
                    RatFunc qq = fock_qq(), v = fock_v();
                    RatFunc qn = (qq.pow(m) - qq.pow(-m)) / (qq - qq.inv());
                    RatFunc viaD = k > 0 ? v.pow(m) * qn / (qq.pow(m) * RatFunc(m)) * pk
                                         : qq.pow(m) * qn / (v.pow(m) * RatFunc(m)) * pk;
                    return boolean("boson", p, closed == logged && closed == viaD, closed.str(),
                                   logged.str() + " ; " + viaD.str(), "closed form, log of psi, p_k[-D]");
                }));
            }
    return out;
}

std::vector<Check> dual_boson_checks(const VerifyConfig& cfg, int) {
    std::vector<Check> out;
    int r = cfg.r;
    for (auto& l : partitions_upto(4))
        for (int p = 0; p < r; ++p)
            for (int s : {1, -1}) {
                Params pp{{"lambda", pstr(l)}, {"p", std::to_string(p)}, {"sign", std::to_string(s)}};
                out.push_back(guarded("dual-boson", pp, [=]() {
                    return compare("dual-boson", pp, dual_boson_eigen(l, p, s, r),
                                   to_fock(dd_eigenvalue(l, p, s < 0, r)));
                }));
            }
    return out;
}

// <lambda| [e_i(z), f_i(w)] |lambda> against the residues of psi_i
std::vector<Check> ef_checks(const VerifyConfig& cfg, int) {
    std::vector<Check> out;
    int r = cfg.r;
    for (auto& l : partitions_upto(4))
        for (int i = 0; i < r; ++i) {
            Params p{{"lambda", pstr(l)}, {"i", std::to_string(i)}};
            out.push_back(guarded("fock-ef", p, [=]() {
                RatFunc qq = fock_qq(), v = fock_v();
                std::vector<std::pair<Box, bool>> poles;  // box, addable
                for (auto& x : l.addable())
                    if (color(x, r) == i) poles.push_back({x, true});
                for (auto& x : l.removable())
                    if (color(x, r) == i) poles.push_back({x, false});
                auto numer = [&](const std::pair<Box, bool>& b, const RatFunc& w) {
                    RatFunc cv = fock_character(b.first) * v;
                    return b.second ? qq * w - qq.inv() * cv : qq.inv() * w - qq * cv;
                };
                std::ostringstream lhs, rhs;
                bool ok = true;
                for (auto& b : poles) {
                    RatFunc P = fock_character(b.first) * v;
                    RatFunc res = numer(b, P);
                    for (auto& o : poles)
                        if (o.first != b.first) res *= numer(o, P) / (P - fock_character(o.first) * v);
                    RatFunc expect = res / (P * (qq - qq.inv()));
                    RatFunc got;
                    if (b.second) {
                        Partition m = l.add_box(b.first);
                        got = fock_current(Current::e, i, l, m, r).coeff * fock_current(Current::f, i, l, m, r).coeff;
                    } else {
                        Partition m = l.remove_box(b.first);
                        got = -(fock_current(Current::e, i, m, l, r).coeff * fock_current(Current::f, i, m, l, r).coeff);
                    }
                    ok = ok && got == expect;
                    lhs << got.str() << "; ";
                    rhs << expect.str() << "; ";
                }
                return boolean("fock-ef", p, ok, lhs.str(), rhs.str(), "delta coefficients of the commutator");
            }));
        }
    return out;
}

// ---- D series ----

std::vector<Check> dd_eigen_checks(const VerifyConfig& cfg, int mq) {
    std::vector<Check> out;
    int r = cfg.r, M = cfg.order, W = cfg.window;
    for (auto& core : cores_of(cfg))
        for (auto& l : upto(core, mq))
            for (int p = 0; p < r; ++p)
                for (const char* form : {"D", "D*", "Ddag"}) {
                    std::string fs = form;
                    Params pp{{"core", core.str()}, {"lambda", pstr(l)}, {"p", std::to_string(p)}, {"form", fs}};
                    out.push_back(guarded("dd-eigen", pp, [=]() {
                        std::vector<int> k = eps(r, p) - eps(r, 0);
                        if (fs == "D") {
                            WreathPoly h{wreath_H(l, r), core};
                            return series_check("dd-eigen", pp, dd_apply(h, k, false, M, W),
                                                series_scale(to_series(h, M), dd_eigenvalue(l, p, false, r)));
                        }
                        if (fs == "D*") {
                            WreathPoly h{wreath_H(l, r), core};
                            return series_check("dd-eigen", pp, dd_apply(h, eps(r, 0) - eps(r, p), true, M, W),
                                                series_scale(to_series(h, M, true), dd_eigenvalue(l, p, true, r)));
                        }
                        // D_{eps_0 - eps_p} on Hdag has eigenvalue (...)^(-p)
                        WreathPoly h{wreath_Hdag(l, r), w0_act(core)};
                        return series_check("dd-eigen", pp, dd_apply(h, eps(r, 0) - eps(r, p), false, M, W),
                                            series_scale(to_series(h, M), dd_eigenvalue(l, -p, false, r)));
                    }));
                }
    return out;
}

// p~_1^(i) = p_1[X^(i) / ((1 - q sigma^-1)(1 - t sigma))]
MultiSymFunc p_tilde(int r, int i) {
    PlethMatrix a = PlethMatrix::one_minus_inv(r, RatFunc::var(kQ), -1) * PlethMatrix::one_minus_inv(r, RatFunc::var(kT), 1);
    return pleth_apply(MultiSymFunc::p(r, 1, i), a);
}

std::vector<std::vector<int>> small_shifts(int r) {
    std::vector<std::vector<int>> ks{std::vector<int>(r, 0)};
    for (int j = 0; j < r; ++j) ks.push_back(eps(r, j));
    for (int j = 1; j < r; ++j) ks.push_back(eps(r, j) - eps(r, 0));
    return ks;
}

std::vector<Check> multd_checks(const VerifyConfig& cfg, int) {
    std::vector<Check> out;
    int r = cfg.r, M = cfg.order, W = cfg.window;
    for (auto& core : cores_of(cfg))
        for (auto& k : small_shifts(r))
            for (int i = 0; i < r; ++i)
                for (bool star : {false, true}) {
                    Params p{{"core", core.str()}, {"kvec", vstr(k)}, {"i", std::to_string(i)}, {"star", star ? "1" : "0"}};
                    out.push_back(guarded("dd-commutator", p, [=]() {
                        MultiSymFunc pt = p_tilde(r, i);
                        WreathPoly one{MultiSymFunc::one(r), core};
                        SeriesSym a = dd_apply(WreathPoly{pt, core}, k, star, M, W);
                        SeriesSym b = series_mul(dd_apply(one, k, star, M, W), pt);
                        SeriesSym rhs = dd_apply(one, k - eps(r, i), star, M, W);
                        if (star) rhs = series_scale(rhs, -(RatFunc::var(kQ) * RatFunc::var(kT)).inv());
                        return series_check("dd-commutator", p, series_sub(a, b), rhs);
                    }));
                }
    return out;
}

// <S, g>' and <f, S>' as series
TruncSeries pair_left(const MultiSymFunc& f, const SeriesSym& s) {
    TruncSeries out(series_vars(), s.order);
    for (auto& [k, c] : s.terms) {
        RatFunc x = qt_pairing(f, MultiSymFunc::p(s.r, k));
        if (!x.is_zero()) out = out + c * TruncSeries::expand(x, series_vars(), s.order);
    }
    return out;
}

std::vector<Check> dd_adjoint_checks(const VerifyConfig& cfg, int mq) {
    std::vector<Check> out;
    int r = cfg.r, M = cfg.order, W = cfg.window;
    for (auto& core : cores_of(cfg))
        for (auto& k : small_shifts(r))
            for (int df = 0; df <= mq; ++df) {
                int total = 0;
                for (int x : k) total += x;
                int dg = df - total;
                if (dg < 0) continue;
                for (auto& a : multipartitions(df, r))
                    for (auto& b : multipartitions(dg, r)) {
                        Params p{{"core", core.str()}, {"kvec", vstr(k)}, {"f", multipartition_str(a)},
                                 {"g", multipartition_str(b)}};
                        out.push_back(guarded("dd-adjoint", p, [=]() {
                            MultiSymFunc f = schur(a), g = schur(b);
                            TruncSeries lhs = series_pairing(dd_apply(WreathPoly{f, core}, k, false, M, W), g);
                            TruncSeries rhs = pair_left(f, dd_apply(WreathPoly{g, w0_act(core)}, std::vector<int>(r, 0) - iota_vec(k), false, M, W));
                            return trunc_check("dd-adjoint", p, lhs, rhs);
                        }));
                    }
            }
    return out;
}

// down-arrow on a series: f[-iota X] with (q,t) inverted and the core reversed
SeriesSym down_series(const SeriesSym& s) {
    SeriesSym out{s.r, w0_act(s.core), !s.inverted, s.order, {}};
    for (auto& [k, c] : s.terms) {
        PIndex key;
        for (int code : k) key.push_back(pcode(pdeg(code), mod(-pcolor(code), s.r)));
        std::sort(key.rbegin(), key.rend());
        out.terms.emplace(key, k.size() % 2 ? c.scale(RatFunc(-1)) : c);
    }
    return out;
}

std::vector<Check> dd_down_checks(const VerifyConfig& cfg, int mq) {
    std::vector<Check> out;
    int r = cfg.r, M = cfg.order, W = cfg.window;
    for (auto& core : cores_of(cfg))
        for (auto& k : small_shifts(r))
            for (int d = 0; d <= mq; ++d)
                for (auto& a : multipartitions(d, r)) {
                    Params p{{"core", core.str()}, {"kvec", vstr(k)}, {"g", multipartition_str(a)}};
                    out.push_back(guarded("dd-down-arrow", p, [=]() {
                        WreathPoly g{schur(a), core};
                        SeriesSym lhs = down_series(dd_apply(down_arrow(g), k, false, M, W));
                        SeriesSym rhs = dd_apply(g, iota_vec(k), true, M, W);
                        return series_check("dd-down-arrow", p, lhs, rhs);
                    }));
                }
    return out;
}

std::vector<Check> delta_p1_checks(const VerifyConfig& cfg, int mq) {
    std::vector<Check> out;
    int r = cfg.r, M = cfg.order, W = cfg.window;
    for (auto& core : cores_of(cfg))
        for (int i = 0; i < r; ++i)
            for (int d = 0; d <= mq; ++d)
                for (auto& a : multipartitions(d, r)) {
                    Params p{{"core", core.str()}, {"i", std::to_string(i)}, {"g", multipartition_str(a)}};
                    out.push_back(guarded("delta-p1", p, [=]() {
                        PlethMatrix m = (PlethMatrix::one_minus(r, RatFunc::var(kQ), 1) *
                                         PlethMatrix::one_minus(r, RatFunc::var(kT), -1))
                                            .inverse();
                        MultiSymFunc sym = pleth_apply(MultiSymFunc::p(r, 1, i), m);
                        MultiSymFunc g = schur(a);
                        WreathPoly diag{delta_op(sym, g, core), core};
                        return series_check("delta-p1", p, dd_apply(WreathPoly{g, core}, eps(r, i) - eps(r, 0), false, M, W),
                                            to_series(diag, M));
                    }));
                }
    return out;
}

std::vector<Check> colrow_checks(const VerifyConfig& cfg, int mq, ColRow kind) {
    std::vector<Check> out;
    int r = cfg.r, M = cfg.order, W = cfg.window;
    std::string id = kind == ColRow::column ? "column" : "row";
    for (auto& core : cores_of(cfg))
        for (auto& l : upto(core, mq))
            for (int p = 0; p < r; ++p)
                for (bool adj : {false, true}) {
                    Params pp{{"core", core.str()}, {"lambda", pstr(l)}, {"p", std::to_string(p)},
                              {"adjoint", adj ? "1" : "0"}};
                    out.push_back(guarded(id, pp, [=]() {
                        WreathPoly h = adj ? WreathPoly{wreath_Hdag(l, r), w0_act(core)} : WreathPoly{wreath_H(l, r), core};
                        RatFunc ev = colrow_eigenvalue(l, 1, p, kind, adj, r);
                        if (!adj) {
                            // the closed form agrees with f[-D] for the operator's symbol
                            MultiSymFunc f = kind == ColRow::column ? modified_e(r, 1, -p - 1) : modified_h(r, 1, -p);
                            f = pleth_apply(f, PlethMatrix::iota(r).scale(RatFunc(-1)));
                            RatFunc alt = evaluate(f, char_sums(l, r).D.scale(RatFunc(-1)));
                            if (alt != ev) return boolean(id, pp, false, ev.str(), alt.str(), "closed-form eigenvalue vs f[-D]");
                        }
                        return series_check(id, pp, delta_colrow_apply(h, 1, p, kind, adj, M, W),
                                            series_scale(to_series(h, M), ev));
                    }));
                }
    return out;
}

// ---- constant terms ----

std::vector<Check> const_term_checks(const VerifyConfig& cfg, int) {
    std::vector<Check> out;
    int M = cfg.order;
    RatFunc q = RatFunc::var(kQ), t = RatFunc::var(kT);
    std::vector<std::pair<int, int>> small{{kQ, 1}, {kT, 1}};
    {
        Params p{{"case", "single pole"}};
        out.push_back(guarded("const-term", p, [=]() {
            ConstTermProblem pr{{RatFunc(3), RatFunc(2)}, {q * t}, small, M};
            ConstTermResult a = const_term(pr, ConstTermMethod::residue);
            ConstTermResult b = const_term(pr, ConstTermMethod::window);
            RatFunc expect = RatFunc(3) + RatFunc(2) * q * t;
            return boolean("const-term", p, a.value == expect && a.series == b.series, a.value.str(),
                           expect.str() + " ; " + b.series.str());
        }));
    }
    std::mt19937 rng(20240611);
    for (int s = 0; s < 8; ++s) {
        std::uniform_int_distribution<int> c(-3, 3), e(0, 2), sgn(0, 1);
        std::vector<RatFunc> F;
        for (int j = 0; j < 3; ++j) F.push_back(RatFunc(c(rng)) * q.pow(e(rng)) * t.pow(e(rng)));
        int a1 = 1 + e(rng), a2 = 1 + e(rng);
        RatFunc p1 = RatFunc(1 + e(rng)) * q.pow(a1) * t.pow(e(rng));
        RatFunc p2 = RatFunc(sgn(rng) ? -1 : 2) * (sgn(rng) ? t.pow(a2) : t.pow(-a2));
        Params p{{"case", "two poles"}, {"seed", std::to_string(s)}};
        out.push_back(guarded("const-term", p, [=]() {
            ConstTermProblem pr{F, {p1, p2}, small, M};
            ConstTermResult a = const_term(pr, ConstTermMethod::residue);
            ConstTermResult b = const_term(pr, ConstTermMethod::window);
            return boolean("const-term", p, a.series == b.series, a.series.str(), b.series.str(), a.report);
        }));
    }
    {
        Params p{{"case", "region flip"}};
        out.push_back(guarded("const-term", p, [=]() {
            std::vector<RatFunc> F{RatFunc(1), RatFunc(1)};
            std::vector<RatFunc> poles{q, t.inv()};
            ConstTermProblem lo{F, poles, {{kQ, 1}, {kT, 1}}, M};
            ConstTermProblem hi{F, poles, {{kQ, -1}, {kT, 1}}, M};
            ConstTermResult a = const_term(lo, ConstTermMethod::residue), aw = const_term(lo, ConstTermMethod::window);
            ConstTermResult b = const_term(hi, ConstTermMethod::residue), bw = const_term(hi, ConstTermMethod::window);
            // |q| < 1: only q is inside; |q| > 1: neither pole is inside
            RatFunc ea = (RatFunc(1) + q) / (q - t.inv());
            bool ok = a.value == ea && b.value.is_zero() && a.series == aw.series && b.series == bw.series;
            return boolean("const-term", p, ok, a.value.str() + " ; " + b.value.str(), ea.str() + " ; 0",
                           a.report + " / " + b.report);
        }));
    }
    return out;
}

}  // namespace

const std::vector<Identity>& vertex_identities() {
    static const std::vector<Identity> ids = {
        {"charge-ar", "addable minus removable boxes per color from the charges, and the psi limits", 0, 1, charge_checks},
        {"boson", "boson eigenvalues: closed form, log of psi, and p_k[-D]", 0, 3, boson_checks},
        {"dual-boson", "dual boson eigenvalues are the colored quotients of D", 0, 3, dual_boson_checks},
        {"fock-ef", "[e_i(z), f_i(w)] on the Fock space matches the residues of psi_i", 0, 3, ef_checks},
        {"dd-eigen", "D, D* and the adjoint of D are diagonal on H and Hdag", 1, 3, dd_eigen_checks},
        {"dd-commutator", "[D_k, p~_1^(i)] = D_{k - e_i} and [D*_k, p~_1^(i)] = -(qt)^-1 D*_{k - e_i}", 0, 3, multd_checks},
        {"dd-adjoint", "the adjoint of D_k is D_{-iota k}", 1, 3, dd_adjoint_checks},
        {"dd-down-arrow", "down-arrow conjugates D_k into D*_{iota k}", 1, 3, dd_down_checks},
        {"delta-p1", "Delta[p_1[X^(i) / ((1 - q sigma)(1 - t sigma^-1))]] is D_{e_i - e_0}", 1, 3, delta_p1_checks},
        {"column", "column operators and their adjoints, n = 1", 1, 3,
         [](const VerifyConfig& c, int m) { return colrow_checks(c, m, ColRow::column); }},
        {"row", "row operators and their adjoints, n = 1", 1, 3,
         [](const VerifyConfig& c, int m) { return colrow_checks(c, m, ColRow::row); }},
        {"const-term", "residue and window constant terms agree", 0, 1, const_term_checks},
    };
    return ids;
}

}  // namespace wm
