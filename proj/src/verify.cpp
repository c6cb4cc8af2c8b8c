#include "wm/verify.hpp"

#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include "wm/wreath.hpp"

namespace wm {

const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "?";
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

constexpr size_t kMaxShown = 2000;

std::string clip(std::string s) {
    if (s.size() <= kMaxShown) return s;
    size_t n = s.size();
    s.resize(kMaxShown);
    return s + "...(" + std::to_string(n) + " chars)";
}

RatFunc q_() { return RatFunc::var(kQ); }
RatFunc t_() { return RatFunc::var(kT); }
RatFunc u_() { return RatFunc::var(kU); }

std::string pstr(const Partition& l) { return "(" + l.str() + ")"; }

std::vector<CoreLabel> cores_of(const VerifyConfig& cfg) { return cfg.cores.empty() ? default_cores(cfg.r) : cfg.cores; }

std::vector<Partition> upto(const CoreLabel& core, int n) {
    std::vector<Partition> out;
    for (int m = 0; m <= n; ++m)
        for (auto& l : enumerate(core, m)) out.push_back(l);
    return out;
}

int quot_size(const Partition& l, int r) { return multipartition_size(quotient(l, r)); }

int trunc_for(const VerifyConfig& cfg, const Partition& l) {
    return cfg.trunc > 0 ? cfg.trunc : quot_size(l, cfg.r) + 2;
}

// Boxes of lambda outside its r-core with the given color.
std::vector<Box> colored_boxes(const Partition& lambda, int r, int k) {
    Partition core = core_partition(core_label(lambda, r));
    std::vector<Box> out;
    for (auto& x : lambda.boxes())
        if (!core.has_box(x) && color(x, r) == mod(k, r)) out.push_back(x);
    return out;
}

// prod over color-k boxes of (1 - u chi)
RatFunc one_minus_u_chi(const Partition& lambda, int r, int k, const RatFunc& u) {
    RatFunc p(1);
    for (auto& x : colored_boxes(lambda, r, k)) p = p * (RatFunc(1) - u * character(x));
    return p;
}

RatFunc minus_chi(const Partition& lambda, int r, int k) {
    RatFunc p(1);
    for (auto& x : colored_boxes(lambda, r, k)) p = p * (-character(x));
    return p;
}

ColoredCharSum D_of(const Partition& l, int r) { return char_sums(l, r).D; }
ColoredCharSum unit(int r) {
    ColoredCharSum s = ColoredCharSum::zero(r);
    s[0] = RatFunc(1);
    return s;
}

// H[iota D_core] for the core partition of a label
RatFunc at_core(const MultiSymFunc& h, const CoreLabel& c, int r, int k = 0) {
    return evaluate(h, iota_D(core_partition(c), r, k));
}

CoreLabel w0s(const CoreLabel& c, int k) { return w0_act(sigma_act(c, -k)); }

MultiSymFunc sig(const MultiSymFunc& f, int k) { return pleth_apply(f, PlethMatrix::sigma(f.r(), k)); }

CheckResult failed(std::string id, Params params, const std::string& why) {
    CheckResult c;
    c.identity = std::move(id);
    c.params = std::move(params);
    c.status = Status::fail;
    c.note = why;
    return c;
}

// ---- instances ----

std::vector<Check> definition_checks(const VerifyConfig& cfg, int mq) {
    std::vector<Check> out;
    for (auto& core : cores_of(cfg))
        for (int n = 0; n <= mq; ++n) {
            Params p{{"core", core.str()}, {"n", std::to_string(n)}};
            out.push_back(guarded("definition", p, [=]() {
                const HTable& s = h_table(core, n);
                std::string why;
                for (size_t i = 0; i < s.lambdas.size(); ++i)
                    if (!satisfies_definition(s.H[i], s.lambdas[i], core.r(), &why))
                        return failed("definition", p, pstr(s.lambdas[i]) + ": " + why);
                std::string note = "sampled table certified";
                std::string dims = "-";
                bool ok = true;
                if (n <= 2) {
                    HTable e = compute_H(core, n, HMethod::exact);
                    dims.clear();
                    for (int d : e.intersection_dim) {
                        dims += (dims.empty() ? "" : ",") + std::to_string(d);
                        ok = ok && d == 1;
                    }
                    if (e.schur != s.schur) {
                        ok = false;
                        note = "sampled and exact tables differ";
                    } else {
                        note = "sampled table certified and equal to the exact table";
                    }
                }
                return boolean("definition", p, ok, "intersection dims [" + dims + "]", "all 1", note);
            }));
        }
    return out;
}

std::vector<Check> biorthogonality_checks(const VerifyConfig& cfg, int mq) {
    std::vector<Check> out;
    for (auto& core : cores_of(cfg))
        for (int n = 1; n <= mq; ++n) {
            Params p{{"core", core.str()}, {"n", std::to_string(n)}};
            out.push_back(guarded("biorthogonality", p, [=]() {
                const HTable& s = h_table(core, n);
                const HTable& d = s;
                int offdiag = 0, zero_diag = 0;
                for (size_t i = 0; i < d.lambdas.size(); ++i)
                    for (size_t j = 0; j < s.lambdas.size(); ++j) {
                        bool z = qt_pairing(d.Hdag[i], s.H[j]).is_zero();
                        bool same = d.lambdas[i] == s.lambdas[j];
                        if (same && z) ++zero_diag;
                        if (!same && !z) ++offdiag;
                    }
                bool ok = offdiag == 0 && zero_diag == 0;
                return boolean("biorthogonality", p, ok,
                               "nonzero off-diagonal " + std::to_string(offdiag) + ", zero diagonal " +
                                   std::to_string(zero_diag),
                               "0, 0", "all pairs within the table");
            }));
        }
    return out;
}

std::vector<Check> cauchy_checks(const VerifyConfig& cfg, int) {
    std::vector<Check> out;
    int N = cfg.trunc > 0 ? cfg.trunc : 2;
    for (auto& core : cores_of(cfg)) {
        Params p{{"core", core.str()}, {"N", std::to_string(N)}};
        out.push_back(guarded("cauchy", p, [=]() {
            int r = core.r();
            TwoAlphabetElem sum(r, N);
            for (auto& l : upto(core, N)) {
                sum.add(wreath_Hdag(l, r), wreath_H(l, r).scale(wreath_norm(l, r).inv()));
            }
            TwoAlphabetElem k = cauchy_kernel(r, N);
            bool ok = sum == k;
            return boolean("cauchy", p, ok, ok ? "sum Hdag[X] H[Y] / N" : "differs", "kernel of the pairing");
        }));
    }
    return out;
}

std::vector<Check> nabla_checks(const VerifyConfig& cfg, int mq, bool shifted) {
    std::vector<Check> out;
    int r = cfg.r;
    for (auto& core : cores_of(cfg))
        for (auto& l : upto(core, mq)) {
            Params p{{"lambda", pstr(l)}, {"core", core.str()}};
            if (!shifted) out.push_back(guarded("nabla-ev", p, [=]() {
                const MultiSymFunc& h = wreath_H(l, r);
                RatFunc ev = nabla_eigen(l, r);
                RatFunc prod = minus_chi(l, r, 0);
                RatFunc at = at_core(h, w0_act(core), r);
                bool applied = nabla(h, core, 1) == h.scale(ev);
                return boolean("nabla-ev", p, ev == prod && prod == at && applied, ev.str(),
                               prod.str() + " ; " + at.str(), "eigenvalue, box product, H[iota D_{w0 core}]");
            }));
            for (int k = 0; shifted && k < r; ++k) {
                Params pk = p;
                pk.push_back({"k", std::to_string(k)});
                out.push_back(guarded("nabla-ev-shifted", pk, [=]() {
                    RatFunc lhs = at_core(wreath_H(l, r), w0s(core, k), r, k);
                    return compare("nabla-ev-shifted", pk, lhs, minus_chi(l, r, k));
                }));
            }
        }
    return out;
}

std::vector<Check> nabla_adjoint_checks(const VerifyConfig& cfg, int mq) {
    std::vector<Check> out;
    int r = cfg.r;
    for (auto& core : cores_of(cfg))
        for (int n = 1; n <= mq; ++n) {
            auto mps = multipartitions(n, r);
            for (auto& a : mps)
                for (auto& b : mps) {
                    Params p{{"core", core.str()}, {"f", multipartition_str(a)}, {"g", multipartition_str(b)}};
                    out.push_back(guarded("nabla-adjoint", p, [=]() {
                        MultiSymFunc f = schur(a), g = schur(b);
                        return compare("nabla-adjoint", p, qt_pairing(nabla(f, core), g),
                                       qt_pairing(f, nabla(g, w0_act(core))));
                    }));
                }
        }
    return out;
}

std::vector<Check> tesler_checks(const VerifyConfig& cfg, int mq, bool shifted) {
    std::vector<Check> out;
    int r = cfg.r;
    std::string id = shifted ? "tesler-shifted" : "tesler";
    for (auto& core : cores_of(cfg))
        for (auto& l : upto(core, mq))
            for (int k = shifted ? 1 : 0; k < (shifted ? r : 1); ++k) {
                int N = trunc_for(cfg, l);
                Params p{{"lambda", pstr(l)}, {"core", core.str()}, {"k", std::to_string(k)}, {"N", std::to_string(N)}};
                out.push_back(guarded(id, p, [=]() {
                    const MultiSymFunc& h = wreath_H(l, r);
                    RatFunc c = at_core(h, w0_act(core), r);
                    MultiSymFunc f = sig(h, -k).scale(c.inv());
                    return compare(id, p, delta_fn(l, r, k, N), V_apply(f, sigma_act(core, -k), k, N));
                }));
            }
    return out;
}

std::vector<Check> tesler_star_checks(const VerifyConfig& cfg, int mq) {
    std::vector<Check> out;
    int r = cfg.r;
    for (auto& core : cores_of(cfg)) {
        auto ls = enumerate(core, std::max(mq, 1));
        if (ls.empty()) continue;
        Partition l = ls.front();
        for (int k = 0; k < r; ++k) {
            int N = trunc_for(cfg, l);
            Params p{{"lambda", pstr(l)}, {"core", core.str()}, {"k", std::to_string(k)}, {"N", std::to_string(N)}};
            out.push_back(guarded("tesler-star", p, [=]() {
                const MultiSymFunc& hd = wreath_Hdag(l, r);
                ColoredCharSum s = D_of(core_partition(w0_act(core)), r).star().scale(RatFunc(-1));
                MultiSymFunc f = sig(hd, k).scale(evaluate(hd, s).inv());
                return compare("tesler-star", p, star_delta_fn(l, r, k, N), V_star_apply(f, w0s(core, k), k, N));
            }));
        }
    }
    return out;
}

std::vector<Check> mk_checks(const VerifyConfig& cfg, int mq) {
    std::vector<Check> out;
    int r = cfg.r;
    for (auto& core : cores_of(cfg))
        for (int k = 0; k < r; ++k)
            for (auto& l : upto(core, mq))
                for (auto& m : upto(w0s(core, k), mq)) {
                    Params p{{"lambda", pstr(l)}, {"mu", pstr(m)}, {"k", std::to_string(k)}};
                    out.push_back(guarded("mk", p, [=]() {
                        RatFunc u = u_();
                        auto side = [&](const Partition& a, const Partition& b) {
                            ColoredCharSum s = iota_D(b, r, k).scale(u) + unit(r);
                            return evaluate(wreath_H(a, r), s) / one_minus_u_chi(a, r, k, u);
                        };
                        return compare("mk", p, side(l, m), side(m, l));
                    }));
                }
    return out;
}

std::vector<Check> eval_checks(const VerifyConfig& cfg, int mq) {
    std::vector<Check> out;
    int r = cfg.r;
    for (auto& core : cores_of(cfg))
        for (auto& l : upto(core, mq))
            for (int k = 0; k < r; ++k) {
                Params p{{"lambda", pstr(l)}, {"k", std::to_string(k)}};
                out.push_back(guarded("eval-one", p, [=]() {
                    RatFunc u = u_();
                    ColoredCharSum s = iota_D(core_partition(w0s(core, k)), r, k).scale(u) + unit(r);
                    return compare("eval-one", p, evaluate(wreath_H(l, r), s), one_minus_u_chi(l, r, k, u));
                }));
            }
    return out;
}

std::vector<Check> reciprocity_checks(const VerifyConfig& cfg, int mq) {
    std::vector<Check> out;
    int r = cfg.r;
    for (auto& core : cores_of(cfg))
        for (int k = 0; k < r; ++k)
            for (auto& l : upto(core, mq))
                for (auto& m : upto(w0s(core, k), mq)) {
                    Params p{{"lambda", pstr(l)}, {"mu", pstr(m)}, {"k", std::to_string(k)}};
                    out.push_back(guarded("reciprocity", p, [=]() {
                        auto side = [&](const Partition& a, const Partition& b) {
                            const MultiSymFunc& h = wreath_H(a, r);
                            return evaluate(h, iota_D(b, r, k)) / at_core(h, w0s(core_label(a, r), k), r, k);
                        };
                        return compare("reciprocity", p, side(l, m), side(m, l));
                    }));
                }
    return out;
}

std::vector<Check> cmm_checks(const VerifyConfig& cfg, int mq) {
    std::vector<Check> out;
    int r = cfg.r;
    for (auto& alpha : cores_of(cfg))
        for (auto& l : upto(alpha, mq))
            for (auto& m : upto(w0_act(alpha), mq)) {
                Params p{{"alpha", alpha.str()}, {"lambda", pstr(l)}, {"mu", pstr(m)}};
                out.push_back(guarded("fourier-pairing", p, [=]() {
                    const MultiSymFunc& hl = wreath_H(l, r);
                    const MultiSymFunc& hm = wreath_H(m, r);
                    RatFunc lhs = fourier_pairing(hm, hl, alpha);
                    RatFunc a = at_core(hm, alpha, r) * evaluate(hl, iota_D(m, r));
                    RatFunc b = at_core(hl, w0_act(alpha), r) * evaluate(hm, iota_D(l, r));
                    return boolean("fourier-pairing", p, lhs == a && a == b, lhs.str(), a.str() + " ; " + b.str());
                }));
            }
    return out;
}

std::vector<Check> interpolation_checks(const VerifyConfig& cfg, int mq) {
    std::vector<Check> out;
    int r = cfg.r;
    for (auto& core : cores_of(cfg))
        for (auto& m : upto(core, mq)) {
            int qm = quot_size(m, r);
            for (auto& l : upto(core, qm + 1)) {
                Params p{{"mu", pstr(m)}, {"lambda", pstr(l)}};
                out.push_back(guarded("interpolation", p, [=]() {
                    RatFunc v = evaluate(interpolation(m, r), iota_D(l, r));
                    RatFunc via_skew = evaluate(skew_H(l, m, r), unit(r)) / wreath_norm(m, r);
                    bool ok = v == via_skew;
                    std::string rhs = via_skew.str();
                    if (quot_size(l, r) <= qm) {
                        RatFunc delta(l == m ? 1 : 0);
                        ok = ok && v == delta;
                        rhs += " ; " + delta.str();
                    }
                    return boolean("interpolation", p, ok, v.str(), rhs, "value at iota D_lambda, skew form, delta");
                }));
            }
        }
    return out;
}

std::vector<Check> kostka_checks(const VerifyConfig& cfg, int mq) {
    std::vector<Check> out;
    int r = cfg.r;
    for (auto& core : cores_of(cfg))
        for (int n = 1; n <= mq; ++n)
            for (auto& m : enumerate(core, n))
                for (auto& g : multipartitions(n, r)) {
                    Params p{{"gamma", multipartition_str(g)}, {"mu", pstr(m)}};
                    out.push_back(guarded("kostka", p, [=]() {
                        RatFunc a = kostka(g, m, r);
                        RatFunc b = kostka_plethystic(g, m, r);
                        Multipartition ig(r);
                        for (int i = 0; i < r; ++i) ig[i] = g[mod(-i, r)];
                        MultiSymFunc s = pleth_apply(schur(ig), PlethMatrix::pairing_matrix(r).inverse());
                        RatFunc c = qt_pairing(s, wreath_H(m, r));
                        return boolean("kostka", p, a == b && b == c, a.str(), b.str() + " ; " + c.str(),
                                       "Schur coefficient, plethystic formula, pairing");
                    }));
                }
    return out;
}

std::vector<Check> en_checks(const VerifyConfig& cfg, int mq) {
    std::vector<Check> out;
    int r = cfg.r;
    CoreLabel core = w0_act(core_label(Partition({1}), r));
    for (int n = 1; n <= mq; ++n)
        for (int k = 0; k < r; ++k) {
            Params p{{"n", std::to_string(n)}, {"k", std::to_string(k)}};
            out.push_back(guarded("e-expansion", p, [=]() {
                MultiSymFunc sum(r, RatFunc(0));
                for (auto& l : enumerate(core, n)) {
                    RatFunc c = one_minus_u_chi(l, r, 0, RatFunc(1)) / wreath_norm(l, r);
                    sum += sig(wreath_Hdag(l, r), k).scale(c);
                }
                if (n % 2) sum = -sum;
                return compare("e-expansion", p, e_n(r, n, k), sum);
            }));
        }
    return out;
}

std::vector<Check> skew_checks(const VerifyConfig& cfg, int mq) {
    std::vector<Check> out;
    int r = cfg.r;
    for (auto& core : cores_of(cfg))
        for (auto& l : upto(core, mq)) {
            Params p{{"lambda", pstr(l)}};
            out.push_back(guarded("skew", p, [=]() {
                MultiSymFunc lhs = pleth_translate(wreath_H(l, r), 0, RatFunc(1));
                MultiSymFunc rhs(r, RatFunc(0));
                bool ok = true;
                std::string note;
                for (auto& m : upto(core, quot_size(l, r))) {
                    MultiSymFunc sk = skew_H(l, m, r);
                    if (m == l && sk != MultiSymFunc(r, wreath_norm(l, r))) {
                        ok = false;
                        note = "H_{lambda/lambda dagger} differs from the norm";
                    }
                    if (!l.contains(m) && !sk.is_zero()) {
                        ok = false;
                        note = "nonzero for mu not contained in lambda: " + pstr(m);
                    }
                    rhs += wreath_H(m, r).scale(evaluate(sk, unit(r)) / wreath_norm(m, r));
                }
                ok = ok && lhs == rhs;
                return boolean("skew", p, ok, lhs.str(), rhs.str(), note);
            }));
        }
    return out;
}

std::vector<Check> delta_expand_checks(const VerifyConfig& cfg, int mq) {
    std::vector<Check> out;
    int r = cfg.r;
    auto cores = cores_of(cfg);
    for (auto& core : cores)
        for (auto& l : upto(core, mq))
            for (int k = 0; k < r; ++k) {
                int N = trunc_for(cfg, l);
                for (auto& alpha : cores) {
                    Params p{{"lambda", pstr(l)}, {"k", std::to_string(k)}, {"alpha", alpha.str()},
                             {"N", std::to_string(N)}};
                    out.push_back(guarded("delta-expansion", p, [=]() {
                        MultiSymFunc e = delta_fn(l, r, k, N);
                        ColoredCharSum s = iota_D(l, r, k);
                        MultiSymFunc a(r, RatFunc(0)), b(r, RatFunc(0));
                        for (auto& m : upto(alpha, N)) {
                            a += wreath_Hdag(m, r).scale(evaluate(wreath_H(m, r), s) / wreath_norm(m, r));
                            b += wreath_H(m, r).scale(evaluate(wreath_Hdag(m, r), s) / wreath_norm(m, r));
                        }
                        return boolean("delta-expansion", p, e == a && e == b, e.str(), a == b ? "both forms agree" : "forms differ");
                    }));
                }
                Params p{{"lambda", pstr(l)}, {"k", std::to_string(k)}, {"N", std::to_string(N)}};
                out.push_back(guarded("delta-pairing", p, [=]() {
                    MultiSymFunc e = delta_fn(l, r, k, N);
                    MultiSymFunc se = star_delta_fn(l, r, k, N);
                    ColoredCharSum s = iota_D(l, r, k);
                    ColoredCharSum ss = D_of(l, r).star().scale(-(q_() * t_())).shift(k);
                    for (int n = 0; n <= N; ++n)
                        for (auto& g : multipartitions(n, r)) {
                            MultiSymFunc f = schur(g);
                            RatFunc a = qt_pairing(f, e), b = evaluate(f, s);
                            if (a != b) return boolean("delta-pairing", p, false, a.str(), b.str(), multipartition_str(g));
                            RatFunc c = qt_pairing(f, se), d = evaluate(f, ss);
                            if (c != d)
                                return boolean("delta-pairing", p, false, c.str(), d.str(),
                                               "star " + multipartition_str(g));
                        }
                    return boolean("delta-pairing", p, true, "<s_gamma, E>'", "s_gamma evaluated", "all gamma up to N");
                }));
            }
    return out;
}

std::vector<Check> delta_he_checks(const VerifyConfig& cfg, int mq) {
    std::vector<Check> out;
    int r = cfg.r;
    for (auto& core : cores_of(cfg))
        for (auto& l : upto(core, mq)) {
            int N = trunc_for(cfg, l);
            Params p{{"lambda", pstr(l)}, {"N", std::to_string(N)}};
            out.push_back(guarded("delta-dagger", p, [=]() {
                const MultiSymFunc& h = wreath_H(l, r);
                MultiSymFunc f = pleth_apply(h, PlethMatrix::iota(r).scale(RatFunc(-1)));
                MultiSymFunc lhs = delta_op_dag(f, delta_fn(core_partition(core), r, 0, N), core);
                MultiSymFunc rhs(r, RatFunc(0));
                for (auto& m : upto(w0_act(core), N)) {
                    const MultiSymFunc& hm = wreath_H(m, r);
                    RatFunc c = evaluate(h, iota_D(m, r)) * at_core(hm, core, r) / wreath_norm(m, r);
                    rhs += wreath_Hdag(m, r).scale(c);
                }
                return compare("delta-dagger", p, lhs, rhs);
            }));
        }
    return out;
}

std::vector<Check> vmult_checks(const VerifyConfig& cfg, int) {
    std::vector<Check> out;
    int r = cfg.r;
    int N = cfg.trunc > 0 ? cfg.trunc : 3;
    for (auto& core : cores_of(cfg)) {
        Params p0{{"core", core.str()}, {"f", "1"}, {"N", std::to_string(N)}};
        out.push_back(guarded("tesler-multiplication", p0, [=]() {
            return compare("tesler-multiplication", p0, V_apply(MultiSymFunc::one(r), core, 0, N),
                           delta_fn(core_partition(core), r, 0, N));
        }));
        for (int i = 0; i < r; ++i) {
            Params p{{"core", core.str()}, {"f", "p1[X" + std::to_string(i) + "]"}, {"N", std::to_string(N)}};
            out.push_back(guarded("tesler-multiplication", p, [=]() {
                MultiSymFunc f = MultiSymFunc::p(r, 1, i);
                MultiSymFunc g = pleth_apply(f, PlethMatrix::iota(r).scale(RatFunc(-1)));
                MultiSymFunc rhs = delta_op_dag(g, V_apply(MultiSymFunc::one(r), core, 0, N), core);
                return compare("tesler-multiplication", p, V_apply(f, core, 0, N), rhs);
            }));
        }
    }
    return out;
}

std::vector<Check> down_checks(const VerifyConfig& cfg, int mq) {
    std::vector<Check> out;
    int r = cfg.r;
    for (auto& core : cores_of(cfg)) {
        for (int n = 0; n <= mq; ++n)
            for (auto& g : multipartitions(n, r)) {
                Params p{{"core", core.str()}, {"f", multipartition_str(g)}};
                out.push_back(guarded("down-arrow", p, [=]() {
                    WreathPoly f{schur(g), core};
                    WreathPoly twice = down_arrow(down_arrow(f));
                    WreathPoly conj = down_arrow(nabla(down_arrow(f), 1));
                    WreathPoly inv = nabla(f, -1);
                    bool ok = twice == f && conj == inv;
                    return boolean("down-arrow", p, ok, conj.value.str(), inv.value.str(),
                                   twice == f ? "involution holds" : "not an involution");
                }));
            }
        for (auto& l : upto(core, mq)) {
            Params p{{"lambda", pstr(l)}};
            out.push_back(guarded("down-arrow", p, [=]() {
                WreathPoly a = down_arrow(WreathPoly{wreath_H(l, r), core});
                WreathPoly b{wreath_Hdag(l, r), w0_act(core)};
                return boolean("down-arrow", p, a == b, a.value.str(), b.value.str(), "image of H_lambda");
            }));
        }
    }
    return out;
}

std::vector<Check> kernel_checks(const VerifyConfig& cfg, int mq) {
    std::vector<Check> out;
    int r = cfg.r;
    for (auto& alpha : cores_of(cfg))
        for (auto& l : upto(alpha, mq)) {
            Params p{{"alpha", alpha.str()}, {"lambda", pstr(l)}, {"side", "x"}};
            out.push_back(guarded("fourier-kernel", p, [=]() {
                const MultiSymFunc& h = wreath_H(l, r);
                return compare("fourier-kernel", p, fourier_kernel_at_y(alpha, l),
                               h.scale(at_core(h, w0_act(alpha), r).inv()));
            }));
            Partition nu = w0_act(l, r);
            Params py{{"alpha", alpha.str()}, {"lambda", pstr(nu)}, {"side", "y"}};
            out.push_back(guarded("fourier-kernel", py, [=]() {
                const MultiSymFunc& h = wreath_H(nu, r);
                return compare("fourier-kernel", py, fourier_kernel_at_x(alpha, nu), h.scale(at_core(h, alpha, r).inv()));
            }));
        }
    return out;
}

std::vector<Check> delta_op_checks(const VerifyConfig& cfg, int mq) {
    std::vector<Check> out;
    int r = cfg.r;
    for (auto& core : cores_of(cfg))
        for (auto& l : upto(core, mq))
            for (int k = 0; k < r; ++k) {
                Params p{{"lambda", pstr(l)}, {"k", std::to_string(k)}};
                out.push_back(guarded("delta-eigen", p, [=]() {
                    MultiSymFunc f = MultiSymFunc::p(r, 1, 0) * MultiSymFunc::p(r, 1, 1) + MultiSymFunc::p(r, 2, k);
                    RatFunc ev = evaluate(f, D_of(l, r).scale(RatFunc(-1)));
                    MultiSymFunc g = sig(wreath_H(l, r), -k);
                    MultiSymFunc lhs = delta_op_shifted(f, g, sigma_act(core, -k), k);
                    bool ok = lhs == g.scale(ev);
                    if (k == 0) {
                        MultiSymFunc hd = wreath_Hdag(l, r);
                        ok = ok && delta_op_dag(f, hd, w0_act(core)) == hd.scale(ev);
                    }
                    return boolean("delta-eigen", p, ok, lhs.str(), g.scale(ev).str());
                }));
            }
    return out;
}

}  // namespace

CheckResult boolean(std::string id, Params params, bool ok, std::string lhs, std::string rhs, std::string note) {
    CheckResult c;
    c.identity = std::move(id);
    c.params = std::move(params);
    c.status = ok ? Status::pass : Status::fail;
    c.lhs = clip(std::move(lhs));
    c.rhs = clip(std::move(rhs));
    c.note = std::move(note);
    return c;
}

Check guarded(std::string id, Params params, std::function<CheckResult()> body) {
    return Check{params, [id, params, body]() {
                     try {
                         return body();
                     } catch (const std::exception& e) {
                         return failed(id, params, std::string("exception: ") + e.what());
                     }
                 }};
}

std::vector<CoreLabel> default_cores(int r) {
    if (r == 1) return {CoreLabel::zero(1)};
    if (r == 2) return {CoreLabel::zero(2), core_label(Partition({1}), 2)};
    return {CoreLabel::zero(r), core_label(Partition({1, 1}), r)};
}

CheckResult compare(std::string id, Params params, const RatFunc& lhs, const RatFunc& rhs) {
    return boolean(std::move(id), std::move(params), lhs == rhs, lhs.str(), rhs.str());
}

CheckResult compare(std::string id, Params params, const MultiSymFunc& lhs, const MultiSymFunc& rhs) {
    bool ok = lhs == rhs;
    return boolean(std::move(id), std::move(params), ok, lhs.str(), rhs.str(), ok ? "" : "difference: " + clip((lhs - rhs).str()));
}

const std::vector<Identity>& wreath_identities() {
    static const std::vector<Identity> ids = {
        {"definition", "triangularity, normalization, one-dimensional intersection", 2, 1, definition_checks},
        {"biorthogonality", "<Hdag_mu, H_lambda>' vanishes off the diagonal", 2, 1, biorthogonality_checks},
        {"cauchy", "sum of Hdag[X] H[Y] / N equals the pairing kernel", 2, 1, cauchy_checks},
        {"nabla-ev", "nabla eigenvalue, box product and H[iota D_{w0 core}] agree", 2, 3,
         [](const VerifyConfig& c, int m) { return nabla_checks(c, m, false); }},
        {"nabla-ev-shifted", "H[sigma^k iota D_{w0 sigma^-k core}] is the color-k box product", 2, 3,
         [](const VerifyConfig& c, int m) { return nabla_checks(c, m, true); }},
        {"nabla-adjoint", "nabla_alpha and nabla_{w0 alpha} are adjoint", 2, 3, nabla_adjoint_checks},
        {"tesler", "V applied to the normalized H is the delta function", 1, 3,
         [](const VerifyConfig& c, int m) { return tesler_checks(c, m, false); }},
        {"tesler-shifted", "shifted V applied to the shifted H is the shifted delta function", 1, 3,
         [](const VerifyConfig& c, int m) { return tesler_checks(c, m, true); }},
        {"tesler-star", "dual V applied to the dual H is the dual delta function", 1, 3, tesler_star_checks},
        {"mk", "shifted evaluation duality, exact in u", 1, 3, mk_checks},
        {"eval-one", "H[1 + u sigma^k iota D] is the color-k box product in u", 2, 3, eval_checks},
        {"reciprocity", "normalized evaluations are symmetric", 2, 3, reciprocity_checks},
        {"fourier-pairing", "Fourier pairing of H's factors into evaluations", 1, 3, cmm_checks},
        {"interpolation", "interpolation polynomials vanish on the grid and match the skew form", 1, 3,
         interpolation_checks},
        {"kostka", "Kostka coefficients by three routes", 2, 3, kostka_checks},
        {"e-expansion", "e_n[X^(k)] in the dual basis", 2, 3, en_checks},
        {"skew", "H[X + 1] through skew coefficients", 2, 3, skew_checks},
        {"delta-expansion", "delta functions in the H and Hdag bases, and their pairings", 1, 3, delta_expand_checks},
        {"delta-dagger", "Delta dagger on the core delta function", 1, 3, delta_he_checks},
        {"tesler-multiplication", "V intertwines multiplication and Delta dagger", 1, 3, vmult_checks},
        {"down-arrow", "the down-arrow involution", 2, 3, down_checks},
        {"fourier-kernel", "specializations of the Fourier kernel", 1, 3, kernel_checks},
        {"delta-eigen", "Delta operators are diagonal with eigenvalue f[-D]", 1, 3, delta_op_checks},
    };
    return ids;
}

std::vector<CheckResult> run_checks(const std::vector<Check>& checks, int jobs) {
    std::vector<CheckResult> out(checks.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i; (i = next++) < checks.size();) out[i] = checks[i].run();
    };
    int n = std::max(1, std::min<int>(jobs, int(checks.size())));
    std::vector<std::thread> pool;
    for (int i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return out;
}

std::vector<CheckResult> run_identity(const Identity& id, const VerifyConfig& cfg) {
    if (cfg.r < id.min_r && cfg.r != 2) {
        CheckResult c;
        c.identity = id.id;
        c.params = {{"r", std::to_string(cfg.r)}};
        c.status = Status::skipped;
        c.note = "needs r >= " + std::to_string(id.min_r);
        return {c};
    }
    int mq = cfg.max_quot >= 0 ? cfg.max_quot : id.default_max_quot;
    auto checks = id.instances(cfg, mq);
    if (cfg.k >= 0) {
        std::vector<Check> kept;
        for (auto& c : checks) {
            bool keep = true;
            for (auto& [name, value] : c.params)
                if (name == "k" && value != std::to_string(cfg.k)) keep = false;
            if (keep) kept.push_back(std::move(c));
        }
        checks = std::move(kept);
    }
    auto out = run_checks(checks, cfg.jobs);
    for (auto& c : out) {
        c.params.insert(c.params.begin(), {"r", std::to_string(cfg.r)});
        if (cfg.r == 2) c.gated = false;
    }
    return out;
}

const std::vector<Identity>& all_identities() {
    static const std::vector<Identity> ids = [] {
        std::vector<Identity> v = wreath_identities();
        for (auto& i : vertex_identities()) v.push_back(i);
        return v;
    }();
    return ids;
}

const Identity* find_identity(const std::string& id) {
    for (auto& i : all_identities())
        if (i.id == id) return &i;
    return nullptr;
}

}  // namespace wm
