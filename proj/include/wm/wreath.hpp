// Wreath Macdonald polynomials, their duals and norms, and the operators built on them.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wm/partitions.hpp"
#include "wm/symfunc.hpp"

namespace wm {

// f (x) e^core
struct WreathPoly {
    MultiSymFunc value;
    CoreLabel core;
    bool operator==(const WreathPoly& o) const { return core == o.core && value == o.value; }
};

// e_n[X^(p) / (1 - t^-1 sigma^-1)] and h_n[X^(p) / (1 - q sigma^-1)]
MultiSymFunc modified_e(int r, int n, int p);
MultiSymFunc modified_h(int r, int n, int p);
// e_g or h_g evaluated at X / (1 - t^-1 sigma^-1) resp. X / (1 - q sigma^-1)
MultiSymFunc modified_eh(const Multipartition& g, Basis kind);

enum class HMethod {
    sampled,  // modular sampling, interpolation, exact certification
    exact,    // fraction-free elimination over Q(q, t)
};

// H_lambda for every lambda with the given core and |quot| = n.
struct HTable {
    int r = 1, n = 0;
    CoreLabel core;
    std::vector<Partition> lambdas;           // enumerate(core, n)
    std::vector<Multipartition> basis;        // multipartitions(n, r)
    std::vector<std::map<Multipartition, RatFunc>> schur;  // Schur expansion of each H
    std::vector<MultiSymFunc> H, Hdag;
    std::vector<RatFunc> norm;                // N_lambda
    std::vector<int> intersection_dim;        // filled by the exact method
    HMethod method = HMethod::sampled;

    int index(const Partition& lambda) const;  // -1 if absent
    // Coefficients of a degree-n f in the basis {H} resp. {Hdag}.
    std::vector<RatFunc> expand(const MultiSymFunc& f) const;
    std::vector<RatFunc> expand_dag(const MultiSymFunc& f) const;

    // Hall-dual vectors: expand(f)[i] = hall(dual[i], f)
    std::vector<MultiSymFunc> dual, dual_dag;
};

HTable compute_H(const CoreLabel& core, int n, HMethod method = HMethod::sampled);
// Shared, lazily built tables (sampled method). Thread safe.
const HTable& h_table(const CoreLabel& core, int n);
void clear_h_tables();

// H_lambda and friends through the shared tables.
const MultiSymFunc& wreath_H(const Partition& lambda, int r);
const MultiSymFunc& wreath_Hdag(const Partition& lambda, int r);
const RatFunc& wreath_norm(const Partition& lambda, int r);

// Both triangularity conditions and the normalization, checked exactly.
bool satisfies_definition(const MultiSymFunc& h, const Partition& lambda, int r, std::string* why = nullptr);

// ---- nabla ----

// (-1)^{|quot|} prod of characters of color-0 boxes of lambda minus its core
RatFunc nabla_eigen(const Partition& lambda, int r);
MultiSymFunc nabla(const MultiSymFunc& f, const CoreLabel& core, int power = 1);
WreathPoly nabla(const WreathPoly& f, int power = 1);

// ---- evaluations ----

// iota D_lambda, and sigma^k iota D_lambda
ColoredCharSum iota_D(const Partition& lambda, int r, int k = 0);
// f[S]
RatFunc evaluate(const MultiSymFunc& f, const ColoredCharSum& s);

// ---- delta functions and the Tesler operator ----

// E_lambda^(k) truncated to degree n_max
MultiSymFunc delta_fn(const Partition& lambda, int r, int k, int n_max);
// *E_lambda^(k) truncated to degree n_max
MultiSymFunc star_delta_fn(const Partition& lambda, int r, int k, int n_max);

// nabla Omega[X^(-k) / ((1 - q sigma^-1)(t sigma - 1))] T[X^(-k)] nabla on f (x) e^core
MultiSymFunc V_apply(const MultiSymFunc& f, const CoreLabel& core, int k, int n_max);
// nabla^-1 Omega[-X^(k) / ((1 - q^-1 sigma)(t^-1 sigma^-1 - 1))] T[-X^(k)] nabla^-1 on f (x) e^core
MultiSymFunc V_star_apply(const MultiSymFunc& f, const CoreLabel& core, int k, int n_max);

// ---- Delta operators ----

// Delta[f] on g (x) e^core: diagonal on H_lambda with eigenvalue f[-D_lambda].
MultiSymFunc delta_op(const MultiSymFunc& f, const MultiSymFunc& g, const CoreLabel& core);
// Delta^dagger[f] on g (x) e^core: diagonal on Hdag_lambda (core(lambda) = w0 core).
MultiSymFunc delta_op_dag(const MultiSymFunc& f, const MultiSymFunc& g, const CoreLabel& core);
// Delta_(k)[f] = sigma^-k Delta[f] sigma^k
MultiSymFunc delta_op_shifted(const MultiSymFunc& f, const MultiSymFunc& g, const CoreLabel& core, int k);

// ---- other constructions ----

WreathPoly sigma_apply(const WreathPoly& f, int k = 1);
WreathPoly down_arrow(const WreathPoly& f);

// H_{lambda / mu dagger}
MultiSymFunc skew_H(const Partition& lambda, const Partition& mu, int r);
// interpolation polynomial of mu
MultiSymFunc interpolation(const Partition& mu, int r);
// f^F_alpha = nabla^-1_{w0 alpha} T[-X^(0)] f
MultiSymFunc fourier_transform(const MultiSymFunc& f, const CoreLabel& alpha);
// <T[X^(0)] nabla_{w0 alpha} f, T[X^(0)] nabla_alpha g>'
RatFunc fourier_pairing(const MultiSymFunc& f, const MultiSymFunc& g, const CoreLabel& alpha);
// F_alpha[X, iota D_lambda] for core(lambda) = alpha, and F_alpha[iota D_nu, Y] for core(nu) = w0 alpha
MultiSymFunc fourier_kernel_at_y(const CoreLabel& alpha, const Partition& lambda);
MultiSymFunc fourier_kernel_at_x(const CoreLabel& alpha, const Partition& nu);

// Kostka coefficient: Schur coefficient of H_mu, and the plethystic formula.
RatFunc kostka(const Multipartition& gamma, const Partition& mu, int r);
RatFunc kostka_plethystic(const Multipartition& gamma, const Partition& mu, int r);

}  // namespace wm
