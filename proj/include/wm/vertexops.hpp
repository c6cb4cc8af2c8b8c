// Fock representation matrix elements, boson eigenvalues, and constant-term
// operators evaluated as truncated (q,t)-series.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "wm/partitions.hpp"
#include "wm/ratfield.hpp"
#include "wm/symfunc.hpp"
#include "wm/wreath.hpp"

namespace wm {

// ---- Fock field: qq = Q^2, dd = D^2, q = qq dd, t = qq / dd ----

RatFunc fock_qq();
RatFunc fock_dd();
RatFunc fock_v();
// q -> Q^2 D^2, t -> Q^2 D^-2
RatFunc to_fock(const RatFunc& f);
RatFunc fock_character(const Box& x);

enum class Current { e, f, psi };

struct FockElement {
    bool zero = true;
    RatFunc coeff;  // e, f: coefficient of delta(z / point); psi: rational function of z = zgen(0)
    RatFunc point;  // chi v for e, f
};

// e: <lambda| e_i(z) |mu>, mu = lambda + box
// f: <mu| f_i(z) |lambda>, mu = lambda + box
// psi: <lambda| psi_i(z) |lambda>, mu = lambda
FockElement fock_current(Current kind, int i, const Partition& lambda, const Partition& mu, int r);

// Coefficients of psi_i^+ in z^-1 (plus) or psi_i^- in z, through order n.
std::vector<RatFunc> psi_series(int i, const Partition& lambda, int r, bool plus, int n);

// Eigenvalue of b_{i,k}, k != 0: closed form over addable and removable boxes.
RatFunc boson_eigen(const Partition& lambda, int i, int k, int r);
// The same from the logarithm of the psi series.
RatFunc boson_eigen_from_psi(const Partition& lambda, int i, int k, int r);
// Eigenvalue of b*_{p,sign}, sign = +-1, assembled from boson eigenvalues and normalized
// by 1/((qq - qq^-1) v) resp. v/(qq - qq^-1).
RatFunc dual_boson_eigen(const Partition& lambda, int p, int sign, int r);
// (-D_lambda / ((1-q)(1-t)))^(p), starred when `star`
RatFunc dd_eigenvalue(const Partition& lambda, int p, bool star, int r);

// ---- truncated series ----

// Symmetric function with coefficients in truncated (q,t)-series. When `inverted`,
// the stored series S(q,t) stands for S(1/q, 1/t).
struct SeriesSym {
    int r = 1;
    CoreLabel core;
    bool inverted = false;
    int order = 0;
    std::map<PIndex, TruncSeries> terms;

    std::string str() const;
};

const std::vector<int>& series_vars();  // {q, t}

SeriesSym to_series(const WreathPoly& f, int order, bool inverted = false);
SeriesSym series_mul(const SeriesSym& a, const MultiSymFunc& g);
SeriesSym series_scale(const SeriesSym& a, const RatFunc& c);
SeriesSym series_sub(const SeriesSym& a, const SeriesSym& b);
// Equal through the smaller order; on mismatch describes the first differing coefficient.
bool series_equal(const SeriesSym& a, const SeriesSym& b, std::string* mismatch = nullptr);
// <a, g>' with the pairing expanded as a series
TruncSeries series_pairing(const SeriesSym& a, const MultiSymFunc& g);

class window_error : public arith_error {
public:
    using arith_error::arith_error;
};

// Coefficient of z^-k in the D series (or D* when `star`) applied to f (x) e^core.
// window < 0 picks the automatic bound; nonzero mass at the window edge throws window_error.
SeriesSym dd_apply(const WreathPoly& f, const std::vector<int>& k, bool star, int order, int window = -1);

enum class ColRow { column, row };
// Column: Delta[e^_n^(-p-1)[-iota X]], or Delta^dagger[e^_n^(p)[-iota X]] when adjoint.
// Row: Delta[h^_n^(-p)[-iota X]], or Delta^dagger[h^_n^(p)[-iota X]] when adjoint.
SeriesSym delta_colrow_apply(const WreathPoly& f, int n, int p, ColRow kind, bool adjoint, int order,
                             int window = -1);
// Eigenvalue on H_lambda (x) e^core, or on Hdag_lambda (x) e^{w0 core} when adjoint.
RatFunc colrow_eigenvalue(const Partition& lambda, int n, int p, ColRow kind, bool adjoint, int r);

// ---- one-variable constant terms ----

// { z F(z) / prod (z - P_i) }_0 with each pole classified by the region.
struct ConstTermProblem {
    std::vector<RatFunc> F;      // F[j] is the coefficient of z^j
    std::vector<RatFunc> poles;  // constant times a monomial in the region variables
    // (generator, +1) if |g| < 1, (generator, -1) if |g| > 1
    std::vector<std::pair<int, int>> region;
    int order = 4;
    int window = -1;  // z-exponent bound for the window method; < 0: automatic
};

enum class ConstTermMethod { residue, window };

struct ConstTermResult {
    ConstTermMethod method = ConstTermMethod::residue;
    bool exact = false;
    RatFunc value;       // when exact
    TruncSeries series;  // in the region variables, |g| > 1 ones inverted
    std::string report;
};

ConstTermResult const_term(const ConstTermProblem& p, ConstTermMethod method);

}  // namespace wm
