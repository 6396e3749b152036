#ifndef TANDEM_SERIES_HPP
#define TANDEM_SERIES_HPP

#include <string>
#include <vector>

#include "tandem/steps.hpp"
#include "tandem/tseries.hpp"

namespace tandem {

// Step generating function S(x,y) = x/y + sum_r z_r sum_{i<=r} x^{-(r-i)} y^i,
// with slot 0 = x and slot 1 = y. kernel K = 1 - t S.
LaurentPoly step_polynomial(const WeightSpec& spec);

// Unique power series root Y1(x) of K(x,Y)=0, to t-order < trunc; coefficients
// are Laurent polynomials in x (slot 0). with_x = false evaluates at x = 1.
TSeries y1_series(const WeightSpec& spec, int trunc, bool with_x = true);
TSeries w_series(const WeightSpec& spec, int trunc);

// Fixed-point residual Y1 - t(x + Y1 * sum...) which must vanish identically;
// exposed for tests of the kernel-root property.
TSeries y1_fixed_point_residual(const WeightSpec& spec, int trunc);

// Quadrant walks from (0,b) ending on the x-axis: nonnegative-x part of
// (Y1/(tx)) (Y1^b + ... + xbar^b) (1 - 1/(t x^2) + sum_r z_r (r+1) xbar^{r+2}).
// Result is a power series in t whose coefficients are polynomials in x
// ([t^n x^c] counts n-step walks (0,b) -> (c,0)). Throws on a negative-power
// residue in t or x, which would signal an implementation bug.
TSeries q0b_x0(const WeightSpec& spec, long b, int trunc);

// Slice [y^d] Q^{(0,b)}(x,y) via the P_d recurrence.
TSeries q0b_y_slice(const WeightSpec& spec, long b, long d, int trunc);
// The P_d polynomials themselves (Laurent in x, Laurent in t).
TSeries p_d_series(const WeightSpec& spec, long d, int trunc);

// Same series as q0b_x0 but computed as a constant term in the auxiliary
// variable z of a rational integrand built from S(x,z) and its z-derivative.
TSeries q0b_constant_term(const WeightSpec& spec, long b, int trunc);

// Excursion sequence [x^0] q0b-series for the single-level weight z_p = 1
// (the printed triangulation/quadrangulation-style specializations).
std::vector<Rat> excursion_constant_term_sequence(int p, int trunc);

// A_i as polynomials in W (slot 1 = W), for i = 0..a_max.
std::vector<LaurentPoly> a_i_polynomials(const WeightSpec& spec, long a_max);

// Q^{(a,b)}(1,1) = (W/t) (A_0+...+A_a)(W) (1+W+...+W^b).
TSeries q11_series(const WeightSpec& spec, long a, long b, int trunc);

// Upper-half-plane walks from (0,b) to the line y = a that touch the x-axis:
// (W/t) A_a(W) W^b.
TSeries halfplane_gf(const WeightSpec& spec, long a, long b, int trunc);

// One-dimensional walks with steps in {-1,0,1,...,p}; weights may carry a
// Laurent-polynomial x-dependence (slot 0) so the tandem specialization
// w_{-1} = x, w_s = sum_{r>=s} xbar^{r-s} z_r is expressible.
struct OneDWeights {
    LaurentPoly w_m1;              // weight of the -1 step; must be a monomial
    std::vector<LaurentPoly> w;    // w[s] for steps s = 0..p
};

OneDWeights oned_tandem_specialization(const WeightSpec& spec, bool with_x);

// First-passage series Y = t sum_i w_i Y^{i+1}.
TSeries oned_y_series(const OneDWeights& weights, int trunc);
// Nonnegative walks from 0 to a via the record decomposition.
TSeries oned_h_series(const OneDWeights& weights, long a, int trunc);
// Constant-term route: -t [y^0] y^{1+k} S'(y)/K(y), which must equal Y^k.
TSeries oned_lk_constant_term(const OneDWeights& weights, long k, int trunc);

struct OneDReport {
    bool ok = true;
    std::string detail;
};

// Checks oned_h_series against a direct DP and oned_lk_constant_term
// against Y^k, coefficientwise to the truncation order.
OneDReport oned_identities(const OneDWeights& weights, int trunc, long k_max, long a_max);

// Difference of the u-expansions of u*V(u,0) and 1/(I0(u)-I0(1)) (both sides
// carry a common 2/sigma factor which is divided out); expected all zero.
std::vector<Rat> invariant_identity_residual(const StepDistribution& dist, int order_u);

} // namespace tandem

#endif
