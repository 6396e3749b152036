#ifndef TANDEM_STOCHASTICS_HPP
#define TANDEM_STOCHASTICS_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "tandem/steps.hpp"

namespace tandem {

struct DriftReport {
    std::pair<Rat, Rat> drift;
    std::array<std::array<Rat, 2>, 2> covariance; // only meaningful when drift is zero
    Rat sigma2;                                   // sum_r z_r C(r+2,3)
    bool zero_drift = false;
    bool covariance_matches = false;              // covariance == sigma2 [[2,-1],[-1,2]]
};

DriftReport drift_and_covariance(const StepDistribution& dist);

struct Normalization {
    double alpha = 0;
    double gamma = 0;
    std::vector<double> z_r;
    double z = 0;
    double sigma2 = 0;
};

// Solve alpha^2 = sum_{r>=1} C(r+1,2) w_r alpha^{-r}, then gamma and the
// normalized zero-drift distribution z = alpha^2/gamma, z_r = w_r alpha^{-r}/gamma.
Normalization normalize_weights(const std::vector<double>& w);

// V(a,b) = rational_part / sigma; the rational part is
// 2 [u^a v^b] (1-uv) / ((1-u)^3 (1-v)^3 Lambda(u)).
struct HarmonicValue {
    Rat rational_part;
    double value(double sigma) const { return to_double(rational_part) / sigma; }
};

HarmonicValue harmonic_V(const StepDistribution& dist, long a, long b);
// Row of rational parts V(a,0..b_max) computed in one series division.
std::vector<std::vector<Rat>> harmonic_V_table(const StepDistribution& dist, long a_max, long b_max);

// Float variant for distributions produced by normalize_weights.
double harmonic_V_float(const std::vector<double>& z_r, double sigma2, long a, long b);

// Exact residual of V(a,b) = z V(a+1,b-1) + sum z_r sum V(a-i, b+r-i) over
// [0,A]x[0,B] (V = 0 off-quadrant); and of the global harmonicity of
// ab(a+b) and (a+1)(b+1)(a+b+2) on [-box,box]^2. All residuals must be 0.
struct HarmonicityReport {
    Rat max_abs_residual_quadrant;
    Rat max_abs_residual_vinf;
    Rat max_abs_residual_vinf_shifted;
};
HarmonicityReport check_harmonicity(const StepDistribution& dist, long A, long B, long box);

struct AsymptoticProfile {
    unsigned iota = 1;
    double alpha = 0, gamma = 0, sigma2 = 0, kappa = 0;
};

// kappa = iota/(4 sqrt(3) pi sigma^2) V(a,b) V(d,c) alpha^{(d-b)-(c-a)} for the
// zero-drift normalization of the weights.
AsymptoticProfile kappa_profile(const std::vector<double>& w, long a, long b, long c, long d);
// Face-degree wrapper: weights w_r = 1 exactly when r+2 is in omega; walks
// (0,b) -> (c,0).
AsymptoticProfile kappa_profile_bipolar(const std::vector<int>& omega, long b, long c);

struct DiagnosticsRow {
    long n = 0;
    double survival = 0, survival_ratio = 0;
    double local_prob = 0, local_ratio = 0;
    bool reachable = true;
};

// Float DP diagnostics of the survival and local limit claims.
std::vector<DiagnosticsRow> limit_diagnostics(const StepDistribution& dist, long a, long b, long c, long d,
                                              long n_max, const std::vector<long>& checkpoints);

struct ExitIdentity {
    Rat lhs_exact;        // V_inf^s(a,b) - sigma^3 V(a,b)  (= sigma2 * rational_part subtracted)
    double rhs_estimate;  // truncated E[V_inf^s at exit]
    double deficit;       // |rhs - lhs| / max(|lhs|, eps)
};

ExitIdentity exit_identity(const StepDistribution& dist, long a, long b, long n_trunc);

// Density of the scaled conditioned endpoint and its maximum.
double limit_density_g(double x, double y);
double limit_density_g0();

} // namespace tandem

#endif
