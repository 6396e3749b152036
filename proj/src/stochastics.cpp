#include "tandem/stochastics.hpp"

#include <cmath>
#include <stdexcept>

namespace tandem {

namespace {

Rat choose2(long m) { return Rat(m * (m - 1) / 2); }
Rat choose3(long m) { return m < 3 ? Rat(0) : Rat(m * (m - 1) * (m - 2) / 6); }

} // namespace

DriftReport drift_and_covariance(const StepDistribution& dist) {
    if (!dist.normalized()) throw std::invalid_argument("drift_and_covariance: distribution not normalized");
    DriftReport rep;
    Rat ex = dist.z, ey = -dist.z, exx = dist.z, eyy = dist.z, exy = -dist.z;
    for (int r = 0; r <= dist.p; ++r) {
        const Rat& zr = dist.z_r[static_cast<size_t>(r)];
        if (zr == 0) continue;
        for (int i = 0; i <= r; ++i) {
            int j = r - i;
            ex += zr * Rat(-i);
            ey += zr * Rat(j);
            exx += zr * Rat(i * i);
            eyy += zr * Rat(j * j);
            exy += zr * Rat(-i * j);
        }
    }
    rep.drift = {ex, ey};
    rep.zero_drift = (ex == 0 && ey == 0);
    rep.covariance = {{{exx, exy}, {exy, eyy}}};
    Rat s2 = 0;
    for (int r = 1; r <= dist.p; ++r) s2 += dist.z_r[static_cast<size_t>(r)] * choose3(r + 2);
    rep.sigma2 = s2;
    rep.covariance_matches = rep.zero_drift && exx == 2 * s2 && eyy == 2 * s2 && exy == -s2;
    return rep;
}

Normalization normalize_weights(const std::vector<double>& w) {
    int p = static_cast<int>(w.size()) - 1;
    bool any = false;
    for (int r = 1; r <= p; ++r)
        if (w[static_cast<size_t>(r)] > 0) any = true;
    if (!any) throw std::invalid_argument("normalize_weights: needs a positive weight at some level >= 1");
    auto f = [&](double alpha) {
        double rhs = 0;
        for (int r = 1; r <= p; ++r)
            rhs += 0.5 * r * (r + 1) * w[static_cast<size_t>(r)] * std::pow(alpha, -r);
        return alpha * alpha - rhs;
    };
    double lo = 1e-9, hi = 1.0;
    while (f(hi) < 0) hi *= 2;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (f(mid) < 0 ? lo : hi) = mid;
    }
    Normalization out;
    out.alpha = 0.5 * (lo + hi);
    out.gamma = 0;
    for (int r = 0; r <= p; ++r)
        out.gamma += 0.5 * (r + 2) * (r + 1) * w[static_cast<size_t>(r)] * std::pow(out.alpha, -r);
    out.z = out.alpha * out.alpha / out.gamma;
    out.z_r.resize(w.size());
    double total = out.z;
    for (int r = 0; r <= p; ++r) {
        out.z_r[static_cast<size_t>(r)] = w[static_cast<size_t>(r)] * std::pow(out.alpha, -r) / out.gamma;
        total += (r + 1) * out.z_r[static_cast<size_t>(r)];
    }
    if (std::abs(total - 1.0) > 1e-9) throw std::logic_error("normalize_weights: normalization failed");
    out.sigma2 = 0;
    for (int r = 1; r <= p; ++r)
        out.sigma2 += out.z_r[static_cast<size_t>(r)] * (r + 2.0) * (r + 1.0) * r / 6.0;
    return out;
}

namespace {

// Coefficients of 1/((1-u)^3 Lambda(u)) up to u^a, exact.
std::vector<Rat> harmonic_row_series(const StepDistribution& dist, long a_max) {
    int p = dist.p;
    std::vector<Rat> lambda(static_cast<size_t>(std::max(p, 1)), Rat(0));
    for (int k = 0; k < p; ++k)
        for (int r = k + 1; r <= p; ++r)
            lambda[static_cast<size_t>(k)] += dist.z_r[static_cast<size_t>(r)] * choose2(r - k + 1);
    if (lambda[0] == 0) throw std::domain_error("harmonic_V: Lambda(0) = 0");
    std::vector<Rat> cube{Rat(1), Rat(-3), Rat(3), Rat(-1)};
    std::vector<Rat> denom(lambda.size() + 3, Rat(0));
    for (size_t i = 0; i < cube.size(); ++i)
        for (size_t k = 0; k < lambda.size(); ++k) denom[i + k] += cube[i] * lambda[k];
    std::vector<Rat> inv(static_cast<size_t>(a_max) + 1, Rat(0));
    inv[0] = 1 / denom[0];
    for (long n = 1; n <= a_max; ++n) {
        Rat acc = 0;
        for (long k = 1; k <= n && k < static_cast<long>(denom.size()); ++k)
            acc += denom[static_cast<size_t>(k)] * inv[static_cast<size_t>(n - k)];
        inv[static_cast<size_t>(n)] = -acc / denom[0];
    }
    return inv;
}

} // namespace

HarmonicValue harmonic_V(const StepDistribution& dist, long a, long b) {
    if (!dist.normalized() || !dist.zero_drift())
        throw std::invalid_argument("harmonic_V: need a normalized zero-drift distribution");
    auto f = harmonic_row_series(dist, a);
    Rat fa = f[static_cast<size_t>(a)];
    Rat fam1 = a >= 1 ? f[static_cast<size_t>(a - 1)] : Rat(0);
    // [v^b] 1/(1-v)^3 = C(b+2,2); [v^b] v/(1-v)^3 = C(b+1,2)
    Rat cb2 = Rat((b + 2) * (b + 1) / 2);
    Rat cb1 = Rat((b + 1) * b / 2);
    return HarmonicValue{2 * (fa * cb2 - fam1 * cb1)};
}

std::vector<std::vector<Rat>> harmonic_V_table(const StepDistribution& dist, long a_max, long b_max) {
    auto f = harmonic_row_series(dist, a_max);
    std::vector<std::vector<Rat>> table(static_cast<size_t>(a_max) + 1,
                                        std::vector<Rat>(static_cast<size_t>(b_max) + 1));
    for (long a = 0; a <= a_max; ++a)
        for (long b = 0; b <= b_max; ++b) {
            Rat fam1 = a >= 1 ? f[static_cast<size_t>(a - 1)] : Rat(0);
            table[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                2 * (f[static_cast<size_t>(a)] * Rat((b + 2) * (b + 1) / 2) - fam1 * Rat((b + 1) * b / 2));
        }
    return table;
}

double harmonic_V_float(const std::vector<double>& z_r, double sigma2, long a, long b) {
    int p = static_cast<int>(z_r.size()) - 1;
    std::vector<double> lambda(static_cast<size_t>(std::max(p, 1)), 0.0);
    for (int k = 0; k < p; ++k)
        for (int r = k + 1; r <= p; ++r) lambda[static_cast<size_t>(k)] += z_r[static_cast<size_t>(r)] * 0.5 * (r - k + 1) * (r - k);
    std::vector<double> denom(lambda.size() + 3, 0.0);
    const double cube[4] = {1, -3, 3, -1};
    for (size_t i = 0; i < 4; ++i)
        for (size_t k = 0; k < lambda.size(); ++k) denom[i + k] += cube[i] * lambda[k];
    std::vector<double> inv(static_cast<size_t>(a) + 1, 0.0);
    inv[0] = 1.0 / denom[0];
    for (long n = 1; n <= a; ++n) {
        double acc = 0;
        for (long k = 1; k <= n && k < static_cast<long>(denom.size()); ++k)
            acc += denom[static_cast<size_t>(k)] * inv[static_cast<size_t>(n - k)];
        inv[static_cast<size_t>(n)] = -acc / denom[0];
    }
    double fam1 = a >= 1 ? inv[static_cast<size_t>(a - 1)] : 0.0;
    double rational = 2 * (inv[static_cast<size_t>(a)] * 0.5 * (b + 2) * (b + 1) - fam1 * 0.5 * (b + 1) * b);
    return rational / std::sqrt(sigma2);
}

HarmonicityReport check_harmonicity(const StepDistribution& dist, long A, long B, long box) {
    if (!dist.normalized() || !dist.zero_drift())
        throw std::invalid_argument("check_harmonicity: need a normalized zero-drift distribution");
    HarmonicityReport rep{Rat(0), Rat(0), Rat(0)};
    long a_hi = A + 1, b_hi = B + dist.p;
    auto table = harmonic_V_table(dist, a_hi, b_hi);
    auto V = [&](long a, long b) -> Rat {
        if (a < 0 || b < 0) return Rat(0);
        if (a > a_hi || b > b_hi) throw std::logic_error("check_harmonicity: table too small");
        return table[static_cast<size_t>(a)][static_cast<size_t>(b)];
    };
    for (long a = 0; a <= A; ++a)
        for (long b = 0; b <= B; ++b) {
            Rat rhs = dist.z * V(a + 1, b - 1);
            for (int r = 0; r <= dist.p; ++r) {
                const Rat& zr = dist.z_r[static_cast<size_t>(r)];
                if (zr == 0) continue;
                for (int i = 0; i <= r; ++i) rhs += zr * V(a - i, b + r - i);
            }
            Rat res = abs(V(a, b) - rhs);
            if (res > rep.max_abs_residual_quadrant) rep.max_abs_residual_quadrant = res;
        }
    auto check_global = [&](auto&& fn, Rat& worst) {
        for (long a = -box; a <= box; ++a)
            for (long b = -box; b <= box; ++b) {
                Rat rhs = dist.z * fn(a + 1, b - 1);
                for (int r = 0; r <= dist.p; ++r) {
                    const Rat& zr = dist.z_r[static_cast<size_t>(r)];
                    if (zr == 0) continue;
                    for (int i = 0; i <= r; ++i) rhs += zr * fn(a - i, b + r - i);
                }
                Rat res = abs(fn(a, b) - rhs);
                if (res > worst) worst = res;
            }
    };
    auto v_inf = [](long a, long b) -> Rat { return Rat(a) * Rat(b) * Rat(a + b); };
    auto v_inf_s = [](long a, long b) -> Rat { return Rat(a + 1) * Rat(b + 1) * Rat(a + b + 2); };
    check_global(v_inf, rep.max_abs_residual_vinf);
    check_global(v_inf_s, rep.max_abs_residual_vinf_shifted);
    return rep;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

} // namespace

AsymptoticProfile kappa_profile(const std::vector<double>& w, long a, long b, long c, long d) {
    auto norm = normalize_weights(w);
    AsymptoticProfile prof;
    std::vector<unsigned> levels;
    for (size_t r = 0; r < w.size(); ++r)
        if (w[r] > 0) levels.push_back(static_cast<unsigned>(r));
    prof.iota = periodicity(levels).iota;
    prof.alpha = norm.alpha;
    prof.gamma = norm.gamma;
    prof.sigma2 = norm.sigma2;
    double vab = harmonic_V_float(norm.z_r, norm.sigma2, a, b);
    double vdc = harmonic_V_float(norm.z_r, norm.sigma2, d, c);
    prof.kappa = prof.iota / (4.0 * std::sqrt(3.0) * kPi * norm.sigma2) * vab * vdc *
                 std::pow(norm.alpha, static_cast<double>((d - b) - (c - a)));
    return prof;
}

AsymptoticProfile kappa_profile_bipolar(const std::vector<int>& omega, long b, long c) {
    int top = 0;
    for (int s : omega) {
        if (s < 2) throw std::invalid_argument("kappa_profile_bipolar: face degrees must be >= 2");
        top = std::max(top, s - 2);
    }
    std::vector<double> w(static_cast<size_t>(top) + 1, 0.0);
    for (int s : omega) w[static_cast<size_t>(s - 2)] = 1.0;
    return kappa_profile(w, 0, b, c, 0);
}

namespace {

struct FloatGrid {
    long xmax, ymax;
    std::vector<double> v;
    double& at(long x, long y) { return v[static_cast<size_t>(x * (ymax + 1) + y)]; }
    double get(long x, long y) const {
        if (x < 0 || y < 0 || x > xmax || y > ymax) return 0.0;
        return v[static_cast<size_t>(x * (ymax + 1) + y)];
    }
};

double kahan_total(const std::vector<double>& values) {
    double sum = 0, comp = 0;
    for (double x : values) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

} // namespace

std::vector<DiagnosticsRow> limit_diagnostics(const StepDistribution& dist, long a, long b, long c, long d,
                                              long n_max, const std::vector<long>& checkpoints) {
    if (!dist.normalized() || !dist.zero_drift())
        throw std::invalid_argument("limit_diagnostics: need a normalized zero-drift distribution");
    double z = to_double(dist.z);
    std::vector<double> zr;
    for (const Rat& q : dist.z_r) zr.push_back(to_double(q));
    int p = dist.p;
    long xmax = a + n_max, ymax = b + p * n_max;
    FloatGrid cur{xmax, ymax, std::vector<double>(static_cast<size_t>((xmax + 1) * (ymax + 1)), 0.0)};
    cur.at(a, b) = 1.0;
    double sigma2 = to_double(drift_and_covariance(dist).sigma2);
    double sigma = std::sqrt(sigma2);
    double vab = to_double(harmonic_V(dist, a, b).rational_part) / sigma;
    double vdc = to_double(harmonic_V(dist, d, c).rational_part) / sigma;
    auto per = periodicity(support_levels(dist.as_weights()));
    std::vector<DiagnosticsRow> rows;
    for (long n = 1; n <= n_max; ++n) {
        long nxmax = std::min(xmax, a + n), nymax = std::min(ymax, b + p * n);
        FloatGrid next{xmax, ymax, std::vector<double>(static_cast<size_t>((xmax + 1) * (ymax + 1)), 0.0)};
        for (long x = 0; x <= nxmax; ++x)
            for (long y = 0; y <= nymax; ++y) {
                // pull form: mass entering (x,y)
                double acc = z * cur.get(x - 1, y + 1);
                for (int r = 0; r <= p; ++r) {
                    if (zr[static_cast<size_t>(r)] == 0) continue;
                    for (int i = 0; i <= r; ++i) acc += zr[static_cast<size_t>(r)] * cur.get(x + i, y - (r - i));
                }
                next.at(x, y) = acc;
            }
        cur = std::move(next);
        bool want = std::find(checkpoints.begin(), checkpoints.end(), n) != checkpoints.end();
        if (!want) continue;
        DiagnosticsRow row;
        row.n = n;
        row.survival = kahan_total(cur.v);
        row.survival_ratio = row.survival * 4.0 * std::sqrt(kPi) * std::pow(static_cast<double>(n), 1.5) / vab;
        row.reachable = per.reachable(n, c - a, d - b);
        row.local_prob = cur.get(c, d);
        if (row.reachable)
            row.local_ratio = row.local_prob * 4.0 * std::sqrt(3.0) * kPi * sigma2 *
                              std::pow(static_cast<double>(n), 4.0) / (per.iota * vab * vdc);
        rows.push_back(row);
    }
    return rows;
}

ExitIdentity exit_identity(const StepDistribution& dist, long a, long b, long n_trunc) {
    if (!dist.normalized() || !dist.zero_drift())
        throw std::invalid_argument("exit_identity: need a normalized zero-drift distribution");
    ExitIdentity out;
    Rat sigma2 = drift_and_covariance(dist).sigma2;
    Rat vshift = Rat(a + 1) * Rat(b + 1) * Rat(a + b + 2);
    out.lhs_exact = vshift - sigma2 * harmonic_V(dist, a, b).rational_part; // sigma^3 V = sigma2 * rational_part
    double z = to_double(dist.z);
    std::vector<double> zr;
    for (const Rat& q : dist.z_r) zr.push_back(to_double(q));
    int p = dist.p;
    long xmax = a + n_trunc, ymax = b + p * n_trunc;
    FloatGrid cur{xmax, ymax, std::vector<double>(static_cast<size_t>((xmax + 1) * (ymax + 1)), 0.0)};
    cur.at(a, b) = 1.0;
    std::vector<double> contributions;
    for (long n = 0; n < n_trunc; ++n) {
        // exits through the vertical boundary at this step
        for (long x = 0; x <= std::min(xmax, a + n); ++x)
            for (long y = 0; y <= std::min(ymax, b + p * n); ++y) {
                double mass = cur.get(x, y);
                if (mass == 0) continue;
                for (int r = 0; r <= p; ++r) {
                    if (zr[static_cast<size_t>(r)] == 0) continue;
                    for (int i = 0; i <= r; ++i) {
                        long nx = x - i, ny = y + (r - i);
                        if (nx >= 0) continue; // stays in quadrant or exits horizontally below (not here)
                        double vs = static_cast<double>(nx + 1) * static_cast<double>(ny + 1) *
                                    static_cast<double>(nx + ny + 2);
                        contributions.push_back(mass * zr[static_cast<size_t>(r)] * vs);
                    }
                }
            }
        FloatGrid next{xmax, ymax, std::vector<double>(static_cast<size_t>((xmax + 1) * (ymax + 1)), 0.0)};
        for (long x = 0; x <= std::min(xmax, a + n + 1); ++x)
            for (long y = 0; y <= std::min(ymax, b + p * (n + 1)); ++y) {
                double acc = 0;
                if (x >= 1 && y + 1 <= ymax) acc += z * cur.get(x - 1, y + 1);
                for (int r = 0; r <= p; ++r) {
                    if (zr[static_cast<size_t>(r)] == 0) continue;
                    for (int i = 0; i <= r; ++i) acc += zr[static_cast<size_t>(r)] * cur.get(x + i, y - (r - i));
                }
                next.at(x, y) = acc;
            }
        cur = std::move(next);
    }
    out.rhs_estimate = kahan_total(contributions);
    double lhs = to_double(out.lhs_exact);
    out.deficit = std::abs(out.rhs_estimate - lhs) / std::max(std::abs(lhs), 1e-12);
    return out;
}

double limit_density_g(double x, double y) {
    if (x < 0 || y < 0) return 0.0;
    return 1.0 / std::sqrt(3.0 * kPi) * x * y * (x + y) * std::exp(-(x * x + y * y + x * y) / 3.0);
}

double limit_density_g0() {
    double s = std::sqrt(6.0) / 2.0;
    return limit_density_g(s, s);
}

} // namespace tandem
