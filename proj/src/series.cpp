#include "tandem/series.hpp"

#include <sstream>
#include <stdexcept>

namespace tandem {

namespace {

// c_i(x) = sum_{r >= i} z_r xbar^{r-i}: S(x,y) = x/y + sum_i c_i(x) y^i.
std::vector<LaurentPoly> level_coeffs(const WeightSpec& spec, bool with_x) {
    std::vector<LaurentPoly> c(static_cast<size_t>(spec.p) + 1);
    for (int i = 0; i <= spec.p; ++i)
        for (int r = i; r <= spec.p; ++r)
            c[static_cast<size_t>(i)].add_term(with_x ? -(r - i) : 0, 0, spec.z[r]);
    return c;
}

LaurentPoly monomial_inverse(const LaurentPoly& m) {
    if (m.terms().size() != 1) throw std::domain_error("monomial_inverse: not a monomial");
    auto [key, c] = *m.terms().begin();
    return LaurentPoly::monomial(1 / c, -key.first, -key.second);
}

} // namespace

LaurentPoly step_polynomial(const WeightSpec& spec) {
    LaurentPoly s = LaurentPoly::monomial(Rat(1), 1, -1); // x/y
    for (int r = 0; r <= spec.p; ++r)
        for (int i = 0; i <= r; ++i) s.add_term(-(r - i), i, spec.z[r]);
    return s;
}

TSeries y1_series(const WeightSpec& spec, int trunc, bool with_x) {
    auto c = level_coeffs(spec, with_x);
    LaurentPoly xpoly = LaurentPoly::monomial(Rat(1), with_x ? 1 : 0, 0);
    TSeries y = TSeries::zero(trunc);
    for (int it = 0; it < trunc + 1; ++it) {
        // y <- t (x + y * sum_i c_i y^i), Horner in y
        TSeries acc = TSeries::constant(c.back(), trunc);
        for (int i = spec.p - 1; i >= 0; --i) acc = acc * y + TSeries::constant(c[static_cast<size_t>(i)], trunc);
        TSeries next = (TSeries::constant(xpoly, trunc) + y * acc).shifted(1).truncated(trunc);
        y = next.with_min_order(0);
    }
    return y;
}

TSeries w_series(const WeightSpec& spec, int trunc) { return y1_series(spec, trunc, false); }

TSeries y1_fixed_point_residual(const WeightSpec& spec, int trunc) {
    auto c = level_coeffs(spec, true);
    TSeries y = y1_series(spec, trunc, true);
    TSeries acc = TSeries::constant(c.back(), trunc);
    for (int i = spec.p - 1; i >= 0; --i) acc = acc * y + TSeries::constant(c[static_cast<size_t>(i)], trunc);
    TSeries rhs = (TSeries::constant(LaurentPoly::monomial(Rat(1), 1, 0), trunc) + y * acc).shifted(1);
    return (y - rhs).truncated(trunc);
}

namespace {

// 1 - 1/(t x^2) + sum_r z_r (r+1) xbar^{r+2}, as a Laurent series in t.
TSeries corrector_series(const WeightSpec& spec, int trunc) {
    TSeries a(-1, trunc);
    LaurentPoly order0(Rat(1));
    for (int r = 0; r <= spec.p; ++r) order0.add_term(-(r + 2), 0, Rat(r + 1) * spec.z[r]);
    a.set_coeff(0, order0);
    a.set_coeff(-1, LaurentPoly::monomial(Rat(-1), -2, 0));
    return a;
}

TSeries xbar_power_sum(const TSeries& y, long b, int trunc) {
    // Y^b + Y^{b-1} xbar + ... + xbar^b
    TSeries acc = TSeries::zero(trunc);
    TSeries ypow = TSeries::constant(Rat(1), trunc);
    for (long k = 0; k <= b; ++k) {
        acc += ypow.scaled(LaurentPoly::monomial(Rat(1), static_cast<int>(-(b - k)), 0));
        if (k < b) ypow = ypow * y;
    }
    return acc;
}

TSeries take_nonnegative_x(const TSeries& e, const char* who) {
    TSeries pos = e.map([](const LaurentPoly& c) { return c.nonnegative_part(0); });
    for (int n = pos.min_order(); n < 0; ++n)
        if (!pos.coeff(n).is_zero())
            throw std::domain_error(std::string(who) + ": negative power of t survived the x-extraction");
    return pos.with_min_order(0);
}

} // namespace

TSeries q0b_x0(const WeightSpec& spec, long b, int trunc) {
    int m = trunc + 2;
    TSeries y = y1_series(spec, m, true);
    TSeries b0 = y.shifted(-1).scaled(LaurentPoly::monomial(Rat(1), -1, 0)); // Y1/(tx)
    TSeries e = b0 * xbar_power_sum(y, b, m) * corrector_series(spec, m);
    return take_nonnegative_x(e, "q0b_x0").truncated(trunc);
}

TSeries p_d_series(const WeightSpec& spec, long d, int trunc) {
    // Each P_e is a Laurent polynomial in t with orders in [-e, 0], so the
    // window can be re-widened after every shift.
    std::vector<TSeries> p;
    p.push_back(TSeries::constant(Rat(1), trunc));
    for (long e = 0; e < d; ++e) {
        TSeries next = p.back().shifted(-1).scaled(LaurentPoly::monomial(Rat(1), -1, 0)).padded(trunc);
        for (int r = 0; r <= spec.p; ++r) {
            if (spec.z[r] == 0) continue;
            for (int i = 0; i <= r && i <= e; ++i) {
                TSeries term =
                    p[static_cast<size_t>(e - i)].scaled(LaurentPoly::monomial(spec.z[r], -(r - i + 1), 0));
                next -= term;
            }
        }
        p.push_back(next);
    }
    return p.back();
}

TSeries q0b_y_slice(const WeightSpec& spec, long b, long d, int trunc) {
    int m = trunc + static_cast<int>(d) + 2;
    TSeries y = y1_series(spec, m, true);
    TSeries b0 = y.shifted(-1).scaled(LaurentPoly::monomial(Rat(1), -1, 0));
    TSeries e = b0 * xbar_power_sum(y, b, m) * corrector_series(spec, m) * p_d_series(spec, d, m);
    return take_nonnegative_x(e, "q0b_y_slice").truncated(trunc);
}

TSeries q0b_constant_term(const WeightSpec& spec, long b, int trunc) {
    int m = trunc + 2;
    // slots: 0 = x, 1 = z
    LaurentPoly s = step_polynomial(spec);
    LaurentPoly sprime;
    for (const auto& [key, c] : s.terms()) {
        if (key.second == 0) continue;
        sprime.add_term(key.first, key.second - 1, c * Rat(key.second));
    }
    // 1/K(x,z) = sum_n t^n S(x,z)^n
    TSeries kinv(0, m);
    LaurentPoly spow(Rat(1));
    for (int n = 0; n < m; ++n) {
        kinv.set_coeff(n, spow);
        if (n + 1 < m) spow = spow * s;
    }
    LaurentPoly zb; // z^b + z^{b-1} xbar + ... + xbar^b
    for (long k = 0; k <= b; ++k) zb.add_term(static_cast<int>(-(b - k)), static_cast<int>(k), Rat(1));
    LaurentPoly front = LaurentPoly::monomial(Rat(-1), -1, 2) * sprime * zb;
    TSeries e = kinv.scaled(front) * corrector_series(spec, m);
    TSeries z0 = e.map([](const LaurentPoly& c) { return c.slice(1, 0); });
    return take_nonnegative_x(z0, "q0b_constant_term").truncated(trunc);
}

std::vector<Rat> excursion_constant_term_sequence(int p, int trunc) {
    std::vector<Rat> zr(static_cast<size_t>(p) + 1, Rat(0));
    zr[static_cast<size_t>(p)] = 1;
    WeightSpec spec(p, zr);
    TSeries q = q0b_constant_term(spec, 0, trunc);
    std::vector<Rat> out;
    for (int n = 0; n < trunc; ++n) out.push_back(q.coeff(n).coeff(0, 0));
    return out;
}

std::vector<LaurentPoly> a_i_polynomials(const WeightSpec& spec, long a_max) {
    // T(u,W) = sum_{i+k <= p-1} m_{ik} u^{i+1} W^{k+1}, m_{ik} = sum_{r>i+k} z_r
    LaurentPoly t;
    for (int i = 0; i + 1 <= spec.p; ++i)
        for (int k = 0; i + k + 1 <= spec.p; ++k) {
            Rat m = 0;
            for (int r = i + k + 1; r <= spec.p; ++r) m += spec.z[r];
            t.add_term(i + 1, k + 1, m);
        }
    // G = 1/(1-T) truncated to u-degree a_max; T has u-valuation >= 1
    LaurentPoly g(Rat(1));
    LaurentPoly tpow(Rat(1));
    for (long m = 1; m <= a_max; ++m) {
        tpow = tpow * t;
        LaurentPoly trimmed;
        for (const auto& [key, c] : tpow.terms())
            if (key.first <= static_cast<int>(a_max)) trimmed.add_term(key.first, key.second, c);
        tpow = trimmed;
        g += tpow;
    }
    std::vector<LaurentPoly> out;
    for (long i = 0; i <= a_max; ++i) out.push_back(g.slice(0, static_cast<int>(i)));
    return out;
}

namespace {

TSeries eval_poly_in_w(const LaurentPoly& poly, const TSeries& w, int trunc) {
    // poly has W in slot 1 and nothing in slot 0
    int deg = poly.max_exponent(1);
    TSeries acc = TSeries::zero(trunc);
    TSeries wpow = TSeries::constant(Rat(1), trunc);
    for (int k = 0; k <= deg; ++k) {
        Rat c = poly.coeff(0, k);
        if (c != 0) acc += wpow.scaled(LaurentPoly(c));
        if (k < deg) wpow = wpow * w;
    }
    return acc;
}

} // namespace

TSeries q11_series(const WeightSpec& spec, long a, long b, int trunc) {
    int m = trunc + 1;
    TSeries w = w_series(spec, m);
    auto ai = a_i_polynomials(spec, a);
    LaurentPoly sum_a;
    for (const auto& poly : ai) sum_a += poly;
    TSeries sa = eval_poly_in_w(sum_a, w, m);
    TSeries sb = TSeries::zero(m);
    TSeries wpow = TSeries::constant(Rat(1), m);
    for (long j = 0; j <= b; ++j) {
        sb += wpow;
        if (j < b) wpow = wpow * w;
    }
    return (w.shifted(-1) * sa * sb).truncated(trunc).with_min_order(0);
}

TSeries halfplane_gf(const WeightSpec& spec, long a, long b, int trunc) {
    int m = trunc + 1;
    TSeries w = w_series(spec, m);
    auto ai = a_i_polynomials(spec, a);
    TSeries sa = eval_poly_in_w(ai.back(), w, m);
    TSeries res = w.shifted(-1) * sa;
    for (long j = 0; j < b; ++j) res = res * w;
    return res.truncated(trunc).with_min_order(0);
}

OneDWeights oned_tandem_specialization(const WeightSpec& spec, bool with_x) {
    OneDWeights out;
    out.w_m1 = LaurentPoly::monomial(Rat(1), with_x ? 1 : 0, 0);
    out.w.resize(static_cast<size_t>(spec.p) + 1);
    for (int s = 0; s <= spec.p; ++s)
        for (int r = s; r <= spec.p; ++r) out.w[static_cast<size_t>(s)].add_term(with_x ? -(r - s) : 0, 0, spec.z[r]);
    return out;
}

TSeries oned_y_series(const OneDWeights& weights, int trunc) {
    int p = static_cast<int>(weights.w.size()) - 1;
    TSeries y = TSeries::zero(trunc);
    for (int it = 0; it < trunc + 1; ++it) {
        // y <- t (w_{-1} + sum_{s>=0} w_s y^{s+1})
        TSeries acc = TSeries::constant(weights.w.back(), trunc);
        for (int s = p - 1; s >= 0; --s) acc = acc * y + TSeries::constant(weights.w[static_cast<size_t>(s)], trunc);
        y = (TSeries::constant(weights.w_m1, trunc) + y * acc).shifted(1).truncated(trunc).with_min_order(0);
    }
    return y;
}

TSeries oned_h_series(const OneDWeights& weights, long a, int trunc) {
    int p = static_cast<int>(weights.w.size()) - 1;
    ++trunc; // margin for the final division by t
    TSeries y = oned_y_series(weights, trunc);
    LaurentPoly wm1_inv = monomial_inverse(weights.w_m1);
    // M_k = (Y / w_{-1}) * sum_j w_{j+k} Y^j for k >= 1 (u-degree k)
    std::vector<TSeries> mu(static_cast<size_t>(a) + 1, TSeries::zero(trunc));
    for (long k = 1; k <= a; ++k) {
        TSeries acc = TSeries::zero(trunc);
        TSeries ypow = TSeries::constant(Rat(1), trunc);
        for (int j = 0; static_cast<int>(k) + j <= p; ++j) {
            acc += ypow.scaled(weights.w[static_cast<size_t>(k + j)]);
            ypow = ypow * y;
        }
        mu[static_cast<size_t>(k)] = y.scaled(wm1_inv) * acc;
    }
    // G[d] = [u^d] 1/(1-M): G[0]=1, G[d] = sum_k M_k G[d-k]
    std::vector<TSeries> g(static_cast<size_t>(a) + 1, TSeries::zero(trunc));
    g[0] = TSeries::constant(Rat(1), trunc);
    for (long d = 1; d <= a; ++d) {
        TSeries acc = TSeries::zero(trunc);
        for (long k = 1; k <= d; ++k) acc += mu[static_cast<size_t>(k)] * g[static_cast<size_t>(d - k)];
        g[static_cast<size_t>(d)] = acc;
    }
    return (y.shifted(-1).scaled(wm1_inv) * g[static_cast<size_t>(a)]).truncated(trunc - 1).with_min_order(0);
}

TSeries oned_lk_constant_term(const OneDWeights& weights, long k, int trunc) {
    int p = static_cast<int>(weights.w.size()) - 1;
    // slots: 0 = x (carried by the weights), 1 = y
    LaurentPoly s = weights.w_m1.shifted(0, -1);
    for (int i = 0; i <= p; ++i) s += weights.w[static_cast<size_t>(i)].shifted(0, i);
    LaurentPoly sprime;
    for (const auto& [key, c] : s.terms()) {
        if (key.second == 0) continue;
        sprime.add_term(key.first, key.second - 1, c * Rat(key.second));
    }
    TSeries kinv(0, trunc);
    LaurentPoly spow(Rat(1));
    for (int n = 0; n < trunc; ++n) {
        kinv.set_coeff(n, spow);
        if (n + 1 < trunc) spow = spow * s;
    }
    TSeries e = kinv.scaled(sprime.shifted(0, static_cast<int>(k) + 1)).shifted(1);
    TSeries y0 = e.map([](const LaurentPoly& c) { return c.slice(1, 0); });
    return y0.scaled(LaurentPoly(Rat(-1))).truncated(trunc).with_min_order(0);
}

OneDReport oned_identities(const OneDWeights& weights, int trunc, long k_max, long a_max) {
    OneDReport rep;
    std::ostringstream detail;
    int p = static_cast<int>(weights.w.size()) - 1;
    TSeries y = oned_y_series(weights, trunc);

    // direct DP for nonnegative walks 0 -> a (heights 0..p*trunc)
    long hmax = static_cast<long>(p) * trunc + 2;
    std::vector<std::vector<LaurentPoly>> dp(
        static_cast<size_t>(trunc), std::vector<LaurentPoly>(static_cast<size_t>(hmax) + 1));
    dp[0][0] = LaurentPoly(Rat(1));
    for (int n = 0; n + 1 < trunc; ++n)
        for (long h = 0; h <= hmax; ++h) {
            if (dp[static_cast<size_t>(n)][static_cast<size_t>(h)].is_zero()) continue;
            const LaurentPoly& cur = dp[static_cast<size_t>(n)][static_cast<size_t>(h)];
            if (h > 0) dp[static_cast<size_t>(n + 1)][static_cast<size_t>(h - 1)] += cur * weights.w_m1;
            for (int s = 0; s <= p; ++s)
                if (h + s <= hmax) dp[static_cast<size_t>(n + 1)][static_cast<size_t>(h + s)] += cur * weights.w[static_cast<size_t>(s)];
        }
    for (long a = 0; a <= a_max && rep.ok; ++a) {
        TSeries ha = oned_h_series(weights, a, trunc);
        for (int n = 0; n < trunc && rep.ok; ++n) {
            if (!(ha.coeff(n) == dp[static_cast<size_t>(n)][static_cast<size_t>(a)])) {
                rep.ok = false;
                detail << "H_" << a << " mismatch at t^" << n;
            }
        }
    }
    // the constant-term expression for L_k requires k >= 1
    for (long k = 1; k <= k_max && rep.ok; ++k) {
        TSeries lhs = pow(y, static_cast<unsigned>(k)).truncated(trunc);
        TSeries rhs = oned_lk_constant_term(weights, k, trunc);
        for (int n = 0; n < trunc && rep.ok; ++n) {
            if (!(lhs.coeff(n) == rhs.coeff(n))) {
                rep.ok = false;
                detail << "L_" << k << " constant-term mismatch at t^" << n;
            }
        }
    }
    if (rep.ok) detail << "1d identities hold to t^" << (trunc - 1);
    rep.detail = detail.str();
    return rep;
}

namespace {

// power series inverse of a polynomial with nonzero constant term
std::vector<Rat> poly_inverse(const std::vector<Rat>& poly, int order) {
    std::vector<Rat> inv(static_cast<size_t>(order) + 1, Rat(0));
    Rat c0 = poly.at(0);
    if (c0 == 0) throw std::domain_error("poly_inverse: zero constant term");
    inv[0] = 1 / c0;
    for (int n = 1; n <= order; ++n) {
        Rat acc = 0;
        for (int k = 1; k <= n && k < static_cast<int>(poly.size()); ++k)
            acc += poly[static_cast<size_t>(k)] * inv[static_cast<size_t>(n - k)];
        inv[static_cast<size_t>(n)] = -acc / c0;
    }
    return inv;
}

} // namespace

std::vector<Rat> invariant_identity_residual(const StepDistribution& dist, int order_u) {
    if (!dist.normalized() || !dist.zero_drift())
        throw std::invalid_argument("invariant_identity_residual: need a normalized zero-drift distribution");
    int p = dist.p;
    // Lambda(u) = sum_{k<p} u^k sum_{r>k} z_r C(r-k+1,2)
    std::vector<Rat> lambda(static_cast<size_t>(std::max(p, 1)), Rat(0));
    for (int k = 0; k < p; ++k)
        for (int r = k + 1; r <= p; ++r)
            lambda[static_cast<size_t>(k)] += dist.z_r[static_cast<size_t>(r)] * Rat((r - k + 1) * (r - k) / 2);
    // (1-u)^3 * Lambda(u)
    std::vector<Rat> cube{Rat(1), Rat(-3), Rat(3), Rat(-1)};
    std::vector<Rat> lhs_poly(lambda.size() + 3, Rat(0));
    for (size_t i = 0; i < cube.size(); ++i)
        for (size_t k = 0; k < lambda.size(); ++k) lhs_poly[i + k] += cube[i] * lambda[k];
    auto lhs_inv = poly_inverse(lhs_poly, order_u);

    // P(u) = u (I0(u) - I0(1)) = z - I0(1) u + u^2 - sum_r z_r u^{r+2}
    Rat i0_at_1 = 1 + dist.z;
    for (int r = 0; r <= p; ++r) i0_at_1 -= dist.z_r[static_cast<size_t>(r)];
    std::vector<Rat> pu(static_cast<size_t>(p) + 3, Rat(0));
    pu[0] = dist.z;
    pu[1] = -i0_at_1;
    pu[2] += 1;
    for (int r = 0; r <= p; ++r) pu[static_cast<size_t>(r) + 2] -= dist.z_r[static_cast<size_t>(r)];
    auto rhs_inv = poly_inverse(pu, order_u);

    // both sides carry a leading factor u; compare shifted expansions
    std::vector<Rat> residual(static_cast<size_t>(order_u) + 1, Rat(0));
    for (int n = 1; n <= order_u; ++n)
        residual[static_cast<size_t>(n)] =
            lhs_inv[static_cast<size_t>(n - 1)] - rhs_inv[static_cast<size_t>(n - 1)];
    return residual;
}

} // namespace tandem
