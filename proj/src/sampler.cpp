#include "tandem/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tandem/closed_forms.hpp"
#include "tandem/kmsw.hpp"
#include "tandem/stochastics.hpp"

namespace tandem {

namespace {

BigInt uniform_below(Rng& rng, const BigInt& bound) {
    if (bound <= 0) throw std::invalid_argument("uniform_below: bound must be positive");
    size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    while (true) {
        BigInt x = 0;
        size_t got = 0;
        while (got < bits) {
            size_t take = std::min<size_t>(32, bits - got);
            uint32_t chunk = static_cast<uint32_t>(rng() >> 16);
            if (take < 32) chunk &= (1u << take) - 1;
            x <<= static_cast<mp_bitcnt_t>(take);
            x += static_cast<unsigned long>(chunk);
            got += take;
        }
        if (x < bound) return x;
    }
}

// Precomputed cumulative table for exact categorical draws.
struct ExactTable {
    std::vector<BigInt> cumulative;
    BigInt total = 0;

    explicit ExactTable(const std::vector<Rat>& weights) {
        BigInt denom = 1;
        for (const Rat& w : weights) denom = lcm(denom, BigInt(w.get_den()));
        for (const Rat& w : weights) {
            total += BigInt(w.get_num()) * div_exact(denom, BigInt(w.get_den()));
            cumulative.push_back(total);
        }
        if (total <= 0) throw std::domain_error("ExactTable: empty support");
    }

    size_t draw(Rng& rng) const {
        BigInt u = uniform_below(rng, total);
        for (size_t i = 0; i < cumulative.size(); ++i)
            if (u < cumulative[i]) return i;
        throw std::logic_error("ExactTable: fell off the cumulative table");
    }
};

size_t draw_exact_bigint(Rng& rng, const std::vector<BigInt>& weights) {
    BigInt total = 0;
    for (const BigInt& w : weights) total += w;
    if (total <= 0) throw std::domain_error("draw_exact_bigint: empty support");
    BigInt u = uniform_below(rng, total);
    BigInt acc = 0;
    for (size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (u < acc) return i;
    }
    throw std::logic_error("draw_exact_bigint: fell off the cumulative table");
}

// Tables for one distribution, shared across repeated samples.
struct HalfplaneTables {
    int p;
    ExactTable marginals;                 // -1, 0, 1, ..., p projections
    std::vector<ExactTable> level_pick;   // level choice given the y-increment

    explicit HalfplaneTables(const StepDistribution& dist)
        : p(dist.p), marginals(make_marginals(dist)) {
        for (int j = 0; j <= p; ++j) {
            std::vector<Rat> levels;
            for (int r = j; r <= p; ++r) levels.push_back(dist.z_r[static_cast<size_t>(r)]);
            level_pick.emplace_back(levels);
        }
    }

    static std::vector<Rat> make_marginals(const StepDistribution& dist) {
        if (dist.z == 0) throw std::domain_error("sample_halfplane: needs a positive SE probability");
        std::vector<Rat> marg{dist.z};
        for (int j = 0; j <= dist.p; ++j) {
            Rat w = 0;
            for (int r = j; r <= dist.p; ++r) w += dist.z_r[static_cast<size_t>(r)];
            marg.push_back(w);
        }
        return marg;
    }
};

TandemWalk sample_halfplane_impl(const HalfplaneTables& tables, long n, Rng& rng) {
    std::vector<int> steps1d(static_cast<size_t>(n) + 1);
    while (true) {
        long sum = 0;
        for (long k = 0; k <= n; ++k) {
            size_t idx = tables.marginals.draw(rng);
            steps1d[static_cast<size_t>(k)] = static_cast<int>(idx) - 1;
            sum += steps1d[static_cast<size_t>(k)];
        }
        if (sum == -1) break;
    }
    // cycle lemma: rotate to start right after the first prefix minimum
    long best = 0, bestpos = -1, prefix = 0;
    for (long k = 0; k <= n; ++k) {
        prefix += steps1d[static_cast<size_t>(k)];
        if (prefix < best) {
            best = prefix;
            bestpos = k;
        }
    }
    std::rotate(steps1d.begin(), steps1d.begin() + (bestpos + 1), steps1d.end());
    if (steps1d.back() != -1) throw std::logic_error("sample_halfplane: cycle shift failed");
    steps1d.pop_back();
    // lift each nonnegative 1D step to a face step, level law z_r conditioned
    // on the y-increment
    TandemWalk w;
    w.steps.reserve(static_cast<size_t>(n));
    for (int s : steps1d) {
        if (s == -1) {
            w.steps.push_back(Step::se());
            continue;
        }
        size_t pick = tables.level_pick[static_cast<size_t>(s)].draw(rng);
        int r = s + static_cast<int>(pick);
        w.steps.push_back(Step::face(r - s, s));
    }
    return w;
}

} // namespace

TandemWalk sample_halfplane(const StepDistribution& dist, long n, uint64_t seed) {
    if (!dist.normalized()) throw std::invalid_argument("sample_halfplane: distribution not normalized");
    Rng rng(seed);
    HalfplaneTables tables(dist);
    return sample_halfplane_impl(tables, n, rng);
}

TandemWalk sample_quadrant(const StepDistribution& dist, long n, uint64_t seed) {
    if (!dist.normalized()) throw std::invalid_argument("sample_quadrant: distribution not normalized");
    Rng rng(seed);
    HalfplaneTables tables(dist);
    TandemWalk h = sample_halfplane_impl(tables, n, rng);
    TandemWalk w = sigma_on_walks(h);
    if (!is_confined(w, {0, 0}, Region::Quadrant))
        throw std::logic_error("sample_quadrant: transported walk left the quadrant");
    return w;
}

namespace {

TandemWalk sample_quadrant_impl(const HalfplaneTables& tables, long n, Rng& rng) {
    TandemWalk h = sample_halfplane_impl(tables, n, rng);
    return sigma_on_walks(h);
}

} // namespace

TandemWalk sample_excursion_p1(long n, uint64_t seed) {
    if (n < 0 || n % 3 != 0) throw std::invalid_argument("sample_excursion_p1: n must be divisible by 3");
    Rng rng(seed);
    TandemWalk w;
    long x = 0, y = 0;
    std::vector<Step> rev;
    for (long k = n; k >= 1; --k) {
        // predecessors one step earlier
        struct Cand {
            Step s;
            long px, py;
        };
        std::vector<Cand> cands;
        cands.push_back({Step::se(), x - 1, y + 1});
        cands.push_back({Step::face(1, 0), x + 1, y});
        cands.push_back({Step::face(0, 1), x, y - 1});
        std::vector<BigInt> weights;
        std::vector<Cand> valid;
        for (const auto& c : cands) {
            if (c.px < 0 || c.py < 0) continue;
            BigInt cnt = exact_p1_endpoint(k - 1, c.px, c.py);
            if (cnt == 0) continue;
            valid.push_back(c);
            weights.push_back(cnt);
        }
        size_t pick = draw_exact_bigint(rng, weights);
        rev.push_back(valid[pick].s);
        x = valid[pick].px;
        y = valid[pick].py;
    }
    if (x != 0 || y != 0) throw std::logic_error("sample_excursion_p1: backward walk did not return to origin");
    w.steps.assign(rev.rbegin(), rev.rend());
    return w;
}

WindowedSample sample_excursion_windowed(const StepDistribution& dist, long n, uint64_t seed) {
    if (!dist.normalized() || !dist.zero_drift())
        throw std::invalid_argument("sample_excursion_windowed: need a normalized zero-drift distribution");
    Rng rng(seed);
    HalfplaneTables tables(dist);
    double sigma = std::sqrt(to_double(drift_and_covariance(dist).sigma2));
    double g0 = limit_density_g0();
    WindowedSample out;
    while (true) {
        TandemWalk w1 = sample_quadrant_impl(tables, n, rng);
        auto pts1 = walk_points(w1, {0, 0});
        long a = pts1.back().first, b = pts1.back().second;
        // bridge: quadrant walk of length 2n whose last visit to (b,a) in
        // [n,2n] becomes the time-reversed tail
        long nprime = -1;
        TandemWalk w2;
        while (nprime < 0) {
            w2 = sample_quadrant_impl(tables, 2 * n, rng);
            auto pts2 = walk_points(w2, {0, 0});
            for (long k = 2 * n; k >= n; --k) {
                if (pts2[static_cast<size_t>(k)] == std::make_pair(b, a)) {
                    nprime = k;
                    break;
                }
            }
            if (nprime < 0) out.w2_retries++;
        }
        TandemWalk w;
        w.steps = w1.steps;
        for (long k = nprime - 1; k >= 0; --k) {
            const Step& s = w2.steps[static_cast<size_t>(k)];
            w.steps.push_back(s.is_se() ? Step::se() : Step::face(s.j, s.i));
        }
        long m = n + nprime;
        double alpha = static_cast<double>(m - n) / static_cast<double>(n);
        double scale = sigma * std::sqrt(alpha * static_cast<double>(n));
        double accept = limit_density_g(static_cast<double>(a) / scale, static_cast<double>(b) / scale) / g0;
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        if (unif(rng) <= accept) {
            out.walk = std::move(w);
            out.m = m;
            return out;
        }
        out.rejections++;
    }
}

} // namespace tandem
