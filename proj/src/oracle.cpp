#include "tandem/oracle.hpp"

#include <array>
#include <stdexcept>

namespace tandem {

namespace {

struct WeightedStep {
    Step step;
    Rat weight;
};

std::vector<WeightedStep> enumerate_steps(const WeightSpec& spec) {
    std::vector<WeightedStep> out;
    if (spec.z_se != 0) out.push_back({Step::se(), spec.z_se});
    for (int r = 0; r <= spec.p; ++r) {
        if (spec.z[r] == 0) continue;
        for (int i = 0; i <= r; ++i) out.push_back({Step::face(i, r - i), spec.z[r]});
    }
    return out;
}

bool in_region(long x, long y, Region region) {
    switch (region) {
        case Region::Quadrant: return x >= 0 && y >= 0;
        case Region::UpperHalfPlane: return y >= 0;
        case Region::None: return true;
    }
    return false;
}

} // namespace

std::vector<EndpointTable> count_walks_tables(const WeightSpec& spec, std::pair<long, long> start, long n,
                                              Region region) {
    std::vector<EndpointTable> layers;
    layers.reserve(static_cast<size_t>(n) + 1);
    EndpointTable cur;
    if (in_region(start.first, start.second, region)) cur[start] = Rat(1);
    layers.push_back(cur);
    auto steps = enumerate_steps(spec);
    for (long m = 0; m < n; ++m) {
        EndpointTable next;
        for (const auto& [pos, w] : layers.back()) {
            for (const auto& ws : steps) {
                auto [dx, dy] = step_vector(ws.step);
                long x = pos.first + dx, y = pos.second + dy;
                if (!in_region(x, y, region)) continue;
                next[{x, y}] += w * ws.weight;
            }
        }
        layers.push_back(std::move(next));
    }
    return layers;
}

Rat count_walks(const CountQuery& q) {
    auto layers = count_walks_tables(q.spec, q.start, q.n, q.region);
    const EndpointTable& last = layers.back();
    if (q.end) {
        auto it = last.find(*q.end);
        return it == last.end() ? Rat(0) : it->second;
    }
    Rat total = 0;
    for (const auto& [pos, w] : last) total += w;
    return total;
}

std::vector<Rat> count_walks_by_face_steps(const CountQuery& q) {
    using Key = std::pair<long, long>;
    std::map<Key, std::vector<Rat>> cur;
    if (in_region(q.start.first, q.start.second, q.region)) cur[q.start] = {Rat(1)};
    auto steps = enumerate_steps(q.spec);
    for (long m = 0; m < q.n; ++m) {
        std::map<Key, std::vector<Rat>> next;
        for (const auto& [pos, byk] : cur) {
            for (const auto& ws : steps) {
                auto [dx, dy] = step_vector(ws.step);
                long x = pos.first + dx, y = pos.second + dy;
                if (!in_region(x, y, q.region)) continue;
                int shift = ws.step.is_se() ? 0 : 1;
                auto& tgt = next[{x, y}];
                if (tgt.size() < byk.size() + static_cast<size_t>(shift))
                    tgt.resize(byk.size() + static_cast<size_t>(shift), Rat(0));
                for (size_t k = 0; k < byk.size(); ++k) tgt[k + static_cast<size_t>(shift)] += byk[k] * ws.weight;
            }
        }
        cur = std::move(next);
    }
    std::vector<Rat> out(static_cast<size_t>(q.n) + 1, Rat(0));
    auto fold = [&](const std::vector<Rat>& byk) {
        for (size_t k = 0; k < byk.size(); ++k) out[k] += byk[k];
    };
    if (q.end) {
        auto it = cur.find(*q.end);
        if (it != cur.end()) fold(it->second);
    } else {
        for (const auto& [pos, byk] : cur) fold(byk);
    }
    return out;
}

std::map<std::vector<unsigned>, Rat> count_walks_refined(const CountQuery& q) {
    if (q.n > 14) throw std::invalid_argument("count_walks_refined: n > 14 guard");
    using Pos = std::pair<long, long>;
    using Profile = std::vector<unsigned>;
    std::map<Pos, std::map<Profile, Rat>> cur;
    Profile zero(static_cast<size_t>(q.spec.p) + 1, 0u);
    if (in_region(q.start.first, q.start.second, q.region)) cur[q.start][zero] = Rat(1);
    auto steps = enumerate_steps(q.spec);
    for (long m = 0; m < q.n; ++m) {
        std::map<Pos, std::map<Profile, Rat>> next;
        for (const auto& [pos, table] : cur) {
            for (const auto& ws : steps) {
                auto [dx, dy] = step_vector(ws.step);
                long x = pos.first + dx, y = pos.second + dy;
                if (!in_region(x, y, q.region)) continue;
                auto& tgt = next[{x, y}];
                for (const auto& [prof, w] : table) {
                    Profile np = prof;
                    if (!ws.step.is_se()) np[static_cast<size_t>(ws.step.level())]++;
                    tgt[np] += w * ws.weight;
                }
            }
        }
        cur = std::move(next);
    }
    std::map<Profile, Rat> out;
    auto fold = [&](const std::map<Profile, Rat>& table) {
        for (const auto& [prof, w] : table) out[prof] += w;
    };
    if (q.end) {
        auto it = cur.find(*q.end);
        if (it != cur.end()) fold(it->second);
    } else {
        for (const auto& [pos, table] : cur) fold(table);
    }
    return out;
}

namespace {

Rat quadrant_count_or_zero(const WeightSpec& spec, long a, long b, long c, long d, long n) {
    if (a < 0 || b < 0 || c < 0 || d < 0 || n < 0) return Rat(0);
    CountQuery q;
    q.spec = spec;
    q.start = {a, b};
    q.end = std::make_pair(c, d);
    q.n = n;
    q.region = Region::Quadrant;
    return count_walks(q);
}

} // namespace

Rat count_marked(const WeightSpec& spec, const WalkBoundaryStats& sig, long n) {
    if (n < 1) throw std::invalid_argument("count_marked: n >= 1 required");
    long a = sig.a, b = sig.b, c = sig.c, d = sig.d, m = n - 1;
    return quadrant_count_or_zero(spec, a, b, c, d, m) - quadrant_count_or_zero(spec, a, b - 1, c, d - 1, m) -
           quadrant_count_or_zero(spec, a - 1, b, c - 1, d, m) +
           quadrant_count_or_zero(spec, a - 1, b - 1, c - 1, d - 1, m);
}

std::vector<Rat> count_marked_by_faces(const WeightSpec& spec, const WalkBoundaryStats& sig, long n) {
    if (n < 1) throw std::invalid_argument("count_marked_by_faces: n >= 1 required");
    long m = n - 1;
    std::vector<Rat> out(static_cast<size_t>(m) + 1, Rat(0));
    auto add = [&](long a, long b, long c, long d, int sign) {
        if (a < 0 || b < 0 || c < 0 || d < 0) return;
        CountQuery q;
        q.spec = spec;
        q.start = {a, b};
        q.end = std::make_pair(c, d);
        q.n = m;
        q.region = Region::Quadrant;
        auto byk = count_walks_by_face_steps(q);
        for (size_t k = 0; k < byk.size() && k < out.size(); ++k) out[k] += Rat(sign) * byk[k];
    };
    add(sig.a, sig.b, sig.c, sig.d, +1);
    add(sig.a, sig.b - 1, sig.c, sig.d - 1, -1);
    add(sig.a - 1, sig.b, sig.c - 1, sig.d, -1);
    add(sig.a - 1, sig.b - 1, sig.c - 1, sig.d - 1, +1);
    return out;
}

Rat survival_probability(const StepDistribution& dist, std::pair<long, long> start, long n) {
    if (!dist.normalized()) throw std::invalid_argument("survival_probability: distribution not normalized");
    auto layers = count_walks_tables(dist.as_weights(), start, n, Region::Quadrant);
    Rat total = 0;
    for (const auto& [pos, w] : layers.back()) total += w;
    return total;
}

void exhaustive_walks(const WeightSpec& spec, long n, std::pair<long, long> start, Region region,
                      const std::function<void(const TandemWalk&)>& visit) {
    if (n > 10) throw std::invalid_argument("exhaustive_walks: n > 10 guard");
    auto steps = enumerate_steps(spec);
    TandemWalk w;
    w.steps.reserve(static_cast<size_t>(n));
    std::function<void(long, long, long)> rec = [&](long x, long y, long left) {
        if (left == 0) {
            visit(w);
            return;
        }
        for (const auto& ws : steps) {
            auto [dx, dy] = step_vector(ws.step);
            long nx = x + dx, ny = y + dy;
            if (!in_region(nx, ny, region)) continue;
            w.steps.push_back(ws.step);
            rec(nx, ny, left - 1);
            w.steps.pop_back();
        }
    };
    if (in_region(start.first, start.second, region)) rec(start.first, start.second, n);
}

std::vector<Rat> halfplane_touch_counts(const WeightSpec& spec, long b, long a, long n) {
    auto line_counts = [&](long b0, long a0) {
        std::vector<Rat> res(static_cast<size_t>(n) + 1, Rat(0));
        if (b0 < 0 || a0 < 0) return res;
        auto layers = count_walks_tables(spec, {0, b0}, n, Region::UpperHalfPlane);
        for (long m = 0; m <= n; ++m) {
            Rat acc = 0;
            for (const auto& [pos, w] : layers[static_cast<size_t>(m)])
                if (pos.second == a0) acc += w;
            res[static_cast<size_t>(m)] = acc;
        }
        return res;
    };
    auto all = line_counts(b, a);
    auto high = line_counts(b - 1, a - 1); // walks staying at y >= 1, shifted down
    for (size_t m = 0; m < all.size(); ++m) all[m] -= high[m];
    return all;
}

namespace {

// Displacement table for l i.i.d. steps from a 3-step set.
using DispTable = std::map<std::pair<long, long>, BigInt>;

DispTable free_steps_table(const std::array<std::pair<int, int>, 3>& steps, long l) {
    DispTable cur;
    cur[{0, 0}] = 1;
    for (long m = 0; m < l; ++m) {
        DispTable next;
        for (const auto& [pos, w] : cur)
            for (auto [dx, dy] : steps) next[{pos.first + dx, pos.second + dy}] += w;
        cur = std::move(next);
    }
    return cur;
}

} // namespace

BigInt double_tandem_count_free(long a, long b, long c, long d, long l, long m) {
    if (a < 0 || b < 0 || c < 0 || d < 0) return BigInt(0);
    static const std::array<std::pair<int, int>, 3> set1{{{0, 1}, {-1, 0}, {1, -1}}};  // N, W, SE
    static const std::array<std::pair<int, int>, 3> set2{{{1, 0}, {0, -1}, {-1, 1}}};  // E, S, NW
    DispTable t1 = free_steps_table(set1, l);
    DispTable t2 = free_steps_table(set2, m);
    auto F = [&](long dx, long dy) {
        BigInt acc = 0;
        for (const auto& [p1, w1] : t1) {
            auto it = t2.find({dx - p1.first, dy - p1.second});
            if (it != t2.end()) acc += w1 * it->second;
        }
        return acc;
    };
    // Alternating sum over the order-six reflection orbit of the shifted
    // starting point (a+1, b+1); the two step families interleave freely,
    // which contributes a binomial factor.
    struct Term {
        long e, f;
        int sign;
    };
    const Term terms[6] = {
        {a + 1, b + 1, +1},          {-(a + 1), a + b + 2, -1}, {-(a + b + 2), a + 1, +1},
        {-(b + 1), -(a + 1), -1},    {b + 1, -(a + b + 2), +1}, {a + b + 2, -(b + 1), -1},
    };
    BigInt acc = 0;
    for (const auto& t : terms) acc += BigInt(t.sign) * F(c + 1 - t.e, d + 1 - t.f);
    return acc * binom(l + m, l);
}

BigInt double_tandem_count(long a, long b, long c, long d, long l, long m) {
    return double_tandem_count_free(a, b, c, d, l, m) - double_tandem_count_free(a - 1, b, c - 1, d, l, m) -
           double_tandem_count_free(a, b - 1, c, d - 1, l, m) +
           double_tandem_count_free(a - 1, b - 1, c - 1, d - 1, l, m);
}

bool double_tandem_symmetry_check(long a, long b, long c, long d, long l, long m) {
    if (l + m > 12) throw std::invalid_argument("double_tandem_symmetry_check: l+m > 12 guard");
    return double_tandem_count(a, b, c, d, l, m) == double_tandem_count(d, b, c, a, l, m);
}

} // namespace tandem
