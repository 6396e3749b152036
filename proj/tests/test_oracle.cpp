#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tandem/oracle.hpp"

using namespace tandem;

namespace {

CountQuery quadrant_query(const WeightSpec& spec, long ax, long ay, long bx, long by, long n) {
    CountQuery q;
    q.spec = spec;
    q.start = {ax, ay};
    q.end = std::make_pair(bx, by);
    q.n = n;
    q.region = Region::Quadrant;
    return q;
}

} // namespace

TEST_CASE("excursion counts match the printed small cases") {
    CHECK(count_walks(quadrant_query(WeightSpec::unit(3), 0, 0, 0, 0, 4)) == 6);
    WeightSpec p1(1, {Rat(0), Rat(1)});
    CHECK(count_walks(quadrant_query(p1, 0, 0, 0, 0, 6)) == 5);
    WeightSpec p2(2, {Rat(0), Rat(0), Rat(1)});
    CHECK(count_walks(quadrant_query(p2, 0, 0, 0, 0, 4)) == 1);
    CHECK(count_walks(quadrant_query(p2, 0, 0, 0, 0, 2)) == 0);
}

TEST_CASE("unrestricted total equals the step weight power") {
    WeightSpec spec(2, {frac(1, 2), frac(1, 3), frac(1, 5)}, frac(2, 7));
    CountQuery q;
    q.spec = spec;
    q.start = {0, 0};
    q.n = 5;
    q.region = Region::None;
    Rat total = spec.total_step_weight();
    Rat expect = total * total * total * total * total;
    CHECK(count_walks(q) == expect);
}

TEST_CASE("region monotonicity, refined by level profile") {
    WeightSpec spec = WeightSpec::unit(2);
    for (long n = 1; n <= 5; ++n) {
        CountQuery q;
        q.spec = spec;
        q.start = {1, 1};
        q.n = n;
        q.region = Region::Quadrant;
        auto quad = count_walks_refined(q);
        q.region = Region::UpperHalfPlane;
        auto half = count_walks_refined(q);
        q.region = Region::None;
        auto none = count_walks_refined(q);
        for (const auto& [prof, cnt] : quad) {
            CHECK(cnt <= half[prof]);
        }
        for (const auto& [prof, cnt] : half) {
            CHECK(cnt <= none[prof]);
        }
    }
}

TEST_CASE("marked counts: boundary cases and the ten-step monomial") {
    WeightSpec unit3 = WeightSpec::unit(3);
    // signature (0,0,0,0) reduces to excursions
    for (long n = 2; n <= 6; ++n) {
        Rat direct = count_walks(quadrant_query(unit3, 0, 0, 0, 0, n - 1));
        CHECK(count_marked(unit3, WalkBoundaryStats{0, 0, 0, 0}, n) == direct);
    }
    // refined inclusion-exclusion at signature (3,2;1,2), 10 plain edges... the
    // monomial z1^3 z2^2 z3 appears with positive coefficient (11 plain edges
    // means 10 steps)
    auto refined_term = [&](long a, long b, long c, long d) {
        std::map<std::vector<unsigned>, Rat> out;
        if (a < 0 || b < 0 || c < 0 || d < 0) return out;
        CountQuery q = quadrant_query(unit3, a, b, c, d, 10);
        return count_walks_refined(q);
    };
    std::vector<unsigned> profile{0, 3, 2, 1};
    Rat coeff = 0;
    auto add = [&](long a, long b, long c, long d, int s) {
        auto t = refined_term(a, b, c, d);
        auto it = t.find(profile);
        if (it != t.end()) coeff += Rat(s) * it->second;
    };
    add(3, 2, 1, 2, +1);
    add(3, 1, 1, 1, -1);
    add(2, 2, 0, 2, -1);
    add(2, 1, 0, 1, +1);
    CHECK(coeff >= 1);
}

TEST_CASE("marked counts agree with exhaustive enumeration by signature") {
    WeightSpec unit2 = WeightSpec::unit(2);
    for (long n = 1; n <= 4; ++n) {
        std::map<std::tuple<long, long, long, long>, long> buckets;
        exhaustive_walks(unit2, n, {0, 0}, Region::None, [&](const TandemWalk& w) {
            auto st = walk_stats(w);
            buckets[{st.a, st.b, st.c, st.d}]++;
        });
        for (const auto& [sig, cnt] : buckets) {
            auto [a, b, c, d] = sig;
            CHECK(count_marked(unit2, WalkBoundaryStats{a, b, c, d}, n + 1) == cnt);
        }
    }
}

TEST_CASE("survival probabilities") {
    StepDistribution p1(1, frac(1, 3), {Rat(0), frac(1, 3)});
    REQUIRE(p1.normalized());
    CHECK(survival_probability(p1, {0, 0}, 0) == 1);
    CHECK(survival_probability(p1, {0, 0}, 1) == frac(1, 3));
    // cross-check against unit-weight counts at length 3
    WeightSpec w1(1, {Rat(0), Rat(1)});
    CountQuery q;
    q.spec = w1;
    q.start = {0, 0};
    q.n = 3;
    q.region = Region::Quadrant;
    CHECK(survival_probability(p1, {0, 0}, 3) == count_walks(q) / 27);
    StepDistribution bad(1, frac(1, 2), {Rat(0), frac(1, 3)});
    CHECK_THROWS(survival_probability(bad, {0, 0}, 1));
}

TEST_CASE("exhaustive enumeration") {
    WeightSpec p1(1, {Rat(0), Rat(1)});
    long count = 0;
    exhaustive_walks(p1, 0, {0, 0}, Region::Quadrant, [&](const TandemWalk& w) {
        ++count;
        CHECK(w.size() == 0);
    });
    CHECK(count == 1);
    std::vector<TandemWalk> excursions;
    exhaustive_walks(p1, 3, {0, 0}, Region::Quadrant, [&](const TandemWalk& w) {
        auto pts = walk_points(w, {0, 0});
        if (pts.back() == std::make_pair(0L, 0L)) excursions.push_back(w);
    });
    REQUIRE(excursions.size() == 1);
    CHECK(excursions[0] == TandemWalk{{Step::face(0, 1), Step::se(), Step::face(1, 0)}});
    // stream length equals the weighted count with unit weights
    WeightSpec unit2 = WeightSpec::unit(2);
    for (long n = 0; n <= 5; ++n) {
        long streamed = 0;
        exhaustive_walks(unit2, n, {0, 0}, Region::Quadrant, [&](const TandemWalk&) { ++streamed; });
        CountQuery q;
        q.spec = unit2;
        q.start = {0, 0};
        q.n = n;
        q.region = Region::Quadrant;
        CHECK(Rat(streamed) == count_walks(q));
    }
    CHECK_THROWS(exhaustive_walks(p1, 11, {0, 0}, Region::Quadrant, [](const TandemWalk&) {}));
}

TEST_CASE("double tandem reflection counts match a direct DP") {
    // direct DP over the six steps with (l,m) bookkeeping
    auto direct = [](long a, long b, long c, long d, long l, long m) {
        const std::pair<int, int> set1[3] = {{0, 1}, {-1, 0}, {1, -1}};
        const std::pair<int, int> set2[3] = {{1, 0}, {0, -1}, {-1, 1}};
        std::map<std::tuple<long, long, long, long>, BigInt> cur;
        cur[{a, b, 0, 0}] = 1;
        for (long s = 0; s < l + m; ++s) {
            std::map<std::tuple<long, long, long, long>, BigInt> next;
            for (const auto& [key, w] : cur) {
                auto [x, y, used1, used2] = key;
                for (auto [dx, dy] : set1)
                    if (x + dx >= 0 && y + dy >= 0 && used1 < l) next[{x + dx, y + dy, used1 + 1, used2}] += w;
                for (auto [dx, dy] : set2)
                    if (x + dx >= 0 && y + dy >= 0 && used2 < m) next[{x + dx, y + dy, used1, used2 + 1}] += w;
            }
            cur = std::move(next);
        }
        auto it = cur.find({c, d, l, m});
        return it == cur.end() ? BigInt(0) : it->second;
    };
    for (long a = 0; a <= 2; ++a)
        for (long c = 0; c <= 2; ++c)
            for (long l = 0; l <= 3; ++l)
                for (long m = 0; m <= 3; ++m)
                    CHECK(double_tandem_count_free(a, 1, c, 0, l, m) == direct(a, 1, c, 0, l, m));
}

TEST_CASE("double tandem symmetry") {
    for (long l = 0; l + 2 <= 8; ++l)
        for (long m = 0; l + m <= 8; ++m) {
            CHECK(double_tandem_symmetry_check(1, 0, 0, 0, l, m));
            CHECK(double_tandem_symmetry_check(2, 1, 1, 1, l, m));
            CHECK(double_tandem_symmetry_check(1, 1, 1, 1, l, m)); // a = d, trivially symmetric
        }
    // inclusion-exclusion sanity: D >= D-tilde >= 0
    for (long l = 0; l <= 4; ++l)
        for (long m = 0; m <= 4; ++m) {
            BigInt free = double_tandem_count_free(1, 0, 0, 1, l, m);
            BigInt touched = double_tandem_count(1, 0, 0, 1, l, m);
            CHECK(free >= touched);
            CHECK(touched >= 0);
        }
    CHECK_THROWS(double_tandem_symmetry_check(0, 0, 0, 0, 7, 6));
}

TEST_CASE("half-plane touch counts via inclusion-exclusion") {
    WeightSpec p1(1, {Rat(0), Rat(1)});
    // b = 0: every upper-half-plane walk from the origin touches the axis
    auto touch = halfplane_touch_counts(p1, 0, 0, 6);
    auto layers = count_walks_tables(p1, {0, 0}, 6, Region::UpperHalfPlane);
    for (long n = 0; n <= 6; ++n) {
        Rat direct = 0;
        for (const auto& [pos, w] : layers[static_cast<size_t>(n)])
            if (pos.second == 0) direct += w;
        CHECK(touch[static_cast<size_t>(n)] == direct);
    }
    // b = 1, a = 1: subtract the walks that stay strictly above the axis
    auto touch11 = halfplane_touch_counts(p1, 1, 1, 5);
    auto all = count_walks_tables(p1, {0, 1}, 5, Region::UpperHalfPlane);
    auto high = count_walks_tables(p1, {0, 0}, 5, Region::UpperHalfPlane);
    for (long n = 0; n <= 5; ++n) {
        Rat a0 = 0, h0 = 0;
        for (const auto& [pos, w] : all[static_cast<size_t>(n)])
            if (pos.second == 1) a0 += w;
        for (const auto& [pos, w] : high[static_cast<size_t>(n)])
            if (pos.second == 0) h0 += w;
        CHECK(touch11[static_cast<size_t>(n)] == a0 - h0);
    }
}
