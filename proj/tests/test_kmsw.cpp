#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "tandem/kmsw.hpp"
#include "tandem/oracle.hpp"

using namespace tandem;

namespace {

TandemWalk ten_step_walk() {
    TandemWalk w;
    w.steps = {Step::face(1, 0), Step::face(2, 0), Step::face(0, 1), Step::se(),      Step::se(),
               Step::se(),      Step::face(1, 1), Step::face(1, 2), Step::se(),      Step::face(1, 0)};
    return w;
}

long plain_edges(const Bipolar& o) {
    long n = 0;
    for (const auto& e : o.edges)
        if (!e.dead && e.kind == EdgeKind::Plain) ++n;
    return n;
}

// vertices not on the upper-right or lower-left boundary paths
long plain_vertices(const Bipolar& o) {
    auto sig = signature(o);
    auto rb = right_boundary(o);
    auto lb = left_boundary(o);
    std::set<int> non_plain;
    non_plain.insert(o.vr);
    int v = o.S;
    for (size_t k = 0; k < rb.size(); ++k) {
        v = o.head(rb[k]);
        if (static_cast<long>(k) >= sig.c + 1) non_plain.insert(v);
    }
    non_plain.insert(o.S);
    v = o.S;
    for (size_t k = 0; k < lb.size(); ++k) {
        v = o.head(lb[k]);
        if (static_cast<long>(k) < sig.a) non_plain.insert(v);
    }
    return static_cast<long>(o.live_vertex_count()) - static_cast<long>(non_plain.size());
}

std::multiset<int> face_levels(const TandemWalk& w) {
    std::multiset<int> s;
    for (const Step& st : w.steps)
        if (!st.is_se()) s.insert(st.level());
    return s;
}

std::multiset<int> inner_face_levels(const Bipolar& o) {
    std::multiset<int> s;
    for (const auto& f : face_census(o).inner_faces) s.insert(f.degree() - 2);
    return s;
}

long se_count(const TandemWalk& w) {
    long n = 0;
    for (const Step& s : w.steps)
        if (s.is_se()) ++n;
    return n;
}

} // namespace

TEST_CASE("base cases of the bijection") {
    CHECK(equal_orientations(phi(TandemWalk{}), unit_orientation()));
    CHECK(phi_inverse(unit_orientation()).size() == 0);

    // two-step walk, executed by hand against the construction rules
    TandemWalk w{{Step::face(0, 1), Step::se()}};
    Bipolar o = phi(w);
    CHECK(plain_edges(o) == 3);
    CHECK(validate(o).ok);
    CHECK(signature(o) == WalkBoundaryStats{0, 0, 1, 0});
    CHECK(phi_inverse(o) == w);

    Bipolar big = phi(ten_step_walk());
    CHECK(big.live_edge_count() == static_cast<size_t>(10) + 1 + signature(big).a + signature(big).d);
    CHECK(plain_edges(big) == 11);
    CHECK(validate(big).ok);
    CHECK(signature(big) == WalkBoundaryStats{3, 2, 1, 2});
    CHECK(plain_vertices(big) == se_count(ten_step_walk()));
    CHECK(phi_inverse(big) == ten_step_walk());
}

TEST_CASE("exhaustive dictionary and round trip, short walks") {
    WeightSpec unit3 = WeightSpec::unit(3);
    std::set<std::vector<long long>> keys;
    long total = 0;
    for (long n = 0; n <= 4; ++n) {
        exhaustive_walks(unit3, n, {0, 0}, Region::None, [&](const TandemWalk& w) {
            ++total;
            Bipolar o = phi(w);
            auto rep = validate(o);
            REQUIRE(rep.ok);
            CHECK(plain_edges(o) == static_cast<long>(n) + 1);
            CHECK(plain_vertices(o) == se_count(w));
            CHECK(inner_face_levels(o) == face_levels(w));
            WalkBoundaryStats st = walk_stats(w);
            CHECK(signature(o) == st);
            CHECK(phi_inverse(o) == w);
            keys.insert(canonical_key(o));
        });
    }
    CHECK(static_cast<long>(keys.size()) == total); // injectivity
}

TEST_CASE("randomized round trip") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 300; ++trial) {
        TandemWalk w;
        int len = 1 + static_cast<int>(rng() % 30);
        for (int k = 0; k < len; ++k) {
            if (rng() % 3 == 0)
                w.steps.push_back(Step::se());
            else
                w.steps.push_back(Step::face(static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)));
        }
        Bipolar o = phi(w);
        REQUIRE(validate(o).ok);
        CHECK(phi_inverse(o) == w);
    }
}

TEST_CASE("excursion bijection with bipolar orientations") {
    // length-4 excursions, all levels: the six three-edge orientations
    WeightSpec unit3 = WeightSpec::unit(3);
    std::set<std::vector<long long>> images;
    long count = 0;
    exhaustive_walks(unit3, 4, {0, 0}, Region::Quadrant, [&](const TandemWalk& w) {
        auto pts = walk_points(w, {0, 0});
        if (pts.back() != std::make_pair(0L, 0L)) return;
        ++count;
        Bipolar o = excursion_to_bipolar(w);
        CHECK(o.live_edge_count() == 3);
        CHECK(validate(o).ok);
        images.insert(canonical_key(o));
        CHECK(bipolar_to_excursion(o) == w);
    });
    CHECK(count == 6);
    CHECK(images.size() == 6);

    // single length-3 excursion in the pure level-1 model
    WeightSpec p1(1, {Rat(0), Rat(1)});
    long count3 = 0;
    exhaustive_walks(p1, 3, {0, 0}, Region::Quadrant, [&](const TandemWalk& w) {
        auto pts = walk_points(w, {0, 0});
        if (pts.back() != std::make_pair(0L, 0L)) return;
        ++count3;
        Bipolar o = excursion_to_bipolar(w);
        CHECK(o.live_edge_count() == 2);
        CHECK(bipolar_to_excursion(o) == w);
    });
    CHECK(count3 == 1);

    CHECK_THROWS(excursion_to_bipolar(TandemWalk{}));
    CHECK_THROWS(excursion_to_bipolar(TandemWalk{{Step::se()}}));
}

TEST_CASE("walk-level involutions") {
    TandemWalk w{{Step::face(1, 2), Step::se()}};
    TandemWalk expected{{Step::se(), Step::face(2, 1)}};
    CHECK(rho_on_walks(w) == expected);
    CHECK(rho_on_walks(rho_on_walks(ten_step_walk())) == ten_step_walk());

    auto st = walk_stats(ten_step_walk());
    TandemWalk sw = sigma_on_walks(ten_step_walk());
    auto sst = walk_stats(sw);
    CHECK(sst == WalkBoundaryStats{st.d, st.b, st.c, st.a});
    CHECK(sigma_on_walks(sw) == ten_step_walk());
    CHECK(sw.size() == ten_step_walk().size());
    CHECK(se_count(sw) == se_count(ten_step_walk()));
    CHECK(face_levels(sw) == face_levels(ten_step_walk()));
    // the image lives in the upper half-plane family: start (0,b), end at y = a
    CHECK(is_confined(sw, {0, st.b}, Region::UpperHalfPlane));
    auto pts = walk_points(sw, {0, st.b});
    CHECK(pts.back().second == st.a);
}

TEST_CASE("involution identities on orientations, exhaustive short walks") {
    WeightSpec unit2 = WeightSpec::unit(2);
    for (long n = 0; n <= 4; ++n) {
        exhaustive_walks(unit2, n, {0, 0}, Region::None, [&](const TandemWalk& w) {
            Bipolar o = phi(w);
            Bipolar r = rho(o), s = sigma(o);
            REQUIRE(validate(r).ok);
            REQUIRE(validate(s).ok);
            auto sig = signature(o);
            CHECK(signature(r) == WalkBoundaryStats{sig.d, sig.c, sig.b, sig.a});
            CHECK(signature(s) == WalkBoundaryStats{sig.d, sig.b, sig.c, sig.a});
            CHECK(equal_orientations(rho(r), o));
            CHECK(equal_orientations(sigma(s), o));
            CHECK(equal_orientations(rho(s), sigma(r)));
            // plain edge count is preserved and the face census is unchanged by rho
            CHECK(face_census(r).degree_counts() == face_census(o).degree_counts());
            CHECK(face_census(s).degree_counts() == face_census(o).degree_counts());
            // rho commutes with the walk-level reversal
            CHECK(equal_orientations(phi(rho_on_walks(w)), r));
        });
    }
}
