#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tandem/bipolar.hpp"

using namespace tandem;

TEST_CASE("unit orientation") {
    Bipolar o = unit_orientation();
    CHECK(o.live_vertex_count() == 2);
    CHECK(o.live_edge_count() == 1);
    CHECK(o.edges[0].kind == EdgeKind::Plain);
    CHECK(signature(o) == WalkBoundaryStats{0, 0, 0, 0});
    CHECK(validate(o).ok);
    CHECK(face_census(o).inner_faces.empty());
    CHECK(face_census(o).outer_degree == 2);
}

TEST_CASE("constructed violations are reported") {
    Bipolar o = unit_orientation();
    o.edges[0].a_is_tail = false; // reverse the edge, poles unchanged
    auto rep = validate(o);
    CHECK_FALSE(rep.ok);
    CHECK(rep.message.find("source mismatch") != std::string::npos);

    Bipolar p = unit_orientation();
    p.vr = p.S;
    CHECK_FALSE(validate(p).ok);

    Bipolar q = unit_orientation();
    q.rot[0].clear(); // dangling end
    CHECK_FALSE(validate(q).ok);
}

TEST_CASE("involutions fix the unit orientation") {
    Bipolar o = unit_orientation();
    CHECK(equal_orientations(rho(o), o));
    CHECK(equal_orientations(sigma(o), o));
    CHECK(validate(rho(o)).ok);
    CHECK(validate(sigma(o)).ok);
}

TEST_CASE("json round trip and dot export") {
    Bipolar o = unit_orientation();
    Bipolar back = bipolar_from_json(bipolar_to_json(o));
    CHECK(equal_orientations(o, back));
    CHECK(validate(back).ok);
    std::string dot = bipolar_to_dot(o);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
}
