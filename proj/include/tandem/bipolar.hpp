#ifndef TANDEM_BIPOLAR_HPP
#define TANDEM_BIPOLAR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tandem/steps.hpp"

namespace tandem {

enum class EdgeKind : uint8_t { Plain, Dashed };

// Rotation-system representation of a marked plane bipolar orientation.
//
// Half-edge ids: h = 2e + side, side 0 at edges[e].a, side 1 at edges[e].b.
// rot[v] lists the half-edge ends at v in counterclockwise order. The linear
// cut of rot[S] is meaningful: rot[S][0] is the bottom edge of the right
// outer boundary, which pins down the outer face.
struct MarkedBipolarOrientation {
    struct Edge {
        int a = 0, b = 0;
        bool a_is_tail = true;
        EdgeKind kind = EdgeKind::Plain;
        bool dead = false;
    };

    std::vector<Edge> edges;
    std::vector<std::vector<int>> rot;
    std::vector<bool> vdead;
    int S = 0, N = 0, vl = 0, vr = 0;

    int vertex_of(int h) const {
        const Edge& e = edges[static_cast<size_t>(h >> 1)];
        return (h & 1) ? e.b : e.a;
    }
    static int twin(int h) { return h ^ 1; }
    bool is_out(int h) const {
        const Edge& e = edges[static_cast<size_t>(h >> 1)];
        return ((h & 1) == 0) == e.a_is_tail;
    }
    int tail(int e) const { return edges[static_cast<size_t>(e)].a_is_tail ? edges[static_cast<size_t>(e)].a : edges[static_cast<size_t>(e)].b; }
    int head(int e) const { return edges[static_cast<size_t>(e)].a_is_tail ? edges[static_cast<size_t>(e)].b : edges[static_cast<size_t>(e)].a; }
    int tail_end(int e) const { return 2 * e + (edges[static_cast<size_t>(e)].a_is_tail ? 0 : 1); }
    int head_end(int e) const { return 2 * e + (edges[static_cast<size_t>(e)].a_is_tail ? 1 : 0); }

    size_t live_edge_count() const;
    size_t live_vertex_count() const;
    int outdeg(int v) const;
    int indeg(int v) const;

    int rot_index(int h) const;              // position of h in rot[vertex_of(h)]
    int rot_next(int h) const;
    int rot_prev(int h) const;
    // Next half-edge of the face lying to the left of h.
    int face_next(int h) const { return rot_prev(twin(h)); }
    int face_prev(int h) const { return twin(rot_next(h)); }

    int new_vertex();
    int new_edge(int tail, int head, EdgeKind kind);
    void erase_edge(int e);
    void erase_vertex(int v);
};

using Bipolar = MarkedBipolarOrientation;

Bipolar unit_orientation();

struct ValidationReport {
    bool ok = true;
    std::string message; // first violated invariant, empty when ok
};

ValidationReport validate(const Bipolar& o);

// Boundary paths as edge id lists, bottom (S) to top (N).
std::vector<int> right_boundary(const Bipolar& o);
std::vector<int> left_boundary(const Bipolar& o);

WalkBoundaryStats signature(const Bipolar& o);

struct FaceInfo {
    int i = 0, j = 0; // type: i+1 clockwise, j+1 counterclockwise edges
    int degree() const { return i + j + 2; }
};

struct FaceCensus {
    std::vector<FaceInfo> inner_faces;
    int outer_degree = 0;
    std::map<int, int> degree_counts() const;
};

FaceCensus face_census(const Bipolar& o);

Bipolar rho(const Bipolar& o);
Bipolar sigma(const Bipolar& o);

// Canonical encoding under root-preserving isomorphism; equal keys iff the
// marked orientations are equal as rooted maps with marks and kinds.
std::vector<long long> canonical_key(const Bipolar& o);
bool equal_orientations(const Bipolar& a, const Bipolar& b);

std::string bipolar_to_json(const Bipolar& o);
Bipolar bipolar_from_json(const std::string& text);
std::string bipolar_to_dot(const Bipolar& o);

} // namespace tandem

#endif
