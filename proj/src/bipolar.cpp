#include "tandem/bipolar.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "vendor_json.hpp"

namespace tandem {

size_t Bipolar::live_edge_count() const {
    size_t n = 0;
    for (const Edge& e : edges)
        if (!e.dead) ++n;
    return n;
}

size_t Bipolar::live_vertex_count() const {
    size_t n = 0;
    for (bool d : vdead)
        if (!d) ++n;
    return n;
}

int Bipolar::outdeg(int v) const {
    int n = 0;
    for (int h : rot[static_cast<size_t>(v)])
        if (is_out(h)) ++n;
    return n;
}

int Bipolar::indeg(int v) const {
    int n = 0;
    for (int h : rot[static_cast<size_t>(v)])
        if (!is_out(h)) ++n;
    return n;
}

int Bipolar::rot_index(int h) const {
    const auto& r = rot[static_cast<size_t>(vertex_of(h))];
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == h) return static_cast<int>(i);
    throw std::logic_error("rot_index: half-edge missing from its rotation");
}

int Bipolar::rot_next(int h) const {
    const auto& r = rot[static_cast<size_t>(vertex_of(h))];
    size_t i = static_cast<size_t>(rot_index(h));
    return r[(i + 1) % r.size()];
}

int Bipolar::rot_prev(int h) const {
    const auto& r = rot[static_cast<size_t>(vertex_of(h))];
    size_t i = static_cast<size_t>(rot_index(h));
    return r[(i + r.size() - 1) % r.size()];
}

int Bipolar::new_vertex() {
    rot.emplace_back();
    vdead.push_back(false);
    return static_cast<int>(rot.size()) - 1;
}

int Bipolar::new_edge(int tail, int head, EdgeKind kind) {
    edges.push_back(Edge{tail, head, true, kind, false});
    return static_cast<int>(edges.size()) - 1;
}

void Bipolar::erase_edge(int e) {
    for (int side = 0; side < 2; ++side) {
        int h = 2 * e + side;
        auto& r = rot[static_cast<size_t>(vertex_of(h))];
        r.erase(std::remove(r.begin(), r.end(), h), r.end());
    }
    edges[static_cast<size_t>(e)].dead = true;
}

void Bipolar::erase_vertex(int v) {
    if (!rot[static_cast<size_t>(v)].empty()) throw std::logic_error("erase_vertex: vertex still has edges");
    vdead[static_cast<size_t>(v)] = true;
}

Bipolar unit_orientation() {
    Bipolar o;
    int s = o.new_vertex();
    int n = o.new_vertex();
    int e = o.new_edge(s, n, EdgeKind::Plain);
    o.rot[static_cast<size_t>(s)] = {2 * e};
    o.rot[static_cast<size_t>(n)] = {2 * e + 1};
    o.S = s;
    o.N = n;
    o.vl = s;
    o.vr = n;
    return o;
}

std::vector<int> right_boundary(const Bipolar& o) {
    // Walk the outer face backwards from twin(root): head-halves of the
    // right outer boundary, bottom to top.
    int root = o.rot[static_cast<size_t>(o.S)].at(0);
    if (!o.is_out(root)) throw std::domain_error("right_boundary: rot[S][0] is not an out-edge");
    std::vector<int> out;
    int h = Bipolar::twin(root);
    int guard = static_cast<int>(o.edges.size()) * 2 + 4;
    while (!o.is_out(h)) {
        out.push_back(h >> 1);
        h = o.face_prev(h);
        if (--guard < 0) throw std::logic_error("right_boundary: inconsistent rotations");
    }
    return out;
}

std::vector<int> left_boundary(const Bipolar& o) {
    int root = o.rot[static_cast<size_t>(o.S)].at(0);
    std::vector<int> out;
    int h = o.face_next(Bipolar::twin(root));
    int guard = static_cast<int>(o.edges.size()) * 2 + 4;
    while (o.is_out(h)) {
        out.push_back(h >> 1);
        h = o.face_next(h);
        if (--guard < 0) throw std::logic_error("left_boundary: inconsistent rotations");
    }
    return out;
}

WalkBoundaryStats signature(const Bipolar& o) {
    auto rb = right_boundary(o);
    auto lb = left_boundary(o);
    WalkBoundaryStats s;
    // left boundary: S ... vl ... N; a = edges below vl
    {
        long pos = -1;
        int v = o.S;
        if (v == o.vl) pos = 0;
        for (size_t k = 0; k < lb.size(); ++k) {
            v = o.head(lb[k]);
            if (v == o.vl && pos < 0) pos = static_cast<long>(k) + 1;
        }
        if (pos < 0) throw std::domain_error("signature: vl is not on the left outer boundary");
        s.a = pos;
        s.b = static_cast<long>(lb.size()) - pos - 1;
    }
    {
        long pos = -1;
        int v = o.S;
        if (v == o.vr) pos = 0;
        for (size_t k = 0; k < rb.size(); ++k) {
            v = o.head(rb[k]);
            if (v == o.vr && pos < 0) pos = static_cast<long>(k) + 1;
        }
        if (pos < 0) throw std::domain_error("signature: vr is not on the right outer boundary");
        s.c = pos - 1;
        s.d = static_cast<long>(rb.size()) - pos;
    }
    return s;
}

namespace {

struct FaceOrbits {
    std::vector<std::vector<int>> orbits;
    int outer_index = -1;
};

FaceOrbits trace_faces(const Bipolar& o) {
    FaceOrbits out;
    std::vector<char> seen(o.edges.size() * 2, 0);
    int outer_start = Bipolar::twin(o.rot[static_cast<size_t>(o.S)].at(0));
    for (size_t e = 0; e < o.edges.size(); ++e) {
        if (o.edges[e].dead) continue;
        for (int side = 0; side < 2; ++side) {
            int h0 = static_cast<int>(2 * e) + side;
            if (seen[static_cast<size_t>(h0)]) continue;
            std::vector<int> orbit;
            int h = h0;
            int guard = static_cast<int>(o.edges.size()) * 2 + 4;
            do {
                orbit.push_back(h);
                seen[static_cast<size_t>(h)] = 1;
                h = o.face_next(h);
                if (--guard < 0) throw std::logic_error("trace_faces: inconsistent rotations");
            } while (h != h0);
            bool is_outer = std::find(orbit.begin(), orbit.end(), outer_start) != orbit.end();
            if (is_outer) out.outer_index = static_cast<int>(out.orbits.size());
            out.orbits.push_back(std::move(orbit));
        }
    }
    return out;
}

} // namespace

std::map<int, int> FaceCensus::degree_counts() const {
    std::map<int, int> m;
    for (const FaceInfo& f : inner_faces) m[f.degree()]++;
    return m;
}

FaceCensus face_census(const Bipolar& o) {
    FaceCensus census;
    auto faces = trace_faces(o);
    for (size_t idx = 0; idx < faces.orbits.size(); ++idx) {
        if (static_cast<int>(idx) == faces.outer_index) {
            census.outer_degree = static_cast<int>(faces.orbits[idx].size());
            continue;
        }
        int up = 0, down = 0;
        for (int h : faces.orbits[idx]) (o.is_out(h) ? up : down)++;
        census.inner_faces.push_back(FaceInfo{down - 1, up - 1});
    }
    return census;
}

namespace {

bool is_acyclic(const Bipolar& o) {
    size_t nv = o.rot.size();
    std::vector<int> indeg(nv, 0);
    for (const auto& e : o.edges)
        if (!e.dead) indeg[static_cast<size_t>(e.a_is_tail ? e.b : e.a)]++;
    std::deque<int> q;
    for (size_t v = 0; v < nv; ++v)
        if (!o.vdead[v] && indeg[v] == 0) q.push_back(static_cast<int>(v));
    size_t done = 0;
    std::vector<std::vector<int>> adj(nv);
    for (size_t e = 0; e < o.edges.size(); ++e)
        if (!o.edges[e].dead) adj[static_cast<size_t>(o.tail(static_cast<int>(e)))].push_back(o.head(static_cast<int>(e)));
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        ++done;
        for (int w : adj[static_cast<size_t>(v)])
            if (--indeg[static_cast<size_t>(w)] == 0) q.push_back(w);
    }
    return done == o.live_vertex_count();
}

} // namespace

ValidationReport validate(const Bipolar& o) {
    auto fail = [](const std::string& m) { return ValidationReport{false, m}; };
    if (o.rot.size() != o.vdead.size()) return fail("structure: vertex arrays out of sync");
    if (o.vdead[static_cast<size_t>(o.S)] || o.vdead[static_cast<size_t>(o.N)] ||
        o.vdead[static_cast<size_t>(o.vl)] || o.vdead[static_cast<size_t>(o.vr)])
        return fail("structure: pole or mark is a dead vertex");

    // rotation lists must contain each live half-edge exactly once, at its vertex
    std::vector<int> where(o.edges.size() * 2, -1);
    for (size_t v = 0; v < o.rot.size(); ++v) {
        if (o.vdead[v] && !o.rot[v].empty()) return fail("structure: dead vertex with edges");
        for (int h : o.rot[v]) {
            if (h < 0 || h >= static_cast<int>(o.edges.size() * 2)) return fail("structure: bad half-edge id");
            if (o.edges[static_cast<size_t>(h >> 1)].dead) return fail("structure: dead edge in rotation");
            if (o.vertex_of(h) != static_cast<int>(v)) return fail("structure: half-edge listed at wrong vertex");
            if (where[static_cast<size_t>(h)] != -1) return fail("structure: duplicated half-edge end");
            where[static_cast<size_t>(h)] = static_cast<int>(v);
        }
    }
    for (size_t e = 0; e < o.edges.size(); ++e) {
        if (o.edges[e].dead) continue;
        if (where[2 * e] < 0 || where[2 * e + 1] < 0) return fail("structure: dangling edge end");
    }
    if (o.live_edge_count() == 0) return fail("structure: empty orientation");

    if (!is_acyclic(o)) return fail("orientation: directed cycle present");
    if (o.indeg(o.S) != 0) return fail("poles: source mismatch");
    if (o.outdeg(o.N) != 0) return fail("poles: sink mismatch");
    for (size_t v = 0; v < o.rot.size(); ++v) {
        if (o.vdead[v]) continue;
        int iv = static_cast<int>(v);
        if (o.indeg(iv) == 0 && iv != o.S) return fail("poles: source mismatch");
        if (o.outdeg(iv) == 0 && iv != o.N) return fail("poles: sink mismatch");
    }
    if (!o.is_out(o.rot[static_cast<size_t>(o.S)].at(0))) return fail("structure: rot[S][0] must leave S");

    // local property: in-edges and out-edges cyclically consecutive
    for (size_t v = 0; v < o.rot.size(); ++v) {
        if (o.vdead[v]) continue;
        const auto& r = o.rot[v];
        if (r.empty()) return fail("structure: isolated vertex");
        int changes = 0;
        for (size_t i = 0; i < r.size(); ++i)
            if (o.is_out(r[i]) != o.is_out(r[(i + 1) % r.size()])) ++changes;
        if (static_cast<int>(v) != o.S && static_cast<int>(v) != o.N && changes != 2)
            return fail("local: in/out blocks not consecutive at a vertex");
        if ((static_cast<int>(v) == o.S || static_cast<int>(v) == o.N) && changes != 0)
            return fail("poles: pole with both in and out edges");
    }

    // boundaries and marks
    std::vector<int> rb, lb;
    try {
        rb = right_boundary(o);
        lb = left_boundary(o);
    } catch (const std::exception& ex) {
        return fail(std::string("boundary: ") + ex.what());
    }
    if (rb.empty() || lb.empty()) return fail("boundary: empty outer boundary");
    if (o.head(rb.back()) != o.N || o.head(lb.back()) != o.N) return fail("boundary: boundaries do not reach N");

    WalkBoundaryStats sig;
    try {
        sig = signature(o);
    } catch (const std::exception& ex) {
        return fail(std::string("marks: ") + ex.what());
    }
    if (o.vr == o.S) return fail("marks: vr equals S");
    if (o.vl == o.N) return fail("marks: vl equals N");

    // dashed edges are exactly upper-right and lower-left boundary edges
    std::set<int> dashed_expected;
    for (size_t k = 0; k < rb.size(); ++k)
        if (static_cast<long>(k) >= sig.c + 1) dashed_expected.insert(rb[k]);
    for (size_t k = 0; k < lb.size(); ++k)
        if (static_cast<long>(k) < sig.a) dashed_expected.insert(lb[k]);
    for (size_t e = 0; e < o.edges.size(); ++e) {
        if (o.edges[e].dead) continue;
        bool dashed = o.edges[e].kind == EdgeKind::Dashed;
        bool expected = dashed_expected.count(static_cast<int>(e)) > 0;
        if (dashed != expected) return fail("kinds: dashed set differs from upper-right plus lower-left");
    }

    // faces: every inner face has nonempty contiguous cw and ccw runs
    auto faces = trace_faces(o);
    if (faces.outer_index < 0) return fail("boundary: outer face not found");
    for (size_t idx = 0; idx < faces.orbits.size(); ++idx) {
        if (static_cast<int>(idx) == faces.outer_index) continue;
        const auto& orbit = faces.orbits[idx];
        int up = 0, down = 0, changes = 0;
        for (size_t i = 0; i < orbit.size(); ++i) {
            (o.is_out(orbit[i]) ? up : down)++;
            if (o.is_out(orbit[i]) != o.is_out(orbit[(i + 1) % orbit.size()])) ++changes;
        }
        if (up == 0 || down == 0) return fail("faces: inner face with empty left or right boundary");
        if (changes != 2) return fail("faces: left/right boundary of a face not contiguous");
    }

    // marked-vertex conditions on the upper-right and lower-left boundaries
    auto& outer = faces.orbits[static_cast<size_t>(faces.outer_index)];
    {
        // right boundary path: vertex at index k is head(rb[k-1]); vr sits at
        // index sig.c + 1; vertices strictly between vr and N follow it
        std::vector<int> path_vertices{o.S};
        for (int e : rb) path_vertices.push_back(o.head(e));
        for (size_t k = static_cast<size_t>(sig.c) + 2; k + 1 < path_vertices.size(); ++k) {
            int u = path_vertices[k];
            if (o.outdeg(u) != 1) return fail("marks: vertex above vr with outdegree != 1");
            int oute = -1;
            for (int h : o.rot[static_cast<size_t>(u)])
                if (o.is_out(h)) oute = h;
            if (std::find(outer.begin(), outer.end(), oute) != outer.end())
                return fail("marks: outgoing edge above vr has the outer face on its left");
        }
    }
    {
        // left boundary: vl sits at index sig.a; strictly-between vertices
        // are at indices 1 .. sig.a - 1
        std::vector<int> path_vertices{o.S};
        for (int e : lb) path_vertices.push_back(o.head(e));
        for (size_t k = 1; k < static_cast<size_t>(sig.a); ++k) {
            int u = path_vertices[k];
            if (o.indeg(u) != 1) return fail("marks: vertex below vl with indegree != 1");
            int ine = -1;
            for (int h : o.rot[static_cast<size_t>(u)])
                if (!o.is_out(h)) ine = h;
            // face on the right of the ingoing edge = face orbit of its head end
            if (std::find(outer.begin(), outer.end(), ine) != outer.end())
                return fail("marks: ingoing edge below vl has the outer face on its right");
        }
    }

    return ValidationReport{};
}

namespace {

void recut_out_block_first(Bipolar& p) {
    for (size_t v = 0; v < p.rot.size(); ++v) {
        auto& r = p.rot[v];
        if (r.size() < 2) continue;
        size_t cut = r.size();
        for (size_t i = 0; i < r.size(); ++i) {
            size_t prev = (i + r.size() - 1) % r.size();
            if (p.is_out(r[i]) && !p.is_out(r[prev])) {
                cut = i;
                break;
            }
        }
        if (cut != r.size() && cut != 0) std::rotate(r.begin(), r.begin() + static_cast<long>(cut), r.end());
    }
}

void rotate_root_to_front(Bipolar& p, int root) {
    auto& r = p.rot[static_cast<size_t>(p.S)];
    auto it = std::find(r.begin(), r.end(), root);
    if (it == r.end()) throw std::logic_error("rotate_root_to_front: designated root missing at the source");
    std::rotate(r.begin(), it, r.end());
}

} // namespace

Bipolar rho(const Bipolar& o) {
    // The new right outer boundary is the old left boundary reversed, so the
    // new source's rotation must start at the reversal of its top edge.
    int new_root = o.head_end(left_boundary(o).back());
    Bipolar p = o;
    for (auto& e : p.edges)
        if (!e.dead) e.a_is_tail = !e.a_is_tail;
    p.S = o.N;
    p.N = o.S;
    p.vl = o.vr;
    p.vr = o.vl;
    // cyclic orders are unchanged by a pure reversal of directions
    recut_out_block_first(p);
    rotate_root_to_front(p, new_root);
    return p;
}

Bipolar sigma(const Bipolar& o) {
    // New source = old vr; the new bottom-right edge is the reversal of the
    // old lower-right top edge.
    auto rb = right_boundary(o);
    auto sig = signature(o);
    int new_root = o.head_end(rb[static_cast<size_t>(sig.c)]);
    Bipolar p = o;
    for (auto& e : p.edges)
        if (!e.dead && e.kind == EdgeKind::Plain) e.a_is_tail = !e.a_is_tail;
    p.S = o.vr;
    p.N = o.vl;
    p.vl = o.N;
    p.vr = o.S;
    for (auto& r : p.rot) std::reverse(r.begin(), r.end()); // mirror
    recut_out_block_first(p);
    rotate_root_to_front(p, new_root);
    return p;
}

std::vector<long long> canonical_key(const Bipolar& o) {
    std::vector<long long> key;
    std::vector<int> vid(o.rot.size(), -1);
    std::vector<int> eid(o.edges.size(), -1);
    std::vector<std::pair<int, int>> order; // (vertex, arrival half-edge end at vertex; -1 for S)
    int next_v = 0, next_e = 0;
    vid[static_cast<size_t>(o.S)] = next_v++;
    order.emplace_back(o.S, -1);
    for (size_t qi = 0; qi < order.size(); ++qi) {
        auto [v, arrival] = order[qi];
        const auto& r = o.rot[static_cast<size_t>(v)];
        size_t start = 0;
        if (arrival >= 0) {
            for (size_t i = 0; i < r.size(); ++i)
                if (r[i] == arrival) start = i;
        }
        key.push_back(-1); // vertex separator
        for (size_t k = 0; k < r.size(); ++k) {
            int h = r[(start + k) % r.size()];
            int e = h >> 1;
            if (eid[static_cast<size_t>(e)] < 0) {
                eid[static_cast<size_t>(e)] = next_e++;
                int w = o.vertex_of(Bipolar::twin(h));
                if (vid[static_cast<size_t>(w)] < 0) {
                    vid[static_cast<size_t>(w)] = next_v++;
                    order.emplace_back(w, Bipolar::twin(h));
                }
            }
            long long code = static_cast<long long>(eid[static_cast<size_t>(e)]) * 4 +
                             (o.is_out(h) ? 1 : 0) * 2 + (o.edges[static_cast<size_t>(e)].kind == EdgeKind::Dashed ? 1 : 0);
            key.push_back(code);
        }
    }
    key.push_back(-2);
    key.push_back(vid[static_cast<size_t>(o.N)]);
    key.push_back(vid[static_cast<size_t>(o.vl)]);
    key.push_back(vid[static_cast<size_t>(o.vr)]);
    return key;
}

bool equal_orientations(const Bipolar& a, const Bipolar& b) { return canonical_key(a) == canonical_key(b); }

std::string bipolar_to_json(const Bipolar& o) {
    // compact live vertices/edges
    std::vector<int> vmap(o.rot.size(), -1), emap(o.edges.size(), -1);
    int nv = 0, ne = 0;
    for (size_t v = 0; v < o.rot.size(); ++v)
        if (!o.vdead[v]) vmap[v] = nv++;
    for (size_t e = 0; e < o.edges.size(); ++e)
        if (!o.edges[e].dead) emap[e] = ne++;
    nlohmann::json j;
    j["vertices"] = nv;
    nlohmann::json edges = nlohmann::json::array();
    for (size_t e = 0; e < o.edges.size(); ++e) {
        if (o.edges[e].dead) continue;
        edges.push_back(nlohmann::json::array(
            {vmap[static_cast<size_t>(o.tail(static_cast<int>(e)))], vmap[static_cast<size_t>(o.head(static_cast<int>(e)))],
             o.edges[e].kind == EdgeKind::Plain ? "plain" : "dashed"}));
    }
    j["edges"] = std::move(edges);
    nlohmann::json rots = nlohmann::json::array();
    for (size_t v = 0; v < o.rot.size(); ++v) {
        if (o.vdead[v]) continue;
        nlohmann::json r = nlohmann::json::array();
        for (int h : o.rot[v]) {
            int e = h >> 1;
            bool at_tail = o.vertex_of(h) == o.tail(e);
            r.push_back(2 * emap[static_cast<size_t>(e)] + (at_tail ? 0 : 1));
        }
        rots.push_back(std::move(r));
    }
    j["rot"] = std::move(rots);
    j["S"] = vmap[static_cast<size_t>(o.S)];
    j["N"] = vmap[static_cast<size_t>(o.N)];
    j["vl"] = vmap[static_cast<size_t>(o.vl)];
    j["vr"] = vmap[static_cast<size_t>(o.vr)];
    return j.dump();
}

Bipolar bipolar_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Bipolar o;
    int nv = j.at("vertices").get<int>();
    for (int v = 0; v < nv; ++v) o.new_vertex();
    for (const auto& e : j.at("edges")) {
        int tail = e.at(0).get<int>(), head = e.at(1).get<int>();
        std::string kind = e.at(2).get<std::string>();
        o.new_edge(tail, head, kind == "plain" ? EdgeKind::Plain : EdgeKind::Dashed);
    }
    const auto& rots = j.at("rot");
    if (static_cast<int>(rots.size()) != nv) throw std::invalid_argument("map JSON: rot size mismatch");
    for (int v = 0; v < nv; ++v) {
        for (const auto& hid : rots.at(static_cast<size_t>(v))) {
            int ext = hid.get<int>();
            int e = ext >> 1;
            bool at_tail = (ext & 1) == 0;
            if (e < 0 || e >= static_cast<int>(o.edges.size())) throw std::invalid_argument("map JSON: bad end id");
            int h = 2 * e + (at_tail == o.edges[static_cast<size_t>(e)].a_is_tail ? 0 : 1);
            if (o.vertex_of(h) != v) throw std::invalid_argument("map JSON: end listed at wrong vertex");
            o.rot[static_cast<size_t>(v)].push_back(h);
        }
    }
    o.S = j.at("S").get<int>();
    o.N = j.at("N").get<int>();
    o.vl = j.at("vl").get<int>();
    o.vr = j.at("vr").get<int>();
    return o;
}

std::string bipolar_to_dot(const Bipolar& o) {
    std::ostringstream dot;
    dot << "digraph bipolar {\n  rankdir=BT;\n";
    for (size_t v = 0; v < o.rot.size(); ++v) {
        if (o.vdead[v]) continue;
        std::string label = "v" + std::to_string(v);
        std::string extra;
        if (static_cast<int>(v) == o.S) extra += " S";
        if (static_cast<int>(v) == o.N) extra += " N";
        if (static_cast<int>(v) == o.vl) extra += " vl";
        if (static_cast<int>(v) == o.vr) extra += " vr";
        dot << "  " << v << " [label=\"" << label << extra << "\"];\n";
    }
    for (size_t e = 0; e < o.edges.size(); ++e) {
        if (o.edges[e].dead) continue;
        dot << "  " << o.tail(static_cast<int>(e)) << " -> " << o.head(static_cast<int>(e));
        if (o.edges[e].kind == EdgeKind::Dashed) dot << " [style=dashed]";
        dot << ";\n";
    }
    dot << "}\n";
    return dot.str();
}

} // namespace tandem
