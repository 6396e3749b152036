#include "tandem/kmsw.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace tandem {

namespace {

// Construction state: the orientation plus the right outer boundary split
// into lower (plain, bottom to top) and upper (dashed, bottom to top).
struct PhiState {
    Bipolar o;
    std::deque<int> lower; // edge ids S .. vr
    std::deque<int> upper; // edge ids vr .. N

    int vr_vertex() const { return o.head(lower.back()); }

    void step_se() {
        if (upper.empty()) {
            int old_n = o.N;
            int nn = o.new_vertex();
            int e = o.new_edge(old_n, nn, EdgeKind::Plain);
            auto& r = o.rot[static_cast<size_t>(old_n)];
            r.insert(r.begin(), o.tail_end(e));
            o.rot[static_cast<size_t>(nn)] = {o.head_end(e)};
            o.N = nn;
            o.vr = nn;
            lower.push_back(e);
        } else {
            int e = upper.front();
            upper.pop_front();
            o.edges[static_cast<size_t>(e)].kind = EdgeKind::Plain;
            lower.push_back(e);
            o.vr = o.head(e);
        }
    }

    void step_face(int i, int j) {
        int c = static_cast<int>(lower.size()) - 1;
        int old_vr = vr_vertex();
        int beta;
        if (i <= c) {
            for (int k = 0; k < i + 1; ++k) lower.pop_back();
            beta = lower.empty() ? o.S : o.head(lower.back());
        } else {
            lower.clear();
            // extend a dashed chain below the current source
            int prev = o.S;
            for (int k = 0; k < i - c; ++k) {
                int u = o.new_vertex();
                int e = o.new_edge(u, prev, EdgeKind::Dashed);
                o.rot[static_cast<size_t>(u)] = {o.tail_end(e)};
                o.rot[static_cast<size_t>(prev)].push_back(o.head_end(e));
                prev = u;
            }
            beta = prev;
            o.S = beta;
        }
        // new right boundary of the face: beta -> w_1 -> ... -> w_j -> old_vr
        int from = beta;
        std::vector<int> new_edges;
        for (int k = 0; k < j; ++k) {
            int w = o.new_vertex();
            int e = o.new_edge(from, w, k == 0 ? EdgeKind::Plain : EdgeKind::Dashed);
            new_edges.push_back(e);
            from = w;
        }
        int e_top = o.new_edge(from, old_vr, j == 0 ? EdgeKind::Plain : EdgeKind::Dashed);
        new_edges.push_back(e_top);
        // rotations: tail end of the first new edge is the new rightmost out
        // at beta; each w_k gets [out, in]; old_vr gains a rightmost in.
        auto& rb = o.rot[static_cast<size_t>(beta)];
        rb.insert(rb.begin(), o.tail_end(new_edges[0]));
        for (int k = 0; k < j; ++k) {
            int w = o.head(new_edges[static_cast<size_t>(k)]);
            o.rot[static_cast<size_t>(w)] = {o.tail_end(new_edges[static_cast<size_t>(k) + 1]),
                                             o.head_end(new_edges[static_cast<size_t>(k)])};
        }
        o.rot[static_cast<size_t>(old_vr)].push_back(o.head_end(e_top));

        lower.push_back(new_edges[0]);
        o.vr = o.head(new_edges[0]);
        for (int k = j; k >= 1; --k) upper.push_front(new_edges[static_cast<size_t>(k)]);
    }
};

} // namespace

Bipolar phi(const TandemWalk& w) {
    PhiState st;
    st.o = unit_orientation();
    st.lower = {0};
    for (const Step& s : w.steps) {
        if (s.is_se())
            st.step_se();
        else
            st.step_face(s.i, s.j);
    }
    return st.o;
}

namespace {

// Face orbit through h (face on the left of h).
std::vector<int> face_orbit(const Bipolar& o, int h0) {
    std::vector<int> orbit;
    int h = h0;
    int guard = static_cast<int>(o.edges.size()) * 2 + 4;
    do {
        orbit.push_back(h);
        h = o.face_next(h);
        if (--guard < 0) throw std::domain_error("face_orbit: inconsistent rotations");
    } while (h != h0);
    return orbit;
}

bool orbit_contains(const std::vector<int>& orbit, int h) {
    return std::find(orbit.begin(), orbit.end(), h) != orbit.end();
}

} // namespace

TandemWalk phi_inverse(const Bipolar& input, bool validate_input) {
    if (validate_input) {
        auto rep = validate(input);
        if (!rep.ok) throw std::domain_error("phi_inverse: invalid marked bipolar orientation: " + rep.message);
    }
    Bipolar o = input;
    std::vector<Step> rev;
    int guard = static_cast<int>(o.edges.size()) + 4;
    while (true) {
        if (--guard < 0) throw std::domain_error("phi_inverse: did not reach the unit orientation");
        auto rb = right_boundary(o);
        // locate the boundary edge whose head is vr
        int below = -1;
        {
            int v = o.S;
            for (size_t k = 0; k < rb.size(); ++k) {
                v = o.head(rb[k]);
                if (v == o.vr) {
                    below = static_cast<int>(k);
                    break;
                }
            }
        }
        if (below < 0) throw std::domain_error("phi_inverse: vr not on the right boundary");
        int e = rb[static_cast<size_t>(below)];
        if (o.live_edge_count() == 1) break; // unit orientation
        int root = o.rot[static_cast<size_t>(o.S)].at(0);
        auto outer = face_orbit(o, Bipolar::twin(root));
        int etail = o.tail_end(e);
        if (orbit_contains(outer, etail)) {
            // outer face on the left: undo a pole-pushing SE step
            if (o.vr != o.N || o.head(e) != o.N || o.rot[static_cast<size_t>(o.N)].size() != 1)
                throw std::domain_error("phi_inverse: boundary state does not match any construction step");
            int old_n = o.tail(e);
            int dead_v = o.head(e);
            o.erase_edge(e);
            o.erase_vertex(dead_v);
            o.N = old_n;
            o.vr = old_n;
            rev.push_back(Step::se());
            continue;
        }
        auto f = face_orbit(o, etail);
        // right boundary edges of the face from e upward (tail halves)
        std::vector<int> fright;
        {
            size_t pos = 0;
            while (f[pos] != etail) ++pos;
            size_t sz = f.size();
            // e must be the lowest edge of the face's right boundary
            if (o.is_out(f[(pos + sz - 1) % sz])) {
                // previous orbit element is also an up edge: not the lowest
                o.edges[static_cast<size_t>(e)].kind = EdgeKind::Dashed;
                o.vr = o.tail(e);
                rev.push_back(Step::se());
                continue;
            }
            for (size_t k = 0; k < sz && o.is_out(f[(pos + k) % sz]); ++k) fright.push_back(f[(pos + k) % sz]);
        }
        // the rest of the face's right boundary must be exactly the dashed
        // boundary edges immediately above vr
        bool matches = true;
        for (size_t k = 1; k < fright.size(); ++k) {
            size_t bk = static_cast<size_t>(below) + k;
            if (bk >= rb.size() || rb[bk] != (fright[k] >> 1) ||
                o.edges[static_cast<size_t>(fright[k] >> 1)].kind != EdgeKind::Dashed) {
                matches = false;
                break;
            }
        }
        if (!matches) {
            o.edges[static_cast<size_t>(e)].kind = EdgeKind::Dashed;
            o.vr = o.tail(e);
            rev.push_back(Step::se());
            continue;
        }
        // undo a face step
        int j = static_cast<int>(fright.size()) - 1;
        int top = o.vertex_of(Bipolar::twin(fright.back()));
        std::vector<int> fleft; // head halves, top to bottom
        for (int h : f)
            if (!o.is_out(h)) fleft.push_back(h);
        int i = static_cast<int>(fleft.size()) - 1;
        // dashed trailing chain on the left boundary of the face
        int delta = 0;
        for (int k = static_cast<int>(fleft.size()) - 1; k >= 0; --k) {
            if (o.edges[static_cast<size_t>(fleft[static_cast<size_t>(k)] >> 1)].kind == EdgeKind::Dashed)
                ++delta;
            else
                break;
        }
        // remove the face's right boundary, then its interior white vertices
        std::vector<int> interior;
        for (size_t k = 0; k + 1 < fright.size(); ++k) interior.push_back(o.head(fright[k] >> 1));
        for (int h : fright) o.erase_edge(h >> 1);
        for (int v : interior) o.erase_vertex(v);
        // remove the dashed chain below the old source, restoring it
        if (delta > 0) {
            // fleft is ordered top to bottom; chain edges are the last delta
            int new_source = -1;
            for (int k = 0; k < delta; ++k) {
                int h = fleft[fleft.size() - 1 - static_cast<size_t>(k)]; // bottom-most first
                int ee = h >> 1;
                int tl = o.tail(ee);
                int hd = o.head(ee);
                o.erase_edge(ee);
                o.erase_vertex(tl);
                new_source = hd;
            }
            o.S = new_source;
        }
        o.vr = top;
        rev.push_back(Step::face(i, j));
    }
    TandemWalk w;
    w.steps.assign(rev.rbegin(), rev.rend());
    return w;
}

Bipolar excursion_to_bipolar(const TandemWalk& w) {
    WalkBoundaryStats st = walk_stats(w);
    if (st.a != 0 || st.b != 0 || st.c != 0 || st.d != 0 || !is_confined(w, {0, 0}, Region::Quadrant))
        throw std::domain_error("excursion_to_bipolar: walk is not a quadrant excursion");
    if (w.size() == 0) throw std::domain_error("excursion_to_bipolar: empty walk has no image");
    Bipolar o = phi(w);
    if (w.size() == 1) {
        // two parallel edges around an empty digon; the image is a point
        Bipolar pt;
        int v = pt.new_vertex();
        pt.S = pt.N = pt.vl = pt.vr = v;
        return pt;
    }
    auto rb = right_boundary(o);
    auto lb = left_boundary(o);
    if (rb.size() < 1 || lb.size() < 1 || rb[0] == lb[0])
        throw std::domain_error("excursion_to_bipolar: missing outer digon");
    o.erase_edge(rb[0]);
    o.erase_edge(lb[0]);
    return o;
}

TandemWalk bipolar_to_excursion(const Bipolar& input) {
    if (input.live_edge_count() == 0) {
        if (input.live_vertex_count() != 1)
            throw std::domain_error("bipolar_to_excursion: edgeless input must be a single vertex");
        TandemWalk w;
        w.steps.push_back(Step::face(0, 0));
        return w;
    }
    Bipolar o = input;
    // re-attach the outer digon: a plain edge on each side of the map
    int left = o.new_edge(o.S, o.N, EdgeKind::Plain);
    int right = o.new_edge(o.S, o.N, EdgeKind::Plain);
    auto& rs = o.rot[static_cast<size_t>(o.S)];
    rs.push_back(o.tail_end(left));
    rs.insert(rs.begin(), o.tail_end(right));
    auto& rn = o.rot[static_cast<size_t>(o.N)];
    rn.insert(rn.begin(), o.head_end(left));
    rn.push_back(o.head_end(right));
    o.vl = o.S;
    o.vr = o.N;
    TandemWalk w = phi_inverse(o);
    WalkBoundaryStats st = walk_stats(w);
    if (st.a != 0 || st.b != 0 || st.c != 0 || st.d != 0)
        throw std::domain_error("bipolar_to_excursion: input is not an unmarked bipolar orientation");
    return w;
}

TandemWalk rho_on_walks(const TandemWalk& w) {
    TandemWalk out;
    out.steps.reserve(w.size());
    for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) {
        if (it->is_se())
            out.steps.push_back(Step::se());
        else
            out.steps.push_back(Step::face(it->j, it->i));
    }
    return out;
}

TandemWalk sigma_on_walks(const TandemWalk& w) { return phi_inverse(sigma(phi(w))); }

} // namespace tandem
