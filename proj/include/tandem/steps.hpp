#ifndef TANDEM_STEPS_HPP
#define TANDEM_STEPS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tandem/rat.hpp"

namespace tandem {

// A tandem step: either the SE step (1,-1) or a face step (-i,+j), i,j >= 0.
// The level of a face step is i+j.
struct Step {
    enum class Kind : uint8_t { SE, Face };
    Kind kind = Kind::SE;
    int i = 0; // face steps only
    int j = 0;

    static Step se() { return Step{Kind::SE, 0, 0}; }
    static Step face(int i, int j);

    bool is_se() const { return kind == Kind::SE; }
    int level() const { return is_se() ? -1 : i + j; }

    bool operator==(const Step& o) const = default;
};

std::pair<int, int> step_vector(const Step& s);

struct TandemWalk {
    std::vector<Step> steps;

    size_t size() const { return steps.size(); }
    bool operator==(const TandemWalk& o) const = default;
};

// Per-level weights: SE carries z_se, a face step of level r carries z[r].
struct WeightSpec {
    int p = 0;                // maximal level
    Rat z_se = 1;
    std::vector<Rat> z;       // z[0..p]

    WeightSpec() : z(1, Rat(1)) {}
    WeightSpec(int p_, std::vector<Rat> z_, Rat zse = Rat(1));

    static WeightSpec unit(int p); // all z_r = 1
    Rat weight_of(const Step& s) const;
    Rat total_step_weight() const; // z_se + sum_r (r+1) z_r
};

// Normalized step probabilities: z for SE, z_r[r] for each face step of
// level r, subject to z + sum_r (r+1) z_r[r] = 1.
struct StepDistribution {
    int p = 1;
    Rat z;
    std::vector<Rat> z_r;

    StepDistribution() : z(0), z_r{Rat(0), Rat(0)} {}
    StepDistribution(int p_, Rat z_, std::vector<Rat> zr) : p(p_), z(std::move(z_)), z_r(std::move(zr)) {}

    bool normalized() const;
    bool zero_drift() const; // z == sum_r C(r+1,2) z_r
    WeightSpec as_weights() const { return WeightSpec(p, z_r, z); }

    // z = z_r = 1/3 when p = 1; z = 1/2, z_2 = 1/6 when p = 2 (single top level).
    static StepDistribution uniform_top_level(int p);
};

// (a,b,c,d) with a = x_start - x_min, b = y_start - y_min,
// c = x_end - x_min, d = y_end - y_min; independent of the embedding.
struct WalkBoundaryStats {
    long a = 0, b = 0, c = 0, d = 0;
    bool operator==(const WalkBoundaryStats& o) const = default;
};

WalkBoundaryStats walk_stats(const TandemWalk& w);

enum class Region : uint8_t { Quadrant, UpperHalfPlane, None };

// True iff every point of the walk embedded at `start` stays in the region.
bool is_confined(const TandemWalk& w, std::pair<long, long> start, Region region);

enum class Lattice : uint8_t { Full, EvenSum };

// Periodicity data of the step set with face levels D.
struct Periodicity {
    unsigned iota = 1;     // gcd(r+2, r in D)
    unsigned period = 1;   // iota if odd, iota/2 otherwise
    Lattice lattice = Lattice::Full;

    // Congruence necessary for an n-step walk from (0,0) to (i,j);
    // sufficient only for n large enough.
    bool reachable(long n, long i, long j) const;
};

Periodicity periodicity(const std::vector<unsigned>& levels);

// Levels with nonzero weight in `spec`.
std::vector<unsigned> support_levels(const WeightSpec& spec);

// JSON walk format: {"steps":[["SE"]|["F",i,j],...]}
std::string walk_to_json(const TandemWalk& w);
TandemWalk walk_from_json(const std::string& text);

// Embedded trajectory (start plus one point per step).
std::vector<std::pair<long, long>> walk_points(const TandemWalk& w, std::pair<long, long> start);

std::string walk_to_svg(const TandemWalk& w, std::pair<long, long> start);

} // namespace tandem

#endif
