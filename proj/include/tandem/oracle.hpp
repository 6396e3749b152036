#ifndef TANDEM_ORACLE_HPP
#define TANDEM_ORACLE_HPP

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tandem/steps.hpp"

namespace tandem {

struct CountQuery {
    WeightSpec spec;
    std::pair<long, long> start{0, 0};
    std::optional<std::pair<long, long>> end; // nullopt = any endpoint
    long n = 0;
    Region region = Region::Quadrant;
};

// Sum over confined n-step walks of the product of step weights. Exact.
Rat count_walks(const CountQuery& q);

// DP tables for all lengths 0..n: table[m] maps endpoint -> weighted count.
// Grid keys are (x,y) pairs; only nonzero cells are stored.
using EndpointTable = std::map<std::pair<long, long>, Rat>;
std::vector<EndpointTable> count_walks_tables(const WeightSpec& spec, std::pair<long, long> start, long n,
                                              Region region);

// Weighted counts refined by the number of face steps: result[k] is the
// weight of walks with exactly k face steps (levels still weighted by z_r).
std::vector<Rat> count_walks_by_face_steps(const CountQuery& q);

// Weighted counts refined by the full level profile (n_0,...,n_p).
// Guarded to n <= 14.
std::map<std::vector<unsigned>, Rat> count_walks_refined(const CountQuery& q);

// Marked orientations of the given signature with n plain edges, counted by
// the inclusion-exclusion over quadrant walk counts of length n-1 (terms
// with a negative index are zero).
Rat count_marked(const WeightSpec& spec, const WalkBoundaryStats& sig, long n);
// Same refined by number of inner faces (= face steps).
std::vector<Rat> count_marked_by_faces(const WeightSpec& spec, const WalkBoundaryStats& sig, long n);

// Probability that a z-distributed random tandem walk started at `start`
// stays in the quadrant strictly longer than n steps. Exact rational.
Rat survival_probability(const StepDistribution& dist, std::pair<long, long> start, long n);

// Every confined walk of length exactly n, enumerated once. Guard n <= 10.
void exhaustive_walks(const WeightSpec& spec, long n, std::pair<long, long> start, Region region,
                      const std::function<void(const TandemWalk&)>& visit);

// Walks in the upper half-plane from (0,b) to final ordinate a that touch
// the x-axis at least once, by length 0..n (unit-x; weighted by spec).
std::vector<Rat> halfplane_touch_counts(const WeightSpec& spec, long b, long a, long n);

// Double-tandem walks (steps N,W,SE and E,S,NW) confined to the quadrant,
// touching both axes, from (a,b) to (c,d), with l steps of the first kind
// and m of the second; computed by reflection + inclusion-exclusion.
BigInt double_tandem_count(long a, long b, long c, long d, long l, long m);
BigInt double_tandem_count_free(long a, long b, long c, long d, long l, long m); // no touch constraint
bool double_tandem_symmetry_check(long a, long b, long c, long d, long l, long m);

} // namespace tandem

#endif
