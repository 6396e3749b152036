#ifndef TANDEM_KMSW_HPP
#define TANDEM_KMSW_HPP

#include "tandem/bipolar.hpp"
#include "tandem/steps.hpp"

namespace tandem {

// Step-by-step construction sending an n-step tandem walk to a marked
// bipolar orientation with n+1 plain edges.
Bipolar phi(const TandemWalk& w);

// Inverse construction; throws std::domain_error on inputs that are not
// valid marked bipolar orientations. Pass validate_input = false only for
// orientations already known to be valid.
TandemWalk phi_inverse(const Bipolar& o, bool validate_input = true);

// Quadrant excursion of length n >= 1 <-> bipolar orientation with n-1
// edges (two outer edges erased). n = 1 corresponds to the single-vertex
// orientation with no edges.
Bipolar excursion_to_bipolar(const TandemWalk& w);
TandemWalk bipolar_to_excursion(const Bipolar& o);

// Reverse the step order and transpose each face step (-i,j) -> (-j,i);
// satisfies phi(rho_on_walks(w)) = rho(phi(w)).
TandemWalk rho_on_walks(const TandemWalk& w);

// phi_inverse(sigma(phi(w))): exchanges stats a and d, preserves b, c,
// length, SE count and the multiset of face-step levels.
TandemWalk sigma_on_walks(const TandemWalk& w);

} // namespace tandem

#endif
