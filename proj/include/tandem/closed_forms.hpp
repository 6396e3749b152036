#ifndef TANDEM_CLOSED_FORMS_HPP
#define TANDEM_CLOSED_FORMS_HPP

#include <vector>

#include "tandem/rat.hpp"

namespace tandem {

// Bipolar orientations of triangulations of a digon with 2k inner faces:
// a(k) = 2(3k)! / (k!(k+1)!(k+2)!).
BigInt tutte_a(long k);

// Baxter numbers by the binomial sum; b(0) = 1.
BigInt baxter_b(long n);
// Same via the three-term recurrence (n+2)(n+3)b(n) = (7n^2+7n-2)b(n-1) + 8(n-1)(n-2)b(n-2).
std::vector<BigInt> baxter_sequence(long n_max);

// Coefficient sequences of the d-angulation excursion series for p = 1,2,3,
// run from the printed polynomial recurrences with a(0) = 1. Divisions are
// checked exact.
std::vector<BigInt> dangulation_sequence(int p, long k_max);

// 3x3 determinant of binomials counting non-intersecting walk triples.
BigInt lgv_qnk(long n, long k, long a, long b, long c, long d);

// Marked orientations with n+1 plain edges, k inner faces, signature
// (a,b;c,d): four-term inclusion-exclusion over lgv_qnk, with terms having a
// negative argument set to zero.
BigInt marked_qnk_tilde(long n, long k, long a, long b, long c, long d);

// Quadrant walks of length n = 3m+2i+j from the origin to (i,j) when only
// level-1 face steps are allowed; 0 when n is not representable.
BigInt exact_p1_endpoint(long n, long i, long j);

} // namespace tandem

#endif
