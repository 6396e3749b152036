#ifndef TANDEM_RAT_HPP
#define TANDEM_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tandem {

using BigInt = mpz_class;
using Rat = mpq_class;

// C(n,k) with the lattice-path convention: zero unless 0 <= k <= n.
// n may be negative (gives zero), k is a machine integer.
inline BigInt binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Exact division; throws if the division leaves a remainder.
inline BigInt div_exact(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::domain_error("div_exact: division by zero");
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::domain_error("div_exact: inexact division");
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// mpq_class(n, d) does not reduce; comparisons assume canonical form, so
// every two-argument rational construction must go through here.
inline Rat frac(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// "p/q" or plain integer string; the stable CLI serialization.
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline double to_double(const Rat& q) {
    // mpq -> mpf -> double keeps huge numerators/denominators in range.
    mpf_class f(q, 512);
    return f.get_d();
}

} // namespace tandem

#endif
