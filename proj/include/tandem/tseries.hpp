#ifndef TANDEM_TSERIES_HPP
#define TANDEM_TSERIES_HPP

#include <functional>
#include <vector>

#include "tandem/laurent.hpp"

namespace tandem {

// Truncated Laurent series in t with LaurentPoly coefficients. Coefficients
// are valid for exponents in [min_order, trunc); arithmetic tracks how far
// the result stays exact and never reads beyond it.
class TSeries {
public:
    TSeries() = default;
    TSeries(int min_order, int trunc) : min_(min_order), trunc_(trunc) {
        if (trunc_ < min_) trunc_ = min_;
        coeffs_.assign(static_cast<size_t>(trunc_ - min_), LaurentPoly());
    }

    static TSeries zero(int trunc) { return TSeries(0, trunc); }
    static TSeries constant(const LaurentPoly& c, int trunc);
    static TSeries constant(const Rat& c, int trunc) { return constant(LaurentPoly(c), trunc); }
    // c * t^k
    static TSeries monomial(const LaurentPoly& c, int k, int trunc);

    int min_order() const { return min_; }
    int trunc() const { return trunc_; }

    // Zero below min_order; throws past the truncation (those coefficients
    // are unknown, and reading them is a bug).
    const LaurentPoly& coeff(int n) const;
    void set_coeff(int n, LaurentPoly c);
    void add_coeff(int n, const LaurentPoly& c);

    // Widen the valid window, padding with zeros. Only sound when the series
    // is known exactly (e.g. a Laurent polynomial in t).
    TSeries padded(int new_trunc) const;

    TSeries& operator+=(const TSeries& o);
    TSeries& operator-=(const TSeries& o);
    friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
    friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
    friend TSeries operator*(const TSeries& a, const TSeries& b);

    TSeries scaled(const LaurentPoly& c) const;
    TSeries shifted(int k) const; // multiply by t^k
    TSeries truncated(int new_trunc) const;
    TSeries map(const std::function<LaurentPoly(const LaurentPoly&)>& f) const;

    // Lowest t-exponent carrying a nonzero coefficient, or trunc() if none.
    int valuation() const;
    bool is_zero() const { return valuation() >= trunc_; }

    // Drop orders below new_min; requires those coefficients to be zero.
    TSeries with_min_order(int new_min) const;

private:
    int min_ = 0;
    int trunc_ = 0;
    std::vector<LaurentPoly> coeffs_;
    static const LaurentPoly zero_poly_;
};

// Power P^k with the same truncation bookkeeping.
TSeries pow(const TSeries& base, unsigned k);

// Multiplicative inverse; requires valuation 0 and a nonzero rational
// constant as the t^0 coefficient.
TSeries inverse_unit(const TSeries& base, int trunc);

} // namespace tandem

#endif
