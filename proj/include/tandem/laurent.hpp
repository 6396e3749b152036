#ifndef TANDEM_LAURENT_HPP
#define TANDEM_LAURENT_HPP

#include <map>
#include <string>
#include <utility>

#include "tandem/rat.hpp"

namespace tandem {

// Sparse Laurent polynomial in at most two auxiliary variables with exact
// rational coefficients. Which variables the two slots stand for (x, y, z,
// u, v, W) is fixed by the calling context; unused slots keep exponent 0.
class LaurentPoly {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, Rat>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& c) {
        if (c != 0) terms_[{0, 0}] = c;
    }
    static LaurentPoly monomial(const Rat& c, int e1, int e2 = 0) {
        LaurentPoly p;
        if (c != 0) p.terms_[{e1, e2}] = c;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant() const { return coeff(0, 0); }
    Rat coeff(int e1, int e2 = 0) const;

    void add_term(int e1, int e2, const Rat& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly operator-() const;

    LaurentPoly scaled(const Rat& c) const;
    LaurentPoly shifted(int d1, int d2) const; // multiply by v1^d1 v2^d2

    // Keep terms with nonnegative exponent in the given slot.
    LaurentPoly nonnegative_part(int slot) const;
    // Coefficient of v_slot^e, as a Laurent polynomial in the other slot.
    LaurentPoly slice(int slot, int e) const;
    // Substitute v_slot := 1.
    LaurentPoly eval_one(int slot) const;

    int min_exponent(int slot) const; // 0 for the zero polynomial
    int max_exponent(int slot) const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    // Deterministic rendering such as "1 - 2*x^-1*y + x^2" (slot names given).
    std::string to_string(const std::string& v1 = "x", const std::string& v2 = "y") const;

private:
    Terms terms_;
};

} // namespace tandem

#endif
