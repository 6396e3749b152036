#include "tandem/tseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace tandem {

const LaurentPoly TSeries::zero_poly_{};

TSeries TSeries::constant(const LaurentPoly& c, int trunc) {
    TSeries s(0, trunc);
    if (trunc > 0) s.coeffs_[0] = c;
    return s;
}

TSeries TSeries::monomial(const LaurentPoly& c, int k, int trunc) {
    TSeries s(std::min(k, 0), trunc);
    if (k < s.trunc_) s.coeffs_[static_cast<size_t>(k - s.min_)] = c;
    return s;
}

const LaurentPoly& TSeries::coeff(int n) const {
    if (n >= trunc_) throw std::out_of_range("TSeries::coeff beyond the truncation order");
    if (n < min_) return zero_poly_;
    return coeffs_[static_cast<size_t>(n - min_)];
}

void TSeries::set_coeff(int n, LaurentPoly c) {
    if (n < min_ || n >= trunc_) throw std::out_of_range("TSeries::set_coeff outside window");
    coeffs_[static_cast<size_t>(n - min_)] = std::move(c);
}

void TSeries::add_coeff(int n, const LaurentPoly& c) {
    if (c.is_zero()) return;
    if (n >= trunc_) return; // beyond the tracked window
    if (n < min_) throw std::out_of_range("TSeries::add_coeff below min_order");
    coeffs_[static_cast<size_t>(n - min_)] += c;
}

TSeries& TSeries::operator+=(const TSeries& o) {
    int nmin = std::min(min_, o.min_);
    int ntr = std::min(trunc_, o.trunc_);
    TSeries out(nmin, ntr);
    for (int n = nmin; n < ntr; ++n) out.coeffs_[static_cast<size_t>(n - nmin)] = coeff(n) + o.coeff(n);
    return *this = std::move(out);
}

TSeries& TSeries::operator-=(const TSeries& o) {
    int nmin = std::min(min_, o.min_);
    int ntr = std::min(trunc_, o.trunc_);
    TSeries out(nmin, ntr);
    for (int n = nmin; n < ntr; ++n) out.coeffs_[static_cast<size_t>(n - nmin)] = coeff(n) - o.coeff(n);
    return *this = std::move(out);
}

TSeries operator*(const TSeries& a, const TSeries& b) {
    // Smallest unknown exponent of the product.
    int ntr = std::min(a.trunc() + b.min_order(), b.trunc() + a.min_order());
    int nmin = a.min_order() + b.min_order();
    TSeries out(nmin, ntr);
    for (int i = a.min_order(); i < a.trunc(); ++i) {
        const LaurentPoly& ca = a.coeff(i);
        if (ca.is_zero()) continue;
        for (int j = b.min_order(); j < b.trunc(); ++j) {
            if (i + j >= ntr) break;
            const LaurentPoly& cb = b.coeff(j);
            if (cb.is_zero()) continue;
            out.add_coeff(i + j, ca * cb);
        }
    }
    return out;
}

TSeries TSeries::scaled(const LaurentPoly& c) const {
    TSeries out(min_, trunc_);
    for (int n = min_; n < trunc_; ++n) out.set_coeff(n, coeff(n) * c);
    return out;
}

TSeries TSeries::shifted(int k) const {
    TSeries out(min_ + k, trunc_ + k);
    for (int n = min_; n < trunc_; ++n) out.set_coeff(n + k, coeff(n));
    return out;
}

TSeries TSeries::padded(int new_trunc) const {
    if (new_trunc <= trunc_) return truncated(new_trunc);
    TSeries out(min_, new_trunc);
    for (int n = min_; n < trunc_; ++n) out.set_coeff(n, coeff(n));
    return out;
}

TSeries TSeries::truncated(int new_trunc) const {
    TSeries out(min_, std::min(trunc_, new_trunc));
    for (int n = out.min_; n < out.trunc_; ++n) out.set_coeff(n, coeff(n));
    return out;
}

TSeries TSeries::map(const std::function<LaurentPoly(const LaurentPoly&)>& f) const {
    TSeries out(min_, trunc_);
    for (int n = min_; n < trunc_; ++n) out.set_coeff(n, f(coeff(n)));
    return out;
}

int TSeries::valuation() const {
    for (int n = min_; n < trunc_; ++n)
        if (!coeff(n).is_zero()) return n;
    return trunc_;
}

TSeries TSeries::with_min_order(int new_min) const {
    for (int n = min_; n < std::min(new_min, trunc_); ++n)
        if (!coeff(n).is_zero())
            throw std::domain_error("TSeries::with_min_order would drop a nonzero coefficient");
    TSeries out(new_min, trunc_);
    for (int n = std::max(min_, new_min); n < trunc_; ++n) out.set_coeff(n, coeff(n));
    return out;
}

TSeries pow(const TSeries& base, unsigned k) {
    TSeries result = TSeries::constant(Rat(1), base.trunc());
    for (unsigned m = 0; m < k; ++m) result = result * base;
    return result;
}

TSeries inverse_unit(const TSeries& base, int trunc) {
    const LaurentPoly& c0 = base.coeff(0);
    if (base.min_order() > 0 || !c0.is_constant() || c0.constant() == 0)
        throw std::domain_error("inverse_unit: series must start with a nonzero rational constant at t^0");
    for (int n = base.min_order(); n < 0; ++n)
        if (!base.coeff(n).is_zero()) throw std::domain_error("inverse_unit: negative-order terms present");
    Rat inv0 = 1 / c0.constant();
    TSeries out(0, trunc);
    out.set_coeff(0, LaurentPoly(inv0));
    for (int n = 1; n < trunc; ++n) {
        LaurentPoly acc;
        for (int k = 1; k <= n && k < base.trunc(); ++k) acc += base.coeff(k) * out.coeff(n - k);
        out.set_coeff(n, acc.scaled(-inv0));
    }
    return out;
}

} // namespace tandem
