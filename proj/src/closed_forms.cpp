#include "tandem/closed_forms.hpp"

#include <stdexcept>

namespace tandem {

BigInt tutte_a(long k) {
    if (k < 0) throw std::invalid_argument("tutte_a: k >= 0");
    BigInt num = 2 * factorial(static_cast<unsigned long>(3 * k));
    BigInt den = factorial(static_cast<unsigned long>(k)) * factorial(static_cast<unsigned long>(k + 1)) *
                 factorial(static_cast<unsigned long>(k + 2));
    return div_exact(num, den);
}

BigInt baxter_b(long n) {
    if (n < 1) throw std::invalid_argument("baxter_b: n >= 1");
    BigInt sum = 0;
    for (long m = 1; m <= n; ++m) sum += binom(n + 1, m - 1) * binom(n + 1, m) * binom(n + 1, m + 1);
    return div_exact(2 * sum, BigInt(n) * BigInt(n + 1) * BigInt(n + 1));
}

std::vector<BigInt> baxter_sequence(long n_max) {
    std::vector<BigInt> b(static_cast<size_t>(n_max) + 1);
    b[0] = 1;
    if (n_max >= 1) b[1] = 1;
    for (long n = 2; n <= n_max; ++n) {
        BigInt rhs = BigInt(7 * n * n + 7 * n - 2) * b[static_cast<size_t>(n - 1)] +
                     BigInt(8 * (n - 1) * (n - 2)) * b[static_cast<size_t>(n - 2)];
        b[static_cast<size_t>(n)] = div_exact(rhs, BigInt((n + 2) * (n + 3)));
    }
    return b;
}

std::vector<BigInt> dangulation_sequence(int p, long k_max) {
    std::vector<BigInt> a(static_cast<size_t>(k_max) + 1);
    a[0] = 1;
    if (p == 1) {
        // (k+3)(k+2) a(k+1) = 3(3k+2)(3k+1) a(k)
        for (long k = 0; k < k_max; ++k)
            a[static_cast<size_t>(k + 1)] =
                div_exact(BigInt(3) * BigInt(3 * k + 2) * BigInt(3 * k + 1) * a[static_cast<size_t>(k)],
                          BigInt(k + 3) * BigInt(k + 2));
    } else if (p == 2) {
        // (k+4)(k+3)^2 a(k+2) = 4(2k+3)(k+3)(k+1) a(k+1) + 12(2k+3)(2k+1)(k+1) a(k)
        if (k_max >= 1) a[1] = 0;
        for (long k = 0; k + 2 <= k_max; ++k) {
            BigInt rhs = BigInt(4) * BigInt(2 * k + 3) * BigInt(k + 3) * BigInt(k + 1) * a[static_cast<size_t>(k + 1)] +
                         BigInt(12) * BigInt(2 * k + 3) * BigInt(2 * k + 1) * BigInt(k + 1) * a[static_cast<size_t>(k)];
            a[static_cast<size_t>(k + 2)] = div_exact(rhs, BigInt(k + 4) * BigInt(k + 3) * BigInt(k + 3));
        }
    } else if (p == 3) {
        // Degree-five recurrence; evaluated from k = -1 with a(-1) = 0 so that
        // a(1) comes out of the same relation.
        auto lhs_factor = [](long k) -> BigInt {
            return BigInt(27) * BigInt(3 * k + 8) * BigInt(3 * k + 4) * BigInt(5 * k + 3) * BigInt(3 * k + 5) *
                   BigInt(3 * k + 5) * BigInt(3 * k + 7) * BigInt(3 * k + 7) * BigInt(k + 2) * BigInt(k + 2);
        };
        auto mid_factor = [](long k) -> BigInt {
            BigInt cubic = BigInt(145) * k * k * k + BigInt(532) * k * k + BigInt(626) * k + BigInt(233);
            return BigInt(60) * BigInt(5 * k + 7) * BigInt(3 * k + 5) * BigInt(5 * k + 9) * BigInt(5 * k + 6) *
                   BigInt(3 * k + 4) * BigInt(5 * k + 8) * cubic;
        };
        auto low_factor = [](long k) -> BigInt {
            return BigInt(800) * BigInt(5 * k + 6) * BigInt(5 * k + 1) * BigInt(5 * k + 7) * BigInt(5 * k + 2) *
                   BigInt(5 * k + 3) * BigInt(5 * k + 9) * BigInt(5 * k + 4) * BigInt(5 * k + 8) * BigInt(5 * k + 8);
        };
        BigInt prev = 0; // a(-1)
        for (long k = -1; k + 2 <= k_max; ++k) {
            BigInt cur = a[static_cast<size_t>(k + 1)];
            BigInt rhs = mid_factor(k) * cur - low_factor(k) * prev;
            BigInt lf = lhs_factor(k);
            if (lf == 0) throw std::domain_error("dangulation_sequence: vanishing leading factor");
            a[static_cast<size_t>(k + 2)] = div_exact(rhs, lf);
            prev = cur;
        }
    } else {
        throw std::invalid_argument("dangulation_sequence: p must be 1, 2 or 3");
    }
    return a;
}

BigInt lgv_qnk(long n, long k, long a, long b, long c, long d) {
    if (n < 1 || k < 0) throw std::invalid_argument("lgv_qnk: need n >= 1, k >= 0");
    BigInt m[3][3] = {
        {binom(n + a - c - 1, k - 1), binom(n + a, k - 1), binom(n + a + d, k - 2)},
        {binom(n - c - 1, k), binom(n, k), binom(n + d, k - 1)},
        {binom(n - b - c - 2, k), binom(n - b - 1, k), binom(n - b + d - 1, k - 1)},
    };
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

BigInt marked_qnk_tilde(long n, long k, long a, long b, long c, long d) {
    auto term = [&](long aa, long bb, long cc, long dd) {
        if (aa < 0 || bb < 0 || cc < 0 || dd < 0) return BigInt(0);
        return lgv_qnk(n, k, aa, bb, cc, dd);
    };
    return term(a, b, c, d) - term(a - 1, b, c - 1, d) - term(a, b - 1, c, d - 1) + term(a - 1, b - 1, c - 1, d - 1);
}

BigInt exact_p1_endpoint(long n, long i, long j) {
    if (n < 0 || i < 0 || j < 0) return BigInt(0);
    long rem = n - 2 * i - j;
    if (rem < 0 || rem % 3 != 0) return BigInt(0);
    long m = rem / 3;
    BigInt num = BigInt(i + 1) * BigInt(j + 1) * BigInt(i + j + 2) * factorial(static_cast<unsigned long>(n));
    BigInt den = factorial(static_cast<unsigned long>(m)) * factorial(static_cast<unsigned long>(m + i + 1)) *
                 factorial(static_cast<unsigned long>(m + i + j + 2));
    return div_exact(num, den);
}

} // namespace tandem
