// Test-only brute-force oracles, independent of the qv series kernel: plain
// dense coefficient vectors over mpq_class with schoolbook arithmetic.  Used
// to compute expected values before they are frozen into assertions.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace oracle {

// dense power-series block c[0..n) over a fixed exponent lattice 1/denom
using Block = std::vector<mpq_class>;

inline Block mul(const Block& a, const Block& b, size_t n) {
    Block c(n, 0);
    for (size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size() && i + j < n; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

inline Block add(const Block& a, const Block& b, size_t n) {
    Block c(n, 0);
    for (size_t i = 0; i < a.size() && i < n; ++i) c[i] += a[i];
    for (size_t i = 0; i < b.size() && i < n; ++i) c[i] += b[i];
    return c;
}

// long division: q with q*b = a to n terms, b[0] != 0
inline Block divide(const Block& a, const Block& b, size_t n) {
    Block q(n, 0);
    for (size_t k = 0; k < n; ++k) {
        mpq_class acc = k < a.size() ? a[k] : mpq_class(0);
        for (size_t j = 1; j <= k && j < b.size(); ++j) acc -= b[j] * q[k - j];
        q[k] = acc / b[0];
    }
    return q;
}

// prod_{m=1..n-1} (1 - x^m)^e by repeated schoolbook multiplication
inline Block euler_product_pow(size_t n, long e) {
    Block p(n, 0);
    p[0] = 1;
    for (size_t m = 1; m < n; ++m) {
        Block f(n, 0);
        f[0] = 1;
        if (m < n) f[m] = -1;
        for (long k = 0; k < e; ++k) p = mul(p, f, n);
    }
    return p;
}

inline long divisor_power_sum(long n, unsigned k) {
    long s = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        long p = 1;
        for (unsigned i = 0; i < k; ++i) p *= d;
        s += p;
    }
    return s;
}

inline long divisor_count_mod(long n, long j, long k) {
    long c = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0 && d % k == j) ++c;
    return c;
}

// Eisenstein block: 1 + scale * sum sigma_k(n) q^n
inline Block eisenstein(long scale, unsigned k, size_t n) {
    Block e(n, 0);
    e[0] = 1;
    for (size_t m = 1; m < n; ++m)
        e[m] = mpq_class(scale) * divisor_power_sum(static_cast<long>(m), k);
    return e;
}

// theta sum over the 1/8 lattice: kind 0 -> sum q^(n^2/2) (units 4n^2),
// kind 1 -> sum q^((2n+1)^2/8), kind 2 -> alternating version of kind 0
inline Block theta_sum_eighths(int kind, size_t units) {
    Block t(units, 0);
    for (long n = -200; n <= 200; ++n) {
        long e = (kind == 1) ? (2 * n + 1) * (2 * n + 1) : 4 * n * n;
        if (e < 0 || static_cast<size_t>(e) >= units) continue;
        long w = (kind == 2 && ((n % 2) + 2) % 2 == 1) ? -1 : 1;
        t[static_cast<size_t>(e)] += w;
    }
    return t;
}

// a(q) lattice block: sum over m^2+mn+n^2
inline Block lattice_a(size_t n) {
    Block a(n, 0);
    for (long m = -60; m <= 60; ++m)
        for (long k = -60; k <= 60; ++k) {
            long e = m * m + m * k + k * k;
            if (e >= 0 && static_cast<size_t>(e) < n) a[static_cast<size_t>(e)] += 1;
        }
    return a;
}

}  // namespace oracle
