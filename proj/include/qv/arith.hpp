#pragma once

#include <cstdint>

#include "qv/rational.hpp"

namespace qv {

/// Sum of k-th powers of the positive divisors of n.
mpz_class sigma_k(uint64_t n, unsigned k);

/// sigma_k extended by the convention sigma_k(x) = 0 for non-integer x
/// (covers the n/2 cases of the starred divisor counts).
Rational sigma_k_at_rational(const Rational& x, unsigned k);

struct DivisorQuery {
    uint64_t n = 0;
    unsigned j = 0;       // residue, 0 <= j < k
    unsigned k = 1;       // modulus
    bool starred = false; // restrict to divisors with n/d odd
};

/// Number of divisors d of n with d == j (mod k), and n/d odd when starred.
uint64_t d_count(const DivisorQuery& q);

/// d_{j,k}(n)
uint64_t d_jk(unsigned j, unsigned k, uint64_t n);
/// d*_{j,k}(n)
uint64_t d_star_jk(unsigned j, unsigned k, uint64_t n);

}  // namespace qv
