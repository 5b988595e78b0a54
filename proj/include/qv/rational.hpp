#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace qv {

/// Exact rational scalar.  GMP keeps canonical form (lowest terms, positive
/// denominator) as long as every entry point canonicalizes, which rat() and
/// rat_parse() do.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p" or "p/q".
Rational rat_parse(const std::string& text);

std::string rat_str(const Rational& x);

bool rat_is_integer(const Rational& x);

/// floor/ceil as int64; exponent bookkeeping never leaves that range.
int64_t rat_floor(const Rational& x);
int64_t rat_ceil(const Rational& x);
int64_t rat_to_i64(const Rational& x);  // requires an integer value

/// The rational r with r^n == x, when one exists.  Even n requires x >= 0 and
/// the nonnegative root is returned; odd n follows the sign of x.
std::optional<Rational> nth_root_if_exact(const Rational& x, unsigned n);

}  // namespace qv
