#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qv/rational.hpp"
#include "qv/series.hpp"

namespace qv {

/// Parameters of 2F1(a,b;c;z).  c must not be a non-positive integer.
struct HypergeomParams {
    Rational a, b, c;
};

/// First `count` Taylor coefficients (a)_n (b)_n / ((c)_n n!).
std::vector<Rational> f21_coeffs(const HypergeomParams& p, size_t count);

/// Lazy coefficient stream for compose().
std::function<FieldValue(size_t)> f21_stream(const HypergeomParams& p);

/// prefactor * 2F1(p; inner), truncated at inner's truncation.  The inner
/// series must have positive valuation.
PuiseuxSeries f21_compose(const HypergeomParams& p, const PuiseuxSeries& inner,
                          const std::optional<PuiseuxSeries>& prefactor = std::nullopt);

}  // namespace qv
