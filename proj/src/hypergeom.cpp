#include "qv/hypergeom.hpp"

#include <memory>

#include "qv/errors.hpp"

namespace qv {

namespace {

void validate(const HypergeomParams& p) {
    if (rat_is_integer(p.c) && p.c <= 0)
        throw BadParams("2F1 parameter c must not be a non-positive integer");
}

}  // namespace

std::vector<Rational> f21_coeffs(const HypergeomParams& p, size_t count) {
    validate(p);
    std::vector<Rational> out;
    out.reserve(count);
    Rational c(1);
    for (size_t n = 0; n < count; ++n) {
        out.push_back(c);
        Rational nn(static_cast<long>(n));
        c = c * (p.a + nn) * (p.b + nn) / ((p.c + nn) * (nn + 1));
    }
    return out;
}

std::function<FieldValue(size_t)> f21_stream(const HypergeomParams& p) {
    validate(p);
    auto cache = std::make_shared<std::vector<Rational>>(1, Rational(1));
    return [p, cache](size_t n) -> FieldValue {
        while (cache->size() <= n) {
            size_t m = cache->size() - 1;
            Rational mm(static_cast<long>(m));
            cache->push_back(cache->back() * (p.a + mm) * (p.b + mm) /
                             ((p.c + mm) * (mm + 1)));
        }
        return FieldValue((*cache)[n]);
    };
}

PuiseuxSeries f21_compose(const HypergeomParams& p, const PuiseuxSeries& inner,
                          const std::optional<PuiseuxSeries>& prefactor) {
    PuiseuxSeries series = compose(f21_stream(p), inner);
    if (prefactor) return *prefactor * series;
    return series;
}

}  // namespace qv
