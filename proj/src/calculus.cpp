#include "qv/calculus.hpp"

#include "qv/errors.hpp"

namespace qv {

PuiseuxSeries Dq(const PuiseuxSeries& x) {
    std::vector<FieldValue> c(x.coeffs());
    const int64_t d = x.denom();
    for (size_t k = 0; k < c.size(); ++k) {
        int64_t e = x.min_exp_units() + static_cast<int64_t>(k);
        c[k] = c[k] * FieldValue(rat(static_cast<long>(e), static_cast<long>(d)));
    }
    return PuiseuxSeries::from_block(x.field(), d, x.min_exp_units(), std::move(c),
                                     x.trunc_units());
}

PuiseuxSeries schwarzian_q(const PuiseuxSeries& x) {
    PuiseuxSeries d1 = Dq(x);
    if (d1.is_zero()) throw ZeroDerivative();
    PuiseuxSeries d2 = Dq(d1);
    PuiseuxSeries d3 = Dq(d2);
    PuiseuxSeries inv1 = d1.inverse();
    PuiseuxSeries ratio2 = d2 * inv1;
    return d3 * inv1 - FieldValue(rat(3, 2)) * (ratio2 * ratio2);
}

PuiseuxSeries chain_d(const PuiseuxSeries& y, const PuiseuxSeries& s) {
    PuiseuxSeries ds = Dq(s);
    if (ds.is_zero()) throw ZeroDerivative();
    return Dq(y) * ds.inverse();
}

PuiseuxSeries eval_ratfun(const RationalFunction& R, const PuiseuxSeries& s) {
    PuiseuxSeries den = R.den.eval_series(s);
    if (den.is_zero()) throw ZeroDenominatorSeries();
    return R.num.eval_series(s) * den.inverse();
}

}  // namespace qv
