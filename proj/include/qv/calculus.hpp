#pragma once

#include "qv/poly.hpp"
#include "qv/series.hpp"

namespace qv {

/// q d/dq: multiplies the coefficient of q^e by e.  Equals (1/2 pi i) d/dtau
/// on q-expansions, so tau-derivatives never leave the exact field.
PuiseuxSeries Dq(const PuiseuxSeries& x);

/// Normalized Schwarzian  D^3x/Dx - (3/2)(D^2x/Dx)^2, i.e. {x,tau}/(2 pi i)^2.
/// ZeroDerivative if Dx vanishes to truncation.
PuiseuxSeries schwarzian_q(const PuiseuxSeries& x);

/// dy/ds as a q-series: Dq(y)/Dq(s).  Iterate for higher derivatives.
PuiseuxSeries chain_d(const PuiseuxSeries& y, const PuiseuxSeries& s);

/// R(s) for a rational function R; Laurent-valued when s has a pole or zero
/// at q = 0.  ZeroDenominatorSeries when the denominator evaluates to zero.
PuiseuxSeries eval_ratfun(const RationalFunction& R, const PuiseuxSeries& s);

}  // namespace qv
