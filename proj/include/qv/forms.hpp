#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qv/series.hpp"

namespace qv {

/// Closed catalog of named modular objects.  Forms at rescaled arguments
/// (E2(5 tau), a(2 tau), j(tau/2), ...) are produced with rescale() on these
/// base expansions.
enum class FormId {
    // Eisenstein layer and Klein invariants
    E2, E4, E6, Delta, LittleJ, J, InvJ, OneOver1MinusJ,
    // theta constants and the lambda function
    Theta00Sq, Theta10Sq, Theta01Sq,
    Theta00Fourth, Theta10Fourth, Theta01Fourth, Lambda,
    // level 2 and the classical sums
    Phi, Psi, BerndtX,
    // cubic theta functions (level 3)
    BorweinA, BorweinB, BorweinC, XLevel3,
    // level 5, first system (Q(sqrt5) representatives)
    V5, W5, FLevel5, VSubst, WSubst, GLevel5, BigG5,
    // level 5, second system
    S5b, T5b, P5b, Q5b,
    // level 6, eta-quotient families
    P6a, Q6a, F6a, F6aTilde, USubst6a, VSubst6a,
    P6b, Q6b, G6b,
    Q6c, T6c, T6cHaupt,
    R6d, U6d, U6dHaupt,
    P6e, Q6e, R6e, X6e,
};

struct FormInfo {
    FormId id;
    const char* name;
    FieldTag field;
    bool has_dual_route;
    const char* description;
};

const std::vector<FormInfo>& form_catalog();
const FormInfo& form_info(FormId id);
std::optional<FormId> form_by_name(const std::string& name);

/// q-expansion of the form, exact, truncated at `order` (whole-q units).
PuiseuxSeries build_form(FormId id, const Rational& order);

/// Both printed construction routes, for cross-validation.  SingleRouteOnly
/// when the catalog holds just one definition.
std::pair<PuiseuxSeries, PuiseuxSeries> build_dual_route(FormId id, const Rational& order);

/// q^(r/24) prod (1 - q^(r n)), the Dedekind eta factor at tau -> r tau.
PuiseuxSeries eta(const Rational& r, const Rational& order);

/// theta^2[0;0], theta^2[1;0], theta^2[0;1] (which = 0, 1, 2), built from the
/// defining sums; the convention is pinned by the Halphen system check.
PuiseuxSeries theta_sq(int which, const Rational& order);

struct EtaFactor {
    Rational r;  // argument rescale
    int e;       // exponent
};

PuiseuxSeries eta_quotient(const std::vector<EtaFactor>& spec, const Rational& order);
Rational eta_quotient_valuation(const std::vector<EtaFactor>& spec);

/// Eta-quotient description of a catalog form, when it has one (used by the
/// valuation invariant test).
std::optional<std::vector<EtaFactor>> eta_spec_for(FormId id);

void clear_form_cache();

}  // namespace qv
