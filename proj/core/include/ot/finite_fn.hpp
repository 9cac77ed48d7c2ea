#pragma once

// Support splitting and concatenation for finite functions, plus the
// coefficient discipline their values must satisfy inside psi terms.

#include <vector>

#include "ot/term.hpp"

namespace ot {

// f restricted to keys < c (written f_c) and to keys >= c (written f^c).
FiniteFn fn_below(const FiniteFn& f, const Term& c);
FiniteFn fn_from(const FiniteFn& f, const Term& c);

// g_c * f^c: g below c, f from c on.
FiniteFn fn_concat(const FiniteFn& g, const FiniteFn& f, const Term& c);

// Point update: result(c) = v (v = 0 erases the key).
FiniteFn fn_set(const FiniteFn& f, const Term& c, const Term& v);

// Coefficient discipline for normal-form values: in each f(c), every tower
// monomial has coefficient 1 except possibly the smallest, which may carry a
// larger coefficient only at iterate 1.
bool fn_coeff_ok(const FiniteFn& f);
// As above for a single value.
bool value_coeff_ok(const Term& xi);

}  // namespace ot
