#pragma once

// Integer-order vector calculus on polynomial fields. Works from the power
// rule alone (no gamma function), so it is an independent path for checking
// the fractional operators at alpha = (1, 1, 1).

#include "fracq/random_fields.hpp"

namespace fracq::classical {

/// d/dx_axis: c t^p -> p c t^{p-1}. DomainError on non-integer exponents.
FracField partial(const FracField& f, int axis);
VectorField grad(const FracField& f);
FracField div(const VectorField& u);
VectorField curl(const VectorField& u);
FracField laplace(const FracField& f);

/// Random polynomial with exponents 0..4 on every axis.
FracField random_polynomial(FieldRng& rng, Cube cube, std::size_t max_terms = 4);
VectorField random_polynomial_vector(FieldRng& rng, Cube cube, std::size_t max_terms = 4);

}  // namespace fracq::classical
