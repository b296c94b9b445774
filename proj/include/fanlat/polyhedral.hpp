#pragma once

// Exact rational helpers for cone geometry: coordinates with respect to
// linearly independent generators, and Fourier-Motzkin feasibility of
// { x >= 0 : A x = b }.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fanlat/intlin.hpp"

namespace fanlat {

using Rational = mpq_class;

// Unique x with a * x = b when the columns of `a` are linearly independent;
// nullopt if b is outside their span.
std::optional<std::vector<Rational>> rational_solve(const IntMatrix& a, std::span<const Integer> b);

// Whether some x >= 0 satisfies a * x = b. nullopt when the elimination would
// exceed `constraint_limit` intermediate inequalities.
std::optional<bool> nonnegative_feasible(const IntMatrix& a, std::span<const Integer> b,
                                         std::size_t constraint_limit);

}  // namespace fanlat
