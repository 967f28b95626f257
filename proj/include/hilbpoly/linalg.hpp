#pragma once

#include <vector>

#include "hilbpoly/rational.hpp"

namespace hilbpoly {

using Matrix = std::vector<std::vector<Rational>>;

/// Exact Gaussian elimination. Accepts a square or overdetermined system;
/// the pivot is the first row with a nonzero entry in column order (there
/// are no magnitudes to compare, so this fixed rule keeps runs reproducible).
/// For overdetermined input every surplus equation is checked exactly.
/// Throws Error naming the offending column or equation when the system is
/// singular or inconsistent.
std::vector<Rational> solve_linear(const Matrix& matrix,
                                   const std::vector<Rational>& rhs);

}  // namespace hilbpoly
