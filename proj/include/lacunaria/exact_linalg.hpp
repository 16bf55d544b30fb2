#pragma once

#include "lacunaria/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lacunaria {

using IntegerMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

/// Determinant of a square integer matrix by Bareiss fraction-free
/// elimination with row pivoting. Every intermediate entry is an exact minor.
Integer bareiss_determinant(IntegerMatrix m);

/// Determinant of a square rational matrix; rows are scaled to integers first.
Rational determinant(const RationalMatrix& m);

/// Basis of {v : m v = 0}, from the reduced row echelon form.
std::vector<RationalVector> null_space(const RationalMatrix& m);

/// Unique solution of m x = rhs for square nonsingular m; nullopt if singular.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& rhs);

enum class SignConvention { first_positive, last_positive };

/// Rescales v to coprime integers with the first (or last) nonzero entry positive.
RationalVector primitive_integer_vector(RationalVector v, SignConvention convention);

}  // namespace lacunaria
