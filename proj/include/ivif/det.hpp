#pragma once

#include <cstddef>

#include "ivif/matrix.hpp"

namespace ivif {

/// Largest order the permutation-expansion operations accept. 9! = 362880
/// terms is still fast; beyond that the factorial growth is hopeless and the
/// operations refuse with OrderTooLarge.
inline constexpr std::size_t kMaxExpansionOrder = 9;

/// Determinant by full permutation expansion: the add-fold over all n!
/// permutations of the mul-product each one selects. There is no sign
/// alternation in this algebra. Every component of the result is a pure
/// max/min selection of input bounds, so the value is exact.
///
/// Dispatches to the OpenMP kernel for larger orders. Both kernels produce
/// bit-identical results: max and min are associative and commutative, so
/// the fold may be split into blocks freely.
Value determinant(const Matrix& a);

/// Single-threaded reference fold, permutations visited in lexicographic order.
Value determinant_serial(const Matrix& a);

/// Block-partitioned OpenMP fold.
Value determinant_parallel(const Matrix& a);

/// Determinant of the minor that deletes drop_row and drop_col (0-based).
Value cofactor(const Matrix& a, std::size_t drop_row, std::size_t drop_col);

/// adj(A)(i, j) = cofactor(A, j, i); requires 2 <= n <= kMaxExpansionOrder.
/// Dispatches to the OpenMP kernel for larger orders, one task per entry.
Matrix adjoint(const Matrix& a);

Matrix adjoint_serial(const Matrix& a);
Matrix adjoint_parallel(const Matrix& a);

} // namespace ivif
