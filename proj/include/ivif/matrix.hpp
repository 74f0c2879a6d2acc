#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "ivif/errors.hpp"
#include "ivif/value.hpp"

namespace ivif {

/// Dense row-major grid of Values, at least 1 x 1.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const Value& fill);

    /// Takes entries in row-major order; entries.size() must equal rows * cols.
    Matrix(std::size_t rows, std::size_t cols, std::vector<Value> entries);

    /// Row list, e.g. Matrix{{a, b}, {c, d}}. Rows must have equal length.
    Matrix(std::initializer_list<std::initializer_list<Value>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    /// Unchecked access, indices are 0-based.
    const Value& operator()(std::size_t i, std::size_t j) const noexcept {
        return entries_[i * cols_ + j];
    }

    /// Bounds-checked access.
    const Value& at(std::size_t i, std::size_t j) const;

    /// Row-major storage.
    const std::vector<Value>& entries() const noexcept { return entries_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Value> entries_;
};

/// Elementwise lift of a binary value operation. Shapes must match.
template <typename Op>
Matrix zip(Op&& op, const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("cannot combine " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " with " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
    std::vector<Value> out;
    out.reserve(a.entries().size());
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        out.push_back(op(a.entries()[k], b.entries()[k]));
    return Matrix(a.rows(), a.cols(), std::move(out));
}

Matrix add(const Matrix& a, const Matrix& b);
Matrix mul(const Matrix& a, const Matrix& b);
Matrix oplus(const Matrix& a, const Matrix& b);
Matrix odot(const Matrix& a, const Matrix& b);
Matrix amean(const Matrix& a, const Matrix& b);
Matrix gmean(const Matrix& a, const Matrix& b);
Matrix hmean(const Matrix& a, const Matrix& b);
Matrix star(const Matrix& a, const Matrix& b);

/// Elementwise complement.
Matrix complement(const Matrix& a);

Matrix transpose(const Matrix& a);

/// True when le() holds entrywise. Shapes must match.
bool le(const Matrix& a, const Matrix& b);

/// Exact entrywise equality. Shapes must match.
bool eq(const Matrix& a, const Matrix& b);

/// The distinguished square matrices of the algebra.
enum class SpecialKind {
    a_unit, ///< full membership on the diagonal, full non-membership elsewhere
    r_unit, ///< full non-membership on the diagonal, full membership elsewhere
    c_null, ///< <[0,0],[0,0]> everywhere
    a_null, ///< full non-membership everywhere
    r_null, ///< full membership everywhere
};

Matrix make_special(SpecialKind kind, std::size_t n);

std::ostream& operator<<(std::ostream& os, const Matrix& a);

} // namespace ivif
