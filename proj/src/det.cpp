#include "ivif/det.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ivif/permutation.hpp"

namespace ivif {

namespace {

// below these orders the parallel setup costs more than the whole fold
constexpr std::size_t kDetParallelMinOrder = 8;
constexpr std::size_t kAdjParallelMinOrder = 6;
constexpr std::uint64_t kDetBlocks = 64;

void require_square(const Matrix& a, const char* what) {
    if (!a.is_square())
        throw NotSquare(std::string(what) + " needs a square matrix, got " +
                        std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

void require_expandable(const Matrix& a, const char* what) {
    if (a.rows() > kMaxExpansionOrder)
        throw OrderTooLarge(std::string(what) + " at order " + std::to_string(a.rows()) +
                            " exceeds the expansion cap (order " +
                            std::to_string(kMaxExpansionOrder) + ")");
}

// mul-product of the entries a(i, p(i))
Value term_product(const Matrix& a, const Permutation& p) {
    Value term = a(0, p(0));
    for (std::size_t i = 1; i < a.rows(); ++i)
        term = mul(term, a(i, p(i)));
    return term;
}

// add-fold of the terms for ranks [begin, end) in lexicographic order
Value fold_rank_range(const Matrix& a, std::uint64_t begin, std::uint64_t end) {
    Permutation p = Permutation::from_rank(a.rows(), begin);
    Value acc = Value::bottom();
    for (std::uint64_t r = begin; r != end; ++r) {
        acc = add(acc, term_product(a, p));
        p.advance();
    }
    return acc;
}

Matrix drop_row_col(const Matrix& a, std::size_t drop_row, std::size_t drop_col) {
    std::vector<Value> out;
    out.reserve((a.rows() - 1) * (a.cols() - 1));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i == drop_row)
            continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (j != drop_col)
                out.push_back(a(i, j));
    }
    return Matrix(a.rows() - 1, a.cols() - 1, std::move(out));
}

void require_minor_order(const Matrix& a, const char* what) {
    require_square(a, what);
    if (a.rows() < 2)
        throw ValidationError(std::string(what) + " needs order >= 2, got " +
                              std::to_string(a.rows()));
    require_expandable(a, what);
}

} // namespace

Value determinant_serial(const Matrix& a) {
    require_square(a, "determinant");
    require_expandable(a, "determinant");
    return fold_rank_range(a, 0, factorial(a.rows()));
}

Value determinant_parallel(const Matrix& a) {
    require_square(a, "determinant");
    require_expandable(a, "determinant");
    const std::uint64_t total = factorial(a.rows());
    const std::uint64_t blocks = std::min(total, kDetBlocks);
    std::vector<Value> partial(blocks, Value::bottom());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
        const auto ub = static_cast<std::uint64_t>(b);
        partial[ub] = fold_rank_range(a, total * ub / blocks, total * (ub + 1) / blocks);
    }
    // folding the block partials in block order keeps the result identical
    // to the serial pass (add is associative and commutative anyway)
    Value acc = Value::bottom();
    for (const Value& v : partial)
        acc = add(acc, v);
    return acc;
}

Value determinant(const Matrix& a) {
    require_square(a, "determinant");
    require_expandable(a, "determinant");
    return a.rows() >= kDetParallelMinOrder ? determinant_parallel(a) : determinant_serial(a);
}

Value cofactor(const Matrix& a, std::size_t drop_row, std::size_t drop_col) {
    require_square(a, "cofactor");
    if (a.rows() < 2)
        throw ValidationError("cofactor needs order >= 2, got " + std::to_string(a.rows()));
    if (drop_row >= a.rows() || drop_col >= a.cols())
        throw IndexOutOfRange("cannot drop row " + std::to_string(drop_row) + ", column " +
                              std::to_string(drop_col) + " of a " + std::to_string(a.rows()) +
                              "x" + std::to_string(a.cols()) + " matrix");
    return determinant(drop_row_col(a, drop_row, drop_col));
}

Matrix adjoint_serial(const Matrix& a) {
    require_minor_order(a, "adjoint");
    const std::size_t n = a.rows();
    std::vector<Value> cells;
    cells.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cells.push_back(determinant_serial(drop_row_col(a, j, i)));
    return Matrix(n, n, std::move(cells));
}

Matrix adjoint_parallel(const Matrix& a) {
    require_minor_order(a, "adjoint");
    const std::size_t n = a.rows();
    std::vector<Value> cells(n * n, Value::bottom());
    // one minor determinant per entry is already enough parallel grain
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
        for (std::int64_t j = 0; j < static_cast<std::int64_t>(n); ++j)
            cells[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] =
                determinant_serial(drop_row_col(a, static_cast<std::size_t>(j),
                                                static_cast<std::size_t>(i)));
    return Matrix(n, n, std::move(cells));
}

Matrix adjoint(const Matrix& a) {
    require_minor_order(a, "adjoint");
    return a.rows() >= kAdjParallelMinOrder ? adjoint_parallel(a) : adjoint_serial(a);
}

} // namespace ivif
