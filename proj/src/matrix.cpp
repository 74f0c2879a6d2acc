#include "ivif/matrix.hpp"

#include <string>
#include <utility>

namespace ivif {

namespace {

void require_nonempty(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0)
        throw ValidationError("matrix must have at least one row and one column");
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, const Value& fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {
    require_nonempty(rows, cols);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Value> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require_nonempty(rows, cols);
    if (entries_.size() != rows * cols)
        throw ValidationError("expected " + std::to_string(rows * cols) + " entries, got " +
                              std::to_string(entries_.size()));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Value>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    require_nonempty(rows_, cols_);
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw ValidationError("rows have unequal lengths");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

const Value& Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw IndexOutOfRange("(" + std::to_string(i) + ", " + std::to_string(j) +
                              ") outside a " + std::to_string(rows_) + "x" +
                              std::to_string(cols_) + " matrix");
    return entries_[i * cols_ + j];
}

Matrix add(const Matrix& a, const Matrix& b) {
    return zip([](const Value& x, const Value& y) { return add(x, y); }, a, b);
}

Matrix mul(const Matrix& a, const Matrix& b) {
    return zip([](const Value& x, const Value& y) { return mul(x, y); }, a, b);
}

Matrix oplus(const Matrix& a, const Matrix& b) {
    return zip([](const Value& x, const Value& y) { return oplus(x, y); }, a, b);
}

Matrix odot(const Matrix& a, const Matrix& b) {
    return zip([](const Value& x, const Value& y) { return odot(x, y); }, a, b);
}

Matrix amean(const Matrix& a, const Matrix& b) {
    return zip([](const Value& x, const Value& y) { return amean(x, y); }, a, b);
}

Matrix gmean(const Matrix& a, const Matrix& b) {
    return zip([](const Value& x, const Value& y) { return gmean(x, y); }, a, b);
}

Matrix hmean(const Matrix& a, const Matrix& b) {
    return zip([](const Value& x, const Value& y) { return hmean(x, y); }, a, b);
}

Matrix star(const Matrix& a, const Matrix& b) {
    return zip([](const Value& x, const Value& y) { return star(x, y); }, a, b);
}

Matrix complement(const Matrix& a) {
    std::vector<Value> out;
    out.reserve(a.entries().size());
    for (const Value& v : a.entries())
        out.push_back(complement(v));
    return Matrix(a.rows(), a.cols(), std::move(out));
}

Matrix transpose(const Matrix& a) {
    std::vector<Value> out;
    out.reserve(a.entries().size());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
            out.push_back(a(i, j));
    return Matrix(a.cols(), a.rows(), std::move(out));
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("cannot compare " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " with " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
}

} // namespace

bool le(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        if (!le(a.entries()[k], b.entries()[k]))
            return false;
    return true;
}

bool eq(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    return a.entries() == b.entries();
}

Matrix make_special(SpecialKind kind, std::size_t n) {
    const Value hesitant({0.0, 0.0}, {0.0, 0.0});
    switch (kind) {
    case SpecialKind::c_null:
        return Matrix(n, n, hesitant);
    case SpecialKind::a_null:
        return Matrix(n, n, Value::bottom());
    case SpecialKind::r_null:
        return Matrix(n, n, Value::top());
    case SpecialKind::a_unit:
    case SpecialKind::r_unit: {
        const Value diag = kind == SpecialKind::a_unit ? Value::top() : Value::bottom();
        const Value off = kind == SpecialKind::a_unit ? Value::bottom() : Value::top();
        std::vector<Value> out(n * n, off);
        for (std::size_t i = 0; i < n; ++i)
            out[i * n + i] = diag;
        return Matrix(n, n, std::move(out));
    }
    }
    throw ValidationError("unknown special matrix kind");
}

std::ostream& operator<<(std::ostream& os, const Matrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            os << (j ? "  " : "") << a(i, j);
        os << '\n';
    }
    return os;
}

} // namespace ivif
