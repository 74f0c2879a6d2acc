#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ivif/errors.hpp"

namespace ivif {

/// n!, defined for n <= 20 (the uint64 range).
std::uint64_t factorial(std::size_t n);

/// A bijection on {0, ..., n-1}. Enumeration order throughout the library is
/// lexicographic on the image vector (p(0), p(1), ..., p(n-1)).
class Permutation {
public:
    /// Validates that the images form a bijection.
    explicit Permutation(std::vector<std::size_t> images);

    static Permutation identity(std::size_t n);

    /// The rank-th permutation of {0, ..., n-1} in lexicographic order,
    /// rank in [0, n!). identity == from_rank(n, 0).
    static Permutation from_rank(std::size_t n, std::uint64_t rank);

    std::size_t size() const noexcept { return images_.size(); }

    /// Image of i, unchecked.
    std::size_t operator()(std::size_t i) const noexcept { return images_[i]; }

    const std::vector<std::size_t>& images() const noexcept { return images_; }

    Permutation inverse() const;

    /// Step to the lexicographic successor in place. Returns false when the
    /// last permutation wraps back around to the identity.
    bool advance();

    friend bool operator==(const Permutation& a, const Permutation& b) noexcept {
        return a.images_ == b.images_;
    }

private:
    struct Unchecked {};
    Permutation(std::vector<std::size_t> images, Unchecked) : images_(std::move(images)) {}

    std::vector<std::size_t> images_;
};

/// A bijection from the rows {0..n-1} minus skip_row onto the columns
/// {0..n-1} minus skip_col. Enumerating all (n-1)! of these and folding the
/// entry products they select is the expanded form of a cofactor; the tests
/// hold the library to that equivalence.
class InjectionMap {
public:
    /// images[k] is the column assigned to the k-th remaining row (rows kept
    /// in ascending order). Validates that images is a permutation of the
    /// remaining columns.
    InjectionMap(std::size_t n, std::size_t skip_row, std::size_t skip_col,
                 std::vector<std::size_t> images);

    /// The lexicographically first assignment (remaining columns in
    /// ascending order).
    static InjectionMap first(std::size_t n, std::size_t skip_row, std::size_t skip_col);

    /// Remaining rows, ascending.
    const std::vector<std::size_t>& domain() const noexcept { return domain_; }
    /// Remaining columns, ascending.
    const std::vector<std::size_t>& codomain() const noexcept { return codomain_; }
    /// images()[k] is the image of domain()[k].
    const std::vector<std::size_t>& images() const noexcept { return images_; }

    /// Step to the lexicographic successor of the image vector. Returns
    /// false when wrapping back around to the first assignment.
    bool advance();

private:
    std::vector<std::size_t> domain_;
    std::vector<std::size_t> codomain_;
    std::vector<std::size_t> images_;
};

} // namespace ivif
