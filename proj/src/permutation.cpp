#include "ivif/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace ivif {

std::uint64_t factorial(std::size_t n) {
    if (n > 20)
        throw OrderTooLarge(std::to_string(n) + "! does not fit in 64 bits");
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= n; ++k)
        f *= k;
    return f;
}

namespace {

void require_bijection(const std::vector<std::size_t>& images, std::size_t n,
                       const char* what) {
    std::vector<bool> seen(n, false);
    for (std::size_t x : images) {
        if (x >= n || seen[x])
            throw ValidationError(std::string(what) + " images are not a bijection");
        seen[x] = true;
    }
}

} // namespace

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    if (images_.empty())
        throw ValidationError("permutation must have at least one element");
    require_bijection(images_, images_.size(), "permutation");
}

Permutation Permutation::identity(std::size_t n) {
    if (n == 0)
        throw ValidationError("permutation must have at least one element");
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{0});
    return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_rank(std::size_t n, std::uint64_t rank) {
    if (n == 0)
        throw ValidationError("permutation must have at least one element");
    if (rank >= factorial(n))
        throw IndexOutOfRange("rank " + std::to_string(rank) + " out of range for order " +
                              std::to_string(n));
    // factorial number system: digit k picks the (rank / (n-1-k)!)-th unused element
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    std::vector<std::size_t> images;
    images.reserve(n);
    for (std::size_t k = n; k > 0; --k) {
        const std::uint64_t f = factorial(k - 1);
        images.push_back(pool[rank / f]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(rank / f));
        rank %= f;
    }
    return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[images_[i]] = i;
    return Permutation(std::move(inv), Unchecked{});
}

bool Permutation::advance() {
    return std::next_permutation(images_.begin(), images_.end());
}

namespace {

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
    std::vector<std::size_t> out;
    out.reserve(n - 1);
    for (std::size_t k = 0; k < n; ++k)
        if (k != skip)
            out.push_back(k);
    return out;
}

} // namespace

InjectionMap::InjectionMap(std::size_t n, std::size_t skip_row, std::size_t skip_col,
                           std::vector<std::size_t> images)
    : domain_(), codomain_(), images_(std::move(images)) {
    if (n < 2)
        throw ValidationError("injection map needs order >= 2");
    if (skip_row >= n || skip_col >= n)
        throw IndexOutOfRange("skipped row or column outside order " + std::to_string(n));
    domain_ = all_but(n, skip_row);
    codomain_ = all_but(n, skip_col);
    if (images_.size() != domain_.size())
        throw ValidationError("expected " + std::to_string(domain_.size()) + " images, got " +
                              std::to_string(images_.size()));
    std::vector<std::size_t> sorted = images_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != codomain_)
        throw ValidationError("images are not a bijection onto the remaining columns");
}

InjectionMap InjectionMap::first(std::size_t n, std::size_t skip_row, std::size_t skip_col) {
    InjectionMap m(n, skip_row, skip_col, all_but(n, skip_col));
    return m;
}

bool InjectionMap::advance() {
    return std::next_permutation(images_.begin(), images_.end());
}

} // namespace ivif
