#pragma once

// Shared fixtures, random generators, and reference folds for the test
// suites. The reference folds (laplace_det, injection_cofactor) never call
// the library's determinant, cofactor, or adjoint; they exist to check them
// along an independent path.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ivif/graph.hpp"
#include "ivif/matrix.hpp"
#include "ivif/permutation.hpp"

namespace ivt {

using ivif::Matrix;
using ivif::UnitInterval;
using ivif::Value;

inline Value V(double mu_lo, double mu_hi, double nu_lo, double nu_hi) {
    return Value({mu_lo, mu_hi}, {nu_lo, nu_hi});
}

// ---------------------------------------------------------------------------
// fixtures: two rating snapshots of a 3-city ring road network, plus their
// expected elementwise join and meet

inline Matrix ring3_t0() {
    const Value o = Value::bottom();
    return Matrix{
        {o, V(.1, .3, .2, .5), V(.2, .4, .1, .5)},
        {V(.1, .3, .2, .5), o, V(.7, .8, 0, .1)},
        {V(.2, .4, .1, .5), V(.7, .8, 0, .1), o},
    };
}

inline Matrix ring3_t1() {
    const Value o = Value::bottom();
    return Matrix{
        {o, V(.2, .4, .4, .5), V(.3, .6, .2, .3)},
        {V(.2, .4, .4, .5), o, V(.2, .4, .3, .5)},
        {V(.3, .6, .2, .3), V(.2, .4, .3, .5), o},
    };
}

inline Matrix ring3_join() {
    const Value o = Value::bottom();
    return Matrix{
        {o, V(.2, .4, .2, .5), V(.3, .6, .1, .3)},
        {V(.2, .4, .2, .5), o, V(.7, .8, 0, .1)},
        {V(.3, .6, .1, .3), V(.7, .8, 0, .1), o},
    };
}

inline Matrix ring3_meet() {
    const Value o = Value::bottom();
    return Matrix{
        {o, V(.1, .3, .4, .5), V(.2, .4, .2, .5)},
        {V(.1, .3, .4, .5), o, V(.2, .4, .3, .5)},
        {V(.2, .4, .2, .5), V(.2, .4, .3, .5), o},
    };
}

// ---------------------------------------------------------------------------
// fixture: a 6-city network, as an edge list and as the matrix it must
// produce

inline std::string six_city_csv() {
    return "# six cities, all 15 roads rated for crowdness and loneliness\n"
           "n=6\n"
           "u,v,mu_lo,mu_hi,nu_lo,nu_hi\n"
           "1,2,0.1,0.3,0.2,0.5\n"
           "1,3,0.2,0.4,0.1,0.5\n"
           "1,4,0.3,0.4,0.5,0.6\n"
           "1,5,0.2,0.4,0.4,0.5\n"
           "1,6,0.3,0.6,0.2,0.3\n"
           "2,3,0.7,0.8,0,0.1\n"
           "2,4,0.3,0.5,0.4,0.5\n"
           "2,5,0.3,0.4,0.4,0.6\n"
           "2,6,0.2,0.3,0.4,0.5\n"
           "3,4,0.5,0.6,0.2,0.3\n"
           "3,5,0.3,0.5,0.2,0.3\n"
           "3,6,0.3,0.6,0.2,0.3\n"
           "4,5,0.4,0.6,0.3,0.4\n"
           "4,6,0.2,0.4,0.3,0.5\n"
           "5,6,0.3,0.5,0.2,0.4\n";
}

inline Matrix six_city_matrix() {
    const Value o = Value::bottom();
    const Value e12 = V(.1, .3, .2, .5), e13 = V(.2, .4, .1, .5), e14 = V(.3, .4, .5, .6);
    const Value e15 = V(.2, .4, .4, .5), e16 = V(.3, .6, .2, .3), e23 = V(.7, .8, 0, .1);
    const Value e24 = V(.3, .5, .4, .5), e25 = V(.3, .4, .4, .6), e26 = V(.2, .3, .4, .5);
    const Value e34 = V(.5, .6, .2, .3), e35 = V(.3, .5, .2, .3), e36 = V(.3, .6, .2, .3);
    const Value e45 = V(.4, .6, .3, .4), e46 = V(.2, .4, .3, .5), e56 = V(.3, .5, .2, .4);
    return Matrix{
        {o, e12, e13, e14, e15, e16},
        {e12, o, e23, e24, e25, e26},
        {e13, e23, o, e34, e35, e36},
        {e14, e24, e34, o, e45, e46},
        {e15, e25, e35, e45, o, e56},
        {e16, e26, e36, e46, e56, o},
    };
}

// ---------------------------------------------------------------------------
// seeded random generators

struct Rng {
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(eng); }

    std::size_t index(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng);
    }

    std::mt19937_64 eng;
};

inline Value rand_value(Rng& r) {
    double lo = r.unit(), hi = r.unit();
    if (lo > hi)
        std::swap(lo, hi);
    const double nu_hi = (1.0 - hi) * r.unit();
    return V(lo, hi, nu_hi * r.unit(), nu_hi);
}

inline Matrix rand_matrix(Rng& r, std::size_t rows, std::size_t cols) {
    std::vector<Value> cells;
    cells.reserve(rows * cols);
    for (std::size_t k = 0; k < rows * cols; ++k)
        cells.push_back(rand_value(r));
    return Matrix(rows, cols, std::move(cells));
}

/// A random value v with le(a, v): mu bounds nudged up, nu bounds nudged down.
inline Value rand_value_above(Rng& r, const Value& a) {
    const double nu_hi = a.nu().hi() * r.unit();
    const double nu_lo = std::min(a.nu().lo(), nu_hi) * r.unit();
    const double mu_hi = a.mu().hi() + (1.0 - nu_hi - a.mu().hi()) * r.unit();
    const double mu_lo = a.mu().lo() + (mu_hi - a.mu().lo()) * r.unit();
    return V(mu_lo, mu_hi, nu_lo, nu_hi);
}

inline Matrix rand_matrix_above(Rng& r, const Matrix& a) {
    std::vector<Value> cells;
    cells.reserve(a.entries().size());
    for (const Value& v : a.entries())
        cells.push_back(rand_value_above(r, v));
    return Matrix(a.rows(), a.cols(), std::move(cells));
}

inline ivif::GraphSpec rand_graph(Rng& r, std::size_t nodes) {
    std::vector<ivif::Edge> edges;
    for (std::size_t u = 1; u <= nodes; ++u)
        for (std::size_t v = u + 1; v <= nodes; ++v)
            if (r.unit() < 0.6) {
                const Value rating = rand_value(r);
                edges.push_back(ivif::Edge{u, v, rating.mu(), rating.nu()});
            }
    return ivif::GraphSpec(nodes, std::move(edges));
}

inline std::string graph_csv(const ivif::GraphSpec& g) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "n=" << g.node_count() << "\n";
    out << "u,v,mu_lo,mu_hi,nu_lo,nu_hi\n";
    for (const ivif::Edge& e : g.edges())
        out << e.u << ',' << e.v << ',' << e.crowdness.lo() << ',' << e.crowdness.hi() << ','
            << e.loneliness.lo() << ',' << e.loneliness.hi() << "\n";
    return std::move(out).str();
}

// ---------------------------------------------------------------------------
// reference folds

inline Matrix drop_cross(const Matrix& a, std::size_t drop_row, std::size_t drop_col) {
    std::vector<Value> out;
    out.reserve((a.rows() - 1) * (a.cols() - 1));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != drop_row && j != drop_col)
                out.push_back(a(i, j));
    return Matrix(a.rows() - 1, a.cols() - 1, std::move(out));
}

/// Recursive first-row expansion. Valid as a determinant oracle because the
/// algebra has no signs and meet distributes over join.
inline Value laplace_det(const Matrix& a) {
    if (a.rows() == 1)
        return a(0, 0);
    Value acc = Value::bottom();
    for (std::size_t j = 0; j < a.cols(); ++j)
        acc = add(acc, mul(a(0, j), laplace_det(drop_cross(a, 0, j))));
    return acc;
}

/// Cofactor by direct enumeration of the (n-1)! row-to-column assignments
/// that avoid the dropped row and column.
inline Value injection_cofactor(const Matrix& a, std::size_t drop_row, std::size_t drop_col) {
    ivif::InjectionMap m = ivif::InjectionMap::first(a.rows(), drop_row, drop_col);
    Value acc = Value::bottom();
    do {
        Value term = a(m.domain()[0], m.images()[0]);
        for (std::size_t k = 1; k < m.domain().size(); ++k)
            term = mul(term, a(m.domain()[k], m.images()[k]));
        acc = add(acc, term);
    } while (m.advance());
    return acc;
}

/// The determinant fold with the permutation terms visited in random order;
/// the result may not depend on the order.
inline Value shuffled_det(const Matrix& a, Rng& r) {
    std::vector<Value> terms;
    ivif::Permutation p = ivif::Permutation::identity(a.rows());
    do {
        Value term = a(0, p(0));
        for (std::size_t i = 1; i < a.rows(); ++i)
            term = mul(term, a(i, p(i)));
        terms.push_back(term);
    } while (p.advance());
    std::shuffle(terms.begin(), terms.end(), r.eng);
    Value acc = Value::bottom();
    for (const Value& t : terms)
        acc = add(acc, t);
    return acc;
}

// ---------------------------------------------------------------------------
// tolerant comparison for the means, whose components genuinely round

inline bool approx(double x, double y, double tol) {
    return std::abs(x - y) <= tol;
}

inline bool approx(const Value& x, const Value& y, double tol) {
    return approx(x.mu().lo(), y.mu().lo(), tol) && approx(x.mu().hi(), y.mu().hi(), tol) &&
           approx(x.nu().lo(), y.nu().lo(), tol) && approx(x.nu().hi(), y.nu().hi(), tol);
}

inline bool approx(const Matrix& x, const Matrix& y, double tol) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        return false;
    for (std::size_t k = 0; k < x.entries().size(); ++k)
        if (!approx(x.entries()[k], y.entries()[k], tol))
            return false;
    return true;
}

} // namespace ivt
