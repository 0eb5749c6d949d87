#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"

namespace curvegb {

enum class Direction { ascending, descending };

// Weighted graded reverse-lexicographic order. Weighted degree decides
// first; ties break on the exponent difference tuple:
//   ascending  (x_0 < x_1 < ... < x_n): left-most nonzero of
//       (a_0-b_0, a_1-b_1, ..., a_n-b_n) negative  =>  a > b.
//   descending (x_0 > x_1 > ... > x_n): right-most nonzero of
//       (a_1-b_1, ..., a_n-b_n) negative           =>  a > b
//       (index 0 is forced equal on weight ties when all others vanish).
// With `elimination` set, variable 0 is a block variable compared before
// everything else (bigger block exponent wins); the remaining variables use
// the ascending rule, so positions 1.. play the roles of x_0..x_n.
struct OrderSpec {
    std::vector<std::int64_t> weights;
    Direction direction = Direction::ascending;
    bool elimination = false;

    std::size_t nvars() const { return weights.size(); }

    friend bool operator==(const OrderSpec&, const OrderSpec&) = default;
};

inline std::int64_t weighted_degree(const Monomial& m, const OrderSpec& spec) {
    expect(m.nvars() == spec.nvars(), errc::dimension_mismatch,
           "monomial does not match order's variable count");
    std::int64_t total = 0;
    for (std::size_t i = 0; i < m.nvars(); ++i)
        total = checked_add(total, checked_mul(m[i], spec.weights[i]));
    return total;
}

namespace detail {

// Ascending tie-break over positions [from, nvars): the monomial that first
// accumulates a deficit (more of a smaller variable) is the greater one.
inline std::strong_ordering asc_tiebreak(const Monomial& a, const Monomial& b, std::size_t from) {
    for (std::size_t i = from; i < a.nvars(); ++i) {
        auto d = a[i] - b[i];
        if (d != 0) return d < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

inline std::strong_ordering graded_compare(const Monomial& a, const Monomial& b,
                                           const OrderSpec& spec, std::size_t from) {
    std::int64_t wa = 0, wb = 0;
    for (std::size_t i = from; i < a.nvars(); ++i) {
        wa = checked_add(wa, checked_mul(a[i], spec.weights[i]));
        wb = checked_add(wb, checked_mul(b[i], spec.weights[i]));
    }
    if (wa != wb) return wa < wb ? std::strong_ordering::less : std::strong_ordering::greater;
    if (spec.direction == Direction::ascending || spec.elimination)
        return asc_tiebreak(a, b, from);
    for (std::size_t i = a.nvars(); i-- > 1;) {
        auto d = a[i] - b[i];
        if (d != 0) return d < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal; // weights force index 0 equal here
}

} // namespace detail

inline std::strong_ordering compare(const Monomial& a, const Monomial& b, const OrderSpec& spec) {
    expect(a.nvars() == spec.nvars() && b.nvars() == spec.nvars(), errc::dimension_mismatch,
           "monomials do not match order's variable count");
    if (spec.elimination) {
        if (a[0] != b[0])
            return a[0] < b[0] ? std::strong_ordering::less : std::strong_ordering::greater;
        return detail::graded_compare(a, b, spec, 1);
    }
    return detail::graded_compare(a, b, spec, 0);
}

inline bool greater(const Monomial& a, const Monomial& b, const OrderSpec& spec) {
    return compare(a, b, spec) == std::strong_ordering::greater;
}

} // namespace curvegb
