#pragma once

#include "order.hpp"
#include "semigroup.hpp"

namespace curvegb {

// Order specs attached to a curve: variables x_0..x_n weighted by the
// generators, plus the elimination spec over (t, x_0..x_n) with t weighted 1
// and compared as a leading block.
inline OrderSpec ascending_order(const CurveInput& input) {
    return {input.all_generators(), Direction::ascending, false};
}

inline OrderSpec descending_order(const CurveInput& input) {
    return {input.all_generators(), Direction::descending, false};
}

inline OrderSpec elimination_order(const CurveInput& input) {
    std::vector<std::int64_t> w{1};
    for (auto g : input.all_generators()) w.push_back(g);
    return {std::move(w), Direction::ascending, true};
}

} // namespace curvegb
