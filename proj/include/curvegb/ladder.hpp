#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "binomial.hpp"
#include "closedform.hpp"
#include "curve_orders.hpp"
#include "errors.hpp"
#include "monomial.hpp"
#include "semigroup.hpp"

namespace curvegb {

// Grid state x_0^h * x_s * x_p^l * x_n^d of the ladder reduction. s in [1,p]
// marks the distinguished mid variable (s = p means one extra x_p beyond
// x_p^l); s = 0, l = 0 encodes a state whose mid part was fully consumed.
// The grid coordinate of the state is (l*p + s, d), with g_0 = 0 at s = 0.
// `trace` lists every single rule application, in order.
struct LadderState {
    std::int64_t h = 0, s = 0, l = 0, d = 0;
    std::vector<std::string> trace;

    friend bool operator==(const LadderState& a, const LadderState& b) {
        return a.h == b.h && a.s == b.s && a.l == b.l && a.d == b.d;
    }
};

inline std::int64_t grid_index(const LadderState& st, const CurveParameters& P) {
    return st.l * P.p() + st.s;
}

inline Monomial to_monomial(const LadderState& st, const CurveParameters& P) {
    Monomial e(static_cast<std::size_t>(P.n()) + 1);
    e.add(0, static_cast<std::int32_t>(st.h));
    e.add(static_cast<std::size_t>(P.p()), static_cast<std::int32_t>(st.l));
    if (st.s > 0) e.add(static_cast<std::size_t>(st.s), 1);
    e.add(static_cast<std::size_t>(P.n()), static_cast<std::int32_t>(st.d));
    return e;
}

inline bool in_v_minus_w(const LadderState& st, const CurveParameters& P) {
    return P.window().in_v_minus_w(grid_index(st, P), st.d);
}

namespace ladder_detail {

// One rewrite e <- e / lead * tail by a named closed-form rule; every
// application is a legal reduction step modulo the Phi family.
inline void apply_rule(Monomial& e, const CurveParameters& P, const FamilyLabel& label,
                       const OrderSpec& asc, std::vector<std::string>& trace,
                       std::int64_t times = 1) {
    if (times <= 0) return;
    Binomial rule = build_family(P, label, asc);
    for (std::int64_t k = 0; k < times; ++k) {
        expect(rule.lead.divides(e), errc::internal,
               "ladder rule " + label.str() + " does not divide the current monomial");
        e.replace(rule.lead, rule.tail);
        trace.push_back(label.str());
    }
}

// Greedy xi-recombination: repeatedly merge the two largest mid variables
// (indexes 1..p-1, counted with multiplicity) until at most one remains.
// The resulting grid shape is independent of the merge order.
inline void collapse(Monomial& e, const CurveParameters& P, const OrderSpec& asc,
                     std::vector<std::string>& trace) {
    const std::int64_t p = P.p();
    while (true) {
        std::int64_t j = 0, i = 0;
        for (std::int64_t idx = p - 1; idx >= 1; --idx)
            if (e[static_cast<std::size_t>(idx)] >= 1) {
                j = idx;
                break;
            }
        if (j == 0) return;
        if (e[static_cast<std::size_t>(j)] >= 2) {
            i = j;
        } else {
            for (std::int64_t idx = j - 1; idx >= 1; --idx)
                if (e[static_cast<std::size_t>(idx)] >= 1) {
                    i = idx;
                    break;
                }
            if (i == 0) return; // single mid left
        }
        apply_rule(e, P, FamilyLabel::xi(i, j), asc, trace);
    }
}

inline std::int64_t iteration_cap(const CurveParameters& P) {
    return 10 * (P.u + P.upsilon + P.q + 1);
}

inline LadderState read_grid(const Monomial& e, const CurveParameters& P,
                             std::vector<std::string> trace) {
    const auto p = static_cast<std::size_t>(P.p());
    const auto n = static_cast<std::size_t>(P.n());
    std::int64_t mid_index = 0, mid_count = 0;
    for (std::size_t i = 1; i < p; ++i)
        if (e[i] > 0) {
            mid_index = static_cast<std::int64_t>(i);
            mid_count += e[i];
        }
    expect(mid_count <= 1, errc::internal, "grid state expects at most one strict mid variable");
    LadderState st;
    st.h = e[0];
    st.d = e[n];
    if (mid_count == 1) {
        st.s = mid_index;
        st.l = e[p];
    } else if (e[p] >= 1) {
        st.s = static_cast<std::int64_t>(p);
        st.l = e[p] - 1;
    } else {
        st.s = 0;
        st.l = 0;
    }
    st.trace = std::move(trace);
    return st;
}

} // namespace ladder_detail

// First reduction ladder: theta until the x_n exponent drops below upsilon,
// xi-recombination into grid shape, then blocks of phi_{p-r} followed by
// theta and recombination until l <= q. Output satisfies l <= q, d < upsilon,
// s in [1,p], h >= e_0, with the weighted degree conserved.
inline LadderState reduce_lemma1(const CurveParameters& P, const Monomial& alpha) {
    using namespace ladder_detail;
    const auto n = static_cast<std::size_t>(P.n());
    expect(alpha.nvars() == n + 1, errc::dimension_mismatch,
           "monomial does not match the curve's variable count");
    std::int64_t mid = 0;
    for (std::size_t i = 1; i <= static_cast<std::size_t>(P.p()); ++i) mid += alpha[i];
    expect(mid >= 1, errc::unsupported_input, "ladder input needs mid-support at least 1");

    const OrderSpec asc = ascending_order(P.input);
    const std::int64_t weight_in = weighted_degree(alpha, asc);

    Monomial e = alpha;
    std::vector<std::string> trace;
    apply_rule(e, P, FamilyLabel::theta(), asc, trace, e[n] / P.upsilon);
    collapse(e, P, asc, trace);
    LadderState st = read_grid(e, P, std::move(trace));

    std::int64_t rounds = 0;
    while (st.l > P.q) {
        expect(++rounds <= iteration_cap(P), errc::internal, "lemma-1 ladder exceeded its cap");
        std::int64_t a = st.l / (P.q + 1);
        apply_rule(e, P, FamilyLabel::phi(P.p() - P.r), asc, st.trace, a);
        apply_rule(e, P, FamilyLabel::theta(), asc, st.trace, e[n] / P.upsilon);
        collapse(e, P, asc, st.trace);
        st = read_grid(e, P, std::move(st.trace));
    }

    expect(st.d < P.upsilon && st.s >= 1 && st.h >= alpha[0], errc::internal,
           "lemma-1 output contract violated");
    expect(weighted_degree(e, asc) == weight_in, errc::internal,
           "lemma-1 changed the weighted degree");
    return st;
}

// Second ladder (requires W nonempty): while l > q' and d >= upsilon-w, apply
// psi_{p-r'} min(a, a') times and recombine; d strictly decreases. The input
// is a lemma-1 output; the result additionally has l <= q' or d < upsilon-w.
inline LadderState reduce_lemma2(const CurveParameters& P, LadderState st) {
    using namespace ladder_detail;
    expect(!P.w_empty(), errc::precondition_violation, "reduce_lemma2 requires W nonempty");
    expect(st.l <= P.q && st.d < P.upsilon && st.s >= 1 && st.s <= P.p(),
           errc::precondition_violation, "reduce_lemma2 expects a lemma-1 output state");

    const OrderSpec asc = ascending_order(P.input);
    Monomial e = to_monomial(st, P);
    const std::int64_t weight_in = weighted_degree(e, asc);
    const std::int64_t h_in = st.h;

    std::int64_t rounds = 0;
    while (st.l > P.q_prime && st.d >= P.upsilon - P.w) {
        expect(++rounds <= iteration_cap(P), errc::internal, "lemma-2 ladder exceeded its cap");
        std::int64_t a = st.d / (P.upsilon - P.w);
        std::int64_t a2 = st.l / (P.q_prime + 1);
        std::int64_t k = std::min(a, a2);
        apply_rule(e, P, FamilyLabel::psi(P.p() - P.r_prime), asc, st.trace, k);
        collapse(e, P, asc, st.trace);
        st = read_grid(e, P, std::move(st.trace));
    }

    expect(st.l <= P.q && st.d < P.upsilon && st.s >= 1 && st.h >= h_in, errc::internal,
           "lemma-2 output contract violated");
    expect(weighted_degree(to_monomial(st, P), asc) == weight_in, errc::internal,
           "lemma-2 changed the weighted degree");
    return st;
}

// Chain of psi applications for the q' = 0 shape x_0^h x_s x_n^d: applies
// psi_{s - i*r'} for i = 1..k with k = min(a, b), landing in V - W. States
// already in V - W pass through unchanged.
inline LadderState reduce_xs(const CurveParameters& P, LadderState st) {
    using namespace ladder_detail;
    expect(!P.w_empty() && P.q_prime == 0, errc::precondition_violation,
           "reduce_xs requires W nonempty and q' = 0");
    expect(st.l == 0 && st.d < P.upsilon && st.s >= 1 && st.s <= P.p(),
           errc::precondition_violation, "reduce_xs expects state x_0^h x_s x_n^d with d < upsilon");
    if (P.window().in_v_minus_w(st.s, st.d)) return st;

    const OrderSpec asc = ascending_order(P.input);
    Monomial e = to_monomial(st, P);
    const std::int64_t weight_in = weighted_degree(e, asc);
    const std::int64_t h_in = st.h;
    const std::int64_t rp = P.r_prime, uw = P.upsilon - P.w;

    // In W here: s >= u-z = r' and d >= upsilon-w.
    std::int64_t a = st.s / rp;
    std::int64_t b = st.d / uw;
    std::int64_t k = std::min(a, b);
    std::int64_t cur = st.s;
    for (std::int64_t i = 1; i <= k; ++i) {
        apply_rule(e, P, FamilyLabel::psi(cur - rp), asc, st.trace);
        cur -= rp;
    }
    st = read_grid(e, P, std::move(st.trace));

    expect(in_v_minus_w(st, P), errc::internal, "reduce_xs did not land in V - W");
    expect(st.h >= h_in && weighted_degree(e, asc) == weight_in, errc::internal,
           "reduce_xs output contract violated");
    return st;
}

// Full ladder normal form: lemma 1, then the case analysis on the grid
// coordinate (with lemma 2 and reduce_xs when W is nonempty). The result is
// the grid state of the unique normal form modulo Phi; its coordinate lies
// in V - W and the weighted degree of the input is conserved.
inline LadderState normal_form_ladder(const CurveParameters& P, const Monomial& alpha) {
    using namespace ladder_detail;
    const OrderSpec asc = ascending_order(P.input);
    const std::int64_t weight_in = weighted_degree(alpha, asc);

    LadderState st = reduce_lemma1(P, alpha);

    auto apply_phi_block = [&](LadderState state) {
        // Entry: l = q and s >= r; phi_{s-r} consumes the whole x_s x_p^q part.
        expect(state.l == P.q && state.s >= P.r, errc::internal,
               "phi step expects l = q and s >= r");
        Monomial e = to_monomial(state, P);
        apply_rule(e, P, FamilyLabel::phi(state.s - P.r), asc, state.trace);
        return std::pair<Monomial, LadderState>(e, read_grid(e, P, std::move(state.trace)));
    };

    if (P.w_empty()) {
        if (grid_index(st, P) >= P.u) {
            auto [e, next] = apply_phi_block(std::move(st));
            if (next.d >= P.upsilon) {
                apply_rule(e, P, FamilyLabel::theta(), asc, next.trace);
                next = read_grid(e, P, std::move(next.trace));
            }
            st = next;
        }
    } else {
        st = reduce_lemma2(P, st);
        std::int64_t idx = grid_index(st, P);
        if (idx >= P.u - P.z) {
            if (st.d < P.upsilon - P.w) {
                if (idx >= P.u) {
                    auto [e, next] = apply_phi_block(std::move(st));
                    (void)e;
                    st = std::move(next);
                    if (!in_v_minus_w(st, P)) {
                        expect(P.q_prime == 0, errc::internal,
                               "post-phi state outside V - W requires q' = 0");
                        st = reduce_xs(P, std::move(st));
                    }
                }
            } else {
                expect(st.l == P.q_prime && st.s >= P.r_prime, errc::internal,
                       "case 2c expects l = q' and s >= r'");
                if (P.q_z == 0 && P.epsilon == 0) {
                    if (st.s >= P.r) {
                        auto [e, next] = apply_phi_block(std::move(st));
                        apply_rule(e, P, FamilyLabel::theta(), asc, next.trace);
                        collapse(e, P, asc, next.trace);
                        st = read_grid(e, P, std::move(next.trace));
                    } else {
                        Monomial e = to_monomial(st, P);
                        apply_rule(e, P, FamilyLabel::psi(st.s - P.r_prime), asc, st.trace);
                        st = read_grid(e, P, std::move(st.trace));
                    }
                } else if (P.q_prime == 0) {
                    st = reduce_xs(P, std::move(st));
                } else {
                    Monomial e = to_monomial(st, P);
                    apply_rule(e, P, FamilyLabel::psi(st.s - P.r_prime), asc, st.trace);
                    st = read_grid(e, P, std::move(st.trace));
                }
            }
        }
    }

    expect(in_v_minus_w(st, P), errc::internal, "ladder normal form is outside V - W");
    expect(weighted_degree(to_monomial(st, P), asc) == weight_in, errc::internal,
           "ladder normal form changed the weighted degree");
    expect(st.h >= alpha[0], errc::internal, "ladder normal form decreased h");
    return st;
}

// Equal-weight congruence test: alpha and beta have the same normal form
// modulo Phi exactly when alpha - beta lies in the defining ideal. The
// overload taking a prebuilt Phi lets callers amortize its construction.
inline bool check_second_main(const BasisSet& phi, const Monomial& alpha, const Monomial& beta) {
    const OrderSpec& asc = phi.spec();
    expect(weighted_degree(alpha, asc) == weighted_degree(beta, asc), errc::unequal_weights,
           "check_second_main needs monomials of equal weighted degree");
    if (alpha == beta) return true;
    return !normal_form(Binomial::oriented(alpha, beta, asc), phi).has_value();
}

inline bool check_second_main(const CurveParameters& P, const Monomial& alpha,
                              const Monomial& beta) {
    return check_second_main(assemble(P, BasisKind::phi, ascending_order(P.input)).basis, alpha,
                             beta);
}

} // namespace curvegb
