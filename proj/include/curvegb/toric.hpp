#pragma once

#include <cstdint>
#include <vector>

#include "binomial.hpp"
#include "buchberger.hpp"
#include "curve_orders.hpp"
#include "errors.hpp"
#include "monomial.hpp"
#include "semigroup.hpp"

namespace curvegb {

// The kernel presentation: variables (t, x_0..x_n), generators x_i - t^(m_i),
// ordered so that t^(m_i) leads. Eliminating t yields the defining ideal of
// the monomial curve from first principles.
struct EliminationProblem {
    OrderSpec spec;
    BasisSet generators;
};

inline EliminationProblem make_elimination_problem(const CurveInput& input) {
    OrderSpec spec = elimination_order(input);
    BasisSet gens(spec);
    auto weights = input.all_generators();
    for (std::size_t i = 0; i < weights.size(); ++i) {
        Monomial lead(spec.nvars()), tail(spec.nvars());
        lead.add(0, static_cast<std::int32_t>(weights[i]));
        tail.add(i + 1, 1);
        gens.add(Binomial::oriented(std::move(lead), std::move(tail), spec));
    }
    return {std::move(spec), std::move(gens)};
}

// Reduced Groebner basis of the defining ideal P under the plain ascending
// weighted order: close the elimination presentation, keep the t-free
// elements (a Groebner basis of the elimination ideal, since the order
// restricted to the x-block is exactly the ascending spec), then interreduce.
inline BasisSet defining_ideal_gb(const CurveInput& input, const CompletionLimits& limits = {}) {
    EliminationProblem prob = make_elimination_problem(input);
    BasisSet closed = buchberger_close(prob.generators, limits);

    OrderSpec xspec = ascending_order(input);
    BasisSet projected(xspec);
    for (const auto& b : closed) {
        if (b.lead[0] != 0 || b.tail[0] != 0) continue;
        Monomial lead(xspec.nvars()), tail(xspec.nvars());
        for (std::size_t i = 1; i < b.lead.nvars(); ++i) {
            lead.add(i - 1, b.lead[i]);
            tail.add(i - 1, b.tail[i]);
        }
        projected.add(Binomial::oriented(std::move(lead), std::move(tail), xspec));
    }
    // The t-free part of an elimination-order Groebner basis is a Groebner
    // basis of the eliminated ideal, so reduction can skip re-verification.
    return reduced_basis_of_groebner(projected);
}

// Ideal membership of a binomial against a reduced Groebner basis of P.
// A difference of monomials with unequal weighted degrees is never in the
// weight-homogeneous P; equal monomials give the zero polynomial.
inline bool ideal_contains(const BasisSet& gb, const Monomial& a, const Monomial& b) {
    if (weighted_degree(a, gb.spec()) != weighted_degree(b, gb.spec())) return false;
    if (a == b) return true;
    return normal_form(a, gb) == normal_form(b, gb);
}

inline bool ideal_contains(const BasisSet& gb, const Binomial& f) {
    return ideal_contains(gb, f.lead, f.tail);
}

} // namespace curvegb
