#pragma once

#include <cstdlib>
#include <limits>
#include <optional>
#include <queue>
#include <tuple>
#include <vector>

#include "binomial.hpp"
#include "errors.hpp"
#include "monomial.hpp"
#include "order.hpp"

namespace curvegb {

// S-polynomial of two oriented binomials. For binomials it is again a
// binomial, (lcm/lead_g)*tail_g - (lcm/lead_f)*tail_f, or zero when the two
// tail multiples collide; the result is re-oriented under the order.
inline std::optional<Binomial> s_polynomial(const Binomial& f, const Binomial& g,
                                            const OrderSpec& spec) {
    Monomial l = Monomial::lcm(f.lead, g.lead);
    Monomial a = l;
    a.replace(f.lead, f.tail);
    Monomial b = l;
    b.replace(g.lead, g.tail);
    if (a == b) return std::nullopt;
    return Binomial::oriented(std::move(b), std::move(a), spec);
}

// Fully reduces a monomial: while some basis lead divides it, replace it by
// the matching tail multiple (first dividing element in stored order). Each
// step strictly descends inside one finite weight class, so this terminates.
inline Monomial normal_form(Monomial m, const BasisSet& basis) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& g : basis) {
            if (g.lead.divides(m)) {
                m.replace(g.lead, g.tail);
                changed = true;
                break;
            }
        }
    }
    return m;
}

// Normal form of a binomial: both monomials reduce independently; a collision
// means the binomial reduces to zero (nullopt).
inline std::optional<Binomial> normal_form(const Binomial& f, const BasisSet& basis) {
    Monomial a = normal_form(f.lead, basis);
    Monomial b = normal_form(f.tail, basis);
    if (a == b) return std::nullopt;
    return Binomial::oriented(std::move(a), std::move(b), basis.spec());
}

struct SPairWitness {
    std::size_t i = 0, j = 0; // element indexes of the failing pair
    Binomial remainder;       // irreducible nonzero normal form of S(i, j)
};

namespace detail {

// Pairs in normal-selection order: weighted degree of the leads' lcm first,
// then insertion indexes. Deterministic, and shared by the completion loop
// and the Groebner check so witnesses are reproducible.
inline std::vector<std::tuple<std::int64_t, std::size_t, std::size_t>>
sorted_pairs(const BasisSet& basis) {
    std::vector<std::tuple<std::int64_t, std::size_t, std::size_t>> pairs;
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            pairs.emplace_back(
                weighted_degree(Monomial::lcm(basis[i].lead, basis[j].lead), basis.spec()), i, j);
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

} // namespace detail

// First failing S-pair (normal-selection order) with its irreducible
// remainder, or nullopt when every S-polynomial reduces to zero.
inline std::optional<SPairWitness> groebner_witness(const BasisSet& basis) {
    for (auto [deg, i, j] : detail::sorted_pairs(basis)) {
        (void)deg;
        auto s = s_polynomial(basis[i], basis[j], basis.spec());
        if (!s) continue;
        if (auto rem = normal_form(*s, basis)) return SPairWitness{i, j, std::move(*rem)};
    }
    return std::nullopt;
}

inline bool is_groebner(const BasisSet& basis) { return !groebner_witness(basis).has_value(); }

struct CompletionLimits {
    std::size_t max_basis = 10000;
    std::int64_t max_weight = std::numeric_limits<std::int64_t>::max();

    // Environment override for the element cap, read by the CLI and tests.
    static CompletionLimits from_env() {
        CompletionLimits lim;
        if (const char* v = std::getenv("CURVE_GB_MAX_BASIS")) {
            char* end = nullptr;
            long long parsed = std::strtoll(v, &end, 10);
            expect(end && *end == '\0' && parsed > 0, errc::unsupported_input,
                   "CURVE_GB_MAX_BASIS must be a positive integer");
            lim.max_basis = static_cast<std::size_t>(parsed);
        }
        return lim;
    }
};

// Buchberger completion with normal selection. The coprime-leads (product)
// criterion is the only pruning applied.
inline BasisSet buchberger_close(const BasisSet& start, const CompletionLimits& limits = {}) {
    BasisSet g(start.spec());
    for (const auto& b : start) g.add(b);

    using Key = std::tuple<std::int64_t, std::size_t, std::size_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        std::int64_t deg =
            weighted_degree(Monomial::lcm(g[i].lead, g[j].lead), g.spec());
        expect(deg <= limits.max_weight, errc::resource_limit,
               "completion exceeded the weighted-degree cap");
        queue.emplace(deg, i, j);
    };
    for (std::size_t j = 1; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

    while (!queue.empty()) {
        auto [deg, i, j] = queue.top();
        (void)deg;
        queue.pop();
        if (Monomial::coprime(g[i].lead, g[j].lead)) continue;
        auto s = s_polynomial(g[i], g[j], g.spec());
        if (!s) continue;
        auto rem = normal_form(*s, g);
        if (!rem) continue;
        g.add(std::move(*rem));
        expect(g.size() <= limits.max_basis, errc::resource_limit,
               "completion exceeded the basis-size cap");
        std::size_t k = g.size() - 1;
        for (std::size_t t = 0; t < k; ++t) push_pair(t, k);
    }
    return g;
}

struct DivisibilityViolation {
    std::size_t divisor = 0, offender = 0; // lead(divisor) divides lead(offender)
};

// First pair of distinct elements whose leads divide one another; nullopt
// when the basis is minimal (caller guarantees it is a Groebner basis).
inline std::optional<DivisibilityViolation> minimality_violation(const BasisSet& basis) {
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (i != j && basis[i].lead.divides(basis[j].lead))
                return DivisibilityViolation{i, j};
    return std::nullopt;
}

inline bool is_minimal_gb(const BasisSet& basis) {
    return !minimality_violation(basis).has_value();
}

// Reduction step of reduced_basis, for input already known to be a Groebner
// basis (e.g. fresh completion output): minimizes leads, then reduces every
// tail modulo the kept elements.
inline BasisSet reduced_basis_of_groebner(const BasisSet& basis) {
    std::vector<bool> kept(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !kept[j]) continue;
            if (basis[j].lead.divides(basis[i].lead)) {
                kept[i] = false;
                break;
            }
        }
    }

    BasisSet minimal(basis.spec());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (kept[i]) minimal.add(basis[i]);

    BasisSet reduced(basis.spec());
    for (const auto& g : minimal) {
        Monomial tail = normal_form(g.tail, minimal);
        reduced.add(Binomial::oriented(g.lead, std::move(tail), basis.spec()));
    }

    BasisSet canonical(basis.spec());
    for (auto& b : reduced.sorted_elements()) canonical.add(std::move(b));
    return canonical;
}

// The unique reduced Groebner basis. Rejects input that is not a Groebner
// basis.
inline BasisSet reduced_basis(const BasisSet& basis) {
    if (auto w = groebner_witness(basis))
        fail(errc::not_a_groebner_basis,
             "S-pair (" + std::to_string(w->i) + ", " + std::to_string(w->j) +
                 ") leaves remainder " + render(w->remainder));
    return reduced_basis_of_groebner(basis);
}

} // namespace curvegb
