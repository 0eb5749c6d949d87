#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "binomial.hpp"
#include "buchberger.hpp"
#include "closedform.hpp"
#include "curve_orders.hpp"
#include "errors.hpp"
#include "ladder.hpp"
#include "monomial.hpp"
#include "order.hpp"
#include "semigroup.hpp"
#include "toric.hpp"

namespace curvegb {

// ---------------------------------------------------------------------------
// Instance enumeration

// All validated inputs with m_0 <= max_m0, p <= max_p, every arithmetic
// entry <= max_arith and m_n <= max_mn, ordered by (m_0, p, step, m_n).
inline std::vector<CurveInput> enumerate_inputs(std::int64_t max_m0, std::int64_t max_p,
                                                std::int64_t max_arith, std::int64_t max_mn) {
    std::vector<CurveInput> out;
    for (std::int64_t m0 = 2; m0 <= max_m0; ++m0)
        for (std::int64_t p = 1; p <= max_p; ++p)
            for (std::int64_t step = 1; m0 + p * step <= max_arith; ++step) {
                std::vector<std::int64_t> arith;
                for (std::int64_t i = 0; i <= p; ++i) arith.push_back(m0 + i * step);
                for (std::int64_t mn = 1; mn <= max_mn; ++mn) {
                    try {
                        out.push_back(validate_input(arith, mn));
                    } catch (const Error&) {
                        // not a valid instance; skip
                    }
                }
            }
    return out;
}

// The (m_0, m_0+1; m_0-1) family over odd m_0 in [lo, hi].
inline std::vector<CurveInput> odd_shift_family(std::int64_t lo, std::int64_t hi) {
    std::vector<CurveInput> out;
    for (std::int64_t m0 = std::max<std::int64_t>(5, lo); m0 <= hi; ++m0) {
        if (m0 % 2 == 0) continue;
        out.push_back(validate_input({m0, m0 + 1}, m0 - 1));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Per-instance property suite

struct CheckOptions {
    int nf_samples = 500;       // ladder vs generic normal-form samples
    int pair_samples = 200;     // equal-weight pairs for check_second_main
    std::uint64_t seed = 0xC0FFEE5EEDULL;
    CompletionLimits limits = CompletionLimits::from_env();
};

struct InstanceResult {
    CurveInput input;
    std::vector<std::string> failures;
    std::size_t phi_size = 0, omega_size = 0, ps_size = 0, oracle_size = 0;
    int nf_checked = 0, pairs_checked = 0;

    bool ok() const { return failures.empty(); }
};

namespace verify_detail {

inline std::uint64_t instance_seed(const CurveInput& input, std::uint64_t base) {
    std::uint64_t h = 1469598103934665603ULL ^ base;
    auto mix = [&h](std::int64_t v) {
        h ^= static_cast<std::uint64_t>(v);
        h *= 1099511628211ULL;
    };
    for (auto g : input.all_generators()) mix(g);
    return h;
}

inline Monomial family_lead_ascending(const CurveParameters& P, const FamilyLabel& lab) {
    const auto nv = static_cast<std::size_t>(P.n()) + 1;
    Monomial m(nv);
    switch (lab.kind) {
    case FamilyKind::xi:
        m.add(static_cast<std::size_t>(lab.i), 1);
        m.add(static_cast<std::size_t>(lab.j), 1);
        break;
    case FamilyKind::phi:
        m.add(static_cast<std::size_t>(P.r + lab.i), 1);
        m.add(static_cast<std::size_t>(P.p()), static_cast<std::int32_t>(P.q));
        break;
    case FamilyKind::psi:
        m.add(static_cast<std::size_t>(P.r_prime + lab.j), 1);
        m.add(static_cast<std::size_t>(P.p()), static_cast<std::int32_t>(P.q_prime));
        m.add(static_cast<std::size_t>(P.n()), static_cast<std::int32_t>(P.upsilon - P.w));
        break;
    case FamilyKind::theta:
        m.add(static_cast<std::size_t>(P.n()), static_cast<std::int32_t>(P.upsilon));
        break;
    }
    return m;
}

// Descending-order leads: theta and psi flip to their x_0 side, xi and
// (for w > 0) phi keep the ascending lead.
inline Monomial family_lead_descending(const CurveParameters& P, const FamilyLabel& lab) {
    const auto nv = static_cast<std::size_t>(P.n()) + 1;
    Monomial m(nv);
    switch (lab.kind) {
    case FamilyKind::xi:
    case FamilyKind::phi:
        return family_lead_ascending(P, lab);
    case FamilyKind::psi:
        m.add(0, static_cast<std::int32_t>(P.nu - 1));
        m.add(static_cast<std::size_t>(lab.j), 1);
        break;
    case FamilyKind::theta:
        m.add(0, static_cast<std::int32_t>(P.mu));
        m.add(static_cast<std::size_t>(P.r_z), 1);
        m.add(static_cast<std::size_t>(P.p()), static_cast<std::int32_t>(P.q_z));
        break;
    }
    return m;
}

inline std::vector<FamilyLabel> full_labels(const CurveParameters& P) {
    std::vector<FamilyLabel> labels;
    for (std::int64_t i = 0; i <= P.p() - P.r; ++i) labels.push_back(FamilyLabel::phi(i));
    for (std::int64_t j = 0; j <= P.p() - P.r_prime; ++j) labels.push_back(FamilyLabel::psi(j));
    labels.push_back(FamilyLabel::theta());
    for (std::int64_t i = 1; i <= P.p() - 1; ++i)
        for (std::int64_t j = i; j <= P.p() - 1; ++j) labels.push_back(FamilyLabel::xi(i, j));
    return labels;
}

} // namespace verify_detail

// Both orders pick the expected lead of every family member: the ascending
// order keeps the construction's lead; the descending order flips theta and
// psi to their x_0 side (phi is only pinned down when w > 0, theta when
// z >= 1).
inline void check_lead_regression(const CurveParameters& P, std::vector<std::string>& failures) {
    const OrderSpec asc = ascending_order(P.input);
    const OrderSpec desc = descending_order(P.input);
    for (const FamilyLabel& lab : verify_detail::full_labels(P)) {
        Monomial want_asc = verify_detail::family_lead_ascending(P, lab);
        if (!(build_family(P, lab, asc).lead == want_asc))
            failures.push_back("ascending lead of " + lab.str() + " is not " + render(want_asc));
        if (lab.kind == FamilyKind::phi && P.w == 0) continue;
        if (lab.kind == FamilyKind::theta && P.z == 0) continue;
        Monomial want_desc = verify_detail::family_lead_descending(P, lab);
        if (!(build_family(P, lab, desc).lead == want_desc))
            failures.push_back("descending lead of " + lab.str() + " is not " + render(want_desc));
    }
}

// Exact uniqueness of representations gamma = a*m_0 + g_s + b*m_n over
// (s,b) in V-W, for every gamma in the semigroup up to apery-max + m_0:
// per residue class the smallest representation value must be the Apery
// element and the second-smallest must exceed the bound.
inline void check_unique_representations(const CurveParameters& P,
                                         std::vector<std::string>& failures) {
    const std::int64_t m0 = P.input.m0();
    const std::int64_t bound = P.gamma.max_apery() + m0;
    std::vector<std::vector<std::int64_t>> buckets(static_cast<std::size_t>(m0));
    const GridWindow win = P.window();
    for (std::int64_t s = 0; s < P.u; ++s) {
        const std::int64_t gs = P.g_of(s);
        for (std::int64_t b = 0; b < P.upsilon; ++b) {
            if (win.in_w(s, b)) continue;
            const std::int64_t v = gs + b * P.input.mn;
            buckets[static_cast<std::size_t>(v % m0)].push_back(v);
        }
    }
    for (std::int64_t rho = 0; rho < m0; ++rho) {
        auto& vals = buckets[static_cast<std::size_t>(rho)];
        std::sort(vals.begin(), vals.end());
        const std::int64_t least = P.gamma.apery(rho);
        if (vals.empty() || vals.front() != least) {
            failures.push_back("residue " + std::to_string(rho) +
                               ": least representation misses the Apery element " +
                               std::to_string(least));
            continue;
        }
        if (vals.size() >= 2 && vals[1] <= bound)
            failures.push_back("residue " + std::to_string(rho) + ": value " +
                               std::to_string(vals[1]) + " has two representations");
    }
}

namespace verify_detail {

// One pass of the weight-DP pair enumeration below, bounded by weight_cap.
inline std::vector<std::pair<Monomial, Monomial>> equal_weight_pairs_capped(
    const CurveParameters& P, std::size_t want, std::int64_t weight_cap) {
    const std::vector<std::int64_t> gens = P.input.all_generators();
    const auto nv = gens.size();
    constexpr std::size_t per_weight_cap = 64;

    // reach[k][w]: w is a nonnegative combination of gens[k..].
    std::vector<std::vector<char>> reach(nv + 1,
                                         std::vector<char>(static_cast<std::size_t>(weight_cap) + 1, 0));
    reach[nv][0] = 1;
    for (std::size_t k = nv; k-- > 0;) {
        for (std::int64_t wv = 0; wv <= weight_cap; ++wv) {
            if (reach[k + 1][static_cast<std::size_t>(wv)] ||
                (wv >= gens[k] && reach[k][static_cast<std::size_t>(wv - gens[k])]))
                reach[k][static_cast<std::size_t>(wv)] = 1;
        }
    }

    std::vector<std::pair<Monomial, Monomial>> pairs;
    std::vector<std::int32_t> exps(nv, 0);
    std::vector<Monomial> level;

    auto dfs = [&](auto&& self, std::size_t k, std::int64_t rest) -> void {
        if (level.size() >= per_weight_cap) return;
        if (k + 1 == nv) {
            if (rest % gens[k] != 0) return;
            exps[k] = static_cast<std::int32_t>(rest / gens[k]);
            bool mid = false;
            for (std::size_t i = 1; i + 1 < nv; ++i)
                if (exps[i] > 0) mid = true;
            if (mid) {
                Monomial m(nv);
                for (std::size_t i = 0; i < nv; ++i) m.add(i, exps[i]);
                level.push_back(std::move(m));
            }
            exps[k] = 0;
            return;
        }
        for (std::int64_t e = 0; e * gens[k] <= rest; ++e) {
            if (!reach[k + 1][static_cast<std::size_t>(rest - e * gens[k])]) continue;
            exps[k] = static_cast<std::int32_t>(e);
            self(self, k + 1, rest - e * gens[k]);
            if (level.size() >= per_weight_cap) break;
        }
        exps[k] = 0;
    };

    for (std::int64_t wv = 1; wv <= weight_cap && pairs.size() < want; ++wv) {
        if (!reach[0][static_cast<std::size_t>(wv)]) continue;
        level.clear();
        dfs(dfs, 0, wv);
        for (std::size_t i = 0; i < level.size() && pairs.size() < want; ++i)
            for (std::size_t j = i + 1; j < level.size() && pairs.size() < want; ++j)
                pairs.emplace_back(level[i], level[j]);
    }
    return pairs;
}

} // namespace verify_detail

// Deterministic weight-DP enumeration of equal-weight monomial pairs, both
// with mid-support >= 1: weights are visited in increasing order; for each
// weight the solutions of sum(e_i * m_i) = W are listed in lexicographic
// exponent order (pruned by a reachability table) and paired. The weight cap
// starts small and widens only if too few pairs turn up.
inline std::vector<std::pair<Monomial, Monomial>> equal_weight_pairs(const CurveParameters& P,
                                                                     std::size_t want) {
    for (std::int64_t cap = 1 << 11; cap <= (1 << 15); cap <<= 2) {
        auto pairs = verify_detail::equal_weight_pairs_capped(P, want, cap);
        if (pairs.size() >= want) return pairs;
    }
    fail(errc::internal, "weight enumeration found too few pairs");
}

// Ladder normal forms agree with the generic engine on random monomials
// (exponents <= 6 per variable, mid-support >= 1).
inline void check_ladder_agreement(const CurveParameters& P, const BasisSet& phi, int samples,
                                   std::uint64_t seed, std::vector<std::string>& failures,
                                   int& checked) {
    const auto nv = static_cast<std::size_t>(P.n()) + 1;
    std::mt19937_64 rng(seed);
    for (int it = 0; it < samples; ++it) {
        Monomial alpha(nv);
        std::int64_t mid = 0;
        do {
            alpha = Monomial(nv);
            mid = 0;
            for (std::size_t i = 0; i < nv; ++i) {
                auto e = static_cast<std::int32_t>(rng() % 7);
                alpha.add(i, e);
                if (i >= 1 && i + 1 < nv) mid += e;
            }
        } while (mid == 0);
        try {
            LadderState st = normal_form_ladder(P, alpha);
            Monomial generic = normal_form(alpha, phi);
            if (!(to_monomial(st, P) == generic)) {
                failures.push_back("ladder normal form of " + render(alpha) + " is " +
                                   render(to_monomial(st, P)) + " but the generic engine gives " +
                                   render(generic));
                return;
            }
        } catch (const Error& e) {
            failures.push_back("ladder failed on " + render(alpha) + ": " + e.what());
            return;
        }
        ++checked;
    }
}

// check_second_main must hold on every enumerated equal-weight pair.
inline void check_congruence_pairs(const CurveParameters& P, const BasisSet& phi, int samples,
                                   std::vector<std::string>& failures, int& checked) {
    auto pairs = equal_weight_pairs(P, static_cast<std::size_t>(samples));
    for (const auto& [alpha, beta] : pairs) {
        if (!check_second_main(phi, alpha, beta)) {
            failures.push_back("equal-weight pair " + render(alpha) + " , " + render(beta) +
                               " did not reduce to a common normal form");
            return;
        }
        ++checked;
    }
}

// Full property suite for one instance: parameters, lead regression under
// both orders, Phi a minimal Groebner basis whose reduction matches the
// elimination oracle, the closure of Omega matching the same oracle, the
// Patil-Singh set a Groebner basis under the ascending order, uniqueness of
// window representations, ladder agreement, and equal-weight congruence.
inline InstanceResult check_instance(const CurveInput& input, const CheckOptions& opt = {}) {
    InstanceResult res;
    res.input = input;
    auto& bad = res.failures;
    try {
        const CurveParameters P = compute_parameters(input);
        const OrderSpec asc = ascending_order(input);

        check_lead_regression(P, bad);

        NamedBasis phi = assemble(P, BasisKind::phi, asc);
        res.phi_size = phi.basis.size();
        if (auto w = groebner_witness(phi.basis)) {
            bad.push_back("Phi is not a Groebner basis: S(" + phi.label_of(w->i).str() + ", " +
                          phi.label_of(w->j).str() + ") leaves " + render(w->remainder));
        } else if (auto v = minimality_violation(phi.basis)) {
            bad.push_back("Phi is not minimal: lead of " + phi.label_of(v->divisor).str() +
                          " divides lead of " + phi.label_of(v->offender).str());
        }

        BasisSet oracle = defining_ideal_gb(input, opt.limits);
        res.oracle_size = oracle.size();
        if (bad.empty()) {
            // Phi just passed the witness check, so skip re-verification.
            BasisSet phi_reduced = reduced_basis_of_groebner(phi.basis);
            if (!phi_reduced.same_elements(oracle))
                bad.push_back("reduced Phi differs from the elimination oracle");
        }

        NamedBasis omega = assemble(P, BasisKind::omega, asc);
        res.omega_size = omega.basis.size();
        BasisSet omega_closed = buchberger_close(omega.basis, opt.limits);
        if (!reduced_basis_of_groebner(omega_closed).same_elements(oracle))
            bad.push_back("the closure of Omega does not generate the defining ideal");

        NamedBasis ps = assemble(P, BasisKind::patil_singh, asc);
        res.ps_size = ps.basis.size();
        if (auto w = groebner_witness(ps.basis))
            bad.push_back("Patil-Singh set fails ascending Groebner check: S(" +
                          ps.label_of(w->i).str() + ", " + ps.label_of(w->j).str() + ") leaves " +
                          render(w->remainder));

        check_unique_representations(P, bad);
        if (bad.empty())
            check_ladder_agreement(P, phi.basis, opt.nf_samples,
                                   verify_detail::instance_seed(input, opt.seed), bad,
                                   res.nf_checked);
        if (bad.empty())
            check_congruence_pairs(P, phi.basis, opt.pair_samples, bad, res.pairs_checked);
    } catch (const Error& e) {
        bad.push_back(std::string("error [") + e.name() + "]: " + e.what());
    }
    return res;
}

// The (m_0, m_0+1; m_0-1) family: closed-form parameters, Omega fails the
// ascending Groebner check, Phi passes and is minimal, and reduced Phi
// matches the elimination oracle.
inline InstanceResult check_odd_shift_instance(const CurveInput& input,
                                               const CheckOptions& opt = {}) {
    InstanceResult res;
    res.input = input;
    auto& bad = res.failures;
    try {
        const CurveParameters P = compute_parameters(input);
        const std::int64_t m0 = input.m0();
        auto want = [&bad](const std::string& name, std::int64_t got, std::int64_t expd) {
            if (got != expd)
                bad.push_back(name + " = " + std::to_string(got) + ", expected " +
                              std::to_string(expd));
        };
        want("u", P.u, (m0 + 1) / 2);
        want("upsilon", P.upsilon, (m0 + 1) / 2);
        want("lambda", P.lambda, 2);
        want("mu", P.mu, 0);
        want("w", P.w, (m0 - 1) / 2);
        want("z", P.z, (m0 - 1) / 2);

        const OrderSpec asc = ascending_order(input);
        NamedBasis omega = assemble(P, BasisKind::omega, asc);
        res.omega_size = omega.basis.size();
        if (is_groebner(omega.basis))
            bad.push_back("Omega unexpectedly passes the ascending Groebner check");

        NamedBasis phi = assemble(P, BasisKind::phi, asc);
        res.phi_size = phi.basis.size();
        if (!is_groebner(phi.basis))
            bad.push_back("Phi fails the ascending Groebner check");
        else if (!is_minimal_gb(phi.basis))
            bad.push_back("Phi is not minimal");
        else {
            BasisSet oracle = defining_ideal_gb(input, opt.limits);
            res.oracle_size = oracle.size();
            if (!reduced_basis_of_groebner(phi.basis).same_elements(oracle))
                bad.push_back("reduced Phi differs from the elimination oracle");
        }
    } catch (const Error& e) {
        bad.push_back(std::string("error [") + e.name() + "]: " + e.what());
    }
    return res;
}

} // namespace curvegb
