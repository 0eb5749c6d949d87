#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace curvegb {

// Input curve: arithmetic part m_0 < m_1 < ... < m_p (constant difference)
// plus one free generator m_n, n = p+1. Constructed through validate_input.
struct CurveInput {
    std::vector<std::int64_t> arith; // m_0..m_p
    std::int64_t mn = 0;             // m_n

    int p() const { return static_cast<int>(arith.size()) - 1; }
    int n() const { return p() + 1; }
    std::int64_t m0() const { return arith.front(); }
    std::int64_t mp() const { return arith.back(); }
    std::int64_t diff() const { return arith.size() > 1 ? arith[1] - arith[0] : 0; }

    // weight of variable x_i (i in 0..n)
    std::int64_t weight(std::size_t i) const {
        expect(i < arith.size() + 1, errc::index_out_of_range, "generator index");
        return i < arith.size() ? arith[i] : mn;
    }

    std::vector<std::int64_t> all_generators() const {
        std::vector<std::int64_t> g(arith);
        g.push_back(mn);
        return g;
    }

    std::string describe() const {
        std::string s = "(";
        for (std::size_t i = 0; i < arith.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(arith[i]);
        }
        s += ";" + std::to_string(mn) + ")";
        return s;
    }

    friend bool operator==(const CurveInput&, const CurveInput&) = default;
};

// Membership oracle for a numerical semigroup <gens>, as the table of least
// elements per residue class mod gens[0] (shortest paths over residues).
// Residues unreachable when gcd(gens) > 1 are recorded as absent, so the
// table also serves subgroup-like parts such as the arithmetic span.
class SemigroupTable {
public:
    static constexpr std::int64_t unreachable = std::numeric_limits<std::int64_t>::max();

    static SemigroupTable build(const std::vector<std::int64_t>& gens) {
        expect(!gens.empty(), errc::too_short, "semigroup needs at least one generator");
        for (auto g : gens) expect(g > 0, errc::non_increasing, "generators must be positive");
        SemigroupTable t;
        t.modulus_ = gens[0];
        t.least_.assign(static_cast<std::size_t>(t.modulus_), unreachable);
        t.least_[0] = 0;
        using Node = std::pair<std::int64_t, std::int64_t>; // (value, residue)
        std::priority_queue<Node, std::vector<Node>, std::greater<>> pq;
        pq.emplace(0, 0);
        while (!pq.empty()) {
            auto [val, res] = pq.top();
            pq.pop();
            if (val != t.least_[static_cast<std::size_t>(res)]) continue;
            for (auto g : gens) {
                if (g % t.modulus_ == 0) continue; // cannot change the residue
                std::int64_t nval = checked_add(val, g);
                std::int64_t nres = nval % t.modulus_;
                if (nval < t.least_[static_cast<std::size_t>(nres)]) {
                    t.least_[static_cast<std::size_t>(nres)] = nval;
                    pq.emplace(nval, nres);
                }
            }
        }
        return t;
    }

    std::int64_t modulus() const { return modulus_; }

    bool complete() const {
        for (auto v : least_)
            if (v == unreachable) return false;
        return true;
    }

    bool contains(std::int64_t gamma) const {
        if (gamma < 0) return false;
        std::int64_t v = least_[static_cast<std::size_t>(gamma % modulus_)];
        return v != unreachable && gamma >= v;
    }

    // Least semigroup element congruent to `residue`; the Apery element.
    std::int64_t apery(std::int64_t residue) const {
        expect(residue >= 0 && residue < modulus_, errc::index_out_of_range, "residue");
        std::int64_t v = least_[static_cast<std::size_t>(residue)];
        expect(v != unreachable, errc::gcd_not_one, "residue class unreachable");
        return v;
    }

    std::int64_t max_apery() const {
        std::int64_t best = 0;
        for (auto v : least_)
            if (v != unreachable && v > best) best = v;
        return best;
    }

private:
    std::int64_t modulus_ = 1;
    std::vector<std::int64_t> least_;
};

// Total Apery table mod gens[0]; rejects generator sets whose gcd leaves
// residues unreachable.
inline SemigroupTable apery_table(const std::vector<std::int64_t>& gens) {
    SemigroupTable t = SemigroupTable::build(gens);
    expect(t.complete(), errc::gcd_not_one, "generators do not reach every residue class");
    return t;
}

inline CurveInput validate_input(std::vector<std::int64_t> arith, std::int64_t mn) {
    expect(arith.size() >= 2, errc::too_short,
           "arithmetic part needs at least two entries (p >= 1)");
    for (auto v : arith) expect(v > 0, errc::non_increasing, "generators must be positive");
    expect(mn > 0, errc::non_increasing, "free generator must be positive");
    for (std::size_t i = 1; i < arith.size(); ++i)
        expect(arith[i] > arith[i - 1], errc::non_increasing,
               "arithmetic part must be strictly increasing");
    std::int64_t d = arith[1] - arith[0];
    for (std::size_t i = 1; i < arith.size(); ++i)
        expect(arith[i] - arith[i - 1] == d, errc::not_arithmetic,
               "arithmetic part must have a constant difference");

    CurveInput input{std::move(arith), mn};
    auto gens = input.all_generators();
    std::int64_t g = 0;
    for (auto v : gens) g = std::gcd(g, v);
    expect(g == 1, errc::gcd_not_one, "generators must have gcd 1");

    // Minimal generation: no generator lies in the semigroup of the others.
    for (std::size_t k = 0; k < gens.size(); ++k) {
        std::vector<std::int64_t> others;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (i != k) others.push_back(gens[i]);
        if (SemigroupTable::build(others).contains(gens[k]))
            fail(errc::not_minimally_generated,
                 "generator " + std::to_string(gens[k]) + " is redundant");
    }
    return input;
}

// Degree split t = q*p + r with r in [1,p], and g = q*m_p + m_r.
// t = 0 takes the degenerate branch q = -1, r = p, g = 0.
struct DegreeSplit {
    std::int64_t t = 0, q = 0, r = 0, g = 0;
};

inline DegreeSplit degree_split(const CurveInput& input, std::int64_t t) {
    expect(t >= 0, errc::index_out_of_range, "degree must be nonnegative");
    std::int64_t p = input.p();
    if (t == 0) return {0, -1, p, 0};
    std::int64_t r = (t - 1) % p + 1;
    std::int64_t q = (t - r) / p;
    std::int64_t g = checked_add(checked_mul(q, input.mp()),
                                 input.weight(static_cast<std::size_t>(r)));
    return {t, q, r, g};
}

// The index grid V = [0,u) x [0,v) with the excluded corner
// W = [u-z,u) x [v-w,v); unique representations range over V - W.
struct GridWindow {
    std::int64_t u = 0, upsilon = 0, z = 0, w = 0;

    bool empty_w() const { return z == 0 || w == 0; }
    bool in_v(std::int64_t s, std::int64_t b) const {
        return s >= 0 && s < u && b >= 0 && b < upsilon;
    }
    bool in_w(std::int64_t s, std::int64_t b) const {
        return in_v(s, b) && s >= u - z && b >= upsilon - w;
    }
    bool in_v_minus_w(std::int64_t s, std::int64_t b) const {
        return in_v(s, b) && !in_w(s, b);
    }
};

// Closed interval of integer indexes; lo > hi encodes the empty interval.
struct IndexInterval {
    std::int64_t lo = 0, hi = -1;

    bool empty() const { return lo > hi; }
    bool contains(std::int64_t i) const { return i >= lo && i <= hi; }
    std::int64_t size() const { return empty() ? 0 : hi - lo + 1; }

    friend bool operator==(const IndexInterval&, const IndexInterval&) = default;
};

struct CurveParameters {
    CurveInput input;
    SemigroupTable gamma;       // full semigroup <m_0..m_p, m_n>
    SemigroupTable gamma_prime; // arithmetic span <m_0..m_p> (may be partial)

    std::int64_t u = 0, upsilon = 0, w = 0, z = 0;
    std::int64_t lambda = 0, mu = 0, nu = 0;
    std::int64_t q = 0, r = 0;             // split of u
    std::int64_t q_prime = 0, r_prime = 0; // split of u - z
    std::int64_t q_z = 0, r_z = 0;         // split of z (q_z = -1, r_z = p at z = 0)
    int epsilon = 0;
    std::int64_t g_u = 0, g_z = 0;
    IndexInterval I, J;

    std::int64_t p() const { return input.p(); }
    std::int64_t n() const { return input.n(); }
    GridWindow window() const { return {u, upsilon, z, w}; }
    bool w_empty() const { return window().empty_w(); }
    std::int64_t g_of(std::int64_t t) const { return degree_split(input, t).g; }
};

inline CurveParameters compute_parameters(const CurveInput& input) {
    CurveParameters P{input,
                      apery_table(input.all_generators()),
                      SemigroupTable::build(input.arith)};
    const std::int64_t m0 = input.m0();
    const std::int64_t p = input.p();

    // u = min{ t >= 0 : g_t - m_0 in Gamma }. Membership is monotone in the
    // value, so the loop is bounded by the Apery ceiling.
    const std::int64_t value_cap = checked_add(P.gamma.max_apery(), 2 * m0);
    for (std::int64_t t = 0;; ++t) {
        std::int64_t g = degree_split(input, t).g;
        if (P.gamma.contains(g - m0)) {
            P.u = t;
            break;
        }
        expect(g <= value_cap, errc::internal, "scan for u exceeded its bound");
    }
    expect(P.u > p, errc::internal, "u must exceed p for minimally generated input");

    // upsilon = min{ b >= 1 : b*m_n in Gamma' }; bounded by m_0 since
    // m_0 * m_n is a multiple of m_0.
    for (std::int64_t b = 1;; ++b) {
        if (P.gamma_prime.contains(checked_mul(b, input.mn))) {
            P.upsilon = b;
            break;
        }
        expect(b <= m0, errc::internal, "scan for upsilon exceeded its bound");
    }

    auto su = degree_split(input, P.u);
    P.g_u = su.g;
    P.q = su.q;
    P.r = su.r;
    expect(P.q > 0, errc::internal, "q must be positive");

    // g_u = lambda*m_0 + w*m_n with lambda >= 1, w in [0, upsilon).
    int hits = 0;
    for (std::int64_t w = 0; w < P.upsilon; ++w) {
        std::int64_t rest = P.g_u - checked_mul(w, input.mn);
        if (rest >= m0 && rest % m0 == 0) {
            ++hits;
            P.w = w;
            P.lambda = rest / m0;
        }
    }
    expect(hits == 1, errc::uniqueness_violation,
           "expected exactly one (w, lambda) pair, found " + std::to_string(hits));

    // upsilon*m_n = mu*m_0 + g_z with mu >= 0, z in [0, u).
    std::int64_t target = checked_mul(P.upsilon, input.mn);
    hits = 0;
    for (std::int64_t z = 0; z < P.u; ++z) {
        std::int64_t g = degree_split(input, z).g;
        std::int64_t rest = target - g;
        if (rest >= 0 && rest % m0 == 0) {
            ++hits;
            P.z = z;
            P.g_z = g;
            P.mu = rest / m0;
        }
    }
    expect(hits == 1, errc::uniqueness_violation,
           "expected exactly one (z, mu) pair, found " + std::to_string(hits));

    auto sz = degree_split(input, P.z);
    P.q_z = sz.q;
    P.r_z = sz.r;
    auto sd = degree_split(input, P.u - P.z);
    P.q_prime = sd.q;
    P.r_prime = sd.r;
    P.epsilon = P.r > P.r_z ? 0 : 1;
    expect(P.q_prime == P.q - P.q_z - P.epsilon, errc::internal,
           "q' disagrees with q - q_z - epsilon");
    expect(P.r_prime == P.epsilon * p + P.r - P.r_z, errc::internal,
           "r' disagrees with epsilon*p + r - r_z");

    P.nu = (P.r_prime < P.r) ? P.lambda + P.mu + 1 : P.lambda + P.mu;
    expect(P.nu >= 2, errc::internal, "nu must be at least 2");
    // Defining identity: g_{u-z} + (upsilon - w)*m_n = nu*m_0.
    expect(checked_add(sd.g, checked_mul(P.upsilon - P.w, input.mn)) == checked_mul(P.nu, m0),
           errc::internal, "nu identity failed");

    if (P.mu != 0 || P.w_empty())
        P.I = {0, p - P.r};
    else
        P.I = {std::max<std::int64_t>(P.r_z - P.r + 1, 0), p - P.r};

    if (P.w_empty())
        P.J = {0, -1};
    else if (P.q_z > 0 || P.epsilon > 0)
        P.J = {0, p - P.r_prime};
    else
        P.J = {0, P.r_z - 1};
    if (!P.w_empty()) {
        // J's two closed forms agree with min(z-1, p-r'): z <= p iff q_z = 0.
        std::int64_t expect_hi = std::min(P.z - 1, p - P.r_prime);
        expect(P.J.hi == expect_hi, errc::internal, "J interval disagrees with min(z-1, p-r')");
    }
    return P;
}

// The unique representation gamma = a*m_0 + g_s + b*m_n with a >= 0 and
// (s, b) in V - W. Throws NotInSemigroup when gamma lies outside the
// semigroup, UniquenessViolation if the count is not exactly one.
struct Representation {
    std::int64_t a = 0, s = 0, b = 0;

    friend bool operator==(const Representation&, const Representation&) = default;
};

inline Representation unique_representation(const CurveParameters& P, std::int64_t gamma) {
    GridWindow win = P.window();
    int hits = 0;
    Representation rep;
    for (std::int64_t s = 0; s < P.u; ++s) {
        std::int64_t gs = P.g_of(s);
        for (std::int64_t b = 0; b < P.upsilon; ++b) {
            if (win.in_w(s, b)) continue;
            std::int64_t rest = gamma - gs - checked_mul(b, P.input.mn);
            if (rest >= 0 && rest % P.input.m0() == 0) {
                if (++hits > 1)
                    fail(errc::uniqueness_violation,
                         "multiple representations of " + std::to_string(gamma));
                rep = {rest / P.input.m0(), s, b};
            }
        }
    }
    if (hits == 0) {
        expect(!P.gamma.contains(gamma), errc::uniqueness_violation,
               "semigroup element " + std::to_string(gamma) + " has no representation");
        fail(errc::not_in_semigroup, std::to_string(gamma) + " is not in the semigroup");
    }
    expect(P.gamma.contains(gamma), errc::internal,
           "represented value must lie in the semigroup");
    return rep;
}

} // namespace curvegb
