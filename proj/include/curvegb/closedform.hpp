#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "binomial.hpp"
#include "curve_orders.hpp"
#include "errors.hpp"
#include "monomial.hpp"
#include "semigroup.hpp"

namespace curvegb {

enum class FamilyKind { xi, phi, psi, theta };

// Which closed-form generator an element is: xi_{i,j}, phi_i, psi_j, theta.
struct FamilyLabel {
    FamilyKind kind = FamilyKind::theta;
    std::int64_t i = -1, j = -1;

    static FamilyLabel xi(std::int64_t i, std::int64_t j) { return {FamilyKind::xi, i, j}; }
    static FamilyLabel phi(std::int64_t i) { return {FamilyKind::phi, i, -1}; }
    static FamilyLabel psi(std::int64_t j) { return {FamilyKind::psi, -1, j}; }
    static FamilyLabel theta() { return {FamilyKind::theta, -1, -1}; }

    std::string str() const {
        switch (kind) {
        case FamilyKind::xi:
            return "xi_{" + std::to_string(i) + "," + std::to_string(j) + "}";
        case FamilyKind::phi: return "phi_" + std::to_string(i);
        case FamilyKind::psi: return "psi_" + std::to_string(j);
        case FamilyKind::theta: return "theta";
        }
        return "?";
    }

    friend bool operator==(const FamilyLabel&, const FamilyLabel&) = default;
};

// Builds one closed-form generator as a pair of exponent vectors:
//   xi_{i,j} = x_i x_j - x_0 x_{i+j}            (i + j <= p)
//            = x_i x_j - x_{i+j-p} x_p          (i + j >  p)
//   phi_i    = x_{r+i} x_p^q - x_0^(lambda-1) x_i x_n^w
//   psi_j    = x_{r'+j} x_p^(q') x_n^(upsilon-w) - x_0^(nu-1) x_j
//   theta    = x_n^upsilon - x_0^mu x_{r_z} x_p^(q_z)   (plain x_0^mu at z=0)
// Boundary indexes merge into the x_0 / x_p exponents automatically.
inline Binomial build_family(const CurveParameters& P, const FamilyLabel& label,
                             const OrderSpec& spec) {
    const auto p = static_cast<std::size_t>(P.p());
    const auto n = static_cast<std::size_t>(P.n());
    Monomial a(n + 1), b(n + 1);
    switch (label.kind) {
    case FamilyKind::xi: {
        expect(1 <= label.i && label.i <= label.j && label.j <= P.p() - 1,
               errc::index_out_of_range, "xi requires 1 <= i <= j <= p-1");
        a.add(static_cast<std::size_t>(label.i), 1);
        a.add(static_cast<std::size_t>(label.j), 1);
        std::int64_t s = label.i + label.j;
        if (s <= P.p()) {
            b.add(0, 1);
            b.add(static_cast<std::size_t>(s), 1);
        } else {
            b.add(static_cast<std::size_t>(s - P.p()), 1);
            b.add(p, 1);
        }
        break;
    }
    case FamilyKind::phi: {
        expect(0 <= label.i && label.i <= P.p() - P.r, errc::index_out_of_range,
               "phi requires 0 <= i <= p-r");
        a.add(static_cast<std::size_t>(P.r + label.i), 1);
        a.add(p, static_cast<std::int32_t>(P.q));
        b.add(0, static_cast<std::int32_t>(P.lambda - 1));
        b.add(static_cast<std::size_t>(label.i), 1);
        b.add(n, static_cast<std::int32_t>(P.w));
        break;
    }
    case FamilyKind::psi: {
        expect(0 <= label.j && label.j <= P.p() - P.r_prime, errc::index_out_of_range,
               "psi requires 0 <= j <= p-r'");
        a.add(static_cast<std::size_t>(P.r_prime + label.j), 1);
        a.add(p, static_cast<std::int32_t>(P.q_prime));
        a.add(n, static_cast<std::int32_t>(P.upsilon - P.w));
        b.add(0, static_cast<std::int32_t>(P.nu - 1));
        b.add(static_cast<std::size_t>(label.j), 1);
        break;
    }
    case FamilyKind::theta: {
        a.add(n, static_cast<std::int32_t>(P.upsilon));
        b.add(0, static_cast<std::int32_t>(P.mu));
        if (P.z > 0) {
            b.add(static_cast<std::size_t>(P.r_z), 1);
            b.add(p, static_cast<std::int32_t>(P.q_z));
        }
        break;
    }
    }
    return Binomial::oriented(std::move(a), std::move(b), spec);
}

enum class BasisKind { omega, patil_singh, phi };

constexpr const char* name_of(BasisKind k) {
    switch (k) {
    case BasisKind::omega: return "omega";
    case BasisKind::patil_singh: return "patil-singh";
    case BasisKind::phi: return "phi";
    }
    return "?";
}

// A closed-form generating set with its per-element family labels.
// Element order is the assembly order phi, psi, theta, xi.
struct NamedBasis {
    BasisKind kind = BasisKind::phi;
    std::vector<FamilyLabel> labels;
    BasisSet basis;

    const FamilyLabel& label_of(std::size_t index) const {
        expect(index < labels.size(), errc::index_out_of_range, "element index");
        return labels[index];
    }
};

// Assembles one of the three studied generating sets:
//   omega:       phi over I,       psi over J,       theta, all xi
//   patil-singh: phi over [0,p-r], psi over [0,p-r'], theta, all xi
//   phi:         phi over [0,p-r], psi over J,        theta, all xi
inline NamedBasis assemble(const CurveParameters& P, BasisKind kind, const OrderSpec& spec) {
    NamedBasis out{kind, {}, BasisSet(spec)};
    auto put = [&](const FamilyLabel& label) {
        expect(out.basis.add(build_family(P, label, spec)), errc::internal,
               "closed-form families produced a duplicate element");
        out.labels.push_back(label);
    };

    IndexInterval phi_range = kind == BasisKind::omega ? P.I : IndexInterval{0, P.p() - P.r};
    IndexInterval psi_range =
        kind == BasisKind::patil_singh ? IndexInterval{0, P.p() - P.r_prime} : P.J;

    for (std::int64_t i = phi_range.lo; i <= phi_range.hi; ++i) put(FamilyLabel::phi(i));
    for (std::int64_t j = psi_range.lo; j <= psi_range.hi; ++j) put(FamilyLabel::psi(j));
    put(FamilyLabel::theta());
    for (std::int64_t i = 1; i <= P.p() - 1; ++i)
        for (std::int64_t j = i; j <= P.p() - 1; ++j) put(FamilyLabel::xi(i, j));
    return out;
}

} // namespace curvegb
