#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace curvegb {

// Error taxonomy. `kind` groups codes by how a caller (e.g. the CLI) should
// react: bad user input, a broken internal contract, or a resource cap.
enum class errc {
    // input validation
    too_short,
    non_increasing,
    not_arithmetic,
    gcd_not_one,
    not_minimally_generated,
    unsupported_input,
    parse_error,
    // contract violations
    uniqueness_violation,
    not_in_semigroup,
    dimension_mismatch,
    not_a_groebner_basis,
    index_out_of_range,
    precondition_violation,
    unequal_weights,
    internal,
    overflow,
    // resource caps
    resource_limit,
};

enum class error_kind { validation, contract, resource };

constexpr error_kind kind_of(errc c) {
    switch (c) {
    case errc::too_short:
    case errc::non_increasing:
    case errc::not_arithmetic:
    case errc::gcd_not_one:
    case errc::not_minimally_generated:
    case errc::unsupported_input:
    case errc::parse_error:
        return error_kind::validation;
    case errc::resource_limit:
        return error_kind::resource;
    default:
        return error_kind::contract;
    }
}

constexpr const char* name_of(errc c) {
    switch (c) {
    case errc::too_short: return "TooShort";
    case errc::non_increasing: return "NonIncreasing";
    case errc::not_arithmetic: return "NotArithmetic";
    case errc::gcd_not_one: return "GcdNotOne";
    case errc::not_minimally_generated: return "NotMinimallyGenerated";
    case errc::unsupported_input: return "UnsupportedInput";
    case errc::parse_error: return "ParseError";
    case errc::uniqueness_violation: return "UniquenessViolation";
    case errc::not_in_semigroup: return "NotInSemigroup";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_a_groebner_basis: return "NotAGroebnerBasis";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::precondition_violation: return "PreconditionViolation";
    case errc::unequal_weights: return "UnequalWeights";
    case errc::internal: return "InternalError";
    case errc::overflow: return "Overflow";
    case errc::resource_limit: return "ResourceLimit";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& detail)
        : std::runtime_error(std::string(name_of(code)) + ": " + detail), code_(code) {}

    errc code() const { return code_; }
    const char* name() const { return name_of(code_); }
    error_kind kind() const { return kind_of(code_); }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) {
    throw Error(code, detail);
}

inline void expect(bool cond, errc code, const std::string& detail) {
    if (!cond) fail(code, detail);
}

// Overflow-checked 64-bit helpers. Desk-scale inputs stay far below the
// limits; these turn a silent wrap into a hard error.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "integer addition overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "integer multiplication overflow");
    return r;
}

} // namespace curvegb
