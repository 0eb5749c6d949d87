#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <string_view>

#include <boost/container/small_vector.hpp>

#include "errors.hpp"

namespace curvegb {

// A power product of the ring variables, stored as one exponent per variable.
// Variable count is fixed per ambient ring (n+1 for x_0..x_n, or n+2 when an
// elimination variable occupies slot 0).
class Monomial {
public:
    using exps_type = boost::container::small_vector<std::int32_t, 8>;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    Monomial(std::initializer_list<std::int32_t> exps) : e_(exps.begin(), exps.end()) {
        for (auto v : e_) expect(v >= 0, errc::unsupported_input, "negative exponent");
    }

    std::size_t nvars() const { return e_.size(); }
    std::int32_t operator[](std::size_t i) const { return e_[i]; }

    void set(std::size_t i, std::int32_t v) {
        expect(i < e_.size(), errc::index_out_of_range, "variable index");
        expect(v >= 0, errc::unsupported_input, "negative exponent");
        e_[i] = v;
    }
    void add(std::size_t i, std::int32_t v) { set(i, e_[i] + v); }

    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](auto v) { return v == 0; });
    }

    std::int64_t total_degree() const {
        return std::accumulate(e_.begin(), e_.end(), std::int64_t{0});
    }

    bool divides(const Monomial& m) const {
        if (e_.size() != m.e_.size()) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        check_dims(o);
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    // Exact division; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const {
        check_dims(o);
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] -= o.e_[i];
            expect(r.e_[i] >= 0, errc::precondition_violation, "inexact monomial division");
        }
        return r;
    }

    // In-place rewrite `this <- this / from * to`, the workhorse of reduction.
    void replace(const Monomial& from, const Monomial& to) {
        check_dims(from);
        check_dims(to);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            e_[i] += to.e_[i] - from.e_[i];
            expect(e_[i] >= 0, errc::precondition_violation, "inexact monomial rewrite");
        }
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check_dims(b);
        Monomial r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(r.e_[i], b.e_[i]);
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        a.check_dims(b);
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] > 0 && b.e_[i] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    // Plain lexicographic comparison on the exponent tuple; used only for
    // canonical container ordering, never as the algebraic term order.
    friend bool lex_less(const Monomial& a, const Monomial& b) {
        return std::lexicographical_compare(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end());
    }

private:
    void check_dims(const Monomial& o) const {
        expect(e_.size() == o.e_.size(), errc::dimension_mismatch, "monomial variable counts differ");
    }

    exps_type e_;
};

// Text form: factors `x<i>` or `x<i>^<e>` joined by `*`, ascending variable
// index, exponent 1 elided, and `1` for the empty product. Round-trips
// bit-exactly through parse_monomial.
inline std::string render(const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i);
        if (m[i] != 1) {
            out += '^';
            out += std::to_string(m[i]);
        }
    }
    return out.empty() ? "1" : out;
}

inline Monomial parse_monomial(std::string_view text, std::size_t nvars) {
    Monomial m(nvars);
    if (text == "1") return m;
    expect(!text.empty(), errc::parse_error, "empty monomial text");
    std::size_t pos = 0;
    auto read_int = [&](std::string_view what) -> std::int64_t {
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        expect(ec == std::errc() && ptr != text.data() + pos, errc::parse_error,
               "expected " + std::string(what) + " in monomial '" + std::string(text) + "'");
        pos = static_cast<std::size_t>(ptr - text.data());
        return value;
    };
    std::int64_t last_idx = -1;
    while (true) {
        expect(pos < text.size() && text[pos] == 'x', errc::parse_error,
               "expected 'x' in monomial '" + std::string(text) + "'");
        ++pos;
        std::int64_t idx = read_int("variable index");
        expect(idx >= 0 && static_cast<std::size_t>(idx) < nvars, errc::parse_error,
               "variable index out of range in '" + std::string(text) + "'");
        expect(idx > last_idx, errc::parse_error,
               "variable indexes must be strictly ascending in '" + std::string(text) + "'");
        last_idx = idx;
        std::int64_t exp = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            exp = read_int("exponent");
            expect(exp >= 1 && exp <= INT32_MAX, errc::parse_error, "exponent must be positive");
        }
        m.add(static_cast<std::size_t>(idx), static_cast<std::int32_t>(exp));
        if (pos == text.size()) break;
        expect(text[pos] == '*', errc::parse_error, "expected '*' in '" + std::string(text) + "'");
        ++pos;
    }
    return m;
}

} // namespace curvegb
