#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"
#include "order.hpp"

namespace curvegb {

// Difference of two distinct monomials, lead - tail, with lead greater under
// the ambient order. All ideal arithmetic here stays within such differences
// (coefficients +1/-1 only), and both sides always carry the same weighted
// degree (the toric ideal is weight-homogeneous).
struct Binomial {
    Monomial lead, tail;

    static Binomial oriented(Monomial a, Monomial b, const OrderSpec& spec) {
        expect(a != b, errc::precondition_violation, "binomial sides must differ");
        expect(weighted_degree(a, spec) == weighted_degree(b, spec), errc::unequal_weights,
               "binomial sides must have equal weighted degree");
        if (greater(b, a, spec)) std::swap(a, b);
        return {std::move(a), std::move(b)};
    }

    friend bool operator==(const Binomial&, const Binomial&) = default;
};

inline std::string render(const Binomial& b) {
    return render(b.lead) + " - " + render(b.tail);
}

// Parses `lead - tail`; does not re-orient, so a mis-oriented claim in a file
// survives to the comparison stage and shows up as a mismatch.
inline std::pair<Monomial, Monomial> parse_binomial_pair(std::string_view text, std::size_t nvars) {
    auto sep = text.find(" - ");
    expect(sep != std::string_view::npos, errc::parse_error,
           "expected 'lead - tail' in '" + std::string(text) + "'");
    return {parse_monomial(text.substr(0, sep), nvars),
            parse_monomial(text.substr(sep + 3), nvars)};
}

// An ordered collection of oriented binomials sharing one order spec.
// Insertion order is stable (witnesses refer to element indexes); equality
// of contents is decided on the canonically sorted view.
class BasisSet {
public:
    explicit BasisSet(OrderSpec spec) : spec_(std::move(spec)) {}

    const OrderSpec& spec() const { return spec_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const Binomial& operator[](std::size_t i) const { return elems_[i]; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    // Returns false (and keeps the set unchanged) on a duplicate element.
    bool add(Binomial b) {
        expect(b.lead.nvars() == spec_.nvars(), errc::dimension_mismatch,
               "element does not match basis variable count");
        expect(greater(b.lead, b.tail, spec_), errc::precondition_violation,
               "element must be oriented under the basis order");
        if (std::find(elems_.begin(), elems_.end(), b) != elems_.end()) return false;
        elems_.push_back(std::move(b));
        return true;
    }

    std::vector<Binomial> sorted_elements() const {
        std::vector<Binomial> v(elems_);
        std::sort(v.begin(), v.end(), [&](const Binomial& a, const Binomial& b) {
            auto c = compare(a.lead, b.lead, spec_);
            if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
            return compare(a.tail, b.tail, spec_) == std::strong_ordering::less;
        });
        return v;
    }

    bool same_elements(const BasisSet& other) const {
        return sorted_elements() == other.sorted_elements();
    }

    std::vector<std::string> render_sorted() const {
        std::vector<std::string> lines;
        for (const auto& b : sorted_elements()) lines.push_back(render(b));
        return lines;
    }

private:
    OrderSpec spec_;
    std::vector<Binomial> elems_;
};

} // namespace curvegb
