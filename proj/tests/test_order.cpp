#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include <curvegb/curve_orders.hpp>
#include <curvegb/monomial.hpp>
#include <curvegb/order.hpp>

using namespace curvegb;

namespace {

template <typename F>
errc code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a curvegb::Error");
    return errc::internal;
}

Monomial m3(std::string_view text) { return parse_monomial(text, 3); }

} // namespace

TEST_CASE("monomial arithmetic") {
    Monomial a{2, 0, 3};
    CHECK(a.nvars() == 3);
    CHECK(a[0] == 2);
    CHECK(a[2] == 3);
    CHECK(a.total_degree() == 5);
    CHECK_FALSE(a.is_one());
    CHECK(Monomial(3).is_one());

    Monomial b{1, 1, 0};
    CHECK((a * b) == Monomial{3, 1, 3});
    CHECK((a * b) / b == a);
    CHECK(Monomial::lcm(a, b) == Monomial{2, 1, 3});
    CHECK_FALSE(Monomial::coprime(a, b));
    CHECK(Monomial::coprime(Monomial{0, 4, 0}, Monomial{2, 0, 3}));

    CHECK(b.divides(a * b));
    CHECK_FALSE(a.divides(b));
    CHECK_FALSE(Monomial{1, 0}.divides(a)); // mismatched variable count

    Monomial c = a;
    c.replace(Monomial{1, 0, 1}, Monomial{0, 2, 0}); // c / x0x2 * x1^2
    CHECK(c == Monomial{1, 2, 2});
    CHECK(code_of([&] { Monomial copy = b; copy.replace(Monomial{0, 0, 1}, Monomial{1, 0, 0}); }) ==
          errc::precondition_violation);
    CHECK(code_of([&] { (void)(a / b); }) == errc::precondition_violation);
    CHECK(code_of([&] { (void)(a * Monomial{1, 1}); }) == errc::dimension_mismatch);
    CHECK(code_of([&] { Monomial x(2); x.set(2, 1); }) == errc::index_out_of_range);
}

TEST_CASE("monomial text form round trips") {
    for (const char* text : {"1", "x0", "x2", "x0^2", "x1^5", "x0*x1", "x0^2*x2^3", "x0*x1*x2"}) {
        Monomial m = parse_monomial(text, 3);
        CHECK(render(m) == text);
        CHECK(parse_monomial(render(m), 3) == m);
    }
    CHECK(render(Monomial{0, 4, 0}) == "x1^4");
    CHECK(render(Monomial(3)) == "1");

    CHECK(code_of([] { parse_monomial("", 3); }) == errc::parse_error);
    CHECK(code_of([] { parse_monomial("y1", 3); }) == errc::parse_error);
    CHECK(code_of([] { parse_monomial("x3", 3); }) == errc::parse_error);   // index out of range
    CHECK(code_of([] { parse_monomial("x1*x0", 3); }) == errc::parse_error); // not ascending
    CHECK(code_of([] { parse_monomial("x1*x1", 3); }) == errc::parse_error);
    CHECK(code_of([] { parse_monomial("x1^0", 3); }) == errc::parse_error);
    CHECK(code_of([] { parse_monomial("x1^-2", 3); }) == errc::parse_error);
    CHECK(code_of([] { parse_monomial("x1^5+x2", 3); }) == errc::parse_error);
    CHECK(code_of([] { parse_monomial("x1*", 3); }) == errc::parse_error);
}

TEST_CASE("weighted degree under the curve orders") {
    CurveInput in = validate_input({7, 8}, 6);
    OrderSpec asc = ascending_order(in);
    CHECK(asc.weights == std::vector<std::int64_t>{7, 8, 6});
    CHECK(weighted_degree(m3("x1^4"), asc) == 32);
    CHECK(weighted_degree(m3("x0^2*x2^3"), asc) == 32);
    CHECK(weighted_degree(m3("1"), asc) == 0);
    CHECK(code_of([&] { weighted_degree(Monomial{1, 1}, asc); }) == errc::dimension_mismatch);
}

TEST_CASE("ascending order: weight first, then leftmost deficit wins") {
    OrderSpec asc = ascending_order(validate_input({7, 8}, 6));

    // Different weights: the heavier monomial is greater.
    CHECK(greater(m3("x1"), m3("x0"), asc));       // 8 > 7
    CHECK(greater(m3("x0"), m3("x2"), asc));       // 7 > 6
    CHECK(greater(m3("x1*x2"), m3("x0"), asc));    // 14 > 7

    // Weight ties: the side with less x_0 (leftmost difference negative) wins.
    CHECK(greater(m3("x1*x2"), m3("x0^2"), asc));        // both weight 14
    CHECK(greater(m3("x1^4"), m3("x0^2*x2^3"), asc));    // both weight 32
    CHECK(greater(m3("x1*x2^2"), m3("x0^2*x2"), asc));   // both weight 20
    CHECK(greater(m3("x2^4"), m3("x1^3"), asc));         // both weight 24, less x_1

    CHECK(compare(m3("x1*x2"), m3("x1*x2"), asc) == std::strong_ordering::equal);
    CHECK(compare(m3("x0^2"), m3("x1*x2"), asc) == std::strong_ordering::less);
}

TEST_CASE("descending order: weight first, then rightmost deficit wins") {
    OrderSpec desc = descending_order(validate_input({7, 8}, 6));

    CHECK(greater(m3("x1"), m3("x0"), desc)); // weight still decides first

    // Weight ties break on positions 1..n only, rightmost difference.
    CHECK(greater(m3("x0^2"), m3("x1*x2"), desc));
    CHECK(greater(m3("x1^3"), m3("x2^4"), desc));
    CHECK(greater(m3("x1^4"), m3("x0^2*x2^3"), desc));

    // The two orders genuinely disagree on this weight-20 tie.
    OrderSpec asc = ascending_order(validate_input({7, 8}, 6));
    CHECK(greater(m3("x1*x2^2"), m3("x0^2*x2"), asc));
    CHECK(greater(m3("x0^2*x2"), m3("x1*x2^2"), desc));
}

TEST_CASE("elimination order: block variable first, ascending rule after") {
    CurveInput in = validate_input({7, 8}, 6);
    OrderSpec elim = elimination_order(in);
    CHECK(elim.nvars() == 4);
    CHECK(elim.weights == std::vector<std::int64_t>{1, 7, 8, 6});
    CHECK(elim.elimination);

    auto m4 = [](std::string_view t) { return parse_monomial(t, 4); };
    // Any positive t power beats any t-free monomial.
    CHECK(greater(m4("x0"), m4("x1^100"), elim));
    CHECK(greater(m4("x0^7"), m4("x1"), elim));
    // Equal t exponent: positions 1.. compare by the ascending rule.
    CHECK(greater(m4("x0*x2*x3"), m4("x0*x1^2"), elim));
    CHECK(greater(m4("x2*x3"), m4("x1^2"), elim));
    CHECK(greater(m4("x2"), m4("x1"), elim)); // weight 8 > 7 within the x block
    CHECK(greater(m4("x1"), m4("x3"), elim)); // weight 7 > 6 within the x block
}

TEST_CASE("curve orders are total and consistent") {
    CurveInput in = validate_input({7, 8, 9}, 11);
    std::mt19937_64 rng(20240817);
    auto random_monomial = [&] {
        Monomial m(4);
        for (std::size_t i = 0; i < 4; ++i) m.add(i, static_cast<std::int32_t>(rng() % 5));
        return m;
    };

    for (const OrderSpec& spec : {ascending_order(in), descending_order(in)}) {
        std::vector<Monomial> sample;
        for (int i = 0; i < 60; ++i) sample.push_back(random_monomial());

        for (const auto& a : sample)
            for (const auto& b : sample) {
                auto ab = compare(a, b, spec);
                auto ba = compare(b, a, spec);
                if (ab == std::strong_ordering::equal) {
                    CHECK(a == b); // weights + full tie-break separate points
                    CHECK(ba == std::strong_ordering::equal);
                } else {
                    CHECK(ab != ba);
                }
            }

        auto less = [&](const Monomial& a, const Monomial& b) {
            return compare(a, b, spec) == std::strong_ordering::less;
        };
        std::sort(sample.begin(), sample.end(), less);
        CHECK(std::is_sorted(sample.begin(), sample.end(), less));
        // Sorting ascending by the order puts the weights in ascending order.
        for (std::size_t i = 1; i < sample.size(); ++i)
            CHECK(weighted_degree(sample[i - 1], spec) <= weighted_degree(sample[i], spec));
    }
}

TEST_CASE("equal weights with all of x_1..x_n equal force equal monomials") {
    // Under the descending tie-break index 0 is never inspected; this is
    // sound because equal weight plus equal tail exponents pin down x_0.
    CurveInput in = validate_input({7, 8}, 6);
    OrderSpec desc = descending_order(in);
    CHECK(compare(m3("x0^6"), m3("x1^3*x2^3"), desc) != std::strong_ordering::equal);
    CHECK(compare(m3("x0^2"), m3("x0^2"), desc) == std::strong_ordering::equal);
}
