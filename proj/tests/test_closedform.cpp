#include <catch2/catch_amalgamated.hpp>

#include <curvegb/closedform.hpp>
#include <curvegb/verify.hpp>

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

std::vector<std::string> labeled_lines(const NamedBasis& nb) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < nb.basis.size(); ++i)
        out.push_back(nb.label_of(i).str() + ": " + render(nb.basis[i]));
    return out;
}

} // namespace

TEST_CASE("family labels") {
    CHECK(FamilyLabel::xi(1, 3).str() == "xi_{1,3}");
    CHECK(FamilyLabel::phi(0).str() == "phi_0");
    CHECK(FamilyLabel::psi(2).str() == "psi_2");
    CHECK(FamilyLabel::theta().str() == "theta");
    CHECK(FamilyLabel::phi(1) == FamilyLabel::phi(1));
    CHECK_FALSE(FamilyLabel::phi(1) == FamilyLabel::psi(1));
}

TEST_CASE("closed-form generators of (7,8;6)") {
    CurveInput in = validate_input({7, 8}, 6);
    CurveParameters P = compute_parameters(in);
    OrderSpec asc = ascending_order(in);

    CHECK(render(build_family(P, FamilyLabel::phi(0), asc)) == "x1^4 - x0^2*x2^3");
    CHECK(render(build_family(P, FamilyLabel::psi(0), asc)) == "x1*x2 - x0^2");
    CHECK(render(build_family(P, FamilyLabel::theta(), asc)) == "x2^4 - x1^3");

    // The descending order flips psi and theta onto their x_0-rich side.
    OrderSpec desc = descending_order(in);
    CHECK(render(build_family(P, FamilyLabel::phi(0), desc)) == "x1^4 - x0^2*x2^3");
    CHECK(render(build_family(P, FamilyLabel::psi(0), desc)) == "x0^2 - x1*x2");
    CHECK(render(build_family(P, FamilyLabel::theta(), desc)) == "x1^3 - x2^4");

    // p = 1 leaves no room for xi or for higher phi/psi indexes.
    CHECK(code_of([&] { build_family(P, FamilyLabel::xi(1, 1), asc); }) ==
          errc::index_out_of_range);
    CHECK(code_of([&] { build_family(P, FamilyLabel::phi(1), asc); }) ==
          errc::index_out_of_range);
    CHECK(code_of([&] { build_family(P, FamilyLabel::psi(1), asc); }) ==
          errc::index_out_of_range);
}

TEST_CASE("closed-form generators of (20,21,22,23,24;29)") {
    CurveInput in = validate_input({20, 21, 22, 23, 24}, 29);
    CurveParameters P = compute_parameters(in);
    OrderSpec asc = ascending_order(in);

    // xi boundary split: i + j <= p keeps x_0, i + j > p wraps into x_p.
    CHECK(render(build_family(P, FamilyLabel::xi(1, 1), asc)) == "x1^2 - x0*x2");
    CHECK(render(build_family(P, FamilyLabel::xi(1, 3), asc)) == "x1*x3 - x0*x4");
    CHECK(render(build_family(P, FamilyLabel::xi(2, 3), asc)) == "x2*x3 - x1*x4");
    CHECK(render(build_family(P, FamilyLabel::xi(3, 3), asc)) == "x3^2 - x2*x4");

    CHECK(render(build_family(P, FamilyLabel::phi(0), asc)) == "x1*x4^2 - x0^2*x5");
    CHECK(render(build_family(P, FamilyLabel::phi(3), asc)) == "x4^3 - x0*x3*x5");
    CHECK(render(build_family(P, FamilyLabel::psi(0), asc)) == "x2*x5^2 - x0^4");
    CHECK(render(build_family(P, FamilyLabel::psi(2), asc)) == "x4*x5^2 - x0^3*x2");
    CHECK(render(build_family(P, FamilyLabel::theta(), asc)) == "x5^3 - x0^2*x3*x4");

    CHECK(code_of([&] { build_family(P, FamilyLabel::xi(0, 2), asc); }) ==
          errc::index_out_of_range);
    CHECK(code_of([&] { build_family(P, FamilyLabel::xi(2, 4), asc); }) ==
          errc::index_out_of_range);
    CHECK(code_of([&] { build_family(P, FamilyLabel::xi(3, 2), asc); }) ==
          errc::index_out_of_range);
}

TEST_CASE("theta degenerates to a pure x_0 tail at z = 0") {
    CurveInput in = validate_input({4, 5}, 6);
    CurveParameters P = compute_parameters(in);
    REQUIRE(P.z == 0);
    CHECK(render(build_family(P, FamilyLabel::theta(), ascending_order(in))) == "x2^2 - x0^3");
}

TEST_CASE("assembly of the three generating sets, (7,8;6)") {
    CurveInput in = validate_input({7, 8}, 6);
    CurveParameters P = compute_parameters(in);
    OrderSpec asc = ascending_order(in);

    NamedBasis omega = assemble(P, BasisKind::omega, asc);
    CHECK(omega.kind == BasisKind::omega);
    CHECK(labeled_lines(omega) ==
          std::vector<std::string>{"psi_0: x1*x2 - x0^2", "theta: x2^4 - x1^3"});

    NamedBasis phi = assemble(P, BasisKind::phi, asc);
    CHECK(labeled_lines(phi) ==
          std::vector<std::string>{"phi_0: x1^4 - x0^2*x2^3", "psi_0: x1*x2 - x0^2",
                                   "theta: x2^4 - x1^3"});

    // Here I is empty and J = {0}, so the Patil-Singh set coincides with Phi.
    NamedBasis ps = assemble(P, BasisKind::patil_singh, asc);
    CHECK(ps.basis.same_elements(phi.basis));

    CHECK(code_of([&] { (void)phi.label_of(3); }) == errc::index_out_of_range);
}

TEST_CASE("assembly order is phi, psi, theta, xi") {
    CurveInput in = validate_input({7, 8, 9}, 11);
    CurveParameters P = compute_parameters(in);
    OrderSpec asc = ascending_order(in);

    NamedBasis ps = assemble(P, BasisKind::patil_singh, asc);
    CHECK(labeled_lines(ps) ==
          std::vector<std::string>{"phi_0: x2^2 - x0*x3", "psi_0: x1*x2*x3 - x0^4",
                                   "psi_1: x2^2*x3 - x0^3*x1", "theta: x3^2 - x0^2*x1",
                                   "xi_{1,1}: x1^2 - x0*x2"});

    // Phi restricts psi to J = {0}: psi_1 is exactly the redundant element.
    NamedBasis phi = assemble(P, BasisKind::phi, asc);
    CHECK(labeled_lines(phi) ==
          std::vector<std::string>{"phi_0: x2^2 - x0*x3", "psi_0: x1*x2*x3 - x0^4",
                                   "theta: x3^2 - x0^2*x1", "xi_{1,1}: x1^2 - x0*x2"});

    // Omega uses phi over I and psi over J; here I = J = {0}, so it matches
    // Phi as a set.
    NamedBasis omega = assemble(P, BasisKind::omega, asc);
    CHECK(omega.basis.same_elements(phi.basis));
}

TEST_CASE("on (20,21,22,23,24;29) the three sets coincide") {
    CurveInput in = validate_input({20, 21, 22, 23, 24}, 29);
    CurveParameters P = compute_parameters(in);
    OrderSpec asc = ascending_order(in);

    NamedBasis omega = assemble(P, BasisKind::omega, asc);
    NamedBasis phi = assemble(P, BasisKind::phi, asc);
    NamedBasis ps = assemble(P, BasisKind::patil_singh, asc);
    CHECK(omega.basis.size() == 14);
    CHECK(omega.basis.same_elements(phi.basis));
    CHECK(ps.basis.same_elements(phi.basis));

    CHECK(labeled_lines(phi) ==
          std::vector<std::string>{
              "phi_0: x1*x4^2 - x0^2*x5", "phi_1: x2*x4^2 - x0*x1*x5",
              "phi_2: x3*x4^2 - x0*x2*x5", "phi_3: x4^3 - x0*x3*x5", "psi_0: x2*x5^2 - x0^4",
              "psi_1: x3*x5^2 - x0^3*x1", "psi_2: x4*x5^2 - x0^3*x2",
              "theta: x5^3 - x0^2*x3*x4", "xi_{1,1}: x1^2 - x0*x2", "xi_{1,2}: x1*x2 - x0*x3",
              "xi_{1,3}: x1*x3 - x0*x4", "xi_{2,2}: x2^2 - x0*x4", "xi_{2,3}: x2*x3 - x1*x4",
              "xi_{3,3}: x3^2 - x2*x4"});
}

TEST_CASE("empty J drops all psi elements") {
    CurveInput in = validate_input({4, 5}, 6); // z = 0, so W and J are empty
    CurveParameters P = compute_parameters(in);
    NamedBasis phi = assemble(P, BasisKind::phi, ascending_order(in));
    CHECK(labeled_lines(phi) ==
          std::vector<std::string>{"phi_0: x1^2 - x0*x2", "theta: x2^2 - x0^3"});
}

TEST_CASE("every family member is weight homogeneous and correctly oriented") {
    for (auto& [arith, mn] : std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>>{
             {{7, 8}, 6}, {{7, 8, 9}, 11}, {{20, 21, 22, 23, 24}, 29}, {{4, 6}, 5}}) {
        CurveInput in = validate_input(arith, mn);
        CurveParameters P = compute_parameters(in);
        for (const OrderSpec& spec : {ascending_order(in), descending_order(in)}) {
            NamedBasis ps = assemble(P, BasisKind::patil_singh, spec);
            for (const auto& b : ps.basis) {
                CHECK(weighted_degree(b.lead, spec) == weighted_degree(b.tail, spec));
                CHECK(greater(b.lead, b.tail, spec));
            }
        }
    }
}

TEST_CASE("lead regression harness is clean on reference instances") {
    for (auto& [arith, mn] : std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>>{
             {{7, 8}, 6}, {{9, 10}, 8}, {{7, 8, 9}, 11}, {{20, 21, 22, 23, 24}, 29},
             {{4, 5}, 6}, {{4, 6}, 5}}) {
        CurveParameters P = compute_parameters(validate_input(arith, mn));
        std::vector<std::string> failures;
        check_lead_regression(P, failures);
        INFO("instance " << P.input.describe());
        CHECK(failures.empty());
    }
}

TEST_CASE("instance enumeration") {
    auto inputs = enumerate_inputs(7, 2, 14, 10);
    CHECK(inputs.size() == 143);
    // Ordered by (m_0, p, step, m_n); every element validates.
    CHECK(inputs.front().describe() == "(3,4;5)");
    for (std::size_t i = 1; i < inputs.size(); ++i) {
        const auto& a = inputs[i - 1];
        const auto& b = inputs[i];
        auto key = [](const CurveInput& in) {
            return std::tuple(in.m0(), in.p(), in.diff(), in.mn);
        };
        CHECK(key(a) < key(b));
    }

    auto odd = odd_shift_family(5, 25);
    REQUIRE(odd.size() == 11);
    CHECK(odd.front().describe() == "(5,6;4)");
    CHECK(odd.back().describe() == "(25,26;24)");
    CHECK(odd_shift_family(6, 6).empty());
    CHECK(odd_shift_family(26, 5).empty());
}

TEST_CASE("full instance suite passes on reference instances") {
    CheckOptions opt;
    opt.nf_samples = 50;
    opt.pair_samples = 20;
    for (auto& [arith, mn] : std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>>{
             {{7, 8}, 6}, {{7, 8, 9}, 11}, {{4, 5}, 6}}) {
        InstanceResult res = check_instance(validate_input(arith, mn), opt);
        INFO("instance " << res.input.describe()
                         << (res.failures.empty() ? "" : ": " + res.failures.front()));
        CHECK(res.ok());
        CHECK(res.nf_checked == 50);
        CHECK(res.pairs_checked == 20);
    }
}

TEST_CASE("odd-shift family checker accepts members and rejects outsiders") {
    CHECK(check_odd_shift_instance(validate_input({7, 8}, 6)).ok());
    CHECK(check_odd_shift_instance(validate_input({9, 10}, 8)).ok());

    InstanceResult res = check_odd_shift_instance(validate_input({8, 9}, 7));
    CHECK_FALSE(res.ok());
    // The even-m_0 neighbour misses the closed forms and Omega is a basis.
    CHECK(std::find(res.failures.begin(), res.failures.end(),
                    "Omega unexpectedly passes the ascending Groebner check") !=
          res.failures.end());
}
