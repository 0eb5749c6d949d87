#pragma once

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "verify.hpp"

namespace curvegb::cli {

using nlohmann::json;

namespace detail {

inline std::int64_t parse_int(std::string_view text) {
    std::int64_t v = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    expect(ec == std::errc() && ptr == last, errc::parse_error,
           "invalid integer '" + std::string(text) + "'");
    return v;
}

inline std::vector<std::int64_t> parse_int_list(std::string_view text) {
    std::vector<std::int64_t> out;
    while (!text.empty()) {
        auto comma = text.find(',');
        out.push_back(parse_int(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    expect(!out.empty(), errc::parse_error, "empty integer list");
    return out;
}

// "5..25" or a single value "7".
inline std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text) {
    auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        std::int64_t v = parse_int(text);
        return {v, v};
    }
    return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
}

inline BasisKind parse_kind(const std::string& name) {
    if (name == "omega") return BasisKind::omega;
    if (name == "patil-singh") return BasisKind::patil_singh;
    if (name == "phi") return BasisKind::phi;
    fail(errc::parse_error, "unknown basis kind '" + name + "'");
}

inline OrderSpec order_by_name(const CurveInput& input, const std::string& name) {
    if (name == "asc") return ascending_order(input);
    if (name == "desc") return descending_order(input);
    fail(errc::parse_error, "unknown order '" + name + "'");
}

inline std::string interval_text(const IndexInterval& iv) {
    if (iv.empty()) return "[]";
    return "[" + std::to_string(iv.lo) + ".." + std::to_string(iv.hi) + "]";
}

inline json interval_json(const IndexInterval& iv) {
    if (iv.empty()) return json::array();
    return json::array({iv.lo, iv.hi});
}

inline json input_json(const CurveInput& input) {
    return json{{"arith", input.arith},
                {"mn", input.mn},
                {"generators", input.all_generators()},
                {"p", input.p()},
                {"n", input.n()},
                {"text", input.describe()}};
}

inline json params_json(const CurveParameters& P) {
    return json{{"u", P.u},
                {"upsilon", P.upsilon},
                {"w", P.w},
                {"z", P.z},
                {"lambda", P.lambda},
                {"mu", P.mu},
                {"nu", P.nu},
                {"q", P.q},
                {"r", P.r},
                {"q_prime", P.q_prime},
                {"r_prime", P.r_prime},
                {"q_z", P.q_z},
                {"r_z", P.r_z},
                {"epsilon", P.epsilon},
                {"g_u", P.g_u},
                {"g_z", P.g_z},
                {"I", interval_json(P.I)},
                {"J", interval_json(P.J)},
                {"w_empty", P.w_empty()}};
}

inline void print_params(const CurveParameters& P, std::ostream& out) {
    out << "input: " << P.input.describe() << "\n"
        << "p=" << P.p() << " n=" << P.n() << "\n"
        << "u=" << P.u << " upsilon=" << P.upsilon << " w=" << P.w << " z=" << P.z << "\n"
        << "lambda=" << P.lambda << " mu=" << P.mu << " nu=" << P.nu << "\n"
        << "q=" << P.q << " r=" << P.r << " q'=" << P.q_prime << " r'=" << P.r_prime << " q_z="
        << P.q_z << " r_z=" << P.r_z << " epsilon=" << P.epsilon << "\n"
        << "g_u=" << P.g_u << " g_z=" << P.g_z << "\n"
        << "I=" << interval_text(P.I) << " J=" << interval_text(P.J) << "\n"
        << "W empty: " << (P.w_empty() ? "yes" : "no") << "\n";
}

inline std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
        .count();
}

// Strips an optional "label:" prefix (used by `basis` output) from a line.
inline std::string_view strip_label(std::string_view line) {
    auto colon = line.find(':');
    if (colon != std::string_view::npos && line.find(' ') > colon)
        line.remove_prefix(colon + 1);
    while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    while (!line.empty() && line.back() == ' ') line.remove_suffix(1);
    return line;
}

inline std::vector<Binomial> read_basis_file(const std::string& path, std::size_t nvars) {
    std::ifstream in(path);
    expect(in.good(), errc::parse_error, "cannot open basis file '" + path + "'");
    std::vector<Binomial> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view body = strip_label(line);
        if (body.empty() || body.front() == '#') continue;
        auto [lead, tail] = parse_binomial_pair(body, nvars);
        out.push_back(Binomial{std::move(lead), std::move(tail)});
    }
    return out;
}

struct Options {
    std::string arith_text;
    std::int64_t mn = 0;
    std::string kind = "phi";
    std::string order = "asc";
    std::string engine = "generic";
    std::string basis_file;
    std::string family;
    std::string m0_range;
    std::string monomial;
    bool json_out = false;
    bool explain = false;
    bool all = false;
    std::int64_t max_m0 = 30, max_p = 4, max_arith = 60, max_mn = 60;
};

inline CurveInput make_input(const Options& opt) {
    return validate_input(parse_int_list(opt.arith_text), opt.mn);
}

inline int cmd_params(const Options& opt, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    CurveInput input = make_input(opt);
    CurveParameters P = compute_parameters(input);
    if (opt.json_out) {
        json j{{"schema", 1},
               {"command", "params"},
               {"input", input_json(input)},
               {"parameters", params_json(P)},
               {"elapsed_ms", elapsed_ms(start)}};
        out << j.dump(2) << "\n";
    } else {
        print_params(P, out);
    }
    return 0;
}

inline int cmd_basis(const Options& opt, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    CurveInput input = make_input(opt);
    CurveParameters P = compute_parameters(input);
    NamedBasis named = assemble(P, parse_kind(opt.kind), order_by_name(input, opt.order));
    if (opt.json_out) {
        json elems = json::array();
        for (std::size_t i = 0; i < named.basis.size(); ++i)
            elems.push_back(json{{"label", named.label_of(i).str()},
                                 {"lead", render(named.basis[i].lead)},
                                 {"tail", render(named.basis[i].tail)},
                                 {"text", render(named.basis[i])}});
        json j{{"schema", 1},
               {"command", "basis"},
               {"input", input_json(input)},
               {"kind", opt.kind},
               {"order", opt.order},
               {"count", named.basis.size()},
               {"elements", elems},
               {"elapsed_ms", elapsed_ms(start)}};
        out << j.dump(2) << "\n";
    } else {
        out << "basis " << opt.kind << " under " << opt.order << " for " << input.describe()
            << ": " << named.basis.size() << " elements\n";
        for (std::size_t i = 0; i < named.basis.size(); ++i)
            out << named.label_of(i).str() << ": " << render(named.basis[i]) << "\n";
    }
    return 0;
}

inline int cmd_check(const Options& opt, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    CurveInput input = make_input(opt);
    CurveParameters P = compute_parameters(input);
    NamedBasis named = assemble(P, parse_kind(opt.kind), order_by_name(input, opt.order));
    auto witness = groebner_witness(named.basis);
    std::optional<DivisibilityViolation> div;
    if (!witness) div = minimality_violation(named.basis);

    if (opt.json_out) {
        json j{{"schema", 1},
               {"command", "check"},
               {"input", input_json(input)},
               {"parameters", params_json(P)},
               {"kind", opt.kind},
               {"order", opt.order},
               {"count", named.basis.size()},
               {"groebner", !witness.has_value()},
               {"witness", nullptr},
               {"minimal", nullptr},
               {"elapsed_ms", elapsed_ms(start)}};
        if (witness)
            j["witness"] = json{{"first", named.label_of(witness->i).str()},
                                {"second", named.label_of(witness->j).str()},
                                {"remainder", render(witness->remainder)}};
        else
            j["minimal"] = !div.has_value();
        out << j.dump(2) << "\n";
    } else {
        out << "basis " << opt.kind << " under " << opt.order << " for " << input.describe()
            << ": " << named.basis.size() << " elements\n";
        if (witness) {
            out << "NOT_GB\n"
                << "witness: S(" << named.label_of(witness->i).str() << ", "
                << named.label_of(witness->j).str() << ") = " << render(witness->remainder) << "\n";
        } else {
            out << "GB\n";
            if (div)
                out << "NOT_MINIMAL (lead of " << named.label_of(div->divisor).str()
                    << " divides lead of " << named.label_of(div->offender).str() << ")\n";
            else
                out << "MINIMAL\n";
        }
    }
    return witness ? 1 : 0;
}

inline int cmd_compare(const Options& opt, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    CurveInput input = make_input(opt);
    CurveParameters P = compute_parameters(input);
    const OrderSpec asc = ascending_order(input);
    BasisSet oracle = defining_ideal_gb(input, CompletionLimits::from_env());

    std::string source;
    std::vector<Binomial> candidate;
    if (opt.basis_file.empty()) {
        source = "phi";
        candidate = reduced_basis(assemble(P, BasisKind::phi, asc).basis).sorted_elements();
    } else {
        source = opt.basis_file;
        candidate = read_basis_file(opt.basis_file, static_cast<std::size_t>(input.n()) + 1);
        std::sort(candidate.begin(), candidate.end(), [&](const Binomial& a, const Binomial& b) {
            auto c = compare(a.lead, b.lead, asc);
            if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
            return compare(a.tail, b.tail, asc) == std::strong_ordering::less;
        });
    }

    std::vector<Binomial> reference = oracle.sorted_elements();
    std::size_t mismatch = reference.size();
    bool equal = true;
    for (std::size_t i = 0; i < std::max(reference.size(), candidate.size()); ++i) {
        if (i >= reference.size() || i >= candidate.size() || !(reference[i] == candidate[i])) {
            mismatch = i;
            equal = false;
            break;
        }
    }

    auto side = [](const std::vector<Binomial>& v, std::size_t i) {
        return i < v.size() ? render(v[i]) : std::string("(missing)");
    };
    if (opt.json_out) {
        json j{{"schema", 1},
               {"command", "compare"},
               {"input", input_json(input)},
               {"source", source},
               {"verdict", equal ? "EQUAL" : "DIFFER"},
               {"oracle_size", reference.size()},
               {"candidate_size", candidate.size()},
               {"first_mismatch", nullptr},
               {"elapsed_ms", elapsed_ms(start)}};
        if (!equal)
            j["first_mismatch"] = json{{"index", mismatch},
                                       {"oracle", side(reference, mismatch)},
                                       {"candidate", side(candidate, mismatch)}};
        out << j.dump(2) << "\n";
    } else {
        out << "compare " << input.describe() << " oracle(" << reference.size() << ") vs "
            << source << "(" << candidate.size() << ")\n";
        if (equal) {
            out << "EQUAL\n";
        } else {
            out << "DIFFER at element " << mismatch << ": oracle " << side(reference, mismatch)
                << " vs candidate " << side(candidate, mismatch) << "\n";
        }
    }
    return equal ? 0 : 1;
}

inline int cmd_sweep(const Options& opt, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    std::vector<CurveInput> inputs;
    bool odd_shift = false;
    if (opt.all) {
        inputs = enumerate_inputs(opt.max_m0, opt.max_p, opt.max_arith, opt.max_mn);
    } else if (opt.family == "odd-shift") {
        odd_shift = true;
        auto [lo, hi] = parse_range(opt.m0_range.empty() ? "5..25" : opt.m0_range);
        inputs = odd_shift_family(lo, hi);
    } else {
        fail(errc::parse_error, "sweep needs --all or --family odd-shift");
    }

    CheckOptions copt;
    std::vector<InstanceResult> results;
    results.reserve(inputs.size());
    std::size_t failed = 0;
    for (const CurveInput& input : inputs) {
        results.push_back(odd_shift ? check_odd_shift_instance(input, copt)
                                    : check_instance(input, copt));
        if (!results.back().ok()) ++failed;
    }

    if (opt.json_out) {
        json insts = json::array();
        for (const auto& r : results)
            insts.push_back(json{{"input", input_json(r.input)},
                                 {"ok", r.ok()},
                                 {"failures", r.failures},
                                 {"phi_size", r.phi_size},
                                 {"omega_size", r.omega_size},
                                 {"ps_size", r.ps_size},
                                 {"oracle_size", r.oracle_size},
                                 {"nf_checked", r.nf_checked},
                                 {"pairs_checked", r.pairs_checked}});
        json j{{"schema", 1},
               {"command", "sweep"},
               {"family", odd_shift ? "odd-shift" : "all"},
               {"checked", results.size()},
               {"failed", failed},
               {"instances", insts},
               {"elapsed_ms", elapsed_ms(start)}};
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            out << r.input.describe() << ": " << (r.ok() ? "ok" : "FAIL");
            if (r.ok() && !odd_shift)
                out << " (phi=" << r.phi_size << " oracle=" << r.oracle_size
                    << " nf=" << r.nf_checked << " pairs=" << r.pairs_checked << ")";
            out << "\n";
            for (const auto& f : r.failures) out << "  - " << f << "\n";
        }
        out << "checked " << results.size() << " instances, " << failed << " failures\n";
    }
    return failed == 0 ? 0 : 3;
}

inline int cmd_nf(const Options& opt, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    CurveInput input = make_input(opt);
    CurveParameters P = compute_parameters(input);
    const OrderSpec asc = ascending_order(input);
    Monomial alpha = parse_monomial(opt.monomial, static_cast<std::size_t>(input.n()) + 1);

    Monomial result(alpha.nvars());
    std::vector<std::string> trace;
    if (opt.engine == "ladder") {
        LadderState st = normal_form_ladder(P, alpha);
        result = to_monomial(st, P);
        trace = st.trace;
    } else if (opt.engine == "generic") {
        result = normal_form(alpha, assemble(P, BasisKind::phi, asc).basis);
    } else {
        fail(errc::parse_error, "unknown engine '" + opt.engine + "'");
    }

    if (opt.json_out) {
        json j{{"schema", 1},
               {"command", "nf"},
               {"input", input_json(input)},
               {"engine", opt.engine},
               {"monomial", render(alpha)},
               {"normal_form", render(result)},
               {"weight", weighted_degree(result, asc)},
               {"trace", nullptr},
               {"elapsed_ms", elapsed_ms(start)}};
        if (opt.explain && opt.engine == "ladder") j["trace"] = trace;
        out << j.dump(2) << "\n";
    } else {
        out << render(result) << "\n";
        if (opt.explain && opt.engine == "ladder") {
            out << "trace: [";
            for (std::size_t i = 0; i < trace.size(); ++i) out << (i ? ", " : "") << trace[i];
            out << "]\n";
        }
    }
    return 0;
}

} // namespace detail

// In-process entry point; `args` excludes the program name. Exit codes:
// 0 verified, 1 legitimate counterexample (NOT_GB / DIFFER), 2 invalid
// input, 3 internal contract violation.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    detail::Options opt;
    CLI::App app{"closed-form Groebner bases of monomial curves over almost arithmetic sequences"};
    app.name("curvegb");
    app.require_subcommand(1);

    auto add_input = [&opt](CLI::App* sub) {
        sub->add_option("--arith", opt.arith_text, "comma-separated arithmetic part m_0,..,m_p")
            ->required();
        sub->add_option("--mn", opt.mn, "free generator m_n")->required();
    };
    auto add_json = [&opt](CLI::App* sub) {
        sub->add_flag("--json", opt.json_out, "machine-readable JSON output");
    };

    CLI::App* params = app.add_subcommand("params", "window parameters of the semigroup");
    add_input(params);
    add_json(params);

    CLI::App* basis = app.add_subcommand("basis", "construct a closed-form basis");
    add_input(basis);
    add_json(basis);
    basis->add_option("--kind", opt.kind, "basis kind")
        ->check(CLI::IsMember({"omega", "patil-singh", "phi"}));
    basis->add_option("--order", opt.order, "monomial order")->check(CLI::IsMember({"asc", "desc"}));

    CLI::App* check = app.add_subcommand("check", "Groebner and minimality verdicts");
    add_input(check);
    add_json(check);
    check->add_option("--kind", opt.kind, "basis kind")
        ->check(CLI::IsMember({"omega", "patil-singh", "phi"}));
    check->add_option("--order", opt.order, "monomial order")->check(CLI::IsMember({"asc", "desc"}));

    CLI::App* compare = app.add_subcommand("compare", "reduced basis vs elimination oracle");
    add_input(compare);
    add_json(compare);
    compare->add_option("--basis-file", opt.basis_file, "compare a basis file instead of phi");

    CLI::App* sweep = app.add_subcommand("sweep", "verify families of instances");
    add_json(sweep);
    auto* fam = sweep->add_option("--family", opt.family, "named family (odd-shift)")
                    ->check(CLI::IsMember({"odd-shift"}));
    auto* m0r = sweep->add_option("--m0", opt.m0_range, "m_0 range LO..HI for --family");
    auto* all = sweep->add_flag("--all", opt.all, "all validated instances within bounds");
    sweep->add_option("--max-m0", opt.max_m0, "largest m_0 for --all");
    sweep->add_option("--max-p", opt.max_p, "largest p for --all");
    sweep->add_option("--max-arith", opt.max_arith, "largest arithmetic entry for --all");
    sweep->add_option("--max-mn", opt.max_mn, "largest m_n for --all");
    m0r->needs(fam);
    all->excludes(fam);

    CLI::App* nf = app.add_subcommand("nf", "normal form of a monomial");
    add_input(nf);
    add_json(nf);
    nf->add_option("monomial", opt.monomial, "monomial like x1^5*x2")->required();
    nf->add_option("--engine", opt.engine, "reduction engine")
        ->check(CLI::IsMember({"ladder", "generic"}));
    nf->add_flag("--explain", opt.explain, "print the ladder rule trace");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "ParseError: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(params)) return detail::cmd_params(opt, out);
        if (app.got_subcommand(basis)) return detail::cmd_basis(opt, out);
        if (app.got_subcommand(check)) return detail::cmd_check(opt, out);
        if (app.got_subcommand(compare)) return detail::cmd_compare(opt, out);
        if (app.got_subcommand(sweep)) return detail::cmd_sweep(opt, out);
        if (app.got_subcommand(nf)) return detail::cmd_nf(opt, out);
        fail(errc::internal, "no subcommand dispatched");
    } catch (const Error& e) {
        err << e.what() << "\n";
        return e.kind() == error_kind::validation ? 2 : 3;
    } catch (const std::exception& e) {
        err << "InternalError: " << e.what() << "\n";
        return 3;
    }
}

} // namespace curvegb::cli
