#include "seshadri/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "seshadri/errors.hpp"
#include "seshadri/pell.hpp"

namespace seshadri::cli {

using lattice::LatticeVector;
using lattice::PolarizedSurface;
using lattice::SubgroupPresentation;
using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string to_string(Mode mode) {
    switch (mode) {
        case Mode::subgroup: return "subgroup";
        case Mode::torsion: return "torsion";
        case Mode::half_periods: return "half_periods";
        case Mode::general_points: return "general_points";
        case Mode::simple: return "simple";
    }
    return "unknown";
}

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    throw InputError(path + ": " + what);
}

Integer integer_field(const json& doc, const std::string& key, const std::string& path) {
    if (!doc.contains(key)) schema_error(path, "missing required field");
    const json& v = doc.at(key);
    if (v.is_number_integer()) return Integer(v.get<long>());
    if (v.is_string()) {
        try {
            return parse_integer(v.get<std::string>());
        } catch (const InputError& e) {
            schema_error(path, e.what());
        }
    }
    schema_error(path, "expected an integer");
}

Integer positive_field(const json& doc, const std::string& key) {
    const std::string path = "$." + key;
    Integer v = integer_field(doc, key, path);
    if (v < 1) schema_error(path, "must be >= 1, got " + v.get_str());
    return v;
}

LatticeVector vector_value(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 4) schema_error(path, "expected an array of 4 rationals");
    LatticeVector out;
    for (std::size_t i = 0; i < 4; ++i) {
        const std::string item_path = path + "[" + std::to_string(i) + "]";
        if (v[i].is_string()) {
            try {
                out.coords[i] = Rational::parse(v[i].get<std::string>());
            } catch (const InputError& e) {
                schema_error(item_path, e.what());
            }
        } else if (v[i].is_number_integer()) {
            out.coords[i] = Rational(v[i].get<long>());
        } else {
            schema_error(item_path, "expected a rational string such as \"1/3\"");
        }
    }
    return out;
}

LatticeVector vector_field(const json& doc, const std::string& key) {
    if (!doc.contains(key)) schema_error("$." + key, "missing required field");
    return vector_value(doc.at(key), "$." + key);
}

LatticeVector parse_inline_vector(const std::string& text, const std::string& flag) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 4) throw InputError(flag + ": expected 4 comma-separated rationals, got '" + text + "'");
    LatticeVector v;
    for (std::size_t i = 0; i < 4; ++i) v.coords[i] = Rational::parse(parts[i]);
    return v;
}

ordered_json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

ordered_json vector_json(const LatticeVector& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : v.coords) arr.push_back(c.to_string());
    return arr;
}

ordered_json integers_json(const std::vector<Integer>& values) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : values) arr.push_back(v.get_str());
    return arr;
}

ordered_json report_json(const oracle::VerificationReport& report) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
        const char* status = c.status == oracle::Status::passed   ? "passed"
                             : c.status == oracle::Status::failed ? "failed"
                                                                  : "skipped";
        checks.push_back({{"name", c.name}, {"status", status}, {"detail", c.detail}});
    }
    ordered_json out;
    out["all_passed"] = report.all_passed();
    out["checks"] = std::move(checks);
    return out;
}

std::string join(const std::vector<Integer>& values, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? sep : "") + values[i].get_str();
    return out;
}

std::string row_text(const std::array<Rational, 4>& row) {
    std::string out = "[";
    for (std::size_t i = 0; i < 4; ++i) out += (i ? "  " : "") + row[i].to_string();
    return out + "]";
}

}  // namespace

ProblemSpec parse_spec_json(const json& doc) {
    if (!doc.is_object()) schema_error("$", "expected a JSON object");
    ProblemSpec spec;
    spec.d = positive_field(doc, "d");

    if (doc.contains("mode")) {
        if (!doc["mode"].is_string()) schema_error("$.mode", "expected a string");
        const auto name = doc["mode"].get<std::string>();
        if (name == "subgroup") spec.mode = Mode::subgroup;
        else if (name == "torsion") spec.mode = Mode::torsion;
        else if (name == "half_periods") spec.mode = Mode::half_periods;
        else if (name == "general_points") spec.mode = Mode::general_points;
        else if (name == "simple") spec.mode = Mode::simple;
        else schema_error("$.mode", "unknown mode '" + name + "'");
    } else {
        spec.mode = doc.contains("generators") ? Mode::subgroup : Mode::simple;
    }

    switch (spec.mode) {
        case Mode::subgroup: {
            if (!doc.contains("generators") || !doc["generators"].is_array()) {
                schema_error("$.generators", "expected an array of generators");
            }
            const auto& gens = doc["generators"];
            for (std::size_t i = 0; i < gens.size(); ++i) {
                spec.generators.push_back(vector_value(gens[i], "$.generators[" + std::to_string(i) + "]").canonical());
            }
            break;
        }
        case Mode::torsion: spec.m = positive_field(doc, "m"); break;
        case Mode::general_points: spec.r = positive_field(doc, "r"); break;
        case Mode::half_periods:
            spec.e1 = vector_field(doc, "e1").canonical();
            spec.e2 = vector_field(doc, "e2").canonical();
            break;
        case Mode::simple: break;
    }
    return spec;
}

ProblemSpec parse_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open spec file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": invalid JSON: " + e.what());
    }
    return parse_spec_json(doc);
}

ordered_json problem_json(const ProblemSpec& spec) {
    ordered_json out;
    out["d"] = integer_json(spec.d);
    out["mode"] = to_string(spec.mode);
    switch (spec.mode) {
        case Mode::subgroup: {
            ordered_json gens = ordered_json::array();
            for (const auto& g : spec.generators) gens.push_back(vector_json(g));
            out["generators"] = std::move(gens);
            break;
        }
        case Mode::torsion: out["m"] = integer_json(spec.m); break;
        case Mode::general_points: out["r"] = integer_json(spec.r); break;
        case Mode::half_periods:
            out["e1"] = vector_json(spec.e1);
            out["e2"] = vector_json(spec.e2);
            break;
        case Mode::simple: break;
    }
    return out;
}

SeshadriResult solve(const ProblemSpec& spec) {
    const PolarizedSurface s(spec.d);
    switch (spec.mode) {
        case Mode::subgroup: return multi_at_subgroup(SubgroupPresentation(s, spec.generators));
        case Mode::torsion: return torsion_constant(s, spec.m);
        case Mode::half_periods: return half_period_pair(s, HalfPeriodPair(spec.e1, spec.e2));
        case Mode::general_points: return general_points_lower_bound(s, spec.r);
        case Mode::simple: return multi_at_subgroup(SubgroupPresentation(s, {}));
    }
    throw InputError("unknown mode");
}

SubgroupPresentation equivalent_presentation(const ProblemSpec& spec) {
    const PolarizedSurface s(spec.d);
    switch (spec.mode) {
        case Mode::subgroup: return SubgroupPresentation(s, spec.generators);
        case Mode::torsion: return lattice::torsion_presentation(s, spec.m);
        case Mode::half_periods: return SubgroupPresentation(s, {HalfPeriodPair(spec.e1, spec.e2).difference()});
        case Mode::general_points:
            return SubgroupPresentation(s, {Rational::reduce(1, spec.r) * LatticeVector::basis(0)});
        case Mode::simple: return SubgroupPresentation(s, {});
    }
    throw InputError("unknown mode");
}

oracle::VerificationReport verify_problem(const ProblemSpec& spec, const SeshadriResult& result) {
    const auto presentation = equivalent_presentation(spec);
    auto report = oracle::verify_pipeline(presentation);
    try {
        const auto pipeline = multi_at_subgroup(presentation);
        const bool same = pipeline.epsilon == result.epsilon && pipeline.case_tag == result.case_tag &&
                          pipeline.trace.n == result.trace.n && pipeline.trace.g == result.trace.g &&
                          pipeline.trace.d_prime == result.trace.d_prime;
        report.checks.push_back({"closed_form_coherence", same ? oracle::Status::passed : oracle::Status::failed,
                                 "closed form " + result.epsilon.to_string() + ", pipeline " +
                                     pipeline.epsilon.to_string()});
    } catch (const std::exception& e) {
        report.checks.push_back({"closed_form_coherence", oracle::Status::failed, e.what()});
    }
    return report;
}

ordered_json result_json(const ProblemSpec& spec, const SeshadriResult& result) {
    const Trace& t = result.trace;
    ordered_json out;
    out["d"] = spec.d.get_str();
    out["mode"] = to_string(spec.mode);
    out["g"] = t.g.get_str();
    out["exponent"] = t.exponent.get_str();
    out["invariant_factors"] = integers_json(t.invariant_factors);
    out["n"] = t.n.get_str();
    out["d_prime"] = t.d_prime.get_str();
    out["type_of_M"] = integers_json({t.type_of_M.first, t.type_of_M.second});
    out["case"] = to_string(result.case_tag);
    if (t.pell) {
        out["pell"] = {{"D", t.pell->D.get_str()}, {"l0", t.pell->l0.get_str()}, {"k0", t.pell->k0.get_str()}};
    }
    out["epsilon"] = result.epsilon.to_string();
    out["epsilon_decimal"] = result.epsilon.to_decimal(12);
    out["upper_bound_squared"] = t.upper_bound_squared.to_string();
    out["is_lower_bound"] = t.is_lower_bound;
    out["assumptions"] = ordered_json::array({"rho=1"});
    out["problem"] = problem_json(spec);
    return out;
}

std::string render_text(const ProblemSpec& spec, const SeshadriResult& result) {
    const Trace& t = result.trace;
    std::ostringstream os;
    os << "Polarized abelian surface of type (1, " << spec.d << "), mode " << to_string(spec.mode) << "\n";
    os << "  G: order g = " << t.g << ", exponent " << t.exponent << ", invariant factors ["
       << join(t.invariant_factors, ", ") << "]\n";
    if (t.basis) {
        os << "  Lambda' basis (rows in lambda1 lambda2 mu1 mu2 coordinates):\n";
        for (const auto& row : t.basis->rows) os << "    " << row_text(row.coords) << "\n";
    }
    if (t.gram) {
        os << "  Gram matrix of E on Lambda':\n";
        for (const auto& row : *t.gram) os << "    " << row_text(row) << "\n";
    }
    os << "  minimal descending multiple n = " << t.n << "\n";
    os << "  descended bundle M of type (" << t.type_of_M.first << ", " << t.type_of_M.second
       << "), d' = n^2 d / g = " << t.d_prime << "\n";
    if (result.case_tag == CaseTag::square) {
        os << "  2d/g = " << t.upper_bound_squared << " is a rational square\n";
        os << "  epsilon = sqrt(2d/g) = " << result.epsilon << "\n";
    } else {
        os << "  2d/g = " << t.upper_bound_squared << " is not a rational square\n";
        if (t.cf) {
            os << "  sqrt(" << t.pell->D << ") = [" << t.cf->a0 << "; " << join(t.cf->period, ", ")
               << "] (periodic)\n";
        }
        os << "  Pell equation l^2 - " << t.pell->D << " k^2 = 1: (l0, k0) = (" << t.pell->l0 << ", "
           << t.pell->k0 << ")\n";
        os << "  epsilon " << (t.is_lower_bound ? ">=" : "=") << " (k0/l0) * 2dn/g = (" << t.pell->k0 << "/"
           << t.pell->l0 << ") * " << Rational::reduce(2 * t.d * t.n, t.g) << " = " << result.epsilon << "\n";
    }
    os << "  epsilon ~ " << result.epsilon.to_decimal(12) << "\n";
    os << "  assumption: rho(X) = 1\n";
    return os.str();
}

namespace {

struct SeshadriArgs {
    std::string spec_file;
    std::string d;
    std::vector<std::string> gens;
    std::string torsion;
    std::vector<std::string> half_periods;
    std::string points;
    std::string output = "json";
    bool verify = false;
};

ProblemSpec spec_from_args(const SeshadriArgs& a, const CLI::App& sub) {
    ProblemSpec spec;
    const bool inline_given = sub.count("--d") || sub.count("--gen") || sub.count("--torsion") ||
                              sub.count("--half-periods") || sub.count("--points");
    if (!a.spec_file.empty()) {
        if (inline_given) throw InputError("give either a spec file or inline flags, not both");
        spec = parse_spec(a.spec_file);
    } else {
        if (!sub.count("--d")) throw InputError("--d is required without a spec file");
        spec.d = parse_integer(a.d);
        if (spec.d < 1) throw InputError("--d must be >= 1");
        const int modes = (sub.count("--gen") ? 1 : 0) + (sub.count("--torsion") ? 1 : 0) +
                          (sub.count("--half-periods") ? 1 : 0) + (sub.count("--points") ? 1 : 0);
        if (modes > 1) throw InputError("--gen, --torsion, --half-periods and --points are mutually exclusive");
        if (sub.count("--gen")) {
            spec.mode = Mode::subgroup;
            for (const auto& g : a.gens) spec.generators.push_back(parse_inline_vector(g, "--gen").canonical());
        } else if (sub.count("--torsion")) {
            spec.mode = Mode::torsion;
            spec.m = parse_integer(a.torsion);
            if (spec.m < 1) throw InputError("--torsion must be >= 1");
        } else if (sub.count("--half-periods")) {
            spec.mode = Mode::half_periods;
            spec.e1 = parse_inline_vector(a.half_periods.at(0), "--half-periods").canonical();
            spec.e2 = parse_inline_vector(a.half_periods.at(1), "--half-periods").canonical();
        } else if (sub.count("--points")) {
            spec.mode = Mode::general_points;
            spec.r = parse_integer(a.points);
            if (spec.r < 1) throw InputError("--points must be >= 1");
        }
    }
    spec.verify = a.verify;
    spec.output = a.output == "text" ? OutputFormat::text : OutputFormat::json;
    return spec;
}

int run_seshadri(const SeshadriArgs& a, const CLI::App& sub, std::ostream& out, const RunHooks& hooks) {
    const ProblemSpec spec = spec_from_args(a, sub);
    const SeshadriResult result = solve(spec);

    std::optional<oracle::VerificationReport> report;
    if (spec.verify) {
        report = verify_problem(spec, result);
        if (hooks.on_report) hooks.on_report(*report);
    }

    if (spec.output == OutputFormat::text) {
        out << render_text(spec, result);
        if (report) {
            out << "  verification: " << (report->all_passed() ? "all checks passed" : "FAILED") << "\n";
            for (const auto& c : report->checks) {
                if (!c.passed()) out << "    failed " << c.name << ": " << c.detail << "\n";
            }
        }
    } else {
        auto doc = result_json(spec, result);
        if (report) doc["verification"] = report_json(*report);
        out << doc.dump(2) << "\n";
    }
    return report && !report->all_passed() ? kExitVerificationFailed : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunHooks& hooks) {
    CLI::App app{"Exact multiple Seshadri constants of (1,d)-polarized abelian surfaces at finite subgroups"};
    app.name("seshadri");
    app.require_subcommand(1);

    SeshadriArgs sa;
    auto* sesh = app.add_subcommand("seshadri", "Compute the constant for a problem spec file or inline flags");
    sesh->add_option("spec_file", sa.spec_file, "JSON problem description");
    sesh->add_option("--d", sa.d, "second elementary divisor of the type (1,d) polarization");
    sesh->add_option("--gen", sa.gens, "subgroup generator \"a,b,c,e\" in lambda1,lambda2,mu1,mu2 coordinates")
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    sesh->add_option("--torsion", sa.torsion, "m: the subgroup of m-torsion points");
    sesh->add_option("--half-periods", sa.half_periods, "two half-periods e1 e2")->expected(2);
    sesh->add_option("--points", sa.points, "r: bound at r general points");
    sesh->add_option("--output", sa.output, "json or text")->check(CLI::IsMember({"json", "text"}));
    sesh->add_flag("--verify", sa.verify, "cross-check the result against the brute-force oracles");

    std::string pell_d;
    auto* pell_cmd = app.add_subcommand("pell", "Fundamental solution of l^2 - D k^2 = 1");
    pell_cmd->add_option("D", pell_d, "non-square discriminant >= 2")->required();

    std::uint64_t seed = 0;
    unsigned trials = 100, d_max = 12, exp_max = 6;
    auto* verify_cmd = app.add_subcommand("verify", "Run the randomized oracle suite");
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_option("--trials", trials, "number of random configurations")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--d-max", d_max, "largest d")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--exp-max", exp_max, "largest subgroup exponent")->check(CLI::PositiveNumber);

    std::vector<const char*> argv{"seshadri"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*sesh) return run_seshadri(sa, *sesh, out, hooks);
        if (*pell_cmd) {
            const auto sol = pell::fundamental_solution(parse_integer(pell_d));
            ordered_json doc;
            doc["D"] = sol.D.get_str();
            doc["l0"] = sol.l0.get_str();
            doc["k0"] = sol.k0.get_str();
            out << doc.dump() << "\n";
            return kExitOk;
        }
        if (*verify_cmd) {
            auto report = oracle::randomized_suite(seed, trials, d_max, exp_max);
            if (hooks.on_report) hooks.on_report(report);
            ordered_json doc;
            doc["seed"] = seed;
            doc["trials"] = trials;
            doc["d_max"] = d_max;
            doc["exp_max"] = exp_max;
            doc["checks"] = report.checks.size();
            doc["passed"] = report.count(oracle::Status::passed);
            doc["failed"] = report.count(oracle::Status::failed);
            doc["skipped"] = report.count(oracle::Status::skipped);
            ordered_json failures = ordered_json::array();
            for (const auto& c : report.checks) {
                if (!c.passed()) failures.push_back({{"name", c.name}, {"detail", c.detail}});
            }
            doc["failures"] = std::move(failures);
            doc["all_passed"] = report.all_passed();
            out << doc.dump(2) << "\n";
            return report.all_passed() ? kExitOk : kExitVerificationFailed;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvariantError& e) {
        err << "internal check failed: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitUsage;
}

}  // namespace seshadri::cli
