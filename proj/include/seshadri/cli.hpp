#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "seshadri/constants.hpp"
#include "seshadri/lattice.hpp"
#include "seshadri/oracle.hpp"

namespace seshadri::cli {

enum class Mode { subgroup, torsion, half_periods, general_points, simple };
enum class OutputFormat { json, text };

std::string to_string(Mode mode);

struct ProblemSpec {
    Integer d = 1;
    Mode mode = Mode::simple;
    std::vector<lattice::LatticeVector> generators;  // subgroup mode, canonicalized
    Integer m = 1;                                   // torsion mode
    Integer r = 1;                                   // general_points mode
    lattice::LatticeVector e1, e2;                   // half_periods mode
    bool verify = false;
    OutputFormat output = OutputFormat::json;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Validates a problem description. Errors name the offending field path,
/// e.g. "$.generators[0][2]: malformed rational 'x'".
ProblemSpec parse_spec_json(const nlohmann::json& doc);
ProblemSpec parse_spec(const std::string& path);

/// The problem in input schema form; parse_spec_json inverts it.
nlohmann::ordered_json problem_json(const ProblemSpec& spec);

SeshadriResult solve(const ProblemSpec& spec);

/// Subgroup whose pipeline run the closed form for this problem must agree with.
lattice::SubgroupPresentation equivalent_presentation(const ProblemSpec& spec);

/// verify_pipeline on the equivalent subgroup plus a closed-form coherence check.
oracle::VerificationReport verify_problem(const ProblemSpec& spec, const SeshadriResult& result);

nlohmann::ordered_json result_json(const ProblemSpec& spec, const SeshadriResult& result);
std::string render_text(const ProblemSpec& spec, const SeshadriResult& result);

/// Test seam: lets callers inspect or tamper with verification reports
/// before the exit code is decided.
struct RunHooks {
    std::function<void(oracle::VerificationReport&)> on_report;
};

/// Entry point behind the command-line tool. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunHooks& hooks = {});

}  // namespace seshadri::cli
