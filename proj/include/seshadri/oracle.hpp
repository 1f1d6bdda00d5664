#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "seshadri/lattice.hpp"

namespace seshadri::oracle {

enum class Status { passed, failed, skipped };

struct Check {
    std::string name;
    Status status = Status::passed;
    std::string detail;

    bool passed() const { return status != Status::failed; }
};

struct VerificationReport {
    std::vector<Check> checks;

    /// Conjunction over all checks; skipped checks do not fail the report.
    bool all_passed() const;
    std::size_t count(Status s) const;
    void append(const VerificationReport& other, const std::string& prefix = {});
};

struct VerifyOptions {
    std::size_t enumeration_cap = 10000;
    // Brute-force Pell search bound; larger fundamental solutions are skipped.
    unsigned long pell_k_max = 100000;
};

/// Cross-checks one pipeline run against independent computations:
/// the Pell identity and a brute-force Pell scan, the lcm rule for n
/// against an exhaustive scan, subgroup enumeration against the Smith
/// order and the basis determinant, the Pfaffian identity, the closed
/// form identity eps^2 = (1 - 1/l0^2)(2d/g), the upper bound with its
/// equality case, rationality in the square case, and eps * n = eps(M).
VerificationReport verify_pipeline(const lattice::SubgroupPresentation& g, const VerifyOptions& opts = {});

/// Random presentation drawn from the generator the randomized suite uses.
/// The exponent of the resulting group never exceeds exp_max.
lattice::SubgroupPresentation random_presentation(std::mt19937_64& rng, unsigned d_max, unsigned exp_max);

VerificationReport randomized_suite(std::uint64_t seed, unsigned trials, unsigned d_max, unsigned exp_max,
                                    const VerifyOptions& opts = {});

}  // namespace seshadri::oracle
