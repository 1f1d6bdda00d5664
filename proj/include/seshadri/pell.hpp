#pragma once

#include <optional>
#include <vector>

#include "seshadri/arith.hpp"

namespace seshadri::pell {

/// Fundamental solution of l^2 - D k^2 = 1.
struct PellSolution {
    Integer D;
    Integer l0;
    Integer k0;

    friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/// sqrt(D) = [a0; period, period, ...]. The last period term is 2*a0.
struct ContinuedFraction {
    Integer a0;
    std::vector<Integer> period;
};

// Both throw InputError("square discriminant") when D is a perfect square,
// and InputError when D < 2.
ContinuedFraction cf_expand(const Integer& D);
PellSolution fundamental_solution(const Integer& D);

/// Fundamental solution read off a precomputed expansion of sqrt(D).
PellSolution fundamental_solution(const Integer& D, const ContinuedFraction& cf);

/// Scans k = 1..k_max for the first k with 1 + D k^2 a perfect square.
std::optional<PellSolution> pell_bruteforce(const Integer& D, const Integer& k_max);

}  // namespace seshadri::pell
