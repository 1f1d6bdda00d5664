#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seshadri/arith.hpp"
#include "seshadri/lattice.hpp"
#include "seshadri/pell.hpp"

namespace seshadri {

/// Which branch of the closed form produced the constant.
///   square: 2d/g is a rational square and epsilon = sqrt(2d/g).
///   pell:   epsilon = (k0/l0) * 2dn/g with (l0, k0) fundamental for
///           l^2 - 2 d' k^2 = 1.
enum class CaseTag { square, pell };

std::string to_string(CaseTag tag);

struct Trace {
    Integer d;
    Integer g = 1;
    Integer exponent = 1;
    std::vector<Integer> invariant_factors;
    Integer n = 1;
    Integer d_prime;
    std::pair<Integer, Integer> type_of_M;
    std::optional<pell::PellSolution> pell;
    std::optional<pell::ContinuedFraction> cf;
    Rational upper_bound_squared;  // 2d/g
    bool is_lower_bound = false;
    // Only filled by the full lattice pipeline.
    std::optional<lattice::SuperlatticeBasis> basis;
    std::optional<std::array<std::array<Rational, 4>, 4>> gram;
};

struct SeshadriResult {
    Rational epsilon;
    CaseTag case_tag = CaseTag::square;
    Trace trace;
};

/// Two half-periods e1 != e2 mod Lambda, every coordinate in {0, 1/2}.
class HalfPeriodPair {
public:
    HalfPeriodPair(lattice::LatticeVector e1, lattice::LatticeVector e2);

    const lattice::LatticeVector& e1() const { return e1_; }
    const lattice::LatticeVector& e2() const { return e2_; }
    /// e1 - e2 reduced mod Lambda.
    lattice::LatticeVector difference() const;

private:
    lattice::LatticeVector e1_;
    lattice::LatticeVector e2_;
};

/// Single-point constant of a type (1, d') surface with Picard number one.
SeshadriResult bauer_simple(const Integer& d_prime);

/// epsilon(L; x + G) for any base point x: reduces to the descended bundle M
/// on X/G and returns epsilon(M) / n.
SeshadriResult multi_at_subgroup(const lattice::SubgroupPresentation& g);

/// Closed form at x + X_m, with g = m^4, n = m^2 and d' = d.
SeshadriResult torsion_constant(const lattice::PolarizedSurface& s, const Integer& m);

/// Constant at two half-periods. Requires sqrt(d) irrational.
SeshadriResult half_period_pair(const lattice::PolarizedSurface& s, const HalfPeriodPair& p);

/// Bound at r general points coming from the cyclic subgroup <lambda1 / r>.
/// Exact in the square case; trace.is_lower_bound is set otherwise.
SeshadriResult general_points_lower_bound(const lattice::PolarizedSurface& s, const Integer& r);

/// sqrt(2d / r), the upper bound for r points, kept as its exact square.
struct SurdBound {
    Rational squared;
    std::optional<Rational> exact;  // present when squared is a rational square

    std::string to_string() const;
};

SurdBound upper_bound(const lattice::PolarizedSurface& s, const Integer& r);

/// Older half-period bound 2 sqrt(1 - 1/l0^2) sqrt(L^2 / 16) with (l0, k0)
/// fundamental for l^2 - 32 d k^2 = 1, which simplifies to 4 d k0 / l0.
/// Throws InputError when 2d is a perfect square.
Rational tg_half_period_bound(const lattice::PolarizedSurface& s);

}  // namespace seshadri
