#pragma once

#include <utility>

#include "seshadri/arith.hpp"
#include "seshadri/lattice.hpp"

namespace seshadri::descent {

/// Numerical data of the descended bundle M with nL = q^*M on X/G.
struct DescentData {
    Integer n;        // least positive multiple of L that descends
    Integer d1;       // type of M is (d1, d2), d1 | d2
    Integer d2;
    Integer d_prime;  // n^2 d / g, which equals d2 when M is primitive
    bool primitive = true;
};

/// Least n >= 1 with n E integral on Lambda' x Lambda': the lcm of the
/// denominators of the restricted Gram matrix.
Integer minimal_descent_multiple(const lattice::PolarizedSurface& s, const lattice::SuperlatticeBasis& b);

/// Elementary divisors (d1, d2) of the integral alternating form n * Gram.
/// Throws InvariantError if the Smith diagonal is not of the shape
/// (d1, d1, d2, d2) or n * Gram is not integral.
std::pair<Integer, Integer> descended_type(const lattice::PolarizedSurface& s, const lattice::SuperlatticeBasis& b,
                                           const Integer& n);

bool exp_squared_bound_check(const lattice::SubgroupInvariants& inv, const Integer& n);

/// Scans n = 1 .. exp(G)^2 for the first multiple making E integral on Lambda'.
Integer minimal_n_bruteforce(const lattice::PolarizedSurface& s, const lattice::SuperlatticeBasis& b);

/// Runs the full descent computation. Throws InvariantError when M comes out
/// non-primitive or the Pfaffian identity d1 d2 = n^2 d / g fails.
DescentData descend(const lattice::PolarizedSurface& s, const lattice::SuperlatticeBasis& b,
                    const lattice::SubgroupInvariants& inv);

}  // namespace seshadri::descent
