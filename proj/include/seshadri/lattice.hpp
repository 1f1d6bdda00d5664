#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "seshadri/arith.hpp"

namespace seshadri::lattice {

/// Polarization of type (1, d) on X = V / Lambda.
///
/// Coordinates everywhere are taken in the symplectic basis
/// (lambda1, lambda2, mu1, mu2) of Lambda, where the alternating form is
/// E = [[0, diag(1, d)], [-diag(1, d), 0]]. The complex structure on V is
/// never represented; only Lambda, its rational superlattices and E are.
/// Picard number one is an assumption of every closed form built on top
/// of this and is not checked.
class PolarizedSurface {
public:
    explicit PolarizedSurface(Integer d);

    const Integer& d() const { return d_; }

private:
    Integer d_;
};

struct LatticeVector {
    std::array<Rational, 4> coords{};

    static LatticeVector basis(std::size_t i);

    /// Componentwise reduction mod Lambda into [0, 1)^4.
    LatticeVector canonical() const;
    bool is_integral() const;
    bool is_zero() const;

    LatticeVector& operator+=(const LatticeVector& o);
    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
    friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
    friend LatticeVector operator*(const Rational& s, const LatticeVector& v);
    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

/// Finite subgroup G of X, given by lifts of its generators.
class SubgroupPresentation {
public:
    SubgroupPresentation(PolarizedSurface surface, std::vector<LatticeVector> generators);

    const PolarizedSurface& surface() const { return surface_; }
    /// Canonicalized into [0, 1)^4.
    const std::vector<LatticeVector>& generators() const { return generators_; }

private:
    PolarizedSurface surface_;
    std::vector<LatticeVector> generators_;
};

/// Basis of Lambda' = pi^{-1}(G), one vector per row, in Hermite normal form.
struct SuperlatticeBasis {
    std::array<LatticeVector, 4> rows;

    Rational determinant() const;
    friend bool operator==(const SuperlatticeBasis&, const SuperlatticeBasis&) = default;
};

struct SubgroupInvariants {
    Integer order;
    Integer exponent;
    std::vector<Integer> invariant_factors;  // each divides the next; 1s omitted
};

Rational form_value(const PolarizedSurface& s, const LatticeVector& v, const LatticeVector& w);

SuperlatticeBasis superlattice(const SubgroupPresentation& g);

/// Invariant factors of Lambda'/Lambda, isomorphic to G.
SubgroupInvariants quotient_invariants(const SuperlatticeBasis& b);

/// Whether pi(v) lies in K(L), i.e. E(v, Lambda) is integral.
bool k_of_L_contains(const PolarizedSurface& s, const LatticeVector& v);

/// All elements of G as canonical coset representatives, by closure under
/// addition. Throws InputError when |G| exceeds cap.
std::vector<LatticeVector> enumerate_subgroup(const SubgroupPresentation& g, std::size_t cap);

/// Gram matrix of E restricted to the rows of b.
std::array<std::array<Rational, 4>, 4> restricted_gram(const PolarizedSurface& s, const SuperlatticeBasis& b);

/// Full m-torsion X_m, presented by lambda1/m, lambda2/m, mu1/m, mu2/m.
SubgroupPresentation torsion_presentation(const PolarizedSurface& s, const Integer& m);

}  // namespace seshadri::lattice
