#include "seshadri/constants.hpp"

#include "seshadri/descent.hpp"
#include "seshadri/errors.hpp"

namespace seshadri {

using lattice::LatticeVector;
using lattice::PolarizedSurface;

std::string to_string(CaseTag tag) { return tag == CaseTag::square ? "square" : "pell"; }

namespace {

bool is_half_period(const LatticeVector& v) {
    const Rational half = Rational::reduce(1, 2);
    for (const auto& c : v.coords) {
        if (!c.is_zero() && c != half) return false;
    }
    return true;
}

// Shared tail of every closed form: epsilon = sqrt(2d/g) when that is
// rational, otherwise (k0/l0) * 2dn/g with Pell discriminant 2 d'.
SeshadriResult finish(Trace trace) {
    SeshadriResult out;
    trace.upper_bound_squared = Rational::reduce(2 * trace.d, trace.g);
    if (auto root = is_perfect_square(trace.upper_bound_squared)) {
        out.epsilon = *root;
        out.case_tag = CaseTag::square;
        trace.is_lower_bound = false;
    } else {
        const Integer D = 2 * trace.d_prime;
        trace.cf = pell::cf_expand(D);
        trace.pell = pell::fundamental_solution(D, *trace.cf);
        out.epsilon = Rational::reduce(trace.pell->k0 * 2 * trace.d * trace.n, trace.pell->l0 * trace.g);
        out.case_tag = CaseTag::pell;
    }
    out.trace = std::move(trace);
    return out;
}

}  // namespace

HalfPeriodPair::HalfPeriodPair(LatticeVector e1, LatticeVector e2) : e1_(e1.canonical()), e2_(e2.canonical()) {
    if (!is_half_period(e1_) || !is_half_period(e2_)) {
        throw InputError("half-period coordinates must lie in {0, 1/2}");
    }
    if (e1_ == e2_) throw InputError("half-periods e1 and e2 must be distinct");
}

LatticeVector HalfPeriodPair::difference() const { return (e1_ - e2_).canonical(); }

SeshadriResult bauer_simple(const Integer& d_prime) {
    if (d_prime < 1) throw InputError("d' must be >= 1");
    Trace trace;
    trace.d = d_prime;
    trace.d_prime = d_prime;
    trace.type_of_M = {1, d_prime};
    return finish(std::move(trace));
}

SeshadriResult multi_at_subgroup(const lattice::SubgroupPresentation& g) {
    const PolarizedSurface& s = g.surface();
    const auto basis = lattice::superlattice(g);
    const auto inv = lattice::quotient_invariants(basis);
    const auto data = descent::descend(s, basis, inv);

    Trace trace;
    trace.d = s.d();
    trace.g = inv.order;
    trace.exponent = inv.exponent;
    trace.invariant_factors = inv.invariant_factors;
    trace.n = data.n;
    trace.d_prime = data.d_prime;
    trace.type_of_M = {data.d1, data.d2};
    trace.basis = basis;
    trace.gram = lattice::restricted_gram(s, basis);
    return finish(std::move(trace));
}

SeshadriResult torsion_constant(const PolarizedSurface& s, const Integer& m) {
    if (m < 1) throw InputError("torsion order m must be >= 1");
    Trace trace;
    trace.d = s.d();
    trace.g = m * m * m * m;
    trace.exponent = m;
    if (m > 1) trace.invariant_factors = {m, m, m, m};
    trace.n = m * m;
    trace.d_prime = s.d();
    trace.type_of_M = {1, s.d()};
    return finish(std::move(trace));
}

SeshadriResult half_period_pair(const PolarizedSurface& s, const HalfPeriodPair& p) {
    if (exact_isqrt(s.d())) {
        throw InputError("half-period formula hypothesis violated: sqrt(d) is an integer for d = " + s.d().get_str());
    }
    Trace trace;
    trace.d = s.d();
    trace.g = 2;
    trace.exponent = 2;
    trace.invariant_factors = {2};
    if (lattice::k_of_L_contains(s, p.difference())) {
        // L itself descends; d is even here since K(L) has a nonzero 2-torsion point.
        trace.n = 1;
        trace.d_prime = s.d() / 2;
    } else {
        trace.n = 2;
        trace.d_prime = 2 * s.d();
    }
    trace.type_of_M = {1, trace.d_prime};
    return finish(std::move(trace));
}

SeshadriResult general_points_lower_bound(const PolarizedSurface& s, const Integer& r) {
    if (r < 1) throw InputError("number of points r must be >= 1");
    Trace trace;
    trace.d = s.d();
    trace.g = r;
    trace.exponent = r;
    if (r > 1) trace.invariant_factors = {r};
    trace.n = r;
    trace.d_prime = r * s.d();
    trace.type_of_M = {1, trace.d_prime};
    auto out = finish(std::move(trace));
    out.trace.is_lower_bound = out.case_tag == CaseTag::pell;
    return out;
}

std::string SurdBound::to_string() const {
    if (exact) return exact->to_string();
    return "sqrt(" + squared.to_string() + ")";
}

SurdBound upper_bound(const PolarizedSurface& s, const Integer& r) {
    if (r < 1) throw InputError("number of points r must be >= 1");
    SurdBound b;
    b.squared = Rational::reduce(2 * s.d(), r);
    b.exact = is_perfect_square(b.squared);
    return b;
}

Rational tg_half_period_bound(const PolarizedSurface& s) {
    if (exact_isqrt(2 * s.d())) {
        throw InputError("2d is a perfect square; the half-period bound's Pell equation degenerates");
    }
    const auto sol = pell::fundamental_solution(32 * s.d());
    return Rational::reduce(4 * s.d() * sol.k0, sol.l0);
}

}  // namespace seshadri
