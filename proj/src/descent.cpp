#include "seshadri/descent.hpp"

#include <vector>

#include "seshadri/errors.hpp"
#include "seshadri/normal_form.hpp"

namespace seshadri::descent {

namespace {

bool integral_multiple(const std::array<std::array<Rational, 4>, 4>& gram, const Integer& n) {
    const Rational scale(n);
    for (const auto& row : gram) {
        for (const auto& x : row) {
            if (!(scale * x).is_integer()) return false;
        }
    }
    return true;
}

}  // namespace

Integer minimal_descent_multiple(const lattice::PolarizedSurface& s, const lattice::SuperlatticeBasis& b) {
    const auto gram = lattice::restricted_gram(s, b);
    std::vector<Rational> entries;
    for (const auto& row : gram) entries.insert(entries.end(), row.begin(), row.end());
    return lcm_of_denominators(entries);
}

std::pair<Integer, Integer> descended_type(const lattice::PolarizedSurface& s, const lattice::SuperlatticeBasis& b,
                                           const Integer& n) {
    const auto gram = lattice::restricted_gram(s, b);
    IntMatrix form(4, std::vector<Integer>(4));
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const Rational v = Rational(n) * gram[i][j];
            if (!v.is_integer()) throw InvariantError("n * E is not integral on Lambda'");
            form[i][j] = v.num();
        }
    }
    const auto diag = smith_diagonal(std::move(form));
    if (diag.size() != 4 || diag[0] != diag[1] || diag[2] != diag[3] || diag[0] == 0) {
        std::string shape;
        for (const auto& x : diag) shape += " " + x.get_str();
        throw InvariantError("descended form has unexpected elementary divisors:" + shape);
    }
    return {diag[0], diag[2]};
}

bool exp_squared_bound_check(const lattice::SubgroupInvariants& inv, const Integer& n) {
    const Integer bound = inv.exponent * inv.exponent;
    return n >= 1 && mpz_divisible_p(bound.get_mpz_t(), n.get_mpz_t()) != 0;
}

Integer minimal_n_bruteforce(const lattice::PolarizedSurface& s, const lattice::SuperlatticeBasis& b) {
    const auto gram = lattice::restricted_gram(s, b);
    const auto inv = lattice::quotient_invariants(b);
    const Integer limit = inv.exponent * inv.exponent;
    for (Integer n = 1; n <= limit; ++n) {
        if (integral_multiple(gram, n)) return n;
    }
    throw InvariantError("no descending multiple up to exp(G)^2 = " + limit.get_str());
}

DescentData descend(const lattice::PolarizedSurface& s, const lattice::SuperlatticeBasis& b,
                    const lattice::SubgroupInvariants& inv) {
    DescentData out;
    out.n = minimal_descent_multiple(s, b);
    std::tie(out.d1, out.d2) = descended_type(s, b, out.n);

    const Integer pfaffian_scaled = out.n * out.n * s.d();
    if (!mpz_divisible_p(pfaffian_scaled.get_mpz_t(), inv.order.get_mpz_t())) {
        throw InvariantError("n^2 d / g is not an integer");
    }
    out.d_prime = pfaffian_scaled / inv.order;
    if (out.d1 * out.d2 != out.d_prime) {
        throw InvariantError("Pfaffian identity d1 d2 = n^2 d / g failed: " + out.d1.get_str() + " * " +
                             out.d2.get_str() + " != " + out.d_prime.get_str());
    }
    out.primitive = out.d1 == 1;
    if (!out.primitive) {
        throw InvariantError("descended bundle is not primitive: type (" + out.d1.get_str() + ", " +
                             out.d2.get_str() + ")");
    }
    return out;
}

}  // namespace seshadri::descent
