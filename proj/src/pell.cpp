#include "seshadri/pell.hpp"

#include "seshadri/errors.hpp"

namespace seshadri::pell {

namespace {

void require_nonsquare(const Integer& D) {
    if (D < 2) throw InputError("Pell discriminant must be at least 2, got " + D.get_str());
    if (exact_isqrt(D)) throw InputError("square discriminant " + D.get_str());
}

}  // namespace

ContinuedFraction cf_expand(const Integer& D) {
    require_nonsquare(D);
    ContinuedFraction cf;
    mpz_sqrt(cf.a0.get_mpz_t(), D.get_mpz_t());

    Integer m = 0;
    Integer q = 1;
    Integer a = cf.a0;
    const Integer last = 2 * cf.a0;
    do {
        m = q * a - m;
        q = (D - m * m) / q;
        a = (cf.a0 + m) / q;
        cf.period.push_back(a);
    } while (a != last);
    return cf;
}

PellSolution fundamental_solution(const Integer& D) { return fundamental_solution(D, cf_expand(D)); }

PellSolution fundamental_solution(const Integer& D, const ContinuedFraction& cf) {
    const std::size_t len = cf.period.size();
    // p_{L-1}^2 - D q_{L-1}^2 = (-1)^L, so an odd period has to be walked twice.
    const std::size_t terms = (len % 2 == 0) ? len : 2 * len;

    Integer p_prev = 1, p = cf.a0;
    Integer q_prev = 0, q = 1;
    for (std::size_t i = 0; i + 1 < terms; ++i) {
        const Integer& a = cf.period[i % len];
        Integer p_next = a * p + p_prev;
        Integer q_next = a * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
    }
    if (p * p - D * q * q != 1) {
        throw InvariantError("continued fraction did not yield a Pell solution for D=" + D.get_str());
    }
    return {D, p, q};
}

std::optional<PellSolution> pell_bruteforce(const Integer& D, const Integer& k_max) {
    Integer value;
    Integer root;
    for (Integer k = 1; k <= k_max; ++k) {
        value = D * k * k + 1;
        if (mpz_perfect_square_p(value.get_mpz_t())) {
            mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
            return PellSolution{D, root, k};
        }
    }
    return std::nullopt;
}

}  // namespace seshadri::pell
