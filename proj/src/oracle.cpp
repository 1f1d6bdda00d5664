#include "seshadri/oracle.hpp"

#include <exception>

#include "seshadri/constants.hpp"
#include "seshadri/descent.hpp"
#include "seshadri/errors.hpp"
#include "seshadri/pell.hpp"

namespace seshadri::oracle {

using lattice::LatticeVector;
using lattice::SubgroupPresentation;

bool VerificationReport::all_passed() const {
    for (const auto& c : checks) {
        if (!c.passed()) return false;
    }
    return true;
}

std::size_t VerificationReport::count(Status s) const {
    std::size_t total = 0;
    for (const auto& c : checks) total += c.status == s ? 1 : 0;
    return total;
}

void VerificationReport::append(const VerificationReport& other, const std::string& prefix) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.status, c.detail});
}

namespace {

class Recorder {
public:
    explicit Recorder(VerificationReport& r) : report_(r) {}

    void expect(const std::string& name, bool ok, std::string detail) {
        report_.checks.push_back({name, ok ? Status::passed : Status::failed, std::move(detail)});
    }
    void skip(const std::string& name, std::string why) {
        report_.checks.push_back({name, Status::skipped, std::move(why)});
    }

private:
    VerificationReport& report_;
};

std::vector<unsigned> divisors(unsigned e) {
    std::vector<unsigned> out;
    for (unsigned q = 1; q <= e; ++q) {
        if (e % q == 0) out.push_back(q);
    }
    return out;
}

}  // namespace

VerificationReport verify_pipeline(const SubgroupPresentation& g, const VerifyOptions& opts) {
    VerificationReport report;
    Recorder rec(report);
    const auto& s = g.surface();
    const Integer& d = s.d();

    SeshadriResult result;
    try {
        result = multi_at_subgroup(g);
    } catch (const std::exception& e) {
        rec.expect("pipeline", false, e.what());
        return report;
    }
    const Trace& t = result.trace;
    const Rational& eps = result.epsilon;
    rec.expect("pipeline", true, "epsilon = " + eps.to_string() + " (" + to_string(result.case_tag) + ")");

    if (result.case_tag == CaseTag::pell && t.pell) {
        const auto& p = *t.pell;
        rec.expect("pell_identity", p.l0 * p.l0 - p.D * p.k0 * p.k0 == 1,
                   "l0=" + p.l0.get_str() + " k0=" + p.k0.get_str() + " D=" + p.D.get_str());
        if (auto brute = pell::pell_bruteforce(p.D, Integer(opts.pell_k_max))) {
            rec.expect("pell_bruteforce", *brute == p,
                       "scan found (" + brute->l0.get_str() + ", " + brute->k0.get_str() + ")");
        } else {
            rec.skip("pell_bruteforce", "k0 exceeds scan bound " + std::to_string(opts.pell_k_max));
        }
    } else if (result.case_tag == CaseTag::pell) {
        rec.expect("pell_identity", false, "pell case without Pell data");
    }

    const auto& basis = *t.basis;
    const Integer scanned = descent::minimal_n_bruteforce(s, basis);
    rec.expect("minimal_n", scanned == t.n, "lcm=" + t.n.get_str() + " scan=" + scanned.get_str());

    const auto inv = lattice::quotient_invariants(basis);
    rec.expect("exp_squared_bound", descent::exp_squared_bound_check(inv, t.n),
               "n=" + t.n.get_str() + " exp=" + inv.exponent.get_str());

    rec.expect("determinant", basis.determinant() == Rational::reduce(1, t.g),
               "det=" + basis.determinant().to_string() + " g=" + t.g.get_str());
    try {
        const auto elements = lattice::enumerate_subgroup(g, opts.enumeration_cap);
        rec.expect("subgroup_order", Integer(static_cast<unsigned long>(elements.size())) == t.g,
                   "enumerated " + std::to_string(elements.size()) + ", g=" + t.g.get_str());
    } catch (const InputError&) {
        rec.skip("subgroup_order", "order above enumeration cap " + std::to_string(opts.enumeration_cap));
    }

    const auto [d1, d2] = t.type_of_M;
    rec.expect("pfaffian", d1 * d2 * t.g == t.n * t.n * d,
               "d1=" + d1.get_str() + " d2=" + d2.get_str() + " n=" + t.n.get_str() + " g=" + t.g.get_str());

    const Rational bound_sq = Rational::reduce(2 * d, t.g);
    const Rational eps_sq = eps * eps;
    rec.expect("upper_bound", eps_sq <= bound_sq && ((eps_sq == bound_sq) == (result.case_tag == CaseTag::square)),
               "eps^2=" + eps_sq.to_string() + " 2d/g=" + bound_sq.to_string());

    if (result.case_tag == CaseTag::pell && t.pell) {
        // eps^2 l0^2 g = (l0^2 - 1) 2d, cross-multiplied over eps = p/q.
        const Integer& l0 = t.pell->l0;
        const Integer lhs = eps.num() * eps.num() * l0 * l0 * t.g;
        const Integer rhs = (l0 * l0 - 1) * 2 * d * eps.den() * eps.den();
        rec.expect("form_identity", lhs == rhs, lhs.get_str() + " vs " + rhs.get_str());
    } else {
        const bool square = is_perfect_square(bound_sq).has_value();
        rec.expect("rationality", square && eps_sq == bound_sq, "2d/g=" + bound_sq.to_string());
    }

    const auto simple = bauer_simple(t.d_prime);
    rec.expect("scaling", eps * Rational(t.n) == simple.epsilon,
               "eps*n=" + (eps * Rational(t.n)).to_string() + " eps(M)=" + simple.epsilon.to_string());
    return report;
}

SubgroupPresentation random_presentation(std::mt19937_64& rng, unsigned d_max, unsigned exp_max) {
    std::uniform_int_distribution<unsigned> pick_d(1, std::max(1U, d_max));
    std::uniform_int_distribution<unsigned> pick_exp(1, std::max(1U, exp_max));
    std::uniform_int_distribution<unsigned> pick_count(1, 3);

    const unsigned d = pick_d(rng);
    // Every coordinate denominator divides one exponent bound, so exp(G) <= exp_max.
    const auto dens = divisors(pick_exp(rng));
    std::uniform_int_distribution<std::size_t> pick_den(0, dens.size() - 1);

    std::vector<LatticeVector> gens(pick_count(rng));
    for (auto& gen : gens) {
        for (auto& c : gen.coords) {
            const unsigned q = dens[pick_den(rng)];
            std::uniform_int_distribution<unsigned> pick_num(0, q - 1);
            c = Rational::reduce(pick_num(rng), q);
        }
    }
    return SubgroupPresentation(lattice::PolarizedSurface(d), std::move(gens));
}

VerificationReport randomized_suite(std::uint64_t seed, unsigned trials, unsigned d_max, unsigned exp_max,
                                    const VerifyOptions& opts) {
    if (trials < 1) throw InputError("trials must be >= 1");
    std::mt19937_64 rng(seed);
    VerificationReport report;
    for (unsigned i = 0; i < trials; ++i) {
        const auto presentation = random_presentation(rng, d_max, exp_max);
        report.append(verify_pipeline(presentation, opts), "trial " + std::to_string(i) + ": ");
    }
    return report;
}

}  // namespace seshadri::oracle
