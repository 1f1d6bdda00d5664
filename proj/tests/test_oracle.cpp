#include "doctest.h"

#include "seshadri/oracle.hpp"

using namespace seshadri;
using namespace seshadri::lattice;
using namespace seshadri::oracle;

namespace {

const Check* find(const VerificationReport& r, const std::string& name) {
    for (const auto& c : r.checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

LatticeVector axis(long den, std::size_t i) { return Rational::reduce(1, den) * LatticeVector::basis(i); }

}  // namespace

TEST_CASE("verify_pipeline on the descent examples") {
    SUBCASE("d = 1, <lambda1/2, mu1/2>") {
        const auto r = verify_pipeline(SubgroupPresentation(PolarizedSurface(1), {axis(2, 0), axis(2, 2)}));
        CHECK(r.all_passed());
        REQUIRE(find(r, "minimal_n"));
        CHECK(find(r, "minimal_n")->detail == "lcm=4 scan=4");
        CHECK(find(r, "form_identity")->status == Status::passed);
    }
    SUBCASE("d = 3, <lambda2/3>") {
        const auto r = verify_pipeline(SubgroupPresentation(PolarizedSurface(3), {axis(3, 1)}));
        CHECK(r.all_passed());
        CHECK(find(r, "minimal_n")->detail == "lcm=1 scan=1");
    }
    SUBCASE("d = 1, trivial G") {
        const auto r = verify_pipeline(SubgroupPresentation(PolarizedSurface(1), {}));
        CHECK(r.all_passed());
        CHECK(find(r, "pipeline")->detail == "epsilon = 4/3 (pell)");
    }
    SUBCASE("square case reports rationality instead of the Pell identity") {
        const auto r = verify_pipeline(SubgroupPresentation(PolarizedSurface(2), {}));
        CHECK(r.all_passed());
        CHECK(find(r, "rationality") != nullptr);
        CHECK(find(r, "pell_identity") == nullptr);
    }
}

TEST_CASE("skipped checks are reported as skipped") {
    VerifyOptions opts;
    opts.enumeration_cap = 10;
    opts.pell_k_max = 1;
    // m = 2 torsion on d = 3: 16 elements, Pell D = 6 has k0 = 2.
    const auto r = verify_pipeline(torsion_presentation(PolarizedSurface(3), 2), opts);
    CHECK(find(r, "subgroup_order")->status == Status::skipped);
    CHECK(find(r, "pell_bruteforce")->status == Status::skipped);
    CHECK(r.all_passed());
    CHECK(r.count(Status::skipped) == 2);
}

TEST_CASE("report aggregation") {
    VerificationReport r;
    CHECK(r.all_passed());
    r.checks.push_back({"a", Status::passed, ""});
    r.checks.push_back({"b", Status::skipped, ""});
    CHECK(r.all_passed());
    r.checks.push_back({"c", Status::failed, "boom"});
    CHECK_FALSE(r.all_passed());
    VerificationReport outer;
    outer.append(r, "trial 0: ");
    CHECK(outer.checks.size() == 3);
    CHECK(outer.checks[2].name == "trial 0: c");
}

TEST_CASE("randomized_suite") {
    const auto r = randomized_suite(0, 100, 12, 6);
    CHECK(r.all_passed());
    CHECK(r.count(Status::failed) == 0);
    CHECK(r.checks.size() >= 100 * 9);

    const auto tiny = randomized_suite(42, 1, 1, 1);
    CHECK(tiny.all_passed());
    CHECK(find(tiny, "trial 0: pipeline")->detail == "epsilon = 4/3 (pell)");

    const auto again = randomized_suite(0, 100, 12, 6);
    REQUIRE(again.checks.size() == r.checks.size());
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
        CHECK(again.checks[i].name == r.checks[i].name);
        CHECK(again.checks[i].detail == r.checks[i].detail);
        CHECK(again.checks[i].status == r.checks[i].status);
    }
}

TEST_CASE("random presentations respect the exponent bound") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_presentation(rng, 12, 6);
        CHECK(p.surface().d() <= 12);
        CHECK(quotient_invariants(superlattice(p)).exponent <= 6);
    }
}
