#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cdgforge/homalg.hpp"
#include "oracles.hpp"

using namespace cdgforge;

namespace {

Field f3(3);

AlgebraPtr s2() { return FinAlgebra::truncated_polynomial(f3, 2); }

FinModule simple_k(AlgebraPtr a) {
    /* A/rad for a truncated polynomial algebra: 1-dimensional, x acts by 0 */
    std::vector<Matrix> act;
    act.push_back(Matrix::identity(a->field(), 1));
    for (size_t i = 1; i < a->dim(); ++i)
        act.push_back(Matrix(a->field(), 1, 1));
    return FinModule(a, 1, std::move(act));
}

}  // namespace

TEST_CASE("algebra validation rejects broken structure constants") {
    auto a = s2();
    /* x * x = 1 breaks associativity with the unit? no - it IS associative
     * (that is F9, a field); break it instead with x*x = x, x*1 = x which
     * violates associativity: (xx)x = xx = x vs x(xx) = xx = x ... use a
     * genuinely non-associative table: x*x = 1 but 1 stays the unit works,
     * so test the unit law instead. */
    std::vector<std::vector<std::vector<Scalar>>> mult(
        2, std::vector<std::vector<Scalar>>(2, std::vector<Scalar>(2, f3.zero())));
    mult[0][0][0] = f3.one();
    mult[0][1][1] = f3.one();
    mult[1][0][0] = f3.one(); /* x * 1 = 1: unit law violated */
    mult[1][1][0] = f3.zero();
    std::vector<Scalar> unit = {f3.one(), f3.zero()};
    CHECK_THROWS_AS(FinAlgebra(f3, 2, mult, unit), ValidationError);
    (void)a;
}

TEST_CASE("hom spaces over S2 match the exhaustive oracle") {
    auto a = s2();
    FinModule reg = FinModule::regular(a);
    FinModule k = simple_k(a);

    /* oracle first: exhaustive enumeration over all candidate matrices */
    CHECK(test_oracles::brute_hom_dim(reg, reg) == 2);
    CHECK(test_oracles::brute_hom_dim(k, k) == 1);

    CHECK(hom_space(reg, reg).size() == 2); /* multiplications by 1 and x */
    CHECK(hom_space(k, k).size() == 1);
    CHECK(hom_space(reg, FinModule::zero(a)).size() == 0);
    for (const Matrix& h : hom_space(reg, k))
        CHECK(is_module_morphism(reg, k, h));
}

TEST_CASE("ext1 over S2 matches the extension-enumeration oracle") {
    auto a = s2();
    FinModule reg = FinModule::regular(a);
    FinModule k = simple_k(a);

    CHECK(test_oracles::brute_ext1_dim(k, k) == 1);
    CHECK(test_oracles::brute_ext1_dim(k, reg) == 0);

    CHECK(ext1(k, k).dim == 1);
    CHECK(ext1(k, reg).dim == 0);      /* S2 is self-injective */
    CHECK(ext1(reg, k).dim == 0);      /* free module */
    CHECK(ext1(reg, reg).dim == 0);
}

TEST_CASE("euler identity dim Hom(M,N) - dim Hom(P,N) + dim Hom(Omega M,N) = dim Ext1") {
    auto a = s2();
    FinModule reg = FinModule::regular(a);
    FinModule k = simple_k(a);
    std::vector<FinModule> mods = {k, reg, k.direct_sum(reg), k.direct_sum(k)};
    for (const FinModule& m : mods)
        for (const FinModule& n : mods) {
            Cover c = projective_cover(m);
            long long lhs = (long long)hom_space(m, n).size() - (long long)hom_space(c.p, n).size() +
                            (long long)hom_space(c.syzygy, n).size();
            CHECK(lhs == (long long)ext1(m, n).dim);
        }
}

TEST_CASE("classification over S2") {
    auto a = s2();
    FinModule reg = FinModule::regular(a);
    FinModule k = simple_k(a);

    /* oracle: projectivity over S2 <=> Ext1(M, k) = 0 against the unique simple */
    CHECK(test_oracles::brute_ext1_dim(reg, k) == 0);
    CHECK(test_oracles::brute_ext1_dim(k, k) == 1);

    Classification creg = classify_module(reg);
    CHECK(creg.projective);
    CHECK(creg.injective);
    Classification ck = classify_module(k);
    CHECK_FALSE(ck.projective);
    CHECK_FALSE(ck.injective);
    Classification c0 = classify_module(FinModule::zero(a));
    CHECK(c0.projective);
    CHECK(c0.injective);

    /* additivity of projectivity over direct sums */
    CHECK(classify_module(reg.direct_sum(reg)).projective);
    CHECK_FALSE(classify_module(reg.direct_sum(k)).projective);
}

TEST_CASE("stable hom over S2") {
    auto a = s2();
    FinModule reg = FinModule::regular(a);
    FinModule k = simple_k(a);

    Cover ck = projective_cover(k);
    CHECK(test_oracles::brute_stable_hom_dim(k, k, ck.p, ck.epi) == 1);
    Cover creg = projective_cover(reg);
    CHECK(test_oracles::brute_stable_hom_dim(k, reg, creg.p, creg.epi) == 0);

    CHECK(stable_hom(k, k, StableMode::Projectives).dim == 1);
    CHECK(stable_hom(reg, k, StableMode::Projectives).dim == 0);
    CHECK(stable_hom(reg, reg, StableMode::Projectives).dim == 0);
    CHECK(stable_hom(k, reg, StableMode::Projectives).dim == 0); /* socle-valued maps lift */
    CHECK(stable_hom(k, k, StableMode::Injectives).dim == 1);

    /* stable hom dimension never exceeds plain hom dimension */
    for (const FinModule* m : {&reg, &k})
        for (const FinModule* n : {&reg, &k})
            CHECK(stable_hom(*m, *n, StableMode::Projectives).dim <= hom_space(*m, *n).size());
}

TEST_CASE("factors_through agrees with stable hom kernel") {
    auto a = s2();
    FinModule k = simple_k(a);
    Matrix id1 = Matrix::identity(f3, 1);
    CHECK_FALSE(factors_through(k, k, id1, StableMode::Projectives));
    CHECK(factors_through(k, k, Matrix(f3, 1, 1), StableMode::Projectives));
    FinModule reg = FinModule::regular(a);
    for (const Matrix& h : hom_space(reg, k))
        CHECK(factors_through(reg, k, h, StableMode::Projectives)); /* projective source */
}

TEST_CASE("projective resolutions and pd detection") {
    auto a = s2();
    FinModule reg = FinModule::regular(a);
    FinModule k = simple_k(a);
    Rng rng(11);

    /* oracle: Omega k = ker(S2 ->> k) = (x) is 1-dimensional with x acting
     * by 0, i.e. Omega k = k; the minimal resolution is x-periodic */
    Cover c = projective_cover(k);
    CHECK(c.syzygy.dim() == 1);
    CHECK(test_oracles::brute_hom_dim(c.syzygy, k) == 1);

    ResolutionResult rk = projective_resolution(k, 4, rng);
    CHECK(rk.verdict == ResolutionResult::Verdict::Infinite);

    ResolutionResult rreg = projective_resolution(reg, 4, rng);
    CHECK(rreg.verdict == ResolutionResult::Verdict::Finite);
    CHECK(rreg.pd == 0);

    auto f3alg = FinAlgebra::base_field(f3);
    ResolutionResult rsemi = projective_resolution(simple_k(f3alg), 4, rng);
    CHECK(rsemi.verdict == ResolutionResult::Verdict::Finite);
    CHECK(rsemi.pd == 0);
}

TEST_CASE("isomorphism search") {
    auto a = s2();
    FinModule reg = FinModule::regular(a);
    FinModule k = simple_k(a);
    Rng rng(5);
    CHECK(find_isomorphism(k, k, rng).verdict == IsoVerdict::Yes);
    CHECK(find_isomorphism(k, reg, rng).verdict == IsoVerdict::No);
    CHECK(find_isomorphism(k.direct_sum(reg), reg.direct_sum(k), rng).verdict == IsoVerdict::Yes);
    /* k (+) k vs S2: same dimension but not isomorphic */
    CHECK(find_isomorphism(k.direct_sum(k), reg, rng).verdict == IsoVerdict::No);
}

TEST_CASE("injective envelope of k over S2 is S2") {
    auto a = s2();
    FinModule k = simple_k(a);
    Envelope e = injective_envelope(k);
    CHECK(e.e.dim() == 2);
    Rng rng(3);
    CHECK(find_isomorphism(e.e, FinModule::regular(a), rng).verdict == IsoVerdict::Yes);
    /* mono is a module map with full column rank */
    CHECK(is_module_morphism(k, e.e, e.mono));
    CHECK(e.mono.rank() == 1);
}

TEST_CASE("radical of truncated polynomial algebras") {
    CHECK(s2()->radical().cols() == 1);
    CHECK(s2()->is_split_local());
    CHECK(FinAlgebra::base_field(f3)->is_semisimple());
    CHECK(FinAlgebra::truncated_polynomial(f3, 4)->radical().cols() == 3);
    /* char 0 */
    Field q(0);
    CHECK(FinAlgebra::truncated_polynomial(q, 3)->radical().cols() == 2);
    CHECK(FinAlgebra::base_field(q)->is_semisimple());
}

TEST_CASE("the same computations run exactly over Q") {
    Field q(0);
    auto s2q = FinAlgebra::truncated_polynomial(q, 2);
    FinModule reg = FinModule::regular(s2q);
    FinModule k = simple_k(s2q);
    CHECK(hom_space(reg, reg).size() == 2);
    CHECK(ext1(k, k).dim == 1);
    CHECK(stable_hom(k, k, StableMode::Projectives).dim == 1);
    CHECK(classify_module(reg).projective);
    CHECK_FALSE(classify_module(k).projective);
    Rng rng(2);
    ResolutionResult r = projective_resolution(k, 3, rng);
    /* over Q the isomorphism search samples instead of enumerating; the
     * x-periodic syzygy is still found */
    CHECK(r.verdict == ResolutionResult::Verdict::Infinite);
}
