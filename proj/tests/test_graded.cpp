#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cdgforge/corpus.hpp"
#include "oracles.hpp"

using namespace cdgforge;

namespace {
const Corpus& corpus() {
    static Corpus c = standard_corpus(3);
    return c;
}
}  // namespace

TEST_CASE("koszul base algebra has the quoted shape") {
    const Corpus& c = corpus();
    const GradedAlgebra& a = *c.koszul->base();
    CHECK(a.dim() == 8); /* S4 in degree 0 plus s S4 in degree -1 */
    CHECK(a.component_dim(0) == 4);
    CHECK(a.component_dim(-1) == 4);
    /* s^2 = 0 */
    CHECK(a.basis_product(4, 4) == std::vector<Scalar>(8, c.field.zero()));
}

TEST_CASE("graded module validation catches broken actions") {
    const Corpus& c = corpus();
    const GradedAlgebraPtr& base = c.ch_s2->base();
    std::map<int, size_t> dims{{0, 1}};
    std::vector<GradedMap> act(base->dim());
    act[0].comp[0] = Matrix::identity(c.field, 1);
    act[1].comp[0] = Matrix::identity(c.field, 1); /* x acts as 1: violates x^2 = 0 */
    CHECK_THROWS_AS(GradedModule(base, dims, act), ValidationError);
}

TEST_CASE("free graded modules are projective, simples are not") {
    const Corpus& c = corpus();
    GradedModule free_k = GradedModule::free_module(c.koszul->base(), 0);
    CHECK(graded_projective(free_k));
    CHECK(free_k.total_dim() == 8);
    CHECK(graded_projective(GradedModule::free_module(c.koszul->base(), 2)));
    /* the graded simple at degree 0 */
    std::map<int, size_t> dims{{0, 1}};
    std::vector<GradedMap> act(c.koszul->base()->dim());
    act[0].comp[0] = Matrix::identity(c.field, 1);
    GradedModule simple(c.koszul->base(), dims, act);
    CHECK_FALSE(graded_projective(simple));
    CHECK_FALSE(graded_injective(simple));
    /* K# is graded self-injective (Frobenius) */
    CHECK(graded_injective(free_k));
}

TEST_CASE("graded hom with twist matches the free-rank-one oracle") {
    const Corpus& c = corpus();
    GradedModule k_sharp = GradedModule::free_module(c.koszul->base(), 0);
    /* oracle: a graded K#-linear map K# -> Sigma^k K# is determined by the
     * image of 1, an element of K^k; the dimension is dim K^k */
    CHECK(graded_hom_basis(k_sharp, k_sharp, 0).size() == 4);
    CHECK(graded_hom_basis(k_sharp, k_sharp, -1).size() == 4);
    CHECK(graded_hom_basis(k_sharp, k_sharp, 1).size() == 0);
    CHECK(graded_hom_basis(k_sharp, k_sharp, -2).size() == 0);
}

TEST_CASE("graded suspension composes strictly") {
    const Corpus& c = corpus();
    GradedModule free_k = GradedModule::free_module(c.koszul->base(), 0);
    for (int m = -2; m <= 2; ++m)
        for (int n = -2; n <= 2; ++n)
            CHECK(free_k.suspend(m).suspend(n) == free_k.suspend(m + n));
    CHECK(free_k.suspend(0) == free_k);
}

TEST_CASE("graded dual is an involution on dims") {
    const Corpus& c = corpus();
    Rng rng(2);
    GradedModule z = random_graded_module(c, rng);
    GradedAlgebraPtr op = graded_opposite(z.algebra());
    GradedModule d = z.dual(op);
    GradedModule dd = d.dual(graded_opposite(op));
    CHECK(dd.dims() == z.dims());
}

TEST_CASE("two-periodic base ring has components (S4, 0) and curvature x^2") {
    const Corpus& c = corpus();
    const GradedAlgebra& a = *c.two_periodic->base();
    CHECK(a.grading().kind == GradingGroup::Kind::Z2);
    CHECK(a.dim() == 4);
    CHECK(a.component_dim(0) == 4);
    CHECK(a.component_dim(1) == 0);
    CHECK(c.two_periodic->curvature()[2] == c.field.one());
}
