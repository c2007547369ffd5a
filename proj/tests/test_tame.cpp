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

TEST_CASE("window_eval of sbar(D1) has S^2 components of dim 8") {
    const Corpus& c = corpus();
    TameComplex t = sbar(c.d1, c.koszul, 4);
    Fragment f = window_eval(t, -2, 2);
    for (auto& m : f.comp)
        CHECK(m.dim() == 8);
    /* evaluation beyond the window uses the periodic descriptors */
    Fragment wide = window_eval(t, -9, 9);
    CHECK(wide.comp.front().dim() == 8);
    CHECK(wide.comp.back().dim() == 8);
}

TEST_CASE("overlapping windows agree") {
    const Corpus& c = corpus();
    TameComplex t = sbar(c.d1, c.koszul, 4);
    Fragment a = window_eval(t, -3, 1);
    Fragment b = window_eval(t, -1, 3);
    for (int deg = -1; deg <= 1; ++deg) {
        CHECK(a.comp[static_cast<size_t>(deg - a.lo)] == b.comp[static_cast<size_t>(deg - b.lo)]);
        if (deg < 1)
            CHECK(a.d[static_cast<size_t>(deg - a.lo)] == b.d[static_cast<size_t>(deg - b.lo)]);
    }
}

TEST_CASE("descriptor soundness: identities hold on the widened window") {
    const Corpus& c = corpus();
    TameComplex t = sbar(c.d1, c.koszul, 4);
    Fragment f = window_eval(t, -8, 8);
    for (size_t i = 0; i + 1 < f.d.size(); ++i)
        CHECK((f.d[i + 1] * f.d[i]).is_zero());
    for (size_t i = 2; i < f.s.size(); ++i)
        CHECK((f.s[i - 1] * f.s[i]).is_zero());
    /* periodicity of cells two apart */
    for (int deg = -8; deg <= 6; ++deg) {
        CHECK(t.component(deg) == t.component(deg - 2));
        CHECK(t.dmap(deg) == t.dmap(deg - 2));
    }
}

TEST_CASE("mismatched boundary descriptors are rejected") {
    const Corpus& c = corpus();
    /* an asymmetric duplex: the trivial (id, w) factorization */
    Duplex triv{c.s4, c.w, c.s4_reg, c.s4_reg, Matrix::identity(c.field, 4), c.s4->left_mult(c.w)};
    TameComplex t = sbar(triv, c.koszul, 4);
    /* swap the parity of the above end: cells no longer match the boundary */
    TameEnd bad = TameEnd::periodic2(t.component(1), t.component(0), t.dmap(1), t.dmap(0), t.smap(1),
                                     t.smap(0));
    std::vector<FinModule> comp;
    std::vector<Matrix> d, s;
    for (int deg = -4; deg <= 4; ++deg) {
        comp.push_back(t.component(deg));
        if (deg < 4)
            d.push_back(t.dmap(deg));
        if (deg > -4)
            s.push_back(t.smap(deg));
    }
    CHECK_THROWS_AS(TameComplex(c.koszul, -4, 4, comp, d, s, t.below(), bad), ValidationError);
}

TEST_CASE("acyclicity: contractible objects yes, stalks no") {
    const Corpus& c = corpus();
    /* a contractible 2-periodic object: sbar of the trivial duplex (id, w) */
    Duplex triv{c.s4, c.w, c.s4_reg, c.s4_reg, Matrix::identity(c.field, 4), c.s4->left_mult(c.w)};
    REQUIRE(check_duplex(triv).valid());
    TameComplex t = sbar(triv, c.koszul, 4);
    AcyclicityVerdict v = is_acyclic_on(t, -3, 3);
    CHECK(v.acyclic);
    /* the completed bar of X_K is acyclic strictly below the augmentation end */
    TameComplex b = completed_bar_closed(c.x_k, c.koszul);
    AcyclicityVerdict vb = is_acyclic_on(b, -6, -1);
    CHECK(vb.acyclic);
    /* a stalk has cohomology */
    MixedComplex stalk;
    stalk.S = c.s2;
    stalk.w = std::vector<Scalar>(2, c.field.zero());
    stalk.comp.emplace(0, c.s2_reg);
    CdgRingPtr k2 = CdgRing::koszul(c.s2, stalk.w);
    std::vector<FinModule> comp{FinModule::zero(c.s2), c.s2_reg, FinModule::zero(c.s2)};
    std::vector<Matrix> d{Matrix(c.field, 2, 0), Matrix(c.field, 0, 2)};
    std::vector<Matrix> s{Matrix(c.field, 0, 2), Matrix(c.field, 2, 0)};
    TameComplex ts(k2, -1, 1, comp, d, s, TameEnd::zero(), TameEnd::zero());
    AcyclicityVerdict vs = is_acyclic_on(ts, -1, 1);
    CHECK_FALSE(vs.acyclic);
    CHECK(vs.nonzero_h == std::vector<int>{0});
}

TEST_CASE("is_acyclic_on refuses non-complexes") {
    const Corpus& c = corpus();
    Fragment f;
    f.lo = 0;
    f.hi = 2;
    f.comp = {c.s4_reg, c.s4_reg, c.s4_reg};
    std::vector<Scalar> x(4, c.field.zero());
    x[1] = c.field.one();
    f.d = {c.s4->left_mult(x), c.s4->left_mult(x)}; /* d^2 = x^2 != 0 */
    f.s = {Matrix(c.field, 0, 0), Matrix(c.field, 4, 4), Matrix(c.field, 4, 4)};
    CHECK_THROWS_AS(fragment_acyclic_on(f), ValidationError);
}
