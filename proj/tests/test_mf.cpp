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

bool maps_equal(const GradedMap& a, const GradedMap& b) {
    for (auto& [d, m] : a.comp) {
        const Matrix* o = b.find(d);
        if (!o) {
            if (!m.is_zero())
                return false;
            continue;
        }
        if (!(m == *o))
            return false;
    }
    for (auto& [d, m] : b.comp)
        if (!a.find(d) && !m.is_zero())
            return false;
    return true;
}

}  // namespace

TEST_CASE("X_K is the quoted module: X^0 = S, X^{-1} = S s, d = w, s = id") {
    const Corpus& c = corpus();
    const MixedComplex& x = c.x_k;
    CHECK(x.dim(0) == 4);
    CHECK(x.dim(-1) == 4);
    CHECK(x.dmap(-1) == c.s4->left_mult(c.w));
    CHECK(x.smap(0) == Matrix::identity(c.field, 4));
    CHECK(check_mixed(x).valid());
}

TEST_CASE("check_mixed flags constructed violations") {
    const Corpus& c = corpus();
    MixedComplex bad = c.x_k;
    bad.d[-1] = bad.d[-1].negated();
    ValidationReport rep = check_mixed(bad);
    CHECK_FALSE(rep.valid());
    bool curvature_flagged = false;
    for (const std::string& v : rep.violations)
        if (v.find("ds + sd") != std::string::npos)
            curvature_flagged = true;
    CHECK(curvature_flagged);
    MixedComplex zero;
    zero.S = c.s4;
    zero.w = c.w;
    CHECK(check_mixed(zero).valid());
}

TEST_CASE("check_duplex: D1 valid, fg = x^4 invalid") {
    const Corpus& c = corpus();
    CHECK(check_duplex(c.d1).valid());
    std::vector<Scalar> x3(4, c.field.zero());
    x3[3] = c.field.one();
    Duplex bad{c.s4, c.w, c.s4_reg, c.s4_reg, c.d1.f, c.s4->left_mult(x3)};
    ValidationReport rep = check_duplex(bad);
    CHECK_FALSE(rep.valid()); /* f g = x^4 = 0 != w */
}

TEST_CASE("fold of X_K is a duplex with fg = gf = w, both modes equal") {
    const Corpus& c = corpus();
    Duplex f1 = fold(c.x_k, FoldMode::Product);
    Duplex f2 = fold(c.x_k, FoldMode::Sum);
    CHECK(f1.f == f2.f);
    CHECK(f1.g == f2.g);
    CHECK(check_duplex(f1).valid());
    /* M0 = X^0; the map out of it is s = id, the map back is d = w */
    CHECK(f1.m0.dim() == 4);
    CHECK(f1.m1.dim() == 4);
    CHECK(f1.f == Matrix::identity(c.field, 4));
    CHECK(f1.g == c.s4->left_mult(c.w));
    /* direct multiplication oracle */
    CHECK(f1.f * f1.g == f1.m1.action_of(c.w));
    CHECK(f1.g * f1.f == f1.m0.action_of(c.w));
    /* fold of a w = 0 complex with s = 0: classical folding, fg = 0 */
    MixedComplex cls;
    cls.S = c.s4;
    cls.w = std::vector<Scalar>(4, c.field.zero());
    cls.comp.emplace(0, c.s4_reg);
    cls.comp.emplace(1, c.s4_reg);
    cls.d[0] = c.s4->left_mult(c.w); /* d = x^2, d^2 = x^4 = 0 */
    REQUIRE(check_mixed(cls).valid());
    Duplex fc = fold(cls, FoldMode::Sum);
    CHECK((fc.f * fc.g).is_zero());
    CHECK((fc.g * fc.f).is_zero());
}

TEST_CASE("sbar(D1): window matrices match the quoted blocks and the module laws hold") {
    const Corpus& c = corpus();
    TameComplex t = sbar(c.d1, c.koszul, 4);
    for (int deg = -2; deg <= 2; ++deg)
        CHECK(t.dim(deg) == 8);
    /* forward even -> odd block [[x, x^2], [-1, -x]] */
    Matrix mx = c.d1.f;
    Matrix expected(c.field, 8, 8);
    expected.paste(0, 0, mx);
    expected.paste(0, 4, c.s4->left_mult(c.w));
    expected.paste(4, 0, Matrix::identity(c.field, 4).negated());
    expected.paste(4, 4, mx.negated());
    CHECK(t.dmap(0) == expected);
    CHECK(t.dmap(2) == expected);
    /* backward block [[0,0],[1,0]] */
    Matrix back(c.field, 8, 8);
    back.paste(4, 0, Matrix::identity(c.field, 4));
    CHECK(t.smap(0) == back);
    /* 2x2 block multiplication oracle: del^2 = 0, s^2 = 0, ds + sd = w */
    for (int deg = -4; deg <= 3; ++deg) {
        CHECK((t.dmap(deg + 1) * t.dmap(deg)).is_zero());
        Matrix lhs = t.smap(deg + 1) * t.dmap(deg) + t.dmap(deg - 1) * t.smap(deg);
        CHECK(lhs == t.component(deg).action_of(c.w));
        CHECK((t.smap(deg - 1) * t.smap(deg)).is_zero());
    }
}

TEST_CASE("sbar of random duplexes satisfies the module laws on [-4, 4]") {
    const Corpus& c = corpus();
    Rng rng(101);
    for (int tcase = 0; tcase < 8; ++tcase) {
        Duplex d = random_duplex(c, rng);
        TameComplex t = sbar(d, c.koszul, 4); /* construction validates on [-8, 8] */
        for (int deg = -4; deg < 4; ++deg)
            CHECK((t.dmap(deg + 1) * t.dmap(deg)).is_zero());
    }
}

TEST_CASE("prod transposition: round trips on random morphisms") {
    const Corpus& c = corpus();
    Rng rng(7);
    for (int tcase = 0; tcase < 6; ++tcase) {
        MixedComplex x = random_mixed_complex(c, rng);
        Duplex m = random_duplex(c, rng);
        Duplex fx = fold(x, FoldMode::Product);
        auto dm_basis = duplex_morphism_space(m, fx);
        DuplexMorphism psi = random_duplex_morphism(dm_basis, m, fx, rng);
        REQUIRE(is_duplex_morphism(m, fx, psi));
        GradedMap phi = transpose_prod_to_mixed(m, x, psi);
        CHECK(is_sbar_to_mixed_morphism(m, x, phi));
        DuplexMorphism back = transpose_prod_to_duplex(m, x, phi);
        CHECK(back.c0 == psi.c0);
        CHECK(back.c1 == psi.c1);
        /* and the other way round */
        auto phis = sbar_to_mixed_morphism_space(m, x);
        GradedMap phi2 = random_graded_map(phis, c.field, rng);
        DuplexMorphism psi2 = transpose_prod_to_duplex(m, x, phi2);
        CHECK(is_duplex_morphism(m, fx, psi2));
        GradedMap phi3 = transpose_prod_to_mixed(m, x, psi2);
        CHECK(maps_equal(phi2, phi3));
    }
}

TEST_CASE("sum transposition: round trips on random morphisms") {
    const Corpus& c = corpus();
    Rng rng(13);
    for (int tcase = 0; tcase < 6; ++tcase) {
        MixedComplex x = random_mixed_complex(c, rng);
        Duplex m = random_duplex(c, rng);
        Duplex fx = fold(x, FoldMode::Sum);
        auto dm_basis = duplex_morphism_space(fx, m);
        DuplexMorphism psi = random_duplex_morphism(dm_basis, fx, m, rng);
        REQUIRE(is_duplex_morphism(fx, m, psi));
        GradedMap phi = transpose_sum_to_mixed(m, x, psi);
        CHECK(is_mixed_to_sbar_sigma_morphism(m, x, phi));
        DuplexMorphism back = transpose_sum_to_duplex(m, x, phi);
        CHECK(back.c0 == psi.c0);
        CHECK(back.c1 == psi.c1);
        auto phis = mixed_to_sbar_sigma_morphism_space(m, x);
        GradedMap phi2 = random_graded_map(phis, c.field, rng);
        DuplexMorphism psi2 = transpose_sum_to_duplex(m, x, phi2);
        CHECK(is_duplex_morphism(fx, m, psi2));
        GradedMap phi3 = transpose_sum_to_mixed(m, x, psi2);
        CHECK(maps_equal(phi2, phi3));
    }
}

TEST_CASE("naturality of the prod transposition in the duplex argument") {
    const Corpus& c = corpus();
    Rng rng(19);
    for (int tcase = 0; tcase < 4; ++tcase) {
        MixedComplex x = random_mixed_complex(c, rng);
        Duplex m = random_duplex(c, rng);
        Duplex m2 = random_duplex(c, rng);
        Duplex fx = fold(x, FoldMode::Product);
        auto theta_basis = duplex_morphism_space(m2, m);
        auto psi_basis = duplex_morphism_space(m, fx);
        DuplexMorphism theta = random_duplex_morphism(theta_basis, m2, m, rng);
        DuplexMorphism psi = random_duplex_morphism(psi_basis, m, fx, rng);
        DuplexMorphism composite{psi.c0 * theta.c0, psi.c1 * theta.c1};
        /* transpose(psi . theta) = transpose(psi) . sbar(theta) */
        GradedMap lhs = transpose_prod_to_mixed(m2, x, composite);
        GradedMap phi = transpose_prod_to_mixed(m, x, psi);
        GradedMap rhs;
        for (auto& [n, comp] : phi.comp) {
            /* sbar(theta) at degree n is diag(theta^{par n}, theta^{par n+1}) */
            const Matrix& a = ((n % 2) + 2) % 2 == 0 ? theta.c0 : theta.c1;
            const Matrix& b = ((n % 2) + 2) % 2 == 0 ? theta.c1 : theta.c0;
            Matrix st(c.field, a.rows() + b.rows(), a.cols() + b.cols());
            st.paste(0, 0, a);
            st.paste(a.rows(), a.cols(), b);
            rhs.comp[n] = comp * st;
        }
        CHECK(maps_equal(lhs, rhs));
    }
}

TEST_CASE("counit sbar(fold X_K) -> X_K is a surjective morphism in degrees -1, 0") {
    const Corpus& c = corpus();
    GradedMap eps = counit_prod(c.x_k);
    Duplex fx = fold(c.x_k, FoldMode::Product);
    CHECK(is_sbar_to_mixed_morphism(fx, c.x_k, eps));
    for (int deg : {-1, 0}) {
        const Matrix* m = eps.find(deg);
        REQUIRE(m != nullptr);
        CHECK(m->rank() == c.x_k.dim(deg));
    }
    /* zero transposes to zero */
    DuplexMorphism zero{Matrix(c.field, fx.m0.dim(), fx.m0.dim()), Matrix(c.field, fx.m1.dim(), fx.m1.dim())};
    GradedMap z = transpose_prod_to_mixed(fx, c.x_k, zero);
    for (auto& [n, mat] : z.comp)
        CHECK(mat.is_zero());
}

TEST_CASE("unit of the prod adjunction is injective") {
    const Corpus& c = corpus();
    DuplexMorphism eta = unit_prod(c.d1, c.koszul);
    CHECK(eta.c0.rank() == c.d1.m0.dim());
    CHECK(eta.c1.rank() == c.d1.m1.dim());
}

TEST_CASE("bar complex of X_K: term dims, morphism laws, acyclicity on [-5, 5]") {
    const Corpus& c = corpus();
    BarComplex bar = bar_complex(c.x_k, 8);
    /* each full term K (x) Sigma^k X has total dim 2 dim X = 16 */
    for (size_t k = 0; k < bar.terms.size(); ++k) {
        size_t total = 0;
        for (auto& [n, m] : bar.terms[k].comp)
            total += m.dim();
        CHECK(total == 16);
        CHECK(check_mixed(bar.terms[k]).valid());
    }
    for (auto& [n, m] : bar.augmentation.comp)
        CHECK(m.rank() == c.x_k.dim(n));
    /* consecutive bar maps compose to zero */
    for (size_t k = 0; k + 1 < bar.maps.size(); ++k)
        for (auto& [n, m] : bar.maps[k + 1].comp)
            if (const Matrix* next = bar.maps[k].find(n))
                CHECK(((*next) * m).is_zero());
    AcyclicityVerdict v = bar_acyclic_on(bar, -5, 5);
    CHECK(v.acyclic);
    /* insufficient depth is refused, not guessed */
    BarComplex shallow = bar_complex(c.x_k, 1);
    CHECK_THROWS_AS(bar_acyclic_on(shallow, -5, 5), ValidationError);
}

TEST_CASE("completed bar of X_K: closed-form dims and laws") {
    const Corpus& c = corpus();
    TameComplex b = completed_bar_closed(c.x_k, c.koszul);
    /* (B X)^n = prod_{k>=n} X^k: dims 8 for n <= -1, 4 at n = 0, 0 above */
    CHECK(b.dim(-1) == 8);
    CHECK(b.dim(-5) == 8);
    CHECK(b.dim(0) == 4);
    CHECK(b.dim(1) == 0);
    for (int deg = -4; deg <= 1; ++deg)
        CHECK((b.smap(deg - 1) * b.smap(deg)).is_zero());
}

TEST_CASE("completed bar: closed form equals the totalization matrix-for-matrix") {
    const Corpus& c = corpus();
    CompletedBarCrossCheck ok = completed_bar_crosscheck(c.x_k, c.koszul, BarSignConvention::Quoted);
    if (!ok.equal)
        MESSAGE(ok.detail);
    CHECK(ok.equal);
    /* mutating the suspension sign must break the equality */
    CompletedBarCrossCheck bad =
        completed_bar_crosscheck(c.x_k, c.koszul, BarSignConvention::MutatedDropDegreeTerm);
    CHECK_FALSE(bad.equal);
}

TEST_CASE("completed bar cross-check on random mixed complexes") {
    const Corpus& c = corpus();
    Rng rng(37);
    for (int t = 0; t < 4; ++t) {
        MixedComplex x = random_mixed_complex(c, rng);
        CompletedBarCrossCheck ok = completed_bar_crosscheck(x, c.koszul, BarSignConvention::Quoted);
        if (!ok.equal)
            MESSAGE(ok.detail);
        CHECK(ok.equal);
    }
}

TEST_CASE("alpha: epimorphism with the quoted kernel dims") {
    const Corpus& c = corpus();
    AlphaData a = alpha_epi(c.x_k, c.koszul);
    CHECK(a.alpha_is_morphism);
    CHECK(a.alpha_surjective);
    /* (sbar fold X_K)^n = prod_k X^k has dim 8 for every n */
    for (int n = -3; n <= 3; ++n)
        CHECK(a.sbar_fold.dim(n) == 8);
    /* ker(alpha)^0 = prod_{k<0} X^k = X^{-1}, dim 4 */
    CHECK(a.kernel.dim(0) == 4);
    CHECK(a.kernel.dim(-1) == 0);
    CHECK(a.kernel.dim(1) == 8);
    CHECK(a.kernel.dim(5) == 8); /* eventually constant above */
    CHECK(a.kernel.below().kind == TameEnd::Kind::Zero);
}

TEST_CASE("filtration quotients are K (x) Sigma^{-2i-2} X") {
    const Corpus& c = corpus();
    Rng rng(41);
    for (size_t i = 0; i < 3; ++i) {
        FiltrationCheck fc = filtration_quotient_check(c.x_k, c.koszul, i, rng);
        CHECK(fc.isomorphic);
    }
    /* the kernel's closed form restricted to the quotient factors equals the
     * filtration rules */
    AlphaData a = alpha_epi(c.x_k, c.koszul);
    MixedComplex q0 = filtration_quotient(c.x_k, 0);
    for (auto& [n, m] : q0.comp) {
        size_t tail = m.dim();
        Matrix kd = a.kernel.dmap(n);
        Matrix qd = q0.dmap(n);
        if (qd.rows() == 0 || kd.rows() == 0)
            continue;
        Matrix sub = kd.submatrix(kd.rows() - qd.rows(), kd.cols() - tail, qd.rows(), tail);
        CHECK(sub == qd);
    }
}

TEST_CASE("induce_koszul: dims, freeness, contractibility for stalks") {
    const Corpus& c = corpus();
    /* K (x) (S4 in degree 0) = K itself */
    SModuleComplex v;
    v.S = c.s4;
    v.comp.emplace(0, c.s4_reg);
    MixedComplex ind = induce_koszul(c.koszul, v, 0);
    CHECK(check_mixed(ind).valid());
    CHECK(ind.dim(0) == 4);
    CHECK(ind.dim(-1) == 4);
    Rng rng(5);
    CdgModule ic = mixed_to_cdg(c.koszul, ind);
    CdgModule reg = CdgModule::regular(c.koszul);
    CHECK(find_cdg_isomorphism(ic, reg, rng).verdict == IsoVerdict::Yes);
    /* folding an induced stalk gives a contractible duplex: explicit witness */
    Duplex folded = fold(ind, FoldMode::Product);
    Contractibility contr = is_contractible(duplex_to_cdg(c.two_periodic, folded));
    CHECK(contr.contractible);
    /* dim = 2 dim V */
    SModuleComplex v2;
    v2.S = c.s4;
    v2.comp.emplace(0, c.s4_jordan(2));
    MixedComplex ind2 = induce_koszul(c.koszul, v2, 3);
    size_t total = 0;
    for (auto& [n, m] : ind2.comp)
        total += m.dim();
    CHECK(total == 4);
}

TEST_CASE("epsilon = q . alpha exactly") {
    const Corpus& c = corpus();
    CHECK(counit_factorization_check(c.x_k, c.koszul));
    /* a w = 0 instance over S2: stalk with d = 0, s = 0 */
    MixedComplex stalk;
    stalk.S = c.s2;
    stalk.w = std::vector<Scalar>(2, c.field.zero());
    stalk.comp.emplace(0, c.s2_reg);
    REQUIRE(check_mixed(stalk).valid());
    CdgRingPtr k2 = CdgRing::koszul(c.s2, stalk.w);
    CHECK(counit_factorization_check(stalk, k2));
    Rng rng(43);
    for (int t = 0; t < 3; ++t)
        CHECK(counit_factorization_check(random_mixed_complex(c, rng), c.koszul));
}
