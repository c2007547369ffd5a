#include "cdgforge/corpus.hpp"

#include "cdgforge/mateq.hpp"

namespace cdgforge {

namespace {

FinModule jordan_module(const AlgebraPtr& alg, size_t j) {
    /* F_p[x]/(x^n)-module F_p[x]/(x^j): x acts as a single nilpotent block */
    const Field& f = alg->field();
    Matrix n(f, j, j);
    for (size_t i = 0; i + 1 < j; ++i)
        n.at(i + 1, i) = f.one();
    std::vector<Matrix> act;
    Matrix power = Matrix::identity(f, j);
    for (size_t i = 0; i < alg->dim(); ++i) {
        act.push_back(power);
        power = n * power;
    }
    return FinModule(alg, j, std::move(act));
}

}  // namespace

FinModule Corpus::s4_jordan(size_t j) const { return jordan_module(s4, j); }
FinModule Corpus::s2_jordan(size_t j) const { return jordan_module(s2, j); }

Corpus standard_corpus(long long p) {
    Field f(p);
    AlgebraPtr base = FinAlgebra::base_field(f);
    AlgebraPtr s2 = FinAlgebra::truncated_polynomial(f, 2);
    AlgebraPtr s4 = FinAlgebra::truncated_polynomial(f, 4);
    std::vector<Scalar> w(4, f.zero());
    w[2] = f.one();
    std::vector<Scalar> x_s2(2, f.zero());
    x_s2[1] = f.one();
    CdgRingPtr koszul = CdgRing::koszul(s4, w);
    CdgRingPtr two_periodic = CdgRing::curved_two_periodic(s4, w);
    CdgRingPtr ch_s2 = CdgRing::ring_as_dg(s2);
    CdgRingPtr ch_base = CdgRing::ring_as_dg(base);
    FinModule s2_reg = FinModule::regular(s2);
    FinModule k_s2 = jordan_module(s2, 1);
    FinModule s4_reg = FinModule::regular(s4);
    FinModule k_s4 = jordan_module(s4, 1);
    MixedComplex x_k = cdg_to_mixed(CdgModule::regular(koszul));
    std::vector<Scalar> x4(4, f.zero());
    x4[1] = f.one();
    Matrix mx = s4->left_mult(x4);
    Duplex d1{s4, w, s4_reg, s4_reg, mx, mx};
    return Corpus{f,       base,   s2,    s4,     w,    x_s2,  koszul, two_periodic,
                  ch_s2,   ch_base, s2_reg, k_s2,  s4_reg, k_s4, x_k,    d1};
}

namespace {

FinModule random_blocks(const AlgebraPtr& alg, size_t max_block_size, Rng& rng, size_t max_blocks) {
    size_t count = rng.below(max_blocks + 1);
    FinModule m = FinModule::zero(alg);
    for (size_t i = 0; i < count; ++i)
        m = m.direct_sum(jordan_module(alg, 1 + rng.below(max_block_size)));
    return m;
}

}  // namespace

FinModule random_s4_module(const Corpus& c, Rng& rng, size_t max_blocks) {
    return random_blocks(c.s4, 4, rng, max_blocks);
}

FinModule random_s2_module(const Corpus& c, Rng& rng, size_t max_blocks) {
    return random_blocks(c.s2, 2, rng, max_blocks);
}

MixedComplex random_mixed_complex(const Corpus& c, Rng& rng, const RandomMixedOptions& opt) {
    const Field& f = c.field;
    for (size_t attempt = 0; attempt < opt.tries; ++attempt) {
        MixedComplex x;
        x.S = c.s4;
        x.w = c.w;
        for (int k = opt.min_degree; k <= opt.max_degree; ++k) {
            FinModule m = random_blocks(c.s4, 4, rng, opt.max_blocks);
            if (m.dim())
                x.comp.emplace(k, m);
        }
        if (x.comp.empty())
            continue;
        /* random S-linear d with d^2 = 0, built degree by degree */
        bool ok = true;
        for (int k = opt.min_degree; k <= opt.max_degree && ok; ++k) {
            if (x.dim(k) == 0 || x.dim(k + 1) == 0)
                continue;
            auto homs = hom_space(x.comp.at(k), x.comp.at(k + 1));
            Matrix prev = x.dmap(k - 1);
            /* subspace of candidates killing the previous image */
            std::vector<Matrix> allowed;
            if (prev.cols() == 0 || prev.is_zero())
                allowed = homs;
            else {
                Matrix coeff(f, x.dim(k + 1) * x.dim(k - 1), homs.size());
                for (size_t j = 0; j < homs.size(); ++j)
                    coeff.paste(0, j, (homs[j] * prev).vec());
                Matrix ker = coeff.kernel_basis();
                for (size_t j = 0; j < ker.cols(); ++j) {
                    Matrix cand(f, x.dim(k + 1), x.dim(k));
                    for (size_t i = 0; i < homs.size(); ++i)
                        cand = cand + homs[i].scaled(ker.at(i, j));
                    allowed.push_back(cand);
                }
            }
            Matrix d(f, x.dim(k + 1), x.dim(k));
            for (const Matrix& h : allowed)
                d = d + h.scaled(rng.scalar(f));
            if (!d.is_zero())
                x.d[k] = d;
        }
        if (!ok)
            continue;
        /* solve ds + sd = w for S-linear s, then look for s^2 = 0 in the
         * affine solution space */
        MatrixEquations sys(f);
        std::map<int, int> var;
        for (auto& [k, m] : x.comp)
            if (x.dim(k - 1))
                var[k] = sys.add_unknown(x.dim(k - 1), m.dim());
        for (auto& [k, m] : x.comp) {
            for (size_t g : c.s4->generators()) {
                if (!var.count(k))
                    continue;
                int eq = sys.add_equation(x.dim(k - 1), m.dim());
                sys.add_right_term(eq, var[k], m.action(g), f.one());
                sys.add_left_term(eq, var[k], x.component(k - 1).action(g), f.neg(f.one()));
            }
            int eq = sys.add_equation(m.dim(), m.dim());
            /* s_{k+1} d_k + d_{k-1} s_k = w */
            if (var.count(k + 1))
                sys.add_right_term(eq, var[k + 1], x.dmap(k), f.one());
            if (var.count(k))
                sys.add_left_term(eq, var[k], x.dmap(k - 1), f.one());
            sys.add_rhs(eq, m.action_of(x.w));
        }
        auto sol = sys.solve();
        if (!sol.solvable)
            continue;
        auto try_s = [&](const std::vector<Matrix>& cand) {
            MixedComplex y = x;
            y.s.clear();
            size_t i = 0;
            for (auto& [k, v] : var)
                y.s[k] = cand[i++];
            /* s^2 = 0? */
            for (auto& [k, m] : y.comp)
                if (!(y.smap(k - 1) * y.smap(k)).is_zero())
                    return std::optional<MixedComplex>{};
            return std::optional<MixedComplex>{std::move(y)};
        };
        for (size_t t = 0; t < 30; ++t) {
            std::vector<Matrix> cand = sol.particular;
            for (auto& kver : sol.kernel) {
                Scalar coeff = rng.scalar(f);
                for (size_t i = 0; i < cand.size(); ++i)
                    cand[i] = cand[i] + kver[i].scaled(coeff);
            }
            auto y = try_s(cand);
            if (y && check_mixed(*y).valid())
                return *y;
            if (t == 0 && sol.kernel.empty())
                break; /* unique s, and it failed s^2 = 0 */
        }
    }
    throw ValidationError("random_mixed_complex: no valid instance found");
}

Duplex random_duplex(const Corpus& c, Rng& rng, size_t max_blocks, size_t tries) {
    const Field& f = c.field;
    for (size_t attempt = 0; attempt < tries; ++attempt) {
        FinModule m0 = random_blocks(c.s4, 4, rng, max_blocks);
        FinModule m1 = random_blocks(c.s4, 4, rng, max_blocks);
        if (m0.dim() == 0 && m1.dim() == 0)
            continue;
        auto homs = hom_space(m0, m1);
        Matrix ff(f, m1.dim(), m0.dim());
        for (const Matrix& h : homs)
            ff = ff + h.scaled(rng.scalar(f));
        /* solve fg = w, gf = w for S-linear g */
        MatrixEquations sys(f);
        int v = sys.add_unknown(m0.dim(), m1.dim());
        for (size_t g : c.s4->generators()) {
            int eq = sys.add_equation(m0.dim(), m1.dim());
            sys.add_right_term(eq, v, m1.action(g), f.one());
            sys.add_left_term(eq, v, m0.action(g), f.neg(f.one()));
        }
        int e1 = sys.add_equation(m1.dim(), m1.dim());
        sys.add_left_term(e1, v, ff, f.one());
        sys.add_rhs(e1, m1.action_of(c.w));
        int e2 = sys.add_equation(m0.dim(), m0.dim());
        sys.add_right_term(e2, v, ff, f.one());
        sys.add_rhs(e2, m0.action_of(c.w));
        auto sol = sys.solve();
        if (!sol.solvable)
            continue;
        Matrix gg = sol.particular[0];
        for (auto& kver : sol.kernel)
            gg = gg + kver[0].scaled(rng.scalar(f));
        Duplex d{c.s4, c.w, m0, m1, ff, gg};
        if (check_duplex(d).valid())
            return d;
    }
    throw ValidationError("random_duplex: no valid instance found");
}

GradedModule random_graded_module(const Corpus& c, Rng& rng, int min_degree, int max_degree) {
    const GradedAlgebraPtr& base = c.ch_s2->base();
    std::map<int, size_t> dims;
    std::vector<GradedMap> act(base->dim());
    bool nonzero = false;
    for (int k = min_degree; k <= max_degree; ++k) {
        FinModule m = random_blocks(c.s2, 2, rng, 2);
        if (m.dim() == 0)
            continue;
        nonzero = true;
        dims[k] = m.dim();
        for (size_t b = 0; b < base->dim(); ++b)
            act[b].comp[k] = m.action(b);
    }
    if (!nonzero) {
        dims[0] = 1;
        for (size_t b = 0; b < base->dim(); ++b)
            act[b].comp[0] = jordan_module(c.s2, 1).action(b);
    }
    return GradedModule(base, std::move(dims), std::move(act));
}

DuplexMorphism random_duplex_morphism(const std::vector<DuplexMorphism>& basis, const Duplex& a,
                                      const Duplex& b, Rng& rng) {
    const Field& f = a.S->field();
    DuplexMorphism out{Matrix(f, b.m0.dim(), a.m0.dim()), Matrix(f, b.m1.dim(), a.m1.dim())};
    for (const DuplexMorphism& h : basis) {
        Scalar c = rng.scalar(f);
        out.c0 = out.c0 + h.c0.scaled(c);
        out.c1 = out.c1 + h.c1.scaled(c);
    }
    return out;
}

GradedMap random_graded_map(const std::vector<GradedMap>& basis, const Field& f, Rng& rng) {
    GradedMap out;
    for (const GradedMap& h : basis) {
        Scalar c = rng.scalar(f);
        for (auto& [d, m] : h.comp) {
            auto it = out.comp.find(d);
            if (it == out.comp.end())
                out.comp.emplace(d, m.scaled(c));
            else
                it->second = it->second + m.scaled(c);
        }
    }
    return out;
}

}  // namespace cdgforge
