#include "cdgforge/model.hpp"

#include "cdgforge/mateq.hpp"

namespace cdgforge {

OrthogonalityResult orthogonal_membership(const std::vector<FinModule>& list, const FinModule& x,
                                          OrthSide side) {
    OrthogonalityResult out{true, {}};
    for (size_t i = 0; i < list.size(); ++i) {
        size_t dim = side == OrthSide::Right ? ext1(list[i], x).dim : ext1(x, list[i]).dim;
        out.ext_dims.push_back({i, dim});
        if (dim)
            out.member = false;
    }
    return out;
}

PathObjectData path_object(const FinModule& y, const FinModule& i, const Matrix& cover) {
    const Field& f = y.algebra()->field();
    if (!is_module_morphism(i, y, cover))
        throw ValidationError("path_object: cover is not a module morphism");
    if (cover.rank() != y.dim())
        throw ValidationError("path_object: cover is not an epimorphism");
    /* PY = ker( (1, -1, -cover): Y (+) Y (+) I -> Y ) */
    FinModule yyi = y.direct_sum(y).direct_sum(i);
    Matrix glue(f, y.dim(), yyi.dim());
    glue.paste(0, 0, Matrix::identity(f, y.dim()));
    glue.paste(0, y.dim(), Matrix::identity(f, y.dim()).negated());
    glue.paste(0, 2 * y.dim(), cover.negated());
    Matrix ker = glue.kernel_basis();
    Matrix incl;
    FinModule py = yyi.submodule(ker, &incl);
    /* y |-> (y, y, 0) */
    Matrix diag(f, yyi.dim(), y.dim());
    diag.paste(0, 0, Matrix::identity(f, y.dim()));
    diag.paste(y.dim(), 0, Matrix::identity(f, y.dim()));
    auto y_to_py = incl.solve(diag);
    if (!y_to_py)
        throw ValidationError("path_object: diagonal does not lift");
    Matrix py_to_yy = incl.submatrix(0, 0, 2 * y.dim(), incl.cols());
    Matrix py_to_i = incl.submatrix(2 * y.dim(), 0, i.dim(), incl.cols());
    /* Omega Y = ker(cover) -> PY as (0, 0, ker) */
    Matrix kercover = cover.kernel_basis();
    Matrix omega_in_yyi(f, yyi.dim(), kercover.cols());
    omega_in_yyi.paste(2 * y.dim(), 0, kercover);
    auto omega_incl = incl.solve(omega_in_yyi);
    if (!omega_incl)
        throw ValidationError("path_object: kernel does not embed");
    FinModule omega_y = i.submodule(kercover);
    return {y, i, std::move(omega_y), std::move(py), cover, *y_to_py, std::move(py_to_yy), *omega_incl,
            std::move(py_to_i)};
}

RightHomotopyResult right_homotopic(const FinModule& x, const Matrix& f, const Matrix& g,
                                    const PathObjectData& p) {
    const Field& fl = x.algebra()->field();
    if (!is_module_morphism(x, p.y, f) || !is_module_morphism(x, p.y, g))
        throw ValidationError("right_homotopic: inputs are not module morphisms");
    /* (f, g): X -> Y (+) Y lifts through PY -> Y (+) Y ? */
    Matrix fg(fl, 2 * p.y.dim(), x.dim());
    fg.paste(0, 0, f);
    fg.paste(p.y.dim(), 0, g);
    MatrixEquations sys(fl);
    int v = sys.add_unknown(p.py.dim(), x.dim());
    for (size_t gi : x.algebra()->generators()) {
        int eq = sys.add_equation(p.py.dim(), x.dim());
        sys.add_right_term(eq, v, x.action(gi), fl.one());
        sys.add_left_term(eq, v, p.py.action(gi), fl.neg(fl.one()));
    }
    int eq = sys.add_equation(2 * p.y.dim(), x.dim());
    sys.add_left_term(eq, v, p.py_to_yy, fl.one());
    sys.add_rhs(eq, fg);
    bool via_path = sys.solve().solvable;
    /* cross-check: f - g factors through the cover */
    MatrixEquations sys2(fl);
    int u = sys2.add_unknown(p.i.dim(), x.dim());
    for (size_t gi : x.algebra()->generators()) {
        int e2 = sys2.add_equation(p.i.dim(), x.dim());
        sys2.add_right_term(e2, u, x.action(gi), fl.one());
        sys2.add_left_term(e2, u, p.i.action(gi), fl.neg(fl.one()));
    }
    int e3 = sys2.add_equation(p.y.dim(), x.dim());
    sys2.add_left_term(e3, u, p.cover, fl.one());
    sys2.add_rhs(e3, f - g);
    bool lifts = sys2.solve().solvable;
    return {via_path, lifts};
}

CdgModule complex_from_parts(const CdgRingPtr& dg_ring, const std::map<int, FinModule>& comp,
                             const std::map<int, Matrix>& d) {
    std::vector<size_t> idx;
    auto a0 = dg_ring->base()->degree_zero_part(&idx);
    std::map<int, size_t> dims;
    std::vector<GradedMap> act(dg_ring->base()->dim());
    for (auto& [k, m] : comp) {
        if (m.dim() == 0)
            continue;
        if (!(*a0 == *m.algebra()))
            throw ValidationError("complex_from_parts: component over the wrong algebra");
        dims[k] = m.dim();
        for (size_t p = 0; p < idx.size(); ++p)
            act[idx[p]].comp[k] = m.action(p);
    }
    GradedModule under(dg_ring->base(), std::move(dims), std::move(act));
    std::map<int, Matrix> diff;
    for (auto& [k, m] : d)
        if (m.rows() && m.cols())
            diff[k] = m;
    return CdgModule(dg_ring, std::move(under), std::move(diff));
}

FinModule complex_component(const CdgModule& x, int k) {
    std::vector<size_t> idx;
    auto a0 = x.ring()->base()->degree_zero_part(&idx);
    std::vector<Matrix> action;
    for (size_t p = 0; p < idx.size(); ++p)
        action.push_back(x.under().action(idx[p], k));
    return FinModule(a0, x.dim(k), std::move(action));
}

Matrix complex_diff(const CdgModule& x, int k) { return x.diff(k); }

FinModule syzygy(const CdgModule& x, int k, Matrix* incl) {
    Matrix ker = x.diff(k).kernel_basis();
    FinModule comp = complex_component(x, k);
    Matrix inc;
    FinModule z = comp.submodule(ker, &inc);
    if (incl)
        *incl = inc;
    return z;
}

FinModule cosyzygy(const CdgModule& x, int k, Matrix* proj) {
    FinModule comp = complex_component(x, k);
    Matrix img = x.diff(k - 1).column_space_basis();
    return comp.quotient(img, proj);
}

CdgModule stalk_complex(const CdgRingPtr& dg_ring, const FinModule& m, int k) {
    return CdgModule::stalk(dg_ring, m, k);
}

CdgModule brutal_truncate_below(const CdgModule& x, int n) {
    std::map<int, FinModule> comp;
    std::map<int, Matrix> d;
    for (auto& [k, dim] : x.under().dims())
        if (k <= n)
            comp.emplace(k, complex_component(x, k));
    for (auto& [k, dim] : x.under().dims())
        if (k < n)
            d[k] = x.diff(k);
    return complex_from_parts(x.ring(), comp, d);
}

CdgModule brutal_truncate_above(const CdgModule& x, int n) {
    std::map<int, FinModule> comp;
    std::map<int, Matrix> d;
    for (auto& [k, dim] : x.under().dims()) {
        if (k > n) {
            comp.emplace(k, complex_component(x, k));
            if (x.dim(k + 1))
                d[k] = x.diff(k);
        }
    }
    return complex_from_parts(x.ring(), comp, d);
}

CdgModule soft_truncate_below(const CdgModule& x, int n) {
    std::map<int, FinModule> comp;
    std::map<int, Matrix> d;
    Matrix incl;
    FinModule z = syzygy(x, n, &incl);
    for (auto& [k, dim] : x.under().dims())
        if (k < n)
            comp.emplace(k, complex_component(x, k));
    if (z.dim())
        comp.emplace(n, z);
    for (auto& [k, dim] : x.under().dims()) {
        if (k < n - 1)
            d[k] = x.diff(k);
        else if (k == n - 1 && z.dim()) {
            /* d^{n-1} factors through ker(d^n) */
            auto factored = incl.solve(x.diff(n - 1));
            if (!factored)
                throw ValidationError("soft_truncate_below: not a complex");
            d[k] = *factored;
        }
    }
    return complex_from_parts(x.ring(), comp, d);
}

Matrix q0_transpose_to_module(const CdgModule& x, const FinModule& m, const GradedMap& chain_map) {
    /* chain map X -> iota^0 M is its degree-0 component; it kills im(d^{-1})
     * and so induces Q^0 X -> M */
    const Field& f = x.ring()->field();
    Matrix proj;
    FinModule q0 = cosyzygy(x, 0, &proj);
    Matrix phi0 = chain_map.find(0) ? *chain_map.find(0) : Matrix(f, m.dim(), x.dim(0));
    /* solve psi . proj = phi0 */
    auto psi_t = proj.transposed().solve(phi0.transposed());
    if (!psi_t)
        throw ValidationError("q0 transpose: chain map does not kill the image");
    (void)q0;
    return psi_t->transposed();
}

GradedMap q0_transpose_to_chain(const CdgModule& x, const FinModule&, const Matrix& module_map) {
    Matrix proj;
    cosyzygy(x, 0, &proj);
    GradedMap out;
    out.comp[0] = module_map * proj;
    return out;
}

Q0AdjunctionReport q0_iota_adjunction_check(const CdgRingPtr& dg_ring, const std::vector<FinModule>& modules,
                                            Rng& rng, size_t count) {
    Q0AdjunctionReport rep{true, true, 0};
    const Field& f = dg_ring->field();
    for (size_t t = 0; t < count; ++t) {
        /* random 3-term complex M2 -> M1 -> M0 in degrees -2..0 from the pool */
        const FinModule& m0 = modules[rng.below(modules.size())];
        const FinModule& m1 = modules[rng.below(modules.size())];
        const FinModule& m2 = modules[rng.below(modules.size())];
        auto homs10 = hom_space(m1, m0);
        auto homs21 = hom_space(m2, m1);
        /* pick d maps with d^2 = 0: solve for pairs */
        Matrix d0(f, m0.dim(), m1.dim());
        Matrix d1(f, m1.dim(), m2.dim());
        bool found = false;
        for (size_t tries = 0; tries < 40 && !found; ++tries) {
            Matrix cand0(f, m0.dim(), m1.dim());
            for (const Matrix& h : homs10)
                if (rng.below(2))
                    cand0 = cand0 + h.scaled(rng.scalar(f));
            Matrix cand1(f, m1.dim(), m2.dim());
            for (const Matrix& h : homs21)
                if (rng.below(2))
                    cand1 = cand1 + h.scaled(rng.scalar(f));
            if ((cand0 * cand1).is_zero()) {
                d0 = cand0;
                d1 = cand1;
                found = true;
            }
        }
        if (!found)
            continue;
        std::map<int, FinModule> comp{{-2, m2}, {-1, m1}, {0, m0}};
        std::map<int, Matrix> d{{-2, d1}, {-1, d0}};
        CdgModule x = complex_from_parts(dg_ring, comp, d);
        const FinModule& target = modules[rng.below(modules.size())];
        /* hom-set bijection: round trips both ways */
        Matrix proj;
        FinModule q0 = cosyzygy(x, 0, &proj);
        for (const Matrix& psi : hom_space(q0, target)) {
            GradedMap chain = q0_transpose_to_chain(x, target, psi);
            Matrix back = q0_transpose_to_module(x, target, chain);
            if (!(back == psi))
                rep.round_trips = false;
        }
        /* counit at a module: Q^0(iota^0 M) = M via identity */
        Matrix mproj;
        FinModule qm = cosyzygy(CdgModule::stalk(dg_ring, target, 0), 0, &mproj);
        Rng r2(7);
        if (target.dim() != qm.dim() || find_isomorphism(qm, target, r2).verdict != IsoVerdict::Yes)
            rep.triangle_identities = false;
        /* unit at x: transposing the identity on Q^0 X gives the projection */
        GradedMap eta = q0_transpose_to_chain(x, q0, Matrix::identity(f, q0.dim()));
        if (!(eta.comp.at(0) == proj))
            rep.triangle_identities = false;
        ++rep.pairs_checked;
    }
    return rep;
}

namespace {

/* Gorenstein projectivity only: leftward minimal projective resolution,
 * rightward projective coresolution via injective envelopes. Fills the
 * witness window when the verdict is Yes. */
TriVerdict gp_verdict(const FinModule& m, size_t bound, const ResolutionResult& res,
                      GorensteinResult* out) {
    Classification cls = classify_module(m);
    if (m.dim() == 0 || cls.projective) {
        if (out) {
            out->witness_comp.emplace(-1, m);
            out->witness_comp.emplace(0, m);
            out->witness_d[-1] = Matrix::identity(m.algebra()->field(), m.dim());
        }
        return TriVerdict::Yes;
    }
    if (res.verdict == ResolutionResult::Verdict::Finite && res.pd >= 1)
        return TriVerdict::No; /* finite positive pd excludes GP */
    bool ok = true;
    std::vector<Cover> covers;
    FinModule cur = m;
    for (size_t i = 0; i < bound && ok; ++i) {
        covers.push_back(projective_cover(cur));
        cur = covers.back().syzygy;
        if (cur.dim() == 0)
            ok = false; /* finite pd: handled above */
    }
    std::vector<Envelope> envs;
    FinModule cco = m;
    for (size_t i = 0; i < bound && ok; ++i) {
        envs.push_back(injective_envelope(cco));
        if (!classify_module(envs.back().e).projective) {
            ok = false;
            break;
        }
        cco = envs.back().cosyzygy;
    }
    if (!ok)
        return TriVerdict::Undecided;
    if (out) {
        /* window ... -> P_1 -> P_0 -> E^0 -> E^1 -> ... with C^{-k-1} = P_k,
         * C^k = E^k; then Z^0 = ker(E^0 -> E^1) = M */
        for (size_t i = 0; i < covers.size(); ++i)
            out->witness_comp.emplace(-static_cast<int>(i) - 1, covers[i].p);
        for (size_t i = 0; i < envs.size(); ++i)
            out->witness_comp.emplace(static_cast<int>(i), envs[i].e);
        for (size_t i = 1; i < covers.size(); ++i)
            out->witness_d[-static_cast<int>(i) - 1] = covers[i - 1].kernel_incl * covers[i].epi;
        out->witness_d[-1] = envs[0].mono * covers[0].epi;
        for (size_t i = 1; i < envs.size(); ++i)
            out->witness_d[static_cast<int>(i) - 1] = envs[i].mono * envs[i - 1].proj;
        out->witness_periodic = res.verdict == ResolutionResult::Verdict::Infinite;
    }
    return TriVerdict::Yes;
}

}  // namespace

GorensteinResult gorenstein_membership(const FinModule& m, size_t bound, Rng& rng) {
    GorensteinResult out{TriVerdict::Undecided, 0, TriVerdict::Undecided, TriVerdict::Undecided, {}, {}, false};
    if (bound == 0)
        throw ValidationError("gorenstein_membership: bound must be >= 1");
    ResolutionResult res = projective_resolution(m, bound, rng);
    if (res.verdict == ResolutionResult::Verdict::Finite) {
        out.finite_pd = TriVerdict::Yes;
        out.pd = res.pd;
    } else if (res.verdict == ResolutionResult::Verdict::Infinite) {
        out.finite_pd = TriVerdict::No;
    }
    out.gorenstein_projective = gp_verdict(m, bound, res, &out);
    /* Gorenstein injectivity = Gorenstein projectivity of the dual over the
     * opposite algebra */
    FinModule d = m.dual(m.algebra()->opposite());
    ResolutionResult dres = projective_resolution(d, bound, rng);
    out.gorenstein_injective = gp_verdict(d, bound, dres, nullptr);
    return out;
}

MixedModelClassResult mixed_model_class_test(const MixedComplex& x) {
    const Field& f = x.S->field();
    MixedModelClassResult out{true, true};
    /* cofibrant: (X, s) contractible with projective components */
    for (auto& [k, m] : x.comp)
        if (!classify_module(m).projective)
            out.ctr_sing_cofibrant = false;
    if (out.ctr_sing_cofibrant && !x.is_zero()) {
        /* h: X^k -> X^{k+1} S-linear with s h + h s = id */
        MatrixEquations sys(f);
        std::map<int, int> var;
        for (auto& [k, m] : x.comp)
            if (x.dim(k + 1))
                var[k] = sys.add_unknown(x.dim(k + 1), m.dim());
        for (auto& [k, m] : x.comp) {
            for (size_t g : x.S->generators()) {
                if (!var.count(k))
                    continue;
                int eq = sys.add_equation(x.dim(k + 1), m.dim());
                sys.add_right_term(eq, var[k], m.action(g), f.one());
                sys.add_left_term(eq, var[k], x.component(k + 1).action(g), f.neg(f.one()));
            }
            int eq = sys.add_equation(m.dim(), m.dim());
            if (var.count(k))
                sys.add_left_term(eq, var[k], x.smap(k + 1), f.one());
            if (var.count(k - 1))
                sys.add_right_term(eq, var[k - 1], x.smap(k), f.one());
            sys.add_rhs(eq, Matrix::identity(f, m.dim()));
        }
        out.ctr_sing_cofibrant = sys.solve().solvable;
    }
    /* fibrant in the absolute singular model: (X, d) acyclic */
    if (!x.is_zero()) {
        for (int k = x.min_degree() - 1; k <= x.max_degree() + 1; ++k) {
            if (!(x.dmap(k + 1) * x.dmap(k)).is_zero())
                throw ValidationError("mixed_model_class_test: d^2 != 0");
            size_t ker = x.dim(k) - x.dmap(k).rank();
            if (ker != x.dmap(k - 1).rank())
                out.ctr_sing_fibrant_abs = false;
        }
    }
    return out;
}

WeaklyTrivialCheck weakly_trivial_examples_check(const CdgModule& p, const CdgModule& x) {
    WeaklyTrivialCheck out{true, 0, true};
    /* hypotheses: P acyclic on its interior with projective components */
    if (!p.is_zero()) {
        for (auto& [k, dim] : p.under().dims())
            if (!classify_module(complex_component(p, k)).projective)
                out.hypotheses_hold = false;
        for (int k = p.under().min_degree() + 1; k < p.under().max_degree(); ++k) {
            size_t ker = p.dim(k) - p.diff(k).rank();
            if (ker != p.diff(k - 1).rank())
                out.hypotheses_hold = false;
        }
    }
    HomotopyClasses h = homotopy_classes(p, x, 1);
    out.dim = h.dim;
    out.vanishes = h.dim == 0;
    return out;
}

}  // namespace cdgforge
