#include "cdgforge/homalg.hpp"

#include <functional>

#include "cdgforge/mateq.hpp"

namespace cdgforge {

namespace {

void require_same_algebra(const FinModule& m, const FinModule& n) {
    if (m.algebra().get() != n.algebra().get() && !(*m.algebra() == *n.algebra()))
        throw ValidationError("modules live over different algebras");
}

Matrix radical_submodule_span(const FinModule& m) {
    /* columns spanning rad(A).M */
    const Field& f = m.algebra()->field();
    const Matrix& rad = m.algebra()->radical();
    Matrix span(f, m.dim(), 0);
    for (size_t j = 0; j < rad.cols(); ++j) {
        std::vector<Scalar> r(m.algebra()->dim());
        for (size_t i = 0; i < m.algebra()->dim(); ++i)
            r[i] = rad.at(i, j);
        span = span.hstack(m.action_of(r));
    }
    return span.column_space_basis();
}

}  // namespace

std::vector<Matrix> hom_space(const FinModule& m, const FinModule& n) {
    require_same_algebra(m, n);
    const Field& f = m.algebra()->field();
    if (m.dim() == 0 || n.dim() == 0)
        return {};
    MatrixEquations sys(f);
    int v = sys.add_unknown(n.dim(), m.dim());
    for (size_t g : m.algebra()->generators()) {
        int eq = sys.add_equation(n.dim(), m.dim());
        sys.add_right_term(eq, v, m.action(g), f.one());
        sys.add_left_term(eq, v, n.action(g), f.neg(f.one()));
    }
    auto sol = sys.solve();
    std::vector<Matrix> basis;
    for (auto& k : sol.kernel)
        basis.push_back(k[0]);
    return basis;
}

Cover projective_cover(const FinModule& m) {
    AlgebraPtr a = m.algebra();
    const Field& f = a->field();
    if (m.dim() == 0) {
        FinModule z = FinModule::zero(a);
        return {z, Matrix(f, 0, 0), z, Matrix(f, 0, 0)};
    }
    if (a->is_semisimple()) {
        Cover c{m, Matrix::identity(f, m.dim()), FinModule::zero(a), Matrix(f, m.dim(), 0)};
        return c;
    }
    if (!a->is_split_local())
        throw ValidationError("projective_cover: algebra is neither semisimple nor split local");
    /* top M = M / rad.M; lift a basis, cover by a free module of that rank */
    Matrix radm = radical_submodule_span(m);
    Matrix tops = quotient_representatives(radm, Matrix::identity(f, m.dim()));
    size_t r = tops.cols();
    FinModule free = FinModule::zero(a);
    FinModule reg = FinModule::regular(a);
    for (size_t i = 0; i < r; ++i)
        free = free.direct_sum(reg);
    /* epi: the i-th free generator maps to tops column i */
    Matrix epi(f, m.dim(), free.dim());
    for (size_t i = 0; i < r; ++i) {
        for (size_t b = 0; b < a->dim(); ++b) {
            /* image of e_b * gen_i = action(e_b) applied to tops column i */
            std::vector<Scalar> eb(a->dim(), f.zero());
            eb[b] = f.one();
            Matrix img = m.action_of(eb) * tops.submatrix(0, i, m.dim(), 1);
            for (size_t row = 0; row < m.dim(); ++row)
                epi.at(row, i * a->dim() + b) = img.at(row, 0);
        }
    }
    if (epi.rank() != m.dim())
        throw ValidationError("projective_cover: lifted top does not generate");
    Matrix ker = epi.kernel_basis();
    Matrix incl;
    FinModule syz = free.submodule(ker, &incl);
    return {std::move(free), std::move(epi), std::move(syz), std::move(incl)};
}

Envelope injective_envelope(const FinModule& m) {
    AlgebraPtr a = m.algebra();
    AlgebraPtr op = a->opposite();
    FinModule d = m.dual(op);
    Cover c = projective_cover(d);
    /* dualize P -> DM to get M = DDM -> DP */
    FinModule e = c.p.dual(a);
    Matrix mono = c.epi.transposed();
    Matrix coker_proj = c.kernel_incl.transposed();
    FinModule cosyz = c.syzygy.dual(a);
    return {std::move(e), std::move(mono), std::move(cosyz), std::move(coker_proj)};
}

Ext1Result ext1(const FinModule& m, const FinModule& n) {
    require_same_algebra(m, n);
    Cover c = projective_cover(m);
    if (c.syzygy.dim() == 0 || n.dim() == 0)
        return {0, {}};
    auto homs_syz = hom_space(c.syzygy, n);
    auto homs_p = hom_space(c.p, n);
    const Field& f = m.algebra()->field();
    /* image of Hom(P,N) -> Hom(Omega M, N), f |-> f . incl */
    Matrix img(f, n.dim() * c.syzygy.dim(), 0);
    for (const Matrix& h : homs_p)
        img = img.hstack((h * c.kernel_incl).vec());
    img = img.column_space_basis();
    Matrix all(f, n.dim() * c.syzygy.dim(), 0);
    for (const Matrix& h : homs_syz)
        all = all.hstack(h.vec());
    Matrix reps = quotient_representatives(img, all);
    Ext1Result out;
    out.dim = reps.cols();
    for (size_t j = 0; j < reps.cols(); ++j)
        out.cocycles.push_back(Matrix::unvec(reps.submatrix(0, j, reps.rows(), 1), f, n.dim(), c.syzygy.dim()));
    return out;
}

Classification classify_module(const FinModule& m) {
    Classification out{};
    out.projective = projective_cover(m).syzygy.dim() == 0;
    FinModule d = m.dual(m.algebra()->opposite());
    out.injective = projective_cover(d).syzygy.dim() == 0;
    return out;
}

bool factors_through(const FinModule& m, const FinModule& n, const Matrix& f, StableMode mode) {
    const Field& field = m.algebra()->field();
    if (mode == StableMode::Projectives) {
        Cover c = projective_cover(n);
        /* f lifts along P(N) ->> N  iff  f = epi . g for a module map g */
        MatrixEquations sys(field);
        int v = sys.add_unknown(c.p.dim(), m.dim());
        for (size_t gidx : m.algebra()->generators()) {
            int eq = sys.add_equation(c.p.dim(), m.dim());
            sys.add_right_term(eq, v, m.action(gidx), field.one());
            sys.add_left_term(eq, v, c.p.action(gidx), field.neg(field.one()));
        }
        int eq = sys.add_equation(n.dim(), m.dim());
        sys.add_left_term(eq, v, c.epi, field.one());
        sys.add_rhs(eq, f);
        return sys.solve().solvable;
    }
    Envelope e = injective_envelope(m);
    /* f extends along M >-> E(M) iff f = g . mono for a module map g */
    MatrixEquations sys(field);
    int v = sys.add_unknown(n.dim(), e.e.dim());
    for (size_t gidx : m.algebra()->generators()) {
        int eq = sys.add_equation(n.dim(), e.e.dim());
        sys.add_right_term(eq, v, e.e.action(gidx), field.one());
        sys.add_left_term(eq, v, n.action(gidx), field.neg(field.one()));
    }
    int eq = sys.add_equation(n.dim(), m.dim());
    sys.add_right_term(eq, v, e.mono, field.one());
    sys.add_rhs(eq, f);
    return sys.solve().solvable;
}

StableHomResult stable_hom(const FinModule& m, const FinModule& n, StableMode mode) {
    require_same_algebra(m, n);
    const Field& f = m.algebra()->field();
    auto homs = hom_space(m, n);
    if (homs.empty())
        return {0, {}};
    Matrix through(f, n.dim() * m.dim(), 0);
    if (mode == StableMode::Projectives) {
        Cover c = projective_cover(n);
        for (const Matrix& g : hom_space(m, c.p))
            through = through.hstack((c.epi * g).vec());
    } else {
        Envelope e = injective_envelope(m);
        for (const Matrix& g : hom_space(e.e, n))
            through = through.hstack((g * e.mono).vec());
    }
    through = through.column_space_basis();
    Matrix all(f, n.dim() * m.dim(), 0);
    for (const Matrix& h : homs)
        all = all.hstack(h.vec());
    Matrix reps = quotient_representatives(through, all);
    StableHomResult out;
    out.dim = reps.cols();
    for (size_t j = 0; j < reps.cols(); ++j)
        out.representatives.push_back(Matrix::unvec(reps.submatrix(0, j, reps.rows(), 1), f, n.dim(), m.dim()));
    return out;
}

IsoVerdict search_invertible(const Field& field, size_t basis_size,
                             const std::function<bool(const std::vector<Scalar>&)>& try_coeffs, Rng& rng,
                             unsigned long long exhaustive_limit, size_t samples) {
    if (basis_size == 0)
        return IsoVerdict::No;
    unsigned long long p = field.size_capped(exhaustive_limit + 1);
    unsigned long long total = 1;
    bool exhaustive = !field.is_rationals();
    if (exhaustive) {
        for (size_t i = 0; i < basis_size && exhaustive; ++i) {
            total *= p;
            if (total > exhaustive_limit)
                exhaustive = false;
        }
    }
    if (exhaustive) {
        std::vector<Scalar> coeffs(basis_size, field.zero());
        std::vector<unsigned long long> idx(basis_size, 0);
        for (unsigned long long count = 1; count < total; ++count) {
            size_t pos = 0;
            while (pos < basis_size) {
                idx[pos]++;
                if (idx[pos] < p) {
                    coeffs[pos] = field.from_int(static_cast<long long>(idx[pos]));
                    break;
                }
                idx[pos] = 0;
                coeffs[pos] = field.zero();
                ++pos;
            }
            if (try_coeffs(coeffs))
                return IsoVerdict::Yes;
        }
        return IsoVerdict::No;
    }
    for (size_t t = 0; t < samples; ++t) {
        std::vector<Scalar> coeffs(basis_size);
        for (auto& c : coeffs)
            c = rng.scalar(field);
        if (try_coeffs(coeffs))
            return IsoVerdict::Yes;
    }
    return IsoVerdict::Undecided;
}

IsoResult find_isomorphism(const FinModule& m, const FinModule& n, Rng& rng,
                           unsigned long long exhaustive_limit, size_t samples) {
    if (m.dim() != n.dim())
        return {IsoVerdict::No, std::nullopt};
    if (m.dim() == 0)
        return {IsoVerdict::Yes, Matrix(m.algebra()->field(), 0, 0)};
    auto basis = hom_space(m, n);
    const Field& f = m.algebra()->field();
    std::optional<Matrix> witness;
    auto attempt = [&](const std::vector<Scalar>& coeffs) {
        Matrix cand(f, n.dim(), m.dim());
        for (size_t i = 0; i < basis.size(); ++i)
            if (!f.is_zero(coeffs[i]))
                cand = cand + basis[i].scaled(coeffs[i]);
        if (cand.rank() == m.dim()) {
            witness = cand;
            return true;
        }
        return false;
    };
    IsoVerdict v = search_invertible(f, basis.size(), attempt, rng, exhaustive_limit, samples);
    return {v, witness};
}

ResolutionResult projective_resolution(const FinModule& m, size_t max_steps, Rng& rng) {
    ResolutionResult out;
    std::vector<FinModule> syzygies{m};
    FinModule cur = m;
    for (size_t step = 0; step <= max_steps; ++step) {
        if (cur.dim() == 0) {
            out.verdict = ResolutionResult::Verdict::Finite;
            out.pd = step == 0 ? 0 : step - 1;
            return out;
        }
        Cover c = projective_cover(cur);
        out.steps.push_back({c.syzygy, c.p.dim() / m.algebra()->dim()});
        if (c.syzygy.dim() == 0) {
            out.verdict = ResolutionResult::Verdict::Finite;
            out.pd = step;
            return out;
        }
        bool undecided_seen = false;
        for (size_t prev = 0; prev < syzygies.size(); ++prev) {
            IsoResult iso = find_isomorphism(syzygies[prev], c.syzygy, rng);
            if (iso.verdict == IsoVerdict::Yes) {
                out.verdict = ResolutionResult::Verdict::Infinite;
                out.repeat_at = step + 1;
                out.repeat_of = prev;
                return out;
            }
            if (iso.verdict == IsoVerdict::Undecided)
                undecided_seen = true;
        }
        (void)undecided_seen;
        syzygies.push_back(c.syzygy);
        cur = c.syzygy;
    }
    out.verdict = ResolutionResult::Verdict::Unknown;
    return out;
}

}  // namespace cdgforge
