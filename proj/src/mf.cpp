#include "cdgforge/mf.hpp"

#include <algorithm>
#include <sstream>

#include "cdgforge/mateq.hpp"

namespace cdgforge {

namespace {

int parity(int d) { return ((d % 2) + 2) % 2; }

AlgebraPtr require_koszul(const CdgRingPtr& ring) {
    if (!ring->s_context() || ring->grading().kind != GradingGroup::Kind::Z)
        throw ValidationError("operation requires a koszul(S, w) ring");
    return ring->s_context()->s;
}

/* ordered list of support degrees with offsets into the concatenated sum */
struct FactorLayout {
    std::vector<int> ks;
    std::vector<size_t> off;
    size_t total = 0;

    size_t index_of(int k) const {
        for (size_t i = 0; i < ks.size(); ++i)
            if (ks[i] == k)
                return i;
        throw ValidationError("factor layout: degree not present");
    }
    bool contains(int k) const {
        return std::find(ks.begin(), ks.end(), k) != ks.end();
    }
};

FactorLayout make_layout(const MixedComplex& x, const std::function<bool(int)>& keep) {
    FactorLayout l;
    for (auto& [k, m] : x.comp) {
        if (!keep(k) || m.dim() == 0)
            continue;
        l.ks.push_back(k);
        l.off.push_back(l.total);
        l.total += m.dim();
    }
    return l;
}

FinModule layout_module(const MixedComplex& x, const FactorLayout& l) {
    FinModule sum = FinModule::zero(x.S);
    for (int k : l.ks)
        sum = sum.direct_sum(x.comp.at(k));
    return sum;
}

/* closed-form differential of sbar(fold X) / B_prod X / ker(alpha) between
 * factor layouts: on the factor X^k of degree n it acts as d+s-id when
 * k = n (mod 2) and as w-d-s otherwise */
Matrix closed_diff(const MixedComplex& x, int n, const FactorLayout& src, const FactorLayout& dst) {
    const Field& f = x.S->field();
    Matrix out(f, dst.total, src.total);
    for (size_t i = 0; i < src.ks.size(); ++i) {
        int k = src.ks[i];
        bool aligned = parity(k) == parity(n);
        auto put = [&](int kt, const Matrix& m, bool negate) {
            if (!dst.contains(kt))
                return;
            size_t j = dst.index_of(kt);
            Matrix blk = negate ? m.negated() : m;
            for (size_t r = 0; r < blk.rows(); ++r)
                for (size_t c = 0; c < blk.cols(); ++c)
                    out.at(dst.off[j] + r, src.off[i] + c) = blk.at(r, c);
        };
        Matrix w_act = x.comp.at(k).action_of(x.w);
        put(k + 1, x.dmap(k), !aligned);
        put(k - 1, x.smap(k), !aligned);
        if (aligned)
            put(k, Matrix::identity(f, x.dim(k)), true);
        else
            put(k, w_act, false);
    }
    return out;
}

Matrix closed_s(const MixedComplex& x, int n, const FactorLayout& src, const FactorLayout& dst) {
    const Field& f = x.S->field();
    Matrix out(f, dst.total, src.total);
    for (size_t i = 0; i < src.ks.size(); ++i) {
        int k = src.ks[i];
        if (parity(k) != parity(n) || !dst.contains(k))
            continue;
        size_t j = dst.index_of(k);
        for (size_t r = 0; r < x.dim(k); ++r)
            out.at(dst.off[j] + r, src.off[i] + r) = f.one();
    }
    return out;
}

}  // namespace

FinModule MixedComplex::component(int k) const {
    auto it = comp.find(k);
    return it == comp.end() ? FinModule::zero(S) : it->second;
}

Matrix MixedComplex::dmap(int k) const {
    auto it = d.find(k);
    if (it != d.end())
        return it->second;
    return Matrix(S->field(), dim(k + 1), dim(k));
}

Matrix MixedComplex::smap(int k) const {
    auto it = s.find(k);
    if (it != s.end())
        return it->second;
    return Matrix(S->field(), dim(k - 1), dim(k));
}

int MixedComplex::min_degree() const {
    if (comp.empty())
        throw ValidationError("zero mixed complex has no support");
    return comp.begin()->first;
}

int MixedComplex::max_degree() const {
    if (comp.empty())
        throw ValidationError("zero mixed complex has no support");
    return comp.rbegin()->first;
}

ValidationReport check_mixed(const MixedComplex& x) {
    ValidationReport rep;
    for (auto& [k, m] : x.comp) {
        if (!(*m.algebra() == *x.S))
            rep.violations.push_back("component degree=" + std::to_string(k) + " over wrong algebra");
        for (size_t g : x.S->generators()) {
            if (!(x.dmap(k) * m.action(g) == x.component(k + 1).action(g) * x.dmap(k)))
                rep.violations.push_back("d not S-linear degree=" + std::to_string(k));
            if (!(x.smap(k) * m.action(g) == x.component(k - 1).action(g) * x.smap(k)))
                rep.violations.push_back("s not S-linear degree=" + std::to_string(k));
        }
    }
    int lo = x.is_zero() ? 0 : x.min_degree() - 1;
    int hi = x.is_zero() ? 0 : x.max_degree() + 1;
    for (int k = lo; k <= hi; ++k) {
        if (!(x.dmap(k + 1) * x.dmap(k)).is_zero())
            rep.violations.push_back("d^2 != 0 degree=" + std::to_string(k));
        if (!(x.smap(k - 1) * x.smap(k)).is_zero())
            rep.violations.push_back("s^2 != 0 degree=" + std::to_string(k));
        Matrix lhs = x.smap(k + 1) * x.dmap(k) + x.dmap(k - 1) * x.smap(k);
        Matrix w_act = x.component(k).action_of(x.w);
        if (!(lhs == w_act))
            rep.violations.push_back("ds + sd != w degree=" + std::to_string(k));
    }
    return rep;
}

ValidationReport check_duplex(const Duplex& m) {
    ValidationReport rep;
    if (!is_module_morphism(m.m0, m.m1, m.f))
        rep.violations.push_back("f is not S-linear");
    if (!is_module_morphism(m.m1, m.m0, m.g))
        rep.violations.push_back("g is not S-linear");
    if (!(m.f * m.g == m.m1.action_of(m.w)))
        rep.violations.push_back("fg != w id");
    if (!(m.g * m.f == m.m0.action_of(m.w)))
        rep.violations.push_back("gf != w id");
    return rep;
}

CdgModule mixed_to_cdg(const CdgRingPtr& koszul_ring, const MixedComplex& x) {
    AlgebraPtr s_alg = require_koszul(koszul_ring);
    if (!(*s_alg == *x.S))
        throw ValidationError("mixed_to_cdg: base algebra mismatch");
    size_t n = s_alg->dim();
    std::map<int, size_t> dims;
    for (auto& [k, m] : x.comp)
        if (m.dim())
            dims[k] = m.dim();
    std::vector<GradedMap> act(2 * n);
    for (auto& [k, m] : x.comp) {
        for (size_t i = 0; i < n; ++i) {
            act[i].comp[k] = m.action(i);
            if (x.dim(k - 1))
                act[n + i].comp[k] = x.smap(k) * m.action(i);
        }
    }
    GradedModule under(koszul_ring->base(), std::move(dims), std::move(act));
    std::map<int, Matrix> diff;
    for (auto& [k, m] : x.d)
        diff[k] = m;
    return CdgModule(koszul_ring, std::move(under), std::move(diff));
}

MixedComplex cdg_to_mixed(const CdgModule& x) {
    AlgebraPtr s_alg = require_koszul(x.ring());
    size_t n = s_alg->dim();
    MixedComplex out;
    out.S = s_alg;
    out.w = x.ring()->s_context()->w;
    for (auto& [k, dim] : x.under().dims()) {
        std::vector<Matrix> action;
        for (size_t i = 0; i < n; ++i)
            action.push_back(x.under().action(i, k));
        out.comp.emplace(k, FinModule(s_alg, dim, std::move(action)));
        out.d[k] = x.diff(k);
        out.s[k] = x.under().action(n, k); /* action of s * e_0?  see below */
    }
    /* the s-action is the action of the basis element s = s * unit */
    for (auto& [k, dim] : x.under().dims()) {
        Matrix s_act(x.ring()->field(), x.under().dim(k - 1), dim);
        const auto& unit = s_alg->unit();
        for (size_t i = 0; i < n; ++i)
            if (!s_alg->field().is_zero(unit[i]))
                s_act = s_act + x.under().action(n + i, k).scaled(unit[i]);
        out.s[k] = std::move(s_act);
    }
    /* drop zero maps out of range */
    std::erase_if(out.d, [&](const auto& kv) { return kv.second.rows() == 0 || kv.second.cols() == 0; });
    std::erase_if(out.s, [&](const auto& kv) { return kv.second.rows() == 0 || kv.second.cols() == 0; });
    return out;
}

CdgModule duplex_to_cdg(const CdgRingPtr& two_periodic_ring, const Duplex& m) {
    if (!two_periodic_ring->s_context() || two_periodic_ring->grading().kind != GradingGroup::Kind::Z2)
        throw ValidationError("duplex_to_cdg: ring must come from curved_two_periodic");
    AlgebraPtr s_alg = two_periodic_ring->s_context()->s;
    if (!(*s_alg == *m.S))
        throw ValidationError("duplex_to_cdg: base algebra mismatch");
    std::map<int, size_t> dims;
    if (m.m0.dim())
        dims[0] = m.m0.dim();
    if (m.m1.dim())
        dims[1] = m.m1.dim();
    std::vector<GradedMap> act(s_alg->dim());
    for (size_t i = 0; i < s_alg->dim(); ++i) {
        if (m.m0.dim())
            act[i].comp[0] = m.m0.action(i);
        if (m.m1.dim())
            act[i].comp[1] = m.m1.action(i);
    }
    GradedModule under(two_periodic_ring->base(), std::move(dims), std::move(act));
    std::map<int, Matrix> diff;
    if (m.m0.dim() && m.m1.dim()) {
        diff[0] = m.f;
        diff[1] = m.g;
    }
    return CdgModule(two_periodic_ring, std::move(under), std::move(diff));
}

Duplex cdg_to_duplex(const CdgModule& x) {
    if (!x.ring()->s_context() || x.grading().kind != GradingGroup::Kind::Z2)
        throw ValidationError("cdg_to_duplex: ring must come from curved_two_periodic");
    AlgebraPtr s_alg = x.ring()->s_context()->s;
    size_t n = s_alg->dim();
    auto part = [&](int p) {
        std::vector<Matrix> action;
        for (size_t i = 0; i < n; ++i)
            action.push_back(x.under().action(i, p));
        return FinModule(s_alg, x.dim(p), std::move(action));
    };
    return Duplex{s_alg, x.ring()->s_context()->w, part(0), part(1), x.diff(0), x.diff(1)};
}

Duplex duplex_suspend(const Duplex& m) {
    return Duplex{m.S, m.w, m.m1, m.m0, m.g.negated(), m.f.negated()};
}

Duplex duplex_direct_sum(const Duplex& a, const Duplex& b) {
    const Field& f = a.S->field();
    FinModule m0 = a.m0.direct_sum(b.m0), m1 = a.m1.direct_sum(b.m1);
    Matrix ff(f, m1.dim(), m0.dim()), gg(f, m0.dim(), m1.dim());
    ff.paste(0, 0, a.f);
    ff.paste(a.m1.dim(), a.m0.dim(), b.f);
    gg.paste(0, 0, a.g);
    gg.paste(a.m0.dim(), a.m1.dim(), b.g);
    return Duplex{a.S, a.w, std::move(m0), std::move(m1), std::move(ff), std::move(gg)};
}

bool is_duplex_morphism(const Duplex& a, const Duplex& b, const DuplexMorphism& f) {
    return is_module_morphism(a.m0, b.m0, f.c0) && is_module_morphism(a.m1, b.m1, f.c1) &&
           f.c1 * a.f == b.f * f.c0 && f.c0 * a.g == b.g * f.c1;
}

std::vector<DuplexMorphism> duplex_morphism_space(const Duplex& a, const Duplex& b) {
    const Field& fl = a.S->field();
    MatrixEquations sys(fl);
    int v0 = sys.add_unknown(b.m0.dim(), a.m0.dim());
    int v1 = sys.add_unknown(b.m1.dim(), a.m1.dim());
    for (size_t g : a.S->generators()) {
        int e0 = sys.add_equation(b.m0.dim(), a.m0.dim());
        sys.add_right_term(e0, v0, a.m0.action(g), fl.one());
        sys.add_left_term(e0, v0, b.m0.action(g), fl.neg(fl.one()));
        int e1 = sys.add_equation(b.m1.dim(), a.m1.dim());
        sys.add_right_term(e1, v1, a.m1.action(g), fl.one());
        sys.add_left_term(e1, v1, b.m1.action(g), fl.neg(fl.one()));
    }
    int ef = sys.add_equation(b.m1.dim(), a.m0.dim());
    sys.add_right_term(ef, v1, a.f, fl.one());
    sys.add_left_term(ef, v0, b.f, fl.neg(fl.one()));
    int eg = sys.add_equation(b.m0.dim(), a.m1.dim());
    sys.add_right_term(eg, v0, a.g, fl.one());
    sys.add_left_term(eg, v1, b.g, fl.neg(fl.one()));
    auto sol = sys.solve();
    std::vector<DuplexMorphism> out;
    for (auto& k : sol.kernel)
        out.push_back({k[0], k[1]});
    return out;
}

Duplex fold(const MixedComplex& x, FoldMode mode) {
    (void)mode; /* on finite support the sum and product foldings coincide */
    const Field& f = x.S->field();
    FactorLayout evens = make_layout(x, [](int k) { return parity(k) == 0; });
    FactorLayout odds = make_layout(x, [](int k) { return parity(k) == 1; });
    FinModule m0 = layout_module(x, evens), m1 = layout_module(x, odds);
    auto assemble = [&](const FactorLayout& src, const FactorLayout& dst) {
        Matrix out(f, dst.total, src.total);
        for (size_t i = 0; i < src.ks.size(); ++i) {
            int k = src.ks[i];
            auto put = [&](int kt, const Matrix& blk) {
                if (!dst.contains(kt))
                    return;
                size_t j = dst.index_of(kt);
                for (size_t r = 0; r < blk.rows(); ++r)
                    for (size_t c = 0; c < blk.cols(); ++c)
                        out.at(dst.off[j] + r, src.off[i] + c) = blk.at(r, c);
            };
            put(k + 1, x.dmap(k));
            put(k - 1, x.smap(k));
        }
        return out;
    };
    return Duplex{x.S, x.w, m0, m1, assemble(evens, odds), assemble(odds, evens)};
}

TameComplex sbar(const Duplex& m, const CdgRingPtr& koszul_ring, int window_radius) {
    AlgebraPtr s_alg = require_koszul(koszul_ring);
    ValidationReport rep = check_duplex(m);
    if (!rep.valid())
        throw ValidationError("sbar: invalid duplex: " + rep.violations.front());
    const Field& fl = s_alg->field();
    FinModule even = m.m0.direct_sum(m.m1);
    FinModule odd = m.m1.direct_sum(m.m0);
    size_t n0 = m.m0.dim(), n1 = m.m1.dim();
    /* forward maps (f w; -1 -g) and (g w; -1 -f), backward (0 0; 1 0) */
    Matrix d_even(fl, odd.dim(), even.dim());
    d_even.paste(0, 0, m.f);
    d_even.paste(0, n0, m.m1.action_of(m.w));
    d_even.paste(n1, 0, Matrix::identity(fl, n0).negated());
    d_even.paste(n1, n0, m.g.negated());
    Matrix d_odd(fl, even.dim(), odd.dim());
    d_odd.paste(0, 0, m.g);
    d_odd.paste(0, n1, m.m0.action_of(m.w));
    d_odd.paste(n0, 0, Matrix::identity(fl, n1).negated());
    d_odd.paste(n0, n1, m.f.negated());
    Matrix s_even(fl, odd.dim(), even.dim());
    s_even.paste(n1, 0, Matrix::identity(fl, n0));
    Matrix s_odd(fl, even.dim(), odd.dim());
    s_odd.paste(n0, 0, Matrix::identity(fl, n1));

    int lo = -window_radius, hi = window_radius;
    std::vector<FinModule> comp;
    std::vector<Matrix> d, s;
    for (int deg = lo; deg <= hi; ++deg) {
        comp.push_back(parity(deg) == 0 ? even : odd);
        if (deg < hi)
            d.push_back(parity(deg) == 0 ? d_even : d_odd);
        if (deg > lo)
            s.push_back(parity(deg) == 0 ? s_even : s_odd);
    }
    TameEnd end = TameEnd::periodic2(even, odd, d_even, d_odd, s_even, s_odd);
    return TameComplex(koszul_ring, lo, hi, std::move(comp), std::move(d), std::move(s), end, end);
}

namespace {

/* morphism checks on a widened window; phi is zero outside supp(x) */
bool check_tame_to_mixed(const TameComplex& t, const MixedComplex& x, const GradedMap& phi) {
    if (x.is_zero())
        return true;
    const Field& f = x.S->field();
    auto at = [&](int n) {
        if (const Matrix* m = phi.find(n))
            return *m;
        return Matrix(f, x.dim(n), t.dim(n));
    };
    int lo = x.min_degree() - 2, hi = x.max_degree() + 2;
    for (int n = lo; n <= hi; ++n) {
        Matrix p = at(n);
        if (p.rows() != x.dim(n) || p.cols() != t.dim(n))
            return false;
        for (size_t g : x.S->generators())
            if (!(p * t.component(n).action(g) == x.component(n).action(g) * p))
                return false;
        if (!(at(n + 1) * t.dmap(n) == x.dmap(n) * p))
            return false;
        if (!(at(n - 1) * t.smap(n) == x.smap(n) * p))
            return false;
    }
    return true;
}

bool check_mixed_to_tame(const TameComplex& t, const MixedComplex& x, const GradedMap& phi) {
    if (x.is_zero())
        return true;
    const Field& f = x.S->field();
    auto at = [&](int n) {
        if (const Matrix* m = phi.find(n))
            return *m;
        return Matrix(f, t.dim(n), x.dim(n));
    };
    int lo = x.min_degree() - 2, hi = x.max_degree() + 2;
    for (int n = lo; n <= hi; ++n) {
        Matrix p = at(n);
        if (p.rows() != t.dim(n) || p.cols() != x.dim(n))
            return false;
        for (size_t g : x.S->generators())
            if (!(p * x.component(n).action(g) == t.component(n).action(g) * p))
                return false;
        if (!(at(n + 1) * x.dmap(n) == t.dmap(n) * p))
            return false;
        if (!(at(n - 1) * x.smap(n) == t.smap(n) * p))
            return false;
    }
    return true;
}

std::vector<GradedMap> tame_morphism_space(const TameComplex& t, const MixedComplex& x, bool from_tame) {
    /* unknowns phi_n on supp(x); constraints on a widened window */
    const Field& f = x.S->field();
    if (x.is_zero())
        return {};
    MatrixEquations sys(f);
    std::map<int, int> var;
    for (auto& [n, m] : x.comp) {
        size_t td = t.dim(n);
        if (td == 0 || m.dim() == 0)
            continue;
        var[n] = from_tame ? sys.add_unknown(m.dim(), td) : sys.add_unknown(td, m.dim());
    }
    int lo = x.min_degree() - 2, hi = x.max_degree() + 2;
    for (int n = lo; n <= hi; ++n) {
        size_t sd = from_tame ? t.dim(n) : x.dim(n);
        auto rows_of = [&](int deg) { return from_tame ? x.dim(deg) : t.dim(deg); };
        /* S-linearity */
        for (size_t g : x.S->generators()) {
            if (!var.count(n))
                continue;
            int eq = sys.add_equation(rows_of(n), sd);
            Matrix src_act = from_tame ? t.component(n).action(g) : x.component(n).action(g);
            Matrix dst_act = from_tame ? x.component(n).action(g) : t.component(n).action(g);
            sys.add_right_term(eq, var[n], src_act, f.one());
            sys.add_left_term(eq, var[n], dst_act, f.neg(f.one()));
        }
        /* d and s intertwining */
        Matrix src_d = from_tame ? t.dmap(n) : x.dmap(n);
        Matrix dst_d = from_tame ? x.dmap(n) : t.dmap(n);
        if (rows_of(n + 1) && sd) {
            int eq = sys.add_equation(rows_of(n + 1), sd);
            if (var.count(n + 1))
                sys.add_right_term(eq, var[n + 1], src_d, f.one());
            if (var.count(n))
                sys.add_left_term(eq, var[n], dst_d, f.neg(f.one()));
        }
        Matrix src_s = from_tame ? t.smap(n) : x.smap(n);
        Matrix dst_s = from_tame ? x.smap(n) : t.smap(n);
        if (rows_of(n - 1) && sd) {
            int eq = sys.add_equation(rows_of(n - 1), sd);
            if (var.count(n - 1))
                sys.add_right_term(eq, var[n - 1], src_s, f.one());
            if (var.count(n))
                sys.add_left_term(eq, var[n], dst_s, f.neg(f.one()));
        }
    }
    auto sol = sys.solve();
    std::vector<GradedMap> out;
    for (auto& k : sol.kernel) {
        GradedMap m;
        size_t i = 0;
        for (auto& [n, v] : var)
            m.comp[n] = k[i++];
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace

bool is_sbar_to_mixed_morphism(const Duplex& m, const MixedComplex& x, const GradedMap& phi) {
    CdgRingPtr ring = CdgRing::koszul(m.S, m.w);
    int radius = x.is_zero() ? 4 : std::max(std::abs(x.min_degree()), std::abs(x.max_degree())) + 4;
    return check_tame_to_mixed(sbar(m, ring, radius), x, phi);
}

std::vector<GradedMap> sbar_to_mixed_morphism_space(const Duplex& m, const MixedComplex& x) {
    CdgRingPtr ring = CdgRing::koszul(m.S, m.w);
    int radius = x.is_zero() ? 4 : std::max(std::abs(x.min_degree()), std::abs(x.max_degree())) + 4;
    return tame_morphism_space(sbar(m, ring, radius), x, true);
}

bool is_mixed_to_sbar_sigma_morphism(const Duplex& m, const MixedComplex& x, const GradedMap& phi) {
    CdgRingPtr ring = CdgRing::koszul(m.S, m.w);
    int radius = x.is_zero() ? 4 : std::max(std::abs(x.min_degree()), std::abs(x.max_degree())) + 4;
    return check_mixed_to_tame(sbar(duplex_suspend(m), ring, radius), x, phi);
}

std::vector<GradedMap> mixed_to_sbar_sigma_morphism_space(const Duplex& m, const MixedComplex& x) {
    CdgRingPtr ring = CdgRing::koszul(m.S, m.w);
    int radius = x.is_zero() ? 4 : std::max(std::abs(x.min_degree()), std::abs(x.max_degree())) + 4;
    return tame_morphism_space(sbar(duplex_suspend(m), ring, radius), x, false);
}

GradedMap transpose_prod_to_mixed(const Duplex& m, const MixedComplex& x, const DuplexMorphism& psi) {
    /* psi: M -> fold_prod(X); phi_n = [alpha_n | s alpha_{n+1}] */
    const Field& f = m.S->field();
    FactorLayout evens = make_layout(x, [](int k) { return parity(k) == 0; });
    FactorLayout odds = make_layout(x, [](int k) { return parity(k) == 1; });
    auto alpha = [&](int n) {
        /* row block of psi^{parity n} belonging to the factor X^n */
        const FactorLayout& l = parity(n) == 0 ? evens : odds;
        const Matrix& c = parity(n) == 0 ? psi.c0 : psi.c1;
        Matrix out(f, x.dim(n), parity(n) == 0 ? m.m0.dim() : m.m1.dim());
        if (!l.contains(n))
            return out;
        size_t i = l.index_of(n);
        return c.submatrix(l.off[i], 0, x.dim(n), c.cols());
    };
    GradedMap phi;
    for (auto& [n, mod] : x.comp) {
        Matrix a = alpha(n);
        Matrix ap = x.smap(n + 1) * alpha(n + 1);
        phi.comp[n] = a.hstack(ap);
    }
    return phi;
}

DuplexMorphism transpose_prod_to_duplex(const Duplex& m, const MixedComplex& x, const GradedMap& phi) {
    const Field& f = m.S->field();
    FactorLayout evens = make_layout(x, [](int k) { return parity(k) == 0; });
    FactorLayout odds = make_layout(x, [](int k) { return parity(k) == 1; });
    auto alpha = [&](int n) {
        size_t cols = parity(n) == 0 ? m.m0.dim() : m.m1.dim();
        if (const Matrix* p = phi.find(n))
            return p->submatrix(0, 0, x.dim(n), cols);
        return Matrix(f, x.dim(n), cols);
    };
    Matrix c0(f, evens.total, m.m0.dim());
    for (size_t i = 0; i < evens.ks.size(); ++i)
        c0.paste(evens.off[i], 0, alpha(evens.ks[i]));
    Matrix c1(f, odds.total, m.m1.dim());
    for (size_t i = 0; i < odds.ks.size(); ++i)
        c1.paste(odds.off[i], 0, alpha(odds.ks[i]));
    return {std::move(c0), std::move(c1)};
}

GradedMap transpose_sum_to_mixed(const Duplex& m, const MixedComplex& x, const DuplexMorphism& psi) {
    /* psi: fold_sum(X) -> M; phi_n = (alpha_{n-1} s ; alpha_n): X^n ->
     * (Sigma M)^{par n} (+) (Sigma M)^{par n + 1} */
    const Field& f = m.S->field();
    FactorLayout evens = make_layout(x, [](int k) { return parity(k) == 0; });
    FactorLayout odds = make_layout(x, [](int k) { return parity(k) == 1; });
    auto alpha = [&](int n) {
        /* column block of psi^{parity n}: X^n -> M^{1 - parity n}; fold_sum X
         * components map into M0/M1 by parity, alpha_n targets (Sigma M)^{par n + 1} */
        const FactorLayout& l = parity(n) == 0 ? evens : odds;
        const Matrix& c = parity(n) == 0 ? psi.c0 : psi.c1;
        size_t rows = parity(n) == 0 ? m.m0.dim() : m.m1.dim();
        Matrix out(f, rows, x.dim(n));
        if (!l.contains(n))
            return out;
        size_t i = l.index_of(n);
        return c.submatrix(0, l.off[i], rows, x.dim(n));
    };
    GradedMap phi;
    for (auto& [n, mod] : x.comp) {
        Matrix a = alpha(n);
        Matrix ap = alpha(n - 1) * x.smap(n);
        phi.comp[n] = ap.vstack(a);
    }
    return phi;
}

DuplexMorphism transpose_sum_to_duplex(const Duplex& m, const MixedComplex& x, const GradedMap& phi) {
    const Field& f = m.S->field();
    FactorLayout evens = make_layout(x, [](int k) { return parity(k) == 0; });
    FactorLayout odds = make_layout(x, [](int k) { return parity(k) == 1; });
    /* alpha_n = bottom block of phi_n */
    auto alpha = [&](int n) {
        size_t rows = parity(n) == 0 ? m.m0.dim() : m.m1.dim();
        size_t top = parity(n) == 0 ? m.m1.dim() : m.m0.dim();
        if (const Matrix* p = phi.find(n))
            return p->submatrix(top, 0, rows, x.dim(n));
        return Matrix(f, rows, x.dim(n));
    };
    Matrix c0(f, m.m0.dim(), evens.total);
    for (size_t i = 0; i < evens.ks.size(); ++i)
        c0.paste(0, evens.off[i], alpha(evens.ks[i]));
    Matrix c1(f, m.m1.dim(), odds.total);
    for (size_t i = 0; i < odds.ks.size(); ++i)
        c1.paste(0, odds.off[i], alpha(odds.ks[i]));
    return {std::move(c0), std::move(c1)};
}

GradedMap counit_prod(const MixedComplex& x) {
    Duplex mfold = fold(x, FoldMode::Product);
    DuplexMorphism id{Matrix::identity(x.S->field(), mfold.m0.dim()),
                      Matrix::identity(x.S->field(), mfold.m1.dim())};
    return transpose_prod_to_mixed(mfold, x, id);
}

DuplexMorphism unit_prod(const Duplex& m, const CdgRingPtr& koszul_ring) {
    /* window-scale unit M -> fold_prod(window slice of sbar M): each degree
     * contributes the first-summand inclusion */
    (void)koszul_ring;
    const Field& f = m.S->field();
    /* alpha_n = inclusion of M^{par n} into sbar(M)^n = M^{par n} (+) ... ;
     * fold over one period: even degree 0 and odd degree 1 */
    Matrix c0(f, m.m0.dim() + m.m1.dim(), m.m0.dim());
    c0.paste(0, 0, Matrix::identity(f, m.m0.dim()));
    Matrix c1(f, m.m0.dim() + m.m1.dim(), m.m1.dim());
    c1.paste(0, 0, Matrix::identity(f, m.m1.dim()));
    return {std::move(c0), std::move(c1)};
}

Matrix SModuleComplex::dmap(int k) const {
    auto it = d.find(k);
    if (it != d.end())
        return it->second;
    return Matrix(S->field(), dim(k + 1), dim(k));
}

SModuleComplex underlying_complex(const MixedComplex& x) {
    SModuleComplex v;
    v.S = x.S;
    v.comp = x.comp;
    v.d = x.d;
    return v;
}

SModuleComplex suspend_complex(const SModuleComplex& v, int n) {
    SModuleComplex out;
    out.S = v.S;
    for (auto& [k, m] : v.comp)
        out.comp.emplace(k - n, m);
    for (auto& [k, m] : v.d)
        out.d[k - n] = parity(n) ? m.negated() : m;
    return out;
}

MixedComplex induce_koszul(const CdgRingPtr& koszul_ring, const SModuleComplex& v, int shift) {
    AlgebraPtr s_alg = require_koszul(koszul_ring);
    const Field& f = s_alg->field();
    SModuleComplex sv = suspend_complex(v, shift);
    MixedComplex out;
    out.S = s_alg;
    out.w = koszul_ring->s_context()->w;
    std::map<int, size_t> first, second;
    for (auto& [k, m] : sv.comp) {
        /* component at n: V^n (+) V^{n+1} with V the shifted complex */
        for (int n : {k, k - 1}) {
            if (out.comp.count(n))
                continue;
            size_t d1 = sv.dim(n), d2 = sv.dim(n + 1);
            if (d1 + d2 == 0)
                continue;
            FinModule part1 = sv.comp.count(n) ? sv.comp.at(n) : FinModule::zero(s_alg);
            FinModule part2 = sv.comp.count(n + 1) ? sv.comp.at(n + 1) : FinModule::zero(s_alg);
            out.comp.emplace(n, part1.direct_sum(part2));
            first[n] = d1;
            second[n] = d2;
        }
    }
    for (auto& [n, m] : out.comp) {
        size_t rows1 = out.dim(n + 1) ? first[n + 1] : 0;
        if (out.dim(n + 1)) {
            Matrix dd(f, out.dim(n + 1), m.dim());
            /* d(p, q) = (d p + w q, -d q) */
            dd.paste(0, 0, sv.dmap(n));
            Matrix w_act(f, sv.dim(n + 1), sv.dim(n + 1));
            if (sv.dim(n + 1)) {
                w_act = sv.comp.at(n + 1).action_of(out.w);
                dd.paste(0, first[n], w_act);
            }
            dd.paste(rows1, first[n], sv.dmap(n + 1).negated());
            out.d[n] = std::move(dd);
        }
        if (out.dim(n - 1)) {
            /* s(p, q) = (0, p) */
            Matrix ss(f, out.dim(n - 1), m.dim());
            Matrix id(f, 0, 0);
            if (sv.dim(n))
                ss.paste(first[n - 1], 0, Matrix::identity(f, sv.dim(n)));
            out.s[n] = std::move(ss);
            (void)id;
        }
    }
    return out;
}

BarComplex bar_complex(const MixedComplex& x, size_t depth) {
    ValidationReport rep = check_mixed(x);
    if (!rep.valid())
        throw ValidationError("bar_complex: invalid mixed complex: " + rep.violations.front());
    const Field& f = x.S->field();
    BarComplex out;
    out.x = x;
    SModuleComplex v = underlying_complex(x);
    CdgRingPtr ring = CdgRing::koszul(x.S, x.w);
    for (size_t k = 0; k <= depth; ++k) {
        /* T_k = K (x) Sigma^k X with differential from the Leibniz rule */
        MixedComplex t = induce_koszul(ring, v, static_cast<int>(k));
        out.terms.push_back(std::move(t));
    }
    /* bar maps: on 1(x)v: s(x)v + (-1)^k 1(x)sv; on s(x)u: (-1)^k s(x)su */
    for (size_t k = 1; k <= depth; ++k) {
        GradedMap b;
        const MixedComplex& src = out.terms[k];
        const MixedComplex& dst = out.terms[k - 1];
        bool odd = (k % 2) == 1;
        for (auto& [n, m] : src.comp) {
            if (dst.dim(n) == 0)
                continue;
            int kk = static_cast<int>(k);
            size_t src1 = x.dim(n + kk); /* first part X^{n+k} */
            size_t dst1 = x.dim(n + kk - 1);
            Matrix blk(f, dst.dim(n), m.dim());
            Matrix sfirst = x.smap(n + kk);
            Matrix ssecond = x.smap(n + kk + 1);
            blk.paste(0, 0, odd ? sfirst.negated() : sfirst);
            blk.paste(dst1, 0, Matrix::identity(f, src1));
            blk.paste(dst1, src1, odd ? ssecond.negated() : ssecond);
            b.comp[n] = std::move(blk);
        }
        out.maps.push_back(std::move(b));
    }
    for (auto& [n, m] : out.terms[0].comp) {
        if (x.dim(n) == 0)
            continue;
        Matrix a(f, x.dim(n), m.dim());
        a.paste(0, 0, Matrix::identity(f, x.dim(n)));
        a.paste(0, x.dim(n), x.smap(n + 1));
        out.augmentation.comp[n] = std::move(a);
    }
    return out;
}

AcyclicityVerdict bar_acyclic_on(const BarComplex& b, int lo, int hi) {
    if (lo > hi)
        throw ValidationError("bar_acyclic_on: empty window");
    size_t depth = b.terms.size() - 1;
    AcyclicityVerdict v{true, lo, hi, {}};
    const Field& f = b.x.S->field();
    for (int n = lo; n <= hi; ++n) {
        if (b.terms[depth].dim(n) != 0)
            throw ValidationError("bar_acyclic_on: window insufficient, term at depth " +
                                  std::to_string(depth) + " does not vanish at degree " + std::to_string(n));
        auto map_at = [&](size_t k) { /* terms[k] -> terms[k-1] (k>=1), 0 -> augmentation */
            if (k == 0) {
                if (const Matrix* m = b.augmentation.find(n))
                    return *m;
                return Matrix(f, b.x.dim(n), b.terms[0].dim(n));
            }
            if (const Matrix* m = b.maps[k - 1].find(n))
                return *m;
            return Matrix(f, b.terms[k - 1].dim(n), b.terms[k].dim(n));
        };
        /* exactness of 0 -> T_depth^n -> ... -> T_0^n -> X^n -> 0 */
        if (map_at(0).rank() != b.x.dim(n)) {
            v.acyclic = false;
            v.nonzero_h.push_back(n);
            continue;
        }
        for (size_t k = 0; k < depth; ++k) {
            size_t ker = b.terms[k].dim(n) - map_at(k).rank();
            size_t im = map_at(k + 1).rank();
            if (ker != im) {
                v.acyclic = false;
                v.nonzero_h.push_back(n);
                break;
            }
        }
    }
    return v;
}

TameComplex completed_bar_closed(const MixedComplex& x, const CdgRingPtr& koszul_ring) {
    AlgebraPtr s_alg = require_koszul(koszul_ring);
    if (x.is_zero())
        throw ValidationError("completed_bar_closed: zero input (nothing to resolve)");
    int a = x.min_degree(), b = x.max_degree();
    int lo = a - 3, hi = b + 1;
    std::vector<FinModule> comp;
    std::vector<Matrix> d, s;
    auto layout_at = [&](int n) { return make_layout(x, [&](int k) { return k >= n; }); };
    for (int n = lo; n <= hi; ++n)
        comp.push_back(layout_module(x, layout_at(n)));
    for (int n = lo; n < hi; ++n)
        d.push_back(closed_diff(x, n, layout_at(n), layout_at(n + 1)));
    for (int n = lo + 1; n <= hi; ++n)
        s.push_back(closed_s(x, n, layout_at(n), layout_at(n - 1)));
    /* below everything is present: 2-periodic cells */
    FactorLayout full = make_layout(x, [](int) { return true; });
    FinModule cell = layout_module(x, full);
    int e = lo - (parity(lo) == 0 ? 0 : 1); /* an even degree in the stable region */
    TameEnd below = TameEnd::periodic2(cell, cell, closed_diff(x, e, full, full),
                                       closed_diff(x, e + 1, full, full), closed_s(x, e, full, full),
                                       closed_s(x, e + 1, full, full));
    return TameComplex(koszul_ring, lo, hi, std::move(comp), std::move(d), std::move(s), below,
                       TameEnd::zero());
}

namespace {

/* sign of the isomorphism Sigma^k(K (x) Sigma^k X) = K (x) Sigma^{2k} X on
 * the 1(x)- and s(x)-parts */
std::pair<int, int> factor_signs(size_t k, BarSignConvention conv) {
    int tri = ((k * (k + 1) / 2) % 2) ? -1 : 1;
    int one_part = tri;
    int s_part = ((k % 2) ? -1 : 1) * tri;
    if (conv == BarSignConvention::MutatedDropDegreeTerm)
        s_part = tri;
    return {one_part, s_part};
}

}  // namespace

CompletedBarCrossCheck completed_bar_crosscheck(const MixedComplex& x, const CdgRingPtr& koszul_ring,
                                                BarSignConvention convention) {
    const Field& f = x.S->field();
    if (x.is_zero())
        return {true, ""};
    int a = x.min_degree(), b = x.max_degree();
    int lo = a - 3, hi = b + 1;
    size_t kmax = static_cast<size_t>((b - lo) / 2 + 2);
    BarComplex bar = bar_complex(x, kmax);
    /* totalization at degree n: factors k = 0..kmax occupying
     * X^{n+2k} (+) X^{n+2k+1}, i.e. ascending j >= n; transported along the
     * sign isomorphisms into K (x) Sigma^{2k} X coordinates */
    struct Slot {
        int j;        /* internal degree of the factor */
        size_t k;     /* bar depth */
        bool second;  /* s(x)-part */
        size_t off;   /* offset in the assembled component */
        int sign;
    };
    auto slots_at = [&](int n) {
        std::vector<Slot> out;
        size_t off = 0;
        for (size_t k = 0; k <= kmax; ++k) {
            auto [s1, s2] = factor_signs(k, convention);
            int j1 = n + 2 * static_cast<int>(k), j2 = j1 + 1;
            if (x.dim(j1)) {
                out.push_back({j1, k, false, off, s1});
                off += x.dim(j1);
            }
            if (x.dim(j2)) {
                out.push_back({j2, k, true, off, s2});
                off += x.dim(j2);
            }
        }
        return out;
    };
    /* entry extraction from the bar terms: the block of a map between the
     * components T_{k_src}^{nu_src} -> T_{k_dst}^{nu_dst}, in (first, second)
     * part coordinates; the parts of T_k^{nu} are X^{nu+k} and X^{nu+k+1} */
    auto term_block = [&](const Matrix& m, int nu_src, int k_src, int nu_dst, int k_dst, bool ssrc,
                          bool sdst) {
        size_t roff = sdst ? x.dim(nu_dst + k_dst) : 0;
        size_t coff = ssrc ? x.dim(nu_src + k_src) : 0;
        size_t rows = x.dim(nu_dst + k_dst + (sdst ? 1 : 0));
        size_t cols = x.dim(nu_src + k_src + (ssrc ? 1 : 0));
        if (rows == 0 || cols == 0)
            return Matrix(f, rows, cols);
        return m.submatrix(roff, coff, rows, cols);
    };
    TameComplex closed = completed_bar_closed(x, koszul_ring);
    for (int n = lo; n <= hi; ++n) {
        auto src = slots_at(n);
        size_t total = 0;
        for (auto& s : src)
            total += x.dim(s.j);
        if (total != closed.dim(n))
            return {false, "component dimension mismatch at degree " + std::to_string(n)};
        /* assemble transported d and s */
        for (int dir : {+1, -1}) {
            if (n + dir < lo || n + dir > hi)
                continue;
            auto dst = slots_at(n + dir);
            size_t dtotal = 0;
            for (auto& s : dst)
                dtotal += x.dim(s.j);
            Matrix assembled(f, dtotal, total);
            for (const Slot& sl : src)
                for (const Slot& dl : dst) {
                    Matrix blk(f, x.dim(dl.j), x.dim(sl.j));
                    int ks = static_cast<int>(sl.k), kd = static_cast<int>(dl.k);
                    int nu = n + ks; /* internal degree of the source component */
                    if (dir == +1) {
                        if (dl.k == sl.k) {
                            /* internal differential of Sigma^k T_k at degree n:
                             * (-1)^k del_{T_k}(n+k), landing in T_k^{nu+1} */
                            const MixedComplex& t = bar.terms[sl.k];
                            Matrix m = t.dmap(nu);
                            if (sl.k % 2)
                                m = m.negated();
                            blk = term_block(m, nu, ks, nu + 1, kd, sl.second, dl.second);
                        } else if (dl.k + 1 == sl.k) {
                            /* connecting map b_k: T_k^{nu} -> T_{k-1}^{nu} */
                            const GradedMap& bm = bar.maps[sl.k - 1];
                            Matrix m = bm.find(nu) ? *bm.find(nu)
                                                   : Matrix(f, bar.terms[sl.k - 1].dim(nu),
                                                            bar.terms[sl.k].dim(nu));
                            blk = term_block(m, nu, ks, nu, kd, sl.second, dl.second);
                        }
                    } else {
                        if (dl.k == sl.k) {
                            /* s-action of Sigma^k T_k: (-1)^k [[0,0],[1,0]],
                             * landing in T_k^{nu-1} */
                            const MixedComplex& t = bar.terms[sl.k];
                            Matrix m = t.smap(nu);
                            if (sl.k % 2)
                                m = m.negated();
                            blk = term_block(m, nu, ks, nu - 1, kd, sl.second, dl.second);
                        }
                    }
                    if (blk.is_zero())
                        continue;
                    int sign = sl.sign * dl.sign;
                    if (sign < 0)
                        blk = blk.negated();
                    assembled.paste(dl.off, sl.off, blk);
                }
            Matrix expected = dir == +1 ? closed.dmap(n) : closed.smap(n);
            if (!(assembled == expected)) {
                std::ostringstream os;
                os << (dir == +1 ? "differential" : "s-action") << " mismatch at degree " << n;
                return {false, os.str()};
            }
        }
    }
    return {true, ""};
}

GradedMap completed_bar_q(const MixedComplex& x) {
    const Field& f = x.S->field();
    GradedMap q;
    for (auto& [n, m] : x.comp) {
        FactorLayout l = make_layout(x, [&](int k) { return k >= n; });
        Matrix qn(f, m.dim(), l.total);
        qn.paste(0, l.off[l.index_of(n)], Matrix::identity(f, m.dim()));
        if (l.contains(n + 1))
            qn.paste(0, l.off[l.index_of(n + 1)], x.smap(n + 1));
        q.comp[n] = std::move(qn);
    }
    return q;
}

AlphaData alpha_epi(const MixedComplex& x, const CdgRingPtr& koszul_ring) {
    const Field& f = x.S->field();
    if (x.is_zero())
        throw ValidationError("alpha_epi: zero input");
    int a = x.min_degree(), b = x.max_degree();
    Duplex folded = fold(x, FoldMode::Product);
    int radius = std::max(std::abs(a), std::abs(b)) + 8;
    TameComplex sf = sbar(folded, koszul_ring, radius);
    TameComplex bp = completed_bar_closed(x, koszul_ring);

    FactorLayout evens = make_layout(x, [](int k) { return parity(k) == 0; });
    FactorLayout odds = make_layout(x, [](int k) { return parity(k) == 1; });
    FactorLayout full = make_layout(x, [](int) { return true; });
    /* permutation from sbar(fold X)^n = [M^{par n} | M^{par n + 1}] to the
     * ascending all-k layout */
    auto perm = [&](int n) {
        const FactorLayout& fst = parity(n) == 0 ? evens : odds;
        const FactorLayout& snd = parity(n) == 0 ? odds : evens;
        Matrix p(f, full.total, full.total);
        size_t col = 0;
        for (const FactorLayout* l : {&fst, &snd})
            for (size_t i = 0; i < l->ks.size(); ++i) {
                size_t dst = full.off[full.index_of(l->ks[i])];
                for (size_t r = 0; r < x.dim(l->ks[i]); ++r)
                    p.at(dst + r, col + r) = f.one();
                col += x.dim(l->ks[i]);
            }
        return p;
    };
    /* verify that the permuted sbar(fold X) matches the closed-form rules */
    for (int n = a - 4; n <= b + 3; ++n) {
        Matrix lhs_d = perm(n + 1) * sf.dmap(n) * perm(n).transposed();
        if (!(lhs_d == closed_diff(x, n, full, full)))
            throw ValidationError("alpha_epi: sbar(fold X) does not match the closed form (d)");
        Matrix lhs_s = perm(n - 1) * sf.smap(n) * perm(n).transposed();
        if (!(lhs_s == closed_s(x, n, full, full)))
            throw ValidationError("alpha_epi: sbar(fold X) does not match the closed form (s)");
    }

    AlphaData out{std::move(sf), std::move(bp), {}, /* kernel placeholder below */
                  TameComplex(koszul_ring, 0, 0, {FinModule::zero(x.S)}, {}, {}, TameEnd::zero(),
                              TameEnd::zero()),
                  true, true};
    /* alpha in sbar(fold) coordinates: select factors k >= n after permuting */
    for (int n = out.bprod.lo(); n <= out.bprod.hi(); ++n) {
        FactorLayout tgt = make_layout(x, [&](int k) { return k >= n; });
        Matrix sel(f, tgt.total, full.total);
        for (size_t i = 0; i < tgt.ks.size(); ++i)
            for (size_t r = 0; r < x.dim(tgt.ks[i]); ++r)
                sel.at(tgt.off[i] + r, full.off[full.index_of(tgt.ks[i])] + r) = f.one();
        out.alpha.comp[n] = sel * perm(n);
    }
    /* morphism + surjectivity checks on the bprod window */
    auto alpha_at = [&](int n) {
        if (const Matrix* m = out.alpha.find(n))
            return *m;
        FactorLayout tgt = make_layout(x, [&](int k) { return k >= n; });
        Matrix sel(f, tgt.total, full.total);
        for (size_t i = 0; i < tgt.ks.size(); ++i)
            for (size_t r = 0; r < x.dim(tgt.ks[i]); ++r)
                sel.at(tgt.off[i] + r, full.off[full.index_of(tgt.ks[i])] + r) = f.one();
        return Matrix(sel * perm(n));
    };
    for (int n = out.bprod.lo(); n < out.bprod.hi(); ++n) {
        if (!(alpha_at(n + 1) * out.sbar_fold.dmap(n) == out.bprod.dmap(n) * alpha_at(n)))
            out.alpha_is_morphism = false;
        if (!(alpha_at(n) * out.sbar_fold.smap(n + 1) == out.bprod.smap(n + 1) * alpha_at(n + 1)))
            out.alpha_is_morphism = false;
    }
    for (int n = out.bprod.lo(); n <= out.bprod.hi(); ++n)
        if (alpha_at(n).rank() != out.bprod.dim(n))
            out.alpha_surjective = false;

    /* kernel: factors k < n; eventually zero below, 2-periodic above */
    int klo = a, khi = b + 3;
    std::vector<FinModule> comp;
    std::vector<Matrix> d, s;
    auto ker_layout = [&](int n) { return make_layout(x, [&](int k) { return k < n; }); };
    for (int n = klo; n <= khi; ++n)
        comp.push_back(layout_module(x, ker_layout(n)));
    for (int n = klo; n < khi; ++n)
        d.push_back(closed_diff(x, n, ker_layout(n), ker_layout(n + 1)));
    for (int n = klo + 1; n <= khi; ++n)
        s.push_back(closed_s(x, n, ker_layout(n), ker_layout(n - 1)));
    FinModule cell = layout_module(x, full);
    int e = khi - (parity(khi) == 0 ? 0 : 1);
    TameEnd above = TameEnd::periodic2(cell, cell, closed_diff(x, e, full, full),
                                       closed_diff(x, e + 1, full, full), closed_s(x, e, full, full),
                                       closed_s(x, e + 1, full, full));
    out.kernel = TameComplex(koszul_ring, klo, khi, std::move(comp), std::move(d), std::move(s),
                             TameEnd::zero(), above);
    /* dimension accounting: dim ker = dim source - dim target on the shared window */
    for (int n = out.bprod.lo(); n <= out.bprod.hi(); ++n)
        if (out.kernel.dim(n) + out.bprod.dim(n) != out.sbar_fold.dim(n))
            throw ValidationError("alpha_epi: kernel dimensions are inconsistent");
    return out;
}

MixedComplex filtration_quotient(const MixedComplex& x, size_t i) {
    const Field& f = x.S->field();
    MixedComplex out;
    out.S = x.S;
    out.w = x.w;
    int shift = 2 * static_cast<int>(i) + 2;
    /* components X^{n - 2i - 2} (+) X^{n - 2i - 1} in ascending factor order,
     * the tail of the kernel's closed-form layout;
     * d(u, v) = (du + wv, -dv), s(u, v) = (0, u) */
    for (auto& [k, m] : x.comp) {
        for (int n : {k + shift, k + shift - 1}) {
            if (out.comp.count(n))
                continue;
            int kb = n - shift, ka = n - shift + 1;
            if (x.dim(kb) + x.dim(ka) == 0)
                continue;
            FinModule pb = x.dim(kb) ? x.comp.at(kb) : FinModule::zero(x.S);
            FinModule pa = x.dim(ka) ? x.comp.at(ka) : FinModule::zero(x.S);
            out.comp.emplace(n, pb.direct_sum(pa));
        }
    }
    for (auto& [n, m] : out.comp) {
        int kb = n - shift, ka = n - shift + 1;
        if (out.dim(n + 1)) {
            Matrix dd(f, out.dim(n + 1), m.dim());
            dd.paste(0, 0, x.dmap(kb));
            if (x.dim(ka)) {
                dd.paste(0, x.dim(kb), x.comp.at(ka).action_of(x.w));
                dd.paste(x.dim(ka), x.dim(kb), x.dmap(ka).negated());
            }
            out.d[n] = std::move(dd);
        }
        if (out.dim(n - 1)) {
            Matrix ss(f, out.dim(n - 1), m.dim());
            if (x.dim(kb))
                ss.paste(x.dim(kb - 1), 0, Matrix::identity(f, x.dim(kb)));
            out.s[n] = std::move(ss);
        }
    }
    return out;
}

FiltrationCheck filtration_quotient_check(const MixedComplex& x, const CdgRingPtr& koszul_ring, size_t i,
                                          Rng& rng) {
    MixedComplex quot = filtration_quotient(x, i);
    ValidationReport rep = check_mixed(quot);
    if (!rep.valid())
        throw ValidationError("filtration_quotient: invalid: " + rep.violations.front());
    MixedComplex ind = induce_koszul(koszul_ring, underlying_complex(x), -2 * static_cast<int>(i) - 2);
    CdgModule qc = mixed_to_cdg(koszul_ring, quot);
    CdgModule ic = mixed_to_cdg(koszul_ring, ind);
    CdgIsoResult iso = find_cdg_isomorphism(qc, ic, rng);
    return {iso.verdict == IsoVerdict::Yes, iso.verdict};
}

bool counit_factorization_check(const MixedComplex& x, const CdgRingPtr& koszul_ring) {
    if (x.is_zero())
        return true;
    GradedMap eps = counit_prod(x);
    AlphaData ad = alpha_epi(x, koszul_ring);
    GradedMap q = completed_bar_q(x);
    for (auto& [n, m] : x.comp) {
        const Matrix* e = eps.find(n);
        const Matrix* qa = q.find(n);
        const Matrix* al = ad.alpha.find(n);
        if (!e || !qa || !al)
            return false;
        if (!((*qa) * (*al) == *e))
            return false;
    }
    return true;
}

}  // namespace cdgforge
