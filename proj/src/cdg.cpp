#include "cdgforge/cdg.hpp"

#include <algorithm>
#include <set>

#include "cdgforge/mateq.hpp"

namespace cdgforge {

namespace {

std::vector<Scalar> zero_vec(const Field& f, size_t n) { return std::vector<Scalar>(n, f.zero()); }

}  // namespace

CdgRing::CdgRing(GradedAlgebraPtr base, std::vector<std::vector<Scalar>> diff_of_basis,
                 std::vector<Scalar> curvature)
    : base_(std::move(base)), diff_(std::move(diff_of_basis)), w_(std::move(curvature)) {
    const Field& f = base_->field();
    const GradingGroup& gr = base_->grading();
    size_t n = base_->dim();
    if (diff_.size() != n || w_.size() != n)
        throw ValidationError("cdg ring data has wrong shape");
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            if (!f.is_zero(diff_[i][k]) && base_->degree(k) != gr.normalize(base_->degree(i) + 1))
                throw ValidationError("cdg ring differential is not of degree +1");
    for (size_t k = 0; k < n; ++k)
        if (!f.is_zero(w_[k]) && base_->degree(k) != gr.normalize(2))
            throw ValidationError("cdg ring curvature is not of degree 2");
    if (std::any_of(w_.begin(), w_.end(), [&](const Scalar& c) { return !f.is_zero(c); })) {
        for (size_t i = 0; i < n; ++i) {
            std::vector<Scalar> ei = zero_vec(f, n);
            ei[i] = f.one();
            if (base_->multiply(w_, ei) != base_->multiply(ei, w_))
                throw ValidationError("cdg ring curvature is not central");
        }
    }
    std::vector<Scalar> dw = diff_of(w_);
    if (std::any_of(dw.begin(), dw.end(), [&](const Scalar& c) { return !f.is_zero(c); }))
        throw ValidationError("cdg ring: del(w) != 0");
    /* Leibniz and del^2 = [w, -] on all basis pairs */
    auto add = [&](std::vector<Scalar> a, const std::vector<Scalar>& b, bool negate) {
        for (size_t k = 0; k < n; ++k)
            a[k] = negate ? f.sub(a[k], b[k]) : f.add(a[k], b[k]);
        return a;
    };
    for (size_t i = 0; i < n; ++i) {
        std::vector<Scalar> ei = zero_vec(f, n);
        ei[i] = f.one();
        for (size_t j = 0; j < n; ++j) {
            std::vector<Scalar> ej = zero_vec(f, n);
            ej[j] = f.one();
            auto lhs = diff_of(base_->multiply(ei, ej));
            bool odd = gr.parity(base_->degree(i)) == 1;
            auto rhs = add(base_->multiply(diff_[i], ej), base_->multiply(ei, diff_[j]), odd);
            if (lhs != rhs)
                throw ValidationError("cdg ring Leibniz rule fails on basis pair (" + std::to_string(i) + "," +
                                      std::to_string(j) + ")");
        }
        auto dd = diff_of(diff_[i]);
        auto comm = add(base_->multiply(w_, ei), base_->multiply(ei, w_), true);
        if (dd != comm)
            throw ValidationError("cdg ring del^2(x) != [w,x] on basis element " + std::to_string(i));
    }
}

std::vector<Scalar> CdgRing::diff_of(const std::vector<Scalar>& a) const {
    const Field& f = base_->field();
    auto out = zero_vec(f, base_->dim());
    for (size_t i = 0; i < base_->dim(); ++i) {
        if (f.is_zero(a[i]))
            continue;
        for (size_t k = 0; k < base_->dim(); ++k)
            out[k] = f.add(out[k], f.mul(a[i], diff_[i][k]));
    }
    return out;
}

std::shared_ptr<const CdgRing> CdgRing::ring_as_dg(AlgebraPtr r) {
    const Field& f = r->field();
    size_t n = r->dim();
    std::vector<int> degree(n, 0);
    std::vector<std::vector<std::vector<Scalar>>> mult(n, std::vector<std::vector<Scalar>>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            mult[i][j] = r->basis_product(i, j);
    auto base = std::make_shared<GradedAlgebra>(f, GradingGroup{GradingGroup::Kind::Z}, std::move(degree),
                                                std::move(mult), r->unit());
    auto ring = std::make_shared<CdgRing>(base, std::vector<std::vector<Scalar>>(n, zero_vec(f, n)),
                                          zero_vec(f, n));
    return ring;
}

std::shared_ptr<const CdgRing> CdgRing::koszul(AlgebraPtr s, std::vector<Scalar> w) {
    const Field& f = s->field();
    size_t n = s->dim();
    for (size_t i = 0; i < n; ++i) {
        std::vector<Scalar> ei = zero_vec(f, n);
        ei[i] = f.one();
        if (s->multiply(w, ei) != s->multiply(ei, w))
            throw ValidationError("koszul: w must be central in S");
    }
    /* basis: e_0..e_{n-1} in degree 0, then s e_0..s e_{n-1} in degree -1 */
    std::vector<int> degree(2 * n, 0);
    for (size_t i = 0; i < n; ++i)
        degree[n + i] = -1;
    std::vector<std::vector<std::vector<Scalar>>> mult(2 * n,
                                                       std::vector<std::vector<Scalar>>(2 * n, zero_vec(f, 2 * n)));
    auto lift = [&](const std::vector<Scalar>& c, size_t part) {
        std::vector<Scalar> full = zero_vec(f, 2 * n);
        for (size_t k = 0; k < n; ++k)
            full[part * n + k] = c[k];
        return full;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto prod = s->basis_product(i, j);
            mult[i][j] = lift(prod, 0);
            mult[i][n + j] = lift(prod, 1);
            mult[n + i][j] = lift(prod, 1);
            /* (s e_i)(s e_j) = 0 */
        }
    std::vector<Scalar> unit = lift(s->unit(), 0);
    auto base = std::make_shared<GradedAlgebra>(f, GradingGroup{GradingGroup::Kind::Z}, std::move(degree),
                                                std::move(mult), std::move(unit));
    std::vector<std::vector<Scalar>> diff(2 * n, zero_vec(f, 2 * n));
    for (size_t i = 0; i < n; ++i) {
        std::vector<Scalar> ei = zero_vec(f, n);
        ei[i] = f.one();
        diff[n + i] = lift(s->multiply(w, ei), 0); /* del(s e_i) = w e_i */
    }
    auto ring = std::make_shared<CdgRing>(base, std::move(diff), zero_vec(f, 2 * n));
    ring->s_context_ = SContext{std::move(s), std::move(w)};
    return ring;
}

std::shared_ptr<const CdgRing> CdgRing::curved_two_periodic(AlgebraPtr s, std::vector<Scalar> w) {
    const Field& f = s->field();
    size_t n = s->dim();
    for (size_t i = 0; i < n; ++i) {
        std::vector<Scalar> ei = zero_vec(f, n);
        ei[i] = f.one();
        if (s->multiply(w, ei) != s->multiply(ei, w))
            throw ValidationError("curved_two_periodic: w must be central in S");
    }
    std::vector<int> degree(n, 0);
    std::vector<std::vector<std::vector<Scalar>>> mult(n, std::vector<std::vector<Scalar>>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            mult[i][j] = s->basis_product(i, j);
    auto base = std::make_shared<GradedAlgebra>(f, GradingGroup{GradingGroup::Kind::Z2}, std::move(degree),
                                                std::move(mult), s->unit());
    auto ring = std::make_shared<CdgRing>(base, std::vector<std::vector<Scalar>>(n, zero_vec(f, n)), w);
    ring->s_context_ = SContext{std::move(s), std::move(w)};
    return ring;
}

CdgModule::CdgModule(CdgRingPtr ring, GradedModule under, std::map<int, Matrix> diff)
    : ring_(std::move(ring)), under_(std::move(under)), diff_(std::move(diff)) {
    const GradingGroup& gr = ring_->grading();
    if (!(*under_.algebra() == *ring_->base()))
        throw ValidationError("cdg module: underlying graded module is over the wrong graded algebra");
    std::map<int, Matrix> nd;
    for (auto& [d, m] : diff_) {
        if (m.rows() == 0 && m.cols() == 0)
            continue;
        nd.emplace(gr.normalize(d), m);
    }
    diff_ = std::move(nd);
    for (auto& [d, m] : diff_)
        if (m.cols() != under_.dim(d) || m.rows() != under_.dim(d + 1))
            throw ValidationError("cdg module differential has wrong shape in degree " + std::to_string(d));
    /* Leibniz on every ring basis element, and del^2 = w */
    const GradedAlgebra& a = *ring_->base();
    for (size_t b = 0; b < a.dim(); ++b) {
        int g = a.degree(b);
        int sign = gr.parity(g);
        for (auto& [d, n] : under_.dims()) {
            Matrix lhs = this->diff(d + g) * under_.action(b, d);
            Matrix delb = under_.action_of(ring_->diff_of_basis(b), g + 1, d);
            Matrix rhs = sign ? delb - under_.action(b, d + 1) * this->diff(d)
                              : delb + under_.action(b, d + 1) * this->diff(d);
            if (!(lhs == rhs))
                throw ValidationError("cdg module Leibniz rule fails (basis " + std::to_string(b) +
                                      ", degree " + std::to_string(d) + ")");
        }
    }
    for (auto& [d, n] : under_.dims()) {
        Matrix dd = this->diff(d + 1) * this->diff(d);
        Matrix w = under_.action_of(ring_->curvature(), 2, d);
        if (!(dd == w))
            throw ValidationError("cdg module curvature identity del^2 = w fails in degree " + std::to_string(d));
    }
}

CdgModule CdgModule::zero(CdgRingPtr ring) {
    GradedModule z = GradedModule::zero(ring->base());
    return CdgModule(std::move(ring), std::move(z), {});
}

CdgModule CdgModule::regular(CdgRingPtr ring) {
    GradedModule under = GradedModule::free_module(ring->base(), 0);
    const GradedAlgebra& a = *ring->base();
    const Field& f = ring->field();
    std::map<int, std::vector<size_t>> comp;
    for (size_t i = 0; i < a.dim(); ++i)
        comp[a.degree(i)].push_back(i);
    std::map<int, Matrix> diff;
    for (auto& [d, idx] : comp) {
        int dt = a.grading().normalize(d + 1);
        if (!comp.count(dt))
            continue;
        const auto& tgt = comp.at(dt);
        Matrix m(f, tgt.size(), idx.size());
        for (size_t j = 0; j < idx.size(); ++j) {
            const auto& dj = ring->diff_of_basis(idx[j]);
            for (size_t i = 0; i < tgt.size(); ++i)
                m.at(i, j) = dj[tgt[i]];
        }
        diff[d] = std::move(m);
    }
    return CdgModule(std::move(ring), std::move(under), std::move(diff));
}

CdgModule CdgModule::stalk(CdgRingPtr ring, const FinModule& m, int k) {
    std::vector<size_t> idx;
    auto a0 = ring->base()->degree_zero_part(&idx);
    if (!(*a0 == *m.algebra()))
        throw ValidationError("stalk: module is not over the degree-zero part of the ring");
    std::map<int, size_t> dims;
    if (m.dim())
        dims[ring->grading().normalize(k)] = m.dim();
    std::vector<GradedMap> act(ring->base()->dim());
    for (size_t p = 0; p < idx.size(); ++p)
        if (m.dim())
            act[idx[p]].comp[ring->grading().normalize(k)] = m.action(p);
    GradedModule under(ring->base(), std::move(dims), std::move(act));
    return CdgModule(std::move(ring), std::move(under), {});
}

Matrix CdgModule::diff(int d) const {
    int nd = grading().normalize(d);
    auto it = diff_.find(nd);
    if (it != diff_.end())
        return it->second;
    return Matrix(ring_->field(), under_.dim(nd + 1), under_.dim(nd));
}

CdgModule CdgModule::direct_sum(const CdgModule& other) const {
    GradedModule under = under_.direct_sum(other.under_);
    const Field& f = ring_->field();
    std::map<int, Matrix> diff;
    for (auto& [d, n] : under.dims()) {
        Matrix m(f, under.dim(d + 1), n);
        m.paste(0, 0, this->diff(d));
        m.paste(under_.dim(d + 1), under_.dim(d), other.diff(d));
        if (!m.is_zero())
            diff[d] = std::move(m);
    }
    return CdgModule(ring_, std::move(under), std::move(diff));
}

bool CdgModule::diff_same(const CdgModule& b) const {
    for (auto& [d, n] : under_.dims())
        if (!(diff(d) == b.diff(d)))
            return false;
    return true;
}

bool is_cdg_morphism(const CdgModule& x, const CdgModule& y, const GradedMap& f) {
    const Field& fld = x.ring()->field();
    const GradingGroup& gr = x.grading();
    if (!(*x.ring() == *y.ring()))
        return false;
    auto at = [&](int d) {
        if (const Matrix* m = f.find(gr.normalize(d)))
            return *m;
        return Matrix(fld, y.dim(d), x.dim(d));
    };
    for (auto& [d, m] : f.comp)
        if (m.rows() != y.dim(d) || m.cols() != x.dim(d))
            return false;
    const GradedAlgebra& a = *x.ring()->base();
    for (auto& [d, n] : x.under().dims()) {
        if (!(at(d + 1) * x.diff(d) == y.diff(d) * at(d)))
            return false;
        for (size_t b = 0; b < a.dim(); ++b)
            if (!(at(d + a.degree(b)) * x.under().action(b, d) == y.under().action(b, d) * at(d)))
                return false;
    }
    return true;
}

CdgMorphism identity_morphism(const CdgModule& x) {
    CdgMorphism out;
    for (auto& [d, n] : x.under().dims())
        out.mats.comp[d] = Matrix::identity(x.ring()->field(), n);
    return out;
}

CdgMorphism compose(const CdgModule& x, const CdgModule& y, const CdgModule& z, const CdgMorphism& g,
                    const CdgMorphism& f) {
    CdgMorphism out;
    out.mats = compose_graded(x.under(), y.under(), z.under(), g.mats, 0, f.mats, 0);
    return out;
}

ValidationReport validate_cdg_module(const CdgModule& x) {
    ValidationReport rep;
    const GradedAlgebra& a = *x.ring()->base();
    const GradingGroup& gr = x.grading();
    for (size_t b = 0; b < a.dim(); ++b) {
        int g = a.degree(b);
        int sign = gr.parity(g);
        for (auto& [d, n] : x.under().dims()) {
            Matrix lhs = x.diff(d + g) * x.under().action(b, d);
            Matrix delb = x.under().action_of(x.ring()->diff_of_basis(b), g + 1, d);
            Matrix rhs = sign ? delb - x.under().action(b, d + 1) * x.diff(d)
                              : delb + x.under().action(b, d + 1) * x.diff(d);
            if (!(lhs == rhs))
                rep.violations.push_back("leibniz basis=" + std::to_string(b) + " degree=" + std::to_string(d));
        }
    }
    for (auto& [d, n] : x.under().dims()) {
        if (!(x.diff(d + 1) * x.diff(d) == x.under().action_of(x.ring()->curvature(), 2, d)))
            rep.violations.push_back("curvature degree=" + std::to_string(d));
    }
    return rep;
}

CdgModule suspend(const CdgModule& x, int n) {
    const GradingGroup& gr = x.grading();
    GradedModule under = x.under().suspend(n);
    std::map<int, Matrix> diff;
    bool odd = gr.parity(n) == 1;
    for (auto& [d, k] : under.dims()) {
        Matrix m = x.diff(d + n);
        diff[d] = odd ? m.negated() : m;
    }
    return CdgModule(x.ring(), std::move(under), std::move(diff));
}

GradedModule sharp(const CdgModule& x) { return x.under(); }

CdgModule g_plus(const CdgRingPtr& ring, const GradedModule& z) {
    const Field& f = ring->field();
    const GradingGroup& gr = ring->grading();
    if (!(*z.algebra() == *ring->base()))
        throw ValidationError("g_plus: graded module over the wrong algebra");
    const GradedAlgebra& a = *ring->base();
    std::map<int, size_t> dims;
    std::set<int> degs;
    for (auto& [d, n] : z.dims()) {
        degs.insert(d);
        degs.insert(gr.normalize(d + 1));
    }
    for (int d : degs) {
        size_t n = z.dim(d) + z.dim(d - 1);
        if (n)
            dims[d] = n;
    }
    std::vector<GradedMap> act(a.dim());
    for (size_t b = 0; b < a.dim(); ++b) {
        int g = a.degree(b);
        bool odd = gr.parity(g) == 1;
        for (auto& [d, n] : dims) {
            size_t rows = (dims.count(gr.normalize(d + g)) ? dims.at(gr.normalize(d + g)) : 0);
            if (rows == 0)
                continue;
            Matrix m(f, rows, n);
            Matrix a11 = z.action(b, d);
            Matrix a12 = z.action_of(ring->diff_of_basis(b), g + 1, d - 1);
            Matrix a22 = z.action(b, d - 1);
            m.paste(0, 0, a11);
            m.paste(0, z.dim(d), odd ? a12 : a12.negated());
            m.paste(z.dim(d + g), z.dim(d), odd ? a22.negated() : a22);
            act[b].comp[d] = std::move(m);
        }
    }
    GradedModule under(ring->base(), dims, std::move(act));
    std::map<int, Matrix> diff;
    for (auto& [d, n] : dims) {
        size_t rows = under.dim(d + 1);
        if (rows == 0)
            continue;
        Matrix m(f, rows, n);
        m.paste(0, z.dim(d), z.action_of(ring->curvature(), 2, d - 1));
        m.paste(z.dim(d + 1), 0, Matrix::identity(f, z.dim(d)));
        diff[d] = std::move(m);
    }
    return CdgModule(ring, std::move(under), std::move(diff));
}

CdgModule g_minus(const CdgRingPtr& ring, const GradedModule& z) { return suspend(g_plus(ring, z), 1); }

CdgMorphism g_plus_morphism(const CdgRingPtr& ring, const GradedModule& z, const GradedModule& z2,
                            const GradedMap& psi) {
    const Field& f = ring->field();
    CdgMorphism out;
    auto at = [&](int d) {
        if (const Matrix* m = psi.find(ring->grading().normalize(d)))
            return *m;
        return Matrix(f, z2.dim(d), z.dim(d));
    };
    std::set<int> degs;
    for (auto& [d, n] : z.dims()) {
        degs.insert(d);
        degs.insert(ring->grading().normalize(d + 1));
    }
    for (int d : degs) {
        size_t rows = z2.dim(d) + z2.dim(d - 1), cols = z.dim(d) + z.dim(d - 1);
        if (rows == 0 || cols == 0)
            continue;
        Matrix m(f, rows, cols);
        m.paste(0, 0, at(d));
        m.paste(z2.dim(d), z.dim(d), at(d - 1));
        out.mats.comp[d] = std::move(m);
    }
    return out;
}

CdgMorphism g_minus_morphism(const CdgRingPtr& ring, const GradedModule& z, const GradedModule& z2,
                             const GradedMap& psi) {
    const Field& f = ring->field();
    CdgMorphism out;
    auto at = [&](int d) {
        if (const Matrix* m = psi.find(ring->grading().normalize(d)))
            return *m;
        return Matrix(f, z2.dim(d), z.dim(d));
    };
    std::set<int> degs;
    for (auto& [d, n] : z.dims()) {
        degs.insert(ring->grading().normalize(d - 1));
        degs.insert(d);
    }
    for (int d : degs) {
        size_t rows = z2.dim(d + 1) + z2.dim(d), cols = z.dim(d + 1) + z.dim(d);
        if (rows == 0 || cols == 0)
            continue;
        Matrix m(f, rows, cols);
        m.paste(0, 0, at(d + 1));
        m.paste(z2.dim(d + 1), z.dim(d + 1), at(d));
        out.mats.comp[d] = std::move(m);
    }
    return out;
}

GradedMap gplus_transpose_to_graded(const CdgModule& x, const GradedModule& z, const CdgMorphism& phi) {
    const Field& f = x.ring()->field();
    GradedMap psi;
    for (auto& [d, n] : z.dims()) {
        if (x.dim(d) == 0)
            continue;
        Matrix block(f, x.dim(d), n);
        if (const Matrix* m = phi.mats.find(d))
            block = m->submatrix(0, 0, x.dim(d), n);
        psi.comp[d] = std::move(block);
    }
    return psi;
}

CdgMorphism gplus_transpose_from_graded(const CdgModule& x, const GradedModule& z, const GradedMap& psi) {
    const Field& f = x.ring()->field();
    const GradingGroup& gr = x.grading();
    auto at = [&](int d) {
        if (const Matrix* m = psi.find(gr.normalize(d)))
            return *m;
        return Matrix(f, x.dim(d), z.dim(d));
    };
    CdgMorphism out;
    std::set<int> degs;
    for (auto& [d, n] : z.dims()) {
        degs.insert(d);
        degs.insert(gr.normalize(d + 1));
    }
    for (int d : degs) {
        size_t cols = z.dim(d) + z.dim(d - 1);
        if (cols == 0 || x.dim(d) == 0)
            continue;
        Matrix m(f, x.dim(d), cols);
        m.paste(0, 0, at(d));
        m.paste(0, z.dim(d), x.diff(d - 1) * at(d - 1));
        out.mats.comp[d] = std::move(m);
    }
    return out;
}

GradedMap gminus_transpose_to_graded(const CdgModule& x, const GradedModule& z, const CdgMorphism& phi) {
    const Field& f = x.ring()->field();
    GradedMap psi;
    for (auto& [d, n] : x.under().dims()) {
        if (z.dim(d) == 0)
            continue;
        Matrix block(f, z.dim(d), n);
        if (const Matrix* m = phi.mats.find(d))
            block = m->submatrix(z.dim(d + 1), 0, z.dim(d), n);
        psi.comp[d] = std::move(block);
    }
    return psi;
}

CdgMorphism gminus_transpose_from_graded(const CdgModule& x, const GradedModule& z, const GradedMap& psi) {
    const Field& f = x.ring()->field();
    const GradingGroup& gr = x.grading();
    auto at = [&](int d) {
        if (const Matrix* m = psi.find(gr.normalize(d)))
            return *m;
        return Matrix(f, z.dim(d), x.dim(d));
    };
    CdgMorphism out;
    for (auto& [d, n] : x.under().dims()) {
        size_t rows = z.dim(d + 1) + z.dim(d);
        if (rows == 0)
            continue;
        Matrix m(f, rows, n);
        m.paste(0, 0, (at(d + 1) * x.diff(d)).negated());
        m.paste(z.dim(d + 1), 0, at(d));
        out.mats.comp[d] = std::move(m);
    }
    return out;
}

ConeId cone_id(const CdgModule& x) {
    const Field& f = x.ring()->field();
    CdgModule cone = g_plus(x.ring(), sharp(x));
    CdgMorphism epi;
    GradedMap witness;
    for (auto& [d, n] : cone.under().dims()) {
        Matrix e(f, x.dim(d), n);
        e.paste(0, 0, Matrix::identity(f, x.dim(d)));
        e.paste(0, x.dim(d), x.diff(d - 1));
        epi.mats.comp[d] = std::move(e);
        size_t rows = cone.dim(d - 1);
        if (rows) {
            /* h(x, y) = (y, 0) */
            Matrix h(f, rows, n);
            h.paste(0, x.dim(d), Matrix::identity(f, x.dim(d - 1)));
            witness.comp[d] = std::move(h);
        }
    }
    return {std::move(cone), std::move(epi), std::move(witness)};
}

Matrix VectorComplex::diff(int k) const {
    int nk = grading.normalize(k);
    auto it = d.find(nk);
    if (it != d.end())
        return it->second;
    return Matrix(field, dim(k + 1), dim(k));
}

VectorComplex::Cohomology VectorComplex::cohomology(int k) const {
    Matrix dk = diff(k);
    Matrix dprev = diff(k - 1);
    if (!(dk * dprev).is_zero())
        throw ValidationError("cohomology: d^2 != 0");
    Matrix ker = dk.kernel_basis();
    Matrix im = dprev.column_space_basis();
    Matrix reps = quotient_representatives(im, ker);
    return {reps.cols(), reps};
}

DgHom dg_hom(const CdgModule& x, const CdgModule& y) {
    if (!(*x.ring() == *y.ring()))
        throw ValidationError("dg_hom: modules over different cdg rings");
    const Field& f = x.ring()->field();
    const GradingGroup& gr = x.grading();
    DgHom out;
    out.complex.field = f;
    out.complex.grading = gr;
    std::vector<int> twists;
    if (gr.kind == GradingGroup::Kind::Z2)
        twists = {0, 1};
    else {
        if (x.is_zero() || y.is_zero())
            return out;
        int lo = y.under().min_degree() - x.under().max_degree();
        int hi = y.under().max_degree() - x.under().min_degree();
        for (int k = lo; k <= hi; ++k)
            twists.push_back(k);
    }
    for (int k : twists) {
        auto basis = graded_hom_basis(x.under(), y.under(), k);
        if (!basis.empty()) {
            out.complex.dims[k] = basis.size();
            out.bases[k] = std::move(basis);
        }
    }
    /* differential: f |-> del_Y f - (-1)^{|k|} f del_X */
    for (auto& [k, basis] : out.bases) {
        size_t target = out.complex.dim(k + 1);
        Matrix dk(f, target, basis.size());
        auto shapes_next = graded_hom_shapes(x.under(), y.under(), gr.kind == GradingGroup::Kind::Z2
                                                                       ? gr.normalize(k + 1)
                                                                       : k + 1);
        Matrix next_basis_flat(f, 0, 0);
        bool have_next = out.bases.count(gr.normalize(k + 1)) > 0;
        if (have_next) {
            const auto& nb = out.bases.at(gr.normalize(k + 1));
            next_basis_flat = Matrix(f, flatten_graded_map(nb[0], shapes_next, f).rows(), nb.size());
            for (size_t j = 0; j < nb.size(); ++j)
                next_basis_flat.paste(0, j, flatten_graded_map(nb[j], shapes_next, f));
        }
        bool odd = gr.parity(k) == 1;
        for (size_t j = 0; j < basis.size(); ++j) {
            GradedMap img;
            for (auto& [d, n] : x.under().dims()) {
                size_t rows = y.dim(d + k + 1);
                if (rows == 0)
                    continue;
                Matrix comp(f, rows, n);
                if (const Matrix* m = basis[j].find(d))
                    comp = y.diff(d + k) * (*m);
                if (const Matrix* m = basis[j].find(gr.normalize(d + 1))) {
                    Matrix t = (*m) * x.diff(d);
                    comp = odd ? comp + t : comp - t;
                }
                img.comp[d] = std::move(comp);
            }
            Matrix flat = flatten_graded_map(img, shapes_next, f);
            if (!have_next) {
                if (!flat.is_zero())
                    throw ValidationError("dg_hom: differential image misses the next component");
                continue;
            }
            auto coords = next_basis_flat.solve(flat);
            if (!coords)
                throw ValidationError("dg_hom: differential image is not in the hom space");
            for (size_t i = 0; i < target; ++i)
                dk.at(i, j) = coords->at(i, 0);
        }
        out.complex.d[k] = std::move(dk);
    }
    return out;
}

HomotopyClasses homotopy_classes(const CdgModule& x, const CdgModule& y, int k) {
    DgHom dh = dg_hom(x, y);
    int nk = x.grading().normalize(k);
    HomotopyClasses out{0, {}};
    if (dh.complex.dim(nk) == 0)
        return out;
    auto coh = dh.complex.cohomology(nk);
    out.dim = coh.dim;
    const auto& basis = dh.bases.at(nk);
    const Field& f = x.ring()->field();
    for (size_t j = 0; j < coh.reps.cols(); ++j) {
        GradedMap rep;
        for (auto& [d, n] : x.under().dims()) {
            size_t rows = y.dim(d + nk);
            if (rows == 0)
                continue;
            Matrix comp(f, rows, n);
            for (size_t i = 0; i < basis.size(); ++i)
                if (const Matrix* m = basis[i].find(d))
                    comp = comp + m->scaled(coh.reps.at(i, j));
            rep.comp[d] = std::move(comp);
        }
        out.representatives.push_back(std::move(rep));
    }
    return out;
}

Contractibility is_contractible(const CdgModule& x) {
    const Field& f = x.ring()->field();
    const GradingGroup& gr = x.grading();
    if (x.is_zero())
        return {true, {}};
    MatrixEquations sys(f);
    std::map<int, int> var;
    for (auto& [d, n] : x.under().dims())
        if (x.dim(d - 1))
            var[d] = sys.add_unknown(x.dim(d - 1), n);
    const GradedAlgebra& a = *x.ring()->base();
    /* twisted linearity: h(bx) = (-1)^{|b|} b h(x) */
    for (size_t b : a.generators()) {
        int g = a.degree(b);
        Scalar sign = gr.parity(g) ? f.neg(f.one()) : f.one();
        for (auto& [d, n] : x.under().dims()) {
            size_t rows = x.dim(d + g - 1);
            if (rows == 0)
                continue;
            int eq = sys.add_equation(rows, n);
            if (var.count(gr.normalize(d + g)))
                sys.add_right_term(eq, var[gr.normalize(d + g)], x.under().action(b, d), f.one());
            if (var.count(gr.normalize(d)))
                sys.add_left_term(eq, var[gr.normalize(d)], x.under().action(b, d - 1), f.neg(sign));
        }
    }
    /* del h + h del = id */
    for (auto& [d, n] : x.under().dims()) {
        int eq = sys.add_equation(n, n);
        if (var.count(d))
            sys.add_left_term(eq, var[d], x.diff(d - 1), f.one());
        if (var.count(gr.normalize(d + 1)))
            sys.add_right_term(eq, var[gr.normalize(d + 1)], x.diff(d), f.one());
        sys.add_rhs(eq, Matrix::identity(f, n));
    }
    auto sol = sys.solve();
    if (!sol.solvable)
        return {false, {}};
    Contractibility out{true, {}};
    for (auto& [d, v] : var)
        out.witness.comp[d] = sol.particular[v];
    return out;
}

bool is_cdg_projective(const CdgModule& x) {
    return graded_projective(sharp(x)) && is_contractible(x).contractible;
}

bool is_cdg_injective(const CdgModule& x) {
    return graded_injective(sharp(x)) && is_contractible(x).contractible;
}

std::map<int, size_t> module_cohomology_dims(const CdgModule& x) {
    std::map<int, size_t> out;
    if (x.is_zero())
        return out;
    VectorComplex c{x.ring()->field(), x.grading(), x.under().dims(), {}};
    for (auto& [d, n] : x.under().dims())
        c.d[d] = x.diff(d);
    if (x.grading().kind == GradingGroup::Kind::Z2) {
        for (int k : {0, 1})
            out[k] = c.cohomology(k).dim;
        return out;
    }
    for (int k = x.under().min_degree(); k <= x.under().max_degree(); ++k)
        out[k] = c.cohomology(k).dim;
    return out;
}

std::vector<GradedMap> cdg_morphism_space(const CdgModule& x, const CdgModule& y) {
    const Field& f = x.ring()->field();
    const GradingGroup& gr = x.grading();
    auto shapes = graded_hom_shapes(x.under(), y.under(), 0);
    if (shapes.empty())
        return {};
    MatrixEquations sys(f);
    std::map<int, int> var;
    for (auto& [d, sh] : shapes)
        var[d] = sys.add_unknown(sh.first, sh.second);
    const GradedAlgebra& a = *x.ring()->base();
    for (size_t b : a.generators()) {
        int g = a.degree(b);
        for (auto& [d, n] : x.under().dims()) {
            size_t rows = y.dim(d + g);
            if (rows == 0)
                continue;
            int eq = sys.add_equation(rows, n);
            if (var.count(gr.normalize(d + g)))
                sys.add_right_term(eq, var[gr.normalize(d + g)], x.under().action(b, d), f.one());
            if (var.count(gr.normalize(d)))
                sys.add_left_term(eq, var[gr.normalize(d)], y.under().action(b, d), f.neg(f.one()));
        }
    }
    for (auto& [d, n] : x.under().dims()) {
        size_t rows = y.dim(d + 1);
        if (rows == 0)
            continue;
        int eq = sys.add_equation(rows, n);
        if (var.count(gr.normalize(d + 1)))
            sys.add_right_term(eq, var[gr.normalize(d + 1)], x.diff(d), f.one());
        if (var.count(gr.normalize(d)))
            sys.add_left_term(eq, var[gr.normalize(d)], y.diff(d), f.neg(f.one()));
    }
    auto sol = sys.solve();
    std::vector<GradedMap> out;
    for (auto& k : sol.kernel) {
        GradedMap m;
        size_t i = 0;
        for (auto& [d, v] : var)
            m.comp[d] = k[i++];
        out.push_back(std::move(m));
    }
    return out;
}

CdgIsoResult find_cdg_isomorphism(const CdgModule& x, const CdgModule& y, Rng& rng,
                                  unsigned long long exhaustive_limit, size_t samples) {
    const Field& f = x.ring()->field();
    for (auto& [d, n] : x.under().dims())
        if (y.dim(d) != n)
            return {IsoVerdict::No, std::nullopt};
    for (auto& [d, n] : y.under().dims())
        if (x.dim(d) != n)
            return {IsoVerdict::No, std::nullopt};
    if (x.is_zero())
        return {IsoVerdict::Yes, GradedMap{}};
    auto basis = cdg_morphism_space(x, y);
    std::optional<GradedMap> witness;
    auto attempt = [&](const std::vector<Scalar>& coeffs) {
        GradedMap cand;
        for (auto& [d, n] : x.under().dims()) {
            Matrix comp(f, y.dim(d), n);
            for (size_t i = 0; i < basis.size(); ++i)
                if (const Matrix* m = basis[i].find(d))
                    comp = comp + m->scaled(coeffs[i]);
            cand.comp[d] = std::move(comp);
        }
        for (auto& [d, m] : cand.comp)
            if (m.rank() != m.rows())
                return false;
        witness = cand;
        return true;
    };
    IsoVerdict v = search_invertible(f, basis.size(), attempt, rng, exhaustive_limit, samples);
    return {v, witness};
}

}  // namespace cdgforge
