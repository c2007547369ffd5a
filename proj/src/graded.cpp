#include "cdgforge/graded.hpp"

#include "cdgforge/mateq.hpp"

namespace cdgforge {

namespace {

std::vector<Scalar> zero_vec(const Field& f, size_t n) { return std::vector<Scalar>(n, f.zero()); }

std::vector<Scalar> basis_vec(const Field& f, size_t n, size_t i) {
    auto v = zero_vec(f, n);
    v[i] = f.one();
    return v;
}

}  // namespace

GradedAlgebra::GradedAlgebra(Field field, GradingGroup grading, std::vector<int> degree,
                             std::vector<std::vector<std::vector<Scalar>>> mult, std::vector<Scalar> unit)
    : field_(field), grading_(grading), dim_(degree.size()), degree_(std::move(degree)), mult_(std::move(mult)),
      unit_(std::move(unit)) {
    for (int& d : degree_)
        d = grading_.normalize(d);
    if (mult_.size() != dim_ || unit_.size() != dim_)
        throw ValidationError("graded algebra structure data has wrong shape");
    /* unit concentrated in degree 0 */
    for (size_t i = 0; i < dim_; ++i)
        if (!field_.is_zero(unit_[i]) && degree_[i] != grading_.normalize(0))
            throw ValidationError("graded algebra unit is not of degree 0");
    /* multiplication adds degrees */
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) {
            if (mult_[i][j].size() != dim_)
                throw ValidationError("graded algebra structure data has wrong shape");
            for (size_t k = 0; k < dim_; ++k)
                if (!field_.is_zero(mult_[i][j][k]) &&
                    degree_[k] != grading_.normalize(degree_[i] + degree_[j]))
                    throw ValidationError("graded algebra multiplication does not add degrees");
        }
    /* unit laws and associativity */
    for (size_t i = 0; i < dim_; ++i) {
        auto ei = basis_vec(field_, dim_, i);
        if (multiply(unit_, ei) != ei || multiply(ei, unit_) != ei)
            throw ValidationError("graded algebra unit law fails");
    }
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j)
            for (size_t k = 0; k < dim_; ++k) {
                auto ei = basis_vec(field_, dim_, i);
                auto ek = basis_vec(field_, dim_, k);
                if (multiply(mult_[i][j], ek) != multiply(ei, mult_[j][k]))
                    throw ValidationError("graded algebra associativity fails");
            }
    /* greedy generating set */
    Matrix span(field_, dim_, 1);
    for (size_t i = 0; i < dim_; ++i)
        span.at(i, 0) = unit_[i];
    span = span.column_space_basis();
    auto mult_matrix = [&](size_t b) {
        Matrix m(field_, dim_, dim_);
        for (size_t j = 0; j < dim_; ++j)
            for (size_t k = 0; k < dim_; ++k)
                m.at(k, j) = mult_[b][j][k];
        return m;
    };
    for (size_t i = 0; i < dim_ && span.cols() < dim_; ++i) {
        Matrix cand(field_, dim_, 1);
        cand.at(i, 0) = field_.one();
        if (span.hstack(cand).rank() == span.cols())
            continue;
        generators_.push_back(i);
        span = span.hstack(cand).column_space_basis();
        bool grew = true;
        while (grew && span.cols() < dim_) {
            grew = false;
            Matrix bigger = span;
            for (size_t g : generators_)
                bigger = bigger.hstack(mult_matrix(g) * span);
            bigger = bigger.column_space_basis();
            if (bigger.cols() > span.cols()) {
                span = bigger;
                grew = true;
            }
        }
    }
    if (span.cols() != dim_)
        throw ValidationError("graded algebra generator closure failed");
}

std::vector<Scalar> GradedAlgebra::multiply(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
    auto out = zero_vec(field_, dim_);
    for (size_t i = 0; i < dim_; ++i) {
        if (field_.is_zero(a[i]))
            continue;
        for (size_t j = 0; j < dim_; ++j) {
            if (field_.is_zero(b[j]))
                continue;
            Scalar c = field_.mul(a[i], b[j]);
            for (size_t k = 0; k < dim_; ++k)
                out[k] = field_.add(out[k], field_.mul(c, mult_[i][j][k]));
        }
    }
    return out;
}

std::vector<size_t> GradedAlgebra::component(int d) const {
    std::vector<size_t> out;
    int nd = grading_.normalize(d);
    for (size_t i = 0; i < dim_; ++i)
        if (degree_[i] == nd)
            out.push_back(i);
    return out;
}

std::shared_ptr<const FinAlgebra> GradedAlgebra::degree_zero_part(std::vector<size_t>* index_map) const {
    std::vector<size_t> idx = component(0);
    size_t n = idx.size();
    std::vector<std::vector<std::vector<Scalar>>> mult(
        n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, field_.zero())));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c)
                mult[a][b][c] = mult_[idx[a]][idx[b]][idx[c]];
    std::vector<Scalar> unit(n, field_.zero());
    for (size_t a = 0; a < n; ++a)
        unit[a] = unit_[idx[a]];
    if (index_map)
        *index_map = idx;
    return std::make_shared<FinAlgebra>(field_, n, std::move(mult), std::move(unit));
}

GradedModule::GradedModule(GradedAlgebraPtr algebra, std::map<int, size_t> dims, std::vector<GradedMap> act_in)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), action_(std::move(act_in)) {
    const Field& f = algebra_->field();
    const GradingGroup& gr = algebra_->grading();
    /* normalize keys, drop zero components */
    std::map<int, size_t> nd;
    for (auto& [d, n] : dims_) {
        if (n == 0)
            continue;
        int k = gr.normalize(d);
        if (nd.count(k))
            throw ValidationError("graded module: duplicate degree after normalization");
        nd[k] = n;
    }
    dims_ = std::move(nd);
    if (action_.size() != algebra_->dim())
        throw ValidationError("graded module: one action family per basis element required");
    /* unit acts as identity */
    for (auto& [d, n] : dims_) {
        Matrix u(f, n, n);
        for (size_t b = 0; b < algebra_->dim(); ++b)
            if (!f.is_zero(algebra_->unit()[b]) && algebra_->degree(b) == gr.normalize(0))
                u = u + action(b, d).scaled(algebra_->unit()[b]);
        if (!u.is_identity())
            throw ValidationError("graded module: unit does not act as identity in degree " + std::to_string(d));
    }
    /* structure constants */
    for (size_t i = 0; i < algebra_->dim(); ++i)
        for (size_t j = 0; j < algebra_->dim(); ++j)
            for (auto& [d, n] : dims_) {
                int dj = gr.normalize(d + algebra_->degree(j));
                int dij = gr.normalize(d + algebra_->degree(i) + algebra_->degree(j));
                Matrix lhs = action(i, dj) * action(j, d);
                Matrix rhs(f, dim(dij), n);
                const auto& c = algebra_->basis_product(i, j);
                for (size_t k = 0; k < algebra_->dim(); ++k)
                    if (!f.is_zero(c[k]))
                        rhs = rhs + action(k, d).scaled(c[k]);
                if (!(lhs == rhs))
                    throw ValidationError("graded module action violates structure constants");
            }
}

GradedModule GradedModule::zero(GradedAlgebraPtr algebra) {
    std::vector<GradedMap> act(algebra->dim());
    return GradedModule(std::move(algebra), {}, std::move(act));
}

GradedModule GradedModule::free_module(GradedAlgebraPtr algebra, int shift) {
    const Field& f = algebra->field();
    const GradingGroup& gr = algebra->grading();
    /* collect the algebra's own degrees */
    std::map<int, std::vector<size_t>> comp;
    for (size_t i = 0; i < algebra->dim(); ++i)
        comp[algebra->degree(i)].push_back(i);
    std::map<int, size_t> dims;
    for (auto& [d, idx] : comp)
        dims[gr.normalize(d + shift)] = idx.size();
    std::vector<GradedMap> act(algebra->dim());
    for (size_t b = 0; b < algebra->dim(); ++b) {
        int g = algebra->degree(b);
        for (auto& [d, idx] : comp) {
            int dt = gr.normalize(d + g);
            if (!comp.count(dt))
                continue;
            const auto& tgt = comp[dt];
            Matrix m(f, tgt.size(), idx.size());
            for (size_t j = 0; j < idx.size(); ++j) {
                const auto& prod = algebra->basis_product(b, idx[j]);
                for (size_t i = 0; i < tgt.size(); ++i)
                    m.at(i, j) = prod[tgt[i]];
            }
            act[b].comp[gr.normalize(d + shift)] = std::move(m);
        }
    }
    return GradedModule(std::move(algebra), std::move(dims), std::move(act));
}

size_t GradedModule::total_dim() const {
    size_t n = 0;
    for (auto& [d, k] : dims_)
        n += k;
    return n;
}

int GradedModule::min_degree() const {
    if (dims_.empty())
        throw ValidationError("zero module has no support");
    return dims_.begin()->first;
}

int GradedModule::max_degree() const {
    if (dims_.empty())
        throw ValidationError("zero module has no support");
    return dims_.rbegin()->first;
}

Matrix GradedModule::action(size_t b, int d) const {
    const GradingGroup& gr = grading();
    int src = gr.normalize(d), dst = gr.normalize(d + algebra_->degree(b));
    if (const Matrix* m = action_[b].find(src)) {
        if (m->rows() != dim(dst) || m->cols() != dim(src))
            throw ValidationError("graded module action matrix has wrong shape");
        return *m;
    }
    return Matrix(algebra_->field(), dim(dst), dim(src));
}

Matrix GradedModule::action_of(const std::vector<Scalar>& coords, int g, int d) const {
    const Field& f = algebra_->field();
    const GradingGroup& gr = grading();
    Matrix out(f, dim(gr.normalize(d + g)), dim(d));
    for (size_t b = 0; b < algebra_->dim(); ++b) {
        if (f.is_zero(coords[b]))
            continue;
        if (algebra_->degree(b) != gr.normalize(g))
            throw ValidationError("action_of: element is not homogeneous of the stated degree");
        out = out + action(b, d).scaled(coords[b]);
    }
    return out;
}

GradedModule GradedModule::direct_sum(const GradedModule& other) const {
    const Field& f = algebra_->field();
    std::map<int, size_t> dims;
    for (auto& [d, n] : dims_)
        dims[d] += n;
    for (auto& [d, n] : other.dims_)
        dims[d] += n;
    std::vector<GradedMap> act(algebra_->dim());
    for (size_t b = 0; b < algebra_->dim(); ++b) {
        int g = algebra_->degree(b);
        for (auto& [d, n] : dims) {
            int dt = grading().normalize(d + g);
            size_t rows = (dims.count(dt) ? dims.at(dt) : 0);
            if (rows == 0)
                continue;
            Matrix m(f, rows, n);
            m.paste(0, 0, action(b, d));
            m.paste(dim(dt), dim(d), other.action(b, d));
            act[b].comp[d] = std::move(m);
        }
    }
    return GradedModule(algebra_, std::move(dims), std::move(act));
}

GradedModule GradedModule::suspend(int n) const {
    const GradingGroup& gr = grading();
    std::map<int, size_t> dims;
    for (auto& [d, k] : dims_)
        dims[gr.normalize(d - n)] = k;
    std::vector<GradedMap> act(algebra_->dim());
    for (size_t b = 0; b < algebra_->dim(); ++b) {
        int sign = (gr.parity(algebra_->degree(b)) * gr.parity(n)) % 2;
        for (auto& [d, k] : dims) {
            Matrix m = action(b, d + n);
            if (m.rows() == 0 || m.cols() == 0)
                continue;
            act[b].comp[d] = sign ? m.negated() : m;
        }
    }
    return GradedModule(algebra_, std::move(dims), std::move(act));
}

GradedModule GradedModule::dual(GradedAlgebraPtr opposite) const {
    const GradingGroup& gr = grading();
    std::map<int, size_t> dims;
    for (auto& [d, k] : dims_)
        dims[gr.kind == GradingGroup::Kind::Z2 ? gr.normalize(-d) : -d] = k;
    std::vector<GradedMap> act(algebra_->dim());
    for (size_t b = 0; b < algebra_->dim(); ++b) {
        int g = algebra_->degree(b);
        for (auto& [d, k] : dims) {
            Matrix m = action(b, -d - g); /* X^{-d-g} -> X^{-d} */
            if (m.rows() == 0 || m.cols() == 0)
                continue;
            act[b].comp[d] = m.transposed();
        }
    }
    return GradedModule(std::move(opposite), std::move(dims), std::move(act));
}

bool GradedModule::action_same(const GradedModule& b) const {
    for (size_t i = 0; i < algebra_->dim(); ++i)
        for (auto& [d, n] : dims_)
            if (!(action(i, d) == b.action(i, d)))
                return false;
    return true;
}

GradedAlgebraPtr graded_opposite(const GradedAlgebraPtr& a) {
    std::vector<std::vector<std::vector<Scalar>>> mult(a->dim(),
                                                       std::vector<std::vector<Scalar>>(a->dim()));
    for (size_t i = 0; i < a->dim(); ++i)
        for (size_t j = 0; j < a->dim(); ++j)
            mult[i][j] = a->basis_product(j, i);
    std::vector<int> degree;
    for (size_t i = 0; i < a->dim(); ++i)
        degree.push_back(a->degree(i));
    return std::make_shared<GradedAlgebra>(a->field(), a->grading(), std::move(degree), std::move(mult),
                                           a->unit());
}

std::vector<std::pair<int, std::pair<size_t, size_t>>> graded_hom_shapes(const GradedModule& x,
                                                                         const GradedModule& y, int twist) {
    std::vector<std::pair<int, std::pair<size_t, size_t>>> shapes;
    for (auto& [d, n] : x.dims()) {
        size_t rows = y.dim(d + twist);
        if (rows)
            shapes.push_back({d, {rows, n}});
    }
    return shapes;
}

std::vector<GradedMap> graded_hom_basis(const GradedModule& x, const GradedModule& y, int twist) {
    const Field& f = x.algebra()->field();
    const GradingGroup& gr = x.grading();
    if (!(*x.algebra() == *y.algebra()))
        throw ValidationError("graded hom: modules over different graded algebras");
    auto shapes = graded_hom_shapes(x, y, twist);
    if (shapes.empty())
        return {};
    MatrixEquations sys(f);
    std::map<int, int> var;
    for (auto& [d, sh] : shapes)
        var[d] = sys.add_unknown(sh.first, sh.second);
    int tpar = gr.parity(twist);
    for (size_t b : x.algebra()->generators()) {
        int g = x.algebra()->degree(b);
        Scalar sign = (gr.parity(g) * tpar) % 2 ? f.neg(f.one()) : f.one();
        for (auto& [d, n] : x.dims()) {
            int dg = gr.normalize(d + g);
            size_t rows = y.dim(dg + twist);
            if (rows == 0)
                continue;
            int eq = sys.add_equation(rows, n);
            /* f_{d+g} . act_X(b)_d  =  sign . act_Y(b)_{d+k} . f_d */
            if (var.count(dg))
                sys.add_right_term(eq, var[dg], x.action(b, d), f.one());
            if (var.count(d))
                sys.add_left_term(eq, var[d], y.action(b, d + twist), f.neg(sign));
        }
    }
    auto sol = sys.solve();
    std::vector<GradedMap> out;
    for (auto& k : sol.kernel) {
        GradedMap m;
        size_t i = 0;
        for (auto& [d, sh] : shapes)
            m.comp[d] = k[i++];
        out.push_back(std::move(m));
    }
    return out;
}

Matrix flatten_graded_map(const GradedMap& f, const std::vector<std::pair<int, std::pair<size_t, size_t>>>& shapes,
                          const Field& field) {
    Matrix v(field, 0, 1);
    for (auto& [d, sh] : shapes) {
        const Matrix* m = f.find(d);
        Matrix block = m ? m->vec() : Matrix(field, sh.first * sh.second, 1);
        v = v.vstack(block);
    }
    return v;
}

GradedMap unflatten_graded_map(const Matrix& v, const std::vector<std::pair<int, std::pair<size_t, size_t>>>& shapes,
                               const Field& field) {
    GradedMap f;
    size_t off = 0;
    for (auto& [d, sh] : shapes) {
        f.comp[d] = Matrix::unvec(v.submatrix(off, 0, sh.first * sh.second, 1), field, sh.first, sh.second);
        off += sh.first * sh.second;
    }
    return f;
}

GradedMap compose_graded(const GradedModule& x, const GradedModule& y, const GradedModule& z, const GradedMap& g,
                         int deg_g, const GradedMap& f, int deg_f) {
    const Field& fld = x.algebra()->field();
    const GradingGroup& gr = x.grading();
    GradedMap out;
    for (auto& [d, n] : x.dims()) {
        size_t rows = z.dim(d + deg_f + deg_g);
        if (rows == 0)
            continue;
        Matrix gf(fld, rows, n);
        const Matrix* fm = f.find(gr.normalize(d));
        const Matrix* gm = g.find(gr.normalize(d + deg_f));
        if (fm && gm && y.dim(d + deg_f) != 0)
            gf = (*gm) * (*fm);
        out.comp[d] = std::move(gf);
    }
    return out;
}

namespace {

/* The graded radical: all positive/negative-degree components plus the
 * radical of the degree-zero part. Returns homogeneous elements as
 * (degree, coords within that degree's component index list). */
struct GradedRadical {
    bool semisimple = false;
    /* element list: degree plus full coordinate vector in the algebra basis */
    std::vector<std::pair<int, std::vector<Scalar>>> elements;
};

GradedRadical graded_radical(const GradedAlgebraPtr& a) {
    const Field& f = a->field();
    GradedRadical out;
    std::vector<size_t> zero_idx;
    auto a0 = a->degree_zero_part(&zero_idx);
    const Matrix& rad0 = a0->radical();
    for (size_t j = 0; j < rad0.cols(); ++j) {
        std::vector<Scalar> full(a->dim(), f.zero());
        for (size_t i = 0; i < zero_idx.size(); ++i)
            full[zero_idx[i]] = rad0.at(i, j);
        out.elements.push_back({0, std::move(full)});
    }
    for (size_t b = 0; b < a->dim(); ++b) {
        if (a->degree(b) == a->grading().normalize(0))
            continue;
        std::vector<Scalar> full(a->dim(), f.zero());
        full[b] = f.one();
        out.elements.push_back({a->degree(b), std::move(full)});
    }
    if (out.elements.empty()) {
        out.semisimple = true;
        return out;
    }
    /* validate: two-sided ideal and nilpotent */
    Matrix span(f, a->dim(), 0);
    for (auto& [g, v] : out.elements) {
        Matrix c(f, a->dim(), 1);
        for (size_t i = 0; i < a->dim(); ++i)
            c.at(i, 0) = v[i];
        span = span.hstack(c);
    }
    span = span.column_space_basis();
    auto col_vec = [&](const Matrix& m, size_t j) {
        std::vector<Scalar> v(a->dim());
        for (size_t i = 0; i < a->dim(); ++i)
            v[i] = m.at(i, j);
        return v;
    };
    for (size_t b = 0; b < a->dim(); ++b) {
        auto eb = basis_vec(f, a->dim(), b);
        for (size_t j = 0; j < span.cols(); ++j) {
            auto v = col_vec(span, j);
            for (auto prod : {a->multiply(eb, v), a->multiply(v, eb)}) {
                Matrix c(f, a->dim(), 1);
                for (size_t i = 0; i < a->dim(); ++i)
                    c.at(i, 0) = prod[i];
                if (span.hstack(c).rank() != span.cols())
                    throw ValidationError("graded radical candidate is not an ideal");
            }
        }
    }
    Matrix power = span;
    for (size_t iter = 0; iter <= a->dim(); ++iter) {
        if (power.cols() == 0)
            break;
        if (iter == a->dim())
            throw ValidationError("graded radical candidate is not nilpotent");
        Matrix next(f, a->dim(), 0);
        for (size_t i = 0; i < span.cols(); ++i)
            for (size_t j = 0; j < power.cols(); ++j) {
                auto prod = a->multiply(col_vec(span, i), col_vec(power, j));
                Matrix c(f, a->dim(), 1);
                for (size_t k = 0; k < a->dim(); ++k)
                    c.at(k, 0) = prod[k];
                next = next.hstack(c);
            }
        power = next.column_space_basis();
    }
    if (a->dim() - span.cols() != 1)
        throw ValidationError("graded cover: algebra is not split graded-local");
    return out;
}

}  // namespace

GradedCover graded_projective_cover(const GradedModule& x) {
    const Field& f = x.algebra()->field();
    const GradingGroup& gr = x.grading();
    GradedRadical rad = graded_radical(x.algebra());
    GradedCover out{GradedModule::zero(x.algebra()), {}, {}};
    if (x.is_zero())
        return out;
    if (rad.semisimple) {
        out.p = x;
        for (auto& [d, n] : x.dims())
            out.epi.comp[d] = Matrix::identity(f, n);
        return out;
    }
    /* graded top, degreewise */
    std::map<int, Matrix> tops;
    for (auto& [d, n] : x.dims()) {
        Matrix jx(f, n, 0);
        for (auto& [g, coords] : rad.elements) {
            Matrix m = x.action_of(coords, g, d - g);
            if (m.cols())
                jx = jx.hstack(m);
        }
        Matrix reps = quotient_representatives(jx.column_space_basis(), Matrix::identity(f, n));
        if (reps.cols())
            tops[d] = reps;
    }
    /* cover: one shifted free module per top basis vector */
    GradedModule cover = GradedModule::zero(x.algebra());
    struct Gen {
        int degree;
        Matrix vec; /* column in X^degree */
    };
    std::vector<Gen> gens;
    for (auto& [d, reps] : tops)
        for (size_t j = 0; j < reps.cols(); ++j) {
            cover = cover.direct_sum(GradedModule::free_module(x.algebra(), d));
            gens.push_back({d, reps.submatrix(0, j, reps.rows(), 1)});
        }
    /* epi per degree: summand s contributes columns e_c |-> act(e_c) gen_s */
    std::map<int, std::vector<size_t>> acomp;
    for (size_t i = 0; i < x.algebra()->dim(); ++i)
        acomp[x.algebra()->degree(i)].push_back(i);
    GradedMap epi;
    for (auto& [e, n] : cover.dims())
        epi.comp[e] = Matrix(f, x.dim(e), n);
    std::map<int, size_t> offset;
    for (const Gen& gen : gens) {
        for (auto& [gdeg, idx] : acomp) {
            int e = gr.normalize(gdeg + gen.degree);
            if (x.dim(e) == 0 && cover.dim(e) == 0)
                continue;
            for (size_t j = 0; j < idx.size(); ++j) {
                std::vector<Scalar> coords(x.algebra()->dim(), f.zero());
                coords[idx[j]] = f.one();
                Matrix img = x.action_of(coords, gdeg, gen.degree) * gen.vec;
                for (size_t r = 0; r < img.rows(); ++r)
                    epi.comp[e].at(r, offset[e] + j) = img.at(r, 0);
            }
            offset[e] += idx.size();
        }
    }
    for (auto& [e, n] : x.dims())
        if (!epi.comp.count(e) || epi.comp[e].rank() != n)
            throw ValidationError("graded projective cover: lifted top does not generate");
    for (auto& [e, n] : cover.dims()) {
        size_t k = n - epi.comp[e].rank();
        if (k)
            out.kernel_dims[e] = k;
    }
    out.p = std::move(cover);
    out.epi = std::move(epi);
    return out;
}

bool graded_projective(const GradedModule& x) { return graded_projective_cover(x).kernel_dims.empty(); }

bool graded_injective(const GradedModule& x) {
    return graded_projective(x.dual(graded_opposite(x.algebra())));
}

}  // namespace cdgforge
