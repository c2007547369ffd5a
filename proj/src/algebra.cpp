#include "cdgforge/algebra.hpp"

#include <algorithm>

namespace cdgforge {

namespace {

std::vector<Scalar> zero_vec(const Field& f, size_t n) { return std::vector<Scalar>(n, f.zero()); }

Matrix columns_to_matrix(const Field& f, const std::vector<std::vector<Scalar>>& cols, size_t dim) {
    Matrix m(f, dim, cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < dim; ++i)
            m.at(i, j) = cols[j][i];
    return m;
}

}  // namespace

FinAlgebra::FinAlgebra(Field field, size_t dim, std::vector<std::vector<std::vector<Scalar>>> mult,
                       std::vector<Scalar> unit)
    : field_(field), dim_(dim), mult_(std::move(mult)), unit_(std::move(unit)) {
    if (dim_ == 0)
        throw ValidationError("algebra must have positive dimension");
    if (mult_.size() != dim_ || unit_.size() != dim_)
        throw ValidationError("algebra structure data has wrong shape");
    for (const auto& row : mult_) {
        if (row.size() != dim_)
            throw ValidationError("algebra structure data has wrong shape");
        for (const auto& c : row)
            if (c.size() != dim_)
                throw ValidationError("algebra structure data has wrong shape");
    }
    /* unit laws */
    for (size_t i = 0; i < dim_; ++i) {
        std::vector<Scalar> ei = zero_vec(field_, dim_);
        ei[i] = field_.one();
        if (multiply(unit_, ei) != ei || multiply(ei, unit_) != ei)
            throw ValidationError("unit law fails on basis element " + std::to_string(i));
    }
    /* associativity on basis triples */
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) {
            if (mult_[i][j] != mult_[j][i])
                commutative_ = false;
            for (size_t k = 0; k < dim_; ++k) {
                std::vector<Scalar> ek = zero_vec(field_, dim_);
                ek[k] = field_.one();
                std::vector<Scalar> ej = zero_vec(field_, dim_);
                ej[j] = field_.one();
                std::vector<Scalar> ei = zero_vec(field_, dim_);
                ei[i] = field_.one();
                if (multiply(mult_[i][j], ek) != multiply(ei, mult_[j][k]))
                    throw ValidationError("associativity fails at triple (" + std::to_string(i) + "," +
                                          std::to_string(j) + "," + std::to_string(k) + ")");
            }
        }
    compute_generators();
}

std::shared_ptr<const FinAlgebra> FinAlgebra::truncated_polynomial(Field field, size_t n) {
    std::vector<std::vector<std::vector<Scalar>>> mult(
        n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, field.zero())));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i + j < n)
                mult[i][j][i + j] = field.one();
    std::vector<Scalar> unit(n, field.zero());
    unit[0] = field.one();
    return std::make_shared<FinAlgebra>(field, n, std::move(mult), std::move(unit));
}

std::shared_ptr<const FinAlgebra> FinAlgebra::base_field(Field field) { return truncated_polynomial(field, 1); }

std::vector<Scalar> FinAlgebra::multiply(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
    std::vector<Scalar> out = zero_vec(field_, dim_);
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

Matrix FinAlgebra::left_mult(const std::vector<Scalar>& a) const {
    Matrix m(field_, dim_, dim_);
    for (size_t j = 0; j < dim_; ++j) {
        std::vector<Scalar> ej = zero_vec(field_, dim_);
        ej[j] = field_.one();
        std::vector<Scalar> col = multiply(a, ej);
        for (size_t i = 0; i < dim_; ++i)
            m.at(i, j) = col[i];
    }
    return m;
}

void FinAlgebra::compute_generators() {
    /* greedy: grow the span of words in {1, chosen basis elements} */
    Matrix span = columns_to_matrix(field_, {unit_}, dim_).column_space_basis();
    for (size_t i = 0; i < dim_ && span.cols() < dim_; ++i) {
        std::vector<Scalar> ei = zero_vec(field_, dim_);
        ei[i] = field_.one();
        Matrix with = span.hstack(columns_to_matrix(field_, {ei}, dim_));
        if (with.rank() == span.cols())
            continue;
        generators_.push_back(i);
        /* close under multiplication by the new generator and old span */
        bool grew = true;
        span = with.column_space_basis();
        while (grew && span.cols() < dim_) {
            grew = false;
            Matrix bigger = span;
            for (size_t g : generators_) {
                std::vector<Scalar> eg = zero_vec(field_, dim_);
                eg[g] = field_.one();
                bigger = bigger.hstack(left_mult(eg) * span);
            }
            bigger = bigger.column_space_basis();
            if (bigger.cols() > span.cols()) {
                span = bigger;
                grew = true;
            }
        }
    }
    if (span.cols() != dim_)
        throw ValidationError("generator closure failed to span the algebra");
}

const Matrix& FinAlgebra::radical() const {
    if (radical_)
        return *radical_;
    long long p = field_.characteristic();
    if (!commutative_)
        throw ValidationError("radical: only commutative algebras are supported");
    if (p == 0) {
        /* trace form radical (Dickson) */
        Matrix g(field_, dim_, dim_);
        for (size_t i = 0; i < dim_; ++i)
            for (size_t j = 0; j < dim_; ++j) {
                Matrix l = left_mult(mult_[i][j]);
                Scalar tr = field_.zero();
                for (size_t k = 0; k < dim_; ++k)
                    tr = field_.add(tr, l.at(k, k));
                g.at(i, j) = tr;
            }
        radical_ = g.kernel_basis();
        return *radical_;
    }
    /* kernel of iterated Frobenius: a -> a^{p^e}, linear over the prime field */
    Matrix frob(field_, dim_, dim_);
    for (size_t i = 0; i < dim_; ++i) {
        std::vector<Scalar> ei = zero_vec(field_, dim_);
        ei[i] = field_.one();
        std::vector<Scalar> pw = ei;
        for (long long t = 1; t < p; ++t)
            pw = multiply(pw, ei);
        for (size_t k = 0; k < dim_; ++k)
            frob.at(k, i) = pw[k];
    }
    Matrix iter = frob;
    unsigned long long pe = static_cast<unsigned long long>(p);
    while (pe < dim_) {
        iter = frob * iter; /* note: valid because Frobenius is F_p-linear and multiplicative */
        pe *= static_cast<unsigned long long>(p);
    }
    radical_ = iter.kernel_basis();
    return *radical_;
}

bool FinAlgebra::is_split_local() const { return radical().cols() == dim_ - 1; }

bool FinAlgebra::is_semisimple() const { return radical().cols() == 0; }

std::shared_ptr<const FinAlgebra> FinAlgebra::opposite() const {
    auto mult = mult_;
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j)
            mult[i][j] = mult_[j][i];
    return std::make_shared<FinAlgebra>(field_, dim_, std::move(mult), unit_);
}

FinModule::FinModule(AlgebraPtr algebra, size_t dim, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)) {
    const Field& f = algebra_->field();
    if (action_.size() != algebra_->dim())
        throw ValidationError("module needs one action matrix per algebra basis element");
    for (const Matrix& m : action_)
        if (m.rows() != dim_ || m.cols() != dim_)
            throw ValidationError("module action matrix has wrong shape");
    if (!action_of(algebra_->unit()).is_identity() && dim_ > 0)
        throw ValidationError("module: unit does not act as identity");
    for (size_t i = 0; i < algebra_->dim(); ++i)
        for (size_t j = 0; j < algebra_->dim(); ++j) {
            Matrix lhs = action_[i] * action_[j];
            Matrix rhs(f, dim_, dim_);
            const auto& c = algebra_->basis_product(i, j);
            for (size_t k = 0; k < algebra_->dim(); ++k)
                if (!f.is_zero(c[k]))
                    rhs = rhs + action_[k].scaled(c[k]);
            if (!(lhs == rhs))
                throw ValidationError("module action violates structure constants at (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")");
        }
}

FinModule FinModule::zero(AlgebraPtr algebra) {
    std::vector<Matrix> act(algebra->dim(), Matrix(algebra->field(), 0, 0));
    return FinModule(std::move(algebra), 0, std::move(act));
}

FinModule FinModule::regular(AlgebraPtr algebra) {
    std::vector<Matrix> act;
    const Field& f = algebra->field();
    size_t dim = algebra->dim();
    for (size_t i = 0; i < dim; ++i) {
        std::vector<Scalar> ei(dim, f.zero());
        ei[i] = f.one();
        act.push_back(algebra->left_mult(ei));
    }
    return FinModule(std::move(algebra), dim, std::move(act));
}

Matrix FinModule::action_of(const std::vector<Scalar>& a) const {
    const Field& f = algebra_->field();
    Matrix out(f, dim_, dim_);
    for (size_t i = 0; i < algebra_->dim(); ++i)
        if (!f.is_zero(a[i]))
            out = out + action_[i].scaled(a[i]);
    return out;
}

FinModule FinModule::direct_sum(const FinModule& other) const {
    const Field& f = algebra_->field();
    std::vector<Matrix> act;
    for (size_t i = 0; i < algebra_->dim(); ++i) {
        Matrix m(f, dim_ + other.dim_, dim_ + other.dim_);
        m.paste(0, 0, action_[i]);
        m.paste(dim_, dim_, other.action_[i]);
        act.push_back(std::move(m));
    }
    return FinModule(algebra_, dim_ + other.dim_, std::move(act));
}

FinModule FinModule::submodule(const Matrix& span, Matrix* incl) const {
    Matrix basis = span.column_space_basis();
    std::vector<Matrix> act;
    for (size_t i = 0; i < algebra_->dim(); ++i) {
        auto x = basis.solve(action_[i] * basis);
        if (!x)
            throw ValidationError("submodule: span is not invariant under the action");
        act.push_back(*x);
    }
    if (incl)
        *incl = basis;
    return FinModule(algebra_, basis.cols(), std::move(act));
}

FinModule FinModule::quotient(const Matrix& sub, Matrix* proj) const {
    const Field& f = algebra_->field();
    Matrix basis = sub.column_space_basis();
    /* projection: complete basis to the ambient space, project away sub */
    Matrix reps = quotient_representatives(basis, Matrix::identity(f, dim_));
    Matrix change = basis.hstack(reps); /* invertible dim x dim */
    Matrix inv = *change.inverse();
    Matrix p = inv.submatrix(basis.cols(), 0, reps.cols(), dim_);
    std::vector<Matrix> act;
    for (size_t i = 0; i < algebra_->dim(); ++i)
        act.push_back(p * action_[i] * reps);
    if (proj)
        *proj = p;
    return FinModule(algebra_, reps.cols(), std::move(act));
}

FinModule FinModule::dual(AlgebraPtr opposite) const {
    std::vector<Matrix> act;
    for (size_t i = 0; i < algebra_->dim(); ++i)
        act.push_back(action_[i].transposed());
    return FinModule(std::move(opposite), dim_, std::move(act));
}

bool operator==(const FinModule& a, const FinModule& b) {
    return a.dim_ == b.dim_ && a.action_ == b.action_;
}

bool is_module_morphism(const FinModule& src, const FinModule& dst, const Matrix& f) {
    if (f.rows() != dst.dim() || f.cols() != src.dim())
        return false;
    for (size_t i = 0; i < src.algebra()->dim(); ++i)
        if (!(f * src.action(i) == dst.action(i) * f))
            return false;
    return true;
}

}  // namespace cdgforge
