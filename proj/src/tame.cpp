#include "cdgforge/tame.hpp"

namespace cdgforge {

namespace {

int parity(int d) { return ((d % 2) + 2) % 2; }

AlgebraPtr require_s_context(const CdgRingPtr& r) {
    if (!r->s_context())
        throw ValidationError("tame complex: ring must come from the koszul constructor");
    return r->s_context()->s;
}

}  // namespace

TameEnd TameEnd::periodic2(FinModule even, FinModule odd, Matrix d_even, Matrix d_odd, Matrix s_even,
                           Matrix s_odd) {
    TameEnd e;
    e.kind = Kind::Periodic2;
    e.cell = {std::move(even), std::move(odd)};
    e.d = {std::move(d_even), std::move(d_odd)};
    e.s = {std::move(s_even), std::move(s_odd)};
    return e;
}

TameEnd TameEnd::constant(FinModule m, Matrix d, Matrix s) {
    TameEnd e = periodic2(m, m, d, d, s, s);
    e.kind = Kind::Constant;
    return e;
}

TameComplex::TameComplex(CdgRingPtr ring, int lo, int hi, std::vector<FinModule> comp, std::vector<Matrix> d,
                         std::vector<Matrix> s, TameEnd below, TameEnd above)
    : ring_(std::move(ring)), lo_(lo), hi_(hi), comp_(std::move(comp)), d_(std::move(d)), s_(std::move(s)),
      below_(std::move(below)), above_(std::move(above)),
      zero_module_(FinModule::zero(require_s_context(ring_))) {
    if (ring_->grading().kind != GradingGroup::Kind::Z)
        throw ValidationError("tame complex: Z-graded rings only");
    if (lo_ > hi_)
        throw ValidationError("tame complex: empty window");
    size_t n = static_cast<size_t>(hi_ - lo_ + 1);
    if (comp_.size() != n || d_.size() != n - 1 || s_.size() != n - 1)
        throw ValidationError("tame complex: window data has wrong shape");
    for (size_t i = 0; i + 1 < comp_.size(); ++i) {
        if (d_[i].rows() != comp_[i + 1].dim() || d_[i].cols() != comp_[i].dim())
            throw ValidationError("tame complex: d map has wrong shape at degree " +
                                  std::to_string(lo_ + static_cast<int>(i)));
        if (s_[i].rows() != comp_[i].dim() || s_[i].cols() != comp_[i + 1].dim())
            throw ValidationError("tame complex: s map has wrong shape at degree " +
                                  std::to_string(lo_ + static_cast<int>(i) + 1));
    }
    /* end cells and maps must match the window boundary so crossings glue */
    auto check_end = [&](const TameEnd& e, int b0, int b1, const char* which) {
        if (e.kind == TameEnd::Kind::Zero)
            return;
        for (int deg : {b0, b1}) {
            if (deg < lo_ || deg > hi_)
                continue;
            const FinModule& cell = e.cell[static_cast<size_t>(parity(deg))];
            if (!(cell == comp_[static_cast<size_t>(deg - lo_)]))
                throw ValidationError(std::string("tame complex: ") + which +
                                      " descriptor does not match the window boundary");
        }
        if (n >= 2) {
            int dsrc = which[0] == 'b' ? lo_ : hi_ - 1;      /* innermost boundary d map */
            int ssrc = which[0] == 'b' ? lo_ + 1 : hi_;      /* innermost boundary s map */
            if (!(e.d[static_cast<size_t>(parity(dsrc))] == d_[static_cast<size_t>(dsrc - lo_)]) ||
                !(e.s[static_cast<size_t>(parity(ssrc))] == s_[static_cast<size_t>(ssrc - lo_ - 1)]))
                throw ValidationError(std::string("tame complex: ") + which +
                                      " descriptor maps do not match the window boundary");
        }
    };
    check_end(below_, lo_, lo_ + 1, "below");
    check_end(above_, hi_, hi_ - 1, "above");
    /* identities on the widened window */
    Fragment f = window_eval(*this, lo_ - 4, hi_ + 4);
    const AlgebraPtr& sAlg = ring_->s_context()->s;
    for (int deg = f.lo; deg <= f.hi; ++deg) {
        size_t i = static_cast<size_t>(deg - f.lo);
        for (size_t g : sAlg->generators()) {
            if (deg < f.hi && !(f.d[i] * f.comp[i].action(g) == f.comp[i + 1].action(g) * f.d[i]))
                throw ValidationError("tame complex: d is not S-linear at degree " + std::to_string(deg));
            if (i >= 1 && !(f.s[i] * f.comp[i].action(g) == f.comp[i - 1].action(g) * f.s[i]))
                throw ValidationError("tame complex: s is not S-linear at degree " + std::to_string(deg));
        }
        if (deg + 2 <= f.hi && !(f.d[i + 1] * f.d[i]).is_zero())
            throw ValidationError("tame complex: d^2 != 0 at degree " + std::to_string(deg));
        if (i >= 2 && !(f.s[i - 1] * f.s[i]).is_zero())
            throw ValidationError("tame complex: s^2 != 0 at degree " + std::to_string(deg));
        if (deg < f.hi && i >= 1) {
            Matrix lhs = f.s[i + 1] * f.d[i] + f.d[i - 1] * f.s[i];
            Matrix w_act = f.comp[i].action_of(ring_->s_context()->w);
            if (!(lhs == w_act))
                throw ValidationError("tame complex: ds + sd != w at degree " + std::to_string(deg));
        }
    }
}

const FinModule& TameComplex::component(int deg) const {
    if (deg >= lo_ && deg <= hi_)
        return comp_[static_cast<size_t>(deg - lo_)];
    const TameEnd& e = deg < lo_ ? below_ : above_;
    if (e.kind == TameEnd::Kind::Zero)
        return zero_module_;
    return e.cell[static_cast<size_t>(parity(deg))];
}

Matrix TameComplex::dmap(int deg) const {
    if (deg >= lo_ && deg < hi_)
        return d_[static_cast<size_t>(deg - lo_)];
    const TameEnd& e = deg < lo_ ? below_ : above_;
    if (e.kind == TameEnd::Kind::Zero)
        return Matrix(ring_->field(), component(deg + 1).dim(), component(deg).dim());
    return e.d[static_cast<size_t>(parity(deg))];
}

Matrix TameComplex::smap(int deg) const {
    if (deg > lo_ && deg <= hi_)
        return s_[static_cast<size_t>(deg - lo_ - 1)];
    const TameEnd& e = deg <= lo_ ? below_ : above_;
    if (e.kind == TameEnd::Kind::Zero)
        return Matrix(ring_->field(), component(deg - 1).dim(), component(deg).dim());
    return e.s[static_cast<size_t>(parity(deg))];
}

Fragment window_eval(const TameComplex& t, int lo, int hi) {
    if (lo > hi)
        throw ValidationError("window_eval: empty window");
    Fragment f;
    f.lo = lo;
    f.hi = hi;
    for (int deg = lo; deg <= hi; ++deg) {
        f.comp.push_back(t.component(deg));
        if (deg < hi)
            f.d.push_back(t.dmap(deg));
        f.s.push_back(deg > lo ? t.smap(deg) : Matrix(t.ring()->field(), 0, 0));
    }
    return f;
}

AcyclicityVerdict fragment_acyclic_on(const Fragment& f) {
    AcyclicityVerdict v{true, f.lo, f.hi, {}};
    for (size_t i = 0; i + 1 < f.d.size(); ++i)
        if (!(f.d[i + 1] * f.d[i]).is_zero())
            throw ValidationError("is_acyclic_on: d^2 != 0 on the window");
    for (int deg = f.lo + 1; deg < f.hi; ++deg) {
        size_t i = static_cast<size_t>(deg - f.lo);
        size_t ker = f.comp[i].dim() - f.d[i].rank();
        size_t im = f.d[i - 1].rank();
        if (ker != im) {
            v.acyclic = false;
            v.nonzero_h.push_back(deg);
        }
    }
    return v;
}

AcyclicityVerdict is_acyclic_on(const TameComplex& t, int lo, int hi) {
    return fragment_acyclic_on(window_eval(t, lo, hi));
}

}  // namespace cdgforge
