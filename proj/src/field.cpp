#include "cdgforge/field.hpp"

#include <numeric>

namespace cdgforge {

namespace {

bool is_prime(long long n) {
    if (n < 2)
        return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

long long checked_narrow(__int128 v, const char* ctx) {
    if (v > INT64_MAX / 2 || v < INT64_MIN / 2)
        throw ArithmeticError(std::string("rational overflow in ") + ctx);
    return static_cast<long long>(v);
}

/* Reduce num/den with den > 0. */
Scalar reduce(__int128 num, __int128 den, const char* ctx) {
    if (den == 0)
        throw ArithmeticError("division by zero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 a = num < 0 ? -num : num, b = den;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return {checked_narrow(num, ctx), checked_narrow(den, ctx)};
}

}  // namespace

Field::Field(long long characteristic) : p_(characteristic) {
    if (p_ != 0 && !is_prime(p_))
        throw ArithmeticError("field characteristic must be 0 or prime, got " + std::to_string(p_));
}

Scalar Field::from_int(long long n) const {
    if (p_ == 0)
        return {n, 1};
    long long r = n % p_;
    if (r < 0)
        r += p_;
    return {r, 1};
}

Scalar Field::from_fraction(long long num, long long den) const {
    if (p_ == 0)
        return reduce(num, den, "from_fraction");
    return mul(from_int(num), inv(from_int(den)));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (p_ != 0)
        return {(a.num + b.num) % p_, 1};
    return reduce((__int128)a.num * b.den + (__int128)b.num * a.den, (__int128)a.den * b.den, "add");
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (p_ != 0)
        return {(long long)(((__int128)a.num * b.num) % p_), 1};
    return reduce((__int128)a.num * b.num, (__int128)a.den * b.den, "mul");
}

Scalar Field::neg(const Scalar& a) const {
    if (p_ != 0)
        return {a.num == 0 ? 0 : p_ - a.num, 1};
    return {-a.num, a.den};
}

Scalar Field::inv(const Scalar& a) const {
    if (a.num == 0)
        throw ArithmeticError("inverse of zero");
    if (p_ == 0)
        return reduce(a.den, a.num, "inv");
    /* extended Euclid mod p */
    long long t = 0, new_t = 1, r = p_, new_r = a.num;
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0)
        t += p_;
    return {t, 1};
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

unsigned long long Field::size_capped(unsigned long long cap) const {
    if (p_ == 0)
        return 0;
    return static_cast<unsigned long long>(p_) > cap ? cap : static_cast<unsigned long long>(p_);
}

std::string to_string(const Scalar& s) {
    if (s.den == 1)
        return std::to_string(s.num);
    return std::to_string(s.num) + "/" + std::to_string(s.den);
}

}  // namespace cdgforge
