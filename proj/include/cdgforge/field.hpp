#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cdgforge {

/* A scalar is a reduced fraction. Over a prime field the denominator is
 * always 1 and the numerator lies in [0, p). All normalization goes
 * through Field, so operator== on normalized scalars is exact. */
struct Scalar {
    long long num = 0;
    long long den = 1;

    friend bool operator==(const Scalar&, const Scalar&) = default;
};

class ArithmeticError : public std::runtime_error {
  public:
    explicit ArithmeticError(const std::string& what) : std::runtime_error(what) {}
};

/* F_p for a prime p, or Q when characteristic == 0. */
class Field {
  public:
    Field() : p_(0) {}
    explicit Field(long long characteristic);

    long long characteristic() const { return p_; }
    bool is_rationals() const { return p_ == 0; }

    Scalar zero() const { return {0, 1}; }
    Scalar one() const { return from_int(1); }
    Scalar from_int(long long n) const;
    Scalar from_fraction(long long num, long long den) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const;

    bool is_zero(const Scalar& a) const { return a.num == 0; }
    bool is_one(const Scalar& a) const { return a == one(); }

    /* Number of field elements, or 0 for Q. Saturates at cap. */
    unsigned long long size_capped(unsigned long long cap) const;

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

  private:
    long long p_;
};

std::string to_string(const Scalar& s);

}  // namespace cdgforge
