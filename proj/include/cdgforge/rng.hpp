#pragma once

#include <cstdint>

#include "cdgforge/field.hpp"
#include "cdgforge/matrix.hpp"

namespace cdgforge {

/* Deterministic PRNG. Bounded draws avoid std::uniform_int_distribution so
 * that identical seeds give identical streams on every platform. */
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    uint64_t next() {
        /* xorshift64* */
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dULL;
    }

    uint64_t below(uint64_t n) { return n ? next() % n : 0; }

    Scalar scalar(const Field& f) {
        if (f.is_rationals())
            return f.from_int(static_cast<long long>(below(7)) - 3);
        return f.from_int(static_cast<long long>(below(static_cast<uint64_t>(f.characteristic()))));
    }

    Matrix matrix(const Field& f, size_t rows, size_t cols) {
        Matrix m(f, rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                m.at(i, j) = scalar(f);
        return m;
    }

  private:
    uint64_t state_;
};

}  // namespace cdgforge
