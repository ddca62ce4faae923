#pragma once

#include <cstdint>

#include "quiver/error.hpp"

namespace quiver {

using Coeff = std::int64_t;

inline Coeff checked_add(Coeff x, Coeff y) {
    Coeff r;
    if (__builtin_add_overflow(x, y, &r)) throw OverflowError("coefficient overflow in addition");
    return r;
}

inline Coeff checked_mul(Coeff x, Coeff y) {
    Coeff r;
    if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("coefficient overflow in multiplication");
    return r;
}

}  // namespace quiver
