#pragma once
// Checked unsigned 64-bit helpers. Every arithmetic step in the library goes
// through these: out-of-range must surface as tribo::overflow_error, never as
// silent wraparound.

#include <cstdint>

#include "tribo/error.hpp"

namespace tribo {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 checked_add(u64 a, u64 b) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("64-bit addition overflow");
    return r;
}

inline u64 checked_sub(u64 a, u64 b) {
    if (b > a) throw overflow_error("64-bit subtraction underflow");
    return a - b;
}

inline u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("64-bit multiplication overflow");
    return r;
}

inline i64 checked_to_i64(u64 a) {
    if (a > static_cast<u64>(INT64_MAX)) throw overflow_error("value exceeds signed 64-bit range");
    return static_cast<i64>(a);
}

inline u64 checked_to_u64(i64 a) {
    if (a < 0) throw domain_error("negative value where a count was expected");
    return static_cast<u64>(a);
}

} // namespace tribo
