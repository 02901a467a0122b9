#include "tribo/zt.hpp"

#include <algorithm>

#include "tribo/core.hpp"

namespace tribo {

namespace {

// Largest word index i with T(i+3) <= n (n >= 1).
u64 floor_index(u64 n) {
    u64 lo = 0, hi = tribonacci_max_index() - 3;
    while (lo < hi) {
        const u64 mid = lo + (hi - lo + 1) / 2;
        if (tribonacci(mid + 3) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

} // namespace

std::string zt_encode(u64 n, greedy_trace& trace) {
    if (n == 0) throw domain_error("0 has no tribonacci Zeckendorf representation (N >= 1)");
    trace = {};
    trace.remainders.push_back(n);
    u64 rest = n;
    while (rest > 0) {
        const u64 i = floor_index(rest);
        const u64 f = tribonacci(i + 3);
        trace.floors.push_back(f);
        trace.indices.push_back(i);
        rest -= f;
        trace.remainders.push_back(rest);
    }
    const u64 top = trace.indices.front();
    std::string w(top + 1, '0');
    for (const u64 i : trace.indices) w[top - i] = '1';
    return w;
}

std::string zt_encode(u64 n) {
    greedy_trace trace;
    return zt_encode(n, trace);
}

u64 zt_decode(std::string_view w) {
    require_zt(w);
    const u64 top = w.size() - 1; // digit at position p has index top - p
    u64 n = 0;
    for (std::size_t p = 0; p < w.size(); ++p)
        if (w[p] == '1') n = checked_add(n, tribonacci(top - p + 3));
    return n;
}

u64 zt_length(u64 n) {
    if (n == 0) throw domain_error("0 has no tribonacci Zeckendorf representation (N >= 1)");
    return floor_index(n) + 1;
}

} // namespace tribo
