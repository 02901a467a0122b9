#pragma once
// Tribonacci Zeckendorf codec: every N >= 1 is a unique sum of tribonacci
// numbers T(i+3) with no three consecutive indices, written as a binary word,
// most significant digit first ("1" = 1, "10" = 2, "11" = 3, "100" = 4, ...).

#include <string>
#include <string_view>
#include <vector>

#include "tribo/checked.hpp"
#include "tribo/words.hpp"

namespace tribo {

// The greedy subtraction chain behind an encoding: remainders N_0=N > N_1 >
// ... > 0, the floor values taken at each step, and their word indices i
// (meaning T(i+3)).
struct greedy_trace {
    std::vector<u64> remainders;
    std::vector<u64> floors;
    std::vector<u64> indices;
};

std::string zt_encode(u64 n);
std::string zt_encode(u64 n, greedy_trace& trace);

// Sum of T(i+3) over the 1-digits; validates first.
u64 zt_decode(std::string_view w);

// |zt_encode(n)| without building the word.
u64 zt_length(u64 n);

} // namespace tribo
