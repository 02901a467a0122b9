#pragma once
// Iterated-sequence codec: every N >= 0 is a unique nested application of the
// position sequences A, B, C to 0, ending in a single B. Words are written
// over '0'/'1'/'2' = B/A/C with the leftmost letter applied last, so
// "10" = A(B(0)) = 1 and "020" = B(C(B(0))) = 6.

#include <string>
#include <string_view>
#include <vector>

#include "tribo/sequences.hpp"
#include "tribo/words.hpp"

namespace tribo {

std::string abc_encode(u64 n);
std::string abc_encode(u64 n, std::vector<classification>& chain);

u64 abc_decode(std::string_view w);

// Run-length view of a word: maximal same-letter blocks, excluding the
// terminal B; adjacent block letters differ and the block before the terminal
// is A or C. letter_total = sum of exponents + 1 = word length.
struct block_form {
    std::vector<std::pair<letter_class, u64>> blocks;
    u64 j = 0;            // number of blocks
    u64 count_b = 0;      // letter counts including the terminal B
    u64 count_a = 0;
    u64 count_c = 0;
    u64 letter_total = 0;
};

block_form abc_blockform(std::string_view w);

} // namespace tribo
