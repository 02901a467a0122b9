#include "tribo/abc.hpp"

namespace tribo {

namespace {

char class_digit(letter_class x) {
    return x == letter_class::B ? '0' : (x == letter_class::A ? '1' : '2');
}

letter_class digit_class(char c) {
    return c == '0' ? letter_class::B : (c == '1' ? letter_class::A : letter_class::C);
}

} // namespace

std::string abc_encode(u64 n, std::vector<classification>& chain) {
    chain.clear();
    std::string w;
    u64 cur = n;
    for (;;) {
        const classification c = classify(cur);
        chain.push_back(c);
        w += class_digit(c.letter);
        if (cur == 0) break; // emitted the terminal B(0)
        cur = c.index;       // strictly smaller for cur >= 1, so this ends
    }
    return w;
}

std::string abc_encode(u64 n) {
    std::vector<classification> chain;
    return abc_encode(n, chain);
}

u64 abc_decode(std::string_view w) {
    require_abc(w);
    // Fold right to left; the final '0' is the starting B(0) = 0 itself.
    u64 value = 0;
    for (std::size_t p = w.size() - 1; p-- > 0;)
        value = seq(digit_class(w[p]), value);
    return value;
}

block_form abc_blockform(std::string_view w) {
    require_abc(w);
    block_form f;
    f.letter_total = w.size();
    for (const char c : w) {
        switch (c) {
            case '0': ++f.count_b; break;
            case '1': ++f.count_a; break;
            default: ++f.count_c; break;
        }
    }
    // Run-length over everything before the terminal B.
    std::size_t i = 0;
    const std::size_t end = w.size() - 1;
    while (i < end) {
        std::size_t j = i;
        while (j < end && w[j] == w[i]) ++j;
        f.blocks.emplace_back(digit_class(w[i]), j - i);
        i = j;
    }
    f.j = f.blocks.size();
    return f;
}

} // namespace tribo
