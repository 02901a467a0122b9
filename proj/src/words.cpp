#include "tribo/words.hpp"

namespace tribo {

std::string to_string(word_violation::kind k) {
    using K = word_violation::kind;
    switch (k) {
        case K::empty: return "empty";
        case K::bad_symbol: return "bad-symbol";
        case K::leading_zero: return "leading-zero";
        case K::triple_ones: return "triple-ones";
        case K::bad_terminal: return "bad-terminal";
        case K::double_b_terminal: return "double-b-terminal";
        case K::bad_start: return "bad-start";
        case K::bad_end: return "bad-end";
        case K::double_dot: return "double-dot";
        case K::bad_cross: return "bad-cross";
        case K::bad_dot: return "bad-dot";
        case K::bad_a: return "bad-a";
    }
    return "unknown";
}

std::string describe(const word_violation& v, std::string_view word_kind) {
    std::string s = "invalid ";
    s += word_kind;
    s += " word: ";
    s += to_string(v.what);
    if (v.pos != std::string::npos) {
        s += " at position ";
        s += std::to_string(v.pos);
    }
    return s;
}

namespace {

std::optional<word_violation> find_triple_ones(std::string_view w) {
    for (std::size_t i = 2; i < w.size(); ++i)
        if (w[i] == '1' && w[i - 1] == '1' && w[i - 2] == '1')
            return word_violation{word_violation::kind::triple_ones, i - 2};
    return std::nullopt;
}

std::optional<word_violation> find_bad_symbol(std::string_view w, std::string_view alphabet) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (alphabet.find(w[i]) == std::string_view::npos)
            return word_violation{word_violation::kind::bad_symbol, i};
    return std::nullopt;
}

} // namespace

std::optional<word_violation> validate_zt(std::string_view w) {
    using K = word_violation::kind;
    if (w.empty()) return word_violation{K::empty, std::string::npos};
    if (auto v = find_bad_symbol(w, "01")) return v;
    if (w[0] != '1') return word_violation{K::leading_zero, 0};
    return find_triple_ones(w);
}

std::optional<word_violation> validate_abc(std::string_view w) {
    using K = word_violation::kind;
    if (w.empty()) return word_violation{K::empty, std::string::npos};
    if (auto v = find_bad_symbol(w, "012")) return v;
    if (w.back() != '0') return word_violation{K::bad_terminal, w.size() - 1};
    if (w.size() > 1 && w[w.size() - 2] == '0')
        return word_violation{K::double_b_terminal, w.size() - 2};
    return std::nullopt;
}

std::optional<word_violation> validate_hat(std::string_view w) {
    using K = word_violation::kind;
    if (w.empty()) return word_violation{K::empty, std::string::npos};
    if (auto v = find_bad_symbol(w, "01")) return v;
    if (w[0] != '0') return word_violation{K::bad_start, 0};
    if (w.size() < 3 || w[w.size() - 2] != '1' || w.back() != '0')
        return word_violation{K::bad_end, w.empty() ? 0 : w.size() - 1};
    return find_triple_ones(w);
}

std::optional<word_violation> validate_abdx(std::string_view w) {
    using K = word_violation::kind;
    if (w.empty()) return word_violation{K::empty, std::string::npos};
    if (auto v = find_bad_symbol(w, "AB.x")) return v;
    if (w.back() != 'B') return word_violation{K::bad_end, w.size() - 1};
    // "ends in a single B": the letter before the terminal B is A or x.
    if (w.size() < 2 || (w[w.size() - 2] != 'A' && w[w.size() - 2] != 'x'))
        return word_violation{K::bad_terminal, w.size() >= 2 ? w.size() - 2 : 0};
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        switch (w[i]) {
            case '.':
                if (i + 1 < n && w[i + 1] == '.')
                    return word_violation{K::double_dot, i};
                // every dot directly follows an A or a full "xx"
                if (i == 0 || !(w[i - 1] == 'A' || (w[i - 1] == 'x' && i >= 2 && w[i - 2] == 'x')))
                    return word_violation{K::bad_dot, i};
                break;
            case 'x': {
                // crosses come only as "xx." or terminal "xxB"
                if (i + 1 >= n) return word_violation{K::bad_cross, i};
                if (w[i + 1] == 'x') {
                    if (i > 0 && w[i - 1] == 'x') return word_violation{K::bad_cross, i};
                    if (i + 2 >= n) return word_violation{K::bad_cross, i};
                    const char after = w[i + 2];
                    const bool terminal_b = (after == 'B' && i + 3 == n);
                    if (after != '.' && !terminal_b)
                        return word_violation{K::bad_cross, i};
                } else if (i == 0 || w[i - 1] != 'x') {
                    return word_violation{K::bad_cross, i};
                }
                break;
            }
            case 'A': {
                const bool before_terminal_b = (i + 2 == n && w[i + 1] == 'B');
                if (!(i + 1 < n && w[i + 1] == '.') && !before_terminal_b)
                    return word_violation{K::bad_a, i};
                break;
            }
            default:
                break;
        }
    }
    return std::nullopt;
}

namespace {
void require(std::optional<word_violation> v, std::string_view kind_name) {
    if (v) throw validation_error(describe(*v, kind_name), v->pos);
}
} // namespace

void require_zt(std::string_view w) { require(validate_zt(w), "ZT"); }
void require_abc(std::string_view w) { require(validate_abc(w), "ABC"); }
void require_hat(std::string_view w) { require(validate_hat(w), "hat"); }
void require_abdx(std::string_view w) { require(validate_abdx(w), "ABDX"); }

std::string zt_successor(std::string_view w) {
    require_zt(w);
    std::string s(w);
    // Rightmost 0 that can flip to 1 without creating "111"; zero the tail.
    for (std::size_t p = s.size(); p-- > 1;) {
        if (s[p] != '0') continue;
        if (p >= 2 && s[p - 1] == '1' && s[p - 2] == '1') continue;
        s[p] = '1';
        for (std::size_t q = p + 1; q < s.size(); ++q) s[q] = '0';
        return s;
    }
    // w was the largest valid word of its length; wrap to the next length.
    return "1" + std::string(s.size(), '0');
}

} // namespace tribo
