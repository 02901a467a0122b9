#include "tribo/transform.hpp"

#include <algorithm>

namespace tribo {

std::string zt_to_hat(std::string_view zt) {
    require_zt(zt);
    std::string hat;
    hat.reserve(zt.size() + 2);
    hat += '0';
    hat.append(zt.rbegin(), zt.rend());
    hat += '0';
    return hat;
}

std::string hat_to_zt(std::string_view hat) {
    require_hat(hat);
    std::string zt(hat.substr(1, hat.size() - 2));
    std::reverse(zt.begin(), zt.end());
    require_zt(zt);
    return zt;
}

std::string hat_to_abdx(std::string_view w) {
    require_hat(w);
    const std::size_t n = w.size();
    std::string out;
    out.reserve(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (w[i] == '0') {
            if (w[i + 1] == '0') {
                out += 'B';
            } else {
                // a valid hat word ends in 0, so i+2 exists here
                out += (w[i + 2] == '1') ? 'x' : 'A';
            }
        } else {
            if (w[i + 1] == '1')
                out += 'x';
            else if (i + 2 < n)
                out += '.';
            else
                out += 'B'; // the 1 of the final "10"
        }
    }
    return out;
}

std::string abdx_to_abc(std::string_view w) {
    require_abdx(w);
    const std::size_t n = w.size();
    std::string out;
    std::size_t i = 0;
    while (i < n) {
        switch (w[i]) {
            case 'B':
                out += '0';
                ++i;
                break;
            case 'A':
                out += '1';
                if (i + 2 == n && w[i + 1] == 'B') out += '0'; // terminal AB
                i += 2;                                        // A. or AB
                break;
            default: // 'x', validated as "xx." or terminal "xxB"
                out += '2';
                if (i + 3 == n && w[i + 2] == 'B') out += '0'; // terminal xxB
                i += 3;
                break;
        }
    }
    return out;
}

std::string abc_to_abdx(std::string_view w) {
    require_abc(w);
    if (w.size() < 2)
        throw validation_error("the word \"0\" (zero) has no ABDX form; the conversion covers N >= 1");
    std::string out;
    const std::size_t last = w.size() - 2; // position of the letter before the terminal B
    for (std::size_t i = 0; i <= last; ++i) {
        switch (w[i]) {
            case '0': out += 'B'; break;
            case '1': out += (i == last) ? "A" : "A."; break;
            default: out += (i == last) ? "xx" : "xx."; break;
        }
    }
    out += 'B'; // the kept terminal
    return out;
}

std::string abdx_to_hat(std::string_view w, int version) {
    require_abdx(w);
    if (version == 2) {
        std::string out = "0";
        for (const char c : w) out += (c == 'A' || c == 'x') ? '1' : '0';
        return out;
    }
    if (version != 1) throw domain_error("hat reconstruction version must be 1 or 2");
    std::string out;
    std::size_t i = 0;
    const std::size_t n = w.size();
    while (i < n) {
        switch (w[i]) {
            case 'B':
                out += '0';
                ++i;
                break;
            case 'A':
                out += (i + 2 == n && w[i + 1] == 'B') ? "010" : "01";
                i += 2;
                break;
            default:
                out += (i + 3 == n && w[i + 2] == 'B') ? "0110" : "011";
                i += 3;
                break;
        }
    }
    return out;
}

std::string convert(std::string_view zt) { return abdx_to_abc(hat_to_abdx(zt_to_hat(zt))); }

std::string convert_back(std::string_view abc) {
    return hat_to_zt(abdx_to_hat(abc_to_abdx(abc), 2));
}

const std::set<std::string>& admissible_tribons() {
    static const std::set<std::string> s{
        "A.A", "A.B", "A.x", "BBB", "BBA", "BAB", "BA.", "BBx", "Bxx", ".A.",
        ".AB", ".BA", ".BB", ".Bx", ".xx", "x.A", "x.B", "x.x", "xx.", "xxB",
    };
    return s;
}

const std::set<std::string>& admissible_doublets() {
    static const std::set<std::string> s{
        "A.", "AB", "BB", "BA", "Bx", ".A", ".B", ".x", "x.", "xx", "xB",
    };
    return s;
}

census_result tribon_census(std::uint64_t max_n) {
    if (max_n < 1) throw domain_error("census needs at least N = 1");
    census_result r;
    std::string zt = "1"; // the representation of 1; successor walks 2, 3, ...
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        const std::string hat = zt_to_hat(zt);
        const std::string w = hat_to_abdx(hat);
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            ++r.doublets[w.substr(i, 2)];
            if (i + 2 < w.size()) {
                const std::string tri = w.substr(i, 3);
                ++r.tribons[tri];
                // hat window feeding these three letters (each uses <= 2 lookahead)
                r.contexts[tri].insert(hat.substr(i, std::min<std::size_t>(5, hat.size() - i)));
            }
        }
        zt = zt_successor(zt);
    }
    return r;
}

} // namespace tribo
