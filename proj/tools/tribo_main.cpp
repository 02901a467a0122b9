// Command-line front end. Every verb is a thin shell around one library
// call; results go to stdout, diagnostics to stderr. Exit codes: 0 success,
// 1 validation/domain error, 2 verification failure, 3 usage error.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tribo/abc.hpp"
#include "tribo/core.hpp"
#include "tribo/oeis.hpp"
#include "tribo/report.hpp"
#include "tribo/sequences.hpp"
#include "tribo/transform.hpp"
#include "tribo/verify.hpp"
#include "tribo/zt.hpp"

namespace {

using tribo::i64;
using tribo::u64;

u64 gMaxN = u64{1} << 62;

void guard(u64 value, const char* what) {
    if (value > gMaxN)
        throw tribo::domain_error(std::string(what) + " " + std::to_string(value) +
                                  " exceeds the --max-n guard (" + std::to_string(gMaxN) + ")");
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int cmd_word(u64 len) {
    guard(len, "length");
    tribo::word_stream ws;
    std::string out;
    out.reserve(len);
    for (u64 i = 0; i < len; ++i) out.push_back(ws.next());
    std::cout << out << '\n';
    return 0;
}

int cmd_seq(const std::string& which, u64 from, u64 to) {
    guard(to, "index");
    if (from > to) throw tribo::domain_error("--from must not exceed --to");
    for (u64 n = from; n <= to; ++n) {
        u64 v;
        if (which == "A") v = tribo::seq(tribo::letter_class::A, n);
        else if (which == "B") v = tribo::seq(tribo::letter_class::B, n);
        else if (which == "C") v = tribo::seq(tribo::letter_class::C, n);
        else if (which == "B0") v = tribo::seq_b_typed(0, n);
        else if (which == "B1") v = tribo::seq_b_typed(1, n);
        else if (which == "B2") v = tribo::seq_b_typed(2, n);
        else throw tribo::domain_error("unknown sequence: " + which +
                                       " (want A, B, C, B0, B1, B2)");
        std::cout << n << ' ' << v << '\n';
    }
    return 0;
}

int cmd_encode_zt(u64 n, bool trace) {
    guard(n, "value");
    if (!trace) {
        std::cout << tribo::zt_encode(n) << '\n';
        return 0;
    }
    tribo::greedy_trace tr;
    std::cout << tribo::zt_encode(n, tr) << '\n';
    auto row = [](const char* name, const std::vector<u64>& xs) {
        std::cout << name;
        for (u64 x : xs) std::cout << ' ' << x;
        std::cout << '\n';
    };
    row("remainders", tr.remainders);
    row("floors", tr.floors);
    row("indices", tr.indices);
    return 0;
}

int cmd_convert(const std::string& from, const std::string& word, bool stages) {
    if (from == "zt") {
        if (stages) {
            tribo::require_zt(word);
            const std::string hat = tribo::zt_to_hat(word);
            const std::string abdx = tribo::hat_to_abdx(hat);
            std::cout << "hat " << hat << '\n' << "abdx " << abdx << '\n'
                      << tribo::abdx_to_abc(abdx) << '\n';
        } else {
            std::cout << tribo::convert(word) << '\n';
        }
        return 0;
    }
    if (from == "abc") {
        if (stages) {
            tribo::require_abc(word);
            const std::string abdx = tribo::abc_to_abdx(word);
            const std::string hat = tribo::abdx_to_hat(abdx, 2);
            std::cout << "abdx " << abdx << '\n' << "hat " << hat << '\n'
                      << tribo::hat_to_zt(hat) << '\n';
        } else {
            std::cout << tribo::convert_back(word) << '\n';
        }
        return 0;
    }
    throw tribo::domain_error("--from must be zt or abc");
}

int cmd_table(int which) {
    if (which == 1) {
        for (u64 n = 0; n < 80; ++n)
            std::cout << n << ' ' << tribo::t_at(n) << ' ' << tribo::seq(tribo::letter_class::A, n)
                      << ' ' << tribo::seq(tribo::letter_class::B, n) << ' '
                      << tribo::seq(tribo::letter_class::C, n) << '\n';
        return 0;
    }
    if (which == 2) {
        for (u64 n = 1; n <= 100; ++n) std::cout << n << ' ' << tribo::zt_encode(n) << '\n';
        return 0;
    }
    if (which == 3) {
        for (u64 n = 1; n <= 100; ++n) std::cout << n << ' ' << tribo::abc_encode(n) << '\n';
        return 0;
    }
    throw tribo::domain_error("table number must be 1, 2, or 3");
}

int cmd_verify(const std::string& checks, u64 limit, unsigned jobs, const std::string& out,
               bool list) {
    if (list) {
        for (const auto& info : tribo::check_catalog())
            std::cout << info.id << " - " << info.description << '\n';
        return 0;
    }
    const auto reports = tribo::run_checks(split_commas(checks), limit, jobs);
    u64 bad = 0;
    if (out == "json") {
        std::cout << tribo::render_json(reports) << '\n';
        for (const auto& r : reports) bad += r.violation_count;
    } else if (out == "text") {
        for (const auto& r : reports) {
            std::cout << tribo::render_line(r) << '\n';
            if (!r.passed()) std::cout << tribo::render_violations(r);
            bad += r.violation_count;
        }
        std::cout << reports.size() << " checks, " << bad << " violations\n";
    } else {
        throw tribo::domain_error("--out must be text or json");
    }
    return bad ? 2 : 0;
}

int cmd_oeis(const std::string& id, std::string bpath, u64 limit, bool list) {
    if (list) {
        for (const auto& b : tribo::bindings())
            std::cout << b.id << " index_shift=" << b.index_shift
                      << " value_shift=" << b.value_shift << " first=" << b.first_local << " - "
                      << b.description << '\n';
        return 0;
    }
    const auto& b = tribo::binding_for(id);
    if (bpath.empty()) bpath = tribo::fixture_path(id, tribo::data_dir());
    const tribo::bfile f = tribo::load_bfile(bpath);
    const auto r = tribo::compare(b, f, limit);
    std::cout << tribo::render_line(r) << '\n';
    if (!r.passed()) std::cout << tribo::render_violations(r);
    return r.passed() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two unique tribonacci numeration systems: greedy and iterated-sequence codecs, "
                 "their string-level equivalence transform, identity verification, and OEIS "
                 "b-file comparison"};
    app.require_subcommand(1);
    app.add_option("--max-n", gMaxN, "reject integer inputs above this")->capture_default_str();

    std::function<int()> action;

    {
        auto* c = app.add_subcommand("word", "print a prefix of the infinite ternary word");
        auto len = std::make_shared<u64>(40);
        c->add_option("--len", *len, "number of symbols")->capture_default_str();
        c->callback([len, &action] { action = [len] { return cmd_word(*len); }; });
    }
    {
        auto* c = app.add_subcommand("seq", "print terms of A, B, C or the typed zeros B0, B1, B2");
        auto which = std::make_shared<std::string>();
        auto from = std::make_shared<u64>(0);
        auto to = std::make_shared<u64>(9);
        c->add_option("which", *which, "A, B, C, B0, B1 or B2")->required();
        c->add_option("--from", *from, "first index")->capture_default_str();
        c->add_option("--to", *to, "last index")->capture_default_str();
        c->callback([=, &action] { action = [=] { return cmd_seq(*which, *from, *to); }; });
    }
    {
        auto* c = app.add_subcommand("encode-zt", "greedy tribonacci word of N");
        auto n = std::make_shared<u64>();
        auto trace = std::make_shared<bool>(false);
        c->add_option("N", *n, "integer to encode (N >= 1)")->required();
        c->add_flag("--trace", *trace, "also print the greedy subtraction trace");
        c->callback([=, &action] { action = [=] { return cmd_encode_zt(*n, *trace); }; });
    }
    {
        auto* c = app.add_subcommand("decode-zt", "integer value of a greedy word");
        auto w = std::make_shared<std::string>();
        c->add_option("BITS", *w, "binary word, no 111, leading 1")->required();
        c->callback([=, &action] {
            action = [=] {
                std::cout << tribo::zt_decode(*w) << '\n';
                return 0;
            };
        });
    }
    {
        auto* c = app.add_subcommand("encode-abc", "iterated-sequence word of N");
        auto n = std::make_shared<u64>();
        c->add_option("N", *n, "integer to encode (N >= 0)")->required();
        c->callback([=, &action] {
            action = [=] {
                guard(*n, "value");
                std::cout << tribo::abc_encode(*n) << '\n';
                return 0;
            };
        });
    }
    {
        auto* c = app.add_subcommand("decode-abc", "integer value of a digit word");
        auto w = std::make_shared<std::string>();
        c->add_option("WORD", *w, "word over 0, 1, 2 ending in a single 0")->required();
        c->callback([=, &action] {
            action = [=] {
                std::cout << tribo::abc_decode(*w) << '\n';
                return 0;
            };
        });
    }
    {
        auto* c = app.add_subcommand("convert", "translate a word between the two systems");
        auto from = std::make_shared<std::string>();
        auto w = std::make_shared<std::string>();
        auto stages = std::make_shared<bool>(false);
        c->add_option("--from", *from, "source system: zt or abc")->required();
        c->add_option("WORD", *w, "word to translate")->required();
        c->add_flag("--show-stages", *stages, "print the hat and four-letter intermediates");
        c->callback([=, &action] { action = [=] { return cmd_convert(*from, *w, *stages); }; });
    }
    {
        auto* c = app.add_subcommand("table", "print reference table 1 (t, A, B, C for n < 80), "
                                              "2 (greedy words, N = 1..100) or 3 (digit words)");
        auto k = std::make_shared<int>();
        c->add_option("K", *k, "table number")->required();
        c->callback([=, &action] { action = [=] { return cmd_table(*k); }; });
    }
    {
        auto* c = app.add_subcommand("verify", "run the identity / codec / transform check suite");
        auto checks = std::make_shared<std::string>();
        auto limit = std::make_shared<u64>(10000);
        auto jobs = std::make_shared<unsigned>(0);
        auto out = std::make_shared<std::string>("text");
        auto list = std::make_shared<bool>(false);
        c->add_option("--checks", *checks, "comma-separated check ids (default: all)");
        c->add_option("--limit", *limit, "index sweep bound per check")->capture_default_str();
        c->add_option("--jobs", *jobs, "worker threads (0 = hardware)")->capture_default_str();
        c->add_option("--out", *out, "text or json")->capture_default_str();
        c->add_flag("--list", *list, "list check ids and exit");
        c->callback([=, &action] {
            action = [=] { return cmd_verify(*checks, *limit, *jobs, *out, *list); };
        });
    }
    {
        auto* c = app.add_subcommand("oeis", "compare a generated sequence against an OEIS b-file");
        auto id = std::make_shared<std::string>();
        auto bpath = std::make_shared<std::string>();
        auto limit = std::make_shared<u64>(0);
        auto list = std::make_shared<bool>(false);
        c->add_option("--id", *id, "sequence id, e.g. A278040");
        c->add_option("--bfile", *bpath, "b-file path (default: bundled fixture)");
        c->add_option("--limit", *limit, "terms to require (0 = all shared)")
            ->capture_default_str();
        c->add_flag("--list", *list, "list supported ids and their shifts");
        c->callback([=, &action] {
            action = [=] {
                if (!*list && id->empty())
                    throw tribo::domain_error("--id is required (or use --list)");
                return cmd_oeis(*id, *bpath, *limit, *list);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 3;
    }

    try {
        return action ? action() : 3;
    } catch (const tribo::parse_error& e) {
        std::cerr << "error: " << e.what() << " (line " << e.line << ")\n";
        return 1;
    } catch (const tribo::validation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const tribo::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
