#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tribo/abc.hpp"
#include "tribo/transform.hpp"
#include "tribo/zt.hpp"

using namespace tribo;

TEST_CASE("hat padding and unpadding") {
    CHECK(zt_to_hat("1") == "010");
    CHECK(zt_to_hat("100110") == "00110010");
    CHECK(zt_to_hat("1010") == "001010");
    CHECK_THROWS_AS(zt_to_hat("011"), validation_error);

    CHECK(hat_to_zt("00110010") == "100110");
    CHECK(hat_to_zt("010") == "1");
    CHECK(hat_to_zt("001010") == "1010");
    CHECK(hat_to_zt("0110") == "11");
    CHECK_THROWS_AS(hat_to_zt("0100"), validation_error);  // does not end in 10
    CHECK_THROWS_AS(hat_to_zt("10010"), validation_error); // does not start with 0
}

TEST_CASE("hat word validation") {
    CHECK(!validate_hat("010"));
    CHECK(!validate_hat("0101010011010"));
    CHECK(validate_hat("0111010")->what == word_violation::kind::triple_ones);
    CHECK(validate_hat("011")->what == word_violation::kind::bad_end);
    CHECK(validate_hat("0a0")->what == word_violation::kind::bad_symbol);
}

TEST_CASE("six rules") {
    CHECK(hat_to_abdx("0101010011010") == "A.A.A.Bxx.AB");
    CHECK(hat_to_abdx("010") == "AB");
    CHECK(hat_to_abdx("00110010") == "Bxx.BAB");
    CHECK(hat_to_abdx("00110") == "BxxB");
    CHECK(hat_to_abdx("00010") == "BBAB");
}

TEST_CASE("abdx word validation") {
    CHECK(!validate_abdx("A.A.A.Bxx.AB"));
    CHECK(!validate_abdx("AB"));
    CHECK(!validate_abdx("xxB"));
    CHECK(!validate_abdx("BxxB"));
    CHECK(validate_abdx("")->what == word_violation::kind::empty);
    CHECK(validate_abdx("A.")->what == word_violation::kind::bad_end);
    CHECK(validate_abdx("A.B")->what == word_violation::kind::bad_terminal);
    CHECK(validate_abdx("A..AB")->what == word_violation::kind::double_dot);
    CHECK(validate_abdx("AxB")->what == word_violation::kind::bad_a);
    CHECK(validate_abdx("BxB")->what == word_violation::kind::bad_cross);
    CHECK(validate_abdx("xxxB")->what == word_violation::kind::bad_cross);
    CHECK(validate_abdx("B.AB")->what == word_violation::kind::bad_dot);
    CHECK(validate_abdx("AAB")->what == word_violation::kind::bad_a);
    CHECK(validate_abdx("aB")->what == word_violation::kind::bad_symbol);
}

TEST_CASE("abdx to abc replacements") {
    CHECK(abdx_to_abc("BxxB") == "020");
    CHECK(abdx_to_abc("BA.AB") == "0110");
    CHECK(abdx_to_abc("Bxx.BAB") == "02010");
    CHECK(abdx_to_abc("AB") == "10");
    CHECK(abdx_to_abc("A.A.A.Bxx.AB") == "1110210");
}

TEST_CASE("abc to abdx replacements") {
    CHECK(abc_to_abdx("10") == "AB");
    CHECK(abc_to_abdx("020") == "BxxB");
    CHECK(abc_to_abdx("1110210") == "A.A.A.Bxx.AB");
    CHECK(abc_to_abdx("02010") == "Bxx.BAB");
    CHECK_THROWS_AS(abc_to_abdx("0"), validation_error); // zero has no pipeline form
    CHECK_THROWS_AS(abc_to_abdx("01"), validation_error);
}

TEST_CASE("hat reconstruction, both versions") {
    CHECK(abdx_to_hat("A.A.A.Bxx.AB", 1) == "0101010011010");
    CHECK(abdx_to_hat("A.A.A.Bxx.AB", 2) == "0101010011010");
    CHECK(abdx_to_hat("AB", 1) == "010");
    CHECK(abdx_to_hat("AB", 2) == "010");
    CHECK(abdx_to_hat("Bxx.BAB", 2) == "00110010");
    CHECK_THROWS_AS(abdx_to_hat("AB", 3), domain_error);
}

TEST_CASE("full conversions") {
    CHECK(convert("100110") == "02010");
    CHECK(convert("1") == "10");
    CHECK(convert("10010110") == "021010");
    CHECK(convert_back("02010") == "100110");
    CHECK(convert_back("10") == "1");
    CHECK(convert_back("021010") == "10010110");
}

TEST_CASE("pipeline against the codecs") {
    for (u64 n = 1; n <= 20000; ++n) {
        const std::string zt = zt_encode(n);
        const std::string abc = abc_encode(n);
        CAPTURE(n);
        CHECK(convert(zt) == abc);
        CHECK(convert_back(abc) == zt);
    }
}

TEST_CASE("round trips, version agreement, structural soundness") {
    std::string zt = "1";
    for (u64 n = 1; n <= 20000; ++n) {
        const std::string hat = zt_to_hat(zt);
        const std::string abdx = hat_to_abdx(hat);
        CAPTURE(n);
        CHECK(!validate_abdx(abdx));
        CHECK(abdx_to_hat(abdx, 1) == hat);
        CHECK(abdx_to_hat(abdx, 2) == hat);
        const std::string abc = abdx_to_abc(abdx);
        const std::string back = abc_to_abdx(abc);
        CHECK(!validate_abdx(back));
        CHECK(back == abdx);
        CHECK(convert_back(convert(zt)) == zt);
        zt = zt_successor(zt);
    }
}

TEST_CASE("census catalogs") {
    CHECK(admissible_tribons().size() == 20);
    CHECK(admissible_doublets().size() == 11);

    const census_result tiny = tribon_census(3);
    // N=1 -> "AB" (no tribon), N=2 -> "BAB", N=3 -> "xxB"
    CHECK(tiny.tribons.size() == 2);
    CHECK(tiny.tribons.at("BAB") == 1);
    CHECK(tiny.tribons.at("xxB") == 1);
    CHECK(tiny.doublets.count("AB") == 1);

    const census_result r = tribon_census(10000);
    for (const auto& [tri, count] : r.tribons) {
        CAPTURE(tri);
        CHECK(admissible_tribons().count(tri) == 1);
        CHECK(count > 0);
    }
    CHECK(r.tribons.size() == 20); // every admissible tribon is attained
    for (const auto& [dou, count] : r.doublets) {
        CAPTURE(dou);
        CHECK(admissible_doublets().count(dou) == 1);
    }
    CHECK(r.doublets.size() == 11);
    for (const auto& [tri, ctxs] : r.contexts) CHECK(!ctxs.empty());
}
