#include "ffp/serialize.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace ffp;

TEST_CASE("rationals") {
    CHECK(rational_to_json(Rational(8, 3)) == "8/3");
    CHECK(rational_to_json(Rational(-4)) == "-4");
    CHECK(rational_from_json(Json("6/4")) == Rational(3, 2));
    CHECK(rational_from_json(Json(7)) == 7);
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(Json("abc")), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(Json(1.5)), std::invalid_argument);
}

TEST_CASE("combinatorial values round trip") {
    const Partition p{3, 1, 1};
    CHECK(partition_to_json(p) == Json::parse("[3,1,1]"));
    CHECK(partition_from_json(partition_to_json(p)) == p);
    CHECK_THROWS_AS(partition_from_json(Json::parse("[1,2]")), std::invalid_argument);
    CHECK_THROWS_AS(partition_from_json(Json::parse("\"x\"")), std::invalid_argument);
    const SetPartition sp({{1, 3}, {2}});
    CHECK(set_partition_from_json(set_partition_to_json(sp)) == sp);
    CHECK_THROWS_AS(set_partition_from_json(Json::parse("[[1],[1]]")), std::invalid_argument);
    const Spectrum s{Rational(1, 2), -3};
    CHECK(spectrum_from_json(spectrum_to_json(s)) == s);
    CHECK_THROWS_AS(spectrum_from_json(Json::parse("[]")), std::invalid_argument);
}

TEST_CASE("polynomials") {
    const MonicPoly p({1, 0, Rational(-8, 3)});
    const Json j = poly_to_json(p);
    CHECK(j["d"] == 2);
    CHECK(j["a"] == Json::parse(R"(["1","0","-8/3"])"));
    CHECK(poly_from_json(j) == p);
    Json extra = j;
    extra["signed"] = "whatever";
    CHECK(poly_from_json(extra) == p);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"d":3,"a":["1","0"]})")), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"d":1,"a":["2","0"]})")), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"a":["1","0"]})")), std::invalid_argument);
}

TEST_CASE("expansions, class functions, matrices and character tables") {
    const SymExpansion e = e_to_m(Partition{2, 2, 1});
    CHECK(expansion_from_json(expansion_to_json(e)) == e);
    for (int k = 1; k <= 4; ++k) {
        const ClassFunction& wg = weingarten(k, 5);
        const Json j = weingarten_to_json(wg, 5);
        CHECK(j["d"] == 5);
        CHECK(class_function_from_json(j) == wg);
    }
    Json missing = weingarten_to_json(weingarten(2, 3), 3);
    missing["values"].erase(0);
    CHECK_THROWS_AS(class_function_from_json(missing), std::invalid_argument);
    const RationalMatrix m({{1, Rational(1, 2)}, {0, -3}});
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1","2"],["3"]])")), std::invalid_argument);
    for (int k = 1; k <= 5; ++k) {
        const CharacterTable t = character_table(k);
        const CharacterTable back = character_table_from_json(character_table_to_json(t));
        for (const auto& lambda : t.irreps)
            for (const auto& rho : t.irreps) CHECK(back.at(lambda, rho) == t.at(lambda, rho));
    }
}

TEST_CASE("doubles and Monte Carlo reports") {
    for (double x : {0.0, 1.0, -2.5, 1.0 / 3.0, 2.6666666666666665, 1e-300, std::numeric_limits<double>::max()})
        CHECK(parse_double(format_double(x)) == x);
    CHECK(format_double(0.1) == "0.1");
    CHECK_THROWS_AS(parse_double("1.0x"), std::invalid_argument);
    McReport r;
    r.labels = {"e0", "e1"};
    r.mean = {1.0, 1.0 / 3.0};
    r.std_error = {0.0, 0.0123};
    r.samples = 10;
    r.seed = 7;
    r.chunk_size = 5;
    r.max_unitarity_residual = 3e-16;
    const McReport back = mc_report_from_json(mc_report_to_json(r));
    CHECK(back.labels == r.labels);
    CHECK(back.mean == r.mean);
    CHECK(back.std_error == r.std_error);
    CHECK(back.samples == 10);
    CHECK(back.seed == 7);
    CHECK(back.chunk_size == 5);
    CHECK(back.max_unitarity_residual == r.max_unitarity_residual);
    CHECK(mc_report_to_json(back).dump() == mc_report_to_json(r).dump());
}

TEST_CASE("JSON parsing errors") {
    CHECK_THROWS_AS(parse_json("{"), std::invalid_argument);
    CHECK(parse_json("[1]") == Json::parse("[1]"));
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), std::invalid_argument);
}
