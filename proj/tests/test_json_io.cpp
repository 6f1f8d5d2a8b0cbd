#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tamon/json_io.hpp"
#include "tamon/verify.hpp"

using namespace tamon;

TEST_CASE("multfunc roundtrip and strict keys") {
    Json j = Json::parse(R"({"0": 2, "1/4": 1, "3/4": 1})");
    MultFunc f = multfunc_from_json(j);
    CHECK(norm(f) == 4);
    CHECK(multfunc_to_json(f) == j);

    CHECK_THROWS_AS(multfunc_from_json(Json::parse(R"({"2/4": 1})")), ParseError);
    CHECK_THROWS_AS(multfunc_from_json(Json::parse(R"({"5/4": 1})")), ParseError);
    CHECK_THROWS_AS(multfunc_from_json(Json::parse(R"({"1/4": 0})")), ParseError);
    CHECK_THROWS_AS(multfunc_from_json(Json::parse(R"({"1/4": -1})")), ParseError);
    CHECK_THROWS_AS(multfunc_from_json(Json::parse(R"([1])")), ParseError);
}

TEST_CASE("intpoly roundtrip") {
    Json j = Json::parse(R"(["-1", "0", "0", "1"])");
    IntPoly p = intpoly_from_json(j);
    CHECK(p.degree() == 3);
    CHECK(intpoly_to_json(p) == j);
    CHECK_THROWS_AS(intpoly_from_json(Json::parse(R"(["x"])")), ParseError);
}

TEST_CASE("jordan spec roundtrip") {
    Json j = Json::parse(R"([{"exponent": "0", "size": 1, "count": 2},
                             {"exponent": "1/2", "size": 2, "count": 1}])");
    JordanSpec s = jordan_spec_from_json(j);
    CHECK(s.dimension() == 4);
    CHECK(jordan_spec_to_json(s) == j);
    CHECK_THROWS_AS(jordan_spec_from_json(Json::parse(R"([{"exponent": "0"}])")), ParseError);
}

TEST_CASE("cyclo matrix roundtrip") {
    Json j = Json::parse(R"({"N": 4, "rows": [[["0", "1"], ["0", "0"]],
                                              [["1", "0"], ["-1/2", "0"]]]})");
    CycloMatrix m = cyclo_matrix_from_json(j);
    CHECK(m.conductor() == 4);
    CHECK(m.at(0, 0) == CycloElem::root_of_unity(QZElem::make(1, 4), 4));
    CHECK(cyclo_matrix_to_json(m) == j);
    CHECK_THROWS_AS(cyclo_matrix_from_json(Json::parse(R"({"N": 4, "rows": [[["1"]]]})")),
                    ParseError);
}

TEST_CASE("abelian type roundtrip") {
    Json j = Json::parse(R"({
        "g": 2, "e": 2,
        "tor": {"1/2": 1},
        "ab": {"0": 1},
        "dual_ab": {"0": 1},
        "flags": {"residue_char_zero": true, "principally_polarized": false}
    })");
    AbelianType a = abelian_type_from_json(j);
    CHECK(validate(a).empty());
    CHECK(abelian_type_to_json(a) == j);
    CHECK_THROWS_AS(abelian_type_from_json(Json::parse(R"({"g": 1})")), ParseError);
}

TEST_CASE("verify report is deterministic") {
    VerifyCaps caps;
    caps.max_g = 2;
    caps.max_e = 6;
    std::string a = verify_report_to_json(verify_harness(11, 5, caps)).dump();
    std::string b = verify_report_to_json(verify_harness(11, 5, caps)).dump();
    CHECK(a == b);
}
