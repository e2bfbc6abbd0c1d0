#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fdsf/cli.hpp"
#include "fdsf/json_io.hpp"

using namespace fdsf;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("fdsf_" + name);
    std::ofstream f(path);
    f << content;
    return path.string();
}

}  // namespace

TEST_CASE("modorder reproduces the worked example") {
    CliRun r = run({"modorder", "--p", "2", "--n", "3", "--matrix", "0,5;1,2"});
    REQUIRE(r.code == kExitOk);
    json j = json::parse(r.out);
    CHECK(j["totalOrder"] == 8);
    CHECK(j["e"] == 2);
    CHECK(j["beta"] == 1);
    CHECK(j["method"] == "lifted");
    CHECK(j["minimalPolyModP"] == json::array({1, 0, 1}));

    // identical bytes on a second run
    CliRun again = run({"modorder", "--p", "2", "--n", "3", "--matrix", "0,5;1,2"});
    CHECK(again.out == r.out);

    CliRun spec = run({"modorder", "--spec", "2 3 2; 0,5; 1,2"});
    CHECK(spec.code == kExitOk);
    CHECK(json::parse(spec.out)["totalOrder"] == 8);

    CliRun direct = run({"modorder", "--p", "2", "--n", "3", "--matrix", "0,5;1,2",
                         "--method", "direct"});
    json dj = json::parse(direct.out);
    CHECK(dj["totalOrder"] == 8);
    CHECK(dj["method"] == "direct");
}

TEST_CASE("field reports the canonical modulus") {
    CliRun r = run({"field", "--p", "2", "--r", "3"});
    REQUIRE(r.code == kExitOk);
    json j = json::parse(r.out);
    CHECK(j["modulus"] == json::array({1, 1, 0, 1}));
    CHECK(j["elementCount"] == 8);
    CHECK(j["spec"] == "GF(2^3)/1,1,0,1");

    CliRun text = run({"field", "--spec", "GF(2^2)", "--format", "text"});
    CHECK(text.out.find("GF(2^2)/1,1,1") == 0);
}

TEST_CASE("exit codes distinguish failure classes") {
    CHECK(run({"field", "--p", "6", "--r", "2"}).code == kExitValidationError);
    CHECK(run({"modorder", "--p", "2", "--n", "3", "--matrix", "0,5;1"}).code == kExitParseError);
    CHECK(run({"nonsense"}).code == kExitParseError);
    CHECK(run({"--help"}).code == kExitOk);
    CHECK(run({"msorbits", "enumerate", "--p", "2", "--dim", "2", "--S", "0,1;1,0",
               "--M", "1,1;0,1"}).code == kExitValidationError);
    CHECK(run({"msorbits", "search", "--p", "2", "--dim", "2", "--S", "identity",
               "--budget", "7"}).code == kExitBudgetError);
    // reducible modulus
    CHECK(run({"field", "--p", "2", "--r", "2", "--modulus", "1,0,1"}).code ==
          kExitValidationError);
}

TEST_CASE("fds diagram renders dot and json") {
    StateSpace z22 = StateSpace::zm_vectors(2, 2);
    FunctionTable ident{z22, {0, 1, 2, 3}};
    std::string path = write_temp("identity4.json", function_table_to_json(ident).dump());

    CliRun dot = run({"fds", "diagram", "--input", path, "--format", "dot"});
    REQUIRE(dot.code == kExitOk);
    for (int i = 0; i < 4; ++i)
        CHECK(dot.out.find("n" + std::to_string(i) + " -> n" + std::to_string(i) +
                           " [style=bold];") != std::string::npos);

    CliRun j = run({"fds", "diagram", "--input", path});
    json rep = json::parse(j.out);
    CHECK(rep["componentCount"] == 4);
    CHECK(rep["order"] == 1);
    CHECK(rep["transientStates"] == 0);

    CHECK(run({"fds", "diagram", "--input", "/nonexistent.json"}).code == kExitParseError);
}

TEST_CASE("fds interpolate and conjugate") {
    FieldContext gf4 = make_extension_field(2, 2);
    FunctionTable ident{StateSpace::field(gf4), {0, 1, 2, 3}};
    std::string path = write_temp("field_ident.json", function_table_to_json(ident).dump());
    CliRun r = run({"fds", "interpolate", "--input", path});
    REQUIRE(r.code == kExitOk);
    json j = json::parse(r.out);
    CHECK(j["coeffs"] == json::array({json::array({0, 0}), json::array({1, 0})}));
    CHECK(j["degree"] == 1);

    FunctionTable idz4{StateSpace::zm_vectors(4, 1), {0, 1, 2, 3}};
    std::string path2 = write_temp("z4_ident.json", function_table_to_json(idz4).dump());
    CliRun c = run({"fds", "conjugate", "--input", path2, "--p", "2", "--n", "2"});
    REQUIRE(c.code == kExitOk);
    json cj = json::parse(c.out);
    CHECK(cj["map"] == json::array({0, 1, 2, 3}));
    CHECK(cj["space"]["kind"] == "Zm_vectors");
    CHECK(cj["space"]["m"] == 2);
    CHECK(cj["space"]["n"] == 2);
}

TEST_CASE("sds compose through the CLI") {
    json sds{{"m", 2},
             {"vertices", 2},
             {"edges", json::array({json::array({1, 2})})},
             {"schedule", json::array({1, 2})},
             {"locals",
              json::array({json{{"vertex", 1},
                                {"neighborhood", json::array({1, 2})},
                                {"rule", json::array({json::array({0, 0}), json::array({1, 0}),
                                                      json::array({2, 1}), json::array({3, 1})})}},
                           json{{"vertex", 2},
                                {"neighborhood", json::array({1, 2})},
                                {"rule", json::array({json::array({0, 0}), json::array({1, 1}),
                                                      json::array({2, 0}), json::array({3, 1})})}}}))}};
    std::string path = write_temp("sds_copy.json", sds.dump());
    CliRun r = run({"sds", "compose", "--input", path, "--analyze"});
    REQUIRE(r.code == kExitOk);
    json j = json::parse(r.out);
    // both coordinates end up equal to the original second coordinate
    CHECK(j["map"] == json::array({0, 0, 3, 3}));
    CHECK(j["diagram"]["order"] == 1);

    // a local reading a non-neighbor is rejected as a validation failure
    json bad = sds;
    bad["vertices"] = 3;
    bad["edges"] = json::array({json::array({1, 2})});
    bad["schedule"] = json::array({1, 2, 3});
    json third{{"vertex", 3},
               {"neighborhood", json::array({1, 3})},
               {"rule", json::array({json::array({0, 0}), json::array({1, 1}),
                                     json::array({2, 0}), json::array({3, 1})})}};
    bad["locals"].push_back(third);
    std::string bad_path = write_temp("sds_bad.json", bad.dump());
    CHECK(run({"sds", "compose", "--input", bad_path}).code == kExitValidationError);
}

TEST_CASE("linpoly analysis") {
    FieldContext gf4 = make_extension_field(2, 2);
    LinearizedPoly f = lp_from_prime_coeffs(gf4, {1, 1});  // x^p + x
    std::string path = write_temp("linpoly.json", linpoly_to_json(f).dump());
    CliRun r = run({"linpoly", "--input", path});
    REQUIRE(r.code == kExitOk);
    json j = json::parse(r.out);
    CHECK(j["invertible"] == false);
    CHECK(j["kernelDimension"] == 1);
    CHECK(j["inPrimeClass"] == true);
    CHECK(j["associate"] == json::array({1, 1}));
    CHECK(j["order"].is_null());
}

TEST_CASE("msorbits through the CLI") {
    CliRun r = run({"msorbits", "search", "--p", "2", "--dim", "2", "--S", "identity"});
    REQUIRE(r.code == kExitOk);
    json j = json::parse(r.out);
    CHECK(j["report"]["orbitCount"] == 2);
    CHECK(j["complete"] == true);

    CliRun ex = run({"msorbits", "search", "--p", "2", "--dim", "2", "--S", "identity",
                     "--exclude-zero"});
    CHECK(json::parse(ex.out)["report"]["orbitCount"] == 1);

    CliRun en = run({"msorbits", "enumerate", "--p", "2", "--dim", "2", "--S", "identity",
                     "--M", "0,1;1,1", "--format", "dot"});
    CHECK(en.out.find("digraph msorbits {") == 0);
}

TEST_CASE("json round trips") {
    FieldContext gf4 = make_extension_field(2, 2);
    LinearizedPoly l = lp_make(gf4, {gf4.from_index(2), gf4.from_index(3)});
    CHECK(linpoly_from_json(linpoly_to_json(l)) == l);

    FunctionTable f{StateSpace::field_vectors(gf4, 2), std::vector<std::int64_t>(16, 3)};
    FunctionTable f2 = function_table_from_json(function_table_to_json(f));
    CHECK(f2.space == f.space);
    CHECK(f2.map == f.map);

    ModMatrix a(2, 3, 2, {0, 5, 1, 2});
    CHECK(mod_matrix_from_json(mod_matrix_to_json(a)) == a);

    Bijection g = digit_bijection(3, 2);
    CHECK(bijection_from_json(bijection_to_json(g)).table == g.table);

    // a parse failure inside a schema is a validation error, reported with context
    CHECK_THROWS_AS(function_table_from_json(json{{"space", json{{"kind", "bogus"}}}}),
                    std::invalid_argument);
}
