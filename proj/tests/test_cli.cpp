#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dirichlet/cli.hpp"

namespace {

const std::string corpus = DIRICHLET_CORPUS_DIR;
const std::string bundles = corpus + "/bundles/";
const std::string maps = corpus + "/maps/";

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    args.insert(args.begin(), "dirichlet");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = dirichlet::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("eval-dirichlet", "[cli]") {
    auto r = cli({"eval-dirichlet", "--bundle", bundles + "b23.json", "--size", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "13\n");
    for (std::string m : {"sum", "hom", "limit", "pullback", "slice"}) {
        auto rm = cli({"eval-dirichlet", "--bundle", bundles + "b23.json", "--size", "2", "--method", m});
        CHECK(rm.code == 0);
        CHECK(rm.out == "13\n");
    }
    auto el = cli({"eval-dirichlet", "--bundle", bundles + "b2.json", "--size", "1", "--elements"});
    CHECK(el.out == "2\n0: (0, [0])\n1: (0, [1])\n");
    auto machine = cli({"--format", "machine", "eval-dirichlet", "--bundle", bundles + "b23.json", "--size", "2"});
    CHECK(nlohmann::json::parse(machine.out)["size"] == 13);
}

TEST_CASE("eval-poly", "[cli]") {
    auto r = cli({"eval-poly", "--bundle", bundles + "b23.json", "--size", "2"});
    CHECK(r.out == "12\n");
    auto c = cli({"eval-poly", "--bundle", bundles + "b23.json", "--size", "2", "--method", "composite"});
    CHECK(c.out == "12\n");
}

TEST_CASE("series and eval-series", "[cli]") {
    auto r = cli({"series", "--bundle", bundles + "b233.json", "--kind", "dirichlet"});
    CHECK(r.code == 0);
    CHECK(r.out == "2^X + 2·3^X\n");
    auto p = cli({"series", "--bundle", bundles + "b233.json", "--kind", "polynomial"});
    CHECK(p.out == "2·X^3 + X^2\n");
    auto m = cli({"--format", "machine", "series", "--bundle", bundles + "b233.json"});
    CHECK(nlohmann::json::parse(m.out) == nlohmann::json::parse(R"({"kind":"dirichlet","coefficients":{"2":1,"3":2}})"));
    CHECK(cli({"eval-series", "--bundle", bundles + "b233.json", "--x", "2"}).out == "22\n");
}

TEST_CASE("enum-maps and enum-nats", "[cli]") {
    auto r = cli({"enum-maps", "--src", bundles + "b2.json", "--dst", bundles + "b13.json", "--count-only"});
    CHECK(r.out == "10\n");
    auto c = cli({"enum-maps", "--src", bundles + "b2.json", "--dst", bundles + "b13.json", "--variant",
                  "contravariant", "--count-only"});
    CHECK(c.out == "10\n");
    auto k = cli({"enum-maps", "--src", bundles + "b3.json", "--dst", bundles + "b3.json", "--variant", "cartesian",
                  "--count-only"});
    CHECK(k.out == "6\n");
    auto n = cli({"enum-nats", "--src", bundles + "b2.json", "--dst", bundles + "b13.json", "--probe-max", "2",
                  "--count-only"});
    CHECK(n.code == 0);
    CHECK(n.out == "10 natural families, 10 bundle maps (probe 2)\n");
}

TEST_CASE("factor and check", "[cli]") {
    auto f = cli({"--format", "machine", "factor", "--map", maps + "point_1_2.json"});
    REQUIRE(f.code == 0);
    auto j = nlohmann::json::parse(f.out);
    CHECK(j["vertical"]["total_map"] == nlohmann::json::array({0}));
    CHECK(j["cartesian"]["total_map"] == nlohmann::json::array({0, 1}));

    CHECK(cli({"check", "--property", "commutes", "--map", maps + "incl_2_13.json"}).code == 0);
    auto broken = cli({"check", "--property", "commutes", "--map", maps + "broken_square.json"});
    CHECK(broken.code == 1);
    CHECK(broken.out.find("does not commute") != std::string::npos);

    auto cart = cli({"check", "--property", "cartesian", "--map", maps + "incl_2_13.json"});
    CHECK(cart.code == 1);
    CHECK(cart.out.find("by_bundle false, by_probe false") != std::string::npos);
    CHECK(cli({"check", "--property", "cartesian", "--map", maps + "bij_3_13.json"}).code == 0);
    CHECK(cli({"check", "--property", "naturality", "--map", maps + "incl_2_13.json"}).code == 0);
    CHECK(cli({"check", "--property", "connected-limits", "--bundle", bundles + "b23.json", "--probe-max", "2"}).code ==
          0);
}

TEST_CASE("compose-pd and adjoints", "[cli]") {
    auto r = cli({"compose-pd", "--p", bundles + "b2.json", "--d", bundles + "b2.json"});
    CHECK(r.out == "[4]\n");
    auto s = cli({"compose-pd", "--p", bundles + "b2.json", "--d", bundles + "b2.json", "--size", "3"});
    CHECK(s.code == 0);
    CHECK(s.out == "[4]\n64 = 64\n");
    auto a = cli({"adjoints", "--bundle", bundles + "b020.json", "--set", "2"});
    CHECK(a.out == "dom 2\ncod 3\nzc [0,2]\nconst [1,1]\nbang_up [0,0]\nbang_down [2]\n");
}

TEST_CASE("adjunction-check", "[cli]") {
    auto ok = cli({"adjunction-check", "--pair", "dom-bangdown", "--max-size", "2"});
    CHECK(ok.code == 0);
    auto z = cli({"adjunction-check", "--pair", "zc-bangup", "--max-size", "2"});
    CHECK(z.code == 1);
    CHECK(z.out.find("counterexample: fibers [1], X=0") != std::string::npos);
}

TEST_CASE("verify", "[cli]") {
    auto r = cli({"verify", "--max-size", "2", "--corpus", corpus + "/bundles"});
    INFO(r.out << r.err);
    CHECK(r.code == 0);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(r.out.find("[PASS] adjunctions") != std::string::npos);
    auto one = cli({"verify", "--max-size", "1", "--check", "series"});
    CHECK(one.code == 0);
    CHECK(one.out.rfind("[PASS] series", 0) == 0);
    CHECK(cli({"verify", "--check", "nonsense"}).code == 2);
}

TEST_CASE("error exit codes", "[cli]") {
    auto missing = cli({"eval-dirichlet", "--bundle", "/nonexistent.json", "--size", "1"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("/nonexistent.json") != std::string::npos);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"eval-dirichlet", "--bundle", bundles + "b23.json", "--size", "2", "--method", "kan"}).code == 2);

    auto capped = cli({"--cap", "5", "eval-dirichlet", "--bundle", bundles + "b23.json", "--size", "3", "--method",
                       "limit"});
    CHECK(capped.code == 3);
    CHECK(capped.err.find("EnumerationCapExceeded") != std::string::npos);

    // Sizes are computed exactly even when materializing would trip the cap.
    CHECK(cli({"--cap", "5", "eval-dirichlet", "--bundle", bundles + "b23.json", "--size", "3"}).out == "35\n");
}

TEST_CASE("cap from the environment", "[cli]") {
    ::setenv("DIRICHLET_ENUM_CAP", "5", 1);
    auto capped = cli({"eval-dirichlet", "--bundle", bundles + "b23.json", "--size", "3", "--method", "hom"});
    ::unsetenv("DIRICHLET_ENUM_CAP");
    CHECK(capped.code == 3);
}

TEST_CASE("output is deterministic", "[cli]") {
    std::vector<std::string> args{"enum-maps", "--src", bundles + "b2.json", "--dst", bundles + "b13.json"};
    CHECK(cli(args).out == cli(args).out);
}
