#include "doctest.h"
#include "elastoscat/config.hpp"
#include "elastoscat/runner.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace elast;

TEST_CASE("config parsing: defaults, overrides, validation") {
    RunConfig c = parse_config("{}");
    CHECK(c.n == 256);
    CHECK(c.medium.omega() == 2.0);

    RunConfig c2 = parse_config(
        R"({"medium": {"omega": 4.0}, "regularity": {"H0": 0.01},
            "discretization": {"n": 64}})");
    CHECK(c2.medium.omega() == 4.0);
    CHECK(c2.n == 64);

    CHECK_THROWS_AS(parse_config("{"), invalid_input);
    CHECK_THROWS_AS(parse_config(R"({"bogus": 1})"), invalid_input);
    CHECK_THROWS_AS(parse_config(R"({"medium": {"nu": 0.3}})"), invalid_input);
    CHECK_THROWS_AS(parse_config(R"({"discretization": {"n": 31}})"), invalid_input);
    CHECK_THROWS_AS(parse_config(R"({"medium": {"mu": -1.0}})"), invalid_input);
    CHECK_THROWS_AS(parse_config(R"({"geometry": {"family": "blob"}})"), invalid_input);
    CHECK_THROWS_AS(parse_config(R"({"geometry": {"family": "disc", "r0": 5.0}})"),
                    invalid_input);  // leaves B_R
}

TEST_CASE("field-level diagnostics name the offending key") {
    try {
        parse_config(R"({"sweep": {"amplitudes": "nope"}})");
        FAIL("expected a throw");
    } catch (const invalid_input& e) {
        CHECK(std::string(e.what()).find("sweep.amplitudes") != std::string::npos);
    }
    try {
        parse_config(R"({"incident": {"kind": "shear"}})");
        FAIL("expected a throw");
    } catch (const invalid_input& e) {
        CHECK(std::string(e.what()).find("incident.kind") != std::string::npos);
    }
}

TEST_CASE("config echo round trip reproduces outputs bit-identically") {
    RunConfig cfg = parse_config(R"({
        "geometry": {"family": "disc", "r0": 1.0},
        "discretization": {"n": 64, "directions": 90},
        "seed": 5,
        "output": "/tmp/elastoscat_test_ff1.csv"
    })");
    run_subcommand("farfield", cfg);
    std::ifstream f1("/tmp/elastoscat_test_ff1.csv");
    std::stringstream s1;
    s1 << f1.rdbuf();

    // rebuild the config from the echoed header and rerun
    RunConfig cfg2 = parse_config(extract_config_echo(s1.str()));
    cfg2.output = "/tmp/elastoscat_test_ff2.csv";
    run_subcommand("farfield", cfg2);
    std::ifstream f2("/tmp/elastoscat_test_ff2.csv");
    std::stringstream s2;
    s2 << f2.rdbuf();

    // identical apart from the echoed output path
    std::string a = s1.str(), b = s2.str();
    auto strip_echo = [](std::string& t) {
        std::size_t p = t.find('\n');
        t = t.substr(p + 1);
    };
    strip_echo(a);
    strip_echo(b);
    CHECK(a == b);
    std::remove("/tmp/elastoscat_test_ff1.csv");
    std::remove("/tmp/elastoscat_test_ff2.csv");
}

TEST_CASE("verify suite holds on the default seed") {
    auto rows = run_verify_suite(7);
    CHECK(rows.size() > 100);
    for (const VerifyRow& r : rows) CHECK(r.holds);
}

TEST_CASE("distances subcommand requires geometry2") {
    RunConfig cfg = parse_config(R"({"output": "/tmp/elastoscat_test_d.csv"})");
    CHECK_THROWS_AS(run_subcommand("distances", cfg), invalid_input);
    RunConfig cfg2 = parse_config(R"({
        "geometry": {"family": "disc", "r0": 1.0},
        "geometry2": {"family": "disc", "r0": 1.5},
        "output": "/tmp/elastoscat_test_d.csv"
    })");
    run_subcommand("distances", cfg2);
    std::ifstream f("/tmp/elastoscat_test_d.csv");
    std::stringstream ss;
    ss << f.rdbuf();
    std::size_t pos = ss.str().find("d_tilde,");
    REQUIRE(pos != std::string::npos);
    double dt = std::stod(ss.str().substr(pos + 8));
    CHECK(dt == doctest::Approx(0.5).epsilon(1e-3));
    std::remove("/tmp/elastoscat_test_d.csv");
}

TEST_CASE("unknown subcommand is rejected") {
    RunConfig cfg = parse_config("{}");
    CHECK_THROWS_AS(run_subcommand("frobnicate", cfg), invalid_input);
}
