#include "doctest.h"
#include "elastoscat/experiments.hpp"

#include <cmath>
#include <sstream>

using namespace elast;

namespace {

SweepConfig small_sweep() {
    SweepConfig cfg;
    cfg.medium = ElasticMedium(2.0, 1.0, 1.0, 2.0);
    cfg.amplitudes = {0.0, 0.005, 0.01, 0.02};
    cfg.n = 64;
    cfg.directions = 96;
    cfg.probe_count = 80;
    cfg.distance_samples = 512;
    cfg.reg.H0 = 0.09;
    cfg.reg.R = 2.0;
    cfg.seed = 11;
    return cfg;
}

}  // namespace

TEST_CASE("sweep: zero amplitude record, monotone errors, closeness bookkeeping") {
    SweepResult res = stability_sweep(small_sweep());
    REQUIRE(res.records.size() == 4);
    const ExperimentRecord& z = res.records[0];
    CHECK(z.amplitude == 0.0);
    CHECK(z.d_tilde == 0.0);
    CHECK(z.eps0 <= 10.0 * z.residual);
    for (std::size_t i = 1; i < res.records.size(); ++i) {
        CHECK(res.records[i].eps0 > res.records[i - 1].eps0);
        CHECK(res.records[i].d_tilde > res.records[i - 1].d_tilde);
        CHECK(res.records[i].eps_near <= res.records[i].eps_annulus * (1.0 + 1e-12));
        CHECK(res.records[i].closeness_ok);
        CHECK(res.records[i].sym_diff_area <= small_sweep().reg.H0);
    }
}

TEST_CASE("sweep input validation") {
    SweepConfig cfg = small_sweep();
    cfg.amplitudes = {0.01, 0.02};
    CHECK_THROWS_AS(stability_sweep(cfg), invalid_input);  // must start at 0
    cfg.amplitudes = {0.0, 0.02, 0.02};
    CHECK_THROWS_AS(stability_sweep(cfg), invalid_input);  // strictly ascending
    cfg = small_sweep();
    cfg.reg.H0 = 1e9;
    CHECK_THROWS_AS(stability_sweep(cfg), invalid_input);  // H0 >= H1
}

TEST_CASE("loglog fit recovers its own model class") {
    // synthetic records from d = 2 (log log(1/eps0))^{-1/2}
    std::vector<ExperimentRecord> recs;
    for (double eps0 : {1e-3, 1e-4, 1e-6, 1e-9, 1e-13}) {
        ExperimentRecord r{};
        r.eps0 = eps0;
        r.d_tilde = 2.0 * std::pow(std::log(std::log(1.0 / eps0)), -0.5);
        r.closeness_ok = true;
        recs.push_back(r);
    }
    LogLogFit fit = loglog_fit(recs);
    CHECK(fit.C_fit == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(fit.beta_fit == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(fit.residual < 1e-9);
    CHECK(!fit.degenerate);
    // upper-bound consistency on the fitted records
    for (const ExperimentRecord& r : recs) {
        double pred = fit.C_fit *
                      std::pow(std::log(std::log(1.0 / r.eps0)), -fit.beta_fit);
        CHECK(r.d_tilde <= pred * (1.0 + fit.residual + 1e-9));
    }
}

TEST_CASE("loglog fit flags degenerate data and refuses short inputs") {
    std::vector<ExperimentRecord> recs;
    for (double eps0 : {1e-3, 1e-5, 1e-8, 1e-12}) {
        ExperimentRecord r{};
        r.eps0 = eps0;
        r.d_tilde = 0.25;  // constant distances
        r.closeness_ok = true;
        recs.push_back(r);
    }
    LogLogFit fit = loglog_fit(recs);
    CHECK(fit.degenerate);
    CHECK(std::abs(fit.beta_fit) < 1e-8);

    recs.resize(3);
    CHECK_THROWS_AS(loglog_fit(recs), invalid_input);
    // records outside the double-log domain do not count
    std::vector<ExperimentRecord> big(6);
    for (auto& r : big) {
        r.eps0 = 0.5;
        r.d_tilde = 0.1;
        r.closeness_ok = true;
    }
    CHECK_THROWS_AS(loglog_fit(big), invalid_input);
}

TEST_CASE("far-to-near table keeps eps below eps1") {
    SweepResult res = stability_sweep(small_sweep());
    auto rows = far_to_near_comparison(res.records);
    REQUIRE(rows.size() == res.records.size());
    for (const auto& r : rows) CHECK(r.eps_near <= r.eps_annulus * (1.0 + 1e-12));
    // monotone co-trend across the sweep
    for (std::size_t i = 2; i < rows.size(); ++i) {
        CHECK(rows[i].eps0 > rows[i - 1].eps0);
        CHECK(rows[i].eps_annulus > rows[i - 1].eps_annulus);
    }
}

TEST_CASE("record csv is deterministic for a fixed seed") {
    SweepResult a = stability_sweep(small_sweep());
    SweepResult b = stability_sweep(small_sweep());
    std::ostringstream sa, sb;
    write_records_csv(sa, a.records, "run");
    write_records_csv(sb, b.records, "run");
    CHECK(sa.str() == sb.str());
}
