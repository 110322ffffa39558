#include <catch2/catch.hpp>

#include "srt/config.hpp"

using namespace srt;

TEST_CASE("config parsing accepts the documented keys", "[config]") {
  const auto c = FileConfig::parse(R"({
    "rate": 1.5,
    "snr_db": 12.0,
    "mer_db": 10.0,
    "n_relays": 4
  })");
  CHECK(c.rate == 1.5);
  CHECK(c.snr_db == 12.0);
  CHECK(c.mer_db == 10.0);
  CHECK(c.n_relays == 4);
  CHECK_FALSE(c.snr);
}

TEST_CASE("config parsing accepts gain arrays", "[config]") {
  const auto c = FileConfig::parse(R"({
    "sigma_sd2": 1.0, "sigma_se2": 0.5,
    "sigma_si2": [1.0, 2.0], "sigma_id2": [0.7, 0.9], "sigma_ie2": [0.4, 0.6]
  })");
  REQUIRE(c.sigma_si2);
  CHECK(c.sigma_si2->size() == 2);
  CHECK((*c.sigma_id2)[1] == 0.9);
}

TEST_CASE("unknown config keys are hard errors", "[config]") {
  CHECK_THROWS_AS(FileConfig::parse(R"({"rate": 1.0, "rat": 2.0, "snr_dbx": 3.0})"),
                  config_error);
  CHECK_THROWS_WITH(FileConfig::parse(R"({"rate": 1.0, "rat": 2.0, "snr_dbx": 3.0})"),
                    Catch::Contains("rat") && Catch::Contains("snr_dbx"));
  CHECK_THROWS_AS(FileConfig::parse("[1,2,3]"), config_error);
  CHECK_THROWS_AS(FileConfig::parse("{\"rate\": \"fast\"}"), config_error);
  CHECK_THROWS_AS(FileConfig::parse("not json"), config_error);
}

TEST_CASE("direct-transmission gain resolution", "[config]") {
  ScenarioInputs in;
  in.mer_db = 10.0;
  const ResolvedGains g = resolve_dt_gains(in);
  CHECK(g.sigma_main == 1.0);
  CHECK(g.sigma_eaves == Approx(0.1).epsilon(1e-12));
  REQUIRE(g.mer_db);
  CHECK(*g.mer_db == Approx(10.0).epsilon(1e-12));

  ScenarioInputs both;
  both.mer = 5.0;
  both.mer_db = 7.0;
  CHECK_THROWS_AS(resolve_dt_gains(both), config_error);

  ScenarioInputs explicit_gains;
  explicit_gains.sigma_sd2 = 4.0;
  explicit_gains.sigma_se2 = 2.0;
  const ResolvedGains g2 = resolve_dt_gains(explicit_gains);
  CHECK(g2.sigma_main == 4.0);
  CHECK(*g2.mer_db == Approx(10.0 * std::log10(2.0)).epsilon(1e-12));

  ScenarioInputs half;
  half.sigma_sd2 = 4.0;
  CHECK_THROWS_WITH(resolve_dt_gains(half), Catch::Contains("sigma_se2"));

  CHECK_THROWS_AS(resolve_dt_gains(ScenarioInputs{}), config_error);
}

TEST_CASE("profile resolution lists every missing array at once", "[config]") {
  ScenarioInputs in;
  in.sigma_sd2 = 1.0;
  CHECK_THROWS_WITH(resolve_profile(in),
                    Catch::Contains("sigma_se2") && Catch::Contains("sigma_si2") &&
                        Catch::Contains("sigma_id2") && Catch::Contains("sigma_ie2"));

  ScenarioInputs iid;
  iid.mer_db = 5.0;
  CHECK_THROWS_WITH(resolve_profile(iid), Catch::Contains("n_relays"));

  iid.n_relays = 3;
  const ResolvedProfile rp = resolve_profile(iid);
  CHECK(rp.profile.relay_count() == 3);
  CHECK(rp.profile.sigma_se2 == Approx(1.0 / 3.1622776601683795).epsilon(1e-12));

  ScenarioInputs zero;
  zero.mer_db = 5.0;
  zero.n_relays = 0;
  CHECK(resolve_profile(zero).profile.relay_count() == 0);

  ScenarioInputs arrays;
  arrays.sigma_sd2 = 1.0;
  arrays.sigma_se2 = 0.5;
  arrays.sigma_si2 = std::vector<double>{1.0, 2.0};
  arrays.sigma_id2 = std::vector<double>{1.0, 1.0};
  arrays.sigma_ie2 = std::vector<double>{0.3, 0.4};
  CHECK(resolve_profile(arrays).profile.relay_count() == 2);
  arrays.n_relays = 3;
  CHECK_THROWS_AS(resolve_profile(arrays), config_error);
  arrays.n_relays = 2;
  arrays.mer_db = 10.0;
  CHECK_THROWS_AS(resolve_profile(arrays), config_error);
}

TEST_CASE("threshold resolution", "[config]") {
  ScenarioInputs in;
  in.snr_db = 0.0;
  const ResolvedThresholds a = resolve_thresholds(in);
  CHECK(a.rate == 1.0);  // default rate
  CHECK(a.snr == Approx(1.0).epsilon(1e-12));
  CHECK(a.thr.delta == Approx(3.0).epsilon(1e-12));

  ScenarioInputs d;
  d.delta = 0.1;
  const ResolvedThresholds b = resolve_thresholds(d);
  CHECK(b.thr.delta == Approx(0.1).epsilon(1e-12));
  CHECK(b.thr.alpha == Approx(0.1 / 3.0).epsilon(1e-12));

  ScenarioInputs conflict;
  conflict.snr = 2.0;
  conflict.snr_db = 3.0;
  CHECK_THROWS_AS(resolve_thresholds(conflict), config_error);

  ScenarioInputs both;
  both.snr = 2.0;
  both.delta = 0.1;
  CHECK_THROWS_AS(resolve_thresholds(both), config_error);

  CHECK_THROWS_AS(resolve_thresholds(ScenarioInputs{}), config_error);
}

TEST_CASE("flags override file values", "[config]") {
  ScenarioInputs merged = ScenarioInputs::from_file(FileConfig::parse(R"({
    "rate": 2.0, "snr_db": 10.0, "mer_db": 5.0, "n_relays": 2
  })"));
  ScenarioInputs flags;
  flags.snr = 4.0;  // replaces the file's dB form entirely
  flags.n_relays = 6;
  merged.overlay(flags);
  CHECK_FALSE(merged.snr_db);
  CHECK(merged.snr == 4.0);
  CHECK(merged.rate == 2.0);
  CHECK(merged.n_relays == 6);
  const ResolvedThresholds t = resolve_thresholds(merged);
  CHECK(t.snr == 4.0);
}
