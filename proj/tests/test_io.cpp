#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nhchain/io.hpp"

#include <cmath>

using namespace nhchain;

TEST_CASE("config parsing: values land, defaults hold, unknown keys rejected") {
  const json j = {
      {"model", {{"t0", 1.0}, {"t1R", 3.5}, {"t1L", 2.5}, {"t2", 1.3}, {"eps0", 0.0}, {"N", 100}}},
      {"options", {{"samples", 256}}},
      {"seed", 7}};
  const RunConfig cfg = parse_config(j, {"samples"});
  CHECK(cfg.params.t1R == 3.5);
  CHECK(cfg.params.N == 100);
  CHECK(cfg.seed == 7u);
  CHECK(cfg.options.at("samples") == 256);

  json top = j;
  top["extra"] = 1;
  CHECK_THROWS_AS(parse_config(top, {"samples"}), ConfigError);

  json model = j;
  model["model"]["t3"] = 0.1;
  CHECK_THROWS_AS(parse_config(model, {"samples"}), ConfigError);

  json opt = j;
  opt["options"]["smaples"] = 1;  // typo must be caught, not ignored
  CHECK_THROWS_AS(parse_config(opt, {"samples"}), ConfigError);
}

TEST_CASE("result envelope round-trips byte-identically") {
  ResultEnvelope env;
  env.command = "skin";
  env.config = {{"model", params_to_json(ModelParams{1.0, 3.5, 2.5, 1.3, 0.0, 100})}};
  env.payload = {{"rows", json::array({{{"theta", 0.1}, {"alpha", -0.02}}})}};
  env.diagnostics = {"note"};
  const std::string once = env.serialize();
  const ResultEnvelope back = ResultEnvelope::from_json(json::parse(once));
  CHECK(back.serialize() == once);
  CHECK(back.command == "skin");
  CHECK(back.tool_version == kToolVersion);
  CHECK(back.diagnostics.size() == 1);
}

TEST_CASE("doubles serialize at 17 significant digits and round-trip") {
  for (double v : {1.0 / 3.0, 0.33985834473852207, -1e-300, 6.02214076e23, 0.0}) {
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("csv serialization: header, LF endings, stable layout") {
  CsvTable t{{"a", "b"}, {}};
  t.add_row({"1", "2"});
  t.add_row({format_double(0.5), "x"});
  CHECK(t.serialize() == "a,b\n1,2\n0.5,x\n");
}

TEST_CASE("svg emitters produce well-formed documents") {
  const std::string line =
      svg_line_plot({0.0, 1.0, 2.0}, {{1.0, 4.0, 2.0}}, {"y"}, "demo", false);
  CHECK(line.find("<svg") != std::string::npos);
  CHECK(line.rfind("</svg>") != std::string::npos);
  const std::string hm = svg_heatmap({{0.0, 1.0}, {1.0, 0.5}}, "demo");
  CHECK(hm.find("<svg") != std::string::npos);
  CHECK(hm.rfind("</svg>") != std::string::npos);
}
