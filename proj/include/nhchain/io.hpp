#pragma once
// Configuration parsing, result envelopes, and the CSV/SVG emitters used by
// the command-line tools.  CSV: UTF-8, comma separated, header row, LF line
// endings, floats at 17 significant digits.

#include "nhchain/model.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace nhchain {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  ModelParams params;
  json options = json::object();  // command-specific knobs
  unsigned seed = 12345;
};

// Parses {"model": {...}, "options": {...}, "seed": ...}; unknown keys at
// either level are rejected.  allowed_options lists the option keys the
// calling command accepts.
RunConfig parse_config(const json& j, const std::vector<std::string>& allowed_options);
RunConfig load_config_file(const std::string& path, const std::vector<std::string>& allowed_options);

json params_to_json(const ModelParams& p);

struct ResultEnvelope {
  json config = json::object();
  std::string tool_version = kToolVersion;
  std::string command;
  json payload = json::object();
  std::vector<std::string> diagnostics;

  json to_json() const;
  static ResultEnvelope from_json(const json& j);
  std::string serialize() const;  // stable formatting; reparse+reserialize is byte-identical
};

// 17 significant digits, round-trip safe.
std::string format_double(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::initializer_list<std::string> cells) { rows.emplace_back(cells); }
  std::string serialize() const;
};

void write_text_file(const std::string& path, const std::string& content);

// Minimal dependency-free SVG emitters (line plot / heat map).
std::string svg_line_plot(const std::vector<double>& x,
                          const std::vector<std::vector<double>>& series,
                          const std::vector<std::string>& labels, const std::string& title,
                          bool log_y = false);
std::string svg_heatmap(const std::vector<std::vector<double>>& values, const std::string& title);

}  // namespace nhchain
