#include "nhchain/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace nhchain {

namespace {

void reject_unknown(const json& j, const std::vector<std::string>& allowed,
                    const std::string& scope) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      throw ConfigError("unknown key '" + it.key() + "' in " + scope);
  }
}

double num(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw ConfigError(std::string("key '") + key + "' must be a number");
  return j[key].get<double>();
}

}  // namespace

RunConfig parse_config(const json& j, const std::vector<std::string>& allowed_options) {
  if (!j.is_object()) throw ConfigError("config root must be an object");
  reject_unknown(j, {"model", "options", "seed"}, "config root");

  RunConfig cfg;
  if (j.contains("model")) {
    const json& m = j["model"];
    if (!m.is_object()) throw ConfigError("'model' must be an object");
    reject_unknown(m, {"t0", "t1R", "t1L", "t2", "eps0", "N"}, "model");
    cfg.params.t0 = num(m, "t0", cfg.params.t0);
    cfg.params.t1R = num(m, "t1R", cfg.params.t1R);
    cfg.params.t1L = num(m, "t1L", cfg.params.t1L);
    cfg.params.t2 = num(m, "t2", cfg.params.t2);
    cfg.params.eps0 = num(m, "eps0", cfg.params.eps0);
    if (m.contains("N")) {
      if (!m["N"].is_number_integer() || m["N"].get<long long>() < 1)
        throw ConfigError("'N' must be a positive integer");
      cfg.params.N = m["N"].get<int>();
    }
  }
  if (j.contains("options")) {
    if (!j["options"].is_object()) throw ConfigError("'options' must be an object");
    reject_unknown(j["options"], allowed_options, "options");
    cfg.options = j["options"];
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() || j["seed"].get<long long>() < 0)
      throw ConfigError("'seed' must be a nonnegative integer");
    cfg.seed = j["seed"].get<unsigned>();
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path,
                           const std::vector<std::string>& allowed_options) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return parse_config(j, allowed_options);
}

json params_to_json(const ModelParams& p) {
  return json{{"t0", p.t0},   {"t1R", p.t1R},   {"t1L", p.t1L},
              {"t2", p.t2},   {"eps0", p.eps0}, {"N", p.N}};
}

json ResultEnvelope::to_json() const {
  return json{{"config", config},
              {"tool_version", tool_version},
              {"command", command},
              {"payload", payload},
              {"diagnostics", diagnostics}};
}

ResultEnvelope ResultEnvelope::from_json(const json& j) {
  ResultEnvelope e;
  e.config = j.at("config");
  e.tool_version = j.at("tool_version").get<std::string>();
  e.command = j.at("command").get<std::string>();
  e.payload = j.at("payload");
  e.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
  return e;
}

std::string ResultEnvelope::serialize() const { return to_json().dump(2) + "\n"; }

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string CsvTable::serialize() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

namespace {

struct Frame {
  double x0, x1, y0, y1;  // data range
  static constexpr int W = 640, H = 420, L = 60, R = 20, T = 30, B = 40;

  double px(double x) const { return L + (x - x0) / (x1 - x0 + 1e-300) * (W - L - R); }
  double py(double y) const { return H - B - (y - y0) / (y1 - y0 + 1e-300) * (H - T - B); }
};

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

}  // namespace

std::string svg_line_plot(const std::vector<double>& x,
                          const std::vector<std::vector<double>>& series,
                          const std::vector<std::string>& labels, const std::string& title,
                          bool log_y) {
  Frame f{};
  f.x0 = *std::min_element(x.begin(), x.end());
  f.x1 = *std::max_element(x.begin(), x.end());
  f.y0 = 1e300;
  f.y1 = -1e300;
  auto ty = [&](double v) { return log_y ? std::log10(std::max(v, 1e-300)) : v; };
  for (const auto& s : series)
    for (double v : s) {
      f.y0 = std::min(f.y0, ty(v));
      f.y1 = std::max(f.y1, ty(v));
    }
  std::ostringstream out;
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << Frame::W << "' height='" << Frame::H
      << "'>\n<rect width='100%' height='100%' fill='white'/>\n";
  out << "<text x='" << Frame::W / 2 << "' y='20' text-anchor='middle' font-size='14'>" << title
      << "</text>\n";
  out << "<rect x='" << Frame::L << "' y='" << Frame::T << "' width='" << Frame::W - Frame::L - Frame::R
      << "' height='" << Frame::H - Frame::T - Frame::B << "' fill='none' stroke='black'/>\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    out << "<polyline fill='none' stroke='" << kColors[s % 5] << "' stroke-width='1.5' points='";
    for (std::size_t i = 0; i < x.size() && i < series[s].size(); ++i)
      out << f.px(x[i]) << "," << f.py(ty(series[s][i])) << " ";
    out << "'/>\n";
    if (s < labels.size())
      out << "<text x='" << Frame::L + 8 << "' y='" << Frame::T + 16 + 16 * s << "' fill='"
          << kColors[s % 5] << "' font-size='12'>" << labels[s] << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string svg_heatmap(const std::vector<std::vector<double>>& values, const std::string& title) {
  const int rows = static_cast<int>(values.size());
  const int cols = rows ? static_cast<int>(values[0].size()) : 0;
  double lo = 1e300, hi = -1e300;
  for (const auto& r : values)
    for (double v : r) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  const double cw = 560.0 / std::max(cols, 1), ch = 360.0 / std::max(rows, 1);
  std::ostringstream out;
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='640' height='420'>\n"
      << "<rect width='100%' height='100%' fill='white'/>\n"
      << "<text x='320' y='20' text-anchor='middle' font-size='14'>" << title << "</text>\n";
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double t = (values[i][j] - lo) / (hi - lo + 1e-300);
      const int r = static_cast<int>(255 * t), b = static_cast<int>(255 * (1 - t));
      out << "<rect x='" << 40 + j * cw << "' y='" << 30 + i * ch << "' width='" << cw
          << "' height='" << ch << "' fill='rgb(" << r << ",60," << b << ")'/>\n";
    }
  out << "</svg>\n";
  return out.str();
}

}  // namespace nhchain
