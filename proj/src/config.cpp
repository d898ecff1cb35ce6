// SPDX-License-Identifier: Apache-2.0

#include "qemdist/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qem {

const char* to_string(ShotMode m) {
  return m == ShotMode::exact ? "exact" : "sampled";
}
const char* to_string(ExperimentKind k) {
  return k == ExperimentKind::nversion ? "nversion" : "consistency";
}
const char* to_string(Amplification a) {
  return a == Amplification::fold ? "fold" : "rate_scale";
}
const char* to_string(Boundary b) {
  return b == Boundary::open ? "open" : "periodic";
}
const char* to_string(PostprocessMode m) {
  return m == PostprocessMode::clip_renorm ? "clip_renorm" : "raw";
}
const char* to_string(ReportValue v) {
  return v == ReportValue::full_fit ? "full_fit" : "subset_mean";
}

void ExperimentConfig::validate() const {
  if (n_qubits < 2 || n_qubits > 12)
    throw std::invalid_argument("n_qubits must lie in [2, 12]");
  if (n_meas <= 0) throw std::invalid_argument("n_meas must be positive");
  if (!(duration > 0.0)) throw std::invalid_argument("t must be positive");
  if (j_range.empty() || b_range.empty() || m_range.empty())
    throw std::invalid_argument("parameter ranges must be non-empty");
  for (int m : m_range)
    if (m < 1) throw std::invalid_argument("Trotter numbers must be >= 1");
  if (scale_factors.empty() || scale_factors.front() != 1)
    throw std::invalid_argument("scale factors must start at 1");
  for (std::size_t i = 0; i < scale_factors.size(); ++i) {
    if (scale_factors[i] % 2 == 0)
      throw std::invalid_argument("scale factors must be odd");
    if (i > 0 && scale_factors[i] <= scale_factors[i - 1])
      throw std::invalid_argument("scale factors must be ascending");
  }
  noise.validate();
  const int k = static_cast<int>(scale_factors.size());
  if (subset_size < 2 || subset_size >= k)
    throw std::invalid_argument("L must satisfy 2 <= L < number of scale factors");
  if (strategies.empty()) throw std::invalid_argument("strategies must be non-empty");
  if (experiment == ExperimentKind::nversion && strategies.size() < 3)
    throw std::invalid_argument("n-version experiment needs >= 3 strategies");
}

ExperimentConfig ExperimentConfig::preset(const std::string& name) {
  ExperimentConfig c;
  c.n_qubits = 5;
  c.j_range = {1, 2, 3, 4};
  c.b_range = {1, 2, 3, 4};
  c.m_range = {5, 6, 7, 8, 9, 10};
  c.shot_mode = ShotMode::exact;
  if (name == "nversion_experiment") {
    c.experiment = ExperimentKind::nversion;
    c.strategies = {StrategyKind::linear, StrategyKind::richardson,
                    StrategyKind::exponential, StrategyKind::polyexp};
  } else if (name == "consistency_experiment") {
    c.experiment = ExperimentKind::consistency;
    c.strategies = {StrategyKind::linear, StrategyKind::richardson,
                    StrategyKind::exponential};
  } else {
    throw std::invalid_argument("unknown preset '" + name + "'");
  }
  return c;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<int> parse_int_list(const std::string& text) {
  // Accepts "1,2,3" and "1..4" (inclusive range), or a mix like "1..3,5".
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw std::invalid_argument("empty list item");
    const auto dots = item.find("..");
    if (dots != std::string::npos) {
      const int lo = std::stoi(item.substr(0, dots));
      const int hi = std::stoi(item.substr(dots + 2));
      if (hi < lo) throw std::invalid_argument("descending range " + item);
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(std::stoi(item));
    }
  }
  return out;
}

std::vector<StrategyKind> parse_strategies(const std::string& text) {
  std::vector<StrategyKind> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    const auto kind = strategy_from_string(item);
    if (!kind) throw std::invalid_argument("unknown strategy '" + item + "'");
    out.push_back(*kind);
  }
  return out;
}

}  // namespace

void ExperimentConfig::apply_text(const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "n_qubits") n_qubits = std::stoi(value);
      else if (key == "n_meas") n_meas = std::stoll(value);
      else if (key == "t") duration = std::stod(value);
      else if (key == "J_range") j_range = parse_int_list(value);
      else if (key == "B_range") b_range = parse_int_list(value);
      else if (key == "M_range") m_range = parse_int_list(value);
      else if (key == "scale_factors") scale_factors = parse_int_list(value);
      else if (key == "eps1") noise.eps1 = std::stod(value);
      else if (key == "eps2") noise.eps2 = std::stod(value);
      else if (key == "readout_flip") noise.readout_flip = std::stod(value);
      else if (key == "amplification") {
        if (value == "fold") amplification = Amplification::fold;
        else if (value == "rate_scale") amplification = Amplification::rate_scale;
        else throw std::invalid_argument("expected fold|rate_scale");
      } else if (key == "L") subset_size = std::stoi(value);
      else if (key == "strategies") strategies = parse_strategies(value);
      else if (key == "postprocess") {
        if (value == "clip_renorm") postprocess = PostprocessMode::clip_renorm;
        else if (value == "raw") postprocess = PostprocessMode::raw;
        else throw std::invalid_argument("expected clip_renorm|raw");
      } else if (key == "master_seed") master_seed = std::stoull(value);
      else if (key == "boundary") {
        if (value == "open") boundary = Boundary::open;
        else if (value == "periodic") boundary = Boundary::periodic;
        else throw std::invalid_argument("expected open|periodic");
      } else if (key == "shot_mode") {
        if (value == "exact") shot_mode = ShotMode::exact;
        else if (value == "sampled") shot_mode = ShotMode::sampled;
        else throw std::invalid_argument("expected exact|sampled");
      } else if (key == "experiment") {
        if (value == "nversion") experiment = ExperimentKind::nversion;
        else if (value == "consistency") experiment = ExperimentKind::consistency;
        else throw std::invalid_argument("expected nversion|consistency");
      } else if (key == "report_value") {
        if (value == "full_fit") report_value = ReportValue::full_fit;
        else if (value == "subset_mean") report_value = ReportValue::subset_mean;
        else throw std::invalid_argument("expected full_fit|subset_mean");
      } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception& e) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + " (" +
                                  key + "): " + e.what());
    }
  }
}

void ExperimentConfig::apply_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  apply_text(buf.str());
}

}  // namespace qem
