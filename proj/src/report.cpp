// SPDX-License-Identifier: Apache-2.0

#include "qemdist/report.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qem {

using ordered_json = nlohmann::ordered_json;

ReportFormat report_format_from_string(const std::string& name) {
  if (name == "table") return ReportFormat::table;
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw std::invalid_argument("unknown format '" + name + "'");
}

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

ordered_json values_to_json(int n_bits, const std::map<std::uint64_t, double>& m) {
  ordered_json j = ordered_json::object();
  for (const auto& [z, v] : m) j[format_bitstring(z, n_bits)] = v;
  return j;
}

std::map<std::uint64_t, double> values_from_json(int n_bits, const ordered_json& j) {
  std::map<std::uint64_t, double> m;
  for (const auto& [key, v] : j.items())
    m[parse_bitstring(key, n_bits)] = v.get<double>();
  return m;
}

ordered_json config_to_json(const ExperimentConfig& c) {
  ordered_json j;
  j["n_qubits"] = c.n_qubits;
  j["n_meas"] = c.n_meas;
  j["t"] = c.duration;
  j["J_range"] = c.j_range;
  j["B_range"] = c.b_range;
  j["M_range"] = c.m_range;
  j["scale_factors"] = c.scale_factors;
  j["eps1"] = c.noise.eps1;
  j["eps2"] = c.noise.eps2;
  j["readout_flip"] = c.noise.readout_flip;
  j["amplification"] = to_string(c.amplification);
  j["L"] = c.subset_size;
  ordered_json strategies = ordered_json::array();
  for (auto s : c.strategies) strategies.push_back(to_string(s));
  j["strategies"] = strategies;
  j["postprocess"] = to_string(c.postprocess);
  j["master_seed"] = c.master_seed;
  j["boundary"] = to_string(c.boundary);
  j["shot_mode"] = to_string(c.shot_mode);
  j["experiment"] = to_string(c.experiment);
  j["report_value"] = to_string(c.report_value);
  return j;
}

ExperimentConfig config_from_json(const ordered_json& j) {
  ExperimentConfig c;
  c.n_qubits = j.at("n_qubits").get<int>();
  c.n_meas = j.at("n_meas").get<long long>();
  c.duration = j.at("t").get<double>();
  c.j_range = j.at("J_range").get<std::vector<int>>();
  c.b_range = j.at("B_range").get<std::vector<int>>();
  c.m_range = j.at("M_range").get<std::vector<int>>();
  c.scale_factors = j.at("scale_factors").get<std::vector<int>>();
  c.noise.eps1 = j.at("eps1").get<double>();
  c.noise.eps2 = j.at("eps2").get<double>();
  c.noise.readout_flip = j.at("readout_flip").get<double>();
  c.amplification = j.at("amplification").get<std::string>() == "fold"
                        ? Amplification::fold
                        : Amplification::rate_scale;
  c.subset_size = j.at("L").get<int>();
  c.strategies.clear();
  for (const auto& s : j.at("strategies")) {
    const auto kind = strategy_from_string(s.get<std::string>());
    if (!kind) throw std::invalid_argument("bad strategy in JSON");
    c.strategies.push_back(*kind);
  }
  c.postprocess = j.at("postprocess").get<std::string>() == "raw"
                      ? PostprocessMode::raw
                      : PostprocessMode::clip_renorm;
  c.master_seed = j.at("master_seed").get<std::uint64_t>();
  c.boundary = j.at("boundary").get<std::string>() == "periodic"
                   ? Boundary::periodic
                   : Boundary::open;
  c.shot_mode = j.at("shot_mode").get<std::string>() == "sampled"
                    ? ShotMode::sampled
                    : ShotMode::exact;
  c.experiment = j.at("experiment").get<std::string>() == "consistency"
                     ? ExperimentKind::consistency
                     : ExperimentKind::nversion;
  c.report_value = j.at("report_value").get<std::string>() == "subset_mean"
                       ? ReportValue::subset_mean
                       : ReportValue::full_fit;
  return c;
}

ordered_json record_to_json(const RunRecord& r) {
  ordered_json j;
  j["J"] = r.j;
  j["B"] = r.b;
  j["M"] = r.m;
  j["seed"] = r.seed;
  j["n_bits"] = r.ideal.n_bits();
  j["ideal"] = values_to_json(r.ideal.n_bits(), r.ideal.probs());
  ordered_json noisy = ordered_json::array();
  for (const auto& [lambda, d] : r.noisy_by_lambda) {
    ordered_json entry;
    entry["lambda"] = lambda;
    entry["dist"] = values_to_json(d.n_bits(), d.probs());
    noisy.push_back(std::move(entry));
  }
  j["noisy"] = noisy;
  ordered_json cands = ordered_json::array();
  for (const auto& c : r.candidates) {
    ordered_json entry;
    entry["name"] = c.name;
    entry["output"] = values_to_json(c.output.n_bits, c.output.values);
    entry["tvd"] = c.tvd_to_ideal;
    entry["rank"] = c.rank;
    cands.push_back(std::move(entry));
  }
  j["candidates"] = cands;
  ordered_json nv;
  nv["names"] = r.nversion.names;
  nv["tvd_matrix"] = r.nversion.tvd_matrix;
  nv["row_sums"] = r.nversion.row_sums;
  nv["selected_index"] = r.nversion.selected_index;
  nv["outlier_index"] = r.nversion.outlier_index;
  nv["pick"] = r.nversion_pick;
  nv["pick_rank"] = r.nversion_rank;
  j["nversion"] = nv;
  ordered_json cons;
  cons["output"] =
      values_to_json(r.consistency_output.n_bits(), r.consistency_output.probs());
  cons["tvd"] = r.consistency_tvd;
  ordered_json bins = ordered_json::object();
  for (const auto& [z, name] : r.consistency_bins)
    bins[format_bitstring(z, r.ideal.n_bits())] = name;
  cons["bins"] = bins;
  j["consistency"] = cons;
  return j;
}

RunRecord record_from_json(const ordered_json& j) {
  RunRecord r;
  r.j = j.at("J").get<double>();
  r.b = j.at("B").get<double>();
  r.m = j.at("M").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  const int n_bits = j.at("n_bits").get<int>();
  r.ideal = Distribution(n_bits, values_from_json(n_bits, j.at("ideal")));
  for (const auto& entry : j.at("noisy"))
    r.noisy_by_lambda.emplace_back(
        entry.at("lambda").get<int>(),
        Distribution(n_bits, values_from_json(n_bits, entry.at("dist"))));
  for (const auto& entry : j.at("candidates")) {
    CandidateResult c;
    c.name = entry.at("name").get<std::string>();
    c.output.n_bits = n_bits;
    c.output.values = values_from_json(n_bits, entry.at("output"));
    c.tvd_to_ideal = entry.at("tvd").get<double>();
    c.rank = entry.at("rank").get<int>();
    r.candidates.push_back(std::move(c));
  }
  const auto& nv = j.at("nversion");
  r.nversion.names = nv.at("names").get<std::vector<std::string>>();
  r.nversion.tvd_matrix =
      nv.at("tvd_matrix").get<std::vector<std::vector<double>>>();
  r.nversion.row_sums = nv.at("row_sums").get<std::vector<double>>();
  r.nversion.selected_index = nv.at("selected_index").get<int>();
  r.nversion.outlier_index = nv.at("outlier_index").get<int>();
  r.nversion_pick = nv.at("pick").get<std::string>();
  r.nversion_rank = nv.at("pick_rank").get<int>();
  const auto& cons = j.at("consistency");
  r.consistency_output =
      Distribution(n_bits, values_from_json(n_bits, cons.at("output")));
  r.consistency_tvd = cons.at("tvd").get<double>();
  for (const auto& [key, name] : cons.at("bins").items())
    r.consistency_bins[parse_bitstring(key, n_bits)] = name.get<std::string>();
  return r;
}

}  // namespace

std::string sweep_to_json(const SweepResult& sweep) {
  ordered_json j;
  j["config"] = config_to_json(sweep.config);
  ordered_json records = ordered_json::array();
  for (const auto& r : sweep.records) records.push_back(record_to_json(r));
  j["records"] = records;
  ordered_json summary = ordered_json::array();
  for (const auto& row : sweep.summary) {
    ordered_json entry;
    entry["method"] = row.method;
    entry["rank"] = row.rank;
    entry["count"] = row.count;
    entry["M"] = row.m;
    summary.push_back(std::move(entry));
  }
  j["summary"] = summary;
  return j.dump(2) + "\n";
}

SweepResult sweep_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  SweepResult sweep;
  sweep.config = config_from_json(j.at("config"));
  for (const auto& entry : j.at("records"))
    sweep.records.push_back(record_from_json(entry));
  for (const auto& entry : j.at("summary"))
    sweep.summary.push_back(SummaryRow{entry.at("method").get<std::string>(),
                                       entry.at("rank").get<int>(),
                                       entry.at("count").get<int>(),
                                       entry.at("M").get<int>()});
  return sweep;
}

std::string render_records(const SweepResult& sweep, ReportFormat format) {
  if (sweep.records.empty()) throw std::invalid_argument("no records to report");
  if (format == ReportFormat::json) return sweep_to_json(sweep);

  if (format == ReportFormat::csv) {
    // Sorted by J, B, M, then candidate order.
    std::vector<std::size_t> order(sweep.records.size());
    std::iota(order.begin(), order.end(), std::size_t(0));
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const auto& ra = sweep.records[a];
      const auto& rb = sweep.records[b];
      if (ra.j != rb.j) return ra.j < rb.j;
      if (ra.b != rb.b) return ra.b < rb.b;
      return ra.m < rb.m;
    });
    std::ostringstream out;
    out << "J,B,M,method,tvd,rank\n";
    for (std::size_t i : order) {
      const auto& r = sweep.records[i];
      for (const auto& c : r.candidates)
        out << format_double(r.j) << "," << format_double(r.b) << "," << r.m << ","
            << c.name << "," << format_double(c.tvd_to_ideal) << "," << c.rank
            << "\n";
    }
    return out.str();
  }

  std::ostringstream out;
  out << sweep.records.size() << " runs ("
      << to_string(sweep.config.experiment) << " experiment)\n\n";
  out << render_summary(sweep.summary, ReportFormat::table);
  return out.str();
}

std::string render_summary(std::span<const SummaryRow> summary, ReportFormat format) {
  if (summary.empty()) throw std::invalid_argument("no summary to report");
  if (format == ReportFormat::csv) {
    std::ostringstream out;
    out << "method,rank,count,M\n";
    for (const auto& row : summary)
      out << row.method << "," << row.rank << "," << row.count << "," << row.m
          << "\n";
    return out.str();
  }
  if (format == ReportFormat::json) {
    ordered_json j = ordered_json::array();
    for (const auto& row : summary) {
      ordered_json entry;
      entry["method"] = row.method;
      entry["rank"] = row.rank;
      entry["count"] = row.count;
      entry["M"] = row.m;
      j.push_back(std::move(entry));
    }
    return j.dump(2) + "\n";
  }

  // Table: one rank-count block per M.
  std::vector<int> m_values;
  for (const auto& row : summary)
    if (std::find(m_values.begin(), m_values.end(), row.m) == m_values.end())
      m_values.push_back(row.m);
  int max_rank = 0;
  for (const auto& row : summary) max_rank = std::max(max_rank, row.rank);

  std::ostringstream out;
  for (int m : m_values) {
    out << "M = " << m << "\n";
    char head[64];
    std::snprintf(head, sizeof(head), "  %-20s", "method");
    out << head;
    for (int rank = 1; rank <= max_rank; ++rank) {
      char cell[32];
      std::snprintf(cell, sizeof(cell), " %6s",
                    (std::to_string(rank) +
                     (rank == 1   ? "st"
                      : rank == 2 ? "nd"
                      : rank == 3 ? "rd"
                                  : "th"))
                        .c_str());
      out << cell;
    }
    out << "\n";
    std::vector<std::string> methods;
    for (const auto& row : summary)
      if (row.m == m &&
          std::find(methods.begin(), methods.end(), row.method) == methods.end())
        methods.push_back(row.method);
    for (const auto& method : methods) {
      char name[64];
      std::snprintf(name, sizeof(name), "  %-20s", method.c_str());
      out << name;
      for (int rank = 1; rank <= max_rank; ++rank) {
        int count = 0;
        for (const auto& row : summary)
          if (row.m == m && row.method == method && row.rank == rank)
            count = row.count;
        char cell[32];
        std::snprintf(cell, sizeof(cell), " %6d", count);
        out << cell;
      }
      out << "\n";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace qem
