// SPDX-License-Identifier: Apache-2.0

#include "qemdist/dist_io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qem {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

}  // namespace

std::string render_distribution(const Distribution& dist, double lambda) {
  std::ostringstream out;
  out << "n_bits=" << dist.n_bits() << ",lambda=" << format_double(lambda) << "\n";
  for (const auto& [z, p] : dist.probs())
    out << format_bitstring(z, dist.n_bits()) << "," << format_double(p) << "\n";
  return out.str();
}

DistFile parse_distribution(const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  if (!std::getline(ss, line))
    throw std::invalid_argument("empty distribution file");
  int n_bits = 0;
  double lambda = 0.0;
  if (std::sscanf(line.c_str(), "n_bits=%d,lambda=%lf", &n_bits, &lambda) != 2)
    throw std::invalid_argument("bad distribution header '" + line + "'");

  std::map<std::uint64_t, double> probs;
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("bad distribution record '" + line + "'");
    const std::uint64_t z = parse_bitstring(line.substr(0, comma), n_bits);
    const double p = std::stod(line.substr(comma + 1));
    if (!probs.emplace(z, p).second)
      throw std::invalid_argument("duplicate bitstring in distribution file");
  }
  return {Distribution(n_bits, std::move(probs)), lambda};
}

void write_distribution_file(const std::string& path, const Distribution& dist,
                             double lambda) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << render_distribution(dist, lambda);
}

DistFile read_distribution_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_distribution(buf.str());
}

}  // namespace qem
