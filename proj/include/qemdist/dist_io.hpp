// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "qemdist/distribution.hpp"

namespace qem {

/// On-disk distribution format: a header line `n_bits=<n>,lambda=<l>`
/// followed by one `bitstring,probability` record per stored outcome,
/// probabilities with 15 significant digits.
struct DistFile {
  Distribution dist;
  double lambda = 1.0;
};

std::string render_distribution(const Distribution& dist, double lambda);
DistFile parse_distribution(const std::string& text);

void write_distribution_file(const std::string& path, const Distribution& dist,
                             double lambda);
DistFile read_distribution_file(const std::string& path);

}  // namespace qem
