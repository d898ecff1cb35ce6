// SPDX-License-Identifier: Apache-2.0

#include "qemdist/noise.hpp"

#include <stdexcept>

namespace qem {

NoiseModel NoiseModel::gates_scaled(double factor) const {
  NoiseModel scaled{eps1 * factor, eps2 * factor, readout_flip};
  scaled.validate();
  return scaled;
}

void NoiseModel::validate() const {
  auto in_unit = [](double r) { return r >= 0.0 && r <= 1.0; };
  if (!in_unit(eps1) || !in_unit(eps2) || !in_unit(readout_flip))
    throw std::invalid_argument("noise rates must lie in [0, 1]");
}

}  // namespace qem
