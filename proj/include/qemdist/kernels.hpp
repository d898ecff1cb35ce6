// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>

#include "qemdist/gates.hpp"

namespace qem::kernels {

/// The serial kernels are the reference implementation; the openmp kernels
/// must produce bitwise-identical results (no cross-thread reductions, every
/// output entry is computed by the same scalar expression).
enum class Backend { serial, openmp };

/// openmp when the build has OpenMP, serial otherwise.
Backend default_backend();

/// Matrices below 256x256 are not worth forking threads for; the openmp
/// kernels fall back to the serial loop under this size.
inline constexpr std::size_t kParallelDimThreshold = 256;

/// rho' = U rho U^dagger for a 2x2 unitary acting on the qubit owning `mask`.
void apply_unitary_1q(cd* rho, std::size_t dim, std::uint64_t mask,
                      const Mat2& u, Backend be);

/// CNOT as the basis permutation z -> z ^ target_mask when the control bit is set.
void apply_cnot(cd* rho, std::size_t dim, std::uint64_t control_mask,
                std::uint64_t target_mask, Backend be);

/// exp(-i theta ZZ / 2) on the two qubits owning mask_a, mask_b.
void apply_rzz(cd* rho, std::size_t dim, std::uint64_t mask_a,
               std::uint64_t mask_b, double theta, Backend be);

/// rho' = (1-rate) rho + rate * (I/2^k on targets) (x) Tr_targets[rho].
/// `target_masks` must be sorted ascending and distinct.
void depolarize(cd* rho, std::size_t dim,
                std::span<const std::uint64_t> target_masks, double rate,
                Backend be);

/// Classical bit-flip channel with probability `flip` on the bit at `mask`,
/// applied to a length-`dim` probability vector.
void readout_flip_bit(double* probs, std::size_t dim, std::uint64_t mask,
                      double flip, Backend be);

/// Inserts zero bits at each mask position (masks ascending), spreading the
/// low bits of `x` across the complementary positions.
inline std::uint64_t expand_index(std::uint64_t x,
                                  std::span<const std::uint64_t> masks) {
  for (std::uint64_t m : masks) {
    const std::uint64_t low = x & (m - 1);
    x = ((x & ~(m - 1)) << 1) | low;
  }
  return x;
}

}  // namespace qem::kernels
