// SPDX-License-Identifier: Apache-2.0

#include "qemdist/kernels.hpp"

#include <cmath>
#include <utility>
#include <vector>

// Every kernel comes in a serial reference variant and an openmp variant.
// Both share the same per-entry scalar expressions and neither performs a
// cross-thread reduction, so the two variants agree bitwise.

namespace qem::kernels {

Backend default_backend() {
#ifdef _OPENMP
  return Backend::openmp;
#else
  return Backend::serial;
#endif
}

namespace {

// --- 1-qubit unitary -------------------------------------------------------

// Row pass: rho <- U rho (rows paired by `mask`).
inline void unitary_rows_pair(cd* rho, std::size_t dim, std::uint64_t mask,
                              const Mat2& u, std::size_t i) {
  const std::uint64_t one_mask[1] = {mask};
  const std::size_t r0 = expand_index(i, one_mask);
  const std::size_t r1 = r0 | mask;
  cd* row0 = rho + r0 * dim;
  cd* row1 = rho + r1 * dim;
  for (std::size_t c = 0; c < dim; ++c) {
    const cd a = row0[c], b = row1[c];
    row0[c] = u[0] * a + u[1] * b;
    row1[c] = u[2] * a + u[3] * b;
  }
}

// Column pass: rho <- rho U^dagger (columns paired by `mask`).
inline void unitary_cols_row(cd* rho, std::size_t dim, std::uint64_t mask,
                             const Mat2& u, std::size_t r) {
  const std::uint64_t one_mask[1] = {mask};
  cd* row = rho + r * dim;
  for (std::size_t j = 0; j < dim / 2; ++j) {
    const std::size_t c0 = expand_index(j, one_mask);
    const std::size_t c1 = c0 | mask;
    const cd a = row[c0], b = row[c1];
    row[c0] = a * std::conj(u[0]) + b * std::conj(u[1]);
    row[c1] = a * std::conj(u[2]) + b * std::conj(u[3]);
  }
}

// --- CNOT (basis permutation, involution) -----------------------------------

inline void cnot_row(cd* rho, std::size_t dim, std::uint64_t cmask,
                     std::uint64_t tmask, std::size_t r) {
  const std::size_t r2 = (r & cmask) ? (r ^ tmask) : r;
  cd* row = rho + r * dim;
  for (std::size_t c = 0; c < dim; ++c) {
    const std::size_t c2 = (c & cmask) ? (c ^ tmask) : c;
    // Each unordered orbit {(r,c),(r2,c2)} is swapped exactly once, by the
    // lexicographically smaller member; other threads skip without touching.
    if (r2 > r || (r2 == r && c2 > c)) std::swap(row[c], rho[r2 * dim + c2]);
  }
}

// --- RZZ (diagonal phase) ---------------------------------------------------

inline void rzz_row(cd* rho, std::size_t dim, std::uint64_t mask_a,
                    std::uint64_t mask_b, const cd& minus, const cd& plus,
                    std::size_t r) {
  // d_z = e^{-i theta/2} on even ZZ parity, e^{+i theta/2} on odd; the entry
  // factor d_r * conj(d_c) is 1 when parities agree.
  const bool pr = ((r & mask_a) != 0) ^ ((r & mask_b) != 0);
  cd* row = rho + r * dim;
  for (std::size_t c = 0; c < dim; ++c) {
    const bool pc = ((c & mask_a) != 0) ^ ((c & mask_b) != 0);
    if (pr != pc) row[c] *= pr ? plus : minus;
  }
}

// --- depolarizing channel ---------------------------------------------------

// Processes the 2^k x 2^k block of entries whose non-target bits are fixed
// to (rbar, cbar). In-place: blocks are disjoint across (rbar, cbar).
inline void depolarize_block(cd* rho, std::size_t dim,
                             std::span<const std::uint64_t> masks, double rate,
                             std::size_t rbar, std::size_t cbar) {
  const int k = static_cast<int>(masks.size());
  const std::size_t count = std::size_t(1) << k;
  auto place = [&](std::size_t s) {
    std::uint64_t bits = 0;
    for (int j = 0; j < k; ++j)
      if (s & (std::size_t(1) << j)) bits |= masks[j];
    return bits;
  };
  cd tr(0.0, 0.0);
  for (std::size_t s = 0; s < count; ++s) {
    const std::uint64_t b = place(s);
    tr += rho[(rbar | b) * dim + (cbar | b)];
  }
  const cd mixed = tr * (rate / double(count));
  const double keep = 1.0 - rate;
  for (std::size_t sr = 0; sr < count; ++sr) {
    const std::size_t r = rbar | place(sr);
    for (std::size_t sc = 0; sc < count; ++sc) {
      const std::size_t c = cbar | place(sc);
      cd v = rho[r * dim + c] * keep;
      if (sr == sc) v += mixed;
      rho[r * dim + c] = v;
    }
  }
}

// --- readout flip -----------------------------------------------------------

inline void flip_pair(double* probs, std::uint64_t mask, double flip,
                      std::size_t z0) {
  const std::size_t z1 = z0 | mask;
  const double a = probs[z0], b = probs[z1];
  probs[z0] = (1.0 - flip) * a + flip * b;
  probs[z1] = flip * a + (1.0 - flip) * b;
}

}  // namespace

void apply_unitary_1q(cd* rho, std::size_t dim, std::uint64_t mask,
                      const Mat2& u, Backend be) {
  const std::ptrdiff_t half = std::ptrdiff_t(dim / 2);
  const std::ptrdiff_t full = std::ptrdiff_t(dim);
  if (be == Backend::openmp) {
#pragma omp parallel for schedule(static) if (dim >= kParallelDimThreshold)
    for (std::ptrdiff_t i = 0; i < half; ++i)
      unitary_rows_pair(rho, dim, mask, u, std::size_t(i));
#pragma omp parallel for schedule(static) if (dim >= kParallelDimThreshold)
    for (std::ptrdiff_t r = 0; r < full; ++r)
      unitary_cols_row(rho, dim, mask, u, std::size_t(r));
  } else {
    for (std::ptrdiff_t i = 0; i < half; ++i)
      unitary_rows_pair(rho, dim, mask, u, std::size_t(i));
    for (std::ptrdiff_t r = 0; r < full; ++r)
      unitary_cols_row(rho, dim, mask, u, std::size_t(r));
  }
}

void apply_cnot(cd* rho, std::size_t dim, std::uint64_t control_mask,
                std::uint64_t target_mask, Backend be) {
  const std::ptrdiff_t full = std::ptrdiff_t(dim);
  if (be == Backend::openmp) {
#pragma omp parallel for schedule(static) if (dim >= kParallelDimThreshold)
    for (std::ptrdiff_t r = 0; r < full; ++r)
      cnot_row(rho, dim, control_mask, target_mask, std::size_t(r));
  } else {
    for (std::ptrdiff_t r = 0; r < full; ++r)
      cnot_row(rho, dim, control_mask, target_mask, std::size_t(r));
  }
}

void apply_rzz(cd* rho, std::size_t dim, std::uint64_t mask_a,
               std::uint64_t mask_b, double theta, Backend be) {
  const cd i(0.0, 1.0);
  const cd minus = std::exp(-i * theta);  // even-parity row, odd-parity col
  const cd plus = std::exp(i * theta);
  const std::ptrdiff_t full = std::ptrdiff_t(dim);
  if (be == Backend::openmp) {
#pragma omp parallel for schedule(static) if (dim >= kParallelDimThreshold)
    for (std::ptrdiff_t r = 0; r < full; ++r)
      rzz_row(rho, dim, mask_a, mask_b, minus, plus, std::size_t(r));
  } else {
    for (std::ptrdiff_t r = 0; r < full; ++r)
      rzz_row(rho, dim, mask_a, mask_b, minus, plus, std::size_t(r));
  }
}

void depolarize(cd* rho, std::size_t dim,
                std::span<const std::uint64_t> target_masks, double rate,
                Backend be) {
  if (rate == 0.0) return;
  const int k = static_cast<int>(target_masks.size());
  const std::size_t nblocks = dim >> k;
  const std::ptrdiff_t nb = std::ptrdiff_t(nblocks);
  if (be == Backend::openmp) {
#pragma omp parallel for schedule(static) if (dim >= kParallelDimThreshold)
    for (std::ptrdiff_t ri = 0; ri < nb; ++ri) {
      const std::size_t rbar = expand_index(std::size_t(ri), target_masks);
      for (std::size_t ci = 0; ci < nblocks; ++ci)
        depolarize_block(rho, dim, target_masks, rate, rbar,
                         expand_index(ci, target_masks));
    }
  } else {
    for (std::ptrdiff_t ri = 0; ri < nb; ++ri) {
      const std::size_t rbar = expand_index(std::size_t(ri), target_masks);
      for (std::size_t ci = 0; ci < nblocks; ++ci)
        depolarize_block(rho, dim, target_masks, rate, rbar,
                         expand_index(ci, target_masks));
    }
  }
}

void readout_flip_bit(double* probs, std::size_t dim, std::uint64_t mask,
                      double flip, Backend be) {
  const std::uint64_t one_mask[1] = {mask};
  const std::ptrdiff_t half = std::ptrdiff_t(dim / 2);
  if (be == Backend::openmp) {
#pragma omp parallel for schedule(static) if (dim >= kParallelDimThreshold)
    for (std::ptrdiff_t i = 0; i < half; ++i)
      flip_pair(probs, mask, flip, expand_index(std::size_t(i), one_mask));
  } else {
    for (std::ptrdiff_t i = 0; i < half; ++i)
      flip_pair(probs, mask, flip, expand_index(std::size_t(i), one_mask));
  }
}

}  // namespace qem::kernels
