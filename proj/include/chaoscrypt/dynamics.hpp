#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "chaoscrypt/chaos.hpp"

namespace chaoscrypt {

using MapFn = std::function<ChaosState(const ChaosState&)>;

struct LyapunovResult {
  std::array<double, 4> exponents{};  // sorted descending
  std::size_t guard_activations = 0;  // degenerate Jacobian columns repaired
  bool quality_warning = false;       // > 1% of columns were degenerate
};

// Lyapunov spectrum via per-step QR accumulation. The Jacobian comes from
// central finite differences (h = 1e-7) with nearest-image wrapping; when
// the stencil straddles a branch boundary the difference falls back to the
// side matching the center's branch pattern. Requires n >= 1000.
LyapunovResult lyapunov_spectrum(const ChaosConfig& cfg, double r,
                                 const ChaosState& gamma, std::size_t n);

// Same accumulation for an arbitrary map on the unit 4-torus; this is the
// entry point the analytic test maps (identity, doubling) plug into.
LyapunovResult lyapunov_spectrum_map(const MapFn& map, const ChaosState& gamma,
                                     std::size_t n);

struct BifurcationRow {
  double r;
  int component;  // 0..3 for x, y, z, w
  double value;
};

// For each r in the grid (r_lo excluded, r_hi included): discard `transient`
// iterates, then record `keep` values per component.
std::vector<BifurcationRow> bifurcation_scan(const ChaosConfig& cfg,
                                             const ChaosState& gamma,
                                             double r_lo, double r_hi,
                                             std::size_t r_steps,
                                             std::size_t transient,
                                             std::size_t keep);

// Consecutive (x_i, x_{i+1}) pairs of the x component over n iterates.
std::vector<std::pair<double, double>> cobweb_trace(const ChaosConfig& cfg,
                                                    double r,
                                                    const ChaosState& gamma,
                                                    std::size_t n);

// Equal-width bin counts over [0,1); counts sum to the input length.
std::vector<std::size_t> sequence_histogram(const std::vector<double>& values,
                                            std::size_t bins);

}  // namespace chaoscrypt
