#include "chaoscrypt/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chaoscrypt {

namespace {

constexpr double kDiffStep = 1e-7;
constexpr double kDegenerateNorm = 1e-150;
constexpr std::size_t kTransient = 1000;

using Mat4 = std::array<std::array<double, 4>, 4>;

// shortest signed distance on the unit circle
double wrap_diff(double d) { return d - std::round(d); }

ChaosState perturbed(const ChaosState& s, int comp, double delta) {
  ChaosState p = s;
  p.set_comp(comp, p.comp(comp) + delta);
  return p;
}

// Column c of the Jacobian from a traced step function. Falls back to a
// one-sided difference when the +/- stencils disagree on branch selection.
void jacobian_column(
    const std::function<ChaosState(const ChaosState&, unsigned*)>& traced,
    const ChaosState& s, const ChaosState& f0, unsigned b0, int c, Mat4& jac) {
  unsigned bp = 0, bm = 0;
  const ChaosState fp = traced(perturbed(s, c, kDiffStep), &bp);
  const ChaosState fm = traced(perturbed(s, c, -kDiffStep), &bm);
  if (bp == bm) {
    for (int row = 0; row < 4; ++row)
      jac[row][c] = wrap_diff(fp.comp(row) - fm.comp(row)) / (2.0 * kDiffStep);
  } else if (bp == b0) {
    for (int row = 0; row < 4; ++row)
      jac[row][c] = wrap_diff(fp.comp(row) - f0.comp(row)) / kDiffStep;
  } else {
    for (int row = 0; row < 4; ++row)
      jac[row][c] = wrap_diff(f0.comp(row) - fm.comp(row)) / kDiffStep;
  }
}

// Modified Gram-Schmidt QR of a 4x4 matrix; returns |diag(R)| and leaves the
// orthonormal factor in `a`. Degenerate columns are replaced by the first
// basis vector with a usable orthogonal residual and counted.
std::array<double, 4> qr_in_place(Mat4& a, std::size_t& degenerate) {
  std::array<double, 4> rdiag{};
  for (int k = 0; k < 4; ++k) {
    double norm = 0.0;
    for (int i = 0; i < 4; ++i) norm += a[i][k] * a[i][k];
    norm = std::sqrt(norm);
    if (!(norm > kDegenerateNorm) || !std::isfinite(norm)) {
      ++degenerate;
      for (int e = 0; e < 4; ++e) {
        for (int i = 0; i < 4; ++i) a[i][k] = (i == e) ? 1.0 : 0.0;
        for (int j = 0; j < k; ++j) {
          double dot = 0.0;
          for (int i = 0; i < 4; ++i) dot += a[i][j] * a[i][k];
          for (int i = 0; i < 4; ++i) a[i][k] -= dot * a[i][j];
        }
        double rn = 0.0;
        for (int i = 0; i < 4; ++i) rn += a[i][k] * a[i][k];
        if (rn > 0.5) break;  // basis vector mostly outside span of cols < k
      }
      norm = kDegenerateNorm;
      double rn = 0.0;
      for (int i = 0; i < 4; ++i) rn += a[i][k] * a[i][k];
      rn = std::sqrt(rn);
      for (int i = 0; i < 4; ++i) a[i][k] /= rn;
    } else {
      for (int i = 0; i < 4; ++i) a[i][k] /= norm;
    }
    rdiag[k] = norm;
    for (int j = k + 1; j < 4; ++j) {
      double dot = 0.0;
      for (int i = 0; i < 4; ++i) dot += a[i][k] * a[i][j];
      for (int i = 0; i < 4; ++i) a[i][j] -= dot * a[i][k];
    }
  }
  return rdiag;
}

LyapunovResult lyapunov_core(
    const std::function<ChaosState(const ChaosState&, unsigned*)>& traced,
    const ChaosState& gamma, std::size_t n) {
  if (n < 1000)
    throw std::invalid_argument("lyapunov_spectrum: n must be >= 1000");

  ChaosState s = gamma;
  for (std::size_t i = 0; i < kTransient; ++i) s = traced(s, nullptr);

  Mat4 q{};
  for (int i = 0; i < 4; ++i) q[i][i] = 1.0;
  std::array<double, 4> acc{};
  std::size_t degenerate = 0;

  for (std::size_t it = 0; it < n; ++it) {
    unsigned b0 = 0;
    const ChaosState f0 = traced(s, &b0);
    Mat4 jac{};
    for (int c = 0; c < 4; ++c) jacobian_column(traced, s, f0, b0, c, jac);

    Mat4 m{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double sum = 0.0;
        for (int k = 0; k < 4; ++k) sum += jac[i][k] * q[k][j];
        m[i][j] = sum;
      }
    const auto rdiag = qr_in_place(m, degenerate);
    q = m;
    for (int k = 0; k < 4; ++k)
      acc[k] += std::log(std::max(std::fabs(rdiag[k]), kDegenerateNorm));
    s = f0;
  }

  LyapunovResult out;
  for (int k = 0; k < 4; ++k) out.exponents[k] = acc[k] / static_cast<double>(n);
  std::sort(out.exponents.begin(), out.exponents.end(), std::greater<>());
  out.guard_activations = degenerate;
  out.quality_warning = degenerate * 100 > 4 * n;  // > 1% of columns
  return out;
}

}  // namespace

LyapunovResult lyapunov_spectrum(const ChaosConfig& cfg, double r,
                                 const ChaosState& gamma, std::size_t n) {
  auto traced = [&cfg, r](const ChaosState& s, unsigned* bits) {
    return step_traced(s, r, cfg, bits);
  };
  return lyapunov_core(traced, gamma, n);
}

LyapunovResult lyapunov_spectrum_map(const MapFn& map, const ChaosState& gamma,
                                     std::size_t n) {
  auto traced = [&map](const ChaosState& s, unsigned* bits) {
    if (bits) *bits = 0;
    return map(s);
  };
  return lyapunov_core(traced, gamma, n);
}

std::vector<BifurcationRow> bifurcation_scan(const ChaosConfig& cfg,
                                             const ChaosState& gamma,
                                             double r_lo, double r_hi,
                                             std::size_t r_steps,
                                             std::size_t transient,
                                             std::size_t keep) {
  if (!(r_lo < r_hi))
    throw std::invalid_argument("bifurcation_scan: r_lo must be < r_hi");
  if (r_steps < 1 || transient < 1 || keep < 1)
    throw std::invalid_argument("bifurcation_scan: counts must be >= 1");

  std::vector<BifurcationRow> rows;
  rows.reserve(r_steps * keep * 4);
  for (std::size_t k = 0; k < r_steps; ++k) {
    const double r = r_lo + (r_hi - r_lo) *
                                static_cast<double>(k + 1) /
                                static_cast<double>(r_steps);
    ChaosState s = gamma;
    for (std::size_t i = 0; i < transient; ++i) s = step(s, r, cfg);
    for (std::size_t i = 0; i < keep; ++i) {
      s = step(s, r, cfg);
      for (int c = 0; c < 4; ++c) rows.push_back({r, c, s.comp(c)});
    }
  }
  return rows;
}

std::vector<std::pair<double, double>> cobweb_trace(const ChaosConfig& cfg,
                                                    double r,
                                                    const ChaosState& gamma,
                                                    std::size_t n) {
  if (n < 2) throw std::invalid_argument("cobweb_trace: n must be >= 2");
  const ChaosSequence seq = psi(gamma, r, n, cfg);
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    pairs.emplace_back(seq.at(0, i), seq.at(0, i + 1));
  return pairs;
}

std::vector<std::size_t> sequence_histogram(const std::vector<double>& values,
                                            std::size_t bins) {
  if (bins < 2)
    throw std::invalid_argument("sequence_histogram: bins must be >= 2");
  std::vector<std::size_t> counts(bins, 0);
  for (double v : values) {
    if (!(v >= 0.0 && v < 1.0))
      throw std::invalid_argument("sequence_histogram: value outside [0,1)");
    std::size_t idx = static_cast<std::size_t>(v * static_cast<double>(bins));
    if (idx >= bins) idx = bins - 1;
    ++counts[idx];
  }
  return counts;
}

}  // namespace chaoscrypt
