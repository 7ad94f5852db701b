#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

namespace chaoscrypt {

// One state of the 4D hybrid map. Every component stays in [0,1) after a
// step; the trailing mod-1 and the non-finite guard enforce it.
struct ChaosState {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double w = 0.0;

  double comp(int i) const {
    switch (i) {
      case 0: return x;
      case 1: return y;
      case 2: return z;
      default: return w;
    }
  }
  void set_comp(int i, double v) {
    switch (i) {
      case 0: x = v; break;
      case 1: y = v; break;
      case 2: z = v; break;
      default: w = v; break;
    }
  }

  bool operator==(const ChaosState&) const = default;
};

enum class BaseMap { kLogistic, kSin };

// Outer transforms f applied on top of a base map output.
enum class OuterMap {
  kIdentity,   // p
  kSinPi,      // sin(pi*p)
  kCos,        // cos(p)
  kCosh,       // cosh(p)
  kCot,        // cos(p)/sin(p)
  kExpPi,      // exp(pi*p)
  kCosSinPi,   // cos(sin(pi*p))
  kSin,        // sin(p)
};

// Tent-style arms h applied to the scaled branch coordinate.
enum class TentArm {
  kSin2,     // sin(2p)
  kLinear4,  // 4p
  kExp2,     // exp(2p)
  kCot1,     // cot(p)
  kCot4,     // cot(4p)
  kCos20,    // cos(20p)
  kCosh2,    // cosh(2p)
  kExp4,     // exp(4p)
  kCoth1,    // coth(p)
};

// Cross-coupling terms g. Fixed catalog; each entry is one concrete mixing
// expression over the current state (and, for later boxes, the components
// already updated this iteration).
enum class Coupler {
  // first preset
  kTanhCosMix,     // 15*tanh(r*x+z) + sin(w) + 12*cos(r*x)
  kExpLogMix,      // -7*r*y + exp(1+2w) + z + 7*log(pi*r*x)
  kTanSum4,        // 2*tan(r*x + y + 2z + w)
  kExpScaled20,    // z + w + 14*exp(20*r*x)
  kTanPlusZW,      // 2*tan(r*x + y) + w + z
  kExpShiftSin,    // 14*exp(20*r*x + w) + sin(z)
  kTanPlusW,       // 2*tan(r*x + y + z) + w
  kExpShiftZ,      // 14*exp(20*r*x + w) + z
  // second preset
  kTanCosMix,      // 15*tan(r*w + x + 2z) + sin(w) + 12*cos(r*x)
  kSinAffine,      // 7*sin(r*y+w) - 7*r*y + x + 2w + z - 1
  kCosNext,        // 14*cos(20*r*x + x_next)
  kArgMean,        // (r + x + x_next + y + z + w) / 6
  kTanNextMix,     // tan(x_next + y_next) + w*z + 2*(r*x + y)
  kAffineNextSin,  // 14*(r*x + w) + y_next + sin(z)
  kCosNextLog,     // 14*cos(20*r*x + x_next) + log(x + w)
  kSinhNextMix,    // 14*sinh(x + r*x_next + w) + z + sin(z_next + y_next)
};

// Whether the branch coordinate zeta of a box reads the current or the
// already-updated component.
enum class XiPick { kCurrent, kNext };

// Full parameterisation of the four combination boxes. Slot order is
// (x1, x2, y1, y2, z1, z2, w1, w2): slot = 2*box + branch.
struct ChaosConfig {
  std::array<double, 8> alphas{};
  std::array<double, 8> betas{};
  std::array<BaseMap, 8> base_maps{};
  std::array<OuterMap, 8> outer_maps{};
  std::array<Coupler, 8> couplers{};
  std::array<TentArm, 8> tent_arms{};
  std::array<XiPick, 3> xi_choice{};  // zeta_1, zeta_2, zeta_3
};

// Built-in parameter sets, addressable as "case-i" and "case-ii".
const ChaosConfig& case_i();
const ChaosConfig& case_ii();
const ChaosConfig* preset_by_name(std::string_view name);  // nullptr if unknown

// Matrix of iterates: column i holds (x_{i+1}, y_{i+1}, z_{i+1}, w_{i+1});
// the seed itself is not a column.
struct ChaosSequence {
  std::vector<double> samples;  // column-major, 4 entries per column
  double r = 0.0;
  ChaosState gamma;

  std::size_t columns() const { return samples.size() / 4; }
  double at(int component, std::size_t col) const {
    return samples[4 * col + static_cast<std::size_t>(component)];
  }
};

// r*sin(pi*u) for kSin, 4*r*u*(1-u) for kLogistic.
double base_map(BaseMap kind, double r, double u);

// Wraps a finite value into [0,1).
double wrap_unit(double v);

// One iteration of the hybrid system. Boxes evaluate in x, y, z, w order so
// each box can read the components updated before it.
ChaosState step(const ChaosState& s, double r, const ChaosConfig& cfg);

// As step(), additionally reporting which branch each box took
// (bit k set = box k used its second branch). Used by the Jacobian code to
// detect branch crossings in finite-difference stencils.
ChaosState step_traced(const ChaosState& s, double r, const ChaosConfig& cfg,
                       unsigned* branch_bits);

ChaosSequence psi(const ChaosState& gamma, double r, std::size_t n,
                  const ChaosConfig& cfg);

// Keep the first tau decimal digits: floor(v*10^tau)/10^tau.
double truncate_value(double v, int tau);
ChaosSequence truncated(const ChaosSequence& seq, int tau);

// Row-major flattening of psi: rows of the 4xceil(j/4) matrix concatenated,
// first j entries kept.
std::vector<double> chi(const ChaosState& q, double r, std::size_t j,
                        const ChaosConfig& cfg);

}  // namespace chaoscrypt
