#include "chaoscrypt/chaos.hpp"

#include <cmath>
#include <stdexcept>

namespace chaoscrypt {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Added to the last finite partial sum when a box output degenerates.
constexpr double kGuardOffset = 0.6180339887498949;

// Sums the three box terms left to right. If a partial sum leaves the finite
// range (cot poles, log of non-positive arguments, exp overflow), the box
// output is rebuilt from the last finite partial sum so the map stays total
// and deterministic.
double combine_mod1(double t1, double t2, double t3) {
  double last_finite = 0.0;
  double sum = 0.0;
  for (double t : {t1, t2, t3}) {
    sum += t;
    if (!std::isfinite(sum))
      return wrap_unit(std::fabs(last_finite) + kGuardOffset);
    last_finite = sum;
  }
  return wrap_unit(sum);
}

double outer_apply(OuterMap f, double p) {
  switch (f) {
    case OuterMap::kIdentity: return p;
    case OuterMap::kSinPi:    return std::sin(kPi * p);
    case OuterMap::kCos:      return std::cos(p);
    case OuterMap::kCosh:     return std::cosh(p);
    case OuterMap::kCot:      return std::cos(p) / std::sin(p);
    case OuterMap::kExpPi:    return std::exp(kPi * p);
    case OuterMap::kCosSinPi: return std::cos(std::sin(kPi * p));
    case OuterMap::kSin:      return std::sin(p);
  }
  return p;
}

double tent_apply(TentArm h, double p) {
  switch (h) {
    case TentArm::kSin2:    return std::sin(2.0 * p);
    case TentArm::kLinear4: return 4.0 * p;
    case TentArm::kExp2:    return std::exp(2.0 * p);
    case TentArm::kCot1:    return std::cos(p) / std::sin(p);
    case TentArm::kCot4:    return std::cos(4.0 * p) / std::sin(4.0 * p);
    case TentArm::kCos20:   return std::cos(20.0 * p);
    case TentArm::kCosh2:   return std::cosh(2.0 * p);
    case TentArm::kExp4:    return std::exp(4.0 * p);
    case TentArm::kCoth1:   return std::cosh(p) / std::sinh(p);
  }
  return p;
}

struct CouplerArgs {
  double r, x, y, z, w;
  double x_next, y_next, z_next;  // valid only for boxes evaluated later
};

double coupler_apply(Coupler g, const CouplerArgs& a) {
  switch (g) {
    case Coupler::kTanhCosMix:
      return 15.0 * std::tanh(a.r * a.x + a.z) + std::sin(a.w) +
             12.0 * std::cos(a.r * a.x);
    case Coupler::kExpLogMix:
      return -7.0 * a.r * a.y + std::exp(1.0 + 2.0 * a.w) + a.z +
             7.0 * std::log(kPi * a.r * a.x);
    case Coupler::kTanSum4:
      return 2.0 * std::tan(a.r * a.x + a.y + 2.0 * a.z + a.w);
    case Coupler::kExpScaled20:
      return a.z + a.w + 14.0 * std::exp(20.0 * a.r * a.x);
    case Coupler::kTanPlusZW:
      return 2.0 * std::tan(a.r * a.x + a.y) + a.w + a.z;
    case Coupler::kExpShiftSin:
      return 14.0 * std::exp(20.0 * a.r * a.x + a.w) + std::sin(a.z);
    case Coupler::kTanPlusW:
      return 2.0 * std::tan(a.r * a.x + a.y + a.z) + a.w;
    case Coupler::kExpShiftZ:
      return 14.0 * std::exp(20.0 * a.r * a.x + a.w) + a.z;
    case Coupler::kTanCosMix:
      return 15.0 * std::tan(a.r * a.w + a.x + 2.0 * a.z) + std::sin(a.w) +
             12.0 * std::cos(a.r * a.x);
    case Coupler::kSinAffine:
      return 7.0 * std::sin(a.r * a.y + a.w) - 7.0 * a.r * a.y + a.x +
             2.0 * a.w + a.z - 1.0;
    case Coupler::kCosNext:
      return 14.0 * std::cos(20.0 * a.r * a.x + a.x_next);
    case Coupler::kArgMean:
      return (a.r + a.x + a.x_next + a.y + a.z + a.w) / 6.0;
    case Coupler::kTanNextMix:
      return std::tan(a.x_next + a.y_next) + a.w * a.z +
             2.0 * (a.r * a.x + a.y);
    case Coupler::kAffineNextSin:
      return 14.0 * (a.r * a.x + a.w) + a.y_next + std::sin(a.z);
    case Coupler::kCosNextLog:
      return 14.0 * std::cos(20.0 * a.r * a.x + a.x_next) +
             std::log(a.x + a.w);
    case Coupler::kSinhNextMix:
      return 14.0 * std::sinh(a.x + a.r * a.x_next + a.w) + a.z +
             std::sin(a.z_next + a.y_next);
  }
  return 0.0;
}

}  // namespace

double wrap_unit(double v) {
  double f = v - std::floor(v);
  return f >= 1.0 ? 0.0 : f;
}

double base_map(BaseMap kind, double r, double u) {
  if (kind == BaseMap::kLogistic) return 4.0 * r * u * (1.0 - u);
  return r * std::sin(kPi * u);
}

ChaosState step_traced(const ChaosState& s, double r, const ChaosConfig& cfg,
                       unsigned* branch_bits) {
  CouplerArgs args{r, s.x, s.y, s.z, s.w, 0.0, 0.0, 0.0};
  unsigned bits = 0;

  // box 0 reads x, box 1 reads y, box 2 reads w, box 3 reads z through the
  // base map; tent_base is z for box 0 and zeta_k for the others.
  auto eval_box = [&](int box, double map_in, double guard,
                      double tent_base) -> double {
    const bool second = !(guard < 0.5);
    const int slot = 2 * box + (second ? 1 : 0);
    if (second) bits |= 1u << box;
    const double t1 = cfg.alphas[slot] *
                      outer_apply(cfg.outer_maps[slot],
                                  base_map(cfg.base_maps[slot], r, map_in));
    const double t2 = coupler_apply(cfg.couplers[slot], args);
    const double u = second ? (1.0 - tent_base) : tent_base;
    const double t3 =
        tent_apply(cfg.tent_arms[slot], (cfg.betas[slot] - r) * u / 2.0);
    return combine_mod1(t1, t2, t3);
  };

  ChaosState next;
  next.x = eval_box(0, s.x, s.w, s.z);
  args.x_next = next.x;
  const double zeta1 = cfg.xi_choice[0] == XiPick::kNext ? next.x : s.x;
  next.y = eval_box(1, s.y, zeta1, zeta1);
  args.y_next = next.y;
  const double zeta2 = cfg.xi_choice[1] == XiPick::kNext ? next.y : s.y;
  next.z = eval_box(2, s.w, zeta2, zeta2);
  args.z_next = next.z;
  const double zeta3 = cfg.xi_choice[2] == XiPick::kNext ? next.z : s.z;
  next.w = eval_box(3, s.z, zeta3, zeta3);

  if (branch_bits) *branch_bits = bits;
  return next;
}

ChaosState step(const ChaosState& s, double r, const ChaosConfig& cfg) {
  return step_traced(s, r, cfg, nullptr);
}

const ChaosConfig& case_i() {
  static const ChaosConfig cfg = [] {
    ChaosConfig c;
    c.alphas = {1, 16, 10, 20, 10, 20, 10, 20};
    c.betas = {6, 2, 50, 30, 50, 30, 50, 30};
    c.base_maps = {BaseMap::kLogistic, BaseMap::kSin, BaseMap::kSin,
                   BaseMap::kSin,      BaseMap::kLogistic, BaseMap::kSin,
                   BaseMap::kSin,      BaseMap::kLogistic};
    c.outer_maps = {OuterMap::kCosh,     OuterMap::kCot,   OuterMap::kIdentity,
                    OuterMap::kSinPi,    OuterMap::kIdentity, OuterMap::kExpPi,
                    OuterMap::kIdentity, OuterMap::kSinPi};
    c.couplers = {Coupler::kTanhCosMix, Coupler::kExpLogMix,
                  Coupler::kTanSum4,    Coupler::kExpScaled20,
                  Coupler::kTanPlusZW,  Coupler::kExpShiftSin,
                  Coupler::kTanPlusW,   Coupler::kExpShiftZ};
    c.tent_arms = {TentArm::kSin2, TentArm::kLinear4, TentArm::kExp2,
                   TentArm::kCot1, TentArm::kExp2,    TentArm::kCot4,
                   TentArm::kExp2, TentArm::kCot4};
    c.xi_choice = {XiPick::kCurrent, XiPick::kCurrent, XiPick::kCurrent};
    return c;
  }();
  return cfg;
}

const ChaosConfig& case_ii() {
  static const ChaosConfig cfg = [] {
    ChaosConfig c;
    c.alphas = {7, 12, 14, 14, 3, 15, 15, 10};
    c.betas = {69, 28, 68, 36, 33, 2, 5, 7};
    c.base_maps = {BaseMap::kLogistic, BaseMap::kSin,      BaseMap::kSin,
                   BaseMap::kLogistic, BaseMap::kLogistic, BaseMap::kLogistic,
                   BaseMap::kLogistic, BaseMap::kLogistic};
    c.outer_maps = {OuterMap::kCos,   OuterMap::kIdentity, OuterMap::kIdentity,
                    OuterMap::kIdentity, OuterMap::kSin,   OuterMap::kExpPi,
                    OuterMap::kSinPi, OuterMap::kCosSinPi};
    c.couplers = {Coupler::kTanCosMix,  Coupler::kSinAffine,
                  Coupler::kCosNext,    Coupler::kArgMean,
                  Coupler::kTanNextMix, Coupler::kAffineNextSin,
                  Coupler::kCosNextLog, Coupler::kSinhNextMix};
    c.tent_arms = {TentArm::kSin2,  TentArm::kLinear4, TentArm::kExp2,
                   TentArm::kLinear4, TentArm::kCosh2, TentArm::kCoth1,
                   TentArm::kExp4,  TentArm::kCoth1};
    c.xi_choice = {XiPick::kNext, XiPick::kNext, XiPick::kNext};
    return c;
  }();
  return cfg;
}

const ChaosConfig* preset_by_name(std::string_view name) {
  if (name == "case-i") return &case_i();
  if (name == "case-ii") return &case_ii();
  return nullptr;
}

ChaosSequence psi(const ChaosState& gamma, double r, std::size_t n,
                  const ChaosConfig& cfg) {
  if (n < 1) throw std::invalid_argument("psi: n must be >= 1");
  ChaosSequence seq;
  seq.r = r;
  seq.gamma = gamma;
  seq.samples.resize(4 * n);
  ChaosState s = gamma;
  for (std::size_t i = 0; i < n; ++i) {
    s = step(s, r, cfg);
    seq.samples[4 * i + 0] = s.x;
    seq.samples[4 * i + 1] = s.y;
    seq.samples[4 * i + 2] = s.z;
    seq.samples[4 * i + 3] = s.w;
  }
  return seq;
}

double truncate_value(double v, int tau) {
  if (tau < 1) throw std::invalid_argument("truncate_value: tau must be >= 1");
  const double scale = std::pow(10.0, tau);
  return std::floor(v * scale) / scale;
}

ChaosSequence truncated(const ChaosSequence& seq, int tau) {
  ChaosSequence out = seq;
  for (double& v : out.samples) v = truncate_value(v, tau);
  return out;
}

std::vector<double> chi(const ChaosState& q, double r, std::size_t j,
                        const ChaosConfig& cfg) {
  if (j < 1) throw std::invalid_argument("chi: j must be >= 1");
  const std::size_t ncols = (j + 3) / 4;
  const ChaosSequence seq = psi(q, r, ncols, cfg);
  std::vector<double> out;
  out.reserve(j);
  for (int comp = 0; comp < 4 && out.size() < j; ++comp)
    for (std::size_t c = 0; c < ncols && out.size() < j; ++c)
      out.push_back(seq.at(comp, c));
  return out;
}

}  // namespace chaoscrypt
