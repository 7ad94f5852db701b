#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chaoscrypt/cipher.hpp"
#include "chaoscrypt/dynamics.hpp"
#include "chaoscrypt/keyfile.hpp"
#include "chaoscrypt/metrics.hpp"
#include "chaoscrypt/pnm.hpp"

namespace {

using namespace chaoscrypt;

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw std::runtime_error(path + ": cannot open file for writing");
  return file;
}

std::string real_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const ChaosConfig& config_or_die(const std::string& name) {
  const ChaosConfig* cfg = preset_by_name(name);
  if (!cfg) throw std::runtime_error("unknown config '" + name + "'");
  return *cfg;
}

SignificanceLevel level_from(double level) {
  if (level == 0.05) return SignificanceLevel::k005;
  if (level == 0.01) return SignificanceLevel::k001;
  if (level == 0.001) return SignificanceLevel::k0001;
  throw std::runtime_error("level must be one of 0.05, 0.01, 0.001");
}

struct CommonOpts {
  std::string config = "case-i";
  double r = 0.7;
  std::optional<double> r0;
};

void add_key_opts(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config, "chaos preset: case-i or case-ii")
      ->check(CLI::IsMember({"case-i", "case-ii"}));
  cmd->add_option("--r", opts.r, "control parameter in (0, 1.2]");
  cmd->add_option("--r0", opts.r0,
                  "secondary parameter in [0, 4); drawn from system entropy "
                  "when omitted");
}

int run_encrypt(const std::string& input, const std::string& out,
                std::string key_path, const CommonOpts& opts) {
  const ChaosConfig& cfg = config_or_die(opts.config);
  const ImageBuffer image = read_pnm(input);
  const double r0 = opts.r0 ? *opts.r0 : draw_r0();

  const EncryptResult result = image.channels == 1
                                   ? encrypt_gray(image, opts.r, r0, cfg)
                                   : encrypt_color(image, opts.r, r0, cfg);
  write_pnm(result.ciphertext, out);

  if (key_path.empty()) key_path = out + ".key";
  KeyFile kf;
  kf.config_id = opts.config;
  kf.key = result.key;
  kf.width = image.width;
  kf.height = image.height;
  kf.channels = image.channels;
  write_key_file(kf, key_path);
  std::cout << "wrote " << out << " and " << key_path << "\n";
  return 0;
}

int run_decrypt(const std::string& input, const std::string& out,
                const std::string& key_path) {
  const KeyFile kf = read_key_file(key_path);
  const ChaosConfig& cfg = config_or_die(kf.config_id);
  const ImageBuffer ciphertext = read_pnm(input);
  if (ciphertext.width != kf.width || ciphertext.height != kf.height ||
      ciphertext.channels != kf.channels)
    throw std::runtime_error(input + ": geometry does not match the key file");

  const ImageBuffer plain = ciphertext.channels == 1
                                ? decrypt_gray(ciphertext, kf.key, cfg)
                                : decrypt_color(ciphertext, kf.key, cfg);
  write_pnm(plain, out);
  std::cout << "wrote " << out << "\n";
  return 0;
}

int run_keygen(const std::string& input, const std::string& out,
               const CommonOpts& opts) {
  const ChaosConfig& cfg = config_or_die(opts.config);
  const ImageBuffer image = read_pnm(input);
  const double r0 = opts.r0 ? *opts.r0 : draw_r0();
  const KeyMaterial key = image.channels == 1
                              ? keygen_gray(image, opts.r, r0, cfg)
                              : keygen_color(image, opts.r, r0, cfg);
  KeyFile kf;
  kf.config_id = opts.config;
  kf.key = key;
  kf.width = image.width;
  kf.height = image.height;
  kf.channels = image.channels;
  if (out.empty()) {
    std::cout << serialize_key(kf);
  } else {
    write_key_file(kf, out);
    std::cout << "wrote " << out << "\n";
  }
  return 0;
}

struct GammaOpts {
  double x0 = 0.3, y0 = 0.3, z0 = 0.3, w0 = 0.3;
  ChaosState state() const { return {x0, y0, z0, w0}; }
};

void add_gamma_opts(CLI::App* cmd, GammaOpts& g) {
  cmd->add_option("--x0", g.x0, "initial x");
  cmd->add_option("--y0", g.y0, "initial y");
  cmd->add_option("--z0", g.z0, "initial z");
  cmd->add_option("--w0", g.w0, "initial w");
}

int run_lyapunov(const std::string& config, const GammaOpts& gamma, double r_lo,
                 double r_hi, std::size_t r_steps, std::size_t n,
                 const std::string& out_path) {
  const ChaosConfig& cfg = config_or_die(config);
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  out << "r,lam1,lam2,lam3,lam4\n";
  for (std::size_t k = 0; k < r_steps; ++k) {
    const double r = r_steps == 1
                         ? r_hi
                         : r_lo + (r_hi - r_lo) * static_cast<double>(k + 1) /
                                      static_cast<double>(r_steps);
    const LyapunovResult res = lyapunov_spectrum(cfg, r, gamma.state(), n);
    out << real_str(r);
    for (double lam : res.exponents) out << "," << real_str(lam);
    out << "\n";
    if (res.quality_warning)
      std::cerr << "warning: r=" << r << ": more than 1% of Jacobian columns "
                << "were degenerate (" << res.guard_activations << ")\n";
  }
  return 0;
}

int run_bifurcation(const std::string& config, const GammaOpts& gamma,
                    double r_lo, double r_hi, std::size_t r_steps,
                    std::size_t transient, std::size_t keep,
                    const std::string& out_path) {
  const ChaosConfig& cfg = config_or_die(config);
  const auto rows =
      bifurcation_scan(cfg, gamma.state(), r_lo, r_hi, r_steps, transient, keep);
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  out << "r,component,value\n";
  const char* names = "xyzw";
  for (const auto& row : rows)
    out << real_str(row.r) << "," << names[row.component] << ","
        << real_str(row.value) << "\n";
  return 0;
}

int run_cobweb(const std::string& config, const GammaOpts& gamma, double r,
               std::size_t n, const std::string& out_path) {
  const ChaosConfig& cfg = config_or_die(config);
  const auto pairs = cobweb_trace(cfg, r, gamma.state(), n);
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  out << "x_i,x_next\n";
  for (const auto& [a, b] : pairs)
    out << real_str(a) << "," << real_str(b) << "\n";
  return 0;
}

int run_histogram(const std::string& config, const GammaOpts& gamma, double r,
                  std::size_t n, std::size_t bins, int component,
                  const std::string& out_path) {
  if (component < 0 || component > 3)
    throw std::runtime_error("--component must be in 0..3 (x, y, z, w)");
  const ChaosConfig& cfg = config_or_die(config);
  const ChaosSequence seq = psi(gamma.state(), r, n, cfg);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = seq.at(component, i);
  const auto counts = sequence_histogram(values, bins);

  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  out << "bin_lo,bin_hi,count\n";
  for (std::size_t b = 0; b < bins; ++b)
    out << real_str(static_cast<double>(b) / static_cast<double>(bins)) << ","
        << real_str(static_cast<double>(b + 1) / static_cast<double>(bins))
        << "," << counts[b] << "\n";
  return 0;
}

int run_metrics(const std::string& input, const CommonOpts& opts,
                std::size_t pairs, std::uint64_t seed, std::size_t trials,
                double level, bool run_gate, std::size_t min_pass,
                const std::string& out_path) {
  const ImageBuffer image = read_pnm(input);
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  out << "metric,channel,value\n";

  const char* dir_names[4] = {"corr_h", "corr_v", "corr_d1", "corr_d2"};
  const Direction dirs[4] = {Direction::kHorizontal, Direction::kVertical,
                             Direction::kDiagonalUp, Direction::kDiagonalDown};
  for (int ch = 0; ch < image.channels; ++ch) {
    out << "entropy," << ch << "," << real_str(shannon_entropy(image, ch))
        << "\n";
    for (int d = 0; d < 4; ++d) {
      const auto c = adjacency_correlation(image, dirs[d], pairs, seed, ch);
      out << dir_names[d] << "," << ch << ","
          << (c ? real_str(*c) : "undefined(constant image)") << "\n";
    }
  }

  if (!run_gate) return 0;

  const ChaosConfig& cfg = config_or_die(opts.config);
  const double r0 = opts.r0 ? *opts.r0 : draw_r0();
  const DifferentialReport report = differential_gate(
      image, opts.r, r0, trials, level_from(level), seed, cfg);
  for (const auto& row : report.rows)
    out << "npcr_trial_" << row.trial << "," << row.layer << ","
        << real_str(row.npcr_value) << (row.npcr_pass ? ",pass" : ",fail")
        << "\n"
        << "uaci_trial_" << row.trial << "," << row.layer << ","
        << real_str(row.uaci_value) << (row.uaci_pass ? ",pass" : ",fail")
        << "\n";
  out << "gate_passes,," << report.passes << "\n";
  out << "gate_required,," << min_pass << "\n";
  if (report.passes < min_pass) {
    std::cerr << "differential gate FAILED: " << report.passes << "/"
              << report.trials << " trials passed, required " << min_pass
              << "\n";
    return 1;
  }
  return 0;
}

int run_attack(const std::string& input, const CommonOpts& opts,
               const std::string& type, double density,
               const std::vector<std::size_t>& rect, std::uint64_t seed,
               const std::string& out_image, const std::string& out_path) {
  const ChaosConfig& cfg = config_or_die(opts.config);
  const ImageBuffer image = read_pnm(input);
  const double r0 = opts.r0 ? *opts.r0 : draw_r0();

  AttackSpec spec;
  spec.seed = seed;
  if (type == "salt-pepper") {
    spec.kind = AttackSpec::Kind::kSaltPepper;
    spec.density = density;
  } else if (type == "crop") {
    spec.kind = AttackSpec::Kind::kCrop;
    if (rect.size() != 4)
      throw std::runtime_error("--rect expects x,y,w,h");
    spec.rect = {rect[0], rect[1], rect[2], rect[3]};
  } else {
    throw std::runtime_error("unknown attack type '" + type + "'");
  }

  const RobustnessReport report = robustness_report(image, opts.r, r0, spec, cfg);
  if (!out_image.empty()) write_pnm(report.decrypted, out_image);

  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  out << "metric,value\n";
  out << "psnr," << (report.psnr_infinite ? "inf" : real_str(report.psnr_value))
      << "\n";
  out << "npcr," << real_str(report.npcr_value) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chaos-based image encryption toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  GammaOpts gamma;
  std::string input, out, key_path, decrypted_out;
  std::string attack_type = "salt-pepper";
  std::vector<std::size_t> rect;
  double density = 0.1, r_lo = 0.0, r_hi = 1.2, level = 0.05, r_single = 0.5;
  std::size_t r_steps = 24, iters = 10000, transient = 1000, keep = 100;
  std::size_t pairs = 4096, trials = 10, min_pass = 8;
  std::uint64_t seed = 0;

  auto* enc = app.add_subcommand("encrypt", "encrypt a PGM/PPM image");
  enc->add_option("input", input, "plaintext image (binary P5/P6)")->required();
  enc->add_option("--out", out, "ciphertext image path")->required();
  enc->add_option("--key", key_path, "key file path (default: <out>.key)");
  add_key_opts(enc, opts);

  auto* dec = app.add_subcommand("decrypt", "decrypt with a key file");
  dec->add_option("input", input, "ciphertext image")->required();
  dec->add_option("--key", key_path, "key file written by encrypt")->required();
  dec->add_option("--out", out, "output image path")->required();

  auto* keygen = app.add_subcommand("keygen", "derive a key from an image");
  keygen->add_option("input", input, "image (binary P5/P6)")->required();
  keygen->add_option("--out", out, "key file path (stdout when omitted)");
  add_key_opts(keygen, opts);

  auto* lyap = app.add_subcommand("analyze-lyapunov",
                                  "Lyapunov spectrum over an r grid (CSV)");
  lyap->add_option("--config", opts.config, "chaos preset")
      ->check(CLI::IsMember({"case-i", "case-ii"}));
  lyap->add_option("--r-lo", r_lo, "grid start (exclusive)");
  lyap->add_option("--r-hi", r_hi, "grid end (inclusive)");
  lyap->add_option("--r-steps", r_steps, "number of grid points");
  lyap->add_option("--n", iters, "iterations per point (>= 1000)");
  lyap->add_option("--out", out, "CSV path (stdout when omitted)");
  add_gamma_opts(lyap, gamma);

  auto* bif = app.add_subcommand("analyze-bifurcation",
                                 "bifurcation scan (CSV: r,component,value)");
  bif->add_option("--config", opts.config, "chaos preset")
      ->check(CLI::IsMember({"case-i", "case-ii"}));
  bif->add_option("--r-lo", r_lo, "grid start (exclusive)");
  bif->add_option("--r-hi", r_hi, "grid end (inclusive)");
  bif->add_option("--r-steps", r_steps, "number of grid points");
  bif->add_option("--transient", transient, "iterates discarded per point");
  bif->add_option("--keep", keep, "iterates recorded per point");
  bif->add_option("--out", out, "CSV path (stdout when omitted)");
  add_gamma_opts(bif, gamma);

  auto* cob = app.add_subcommand("analyze-cobweb",
                                 "cobweb pairs of the x component (CSV)");
  cob->add_option("--config", opts.config, "chaos preset")
      ->check(CLI::IsMember({"case-i", "case-ii"}));
  cob->add_option("--r", r_single, "control parameter");
  cob->add_option("--n", iters, "iterations");
  cob->add_option("--out", out, "CSV path (stdout when omitted)");
  add_gamma_opts(cob, gamma);

  std::size_t bins = 100;
  int component = 0;
  auto* histo = app.add_subcommand(
      "analyze-histogram", "bin counts of one component's samples (CSV)");
  histo->add_option("--config", opts.config, "chaos preset")
      ->check(CLI::IsMember({"case-i", "case-ii"}));
  histo->add_option("--r", r_single, "control parameter");
  histo->add_option("--n", iters, "iterations");
  histo->add_option("--bins", bins, "equal-width bins over [0,1)");
  histo->add_option("--component", component, "0..3 for x, y, z, w");
  histo->add_option("--out", out, "CSV path (stdout when omitted)");
  add_gamma_opts(histo, gamma);

  auto* met = app.add_subcommand(
      "metrics", "entropy, adjacent correlations, differential gate (CSV)");
  met->add_option("input", input, "image (binary P5/P6)")->required();
  met->add_option("--pairs", pairs, "correlation sample pairs");
  met->add_option("--seed", seed, "sampling seed");
  met->add_option("--trials", trials, "differential trials");
  met->add_option("--level", level, "significance level: 0.05, 0.01, 0.001");
  met->add_option("--min-pass", min_pass, "trials that must pass the gate");
  met->add_option("--out", out, "CSV path (stdout when omitted)");
  add_key_opts(met, opts);

  auto* atk = app.add_subcommand(
      "attack", "encrypt, attack the ciphertext, decrypt, report PSNR/NPCR");
  atk->add_option("input", input, "image (binary P5/P6)")->required();
  atk->add_option("--type", attack_type, "salt-pepper or crop");
  atk->add_option("--density", density, "salt-pepper density in [0,1]");
  atk->add_option("--rect", rect, "crop rectangle: x y w h")->expected(4);
  atk->add_option("--seed", seed, "attack seed");
  atk->add_option("--decrypted-out", decrypted_out,
                  "write the decrypted image here");
  atk->add_option("--out", out, "report CSV path (stdout when omitted)");
  add_key_opts(atk, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (enc->parsed()) return run_encrypt(input, out, key_path, opts);
    if (dec->parsed()) return run_decrypt(input, out, key_path);
    if (keygen->parsed()) return run_keygen(input, out, opts);
    if (lyap->parsed())
      return run_lyapunov(opts.config, gamma, r_lo, r_hi, r_steps, iters, out);
    if (bif->parsed())
      return run_bifurcation(opts.config, gamma, r_lo, r_hi, r_steps, transient,
                             keep, out);
    if (cob->parsed()) return run_cobweb(opts.config, gamma, r_single, iters, out);
    if (histo->parsed())
      return run_histogram(opts.config, gamma, r_single, iters, bins,
                           component, out);
    if (met->parsed()) {
      const bool gate = met->count("--r") > 0 || met->count("--r0") > 0;
      return run_metrics(input, opts, pairs, seed, trials, level, gate,
                         min_pass, out);
    }
    if (atk->parsed())
      return run_attack(input, opts, attack_type, density, rect, seed,
                        decrypted_out, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
