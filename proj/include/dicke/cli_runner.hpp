// cli_runner.hpp — command-line surface: trajectory and steady-state sweeps,
// critical-occupation scans, the verification suite, the reduced-vs-full
// benchmark, and the figure-reproduction presets. CSV out, JSON manifest
// alongside.

#pragma once

#include "dicke/types.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dicke::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitVerify = 3;

struct SimulateConfig {
  Scenario scenario{Scenario::coherent};
  int n_qubits{7};
  std::optional<int> two_j;          // dicke only
  std::optional<int> two_m;          // dicke initial weight; default -j+1
  std::vector<double> taus{0.0};     // one trajectory block per value
  std::optional<double> nu;          // overrides taus when set
  double t_max{3.0};
  int steps{300};
  std::optional<std::vector<double>> tau_grid;  // snapshot sweep mode
  double t_snapshot{1.8};
  int site_k{1};
};

struct SteadyConfig {
  std::vector<Scenario> scenarios{Scenario::incoherent, Scenario::coherent};
  std::vector<int> n_list{7};
  std::vector<double> tau_list{0.0};
  std::optional<double> nu;  // single-point alternative to tau_list
};

struct TauCConfig {
  std::vector<int> n_list{5};
};

struct VerifyConfig {
  int n_qubits{4};
  double tau{0.5};
  std::uint64_t seed{12345};
  int samples{50};
  bool inject_fault{false};
};

struct BenchConfig {
  std::vector<int> reduced_n{25, 50, 100, 200};
  int full_n_max{10};
  double t_max{3.0};
  int steps{1000};
  double tau{1.0};
};

// Row emitters used by the subcommands and the figure presets; they throw
// std::invalid_argument / ScenarioError on bad configs.
void write_simulate_csv(const SimulateConfig& cfg, std::ostream& out);
void write_steady_csv(const SteadyConfig& cfg, std::ostream& out);
void write_tau_c_csv(const TauCConfig& cfg, std::ostream& out);
void write_bench_csv(const BenchConfig& cfg, std::ostream& out);

// Verification suite; prints one line per check, returns true if all pass.
bool run_verify(const VerifyConfig& cfg, std::ostream& out);

// 17-significant-digit, RFC-4180-quoted CSV field.
std::string csv_field(double value);
std::string csv_field(const std::string& value);

// Full CLI: simulate|steady|tau-c|verify|bench|figures.
int run(int argc, const char* const* argv);

}  // namespace dicke::cli
