#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcp {

// Error taxonomy; the CLI maps these onto its exit-code contract.
struct ValidationError : std::runtime_error { using std::runtime_error::runtime_error; };
struct ConfigError : std::runtime_error { using std::runtime_error::runtime_error; };
struct SamplingError : std::runtime_error { using std::runtime_error::runtime_error; };
struct CheckpointError : std::runtime_error { using std::runtime_error::runtime_error; };
struct NumericalError : std::runtime_error { using std::runtime_error::runtime_error; };

std::uint64_t splitmix64(std::uint64_t x);

/// Derives an independent stream seed from a base seed. Used everywhere a
/// reproducible per-item seed is needed (episode i of a run, image id of a
/// synthetic dataset, ...), so traces replay exactly after a resume.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// mt19937_64 engine with hand-rolled distributions. The engine's output
/// sequence is fixed by the standard and the distributions below avoid
/// libstdc++-specific algorithms, so results are identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(eng_() >> 11) * (1.0 / 9007199254740992.0);
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform in [0, n). n must be > 0.
  int uniform_int(int n) {
    int v = static_cast<int>(uniform() * static_cast<double>(n));
    return v < n ? v : n - 1;
  }

  /// Standard normal via Box-Muller.
  double normal();

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      std::swap(v[static_cast<size_t>(i)], v[static_cast<size_t>(uniform_int(i + 1))]);
    }
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Debug logging gated by DCP_LOG=debug (stderr). Quiet by default.
bool debug_logging_enabled();
void log_debug(const std::string& msg);

}  // namespace dcp
