#include "dcp/common.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace dcp {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(base ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 1e-300);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 6.283185307179586476925286766559 * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

bool debug_logging_enabled() {
  static const bool enabled = [] {
    const char* v = std::getenv("DCP_LOG");
    return v != nullptr && std::string(v) == "debug";
  }();
  return enabled;
}

void log_debug(const std::string& msg) {
  if (debug_logging_enabled()) {
    std::fprintf(stderr, "[dcp:debug] %s\n", msg.c_str());
  }
}

}  // namespace dcp
