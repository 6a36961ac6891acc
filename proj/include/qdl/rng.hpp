#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace qdl {

// Deterministic RNG used everywhere randomness is needed. The engine is
// std::mt19937_64 (bit-exact across platforms); uniform and normal variates
// are derived here rather than through std:: distributions, whose output is
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform in [0, 1), 53-bit resolution
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // standard normal via Box-Muller; generates pairs, caches the spare
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925287 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}
}  // namespace detail

// Splits one master seed into independent per-stage streams, keyed by a
// stable stage name ("iinn.points", "pinn.collocation", ...).
inline std::uint64_t stage_seed(std::uint64_t master, std::string_view stage) {
  return detail::splitmix64(master ^ detail::fnv1a(stage));
}

inline Rng stage_rng(std::uint64_t master, std::string_view stage) {
  return Rng(stage_seed(master, stage));
}

}  // namespace qdl
