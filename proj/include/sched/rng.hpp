#pragma once

#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <string_view>

namespace sched {

// splitmix64 step; advances the state and returns the next value.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Seed-splitting rule: every module stream is derived from the master seed
// and a stream name, so one master seed pins the whole run.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view stream) {
  std::uint64_t x = master ^ fnv1a64(stream);
  return splitmix64(x);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::string_view stream,
                                 std::uint64_t index) {
  std::uint64_t x = master ^ fnv1a64(stream);
  x ^= 0x9e3779b97f4a7c15ULL * (index + 1);
  return splitmix64(x);
}

// mt19937_64 wrapper with stateless draw helpers. std::*_distribution is
// avoided on purpose: the engine state alone must capture the stream so
// checkpoint/resume reproduces draws exactly.
class Rng {
 public:
  Rng() : eng_(0x853c49e6748fea9bULL) {}
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // [0, 1)
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // inclusive bounds
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }

  // Box-Muller without the cached second value.
  double normal() {
    double u1 = static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  bool bernoulli(double p) { return uniform() < p; }

  friend std::ostream& operator<<(std::ostream& os, const Rng& r) { return os << r.eng_; }
  friend std::istream& operator>>(std::istream& is, Rng& r) { return is >> r.eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace sched
