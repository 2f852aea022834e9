#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>

namespace mbsense {

template <typename S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using VecX = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <typename S>
using ArrX = Eigen::Array<S, Eigen::Dynamic, 1>;

using MatrixXd = Eigen::MatrixXd;
using MatrixXcd = Eigen::MatrixXcd;
using VectorXd = Eigen::VectorXd;
using VectorXcd = Eigen::VectorXcd;
using BoolArray = Eigen::Array<bool, Eigen::Dynamic, 1>;

inline constexpr double kPi = 3.14159265358979323846;

// Deterministic, platform-independent generator (splitmix64 core).
// std::normal_distribution is implementation-defined, which would break
// byte-identical dataset reproduction across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1), 53-bit resolution
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal via Box-Muller; second draw of each pair is cached
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * kPi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Fisher-Yates index permutation
  template <typename Container>
  void shuffle(Container& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_u64() % i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Derives an independent stream seed from a base seed and stream indices.
inline std::uint64_t mix_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> parts) {
  std::uint64_t z = seed;
  for (std::uint64_t p : parts) {
    z ^= p + 0x9E3779B97F4A7C15ULL + (z << 6) + (z >> 2);
    Rng r(z);
    z = r.next_u64();
  }
  return z;
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a) { return mix_seed(seed, {a}); }
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return mix_seed(seed, {a, b});
}

}  // namespace mbsense
