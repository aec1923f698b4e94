#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace afx {

template <typename T>
using Arr2 = Eigen::Array<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using Arr1 = Eigen::Array<T, Eigen::Dynamic, 1>;
template <typename T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

// Engine-wide audio constants. All models run at a fixed rate; control
// signals run at one value per kBlockSize samples.
inline constexpr int kSampleRate = 48000;
inline constexpr int kBlockSize = 128;

inline Index num_blocks(Index n_samples) {
  return (n_samples + kBlockSize - 1) / kBlockSize;
}

// Error taxonomy. Everything user-facing derives from Error so the CLI can
// catch one type and report cleanly.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ShapeError : Error {
  using Error::Error;
};
struct ContractViolation : Error {
  using Error::Error;
};
struct NanPropagationError : Error {
  using Error::Error;
};
struct ConditioningError : Error {
  using Error::Error;
};
struct StabilityError : Error {
  using Error::Error;
};
struct ParameterError : Error {
  using Error::Error;
};
struct StateError : Error {
  using Error::Error;
};
struct FormatError : Error {
  using Error::Error;
};
struct AlignmentError : Error {
  using Error::Error;
};
struct DataError : Error {
  using Error::Error;
};
struct FrameError : Error {
  using Error::Error;
};
struct CheckpointError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct DeterminismError : Error {
  using Error::Error;
};
struct DegenerateTargetError : Error {
  using Error::Error;
};

// Deterministic RNG. std:: distributions are implementation-defined, so the
// transforms live here; results are reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    // Box-Muller, cached second value.
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = 0.0;
    while (u1 <= 1e-300) u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  std::uint64_t below(std::uint64_t n) { return n ? next_u64() % n : 0; }

  // Derive an independent stream (for parallel sweep runs).
  Rng fork(std::uint64_t salt) {
    return Rng(next_u64() ^ (salt * 0x9e3779b97f4a7c15ull + 0x7f4a7c15ull));
  }

  template <typename T>
  Arr2<T> uniform_array(Index rows, Index cols, double lo, double hi) {
    Arr2<T> a(rows, cols);
    for (Index c = 0; c < cols; ++c)
      for (Index r = 0; r < rows; ++r) a(r, c) = static_cast<T>(uniform(lo, hi));
    return a;
  }

  template <typename T>
  Arr2<T> normal_array(Index rows, Index cols, double stddev = 1.0) {
    Arr2<T> a(rows, cols);
    for (Index c = 0; c < cols; ++c)
      for (Index r = 0; r < rows; ++r) a(r, c) = static_cast<T>(stddev * normal());
    return a;
  }

 private:
  std::uint64_t state_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 20.0); }
inline double linear_to_db(double lin) { return 20.0 * std::log10(lin); }

}  // namespace afx
