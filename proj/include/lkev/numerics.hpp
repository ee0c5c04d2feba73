#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace lkev {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Counter-based 64-bit generator (SplitMix64). Used everywhere randomness is
/// needed so that runs are bit-reproducible across platforms; std::random
/// distributions are avoided on purpose.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1) with 53-bit resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in (0,1]; safe as argument of log.
  double uniform_pos() { return 1.0 - uniform(); }

  double uniform_angle() { return two_pi * uniform(); }

 private:
  std::uint64_t state_;
};

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// In-place radix-2 Cooley-Tukey transform; sign=-1 forward, +1 inverse
/// (inverse is unscaled).
void fft_pow2(std::vector<std::complex<double>>& a, int sign);

/// Fourier coefficients c_n = integral_0^{2pi} e^{i n theta} rho(theta) dtheta,
/// n = 0..N/2-1, of a density sampled at theta_j = 2pi j / N (rectangle rule).
/// Uses the FFT when N is a power of two, a direct sum otherwise.
std::vector<std::complex<double>> density_fourier(const std::vector<double>& values);

/// x*log(x) with the 0*log(0) := 0 convention. Negative input is the caller's
/// error and returns NaN.
inline double xlogx(double x) {
  if (x == 0.0) return 0.0;
  return x * std::log(x);
}

inline double sq(double x) { return x * x; }

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline void require_domain(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace lkev
