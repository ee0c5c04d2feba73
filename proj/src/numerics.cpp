#include "lkev/numerics.hpp"

namespace lkev {

void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  if (!is_pow2(n)) throw std::invalid_argument("fft_pow2: size must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * two_pi / static_cast<double>(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

std::vector<std::complex<double>> density_fourier(const std::vector<double>& values) {
  const std::size_t n = values.size();
  const double dtheta = two_pi / static_cast<double>(n);
  std::vector<std::complex<double>> out(n / 2);
  if (is_pow2(n)) {
    std::vector<std::complex<double>> buf(n);
    for (std::size_t j = 0; j < n; ++j) buf[j] = values[j];
    // c_n picks up e^{+i n theta_j}, which is the inverse-transform kernel.
    fft_pow2(buf, +1);
    for (std::size_t k = 0; k < n / 2; ++k) out[k] = buf[k] * dtheta;
  } else {
    for (std::size_t k = 0; k < n / 2; ++k) {
      std::complex<double> acc(0.0, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        const double phase = static_cast<double>(k) * dtheta * static_cast<double>(j);
        acc += values[j] * std::complex<double>(std::cos(phase), std::sin(phase));
      }
      out[k] = acc * dtheta;
    }
  }
  return out;
}

}  // namespace lkev
