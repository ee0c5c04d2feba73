#pragma once

#include <complex>
#include <vector>

#include "lkev/numerics.hpp"

namespace lkev {

using cplx = std::complex<double>;

/// Log-capacity increment of a slit of length d: e^t = 1 + d^2/(4(1+d)).
double slit_capacity(double d);

/// Inverse of slit_capacity: slit length with prescribed log-capacity t >= 0.
double slit_length_from_capacity(double t);

struct SlitParams {
  double d = 0.0;      // slit length, > 0
  double theta = 0.0;  // attachment angle in [0, 2pi)
};

/// phi_{d,theta}(z) = e^{i theta} phi_d(e^{-i theta} z), where phi_d maps the
/// exterior disk onto the exterior disk minus the radial slit [1, 1+d],
/// fixing infinity with positive derivative. phi_d is evaluated from the
/// implicit relation (w+1)^2/w = e^{t(d)} (z+1)^2/z: the closed form of the
/// radial Loewner flow with a constant point mass.
cplx slit_map_eval(const SlitParams& p, cplx z);

/// Phi_n = phi_{d_1,theta_1} o ... o phi_{d_n,theta_n}; particles[0] is
/// applied last (outermost).
struct ComposedSlitMap {
  std::vector<SlitParams> particles;
};

cplx compose_eval(const ComposedSlitMap& chain, cplx z);

/// Sum of slit capacities; equals the log of the asymptotic ratio Phi(z)/z.
double chain_capacity(const ComposedSlitMap& chain);

}  // namespace lkev
