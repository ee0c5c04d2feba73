#pragma once

#include <vector>

#include "lkev/measures.hpp"

namespace lkev {

/// Discretization of the cylinder S^1 x [0,T]: angle nodes theta_j = j*2pi/n_theta
/// (periodic), time nodes at cell centers t_i = (i+1/2)*T/n_t.
struct CylinderGrid {
  int n_theta = 32;
  int n_t = 16;
  double T = 1.0;

  double dtheta() const { return two_pi / n_theta; }
  double dt() const { return T / n_t; }
  std::size_t size() const { return static_cast<std::size_t>(n_theta) * n_t; }
  std::size_t index(int i_t, int j_theta) const {
    return static_cast<std::size_t>(i_t) * n_theta + j_theta;
  }
};

/// Projects a driving measure onto the grid: atoms (and density samples) go to
/// the nearest angle node; slice mass is spread over time cells by overlap.
std::vector<double> bin_measure(const DrivingMeasure& mu, const CylinderGrid& grid);

/// Grid Kantorovich-Rubinstein (flat) norm of (a - b): maximizes sum f*(a-b)
/// over grid potentials with |f| <= 1 and neighbor-difference Lipschitz
/// constraints for the cylinder graph metric. Solved exactly as a min-cost
/// flow; a grid approximation of the continuum d_KR from below.
double flat_distance_binned(const std::vector<double>& a, const std::vector<double>& b,
                            const CylinderGrid& grid);

double flat_distance(const DrivingMeasure& mu1, const DrivingMeasure& mu2,
                     const CylinderGrid& grid);

}  // namespace lkev
