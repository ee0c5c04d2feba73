#pragma once

#include <complex>
#include <optional>
#include <variant>
#include <vector>

#include "lkev/numerics.hpp"

namespace lkev {

/// Nonnegative density on a uniform angular grid, taken with respect to
/// d(theta) (not d(theta)/2pi): values[j] = rho(2pi j / N).
struct CircleDensity {
  std::vector<double> values;

  CircleDensity() = default;
  explicit CircleDensity(std::vector<double> v);

  std::size_t grid_size() const { return values.size(); }
  double dtheta() const { return two_pi / static_cast<double>(values.size()); }
  /// Rectangle-rule mass; exact for band-limited integrands.
  double mass() const;
  double max_value() const;
};

CircleDensity uniform_density(std::size_t n, double mass = 1.0);

struct AtomicSlice {
  /// (angle in [0,2pi), weight > 0)
  std::vector<std::pair<double, double>> atoms;
  double mass() const;
};

/// One time slice of a driving measure: constant content on [t0,t1).
struct MeasureSlice {
  double t0 = 0.0;
  double t1 = 0.0;
  std::variant<CircleDensity, AtomicSlice> content;
  double mass = 0.0;  // the paper's m_t, constant on the slice

  double duration() const { return t1 - t0; }
  bool is_density() const { return std::holds_alternative<CircleDensity>(content); }
  const CircleDensity& density() const { return std::get<CircleDensity>(content); }
  const AtomicSlice& atoms() const { return std::get<AtomicSlice>(content); }

  static MeasureSlice from_density(double t0, double t1, CircleDensity d);
  static MeasureSlice from_atoms(double t0, double t1, AtomicSlice a);
};

/// Piecewise-in-time family of circle measures on the cylinder S^1 x [0,T].
struct DrivingMeasure {
  double T = 0.0;
  std::vector<MeasureSlice> slices;

  /// Checks the partition structure and per-slice mass consistency
  /// (1e-10 for density slices); throws std::invalid_argument on violation.
  void validate() const;

  /// Member of N_T: every slice mass equals 1 within tol.
  bool is_normalized(double tol = 1e-8) const;

  bool all_density() const;
  const MeasureSlice& slice_at(double t) const;
  std::size_t slice_index_at(double t) const;
  /// integral_0^t m_s ds (log-capacity of the generated hull at time t).
  double capacity(double t) const;
  double total_mass() const { return capacity(T); }
};

DrivingMeasure uniform_measure(double T, std::size_t grid = 1024);

/// Increasing map s -> t(s) sampled on a uniform s-grid over [0,T], with
/// derivative samples. Evaluation between samples is cubic Hermite.
struct TimeChange {
  std::vector<double> t;   // t(s_i), s_i = i*T/(K)
  std::vector<double> dt;  // t'(s_i)
  double T = 0.0;

  void validate() const;
  std::size_t intervals() const { return t.size() - 1; }
  double eval(double s) const;
  double deriv(double s) const;

  static TimeChange identity(double T, std::size_t samples);
};

// --- entropy / energy functionals -----------------------------------------

/// integral rho log(2 pi rho) dtheta by the periodic rectangle rule,
/// with 0 log 0 := 0. Probability normalization is not required.
double slice_entropy(const CircleDensity& rho);

/// Sum over slices of duration * slice_entropy; +infinity for any atomic slice.
double total_entropy(const DrivingMeasure& mu);

/// total_entropy minus the differential entropy of the mass profile,
/// sum duration * m log m. Invariant under time reparametrization.
double invariant_entropy(const DrivingMeasure& mu);

/// Differential entropy of the piecewise-constant mass profile.
double mass_profile_entropy(const DrivingMeasure& mu);

/// The time-changed measure mu~_s = t'(s) rho_{t(s)}, resampled on the
/// output slice grid given by tau's sample intervals (midpoint values).
DrivingMeasure time_change(const DrivingMeasure& mu, const TimeChange& tau);

/// integral |(sqrt rho)'|^2 dtheta with central differences. Returns
/// +infinity when a discrete difference quotient exceeds 1e8 (density
/// vanishing next to a non-vanishing neighbor).
double dirichlet_energy(const CircleDensity& rho);

/// Sum over slices of duration * dirichlet_energy.
double total_energy(const DrivingMeasure& mu);

/// Pinsker lower bound (1/2)(integral |2 pi rho - 1| dtheta/2pi)^2 for a
/// probability density; always <= slice_entropy(rho).
double pinsker_bound(const CircleDensity& rho);

/// Window average <mu>_m: piecewise-constant measure with m slices, each the
/// time average of mu over a window of length T/m. Mass per window preserved.
DrivingMeasure average_in_time(const DrivingMeasure& mu, int m);

/// I_m(<mu>_m) = (T/m) sum_i h_{S^1}(nu_i) over the m window-averaged
/// probability slices; <= total_entropy(mu) and nondecreasing along dyadic m.
double coarse_grained_entropy(const DrivingMeasure& mu, int m);

}  // namespace lkev
