#include "lkev/measures.hpp"

#include <algorithm>
#include <cmath>

namespace lkev {

namespace {

void check_finite_nonneg(const std::vector<double>& v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + ": non-finite value");
    if (x < 0.0) throw std::invalid_argument(std::string(what) + ": negative value");
  }
}

}  // namespace

CircleDensity::CircleDensity(std::vector<double> v) : values(std::move(v)) {
  require(!values.empty(), "CircleDensity: empty grid");
  check_finite_nonneg(values, "CircleDensity");
}

double CircleDensity::mass() const {
  double s = 0.0;
  for (double x : values) s += x;
  return s * dtheta();
}

double CircleDensity::max_value() const {
  return *std::max_element(values.begin(), values.end());
}

CircleDensity uniform_density(std::size_t n, double mass) {
  return CircleDensity(std::vector<double>(n, mass / two_pi));
}

double AtomicSlice::mass() const {
  double s = 0.0;
  for (const auto& [theta, w] : atoms) s += w;
  return s;
}

MeasureSlice MeasureSlice::from_density(double t0, double t1, CircleDensity d) {
  MeasureSlice s;
  s.t0 = t0;
  s.t1 = t1;
  s.mass = d.mass();
  s.content = std::move(d);
  return s;
}

MeasureSlice MeasureSlice::from_atoms(double t0, double t1, AtomicSlice a) {
  for (const auto& [theta, w] : a.atoms)
    require(std::isfinite(theta) && w > 0.0, "AtomicSlice: atoms need finite angle, positive weight");
  MeasureSlice s;
  s.t0 = t0;
  s.t1 = t1;
  s.mass = a.mass();
  s.content = std::move(a);
  return s;
}

void DrivingMeasure::validate() const {
  require(T > 0.0, "DrivingMeasure: T must be positive");
  require(!slices.empty(), "DrivingMeasure: no slices");
  const double tol = 1e-9 * std::max(1.0, T);
  require(std::abs(slices.front().t0) <= tol, "DrivingMeasure: slices must start at 0");
  require(std::abs(slices.back().t1 - T) <= tol, "DrivingMeasure: slices must end at T");
  for (std::size_t i = 0; i < slices.size(); ++i) {
    const MeasureSlice& s = slices[i];
    require(s.t1 > s.t0, "DrivingMeasure: slice with nonpositive duration");
    require(s.mass > 0.0, "DrivingMeasure: slice mass must be positive");
    if (i + 1 < slices.size())
      require(std::abs(slices[i + 1].t0 - s.t1) <= tol, "DrivingMeasure: gap or overlap between slices");
    if (s.is_density()) {
      require(std::abs(s.density().mass() - s.mass) <= 1e-10 * std::max(1.0, s.mass),
              "DrivingMeasure: density mass inconsistent with declared slice mass");
    } else {
      require(std::abs(s.atoms().mass() - s.mass) <= 1e-14 * std::max(1.0, s.mass),
              "DrivingMeasure: atom weights inconsistent with declared slice mass");
    }
  }
}

bool DrivingMeasure::is_normalized(double tol) const {
  for (const MeasureSlice& s : slices)
    if (std::abs(s.mass - 1.0) > tol) return false;
  return true;
}

bool DrivingMeasure::all_density() const {
  for (const MeasureSlice& s : slices)
    if (!s.is_density()) return false;
  return true;
}

std::size_t DrivingMeasure::slice_index_at(double t) const {
  require(t >= -1e-12 && t <= T + 1e-12, "DrivingMeasure: time out of range");
  // slices are few enough that a linear scan never shows up in profiles,
  // but measures built from fine grids do, so bisect.
  std::size_t lo = 0, hi = slices.size();
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (t < slices[mid].t0)
      hi = mid;
    else
      lo = mid;
  }
  return lo;
}

const MeasureSlice& DrivingMeasure::slice_at(double t) const {
  return slices[slice_index_at(t)];
}

double DrivingMeasure::capacity(double t) const {
  double c = 0.0;
  for (const MeasureSlice& s : slices) {
    if (t <= s.t0) break;
    c += s.mass * (std::min(t, s.t1) - s.t0);
  }
  return c;
}

DrivingMeasure uniform_measure(double T, std::size_t grid) {
  DrivingMeasure mu;
  mu.T = T;
  mu.slices.push_back(MeasureSlice::from_density(0.0, T, uniform_density(grid)));
  return mu;
}

void TimeChange::validate() const {
  require(t.size() >= 2 && dt.size() == t.size(), "TimeChange: need matching sample arrays");
  require(T > 0.0, "TimeChange: T must be positive");
  const double tol = 1e-9 * std::max(1.0, T);
  require(std::abs(t.front()) <= tol && std::abs(t.back() - T) <= tol,
          "TimeChange: endpoints must be fixed (t(0)=0, t(T)=T)");
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    require(t[i + 1] > t[i], "TimeChange: map must be strictly increasing");
  for (double d : dt) require(d >= 0.0 && std::isfinite(d), "TimeChange: derivative samples must be >= 0");
}

namespace {

// Cubic Hermite on the interval containing s; returns {t(s), t'(s)}.
std::pair<double, double> hermite_eval(const TimeChange& tc, double s) {
  const std::size_t k = tc.intervals();
  const double h = tc.T / static_cast<double>(k);
  double u = s / h;
  std::size_t i = static_cast<std::size_t>(std::floor(u));
  if (i >= k) i = k - 1;
  u -= static_cast<double>(i);
  const double p0 = tc.t[i], p1 = tc.t[i + 1];
  const double m0 = tc.dt[i] * h, m1 = tc.dt[i + 1] * h;
  const double u2 = u * u, u3 = u2 * u;
  const double val = (2 * u3 - 3 * u2 + 1) * p0 + (u3 - 2 * u2 + u) * m0 +
                     (-2 * u3 + 3 * u2) * p1 + (u3 - u2) * m1;
  const double der = ((6 * u2 - 6 * u) * p0 + (3 * u2 - 4 * u + 1) * m0 +
                      (-6 * u2 + 6 * u) * p1 + (3 * u2 - 2 * u) * m1) / h;
  return {val, der};
}

}  // namespace

double TimeChange::eval(double s) const { return hermite_eval(*this, s).first; }
double TimeChange::deriv(double s) const { return hermite_eval(*this, s).second; }

TimeChange TimeChange::identity(double T, std::size_t samples) {
  TimeChange tc;
  tc.T = T;
  tc.t.resize(samples);
  tc.dt.assign(samples, 1.0);
  for (std::size_t i = 0; i < samples; ++i)
    tc.t[i] = T * static_cast<double>(i) / static_cast<double>(samples - 1);
  return tc;
}

double slice_entropy(const CircleDensity& rho) {
  check_finite_nonneg(rho.values, "slice_entropy");
  double s = 0.0;
  for (double v : rho.values) s += xlogx(two_pi * v);
  return s * rho.dtheta() / two_pi;
}

double total_entropy(const DrivingMeasure& mu) {
  double h = 0.0;
  for (const MeasureSlice& s : mu.slices) {
    if (!s.is_density()) return kInf;  // Dirac slices are not absolutely continuous
    h += s.duration() * slice_entropy(s.density());
  }
  return h;
}

double mass_profile_entropy(const DrivingMeasure& mu) {
  double h = 0.0;
  for (const MeasureSlice& s : mu.slices) h += s.duration() * xlogx(s.mass);
  return h;
}

double invariant_entropy(const DrivingMeasure& mu) {
  return total_entropy(mu) - mass_profile_entropy(mu);
}

DrivingMeasure time_change(const DrivingMeasure& mu, const TimeChange& tau) {
  tau.validate();
  require(mu.all_density(), "time_change: measure must be density-valued");
  require(std::abs(tau.T - mu.T) <= 1e-9 * std::max(1.0, mu.T),
          "time_change: tau must reparametrize [0,T] of the measure");
  const std::size_t k = tau.intervals();
  const double h = tau.T / static_cast<double>(k);
  DrivingMeasure out;
  out.T = mu.T;
  out.slices.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double s0 = h * static_cast<double>(i);
    const double s1 = h * static_cast<double>(i + 1);
    const double smid = 0.5 * (s0 + s1);
    const auto [tmid, dmid] = hermite_eval(tau, smid);
    const CircleDensity& src = mu.slice_at(std::clamp(tmid, 0.0, mu.T)).density();
    CircleDensity d;
    d.values.resize(src.grid_size());
    for (std::size_t j = 0; j < src.grid_size(); ++j) d.values[j] = dmid * src.values[j];
    MeasureSlice slice;
    slice.t0 = s0;
    slice.t1 = s1;
    slice.mass = d.mass();
    slice.content = std::move(d);
    if (slice.mass <= 0.0) slice.mass = std::numeric_limits<double>::min();
    out.slices.push_back(std::move(slice));
  }
  return out;
}

double dirichlet_energy(const CircleDensity& rho) {
  check_finite_nonneg(rho.values, "dirichlet_energy");
  const std::size_t n = rho.grid_size();
  const double dtheta = rho.dtheta();
  std::vector<double> s(n);
  for (std::size_t j = 0; j < n; ++j) s[j] = std::sqrt(rho.values[j]);
  double e = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double q = (s[(j + 1) % n] - s[(j + n - 1) % n]) / (2.0 * dtheta);
    if (std::abs(q) > 1e8) return kInf;
    e += q * q;
  }
  return e * dtheta;
}

double total_energy(const DrivingMeasure& mu) {
  double e = 0.0;
  for (const MeasureSlice& s : mu.slices) {
    require(s.is_density(), "total_energy: measure must be density-valued");
    const double de = dirichlet_energy(s.density());
    if (std::isinf(de)) return kInf;
    e += s.duration() * de;
  }
  return e;
}

double pinsker_bound(const CircleDensity& rho) {
  require(std::abs(rho.mass() - 1.0) <= 1e-8, "pinsker_bound: density must have mass 1");
  double l1 = 0.0;
  for (double v : rho.values) l1 += std::abs(two_pi * v - 1.0);
  l1 *= rho.dtheta() / two_pi;
  return 0.5 * l1 * l1;
}

namespace {

std::size_t common_density_grid(const DrivingMeasure& mu) {
  std::size_t n = 0;
  for (const MeasureSlice& s : mu.slices) {
    if (!s.is_density()) return 0;
    if (n == 0) n = s.density().grid_size();
    require(s.density().grid_size() == n,
            "measure operations combining slices need a common density grid");
  }
  return n;
}

}  // namespace

DrivingMeasure average_in_time(const DrivingMeasure& mu, int m) {
  require(m >= 1, "average_in_time: m must be positive");
  const double w = mu.T / static_cast<double>(m);
  DrivingMeasure out;
  out.T = mu.T;
  out.slices.reserve(static_cast<std::size_t>(m));

  const bool density = mu.all_density();
  const std::size_t n = density ? common_density_grid(mu) : 0;

  for (int i = 0; i < m; ++i) {
    const double w0 = w * i, w1 = w * (i + 1);
    MeasureSlice slice;
    slice.t0 = w0;
    slice.t1 = w1;
    if (density) {
      CircleDensity d;
      d.values.assign(n, 0.0);
      for (const MeasureSlice& s : mu.slices) {
        const double ov = std::min(w1, s.t1) - std::max(w0, s.t0);
        if (ov <= 0.0) continue;
        const double c = ov / w;
        const auto& v = s.density().values;
        for (std::size_t j = 0; j < n; ++j) d.values[j] += c * v[j];
      }
      slice.mass = d.mass();
      slice.content = std::move(d);
    } else {
      AtomicSlice a;
      for (const MeasureSlice& s : mu.slices) {
        const double ov = std::min(w1, s.t1) - std::max(w0, s.t0);
        if (ov <= 0.0) continue;
        const double c = ov / w;
        if (s.is_density())
          throw std::invalid_argument("average_in_time: mixed density/atomic windows unsupported");
        for (const auto& [theta, wt] : s.atoms().atoms) a.atoms.emplace_back(theta, c * wt);
      }
      slice.mass = a.mass();
      slice.content = std::move(a);
    }
    out.slices.push_back(std::move(slice));
  }
  return out;
}

double coarse_grained_entropy(const DrivingMeasure& mu, int m) {
  require(m >= 1, "coarse_grained_entropy: m must be positive");
  require(mu.is_normalized(), "coarse_grained_entropy: measure must be in N_T");
  return total_entropy(average_in_time(mu, m));
}

}  // namespace lkev
