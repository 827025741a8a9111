#pragma once

#include <cmath>

namespace sched::sim {

// WGS-84-ish Earth constants; km and km^3/s^2.
inline constexpr double kEarthRadiusKm = 6378.137;
inline constexpr double kMuEarth = 398600.4418;
inline constexpr double kSolarConstWm2 = 1361.0;
inline constexpr double kEarthRotRadS = 7.2921159e-5;
inline constexpr double kPi = 3.14159265358979323846;

inline double orbital_period_s(double altitude_km) {
  const double a = kEarthRadiusKm + altitude_km;
  return 2.0 * kPi * std::sqrt(a * a * a / kMuEarth);
}

// Cylindrical-shadow eclipse arc as a fraction of the orbit.
inline double eclipse_fraction_of(double altitude_km) {
  const double r = kEarthRadiusKm + altitude_km;
  return std::asin(kEarthRadiusKm / r) / kPi;
}

// Coverage cone half-angle (central angle at Earth's center) for a minimum
// target elevation. Standard horizon geometry for a circular orbit.
inline double coverage_half_angle_rad(double altitude_km, double min_elev_rad) {
  const double r = kEarthRadiusKm + altitude_km;
  return std::acos(kEarthRadiusKm / r * std::cos(min_elev_rad)) - min_elev_rad;
}

// Circular orbit. Orbital phase 0 is the subsolar point; the eclipse arc is
// centered on phase 0.5. The sun direction is treated as fixed over a run
// (a few tens of orbits), and the sun/eclipse cycle is tied to the orbital
// phase for every satellite in the constellation — a deliberate
// simplification that keeps the "cyclical energy availability" structure
// without full ephemeris work.
struct OrbitConfig {
  double altitude_km = 550.0;
  double inclination_rad = 51.6 * kPi / 180.0;
  double raan_rad = 0.0;
  double phase_frac = 0.0;  // fraction of an orbit offsetting this sat along track
  double period_s = orbital_period_s(550.0);
  double eclipse_fraction = eclipse_fraction_of(550.0);

  static OrbitConfig at_altitude(double alt_km) {
    OrbitConfig c;
    c.altitude_km = alt_km;
    c.period_s = orbital_period_s(alt_km);
    c.eclipse_fraction = eclipse_fraction_of(alt_km);
    return c;
  }
};

// Phase in [0,1). fmod keeps t -> t + period bit-exact for representable sums.
inline double orbit_phase(const OrbitConfig& o, double t) {
  double p = std::fmod(t, o.period_s) / o.period_s + o.phase_frac;
  p -= std::floor(p);
  return p;
}

inline bool in_eclipse(const OrbitConfig& o, double t) {
  const double p = orbit_phase(o, t);
  const double dist = std::fabs(p - 0.5);  // distance from mid-eclipse phase
  return dist <= o.eclipse_fraction * 0.5;
}

// Sun incidence: panels see the sun squarely at phase 0, grazing at +-0.25.
inline double cos_sun_incidence(const OrbitConfig& o, double t) {
  return std::cos(2.0 * kPi * orbit_phase(o, t));
}

struct GeoPoint {
  double lat_rad;
  double lon_rad;
};

// Sub-satellite point on the rotating Earth.
inline GeoPoint sub_satellite_point(const OrbitConfig& o, double t) {
  const double u = 2.0 * kPi * orbit_phase(o, t);  // argument of latitude
  const double lat = std::asin(std::sin(o.inclination_rad) * std::sin(u));
  double lon = o.raan_rad + std::atan2(std::cos(o.inclination_rad) * std::sin(u), std::cos(u)) -
               kEarthRotRadS * t;
  lon = std::fmod(lon, 2.0 * kPi);
  if (lon < -kPi) lon += 2.0 * kPi;
  if (lon >= kPi) lon -= 2.0 * kPi;
  return {lat, lon};
}

inline double great_circle_angle(const GeoPoint& a, const GeoPoint& b) {
  const double c = std::sin(a.lat_rad) * std::sin(b.lat_rad) +
                   std::cos(a.lat_rad) * std::cos(b.lat_rad) * std::cos(a.lon_rad - b.lon_rad);
  return std::acos(std::fmin(1.0, std::fmax(-1.0, c)));
}

// Initial bearing from point a toward point b, in [-pi, pi).
inline double bearing_rad(const GeoPoint& a, const GeoPoint& b) {
  const double dl = b.lon_rad - a.lon_rad;
  const double y = std::sin(dl) * std::cos(b.lat_rad);
  const double x = std::cos(a.lat_rad) * std::sin(b.lat_rad) -
                   std::sin(a.lat_rad) * std::cos(b.lat_rad) * std::cos(dl);
  return std::atan2(y, x);
}

inline double wrap_to_pi(double a) {
  a = std::fmod(a + kPi, 2.0 * kPi);
  if (a < 0) a += 2.0 * kPi;
  return a - kPi;
}

}  // namespace sched::sim
