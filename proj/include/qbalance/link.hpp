#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbalance {

/// Physical parameters of one repeater<->node link and the derived
/// per-attempt quantities. Attenuation is fiber loss in dB/km, so the
/// success probability is 10^(-loss_dB/10).
struct LinkParams {
  double distance_km = 0.0;
  double attenuation_db_per_km = 0.0;
  double light_speed_km_per_s = 0.0;
  double success_prob = 0.0;
  double trip_time_s = 0.0;
};

inline constexpr double kDefaultAttenuationDbPerKm = 0.15;
inline constexpr double kDefaultLightSpeedKmPerS = 2.0e5;  // light in fiber

inline LinkParams make_link(double distance_km,
                            double attenuation_db_per_km = kDefaultAttenuationDbPerKm,
                            double light_speed_km_per_s = kDefaultLightSpeedKmPerS) {
  if (!std::isfinite(distance_km) || distance_km <= 0.0)
    throw std::invalid_argument("make_link: distance_km must be finite and > 0");
  if (!std::isfinite(attenuation_db_per_km) || attenuation_db_per_km < 0.0)
    throw std::invalid_argument("make_link: attenuation_db_per_km must be finite and >= 0");
  if (!std::isfinite(light_speed_km_per_s) || light_speed_km_per_s <= 0.0)
    throw std::invalid_argument("make_link: light_speed_km_per_s must be finite and > 0");

  LinkParams lp;
  lp.distance_km = distance_km;
  lp.attenuation_db_per_km = attenuation_db_per_km;
  lp.light_speed_km_per_s = light_speed_km_per_s;
  lp.success_prob = std::pow(10.0, -attenuation_db_per_km * distance_km / 10.0);
  lp.trip_time_s = distance_km / light_speed_km_per_s;
  return lp;
}

/// Round duration: generation dominates, so the round lasts as long as
/// the slower of the two photon trips.
inline double round_time(const LinkParams& left, const LinkParams& right) {
  return std::max(left.trip_time_s, right.trip_time_s);
}

}  // namespace qbalance
