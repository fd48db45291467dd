#pragma once

#include <cmath>
#include <stdexcept>

namespace qbalance {

/// Werner-state fidelity after waiting `age_rounds` rounds in memory:
/// 0.25 + (F0 - 0.25) * exp(-age * tau_round / t_c).
inline double fidelity_decay(double age_rounds, double tau_round_s, double t_c_s, double f0) {
  if (age_rounds < 0.0) throw std::invalid_argument("fidelity_decay: age must be >= 0");
  if (!(t_c_s > 0.0)) throw std::invalid_argument("fidelity_decay: t_c must be > 0");
  if (f0 < 0.25 || f0 > 1.0)
    throw std::invalid_argument("fidelity_decay: F0 must lie in [0.25, 1]");
  return 0.25 + (f0 - 0.25) * std::exp(-age_rounds * tau_round_s / t_c_s);
}

/// Continuous-time variant used by the sequential baseline, where waits
/// are not round-aligned.
inline double fidelity_decay_time(double wait_s, double t_c_s, double f0) {
  if (wait_s < 0.0) throw std::invalid_argument("fidelity_decay_time: wait must be >= 0");
  if (!(t_c_s > 0.0)) throw std::invalid_argument("fidelity_decay_time: t_c must be > 0");
  if (f0 < 0.25 || f0 > 1.0)
    throw std::invalid_argument("fidelity_decay_time: F0 must lie in [0.25, 1]");
  return 0.25 + (f0 - 0.25) * std::exp(-wait_s / t_c_s);
}

/// Fidelity of the entanglement produced by swapping two Werner pairs.
inline double swap_fidelity(double f1, double f2) {
  return f1 * f2 + (1.0 / 3.0) * (1.0 - f1) * (1.0 - f2);
}

}  // namespace qbalance
