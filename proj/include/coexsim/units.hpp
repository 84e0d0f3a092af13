#pragma once

#include <cmath>
#include <limits>

namespace coexsim {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double lin) {
  if (lin <= 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(lin);
}

inline double dbm_to_mw(double dbm) { return db_to_linear(dbm); }
inline double mw_to_dbm(double mw) { return linear_to_db(mw); }

// Thermal noise density at 290 K.
inline constexpr double kThermalNoiseDbmPerHz = -174.0;

}  // namespace coexsim
