#include "lev/density.hpp"

#include <cmath>
#include <string>

namespace lev {

namespace {

void require_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ValidationError("alpha must lie in [0,1], got " +
                          std::to_string(alpha));
  }
}

void require_positive_rate(double rate, const char* name) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw ValidationError(std::string(name) + " must be > 0 and finite");
  }
}

}  // namespace

void DirectionalRates::validate() const {
  require_positive_rate(rho_in, "rho_in");
  require_positive_rate(rho_out, "rho_out");
  require_positive_rate(rho_in_max, "rho_in_max");
  require_positive_rate(rho_out_max, "rho_out_max");
  if (rho_in > rho_in_max) {
    throw ValidationError("rho_in exceeds rho_in_max");
  }
  if (rho_out > rho_out_max) {
    throw ValidationError("rho_out exceeds rho_out_max");
  }
}

void ExchangeProfile::validate() const {
  require_alpha(alpha);
  if (!(info_bits >= 0.0) || !std::isfinite(info_bits)) {
    throw ValidationError("info_bits must be >= 0 and finite");
  }
}

double effective_density(double alpha, const DirectionalRates& rates) {
  require_alpha(alpha);
  if (alpha == 1.0) {
    require_positive_rate(rates.rho_in, "rho_in");
    return rates.rho_in;
  }
  if (alpha == 0.0) {
    require_positive_rate(rates.rho_out, "rho_out");
    return rates.rho_out;
  }
  require_positive_rate(rates.rho_in, "rho_in");
  require_positive_rate(rates.rho_out, "rho_out");
  return 1.0 / (alpha / rates.rho_in + (1.0 - alpha) / rates.rho_out);
}

double exchange_time(double info_bits, double alpha,
                     const DirectionalRates& rates) {
  if (!(info_bits >= 0.0) || !std::isfinite(info_bits)) {
    throw ValidationError("info_bits must be >= 0 and finite");
  }
  if (info_bits == 0.0) {
    require_alpha(alpha);
    return 0.0;
  }
  return info_bits / effective_density(alpha, rates);
}

}  // namespace lev
