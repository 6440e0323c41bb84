#pragma once

#include "lev/errors.hpp"
#include "lev/units.hpp"

namespace lev {

// Directional information densities in bits/hour, each with its ceiling.
// The in-direction (human -> agent) is bottlenecked by human output; the
// out-direction (agent -> human) by human input. Ceilings are physical
// claims, not tuning knobs: rho_in_max defaults to 20 bits/sec, rho_out_max
// is poorly characterized and must always be supplied.
struct DirectionalRates {
  double rho_in = 0.0;
  double rho_out = 0.0;
  double rho_in_max = kDefaultRhoInMax;
  double rho_out_max = 0.0;

  void validate() const;
};

// One exchange: the fraction alpha of its information flowing human->agent,
// and the total useful bits moved.
struct ExchangeProfile {
  double alpha = 0.0;
  double info_bits = 0.0;

  void validate() const;
};

// Harmonic mean of the directional densities weighted by the directional
// split. alpha=0 and alpha=1 take the single-channel closed form so a
// degenerate exchange never touches the unused direction.
double effective_density(double alpha, const DirectionalRates& rates);

// Time in hours to move info_bits through an exchange with the given split.
// Equals info_bits / effective_density(alpha, rates) exactly.
double exchange_time(double info_bits, double alpha,
                     const DirectionalRates& rates);

}  // namespace lev
