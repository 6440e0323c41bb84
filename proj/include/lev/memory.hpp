#pragma once

#include <string>
#include <variant>
#include <vector>

#include "lev/conservation.hpp"
#include "lev/density.hpp"
#include "lev/errors.hpp"

namespace lev {

// Accumulated shared context, a nonnegative scalar in abstract context
// units, tracked per domain.
struct MemoryState {
  double m = 0.0;
  std::string domain_tag;

  void validate() const;
};

enum class Direction { In, Out };

// Candidate functional forms for rho(M). The true form is an open empirical
// question; these are user-chosen scaffolds, all strictly increasing below
// their cap and hard-clamped at the direction's ceiling.
struct LinearFamily {
  double rho0 = 0.0;   // value at m=0
  double slope = 0.0;  // bits/hour per context unit
  double cap = 0.0;    // family's own plateau
};

struct LogarithmicFamily {
  double rho0 = 0.0;
  double gain = 0.0;  // multiplies log1p(m)
  double cap = 0.0;
};

struct SaturatingFamily {
  double rho_min = 0.0;  // value at m=0
  double rho_max = 0.0;  // asymptote
  double half_m = 0.0;   // m at which the curve reaches the midpoint
};

using DensityFamily =
    std::variant<LinearFamily, LogarithmicFamily, SaturatingFamily>;

// rho(M) for both directions plus the physical ceilings.
struct DensityModel {
  DensityFamily in_family;
  DensityFamily out_family;
  double rho_in_max = kDefaultRhoInMax;
  double rho_out_max = 0.0;

  void validate() const;

  // Largest value a direction's curve can reach (cap and ceiling applied).
  double supremum(Direction dir) const;
};

double rho_of_memory(const DensityModel& model, Direction dir, double m);

// Both directions evaluated at the same memory stock.
DirectionalRates rates_at(const DensityModel& model, double m);

// Hyperbolic decay of channel bits as memory accumulates: a channel that
// needed I bits at m=0 needs I*k/(m+k) at m. Planning splits into a constant
// novel part and a decaying context part.
struct ChannelDecay {
  double k_plan_context = 0.0;
  double k_interrupt = 0.0;
  double k_review = 0.0;

  void validate() const;
  static double factor(double m, double k);
};

struct CeilingResult {
  double l_max = 0.0;
  double planning_floor_hours = 0.0;
};

// t_planning floor: the irreducible novel bits at the exchange's density.
double planning_floor(double i_novel, double alpha_p,
                      const DirectionalRates& rates_at_m);

// L_task^max = H_displaced * rho_in_max / I_novel, the alpha_p -> 1 bound.
// Throws UnboundedCeilingError when i_novel == 0.
CeilingResult task_ceiling(double h_displaced, double rho_in_max,
                           double i_novel);

// Phase times of `spec` re-evaluated along a memory grid: density from the
// model, channel bits decayed per `decay`. The interrupt and review series
// drain to zero; planning floors at i_novel / rho_eff.
std::vector<PhaseTimes> limit_profile(const TaskSpec& spec,
                                      const DensityModel& model,
                                      const ChannelDecay& decay,
                                      const std::vector<double>& m_grid);

// Channel bits of `spec` at memory m under `decay` (used by limit_profile
// and by the simulator so both see the same law).
ChannelAllocation decayed_channels(const TaskSpec& spec,
                                   const ChannelDecay& decay, double m);

}  // namespace lev
