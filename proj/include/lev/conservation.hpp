#pragma once

#include <string>
#include <vector>

#include "lev/density.hpp"
#include "lev/errors.hpp"

namespace lev {

// Bits routed through each operator channel for one task.
struct ChannelAllocation {
  double i_planning = 0.0;
  std::vector<double> i_interrupts;
  double i_review = 0.0;

  double sum() const;
  void validate() const;
};

// Dimensionless per-channel overhead multipliers on raw transfer time
// (context switches, rework, re-orientation). Strictly positive; the
// framework does not order them.
struct CostScalars {
  double c_p = 1.0;
  std::vector<double> c_i;
  double c_r = 1.0;

  void validate(std::size_t interrupt_count) const;
};

// Directional split per channel. One alpha per interrupt.
struct ChannelAlphas {
  double alpha_p = 0.0;
  std::vector<double> alpha_i;
  double alpha_r = 0.0;

  void validate(std::size_t interrupt_count) const;
};

// Everything the per-task algebra needs: displaced work, information
// requirement and novelty, channel routing, cost scalars, splits.
struct TaskSpec {
  std::string id;
  double h_displaced = 0.0;
  double i_task = 0.0;
  double i_novel = 0.0;
  ChannelAllocation channels;
  CostScalars scalars;
  ChannelAlphas alphas;

  void validate() const;
};

// Operator time per channel, in hours.
struct PhaseTimes {
  double t_planning = 0.0;
  std::vector<double> t_interrupts;
  double t_review = 0.0;

  double interrupt_total() const;
  double total() const;
  void validate() const;
};

enum class ConservationKind { Exact, Redundant, Violated };

// Exact within tolerance, Redundant with surplus bits, or Violated with the
// deficit: a Violated description cannot have conveyed enough information.
struct ConservationVerdict {
  ConservationKind kind = ConservationKind::Exact;
  double slack_bits = 0.0;
};

inline constexpr double kConservationToleranceBits = 1e-6;

// t_channel = c * I / rho_eff(alpha) for each of the three channels.
PhaseTimes channel_times(const TaskSpec& spec, const DirectionalRates& rates);

// L_task = H_displaced / (t_planning + sum t_interrupts + t_review).
// Refuses a zero denominator rather than returning infinity.
double leverage_task(double h_displaced, const PhaseTimes& times);

// The substituted form; identical by composition to
// leverage_task(h_displaced, channel_times(spec, rates)).
double leverage_task_substituted(const TaskSpec& spec,
                                 const DirectionalRates& rates);

ConservationVerdict check_conservation(
    double i_task, const ChannelAllocation& alloc,
    double tolerance_bits = kConservationToleranceBits);

const char* to_string(ConservationKind kind);

}  // namespace lev
