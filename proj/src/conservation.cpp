#include "lev/conservation.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace lev {

namespace {

void require_nonneg(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw ValidationError(std::string(name) + " must be >= 0 and finite");
  }
}

void require_pos(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ValidationError(std::string(name) + " must be > 0 and finite");
  }
}

}  // namespace

double ChannelAllocation::sum() const {
  double s = i_planning + i_review;
  for (double b : i_interrupts) s += b;
  return s;
}

void ChannelAllocation::validate() const {
  require_nonneg(i_planning, "i_planning");
  require_nonneg(i_review, "i_review");
  for (double b : i_interrupts) require_nonneg(b, "i_interrupts[]");
}

void CostScalars::validate(std::size_t interrupt_count) const {
  require_pos(c_p, "c_p");
  require_pos(c_r, "c_r");
  if (c_i.size() != interrupt_count) {
    throw ValidationError("c_i length (" + std::to_string(c_i.size()) +
                          ") does not match interrupt count (" +
                          std::to_string(interrupt_count) + ")");
  }
  for (double c : c_i) require_pos(c, "c_i[]");
}

void ChannelAlphas::validate(std::size_t interrupt_count) const {
  auto check = [](double a, const char* name) {
    if (!(a >= 0.0 && a <= 1.0)) {
      throw ValidationError(std::string(name) + " must lie in [0,1]");
    }
  };
  check(alpha_p, "alpha_p");
  check(alpha_r, "alpha_r");
  if (alpha_i.size() != interrupt_count) {
    throw ValidationError("alpha_i length does not match interrupt count");
  }
  for (double a : alpha_i) check(a, "alpha_i[]");
}

void TaskSpec::validate() const {
  require_nonneg(h_displaced, "h_displaced");
  require_nonneg(i_task, "i_task");
  require_nonneg(i_novel, "i_novel");
  if (i_novel > i_task) {
    throw ValidationError("i_novel exceeds i_task for task '" + id + "'");
  }
  channels.validate();
  scalars.validate(channels.i_interrupts.size());
  alphas.validate(channels.i_interrupts.size());
}

double PhaseTimes::interrupt_total() const {
  return std::accumulate(t_interrupts.begin(), t_interrupts.end(), 0.0);
}

double PhaseTimes::total() const {
  return t_planning + interrupt_total() + t_review;
}

void PhaseTimes::validate() const {
  require_nonneg(t_planning, "t_planning");
  require_nonneg(t_review, "t_review");
  for (double t : t_interrupts) require_nonneg(t, "t_interrupts[]");
}

PhaseTimes channel_times(const TaskSpec& spec, const DirectionalRates& rates) {
  spec.validate();
  rates.validate();

  PhaseTimes out;
  out.t_planning =
      spec.scalars.c_p *
      exchange_time(spec.channels.i_planning, spec.alphas.alpha_p, rates);
  out.t_interrupts.reserve(spec.channels.i_interrupts.size());
  for (std::size_t j = 0; j < spec.channels.i_interrupts.size(); ++j) {
    out.t_interrupts.push_back(
        spec.scalars.c_i[j] *
        exchange_time(spec.channels.i_interrupts[j], spec.alphas.alpha_i[j],
                      rates));
  }
  out.t_review =
      spec.scalars.c_r *
      exchange_time(spec.channels.i_review, spec.alphas.alpha_r, rates);
  return out;
}

double leverage_task(double h_displaced, const PhaseTimes& times) {
  require_nonneg(h_displaced, "h_displaced");
  times.validate();
  const double denom = times.total();
  if (denom <= 0.0) {
    throw UndefinedLeverageError(
        "leverage undefined: total operator time is zero");
  }
  return h_displaced / denom;
}

double leverage_task_substituted(const TaskSpec& spec,
                                 const DirectionalRates& rates) {
  return leverage_task(spec.h_displaced, channel_times(spec, rates));
}

ConservationVerdict check_conservation(double i_task,
                                       const ChannelAllocation& alloc,
                                       double tolerance_bits) {
  require_nonneg(i_task, "i_task");
  require_nonneg(tolerance_bits, "tolerance_bits");
  alloc.validate();

  const double sum = alloc.sum();
  ConservationVerdict v;
  if (std::fabs(sum - i_task) <= tolerance_bits) {
    v.kind = ConservationKind::Exact;
    v.slack_bits = 0.0;
  } else if (sum > i_task) {
    v.kind = ConservationKind::Redundant;
    v.slack_bits = sum - i_task;
  } else {
    v.kind = ConservationKind::Violated;
    v.slack_bits = i_task - sum;
  }
  return v;
}

const char* to_string(ConservationKind kind) {
  switch (kind) {
    case ConservationKind::Exact:
      return "exact";
    case ConservationKind::Redundant:
      return "redundant";
    case ConservationKind::Violated:
      return "violated";
  }
  return "unknown";
}

}  // namespace lev
