#include "lev/memory.hpp"

#include <algorithm>
#include <cmath>
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

void validate_family(const DensityFamily& fam, double ceiling,
                     const char* dir_name) {
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, LinearFamily>) {
          require_pos(f.rho0, "linear rho0");
          require_pos(f.slope, "linear slope");
          if (f.cap < f.rho0) {
            throw ValidationError(std::string("linear cap below rho0 (") +
                                  dir_name + ")");
          }
        } else if constexpr (std::is_same_v<T, LogarithmicFamily>) {
          require_pos(f.rho0, "logarithmic rho0");
          require_pos(f.gain, "logarithmic gain");
          if (f.cap < f.rho0) {
            throw ValidationError(
                std::string("logarithmic cap below rho0 (") + dir_name + ")");
          }
        } else {
          require_pos(f.rho_min, "saturating rho_min");
          require_pos(f.half_m, "saturating half_m");
          if (!(f.rho_max > f.rho_min)) {
            throw ValidationError(
                std::string("saturating rho_max must exceed rho_min (") +
                dir_name + ")");
          }
          if (f.rho_max > ceiling) {
            throw ValidationError(
                std::string("saturating rho_max exceeds the ") + dir_name +
                "-direction ceiling");
          }
        }
      },
      fam);
}

double eval_family(const DensityFamily& fam, double m) {
  return std::visit(
      [&](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, LinearFamily>) {
          return std::min(f.rho0 + f.slope * m, f.cap);
        } else if constexpr (std::is_same_v<T, LogarithmicFamily>) {
          return std::min(f.rho0 + f.gain * std::log1p(m), f.cap);
        } else {
          return f.rho_min + (f.rho_max - f.rho_min) * m / (m + f.half_m);
        }
      },
      fam);
}

double family_supremum(const DensityFamily& fam) {
  return std::visit(
      [&](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, SaturatingFamily>) {
          return f.rho_max;
        } else {
          return f.cap;
        }
      },
      fam);
}

}  // namespace

void MemoryState::validate() const { require_nonneg(m, "memory m"); }

void DensityModel::validate() const {
  require_pos(rho_in_max, "rho_in_max");
  require_pos(rho_out_max, "rho_out_max");
  validate_family(in_family, rho_in_max, "in");
  validate_family(out_family, rho_out_max, "out");
}

double DensityModel::supremum(Direction dir) const {
  if (dir == Direction::In) {
    return std::min(family_supremum(in_family), rho_in_max);
  }
  return std::min(family_supremum(out_family), rho_out_max);
}

double rho_of_memory(const DensityModel& model, Direction dir, double m) {
  require_nonneg(m, "memory m");
  model.validate();
  const DensityFamily& fam =
      dir == Direction::In ? model.in_family : model.out_family;
  const double ceiling =
      dir == Direction::In ? model.rho_in_max : model.rho_out_max;
  return std::min(eval_family(fam, m), ceiling);
}

DirectionalRates rates_at(const DensityModel& model, double m) {
  DirectionalRates r;
  r.rho_in = rho_of_memory(model, Direction::In, m);
  r.rho_out = rho_of_memory(model, Direction::Out, m);
  r.rho_in_max = model.rho_in_max;
  r.rho_out_max = model.rho_out_max;
  return r;
}

void ChannelDecay::validate() const {
  require_pos(k_plan_context, "k_plan_context");
  require_pos(k_interrupt, "k_interrupt");
  require_pos(k_review, "k_review");
}

double ChannelDecay::factor(double m, double k) { return k / (m + k); }

double planning_floor(double i_novel, double alpha_p,
                      const DirectionalRates& rates_at_m) {
  require_nonneg(i_novel, "i_novel");
  return exchange_time(i_novel, alpha_p, rates_at_m);
}

CeilingResult task_ceiling(double h_displaced, double rho_in_max,
                           double i_novel) {
  require_nonneg(h_displaced, "h_displaced");
  require_pos(rho_in_max, "rho_in_max");
  require_nonneg(i_novel, "i_novel");
  if (i_novel == 0.0) {
    throw UnboundedCeilingError(
        "per-task ceiling is unbounded when i_novel is zero");
  }
  CeilingResult r;
  r.l_max = h_displaced * rho_in_max / i_novel;
  r.planning_floor_hours = i_novel / rho_in_max;
  return r;
}

ChannelAllocation decayed_channels(const TaskSpec& spec,
                                   const ChannelDecay& decay, double m) {
  spec.validate();
  decay.validate();
  require_nonneg(m, "memory m");
  if (spec.channels.i_planning < spec.i_novel) {
    throw ValidationError(
        "task '" + spec.id +
        "': planning channel carries fewer bits than i_novel; the decay law "
        "needs the novel part routed through planning");
  }
  ChannelAllocation out;
  const double context0 = spec.channels.i_planning - spec.i_novel;
  out.i_planning =
      spec.i_novel + context0 * ChannelDecay::factor(m, decay.k_plan_context);
  out.i_interrupts.reserve(spec.channels.i_interrupts.size());
  for (double b : spec.channels.i_interrupts) {
    out.i_interrupts.push_back(b * ChannelDecay::factor(m, decay.k_interrupt));
  }
  out.i_review =
      spec.channels.i_review * ChannelDecay::factor(m, decay.k_review);
  return out;
}

std::vector<PhaseTimes> limit_profile(const TaskSpec& spec,
                                      const DensityModel& model,
                                      const ChannelDecay& decay,
                                      const std::vector<double>& m_grid) {
  if (m_grid.empty()) {
    throw ValidationError("limit_profile needs a nonempty m grid");
  }
  for (std::size_t i = 1; i < m_grid.size(); ++i) {
    if (!(m_grid[i] > m_grid[i - 1])) {
      throw ValidationError("limit_profile m grid must be increasing");
    }
  }
  model.validate();

  std::vector<PhaseTimes> series;
  series.reserve(m_grid.size());
  for (double m : m_grid) {
    TaskSpec at_m = spec;
    at_m.channels = decayed_channels(spec, decay, m);
    // The conveyed requirement shrinks with the channels; memory supplies
    // the remainder.
    at_m.i_task = std::max(at_m.channels.sum(), at_m.i_novel);
    series.push_back(channel_times(at_m, rates_at(model, m)));
  }
  return series;
}

}  // namespace lev
