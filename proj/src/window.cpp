#include "lev/window.hpp"

#include <algorithm>
#include <cmath>

namespace lev {

namespace {

void require_nonneg(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw ValidationError(std::string(name) + " must be >= 0 and finite");
  }
}

double overlap(double a0, double a1, double b0, double b1) {
  return std::max(0.0, std::min(a1, b1) - std::max(a0, b0));
}

bool in_window(double t, const Window& w) { return t >= w.t0 && t < w.t1; }

}  // namespace

const char* to_string(Phase p) {
  switch (p) {
    case Phase::Planning:
      return "planning";
    case Phase::Interrupt:
      return "interrupt";
    case Phase::Review:
      return "review";
    case Phase::Maintenance:
      return "maintenance";
    case Phase::SystemDesign:
      return "system_design";
  }
  return "unknown";
}

void RecurrenceSpec::validate() const {
  if (n_runs < 1) {
    throw ValidationError("recurrence n_runs must be >= 1");
  }
  require_nonneg(t_planning_once, "t_planning_once");
  require_nonneg(maint_rate, "maint_rate");
}

double TaskOutcome::operator_total() const {
  return operator_hours.total() + maintenance_hours + system_design_hours;
}

void TaskOutcome::validate() const {
  if (task_id.empty()) {
    throw ValidationError("task_id must be nonempty");
  }
  require_nonneg(h_displaced, "h_displaced");
  operator_hours.validate();
  require_nonneg(maintenance_hours, "maintenance_hours");
  require_nonneg(t_agent, "t_agent");
  require_nonneg(system_design_hours, "system_design_hours");
  if (recurrence) recurrence->validate();
  if (i_novel) require_nonneg(*i_novel, "i_novel");
  for (const auto& iv : intervals) {
    if (!(iv.end >= iv.start)) {
      throw ValidationError("work interval ends before it starts in task '" +
                            task_id + "'");
    }
  }
}

void Window::validate() const {
  if (!(t1 > t0)) {
    throw ValidationError("window must satisfy t1 > t0");
  }
}

WindowResult window_leverage(const std::vector<TaskOutcome>& ledger,
                             const Window& window) {
  window.validate();

  WindowResult r;
  std::vector<std::pair<double, double>> agent_runs;

  for (const auto& task : ledger) {
    task.validate();

    if (in_window(task.completed_at, window)) {
      r.total_h_displaced += task.h_displaced;
      r.task_count += 1;
      const double run_end =
          task.agent_completed_at.value_or(task.completed_at);
      const double run_start = task.dispatched_at.value_or(
          run_end - task.t_agent);
      if (task.t_agent > 0.0) {
        agent_runs.emplace_back(std::max(run_start, window.t0),
                                std::min(run_end, window.t1));
      }
    }

    if (task.intervals.empty()) {
      if (in_window(task.completed_at, window)) {
        r.t_operator += task.operator_total();
      }
    } else {
      for (const auto& iv : task.intervals) {
        r.t_operator += overlap(iv.start, iv.end, window.t0, window.t1);
      }
      // Maintenance and system design carry no intervals of their own
      // unless the ledger provides them as such.
      if (in_window(task.completed_at, window)) {
        bool has_maint = false, has_sys = false;
        for (const auto& iv : task.intervals) {
          has_maint |= iv.kind == Phase::Maintenance;
          has_sys |= iv.kind == Phase::SystemDesign;
        }
        if (!has_maint) r.t_operator += task.maintenance_hours;
        if (!has_sys) r.t_operator += task.system_design_hours;
      }
    }
  }

  if (r.t_operator <= 0.0) {
    throw UndefinedLeverageError(
        "window leverage undefined: no operator hours fall in the window");
  }
  r.l_window = r.total_h_displaced / r.t_operator;

  // Peak overlap of in-window agent runs, by event sweep.
  std::vector<std::pair<double, int>> events;
  events.reserve(agent_runs.size() * 2);
  for (const auto& [s, e] : agent_runs) {
    if (e > s) {
      events.emplace_back(s, +1);
      events.emplace_back(e, -1);
    }
  }
  std::sort(events.begin(), events.end());
  int depth = 0;
  int peak = 0;
  for (const auto& [t, d] : events) {
    depth += d;
    peak = std::max(peak, depth);
  }
  r.peak_concurrency = static_cast<std::size_t>(peak);
  return r;
}

double amortized_planning_per_run(const RecurrenceSpec& rec) {
  rec.validate();
  return rec.t_planning_once / static_cast<double>(rec.n_runs) +
         rec.maint_rate;
}

double child_planning_cost(const MemoryState& parent_m,
                           double residual_novel_bits, double alpha_p,
                           const DensityModel& model) {
  parent_m.validate();
  require_nonneg(residual_novel_bits, "residual_novel_bits");
  return planning_floor(residual_novel_bits, alpha_p,
                        rates_at(model, parent_m.m));
}

double efficiency_task(double h_displaced, double t_agent) {
  require_nonneg(h_displaced, "h_displaced");
  if (!(t_agent > 0.0)) {
    throw ValidationError("efficiency undefined: t_agent must be > 0");
  }
  return h_displaced / t_agent;
}

std::optional<double> prior_investment_ratio(
    const std::vector<TaskOutcome>& ledger, const Window& window) {
  window.validate();
  double displaced = 0.0;
  double prior_investment = 0.0;
  for (const auto& task : ledger) {
    if (in_window(task.completed_at, window)) {
      displaced += task.h_displaced;
    }
    if (task.completed_at < window.t0) {
      prior_investment +=
          task.operator_hours.t_planning + task.system_design_hours;
    }
  }
  if (prior_investment <= 0.0) return std::nullopt;
  return displaced / prior_investment;
}

}  // namespace lev
