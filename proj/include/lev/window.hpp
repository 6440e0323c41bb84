#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lev/conservation.hpp"
#include "lev/memory.hpp"

namespace lev {

enum class Phase { Planning, Interrupt, Review, Maintenance, SystemDesign };

const char* to_string(Phase p);

// One contiguous stretch of operator attention, in hours from scenario
// start. Lets window accounting split hours that straddle a boundary.
struct WorkInterval {
  double start = 0.0;
  double end = 0.0;
  Phase kind = Phase::Planning;
};

// Planning paid once, amortized over N runs, plus drift-driven upkeep.
struct RecurrenceSpec {
  long n_runs = 1;
  double t_planning_once = 0.0;
  double maint_rate = 0.0;

  void validate() const;
};

// One completed task run as the analytics modules see it.
struct TaskOutcome {
  std::string task_id;
  double h_displaced = 0.0;
  PhaseTimes operator_hours;
  double maintenance_hours = 0.0;  // booked as its own denominator line
  double t_agent = 0.0;
  double completed_at = 0.0;
  std::optional<RecurrenceSpec> recurrence;
  std::optional<std::string> parent;
  double system_design_hours = 0.0;
  std::optional<double> i_novel;  // enables ceiling margins when known
  // When present, hours are attributed to windows by interval overlap;
  // otherwise everything is booked at completed_at.
  std::vector<WorkInterval> intervals;
  std::optional<double> dispatched_at;
  std::optional<double> agent_completed_at;

  double operator_total() const;
  void validate() const;
};

struct WindowResult {
  double l_window = 0.0;
  double total_h_displaced = 0.0;
  double t_operator = 0.0;
  std::size_t task_count = 0;
  std::size_t peak_concurrency = 0;
};

// Windows are half-open [t0, t1) so adjacent windows partition a ledger.
struct Window {
  double t0 = 0.0;
  double t1 = 0.0;

  void validate() const;
  double length() const { return t1 - t0; }
};

// L_window = displaced hours of tasks completed in-window over operator
// hours spent in-window (planning, interrupts, review, maintenance, and
// system design all count as spent time).
WindowResult window_leverage(const std::vector<TaskOutcome>& ledger,
                             const Window& window);

// t_planning_once / n_runs + maint_rate.
double amortized_planning_per_run(const RecurrenceSpec& rec);

// Residual novelty priced at the density the inherited memory provides.
double child_planning_cost(const MemoryState& parent_m,
                           double residual_novel_bits, double alpha_p,
                           const DensityModel& model);

// E_task = H_displaced / t_agent; governs pipelining, not L_task.
double efficiency_task(double h_displaced, double t_agent);

// Displaced hours in-window over planning + system-design hours booked
// before the window: the qualitative stock bound surfaced as a diagnostic.
std::optional<double> prior_investment_ratio(
    const std::vector<TaskOutcome>& ledger, const Window& window);

}  // namespace lev
