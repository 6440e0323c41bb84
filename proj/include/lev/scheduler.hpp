#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lev/rng.hpp"
#include "lev/window.hpp"

namespace lev {

// One dispatchable unit of work. Operator cost is paid in three places:
// planning before dispatch, an interrupt block during the run, review after
// the agent completes. Agent runs overlap freely; the operator does not.
struct TaskNode {
  std::string id;
  std::vector<std::string> deps;
  double t_agent = 0.0;
  PhaseTimes operator_cost;
  double h_displaced = 0.0;
};

enum class InterruptAnchor { Midpoint, Even };
enum class OnlinePolicy { GreedyReadyByDensity, GreedyReadyByH, Fifo };

struct SchedulerOptions {
  InterruptAnchor anchor = InterruptAnchor::Midpoint;
  // Open switch: count a task whose agent run finishes in-window even if
  // its review lands outside. Default counts only reviewed-in-window.
  bool count_on_agent_completion = false;
  std::size_t exact_size_limit = 16;
  std::size_t oracle_size_limit = 8;
  std::uint64_t search_node_budget = 50'000'000;
};

struct PhaseInterval {
  std::string task;
  Phase kind = Phase::Planning;
  double start = 0.0;
  double end = 0.0;
};

struct Schedule {
  bool feasible = true;
  double objective = 0.0;   // displaced hours of counted tasks
  double t_operator = 0.0;  // operator busy hours inside the window
  std::vector<std::string> dispatch_order;
  std::map<std::string, double> dispatch_time;
  std::map<std::string, double> agent_completion;
  std::map<std::string, double> review_end;
  std::vector<std::string> counted;
  std::vector<PhaseInterval> intervals;
  WindowResult achieved;
  std::optional<double> regret;  // online only: hindsight-optimal gap
};

// Semantics shared by every solver here:
//   - A candidate is a dispatch sequence over a dependency-closed subset,
//     topologically ordered.
//   - The operator serves jobs strictly in (request time, kind, task id)
//     order: planning requests chain one after another, an interrupt block
//     is requested at the anchor point of the run, review at agent
//     completion. No preemption.
//   - dispatch = max(planning end, latest dep agent completion);
//     agent completion = dispatch + t_agent.
//   - Objective: sum of h_displaced over tasks whose review completes
//     within the window. Ties prefer less operator time, then the
//     lexicographically smallest dispatch sequence.

// Branch-and-bound over topological dispatch sequences. Provably optimal;
// refuses instances above exact_size_limit.
Schedule schedule_exact(const std::vector<TaskNode>& nodes,
                        double window_length,
                        const SchedulerOptions& options = {});

// Plain exhaustive enumeration of every dispatch sequence, with its own
// timeline evaluation. Verification oracle for schedule_exact; capped at
// oracle_size_limit nodes.
Schedule schedule_oracle(const std::vector<TaskNode>& nodes,
                         double window_length,
                         const SchedulerOptions& options = {});

using AgentDurationSampler = std::function<double(const TaskNode&, Rng&)>;

// Event-driven dispatching under uncertain agent durations: the policy only
// sees realized completions. Deterministic for a given seed. Regret is
// measured against schedule_exact on the realized durations.
Schedule schedule_online(const std::vector<TaskNode>& nodes,
                         OnlinePolicy policy,
                         const AgentDurationSampler& sampler,
                         std::uint64_t seed, double window_length,
                         const SchedulerOptions& options = {});

// Independent feasibility check: dependency ordering, operator as a unary
// resource, phase placement, and objective accounting. Throws
// ValidationError describing the first violation.
void validate_schedule(const std::vector<TaskNode>& nodes,
                       const Schedule& schedule, double window_length,
                       const SchedulerOptions& options = {});

const char* to_string(OnlinePolicy policy);

}  // namespace lev
