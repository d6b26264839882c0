#pragma once

// Control rules queried by the simulator at the left endpoint of every step.

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "bdc/hjb.hpp"
#include "bdc/labels.hpp"

namespace bdc {

struct ConstantControl {
    std::size_t control = 0;
};

/// Markov feedback (t, X^i_t) -> a read from a solved grid. Only the first
/// coordinate of the position is used.
struct FeedbackPolicy {
    std::shared_ptr<const FeedbackGrid> rule;
};

/// Piecewise-constant schedule: controls[k] is used on [switch_times[k-1], switch_times[k]).
struct Schedule {
    std::vector<double> switch_times;  // increasing
    std::vector<std::size_t> controls;  // switch_times.size() + 1 entries

    std::size_t at(double t) const;
};

/// Per-label open-loop controls. A label without an entry uses the schedule of
/// its nearest listed ancestor, then the fallback control.
struct OpenLoopTable {
    std::map<Label, Schedule> schedules;
    std::size_t fallback = 0;
};

using Policy = std::variant<ConstantControl, FeedbackPolicy, OpenLoopTable>;

Policy constant_policy(std::size_t a);
Policy feedback_policy(std::shared_ptr<const ValueGrid> grid);

std::size_t control_at(const Policy& policy, double t, std::span<const double> x,
                       const Label& label);

/// Throws ConfigError if the policy can return an index outside [0, n_controls).
void check_policy(const Policy& policy, std::size_t n_controls);

/// True for rules that ignore the label (constant and feedback).
bool is_label_independent(const Policy& policy);

}  // namespace bdc
