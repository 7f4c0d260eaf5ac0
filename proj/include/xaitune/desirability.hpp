#pragma once

#include <span>

#include "xaitune/common.hpp"

namespace xaitune {

enum class Goal { Maximize, Minimize, Target };

// Piecewise desirability spec. `lower`/`upper` bracket the acceptance band,
// `target` is used by Goal::Target only, `s`/`s2` are the steepness exponents
// (s2 applies to the descending branch of a target spec).
struct DesirabilitySpec {
    Goal goal = Goal::Minimize;
    double lower = 0.0;
    double upper = 1.0;
    double target = 0.0;
    double s = 1.0;
    double s2 = 1.0;

    void validate() const;
};

// Individual desirability mappings onto [0, 1]. Non-finite inputs map to 0
// (degenerate evaluations must not poison the aggregate).
double d_max(double f, const DesirabilitySpec& spec);
double d_min(double f, const DesirabilitySpec& spec);
double d_target(double f, const DesirabilitySpec& spec);

// Dispatch on spec.goal.
double desirability(double f, const DesirabilitySpec& spec);

// Geometric mean of component desirabilities; exactly 0 when any component is 0.
double overall_desirability(std::span<const double> ds);

}  // namespace xaitune
