#include "xaitune/desirability.hpp"

#include <cmath>

namespace xaitune {

void DesirabilitySpec::validate() const {
    if (!(lower < upper)) {
        throw ConfigError("desirability spec: lower bound must be < upper bound");
    }
    if (!(s > 0.0) || (goal == Goal::Target && !(s2 > 0.0))) {
        throw ConfigError("desirability spec: steepness must be > 0");
    }
    if (goal == Goal::Target && !(lower < target && target < upper)) {
        throw ConfigError("desirability spec: target must lie strictly inside (lower, upper)");
    }
}

double d_max(double f, const DesirabilitySpec& spec) {
    spec.validate();
    if (!std::isfinite(f)) return 0.0;
    if (f < spec.lower) return 0.0;
    if (f > spec.upper) return 1.0;
    return std::pow((f - spec.lower) / (spec.upper - spec.lower), spec.s);
}

double d_min(double f, const DesirabilitySpec& spec) {
    spec.validate();
    if (!std::isfinite(f)) return 0.0;
    if (f < spec.lower) return 1.0;
    if (f > spec.upper) return 0.0;
    return std::pow((spec.upper - f) / (spec.upper - spec.lower), spec.s);
}

double d_target(double f, const DesirabilitySpec& spec) {
    spec.validate();
    if (!std::isfinite(f)) return 0.0;
    if (f < spec.lower || f > spec.upper) return 0.0;
    if (f <= spec.target) {
        return std::pow((f - spec.lower) / (spec.target - spec.lower), spec.s);
    }
    return std::pow((f - spec.upper) / (spec.target - spec.upper), spec.s2);
}

double desirability(double f, const DesirabilitySpec& spec) {
    switch (spec.goal) {
        case Goal::Maximize: return d_max(f, spec);
        case Goal::Minimize: return d_min(f, spec);
        case Goal::Target: return d_target(f, spec);
    }
    throw ConfigError("desirability spec: unknown goal");
}

double overall_desirability(std::span<const double> ds) {
    if (ds.empty()) {
        throw ConfigError("overall desirability of an empty list is undefined");
    }
    double log_sum = 0.0;
    for (double d : ds) {
        if (!(d >= 0.0 && d <= 1.0)) {
            throw ConfigError("component desirabilities must lie in [0, 1]");
        }
        if (d == 0.0) return 0.0;
        log_sum += std::log(d);
    }
    return std::exp(log_sum / static_cast<double>(ds.size()));
}

}  // namespace xaitune
