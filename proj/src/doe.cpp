#include "xaitune/doe.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace xaitune {

void Dim::validate() const {
    if (name.empty()) throw ConfigError("search space dimension without a name");
    if (kind == DimKind::Categorical) {
        if (levels.size() < 2) {
            throw ConfigError("categorical dimension '" + name + "' needs at least 2 levels");
        }
    } else {
        if (!levels.empty()) {
            throw ConfigError("non-categorical dimension '" + name + "' must not define levels");
        }
        if (!(lower < upper)) {
            throw ConfigError("dimension '" + name + "': lower bound must be < upper bound");
        }
    }
}

void SearchSpace::validate() const {
    if (dims.empty()) throw ConfigError("search space has no dimensions");
    for (const auto& d : dims) d.validate();
    for (std::size_t i = 0; i < dims.size(); ++i) {
        for (std::size_t j = i + 1; j < dims.size(); ++j) {
            if (dims[i].name == dims[j].name) {
                throw ConfigError("duplicate dimension name '" + dims[i].name + "'");
            }
        }
    }
}

int SearchSpace::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

SearchSpace SearchSpace::default_mlp_space() {
    SearchSpace s;
    s.dims = {
        {"l1", DimKind::IntegerExponent, 2.0, 10.0, {}},
        {"epochs", DimKind::IntegerExponent, 4.0, 11.0, {}},
        {"batch_size", DimKind::IntegerExponent, 4.0, 10.0, {}},
        {"dropout", DimKind::Continuous, 0.0, 0.4, {}},
        {"lr_multiplier", DimKind::Continuous, 0.1, 5.0, {}},
        {"activation", DimKind::Categorical, 0.0, 3.0, {"ReLU", "LeakyReLU", "ELU", "Swish"}},
        {"optimizer", DimKind::Categorical, 0.0, 6.0,
         {"Adam", "Adamax", "SGD", "NAdam", "RAdam", "Adagrad", "RMSprop"}},
    };
    return s;
}

double raw_lower(const Dim& d) { return d.kind == DimKind::Categorical ? 0.0 : d.lower; }
double raw_upper(const Dim& d) {
    return d.kind == DimKind::Categorical ? static_cast<double>(d.levels.size() - 1) : d.upper;
}

namespace {

// round half away from zero, fixed for reproducibility
double round_half_away(double x) { return std::round(x); }

}  // namespace

std::vector<double> realize(const std::vector<double>& raw, const SearchSpace& space,
                            bool* clamped) {
    if (raw.size() != space.dims.size()) {
        throw ConfigError("raw vector length does not match search space dimensionality");
    }
    if (clamped) *clamped = false;
    std::vector<double> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const Dim& d = space.dims[i];
        double x = raw[i];
        const double lo = dim_lower(d), hi = dim_upper(d);
        if (x < lo || x > hi) {
            x = std::clamp(x, lo, hi);
            if (clamped) *clamped = true;
        }
        switch (d.kind) {
            case DimKind::Continuous:
                out[i] = x;
                break;
            case DimKind::IntegerExponent:
                out[i] = std::exp2(round_half_away(x));
                break;
            case DimKind::Categorical:
                out[i] = round_half_away(x);
                break;
        }
    }
    return out;
}

DesignPoint make_design_point(std::vector<double> raw, const SearchSpace& space) {
    DesignPoint p;
    p.realized = realize(raw, space);
    p.raw = std::move(raw);
    return p;
}

std::string realized_label(const Dim& dim, double realized) {
    if (dim.kind == DimKind::Categorical) {
        const auto idx = static_cast<std::size_t>(realized);
        if (idx >= dim.levels.size()) throw ConfigError("level index out of range for '" + dim.name + "'");
        return dim.levels[idx];
    }
    if (dim.kind == DimKind::IntegerExponent) {
        return std::to_string(static_cast<long long>(realized));
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", realized);
    return buf;
}

std::vector<DesignPoint> latin_hypercube(int n, const SearchSpace& space, std::uint64_t seed) {
    space.validate();
    if (n < 1) throw ConfigError("latin hypercube size must be >= 1");

    const std::size_t dims = space.dims.size();
    Rng rng(derive_seed(seed, 0x1b5));

    // one independent stratum permutation per dimension, one uniform draw per cell
    std::vector<std::vector<double>> raw(n, std::vector<double>(dims));
    std::vector<std::size_t> perm(n);
    for (std::size_t d = 0; d < dims; ++d) {
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        rng.shuffle(perm);
        const double lo = dim_lower(space.dims[d]);
        const double width = (dim_upper(space.dims[d]) - lo) / n;
        for (int i = 0; i < n; ++i) {
            raw[i][d] = lo + (static_cast<double>(perm[i]) + rng.uniform01()) * width;
        }
    }

    std::vector<DesignPoint> points;
    points.reserve(n);
    for (auto& r : raw) points.push_back(make_design_point(std::move(r), space));
    return points;
}

}  // namespace xaitune
