#pragma once

#include <string>
#include <vector>

#include "xaitune/common.hpp"

namespace xaitune {

enum class DimKind { Continuous, IntegerExponent, Categorical };

// One tunable dimension. IntegerExponent dims realize as 2^round(raw);
// Categorical dims live on [0, levels-1] in raw space and realize to the
// nearest level index.
struct Dim {
    std::string name;
    DimKind kind = DimKind::Continuous;
    double lower = 0.0;
    double upper = 1.0;
    std::vector<std::string> levels;  // categorical only

    void validate() const;
};

struct SearchSpace {
    std::vector<Dim> dims;

    void validate() const;
    std::size_t size() const { return dims.size(); }
    int index_of(const std::string& name) const;  // -1 when absent

    // The default mixed hyperparameter space used throughout: l1, epochs and
    // batch size on power-of-two grids, dropout and learning-rate multiplier
    // continuous, activation and optimizer categorical.
    static SearchSpace default_mlp_space();
};

// Raw-space bounds of a dimension (categoricals span [0, levels-1]).
double raw_lower(const Dim& dim);
double raw_upper(const Dim& dim);

struct DesignPoint {
    std::vector<double> raw;       // surrogate coordinates
    std::vector<double> realized;  // after per-dim transformation
};

// Applies the per-dimension transform. Out-of-bounds raw coordinates are
// clamped (surrogate optimizers may propose boundary-adjacent points);
// `clamped`, when given, reports whether that happened.
std::vector<double> realize(const std::vector<double>& raw, const SearchSpace& space,
                            bool* clamped = nullptr);

DesignPoint make_design_point(std::vector<double> raw, const SearchSpace& space);

// Display form of a realized coordinate (level label for categoricals,
// integer text for power-of-two dims).
std::string realized_label(const Dim& dim, double realized);

// Stratified design: for each dimension, exactly one sample falls in each of
// the n equal-width bins of the raw range. Deterministic given seed.
std::vector<DesignPoint> latin_hypercube(int n, const SearchSpace& space, std::uint64_t seed);

}  // namespace xaitune
