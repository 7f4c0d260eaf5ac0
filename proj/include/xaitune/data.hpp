#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "xaitune/common.hpp"

namespace xaitune {

struct Dataset {
    Eigen::MatrixXd features;  // rows x m
    Eigen::VectorXd targets;
    std::vector<std::string> feature_names;
    std::string target_name;
    int rows_skipped = 0;  // non-finite rows dropped at ingestion

    Eigen::Index rows() const { return features.rows(); }
    Eigen::Index cols() const { return features.cols(); }
};

// Comma-separated table with a header row; the last column is the target,
// every other column a feature. Rows containing non-finite values are dropped
// and counted. Ragged rows and unparsable fields raise an error naming the line.
Dataset load_table(const std::string& path);

struct SplitIndices {
    std::vector<int> train, validation, test;
};

struct DataSplits {
    Dataset train, validation, test;
    SplitIndices indices;
};

// Shuffled disjoint partition, deterministic given seed. Validation and test
// sizes are floored; remainder rows go to train.
DataSplits split_dataset(const Dataset& ds, double train_frac, double val_frac, double test_frac,
                         std::uint64_t seed);

class StandardScaler {
public:
    // Fit on training features only; population standard deviation.
    static StandardScaler fit(const Eigen::MatrixXd& features,
                              const std::vector<std::string>& feature_names);

    // Rebuild from persisted moments (model-file round trip).
    static StandardScaler from_moments(Eigen::VectorXd mean, Eigen::VectorXd stddev);

    Eigen::MatrixXd transform(const Eigen::MatrixXd& features) const;
    Eigen::MatrixXd inverse_transform(const Eigen::MatrixXd& features) const;

    const Eigen::VectorXd& mean() const { return mean_; }
    const Eigen::VectorXd& stddev() const { return std_; }

private:
    Eigen::VectorXd mean_, std_;
};

}  // namespace xaitune
