#include "xaitune/data.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <utility>

namespace xaitune {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    for (auto& f : fields) {
        while (!f.empty() && (f.back() == '\r' || f.back() == ' ' || f.back() == '\t')) f.pop_back();
        std::size_t i = 0;
        while (i < f.size() && (f[i] == ' ' || f[i] == '\t')) ++i;
        f.erase(0, i);
    }
    return fields;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

}  // namespace

Dataset load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open data file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw ConfigError(path + ": missing header row");
    auto header = split_csv_line(line);
    if (header.size() < 2) {
        throw ConfigError(path + ": header must name at least one feature column and one target column");
    }
    double probe;
    if (parse_double(header[0], probe)) {
        throw ConfigError(path + ": first row looks numeric; a header row is required");
    }

    const std::size_t ncols = header.size();
    const std::size_t nfeat = ncols - 1;
    std::vector<std::vector<double>> rows;
    int skipped = 0;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != ncols) {
            throw ConfigError(path + ": line " + std::to_string(line_no) + " has " +
                              std::to_string(fields.size()) + " fields, expected " +
                              std::to_string(ncols));
        }
        std::vector<double> row(ncols);
        bool finite = true;
        for (std::size_t c = 0; c < ncols; ++c) {
            double v;
            if (!parse_double(fields[c], v)) {
                // treat unparsable tokens (nan, inf, blanks) as non-finite entries
                v = std::numeric_limits<double>::quiet_NaN();
            }
            if (!std::isfinite(v)) finite = false;
            row[c] = v;
        }
        if (!finite) {
            ++skipped;
            continue;
        }
        rows.push_back(std::move(row));
    }

    Dataset ds;
    ds.feature_names.assign(header.begin(), header.end() - 1);
    ds.target_name = header.back();
    ds.rows_skipped = skipped;
    ds.features.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(nfeat));
    ds.targets.resize(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < nfeat; ++c) {
            ds.features(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
        }
        ds.targets(static_cast<Eigen::Index>(r)) = rows[r][nfeat];
    }
    return ds;
}

namespace {

Dataset take_rows(const Dataset& ds, const std::vector<int>& idx) {
    Dataset out;
    out.feature_names = ds.feature_names;
    out.target_name = ds.target_name;
    out.features.resize(static_cast<Eigen::Index>(idx.size()), ds.cols());
    out.targets.resize(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) {
        out.features.row(static_cast<Eigen::Index>(i)) = ds.features.row(idx[i]);
        out.targets(static_cast<Eigen::Index>(i)) = ds.targets(idx[i]);
    }
    return out;
}

}  // namespace

DataSplits split_dataset(const Dataset& ds, double train_frac, double val_frac, double test_frac,
                         std::uint64_t seed) {
    if (std::abs(train_frac + val_frac + test_frac - 1.0) > 1e-9) {
        throw ConfigError("split fractions must sum to 1");
    }
    const int n = static_cast<int>(ds.rows());
    if (n < 3) throw ConfigError("need at least 3 rows to split");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(derive_seed(seed, 0xd5));
    rng.shuffle(order);

    const int n_val = static_cast<int>(std::floor(val_frac * n));
    const int n_test = static_cast<int>(std::floor(test_frac * n));
    const int n_train = n - n_val - n_test;

    DataSplits out;
    out.indices.train.assign(order.begin(), order.begin() + n_train);
    out.indices.validation.assign(order.begin() + n_train, order.begin() + n_train + n_val);
    out.indices.test.assign(order.begin() + n_train + n_val, order.end());
    out.train = take_rows(ds, out.indices.train);
    out.validation = take_rows(ds, out.indices.validation);
    out.test = take_rows(ds, out.indices.test);
    return out;
}

StandardScaler StandardScaler::fit(const Eigen::MatrixXd& features,
                                   const std::vector<std::string>& feature_names) {
    StandardScaler s;
    const auto n = static_cast<double>(features.rows());
    if (features.rows() < 1) throw ConfigError("scaler fit needs at least one row");
    s.mean_ = features.colwise().mean();
    s.std_.resize(features.cols());
    for (Eigen::Index c = 0; c < features.cols(); ++c) {
        const double var = (features.col(c).array() - s.mean_(c)).square().sum() / n;
        if (var <= 0.0) {
            const std::string name = c < static_cast<Eigen::Index>(feature_names.size())
                                         ? feature_names[static_cast<std::size_t>(c)]
                                         : ("column " + std::to_string(c));
            throw ConfigError("constant feature '" + name + "' cannot be standardized");
        }
        s.std_(c) = std::sqrt(var);
    }
    return s;
}

StandardScaler StandardScaler::from_moments(Eigen::VectorXd mean, Eigen::VectorXd stddev) {
    if (mean.size() != stddev.size()) throw ConfigError("scaler moments have mismatched widths");
    if ((stddev.array() <= 0.0).any()) throw ConfigError("scaler standard deviations must be > 0");
    StandardScaler s;
    s.mean_ = std::move(mean);
    s.std_ = std::move(stddev);
    return s;
}

Eigen::MatrixXd StandardScaler::transform(const Eigen::MatrixXd& features) const {
    if (features.cols() != mean_.size()) throw ConfigError("scaler applied to mismatched width");
    return (features.rowwise() - mean_.transpose()).array().rowwise() /
           std_.transpose().array();
}

Eigen::MatrixXd StandardScaler::inverse_transform(const Eigen::MatrixXd& features) const {
    if (features.cols() != mean_.size()) throw ConfigError("scaler applied to mismatched width");
    return (features.array().rowwise() * std_.transpose().array()).matrix().rowwise() +
           mean_.transpose();
}

}  // namespace xaitune
