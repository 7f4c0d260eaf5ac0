#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xaitune/common.hpp"
#include "xaitune/data.hpp"

namespace xaitune::nn {

enum class Activation { ReLU, LeakyReLU, ELU, Swish };
enum class Optimizer { Adam, Adamax, SGD, NAdam, RAdam, Adagrad, RMSprop };

Activation activation_from_string(const std::string& s);
Optimizer optimizer_from_string(const std::string& s);
std::string to_string(Activation a);
std::string to_string(Optimizer o);

// Effective learning rate is base_learning_rate(optimizer) * lr_multiplier.
double base_learning_rate(Optimizer o);

struct MLPConfig {
    int l1 = 32;
    int epochs = 64;
    int batch_size = 64;
    double dropout_p = 0.0;
    Activation activation = Activation::ReLU;
    Optimizer optimizer = Optimizer::Adam;
    double lr_multiplier = 1.0;
    std::uint64_t seed = 0;

    void validate() const;
};

// Four hidden layers sized l1, l1/2, l1/2, l1/4 plus a single linear output
// unit. Dropout follows each hidden activation (train mode only, inverted
// scaling). weights[k] is (out x in).
struct MLPModel {
    std::vector<Eigen::MatrixXd> weights;
    std::vector<Eigen::VectorXd> biases;
    Activation activation = Activation::ReLU;
    double dropout_p = 0.0;

    int input_dim() const { return static_cast<int>(weights.front().cols()); }
    std::size_t layer_count() const { return weights.size(); }
};

MLPModel build(const MLPConfig& config, int input_dim);

// Eval-mode forward pass (dropout off, deterministic).
Eigen::VectorXd predict(const MLPModel& model, const Eigen::MatrixXd& X);

// Eval-mode forward keeping pre-activations and layer outputs; consumed by
// gradient and attribution computations. h[0] is the input batch, z[k] and
// h[k+1] belong to hidden layer k.
struct ForwardTrace {
    std::vector<Eigen::MatrixXd> z;
    std::vector<Eigen::MatrixXd> h;
    Eigen::VectorXd output;
};
ForwardTrace forward_trace(const MLPModel& model, const Eigen::MatrixXd& X);

double mse(const Eigen::VectorXd& predictions, const Eigen::VectorXd& targets);

struct Gradients {
    std::vector<Eigen::MatrixXd> weights;
    std::vector<Eigen::VectorXd> biases;
};

// MSE loss and parameter gradients with dropout off; the independent
// finite-difference checks exercise exactly this path.
std::pair<double, Gradients> loss_gradients(const MLPModel& model, const Eigen::MatrixXd& X,
                                            const Eigen::VectorXd& y);

// Per-row gradient of the scalar output w.r.t. the inputs (eval mode).
Eigen::MatrixXd input_gradients(const MLPModel& model, const Eigen::MatrixXd& X);

struct TrainResult {
    MLPModel model;
    std::vector<double> epoch_loss;  // mean training MSE per epoch
    bool diverged = false;
};

// Minibatch MSE backprop for config.epochs epochs with seeded per-epoch
// shuffling; the last incomplete minibatch is kept. Divergence (non-finite
// loss or parameter) aborts and flags the result.
TrainResult train(const MLPModel& model, const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                  const MLPConfig& config);

// Elementwise activation values/derivatives. At non-differentiable points the
// one-sided convention is fixed: ReLU'(0) = 0, LeakyReLU'(0) = slope.
double act_value(Activation a, double z);
double act_derivative(Activation a, double z);
Eigen::MatrixXd act_value(Activation a, const Eigen::MatrixXd& z);
Eigen::MatrixXd act_derivative(Activation a, const Eigen::MatrixXd& z);

constexpr double kLeakyReluSlope = 0.01;
constexpr double kEluAlpha = 1.0;

// Weight-file round trip. Paths ending in ".txt" use the textual form; every
// other path uses the little-endian binary form. The scaler and feature names
// travel with the weights so `explain` can standardize consistently.
struct ModelBundle {
    MLPModel model;
    std::optional<StandardScaler> scaler;
    std::vector<std::string> feature_names;
};
void save_model(const ModelBundle& bundle, const std::string& path);
ModelBundle load_model(const std::string& path);

}  // namespace xaitune::nn
