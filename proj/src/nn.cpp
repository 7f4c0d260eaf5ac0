#include "xaitune/nn.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numeric>
#include <sstream>

namespace xaitune::nn {

Activation activation_from_string(const std::string& s) {
    if (s == "ReLU") return Activation::ReLU;
    if (s == "LeakyReLU") return Activation::LeakyReLU;
    if (s == "ELU") return Activation::ELU;
    if (s == "Swish") return Activation::Swish;
    throw ConfigError("unknown activation '" + s + "'");
}

Optimizer optimizer_from_string(const std::string& s) {
    if (s == "Adam") return Optimizer::Adam;
    if (s == "Adamax") return Optimizer::Adamax;
    if (s == "SGD") return Optimizer::SGD;
    if (s == "NAdam") return Optimizer::NAdam;
    if (s == "RAdam") return Optimizer::RAdam;
    if (s == "Adagrad") return Optimizer::Adagrad;
    if (s == "RMSprop") return Optimizer::RMSprop;
    throw ConfigError("unknown optimizer '" + s + "'");
}

std::string to_string(Activation a) {
    switch (a) {
        case Activation::ReLU: return "ReLU";
        case Activation::LeakyReLU: return "LeakyReLU";
        case Activation::ELU: return "ELU";
        case Activation::Swish: return "Swish";
    }
    return "?";
}

std::string to_string(Optimizer o) {
    switch (o) {
        case Optimizer::Adam: return "Adam";
        case Optimizer::Adamax: return "Adamax";
        case Optimizer::SGD: return "SGD";
        case Optimizer::NAdam: return "NAdam";
        case Optimizer::RAdam: return "RAdam";
        case Optimizer::Adagrad: return "Adagrad";
        case Optimizer::RMSprop: return "RMSprop";
    }
    return "?";
}

double base_learning_rate(Optimizer o) {
    switch (o) {
        case Optimizer::Adam: return 0.001;
        case Optimizer::Adamax: return 0.002;
        case Optimizer::SGD: return 0.01;
        case Optimizer::NAdam: return 0.002;
        case Optimizer::RAdam: return 0.001;
        case Optimizer::Adagrad: return 0.01;
        case Optimizer::RMSprop: return 0.01;
    }
    return 0.001;
}

void MLPConfig::validate() const {
    if (l1 < 4) throw ConfigError("l1 must be >= 4 so the fourth hidden layer is non-empty");
    if (epochs < 0) throw ConfigError("epochs must be >= 0");
    if (batch_size < 1) throw ConfigError("batch_size must be >= 1");
    if (dropout_p < 0.0 || dropout_p >= 1.0) throw ConfigError("dropout_p must lie in [0, 1)");
    if (lr_multiplier <= 0.0) throw ConfigError("lr_multiplier must be > 0");
}

double act_value(Activation a, double z) {
    switch (a) {
        case Activation::ReLU: return z > 0.0 ? z : 0.0;
        case Activation::LeakyReLU: return z > 0.0 ? z : kLeakyReluSlope * z;
        case Activation::ELU: return z > 0.0 ? z : kEluAlpha * (std::exp(z) - 1.0);
        case Activation::Swish: return z / (1.0 + std::exp(-z));
    }
    return z;
}

double act_derivative(Activation a, double z) {
    switch (a) {
        case Activation::ReLU: return z > 0.0 ? 1.0 : 0.0;
        case Activation::LeakyReLU: return z > 0.0 ? 1.0 : kLeakyReluSlope;
        case Activation::ELU: return z > 0.0 ? 1.0 : kEluAlpha * std::exp(z);
        case Activation::Swish: {
            const double sig = 1.0 / (1.0 + std::exp(-z));
            return sig * (1.0 + z * (1.0 - sig));
        }
    }
    return 1.0;
}

Eigen::MatrixXd act_value(Activation a, const Eigen::MatrixXd& z) {
    return z.unaryExpr([a](double v) { return act_value(a, v); });
}

Eigen::MatrixXd act_derivative(Activation a, const Eigen::MatrixXd& z) {
    return z.unaryExpr([a](double v) { return act_derivative(a, v); });
}

MLPModel build(const MLPConfig& config, int input_dim) {
    config.validate();
    if (input_dim < 1) throw ConfigError("input_dim must be >= 1");

    const std::vector<int> sizes = {config.l1, config.l1 / 2, config.l1 / 2, config.l1 / 4, 1};

    MLPModel model;
    model.activation = config.activation;
    model.dropout_p = config.dropout_p;
    Rng rng(derive_seed(config.seed, 0x1417));

    int fan_in = input_dim;
    for (int out : sizes) {
        const double bound = std::sqrt(1.0 / fan_in);
        Eigen::MatrixXd w(out, fan_in);
        for (int r = 0; r < out; ++r) {
            for (int c = 0; c < fan_in; ++c) w(r, c) = rng.uniform(-bound, bound);
        }
        Eigen::VectorXd b(out);
        for (int r = 0; r < out; ++r) b(r) = rng.uniform(-bound, bound);
        model.weights.push_back(std::move(w));
        model.biases.push_back(std::move(b));
        fan_in = out;
    }
    return model;
}

namespace {

struct BatchCache {
    std::vector<Eigen::MatrixXd> z;      // pre-activations per hidden layer
    std::vector<Eigen::MatrixXd> h;      // h[0] = input, h[k+1] = layer k output
    std::vector<Eigen::MatrixXd> masks;  // dropout keep masks scaled by 1/(1-p); empty in eval
    Eigen::VectorXd out;
};

// rng == nullptr -> eval mode (no dropout)
BatchCache forward_batch(const MLPModel& model, const Eigen::MatrixXd& X, Rng* rng) {
    if (X.cols() != model.input_dim()) {
        throw NumericError("feature width " + std::to_string(X.cols()) +
                           " does not match model input dim " +
                           std::to_string(model.input_dim()));
    }
    const std::size_t hidden = model.layer_count() - 1;
    BatchCache cache;
    cache.h.reserve(hidden + 1);
    cache.h.push_back(X);
    const bool use_dropout = rng != nullptr && model.dropout_p > 0.0;
    const double keep = 1.0 - model.dropout_p;

    for (std::size_t k = 0; k < hidden; ++k) {
        Eigen::MatrixXd z = cache.h.back() * model.weights[k].transpose();
        z.rowwise() += model.biases[k].transpose();
        Eigen::MatrixXd h = act_value(model.activation, z);
        if (use_dropout) {
            Eigen::MatrixXd mask(h.rows(), h.cols());
            for (Eigen::Index r = 0; r < h.rows(); ++r) {
                for (Eigen::Index c = 0; c < h.cols(); ++c) {
                    mask(r, c) = rng->uniform01() < keep ? 1.0 / keep : 0.0;
                }
            }
            h.array() *= mask.array();
            cache.masks.push_back(std::move(mask));
        }
        cache.z.push_back(std::move(z));
        cache.h.push_back(std::move(h));
    }
    const std::size_t last = hidden;
    cache.out = (cache.h.back() * model.weights[last].transpose()).col(0) +
                Eigen::VectorXd::Constant(X.rows(), model.biases[last](0));
    return cache;
}

Gradients backward_params(const MLPModel& model, const BatchCache& cache,
                          const Eigen::VectorXd& dLdout) {
    const std::size_t hidden = model.layer_count() - 1;
    Gradients g;
    g.weights.resize(model.layer_count());
    g.biases.resize(model.layer_count());

    // output layer
    g.weights[hidden] = dLdout.transpose() * cache.h[hidden];
    g.biases[hidden] = Eigen::VectorXd::Constant(1, dLdout.sum());

    Eigen::MatrixXd grad = dLdout * model.weights[hidden];  // n x s_last
    for (std::size_t k = hidden; k-- > 0;) {
        if (!cache.masks.empty()) grad.array() *= cache.masks[k].array();
        grad.array() *= act_derivative(model.activation, cache.z[k]).array();
        g.weights[k] = grad.transpose() * cache.h[k];
        g.biases[k] = grad.colwise().sum().transpose();
        if (k > 0) grad = grad * model.weights[k];
    }
    return g;
}

}  // namespace

Eigen::VectorXd predict(const MLPModel& model, const Eigen::MatrixXd& X) {
    return forward_batch(model, X, nullptr).out;
}

ForwardTrace forward_trace(const MLPModel& model, const Eigen::MatrixXd& X) {
    BatchCache cache = forward_batch(model, X, nullptr);
    ForwardTrace t;
    t.z = std::move(cache.z);
    t.h = std::move(cache.h);
    t.output = std::move(cache.out);
    return t;
}

double mse(const Eigen::VectorXd& predictions, const Eigen::VectorXd& targets) {
    if (predictions.size() != targets.size() || predictions.size() == 0) {
        throw NumericError("mse requires equal non-zero lengths");
    }
    return (predictions - targets).squaredNorm() / static_cast<double>(predictions.size());
}

std::pair<double, Gradients> loss_gradients(const MLPModel& model, const Eigen::MatrixXd& X,
                                            const Eigen::VectorXd& y) {
    BatchCache cache = forward_batch(model, X, nullptr);
    const double loss = mse(cache.out, y);
    const Eigen::VectorXd dLdout = 2.0 * (cache.out - y) / static_cast<double>(y.size());
    return {loss, backward_params(model, cache, dLdout)};
}

Eigen::MatrixXd input_gradients(const MLPModel& model, const Eigen::MatrixXd& X) {
    BatchCache cache = forward_batch(model, X, nullptr);
    const std::size_t hidden = model.layer_count() - 1;
    Eigen::MatrixXd grad = Eigen::MatrixXd::Ones(X.rows(), 1) * model.weights[hidden];
    for (std::size_t k = hidden; k-- > 0;) {
        grad.array() *= act_derivative(model.activation, cache.z[k]).array();
        grad = grad * model.weights[k];
    }
    return grad;
}

namespace {

struct OptimizerState {
    std::vector<Eigen::MatrixXd> m_w, v_w;
    std::vector<Eigen::VectorXd> m_b, v_b;
    long t = 0;

    explicit OptimizerState(const MLPModel& model) {
        for (std::size_t k = 0; k < model.layer_count(); ++k) {
            m_w.push_back(Eigen::MatrixXd::Zero(model.weights[k].rows(), model.weights[k].cols()));
            v_w.push_back(Eigen::MatrixXd::Zero(model.weights[k].rows(), model.weights[k].cols()));
            m_b.push_back(Eigen::VectorXd::Zero(model.biases[k].size()));
            v_b.push_back(Eigen::VectorXd::Zero(model.biases[k].size()));
        }
    }
};

constexpr double kBeta1 = 0.9;
constexpr double kBeta2 = 0.999;
constexpr double kAdamEps = 1e-8;
constexpr double kRmspropAlpha = 0.99;
constexpr double kAdagradEps = 1e-10;

template <class Arr>
void apply_update(Optimizer opt, double lr, long t, Arr& p, const Arr& g, Arr& m, Arr& v) {
    switch (opt) {
        case Optimizer::SGD:
            p -= lr * g;
            break;
        case Optimizer::Adam: {
            m = kBeta1 * m + (1.0 - kBeta1) * g;
            v = kBeta2 * v + (1.0 - kBeta2) * g.array().square().matrix();
            const double bc1 = 1.0 - std::pow(kBeta1, t);
            const double bc2 = 1.0 - std::pow(kBeta2, t);
            p.array() -= lr * (m.array() / bc1) / ((v.array() / bc2).sqrt() + kAdamEps);
            break;
        }
        case Optimizer::Adamax: {
            m = kBeta1 * m + (1.0 - kBeta1) * g;
            v = (kBeta2 * v.array()).max(g.array().abs()).matrix();  // infinity norm
            const double bc1 = 1.0 - std::pow(kBeta1, t);
            p.array() -= (lr / bc1) * m.array() / (v.array() + kAdamEps);
            break;
        }
        case Optimizer::NAdam: {
            // Nesterov-weighted Adam (Dozat), no momentum schedule
            m = kBeta1 * m + (1.0 - kBeta1) * g;
            v = kBeta2 * v + (1.0 - kBeta2) * g.array().square().matrix();
            const double bc1_next = 1.0 - std::pow(kBeta1, t + 1);
            const double bc1 = 1.0 - std::pow(kBeta1, t);
            const double bc2 = 1.0 - std::pow(kBeta2, t);
            p.array() -= lr *
                         (kBeta1 * m.array() / bc1_next + (1.0 - kBeta1) * g.array() / bc1) /
                         ((v.array() / bc2).sqrt() + kAdamEps);
            break;
        }
        case Optimizer::RAdam: {
            m = kBeta1 * m + (1.0 - kBeta1) * g;
            v = kBeta2 * v + (1.0 - kBeta2) * g.array().square().matrix();
            const double bc1 = 1.0 - std::pow(kBeta1, t);
            const double bc2 = 1.0 - std::pow(kBeta2, t);
            const double rho_inf = 2.0 / (1.0 - kBeta2) - 1.0;
            const double rho_t =
                rho_inf - 2.0 * static_cast<double>(t) * std::pow(kBeta2, t) / bc2;
            if (rho_t > 5.0) {
                const double rect = std::sqrt(((rho_t - 4.0) * (rho_t - 2.0) * rho_inf) /
                                              ((rho_inf - 4.0) * (rho_inf - 2.0) * rho_t));
                p.array() -= lr * rect * (m.array() / bc1) * std::sqrt(bc2) /
                             (v.array().sqrt() + kAdamEps);
            } else {
                p.array() -= lr * (m.array() / bc1);
            }
            break;
        }
        case Optimizer::Adagrad: {
            v.array() += g.array().square();
            p.array() -= lr * g.array() / (v.array().sqrt() + kAdagradEps);
            break;
        }
        case Optimizer::RMSprop: {
            v = kRmspropAlpha * v + (1.0 - kRmspropAlpha) * g.array().square().matrix();
            p.array() -= lr * g.array() / (v.array().sqrt() + kAdamEps);
            break;
        }
    }
}

bool model_finite(const MLPModel& model) {
    for (const auto& w : model.weights) {
        if (!w.allFinite()) return false;
    }
    for (const auto& b : model.biases) {
        if (!b.allFinite()) return false;
    }
    return true;
}

}  // namespace

TrainResult train(const MLPModel& model, const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                  const MLPConfig& config) {
    config.validate();
    if (X.rows() != y.size() || X.rows() == 0) throw NumericError("training data shape mismatch");
    if (!X.allFinite() || !y.allFinite()) throw NumericError("training data must be finite");

    TrainResult result;
    result.model = model;
    if (config.epochs == 0) return result;

    MLPModel& net = result.model;
    OptimizerState state(net);
    const double lr = base_learning_rate(config.optimizer) * config.lr_multiplier;
    Rng rng(derive_seed(config.seed, 0x7124));

    const int n = static_cast<int>(X.rows());
    const int batch = std::min(config.batch_size, n);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);

    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        rng.shuffle(order);
        double epoch_sq_sum = 0.0;
        for (int start = 0; start < n; start += batch) {
            const int count = std::min(batch, n - start);
            Eigen::MatrixXd xb(count, X.cols());
            Eigen::VectorXd yb(count);
            for (int i = 0; i < count; ++i) {
                xb.row(i) = X.row(order[start + i]);
                yb(i) = y(order[start + i]);
            }

            BatchCache cache = forward_batch(net, xb, &rng);
            const Eigen::VectorXd residual = cache.out - yb;
            epoch_sq_sum += residual.squaredNorm();
            const Eigen::VectorXd dLdout = 2.0 * residual / static_cast<double>(count);
            Gradients grads = backward_params(net, cache, dLdout);

            ++state.t;
            for (std::size_t k = 0; k < net.layer_count(); ++k) {
                apply_update(config.optimizer, lr, state.t, net.weights[k], grads.weights[k],
                             state.m_w[k], state.v_w[k]);
                apply_update(config.optimizer, lr, state.t, net.biases[k], grads.biases[k],
                             state.m_b[k], state.v_b[k]);
            }
        }
        const double epoch_loss = epoch_sq_sum / n;
        result.epoch_loss.push_back(epoch_loss);
        if (!std::isfinite(epoch_loss) || !model_finite(net)) {
            result.diverged = true;
            return result;
        }
    }
    return result;
}

// --- weight-file round trip ---------------------------------------------

namespace {

constexpr char kBinaryMagic[9] = "XAITMLP1";

void write_u32(std::ostream& out, std::uint32_t v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}
void write_f64(std::ostream& out, double v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}
std::uint32_t read_u32(std::istream& in) {
    std::uint32_t v = 0;
    in.read(reinterpret_cast<char*>(&v), sizeof(v));
    return v;
}
double read_f64(std::istream& in) {
    double v = 0;
    in.read(reinterpret_cast<char*>(&v), sizeof(v));
    return v;
}

bool is_text_path(const std::string& path) {
    return path.size() >= 4 && path.compare(path.size() - 4, 4, ".txt") == 0;
}

void save_binary(const ModelBundle& bundle, std::ostream& out) {
    out.write(kBinaryMagic, 8);
    write_u32(out, 1);  // version
    write_u32(out, static_cast<std::uint32_t>(bundle.model.activation));
    write_f64(out, bundle.model.dropout_p);
    write_u32(out, static_cast<std::uint32_t>(bundle.model.layer_count()));
    for (std::size_t k = 0; k < bundle.model.layer_count(); ++k) {
        const auto& w = bundle.model.weights[k];
        write_u32(out, static_cast<std::uint32_t>(w.rows()));
        write_u32(out, static_cast<std::uint32_t>(w.cols()));
        for (Eigen::Index r = 0; r < w.rows(); ++r) {
            for (Eigen::Index c = 0; c < w.cols(); ++c) write_f64(out, w(r, c));
        }
        for (Eigen::Index r = 0; r < bundle.model.biases[k].size(); ++r) {
            write_f64(out, bundle.model.biases[k](r));
        }
    }
    write_u32(out, bundle.scaler ? 1u : 0u);
    if (bundle.scaler) {
        write_u32(out, static_cast<std::uint32_t>(bundle.scaler->mean().size()));
        for (Eigen::Index i = 0; i < bundle.scaler->mean().size(); ++i) {
            write_f64(out, bundle.scaler->mean()(i));
        }
        for (Eigen::Index i = 0; i < bundle.scaler->stddev().size(); ++i) {
            write_f64(out, bundle.scaler->stddev()(i));
        }
    }
    write_u32(out, static_cast<std::uint32_t>(bundle.feature_names.size()));
    for (const auto& name : bundle.feature_names) {
        write_u32(out, static_cast<std::uint32_t>(name.size()));
        out.write(name.data(), static_cast<std::streamsize>(name.size()));
    }
}

ModelBundle load_binary(std::istream& in, const std::string& path) {
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, kBinaryMagic, 8) != 0) {
        throw ConfigError(path + ": not a model weight file");
    }
    if (read_u32(in) != 1) throw ConfigError(path + ": unsupported weight file version");

    ModelBundle bundle;
    bundle.model.activation = static_cast<Activation>(read_u32(in));
    bundle.model.dropout_p = read_f64(in);
    const std::uint32_t layers = read_u32(in);
    for (std::uint32_t k = 0; k < layers; ++k) {
        const std::uint32_t rows = read_u32(in), cols = read_u32(in);
        Eigen::MatrixXd w(rows, cols);
        for (std::uint32_t r = 0; r < rows; ++r) {
            for (std::uint32_t c = 0; c < cols; ++c) w(r, c) = read_f64(in);
        }
        Eigen::VectorXd b(rows);
        for (std::uint32_t r = 0; r < rows; ++r) b(r) = read_f64(in);
        bundle.model.weights.push_back(std::move(w));
        bundle.model.biases.push_back(std::move(b));
    }
    if (read_u32(in) == 1) {
        const std::uint32_t m = read_u32(in);
        Eigen::VectorXd mean(m), stddev(m);
        for (std::uint32_t i = 0; i < m; ++i) mean(i) = read_f64(in);
        for (std::uint32_t i = 0; i < m; ++i) stddev(i) = read_f64(in);
        bundle.scaler = StandardScaler::from_moments(std::move(mean), std::move(stddev));
    }
    const std::uint32_t names = read_u32(in);
    for (std::uint32_t i = 0; i < names; ++i) {
        const std::uint32_t len = read_u32(in);
        std::string name(len, '\0');
        in.read(name.data(), len);
        bundle.feature_names.push_back(std::move(name));
    }
    if (!in) throw ConfigError(path + ": truncated weight file");
    return bundle;
}

void save_text(const ModelBundle& bundle, std::ostream& out) {
    out << "xaitune-mlp 1\n";
    out << "activation " << to_string(bundle.model.activation) << "\n";
    out << "dropout " << bundle.model.dropout_p << "\n";
    out << "layers " << bundle.model.layer_count() << "\n";
    out.precision(17);
    for (std::size_t k = 0; k < bundle.model.layer_count(); ++k) {
        const auto& w = bundle.model.weights[k];
        out << "layer " << k << " " << w.rows() << " " << w.cols() << "\n";
        for (Eigen::Index r = 0; r < w.rows(); ++r) {
            for (Eigen::Index c = 0; c < w.cols(); ++c) out << w(r, c) << (c + 1 < w.cols() ? " " : "\n");
        }
        for (Eigen::Index r = 0; r < bundle.model.biases[k].size(); ++r) {
            out << bundle.model.biases[k](r) << (r + 1 < bundle.model.biases[k].size() ? " " : "");
        }
        out << "\n";
    }
    out << "scaler " << (bundle.scaler ? bundle.scaler->mean().size() : 0) << "\n";
    if (bundle.scaler) {
        for (Eigen::Index i = 0; i < bundle.scaler->mean().size(); ++i) {
            out << bundle.scaler->mean()(i) << (i + 1 < bundle.scaler->mean().size() ? " " : "\n");
        }
        for (Eigen::Index i = 0; i < bundle.scaler->stddev().size(); ++i) {
            out << bundle.scaler->stddev()(i) << (i + 1 < bundle.scaler->stddev().size() ? " " : "\n");
        }
    }
    out << "features " << bundle.feature_names.size() << "\n";
    for (const auto& name : bundle.feature_names) out << name << "\n";
}

ModelBundle load_text(std::istream& in, const std::string& path) {
    std::string token;
    int version = 0;
    in >> token >> version;
    if (token != "xaitune-mlp" || version != 1) {
        throw ConfigError(path + ": not a textual model weight file");
    }
    ModelBundle bundle;
    std::string act;
    std::size_t layers = 0;
    in >> token >> act;
    bundle.model.activation = activation_from_string(act);
    in >> token >> bundle.model.dropout_p;
    in >> token >> layers;
    for (std::size_t k = 0; k < layers; ++k) {
        std::size_t idx, rows, cols;
        in >> token >> idx >> rows >> cols;
        Eigen::MatrixXd w(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) in >> w(r, c);
        }
        Eigen::VectorXd b(rows);
        for (std::size_t r = 0; r < rows; ++r) in >> b(r);
        bundle.model.weights.push_back(std::move(w));
        bundle.model.biases.push_back(std::move(b));
    }
    std::size_t scaler_m = 0;
    in >> token >> scaler_m;
    if (scaler_m > 0) {
        Eigen::VectorXd mean(scaler_m), stddev(scaler_m);
        for (std::size_t i = 0; i < scaler_m; ++i) in >> mean(i);
        for (std::size_t i = 0; i < scaler_m; ++i) in >> stddev(i);
        bundle.scaler = StandardScaler::from_moments(std::move(mean), std::move(stddev));
    }
    std::size_t names = 0;
    in >> token >> names;
    for (std::size_t i = 0; i < names; ++i) {
        std::string name;
        in >> name;
        bundle.feature_names.push_back(std::move(name));
    }
    if (!in) throw ConfigError(path + ": truncated weight file");
    return bundle;
}

}  // namespace

void save_model(const ModelBundle& bundle, const std::string& path) {
    std::ofstream out(path, is_text_path(path) ? std::ios::out : std::ios::out | std::ios::binary);
    if (!out) throw ConfigError("cannot write model file: " + path);
    if (is_text_path(path)) {
        save_text(bundle, out);
    } else {
        save_binary(bundle, out);
    }
    if (!out) throw NumericError("failed writing model file: " + path);
}

ModelBundle load_model(const std::string& path) {
    std::ifstream in(path, is_text_path(path) ? std::ios::in : std::ios::in | std::ios::binary);
    if (!in) throw ConfigError("cannot open model file: " + path);
    return is_text_path(path) ? load_text(in, path) : load_binary(in, path);
}

}  // namespace xaitune::nn
