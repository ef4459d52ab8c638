#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "inrmark/common.hpp"
#include "inrmark/image.hpp"

namespace inrmark {

/// Architecture of the coordinate MLP (x,y) -> (r,g,b).
struct INRConfig {
    int hidden_layers = 3;
    int hidden_width = 256;
    static constexpr int in_dim = 2;
    static constexpr int out_dim = 3;
    double first_layer_omega = 30.0;  // w0
    std::uint64_t seed = 0;

    void validate() const {
        if (hidden_layers < 1) throw ConfigError("INRConfig: hidden_layers must be >= 1");
        if (hidden_width < 1) throw ConfigError("INRConfig: hidden_width must be >= 1");
        if (!(first_layer_omega > 0.0)) throw ConfigError("INRConfig: first_layer_omega must be > 0");
    }
};

/// Weights of the sinusoidal MLP. Layer shapes chain 2 -> width -> ... -> width -> 3.
/// w0 is folded into the first-layer weight bounds at init time; the forward
/// pass applies a plain sine between layers and a linear output layer.
template <typename T>
struct SirenParams {
    struct Layer {
        Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> W;  // out x in
        Eigen::Matrix<T, Eigen::Dynamic, 1> b;               // out
    };
    INRConfig config;
    std::vector<Layer> layers;  // hidden_layers + 1 entries

    int layer_count() const { return static_cast<int>(layers.size()); }

    size_t parameter_count() const {
        size_t n = 0;
        for (const auto& l : layers) n += static_cast<size_t>(l.W.size()) + l.b.size();
        return n;
    }

    bool same_shape(const SirenParams& o) const {
        if (layers.size() != o.layers.size()) return false;
        for (size_t i = 0; i < layers.size(); ++i)
            if (layers[i].W.rows() != o.layers[i].W.rows() || layers[i].W.cols() != o.layers[i].W.cols())
                return false;
        return true;
    }
};

/// Gradient buffer with the same layout as SirenParams.
template <typename T>
struct SirenGrads {
    std::vector<typename SirenParams<T>::Layer> layers;

    void match(const SirenParams<T>& p) {
        layers.resize(p.layers.size());
        for (size_t i = 0; i < p.layers.size(); ++i) {
            layers[i].W.setZero(p.layers[i].W.rows(), p.layers[i].W.cols());
            layers[i].b.setZero(p.layers[i].b.size());
        }
    }
};

/// Cached pre-activations from a forward pass, consumed by the backward pass.
template <typename T>
struct SirenCache {
    using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
    Mat input;             // in_dim x batch
    std::vector<Mat> pre;  // pre-activation z_i per layer, width x batch
};

namespace detail {

/// Draws layer weights per the SIREN scheme: first layer U(-w0/n, w0/n) with
/// n = fan-in, later layers U(-sqrt(6/n), sqrt(6/n)). Biases use the same
/// bound as their layer's weights.
template <typename T>
SirenParams<T> init_siren_t(const INRConfig& config) {
    config.validate();
    SirenParams<T> p;
    p.config = config;
    Rng rng(config.seed);

    std::vector<int> dims;
    dims.push_back(INRConfig::in_dim);
    for (int i = 0; i < config.hidden_layers; ++i) dims.push_back(config.hidden_width);
    dims.push_back(INRConfig::out_dim);

    p.layers.resize(dims.size() - 1);
    for (size_t li = 0; li + 1 < dims.size(); ++li) {
        const int fan_in = dims[li];
        const int fan_out = dims[li + 1];
        const double bound = (li == 0) ? config.first_layer_omega / fan_in
                                       : std::sqrt(6.0 / fan_in);
        std::uniform_real_distribution<double> dist(-bound, bound);
        auto& l = p.layers[li];
        l.W.resize(fan_out, fan_in);
        l.b.resize(fan_out);
        // fill order is fixed (row-major over W, then b) so a seed pins the bytes
        for (int r = 0; r < fan_out; ++r)
            for (int c = 0; c < fan_in; ++c) l.W(r, c) = static_cast<T>(dist(rng));
        for (int r = 0; r < fan_out; ++r) l.b(r) = static_cast<T>(dist(rng));
    }
    return p;
}

/// coords: in_dim x batch. Returns out_dim x batch. Sine between layers,
/// linear output. Fills cache when given.
template <typename T>
Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> siren_forward_t(
    const SirenParams<T>& p,
    const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& coords,
    SirenCache<T>* cache = nullptr) {
    if (p.layers.empty()) throw ContractError("siren_forward: uninitialized params");
    if (coords.rows() != INRConfig::in_dim)
        throw ContractError("siren_forward: coords must have 2 rows");

    using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
    if (cache) {
        cache->input = coords;
        cache->pre.clear();
        cache->pre.reserve(p.layers.size() - 1);
    }
    Mat a = coords;
    for (size_t li = 0; li + 1 < p.layers.size(); ++li) {
        Mat z = (p.layers[li].W * a).colwise() + p.layers[li].b;
        if (cache) cache->pre.push_back(z);
        a = z.array().sin().matrix();
    }
    const auto& out = p.layers.back();
    return (out.W * a).colwise() + out.b;
}

/// Accumulates dLoss/dParams into `grads` given dLoss/dOutput. The cache must
/// come from a forward pass over the same params/coords.
template <typename T>
void siren_backward_t(const SirenParams<T>& p, const SirenCache<T>& cache,
                      const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& grad_out,
                      SirenGrads<T>& grads) {
    using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
    const int L = p.layer_count();
    if (static_cast<int>(grads.layers.size()) != L)
        throw ContractError("siren_backward: grads not matched to params");

    // activation feeding layer li
    auto act_in = [&](int li) -> Mat {
        if (li == 0) return cache.input;
        return cache.pre[li - 1].array().sin().matrix();
    };

    Mat delta = grad_out;  // dL/dz for the current layer (output layer is linear)
    for (int li = L - 1; li >= 0; --li) {
        Mat a = act_in(li);
        grads.layers[li].W.noalias() += delta * a.transpose();
        grads.layers[li].b.noalias() += delta.rowwise().sum();
        if (li > 0) {
            Mat da = p.layers[li].W.transpose() * delta;
            delta = da.array() * cache.pre[li - 1].array().cos();
        }
    }
}

}  // namespace detail

using INRParams = SirenParams<float>;

/// Seeded SIREN initialization; deterministic given config.seed.
INRParams init_siren(const INRConfig& config);

/// Evaluate the network on a batch of (x,y) coordinates, order-preserving.
/// coords layout: 2 x batch (row 0 = x from the height index, row 1 = y).
Eigen::MatrixXf inr_forward(const INRParams& params, const Eigen::MatrixXf& coords);

/// Convenience single-coordinate evaluation.
std::array<float, 3> inr_forward(const INRParams& params, float x, float y);

struct FitOptions {
    double learning_rate = 1e-4;  // Adam
    int steps = 5000;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

struct FitReport {
    double final_loss = 0.0;
    double final_psnr = 0.0;  // dB, vs the training image after clamping
    int steps = 0;
    double wall_time = 0.0;  // seconds
    std::vector<double> loss_checkpoints;  // loss sampled every 100 steps
};

/// Stage 1: fit the INR to an image by full-grid Adam on MSE.
/// Throws TrainingError (with the step index) if the loss goes non-finite.
std::pair<INRParams, FitReport> fit_inr(const Image& image, const INRConfig& config,
                                        const FitOptions& opt = {});

}  // namespace inrmark
