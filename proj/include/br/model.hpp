#ifndef BR_MODEL_HPP
#define BR_MODEL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "br/loss.hpp"
#include "br/numerics.hpp"

namespace br {

/// Width-m two-layer ReLU network f(x) = sum_k a_k relu(<w_k, x>).
/// a holds the outer coefficients, W the inner weights (one row per neuron).
struct NetParams {
    std::vector<double> a;  // m
    DenseMatrix W;          // m x d

    std::size_t width() const { return a.size(); }
    std::size_t dim() const { return W.cols; }
};

/// Gaussian init scheme: a_k ~ N(0, 2*kappa/m), W_kj ~ N(0, 2*kappa/d).
struct InitSpec {
    double kappa = 1.0;
    std::uint64_t seed = 1;
    std::uint64_t stream = 0;
};

double forward(const NetParams& params, std::span<const double> x);

/// clip(forward, 0, 1); the network output used in every loss and metric.
double forward_truncated(const NetParams& params, std::span<const double> x);

/// Batched truncated forward over the rows of X.
void forward_truncated_batch(const NetParams& params, const DenseMatrix& X,
                             std::span<double> out);

/// Path norm sum_k |a_k| * ||w_k||_1.
double path_norm(const NetParams& params);

NetParams init_params(std::size_t m, std::size_t d, const InitSpec& spec);

/// Average subgradient over the batch of loss(Tf(x), y) plus
/// lambda * b_scale * d||theta||_P. Subgradient conventions: relu'(0) = 0,
/// clip derivative 0 outside (0,1), sign(0) = 0, truncated-loss derivative 0
/// at and beyond the cap. If batch_risk is non-null it receives the average
/// batch loss (a free byproduct of the forward pass).
NetParams grad(const NetParams& params, const DenseMatrix& X, std::span<const double> y,
               const LossSpec& loss, double lambda, double b_scale,
               double* batch_risk = nullptr);

/// Same, restricted to the given row indices of X.
NetParams grad_indexed(const NetParams& params, const DenseMatrix& X,
                       std::span<const double> y, std::span<const std::size_t> rows,
                       const LossSpec& loss, double lambda, double b_scale,
                       double* batch_risk = nullptr);

/// Flat binary container: little-endian u32 m, u32 d, m f64 a, m*d f64 W
/// row-major. A JSON sidecar {m, d, kappa, seed} is written next to it.
void save_net(const NetParams& params, const std::string& bin_path, double kappa,
              std::uint64_t seed);
NetParams load_net(const std::string& bin_path);

}  // namespace br

#endif
