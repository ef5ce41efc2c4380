#ifndef BR_KERNEL_HPP
#define BR_KERNEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "br/numerics.hpp"

namespace br {

/// Monte-Carlo random features for the kernel
///   k(x, x') = E_{w ~ pi0}[relu(<w,x>) relu(<w,x'>)]
/// with pi0 uniform on the l1 sphere, estimated by M sampled directions.
struct RandomFeatureKernel {
    DenseMatrix directions;  // M x d, rows on the l1 sphere
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    std::size_t feature_count() const { return directions.rows; }
    std::size_t dim() const { return directions.cols; }
};

RandomFeatureKernel make_kernel(std::size_t d, std::size_t M, RngStream& rng);

/// (1/M) sum_j relu(<w_j,x>) relu(<w_j,x'>); symmetric in (x, x') exactly.
double kernel_eval(const RandomFeatureKernel& k, std::span<const double> x,
                   std::span<const double> xp);

/// Feature matrix relu(X W^T), n x M.
DenseMatrix relu_features(const RandomFeatureKernel& k, const DenseMatrix& X);

/// Symmetric n x n Gram matrix with the standard jitter added.
DenseMatrix gram(const RandomFeatureKernel& k, const DenseMatrix& X);

/// Kernel ridge regression fit: dual coefficients from
/// (K + 2 n ridge I) alpha = y, the stationarity condition of
/// (1/2n) sum (h(x_i) - y_i)^2 + ridge * alpha^T K alpha.
struct KrrModel {
    std::vector<double> alpha;
    DenseMatrix train_x;
    RandomFeatureKernel kernel;
    double ridge = 0.0;
    std::vector<double> feature_coef;  // (1/M) Phi^T alpha, for fast prediction
};

KrrModel krr_fit(const RandomFeatureKernel& k, const DenseMatrix& X,
                 std::span<const double> y, double ridge);

/// sum_i alpha_i k(x_i, x), clipped to [0,1] to match the network truncation.
double krr_predict(const KrrModel& model, std::span<const double> x);

void krr_predict_batch(const KrrModel& model, const DenseMatrix& X, std::span<double> out);

/// alpha^T K alpha (clamped at zero), the squared RKHS norm of the fit.
double rkhs_norm_sq(const KrrModel& model);

/// JSON metadata plus binary alpha / directions / training inputs, same
/// container discipline as the network files.
void save_krr(const KrrModel& model, const std::string& bin_path);
KrrModel load_krr(const std::string& bin_path);

}  // namespace br

#endif
