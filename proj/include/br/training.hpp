#ifndef BR_TRAINING_HPP
#define BR_TRAINING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "br/data.hpp"
#include "br/loss.hpp"
#include "br/model.hpp"

namespace br {

/// The theory-driven regularization scale 4 sqrt(2 ln(2d) / n). Requires
/// ln(2d) >= 1, i.e. d >= 2.
double lambda_n(std::size_t d, std::size_t n);

/// Truncation level B_n = 1 + max{tau0, sigma^2 ln n}.
double b_n(double tau0, double sigma, std::size_t n);

struct TrainConfig {
    std::size_t T = 2000;
    double base_lr = 1e-3;
    double decay_factor = 0.1;
    double decay_at_1 = 0.7;  // fractions of T
    double decay_at_2 = 0.9;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    std::size_t batch = 0;  // 0 = full batch
    double lambda = 0.0;
    std::uint64_t seed = 1;
    std::uint64_t stream = 0;        // batch-sampling stream
    std::size_t history_stride = 0;  // 0 = max(1, T/1000)

    double lr_at(std::size_t step) const;  // step in [1, T]
};

struct HistoryRow {
    std::size_t step;
    double lr;
    double emp_risk;
    double path_norm;
    double j_lambda;
};

struct TrainedModel {
    NetParams params;
    std::vector<HistoryRow> history;
    TrainConfig config;
    LossSpec loss;
    double b_scale = 1.0;
    InitSpec init;
};

/// Mean (possibly truncated) per-sample loss of the truncated network.
double empirical_risk(const NetParams& params, const Dataset& data, const LossSpec& loss);

/// J_lambda = empirical risk + lambda * b_scale * (path norm + 1).
double regularized_risk(const NetParams& params, const Dataset& data, const LossSpec& loss,
                        double lambda, double b_scale);

/// One Adam state per parameter tensor; step() applies one bias-corrected
/// update in place.
struct AdamState {
    std::vector<double> m1, m2;
    std::size_t t = 0;
    double beta1, beta2, eps;

    AdamState(std::size_t size, double b1, double b2, double e);
    void begin_step() { ++t; }
    void update(std::span<double> theta, std::span<const double> g, double lr);
};

/// T Adam steps on the subgradient of the regularized risk. b_scale is 1
/// for the squared loss and B for the truncated loss. Deterministic given
/// the config and init seeds. Throws std::runtime_error("divergence at
/// step k") if the loss stops being finite.
TrainedModel train(const Dataset& data, std::size_t m, const LossSpec& loss,
                   const TrainConfig& cfg, const InitSpec& init);

/// Plug-in classifier 1[Tf(x) >= 1/2].
int plug_in_classify(const NetParams& params, std::span<const double> x);

/// Misclassification fraction of the plug-in classifier; labels must be 0/1.
double zero_one_risk(const NetParams& params, const Dataset& data);

/// History as a (step, lr, emp_risk, path_norm, J_lambda) table.
Table history_table(const TrainedModel& model);

}  // namespace br

#endif
