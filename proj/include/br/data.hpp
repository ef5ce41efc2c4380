#ifndef BR_DATA_HPP
#define BR_DATA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "br/barron.hpp"
#include "br/numerics.hpp"

namespace br {

/// Sub-Gaussian noise model P[|xi| > t] <= c0 exp(-t^2 / (2 sigma^2)) for
/// t >= tau0. gaussian draws N(0, sigma^2) (c0 = 2, tau0 = 0); bounded draws
/// uniform on [-tau0, tau0] (sigma = 0).
struct NoiseSpec {
    enum class Kind { none, gaussian, bounded };
    Kind kind = Kind::none;
    double sigma = 0.0;
    double tau0 = 0.0;
    double c0 = 0.0;

    static NoiseSpec none() { return {}; }
    static NoiseSpec gaussian(double sigma) { return {Kind::gaussian, sigma, 0.0, 2.0}; }
    static NoiseSpec bounded(double tau0) { return {Kind::bounded, 0.0, tau0, 0.0}; }

    double sample(RngStream& rng) const;
};

/// A ground-truth function plus its noise model: y = f*(x) + xi.
struct TargetSpec {
    DiscreteBarronRep rep;
    NoiseSpec noise;
};

struct DatasetMeta {
    std::string source;
    NoiseSpec noise;
    bool y_may_exceed_unit = false;        // noisy regression responses
    std::optional<double> target_gamma2;   // known for synthetic targets
};

/// n rows in [-1,1]^d with responses; responses lie in [0,1] unless the
/// meta flags noisy regression.
struct Dataset {
    DenseMatrix X;
    std::vector<double> y;
    DatasetMeta meta;

    std::size_t n() const { return X.rows; }
    std::size_t d() const { return X.cols; }

    /// Enforces the range invariants above; throws on violation.
    void validate() const;
};

/// X i.i.d. uniform on [-1,1]^d, y_i = f*(x_i) + xi_i. If prepend_one is
/// set, a constant-1 coordinate is prepended (bias handling) and d counts it.
Dataset synth(const TargetSpec& target, std::size_t n, RngStream& x_rng,
              RngStream& noise_rng, bool prepend_one = false);

/// MNIST IDX pair: pixels scaled linearly from [0,255] to [-1,1], digits
/// {0..4} mapped to label 0 and {5..9} to 1.
Dataset load_mnist(const std::string& image_path, const std::string& label_path);

/// Uniform without-replacement subset of n rows.
Dataset subsample(const Dataset& data, std::size_t n, RngStream& rng);

/// A CSV-exportable table: header plus rows of cells. Numeric cells print
/// with 17 significant digits so a reload is bit-identical.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::variant<double, std::int64_t, std::string>>> rows;

    void add_row(std::vector<std::variant<double, std::int64_t, std::string>> row);
};

void export_csv(const Table& table, const std::string& path);

/// Dataset as CSV (columns x0..x{d-1}, y) plus a JSON sidecar with the meta.
void export_dataset(const Dataset& data, const std::string& csv_path);
Dataset load_dataset_csv(const std::string& csv_path);

}  // namespace br

#endif
