#ifndef BR_NUMERICS_HPP
#define BR_NUMERICS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace br {

/// Dense row-major matrix of doubles. The only matrix type used in this
/// library; everything is desk-scale, so no sparse or blocked storage.
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;  // rows*cols, row-major

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    std::span<double> row(std::size_t i) { return {data.data() + i * cols, cols}; }
    std::span<const double> row(std::size_t i) const { return {data.data() + i * cols, cols}; }

    bool all_finite() const;
};

/// Deterministic random stream. A (seed, stream) pair always reproduces the
/// same sequence; distinct stream ids give statistically independent streams.
/// Instances are not shareable across concurrent tasks: give each task its
/// own stream id.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    std::uint64_t next_u64();
    /// Uniform in [0, 1).
    double uniform();
    double uniform(double lo, double hi);
    /// Standard normal via Box-Muller (implementation-pinned so sequences do
    /// not depend on the standard library's distribution internals).
    double gaussian();
    /// Uniform index in [0, n).
    std::size_t index(std::size_t n);

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Solve A x = b for symmetric positive-definite A by dense Cholesky.
/// Only the lower triangle of A is read. Throws std::runtime_error
/// ("not positive definite at pivot k") when a pivot is not positive.
std::vector<double> cholesky_solve(const DenseMatrix& A, std::span<const double> b);

/// In-place lower-triangular Cholesky factor of A (lower triangle of the
/// result holds L). Same pivot error contract as cholesky_solve.
void cholesky_factor(DenseMatrix& A);

/// Solve using a factor produced by cholesky_factor.
std::vector<double> cholesky_solve_factored(const DenseMatrix& L, std::span<const double> b);

/// Uniform sample from the l1 sphere {w : ||w||_1 = 1}: symmetric
/// Dirichlet(1,...,1) magnitudes with independent uniform signs.
std::vector<double> sample_l1_sphere(std::size_t d, RngStream& rng);

struct PowerLawFit {
    double slope;      // beta estimate in value ~ n^{-beta}
    double intercept;  // fitted log(value) at log(n) = 0
};

/// Least-squares fit of log(value) = intercept - slope * log(n).
/// Requires >= 2 points with strictly positive coordinates.
PowerLawFit loglog_slope(std::span<const std::pair<double, double>> points);

/// Sum with pairwise (tree) reduction; the result depends only on element
/// order, never on threading.
double pairwise_sum(std::span<const double> v);

/// Global worker-thread cap for the parallel helpers. Thread count never
/// affects numerical results, only wall time.
int max_threads();
void set_max_threads(int n);

/// Run fn(0..n_chunks-1), possibly on several threads. Chunks must write to
/// disjoint state.
void parallel_chunks(std::size_t n_chunks, const std::function<void(std::size_t)>& fn);

/// Fixed diagonal jitter 1e-10 * trace/n, used on every Gram matrix before
/// factorization to absorb Monte-Carlo kernel rank deficiency.
void add_gram_jitter(DenseMatrix& K);

}  // namespace br

#endif
