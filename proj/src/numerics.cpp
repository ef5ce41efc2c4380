#include "br/numerics.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace br {

bool DenseMatrix::all_finite() const {
    for (double v : data)
        if (!std::isfinite(v)) return false;
    return true;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
    // Four words from a splitmix chain keyed by (seed, stream); seed_seq
    // expansion is pinned by the standard, so sequences are portable.
    std::uint64_t state = seed ^ (0xA0761D6478BD642FULL * (stream + 1));
    std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(state)),
                      static_cast<std::uint32_t>(splitmix64(state)),
                      static_cast<std::uint32_t>(splitmix64(state)),
                      static_cast<std::uint32_t>(splitmix64(state)),
                      static_cast<std::uint32_t>(splitmix64(state)),
                      static_cast<std::uint32_t>(splitmix64(state))};
    return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(make_engine(seed, stream)) {}

std::uint64_t RngStream::next_u64() { return engine_(); }

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double RngStream::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double phi = 2.0 * M_PI * u2;
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
}

std::size_t RngStream::index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("index: empty range");
    // Rejection sampling to stay unbiased.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return static_cast<std::size_t>(v % n);
}

void cholesky_factor(DenseMatrix& A) {
    if (A.rows != A.cols) throw std::invalid_argument("cholesky: matrix not square");
    const std::size_t n = A.rows;
    double* a = A.data.data();
    for (std::size_t j = 0; j < n; ++j) {
        double diag = a[j * n + j];
        const double* rowj = a + j * n;
        double s = 0.0;
        for (std::size_t k = 0; k < j; ++k) s += rowj[k] * rowj[k];
        diag -= s;
        if (!(diag > 0.0))
            throw std::runtime_error("not positive definite at pivot " + std::to_string(j));
        double ljj = std::sqrt(diag);
        a[j * n + j] = ljj;
        double inv = 1.0 / ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            const double* rowi = a + i * n;
            double dot = 0.0;
            for (std::size_t k = 0; k < j; ++k) dot += rowi[k] * rowj[k];
            a[i * n + j] = (a[i * n + j] - dot) * inv;
        }
    }
}

std::vector<double> cholesky_solve_factored(const DenseMatrix& L, std::span<const double> b) {
    const std::size_t n = L.rows;
    if (b.size() != n) throw std::invalid_argument("cholesky: shape error");
    const double* a = L.data.data();
    std::vector<double> x(b.begin(), b.end());
    for (std::size_t i = 0; i < n; ++i) {
        double s = x[i];
        const double* rowi = a + i * n;
        for (std::size_t k = 0; k < i; ++k) s -= rowi[k] * x[k];
        x[i] = s / rowi[i];
    }
    for (std::size_t ii = n; ii-- > 0;) {
        double s = x[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= a[k * n + ii] * x[k];
        x[ii] = s / a[ii * n + ii];
    }
    return x;
}

std::vector<double> cholesky_solve(const DenseMatrix& A, std::span<const double> b) {
    if (A.rows != A.cols || A.rows != b.size())
        throw std::invalid_argument("cholesky: shape error");
    DenseMatrix L = A;
    cholesky_factor(L);
    return cholesky_solve_factored(L, b);
}

std::vector<double> sample_l1_sphere(std::size_t d, RngStream& rng) {
    if (d == 0) throw std::invalid_argument("sample_l1_sphere: empty dimension");
    std::vector<double> w(d);
    double total = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        double u;
        do {
            u = rng.uniform();
        } while (u <= 0.0);
        w[j] = -std::log(u);  // Exp(1); normalized vector is Dirichlet(1,..,1)
        total += w[j];
    }
    for (std::size_t j = 0; j < d; ++j) {
        double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
        w[j] = sign * w[j] / total;
    }
    return w;
}

PowerLawFit loglog_slope(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2) throw std::invalid_argument("loglog_slope: need at least 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(points.size());
    for (const auto& [x, v] : points) {
        if (!(x > 0.0) || !(v > 0.0))
            throw std::invalid_argument("loglog_slope: log of non-positive");
        double lx = std::log(x), lv = std::log(v);
        sx += lx;
        sy += lv;
        sxx += lx * lx;
        sxy += lx * lv;
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("loglog_slope: degenerate abscissae");
    double b = (n * sxy - sx * sy) / denom;  // slope of log v vs log x
    double a = (sy - b * sx) / n;
    return {-b, a};
}

double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    std::size_t half = v.size() / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

namespace {
std::atomic<int> g_max_threads{0};  // 0 = unresolved
}

int max_threads() {
    int v = g_max_threads.load(std::memory_order_relaxed);
    if (v > 0) return v;
    unsigned hw = std::thread::hardware_concurrency();
    int resolved = hw == 0 ? 1 : static_cast<int>(hw > 8 ? 8 : hw);
    g_max_threads.store(resolved, std::memory_order_relaxed);
    return resolved;
}

void set_max_threads(int n) {
    g_max_threads.store(n < 1 ? 1 : n, std::memory_order_relaxed);
}

void parallel_chunks(std::size_t n_chunks, const std::function<void(std::size_t)>& fn) {
    int workers = max_threads();
    if (workers <= 1 || n_chunks <= 1) {
        for (std::size_t c = 0; c < n_chunks; ++c) fn(c);
        return;
    }
    if (static_cast<std::size_t>(workers) > n_chunks)
        workers = static_cast<int>(n_chunks);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            std::size_t c = next.fetch_add(1, std::memory_order_relaxed);
            if (c >= n_chunks) break;
            try {
                fn(c);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int t = 1; t < workers; ++t) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

void add_gram_jitter(DenseMatrix& K) {
    if (K.rows == 0) return;
    double trace = 0.0;
    for (std::size_t i = 0; i < K.rows; ++i) trace += K(i, i);
    double jitter = 1e-10 * trace / static_cast<double>(K.rows);
    for (std::size_t i = 0; i < K.rows; ++i) K(i, i) += jitter;
}

}  // namespace br
