#ifndef BR_BARRON_HPP
#define BR_BARRON_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "br/model.hpp"
#include "br/numerics.hpp"

namespace br {

struct BarronAtom {
    double p;               // probability mass
    std::vector<double> w;  // direction on the l1 sphere
    double a;               // coefficient
};

/// Finite-atom representation f(x) = sum_j p_j a_j relu(<w_j, x>).
struct DiscreteBarronRep {
    std::size_t d = 0;
    std::vector<BarronAtom> atoms;

    /// Enforces: nonempty atom list, masses summing to 1 and rows on the
    /// l1 sphere within 1e-12, matching dimensions.
    void validate() const;
};

double eval_rep(const DiscreteBarronRep& rep, std::span<const double> x);

/// (sum_j p_j |a_j|^p)^(1/p): the value of this representation, an upper
/// bound on the gamma_p norm of the function it represents.
double rep_gamma_p(const DiscreteBarronRep& rep, double p);

/// Monte-Carlo network: draw m atoms i.i.d. from the masses; neuron k gets
/// weight row w_(j_k) and outer coefficient a_(j_k)/m.
NetParams sample_network(const DiscreteBarronRep& rep, std::size_t m, RngStream& rng);

struct ApproximantResult {
    NetParams params;
    int tries = 0;
    double est_sq_error = 0.0;  // mean (f - f_net)^2 over the test sample
    double path_norm = 0.0;
    double gamma2 = 0.0;        // gamma_2 value of the source representation
};

struct ConstructionError : std::runtime_error {
    ApproximantResult best;  // lowest estimated-error draw seen
    ConstructionError(const std::string& msg, ApproximantResult b)
        : std::runtime_error(msg), best(std::move(b)) {}
};

/// Resample sample_network until the drawn network satisfies both
///   mean (f - f_net)^2 over test_x  <=  3 gamma_2^2 / m
///   path norm                       <=  2 gamma_2
/// and return the first accepted draw with its try count. The expectation
/// in the first event is estimated on the caller-supplied test sample.
/// Per-draw acceptance probability is at least 1/6; exceeding max_tries
/// throws ConstructionError carrying the best draw seen.
ApproximantResult construct_approximant(const DiscreteBarronRep& rep, std::size_t m,
                                        const DenseMatrix& test_x, RngStream& rng,
                                        int max_tries);

/// The induced representation of a finite network: atom masses 1/m, rows
/// normalized to the l1 sphere, coefficients m * a_k * ||w_k||_1. Zero rows
/// are dropped with their mass redistributed uniformly.
DiscreteBarronRep rep_from_network(const NetParams& params);

/// {"d": int, "atoms": [{"p": float, "w": [float], "a": float}]}
std::string rep_to_json(const DiscreteBarronRep& rep);
DiscreteBarronRep rep_from_json(const std::string& text);

}  // namespace br

#endif
