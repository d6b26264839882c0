#pragma once

// Monte Carlo estimates of the cost and numerical checks of the value-function
// identities: branching property, Dynkin residual, dynamic programming
// inequalities, moment bound and coupling success.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bdc/hjb.hpp"
#include "bdc/labels.hpp"
#include "bdc/model.hpp"
#include "bdc/policy.hpp"
#include "bdc/simulator.hpp"

namespace bdc {

struct Estimate {
    double mean = 0.0;
    double stderr_ = 0.0;  // sample standard deviation / sqrt(n)
    std::size_t n = 0;
    std::uint64_t seed_base = 0;
};

/// Pairwise (cascade) summation; the result does not depend on how the
/// values were produced, only on their order.
double pairwise_sum(std::span<const double> values);

/// Mean and standard error (n - 1 denominator). Requires n >= 2.
Estimate make_estimate(std::span<const double> values, std::uint64_t seed_base);

struct McConfig {
    std::size_t n_reps = 1000;
    double h = 0.01;
    double horizon = 1.0;
    std::uint64_t seed_base = 0;
    std::size_t threads = 0;  // 0 = hardware concurrency
    std::size_t max_population = 1'000'000;

    SimOptions sim_options(std::uint64_t seed) const;
};

/// Runs body(i) for i in [0, n) on up to `threads` workers. If replications
/// throw, the exception of the lowest index is rethrown; an ExplosionError is
/// rethrown with the count of completed replications.
void run_replications(std::size_t n, std::size_t threads,
                      const std::function<void(std::size_t)>& body);

/// Replication i uses seed seed_base + i.
std::vector<ReplicationSummary> run_summaries(double t, const Population& mu,
                                              const Policy& policy, const ModelParams& params,
                                              const McConfig& cfg);

Estimate estimate_value(double t, const Population& mu, const Policy& policy,
                        const ModelParams& params, const McConfig& cfg);

struct BranchingReport {
    Estimate multi;
    std::vector<Estimate> singles;
    double product = 0.0;
    double difference = 0.0;       // |multi - product|
    double combined_stderr = 0.0;  // delta method
    double band = 0.0;             // 3 * combined_stderr
    bool pass = false;
};

/// Multi-particle start labelled 0..n-1 against single starts at the root.
/// The single run k uses seeds seed_base + (k + 1) n_reps + i; with one
/// position the multi run doubles as the single run.
BranchingReport check_branching(double t, std::span<const Point> positions, const Policy& policy,
                                const ModelParams& params, const McConfig& cfg);

enum class TestFamily { gaussian_bump, polynomial_bump, constant };

std::string to_string(TestFamily f);
TestFamily test_family_from_string(const std::string& name);

struct TestDerivatives {
    double u;
    double u_t;
    std::vector<double> grad;
    std::vector<double> hess;  // row-major d x d
};

/// Smooth bounded test function with values in [0, 1]:
///   gaussian_bump    offset + height e^{-decay t} e^{-q}
///   polynomial_bump  offset + height e^{-decay t} e q e^{-q}
///   constant         offset
/// with q = |x - center|^2 / (2 width^2).
struct TestFunction {
    TestFamily family = TestFamily::gaussian_bump;
    double offset = 0.0;
    double height = 1.0;
    std::vector<double> center{0.0};
    double width = 1.0;
    double decay = 0.0;

    /// Throws ConfigError unless the values stay in [0, 1] for dimension `dim`.
    void check(std::size_t dim) const;
    double value(double t, std::span<const double> x) const;
    TestDerivatives derivatives(double t, std::span<const double> x) const;
};

/// Integrand of the Dynkin identity for one particle at (t, x) under control a:
/// d_t u + b.grad u + 1/2 tr(sigma sigma^T hess u) + G^a(x, u) - c u.
double dynkin_generator(const TestFunction& u, double t, std::span<const double> x,
                        std::size_t a, const ModelParams& params);

struct DynkinReport {
    Estimate residual;
    double allowance = 0.0;  // C h
    double band = 0.0;       // 3 stderr + allowance
    bool pass = false;
};

/// Mean of Gamma_s prod u(s, X_s) - prod u(t, x) - int Gamma sum_i (...) prod_{j != i} u.
DynkinReport dynkin_residual(const TestFunction& u, double t, const Population& mu,
                             const Policy& policy, const ModelParams& params, double s,
                             const McConfig& cfg, double bias_constant);

/// Single-path residual (exposed for pathwise checks).
double dynkin_residual_path(const TestFunction& u, double t, const Population& mu,
                            const Policy& policy, const ModelParams& params, double s,
                            const SimOptions& options);

enum class TauRule { fixed, first_event };

std::string to_string(TauRule r);
TauRule tau_rule_from_string(const std::string& name);

struct DppReport {
    Estimate estimate;  // E[Gamma_tau prod v(tau, X_tau)]
    double initial = 0.0;  // prod v(t, x^i)
    double slack = 0.0;    // estimate - initial
    double allowance = 0.0;
    double band = 0.0;     // 3 stderr + allowance
    bool lower_ok = false;      // slack >= -band
    bool two_sided_ok = false;  // |slack| <= band
};

/// tau = s (fixed) or the first non-phantom event time capped at s.
DppReport dpp_check(double t, const Population& mu, const Policy& policy,
                    const ModelParams& params, TauRule rule, double s, const ValueGrid& grid,
                    const McConfig& cfg, double allowance);

struct MomentReport {
    Estimate sup_n;
    double bound = 0.0;  // |V| e^{gamma_bar M (T - t)}
    bool pass = false;
};

/// Requires at least 100 summaries.
MomentReport moment_check(std::span<const ReplicationSummary> summaries, const ModelParams& params,
                          std::size_t initial_size, double elapsed);

struct CouplingReport {
    Estimate success;  // fraction of successful coupled pairs
    double mean_sup_distance = 0.0;
};

CouplingReport coupling_success(double t, const Population& mu, const Policy& policy,
                                const ModelParams& params, const ModelParams& params_tilde,
                                double delta, const McConfig& cfg);

}  // namespace bdc
