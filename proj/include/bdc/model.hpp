#pragma once

// Model coefficients of a controlled branching diffusion, their validity
// checks, and the offspring-interval geometry shared by simulator and solver.

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bdc {

using Point = std::vector<double>;

enum class Family { constant, affine, gaussian_bump, logistic, remainder };

std::string to_string(Family f);
Family family_from_string(const std::string& name);

/// Declarative scalar coefficient x -> f(x) on R^d.
///
///   constant       f = offset
///   affine         f = clamp(offset + slope.x, lo, hi)
///   gaussian_bump  f = offset + scale * exp(-|x - center|^2 / (2 width^2))
///   logistic       f = offset + scale / (1 + exp(-slope.(x - center)))
///   remainder      only inside an offspring list: 1 - sum of the other p_k
struct CoefficientSpec {
    Family family = Family::constant;
    double offset = 0.0;
    double scale = 0.0;
    double width = 1.0;
    std::vector<double> center;
    std::vector<double> slope;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    static CoefficientSpec constant(double value);
    static CoefficientSpec affine(double offset, std::vector<double> slope,
                                  double lo = -std::numeric_limits<double>::infinity(),
                                  double hi = std::numeric_limits<double>::infinity());
    static CoefficientSpec gaussian_bump(double offset, double height, std::vector<double> center,
                                         double width);
    static CoefficientSpec logistic(double offset, double amplitude, std::vector<double> center,
                                    std::vector<double> slope);
    static CoefficientSpec remainder();

    /// Throws ConfigError if the spec is malformed for dimension `dim`.
    void check(std::size_t dim) const;

    double evaluate(std::span<const double> x) const;

    /// Closed-form infimum/supremum over R^d. Used for CFL bounds and sup-norm distances.
    double infimum() const;
    double supremum() const;

    bool operator==(const CoefficientSpec&) const = default;
};

/// sup_x |f(x) - f~(x)| when a closed form is known for the pair (same family and
/// identical shape parameters); nullopt otherwise.
std::optional<double> sup_distance(const CoefficientSpec& f, const CoefficientSpec& g);

struct ControlPoint {
    std::size_t index = 0;
    std::string name;
    std::vector<double> payload;
};

class ControlSet {
public:
    ControlSet() = default;
    explicit ControlSet(std::vector<ControlPoint> elements);

    /// Control set {0, ..., n-1} with generated names.
    static ControlSet indexed(std::size_t n);

    std::size_t size() const noexcept { return elements_.size(); }
    const ControlPoint& operator[](std::size_t a) const { return elements_.at(a); }
    const std::vector<ControlPoint>& elements() const noexcept { return elements_; }

private:
    std::vector<ControlPoint> elements_;
};

/// Coefficients attached to a single control value.
struct ControlCoefficients {
    std::vector<CoefficientSpec> drift;      // dim entries
    std::vector<CoefficientSpec> diffusion;  // dim * noise_dim entries, row-major
    CoefficientSpec death_rate;
    std::vector<CoefficientSpec> offspring;  // max_offspring + 1 entries, p_0 .. p_K
    CoefficientSpec running_cost;
};

struct ModelParams {
    std::size_t dim = 1;
    std::size_t noise_dim = 1;
    double gamma_bar = 1.0;
    double mean_offspring_bound = 1.0;
    double lipschitz = 0.0;
    std::size_t max_offspring = 2;
    ControlSet controls;
    std::vector<ControlCoefficients> coefficients;  // one per control
    CoefficientSpec terminal;  // g

    /// Throws ConfigError on shape mismatches (wrong vector lengths, several
    /// remainder entries, non-positive gamma_bar...).
    void check_structure() const;

    std::size_t num_controls() const noexcept { return coefficients.size(); }

    void drift(std::span<const double> x, std::size_t a, std::span<double> out) const;
    void diffusion(std::span<const double> x, std::size_t a, std::span<double> out) const;
    double death_rate(std::span<const double> x, std::size_t a) const;
    void offspring(std::span<const double> x, std::size_t a, std::span<double> out) const;
    double running_cost(std::span<const double> x, std::size_t a) const;
    double terminal_cost(std::span<const double> x) const;

    /// Convenience allocation-returning forms.
    std::vector<double> drift(std::span<const double> x, std::size_t a) const;
    std::vector<double> offspring(std::span<const double> x, std::size_t a) const;

    /// (sigma sigma^T)_{00} for d = 1, i.e. sum_j sigma_{0j}^2.
    double diffusion_variance_1d(double x, std::size_t a) const;
};

// -- validation --------------------------------------------------------------

enum class Violation {
    probability_sum,
    probability_range,
    rate_bound,
    mean_offspring,
    terminal_range,
    negative_running_cost,
    non_finite,
};

std::string to_string(Violation v);

struct ValidationIssue {
    Violation kind;
    Point x;
    std::optional<std::size_t> control;
    double value;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const noexcept { return issues.empty(); }
    bool has(Violation v) const;
};

struct ProbePoint {
    Point x;
    std::size_t control;
};

inline constexpr double kProbabilityTolerance = 1e-12;

ValidationReport validate_params(const ModelParams& params, std::span<const ProbePoint> probes);

/// Regular lattice on [lo, hi]^d with `per_axis` points per axis, crossed with every control.
std::vector<ProbePoint> probe_lattice(const ModelParams& params, double lo, double hi,
                                      std::size_t per_axis);

// -- offspring intervals -----------------------------------------------------

/// Half-open interval [lo, hi).
struct Interval {
    double lo;
    double hi;
    double length() const noexcept { return hi > lo ? hi - lo : 0.0; }
    bool empty() const noexcept { return !(hi > lo); }
};

/// I_k(x,a) = [gamma * sum_{l<k} p_l, gamma * sum_{l<=k} p_l), k = 0..K. The last
/// right endpoint is gamma exactly.
std::vector<Interval> offspring_intervals(std::span<const double> x, std::size_t a,
                                          const ModelParams& params);
std::vector<Interval> offspring_intervals(double gamma, std::span<const double> probabilities);

/// Offspring count l such that mark in I_l, or nullopt when mark >= gamma (phantom).
std::optional<std::size_t> classify_mark(double mark, double gamma,
                                         std::span<const double> probabilities);

/// Lebesgue measure of  U_k (I_k(x,a) n I~_k(y,a))  u  ([gamma(x,a), gbar] n [gamma~(y,a), gbar]).
double interval_overlap(std::span<const double> x, std::span<const double> y, std::size_t a,
                        const ModelParams& params, const ModelParams& params_tilde);

// -- perturbations -----------------------------------------------------------

/// Sup-norm distances between two models with identical structure, where closed forms exist.
struct ParameterDistance {
    std::optional<double> drift;
    std::optional<double> diffusion;
    std::optional<double> death_rate;
    std::optional<double> offspring_weighted;  // sum_k 2^-k ||p_k - p~_k||
    std::optional<double> running_cost;
    std::optional<double> terminal_cost;

    /// ||b - b~|| + ||sigma - sigma~|| + ||gamma - gamma~|| + sum_k 2^-k ||p_k - p~_k||
    std::optional<double> coupling_total() const;
};

ParameterDistance parameter_distance(const ModelParams& params, const ModelParams& params_tilde);

/// Shifts drift offsets up by eps/3, death-rate offsets down by eps/3 (keeping
/// them in [0, gamma_bar]) and moves offspring mass from the largest to the
/// smallest family so the weighted offspring distance is eps/3.
ModelParams perturb_drift_rate_offspring(const ModelParams& params, double eps);

}  // namespace bdc
