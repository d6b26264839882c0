#pragma once

// Jump-time construction of the controlled branching diffusion.
//
// Every living particle carries a rate-gamma_bar clock. The next potential
// event is the earliest ring; between events all particles take Euler-Maruyama
// steps of size <= h, the last one landing on the event time. The ringing
// particle draws a uniform mark on [0, gamma_bar): marks above gamma(x, a) are
// phantoms, otherwise the offspring interval containing the mark decides the
// number of children.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <map>
#include <vector>

#include "bdc/labels.hpp"
#include "bdc/model.hpp"
#include "bdc/policy.hpp"

namespace bdc {

enum class EventKind { phantom, death, branch };

std::string to_string(EventKind k);

struct Event {
    double time;
    Label label;
    double mark;
    EventKind kind;
    std::size_t offspring;  // 0 for death and phantom
    Point position;
    std::size_t population_after;

    /// Same time, label, classification and offspring count.
    bool same_outcome(const Event& other) const;
    bool operator==(const Event&) const = default;
};

struct Sample {
    double time;
    Point position;
    bool operator==(const Sample&) const = default;
};

/// Read-only view handed to a step observer before each Euler step.
struct StepView {
    double time;                              // left endpoint
    double dt;                                // step length
    double cost_integral;                     // running cost accumulated up to `time`
    const std::vector<Member>& members;       // sorted by label
    const std::vector<std::size_t>& controls;  // control of each member on this step
};

using StepObserver = std::function<void(const StepView&)>;

struct SimOptions {
    double h = 0.01;
    double horizon = 1.0;
    std::uint64_t seed = 0;
    std::size_t max_population = 1'000'000;
    bool record_trajectories = false;
    /// Stop at this time instead of the horizon (NaN = horizon).
    double stop_time = std::numeric_limits<double>::quiet_NaN();
    /// Also stop right after the first non-phantom event.
    bool stop_at_first_event = false;
    bool check_invariants = false;
    StepObserver observer;
};

struct PopulationPath {
    double start_time = 0.0;
    double horizon = 0.0;
    double stop_time = 0.0;  // time the run ended (the horizon unless a stop rule fired)
    std::vector<Event> events;
    /// Sampled per-particle paths (start of life, every step end); only when recorded.
    std::map<Label, std::vector<Sample>> trajectories;
    double running_cost_integral = 0.0;  // int sum_i c(X^i, a^i) d theta
    /// (time, N) at the start and after every non-phantom event.
    std::vector<std::pair<double, std::size_t>> population_size;
    std::size_t sup_population = 0;
    std::size_t n_real_events = 0;
    Population terminal;

    bool extinct() const noexcept { return terminal.empty(); }
    double discount() const;  // Gamma at stop_time
    bool operator==(const PopulationPath&) const = default;
};

PopulationPath simulate(double t, const Population& mu, const Policy& policy,
                        const ModelParams& params, const SimOptions& options);

struct CoupledResult {
    PopulationPath path;
    PopulationPath path_tilde;
    bool success = false;
    std::size_t first_divergence = 0;  // index of the first differing event (events.size() if none)
    double sup_distance = 0.0;         // over matched samples
};

/// Both systems run on the same seed, hence on identical per-label Gaussian
/// increments, clocks and marks.
CoupledResult simulate_coupled(double t, const Population& mu, const Policy& policy,
                               const ModelParams& params, const ModelParams& params_tilde,
                               double delta, SimOptions options);

/// Gamma_T * prod_{i in V_T} g(X^i_T); the empty product is one.
double pathwise_cost(const PopulationPath& path, const ModelParams& params);

/// exp(-int <Z, c> - <Z_T, -ln g>). Throws DomainError if g vanishes at a terminal position.
double pathwise_cost_log_form(const PopulationPath& path, const ModelParams& params);

struct ReplicationSummary {
    std::uint64_t seed = 0;
    double cost = 0.0;
    std::size_t sup_n = 0;
    std::size_t n_events = 0;
    bool extinct = false;
};

ReplicationSummary summarize(const PopulationPath& path, const ModelParams& params,
                             std::uint64_t seed);

/// CSV with columns time,label,event,x0..x{d-1},mark; terminal members follow as
/// rows with event "terminal".
void write_path_csv(const PopulationPath& path, std::size_t dim, std::ostream& os);

}  // namespace bdc
