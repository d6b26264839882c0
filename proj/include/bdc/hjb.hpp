#pragma once

// Explicit monotone finite-difference solver for the one-dimensional HJB equation
//
//   d_t u + min_a { b u_x + 1/2 sigma^2 u_xx + G^a(x, u) - c^a u } = 0,  u(T, .) = g,
//
// with G^a(x, r) = gamma(x,a) (sum_k p_k(x,a) r^k - r), r clamped to [-1, 1].

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "bdc/model.hpp"

namespace bdc {

enum class BoundaryRule {
    neumann,  // zero-gradient ghost nodes: one-sided differences at the edges
    frozen,   // edge nodes keep their terminal value
};

std::string to_string(BoundaryRule b);
BoundaryRule boundary_from_string(const std::string& name);

struct GridConfig {
    double x_lo = -1.0;
    double x_hi = 1.0;
    std::size_t n_x = 101;
    std::size_t n_t = 100;
    double t0 = 0.0;
    double horizon = 1.0;
    BoundaryRule boundary = BoundaryRule::neumann;

    double dx() const noexcept { return (x_hi - x_lo) / static_cast<double>(n_x - 1); }
    double dt() const noexcept { return (horizon - t0) / static_cast<double>(n_t); }
    double node(std::size_t j) const noexcept { return x_lo + dx() * static_cast<double>(j); }
    double time(std::size_t n) const noexcept { return t0 + dt() * static_cast<double>(n); }

    /// Throws ConfigError on degenerate sizes or bounds.
    void check() const;
};

/// dt * (max_a sigma^2/dx^2 + max_a |b|/dx + gamma_bar (M + 1) + max_a c) <= 1 at every node.
struct CflReport {
    bool ok = true;
    double worst = 0.0;  // largest left-hand side over the nodes
    double worst_x = 0.0;
    std::string message;
};

CflReport check_cfl(const ModelParams& params, const GridConfig& grid);

/// Smallest n_t for which `grid` (with its n_t replaced) satisfies the CFL bound.
std::size_t min_time_steps(const ModelParams& params, GridConfig grid);

class ValueGrid {
public:
    ValueGrid(ModelParams params, GridConfig grid);

    const ModelParams& params() const noexcept { return params_; }
    const GridConfig& grid() const noexcept { return grid_; }
    std::size_t n_layers() const noexcept { return grid_.n_t + 1; }

    double u(std::size_t n, std::size_t j) const { return u_[n * grid_.n_x + j]; }
    std::span<const double> layer(std::size_t n) const {
        return {u_.data() + n * grid_.n_x, grid_.n_x};
    }
    /// Hamiltonian argmin at node j evaluated on layer n.
    std::size_t argmin(std::size_t n, std::size_t j) const { return argmin_[n * grid_.n_x + j]; }

    std::vector<double> times() const;
    std::vector<double> nodes() const;

    /// Nodes that left [0, 1] before the per-layer clamp.
    std::size_t clamp_count() const noexcept { return clamp_count_; }

private:
    friend ValueGrid solve_impl(const ModelParams&, const GridConfig&, std::ptrdiff_t);
    ModelParams params_;
    GridConfig grid_;
    std::vector<double> u_;
    std::vector<std::size_t> argmin_;
    std::size_t clamp_count_ = 0;
};

/// gamma (sum_k p_k clamp(r)^k - clamp(r)), evaluated as gamma sum_k p_k (r^k - r)
/// so that r = 1 returns exactly 0.
double generator_zero_order(double gamma, std::span<const double> probabilities, double r);
double generator_zero_order(std::span<const double> x, std::size_t a, double r,
                            const ModelParams& params);

struct HamiltonianValue {
    double value;
    std::size_t argmin;  // lowest index among ties
};

/// min_a { b.p + 1/2 tr(sigma sigma^T M2) + G^a(x, r) - c r }, M2 row-major d x d.
HamiltonianValue hamiltonian(std::span<const double> x, double r, std::span<const double> p,
                             std::span<const double> M2, const ModelParams& params);
HamiltonianValue hamiltonian(double x, double r, double p, double M2, const ModelParams& params);

/// One-dimensional form with the drift term upwinded per control:
/// max(b,0) p_fwd + min(b,0) p_bwd.
HamiltonianValue hamiltonian_upwind(double x, double r, double p_fwd, double p_bwd, double M2,
                                    const ModelParams& params);

/// Backward explicit time stepping of the HJB equation. Requires d = 1 and the CFL bound.
ValueGrid solve(const ModelParams& params, const GridConfig& grid);

/// Same stencil with the minimum replaced by the fixed control `control`: the
/// semilinear equation of the uncontrolled process.
ValueGrid solve_semilinear(const ModelParams& params, const GridConfig& grid,
                           std::size_t control);

/// Bilinear interpolation; x is clamped to the grid, the result to [0, 1].
double evaluate(const ValueGrid& grid, double t, double x);

/// Largest |u - u_wide| at the probes, where u_wide solves on a domain twice as
/// wide with the same dx and dt.
double boundary_sensitivity(const ModelParams& params, const GridConfig& grid,
                            std::span<const double> probes);

/// CSV with header t,x,u,argmin.
void export_csv(const ValueGrid& grid, std::ostream& os, std::size_t layer_stride = 1);

/// Markov feedback (t, x) -> argmin control read from a solved grid: nearest
/// time layer, linearly interpolated value and one-sided/second differences.
class FeedbackGrid {
public:
    explicit FeedbackGrid(std::shared_ptr<const ValueGrid> grid);
    std::size_t control(double t, double x) const;
    const ValueGrid& grid() const noexcept { return *grid_; }

private:
    std::shared_ptr<const ValueGrid> grid_;
};

FeedbackGrid extract_feedback(std::shared_ptr<const ValueGrid> grid);

}  // namespace bdc
