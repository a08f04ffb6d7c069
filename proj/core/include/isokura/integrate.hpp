#pragma once

#include "isokura/equilibria.hpp"
#include "isokura/model.hpp"

#include <optional>
#include <vector>

namespace isokura {

enum class Method { RK4Fixed, RK45Adaptive };

struct IntegratorConfig {
    Method method = Method::RK4Fixed;
    double dt = 1e-2;    // fixed step (RK4) / initial step (RK45)
    double rtol = 1e-8;  // adaptive only
    double atol = 1e-10; // adaptive only
    double t_max = 1e4;
    double convergence_eps = 1e-10;
    int convergence_window = 10;
};

enum class StopReason { Converged, TimeLimit };

struct Trajectory {
    std::vector<double> times;
    std::vector<Vec3> states;
    std::vector<double> energies;
    StopReason stop = StopReason::TimeLimit;
};

struct StepUnderflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Integrate the flow from t = 0. Stops Converged once the rhs infinity norm
/// has stayed below convergence_eps for convergence_window consecutive
/// accepted steps, else TimeLimit at t_max. All accepted steps are stored
/// when t_max <= 100; longer runs are decimated to at most 1e5 samples.
Trajectory integrate(const Vec3& initial, const Coupling& k, const IntegratorConfig& cfg);

struct LimitResult {
    std::optional<PointId> target; // nullopt = unclassified
    DiffCoords final_diff_coords;
    double wrapped_distance;
};

/// Integrate without sample storage and match the final state against the
/// enumerated critical points on the 2-torus (tolerance 1e-3).
LimitResult limit_point(const Vec3& initial, const Coupling& k, const IntegratorConfig& cfg);

/// Largest uphill energy move between consecutive samples (>= 0).
double energy_monotonicity_check(const Trajectory& traj);

} // namespace isokura
