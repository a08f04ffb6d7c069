#include "isokura/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace isokura {

namespace {

double inf_norm(const Vec3& v) {
    return std::max({std::fabs(v[0]), std::fabs(v[1]), std::fabs(v[2])});
}

Vec3 axpy(const Vec3& y, double a, const Vec3& x) {
    return {y[0] + a * x[0], y[1] + a * x[1], y[2] + a * x[2]};
}

Vec3 rk4_step(const Vec3& y, double h, const Coupling& k, const Vec3& k1) {
    const Vec3 k2 = rhs(axpy(y, 0.5 * h, k1), k);
    const Vec3 k3 = rhs(axpy(y, 0.5 * h, k2), k);
    const Vec3 k4 = rhs(axpy(y, h, k3), k);
    Vec3 out;
    for (int i = 0; i < 3; ++i)
        out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

// Dormand-Prince 5(4) tableau
constexpr double A21 = 1.0 / 5.0;
constexpr double A31 = 3.0 / 40.0, A32 = 9.0 / 40.0;
constexpr double A41 = 44.0 / 45.0, A42 = -56.0 / 15.0, A43 = 32.0 / 9.0;
constexpr double A51 = 19372.0 / 6561.0, A52 = -25360.0 / 2187.0,
                 A53 = 64448.0 / 6561.0, A54 = -212.0 / 729.0;
constexpr double A61 = 9017.0 / 3168.0, A62 = -355.0 / 33.0, A63 = 46732.0 / 5247.0,
                 A64 = 49.0 / 176.0, A65 = -5103.0 / 18656.0;
constexpr double B1 = 35.0 / 384.0, B3 = 500.0 / 1113.0, B4 = 125.0 / 192.0,
                 B5 = -2187.0 / 6784.0, B6 = 11.0 / 84.0;
constexpr double E1 = 71.0 / 57600.0, E3 = -71.0 / 16695.0, E4 = 71.0 / 1920.0,
                 E5 = -17253.0 / 339200.0, E6 = 22.0 / 525.0, E7 = -1.0 / 40.0;

// One attempted Dormand-Prince step; fills y_new and the scaled error norm.
void dp_step(const Vec3& y, double h, const Coupling& k, const Vec3& k1,
             double rtol, double atol, Vec3& y_new, double& err) {
    const Vec3 k2 = rhs(axpy(y, h * A21, k1), k);
    Vec3 t = y;
    for (int i = 0; i < 3; ++i) t[i] = y[i] + h * (A31 * k1[i] + A32 * k2[i]);
    const Vec3 k3 = rhs(t, k);
    for (int i = 0; i < 3; ++i) t[i] = y[i] + h * (A41 * k1[i] + A42 * k2[i] + A43 * k3[i]);
    const Vec3 k4 = rhs(t, k);
    for (int i = 0; i < 3; ++i)
        t[i] = y[i] + h * (A51 * k1[i] + A52 * k2[i] + A53 * k3[i] + A54 * k4[i]);
    const Vec3 k5 = rhs(t, k);
    for (int i = 0; i < 3; ++i)
        t[i] = y[i] + h * (A61 * k1[i] + A62 * k2[i] + A63 * k3[i] + A64 * k4[i] + A65 * k5[i]);
    const Vec3 k6 = rhs(t, k);
    for (int i = 0; i < 3; ++i)
        y_new[i] = y[i] + h * (B1 * k1[i] + B3 * k3[i] + B4 * k4[i] + B5 * k5[i] + B6 * k6[i]);
    const Vec3 k7 = rhs(y_new, k);

    err = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double e = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] +
                              E6 * k6[i] + E7 * k7[i]);
        const double sc = atol + rtol * std::max(std::fabs(y[i]), std::fabs(y_new[i]));
        err += (e / sc) * (e / sc);
    }
    err = std::sqrt(err / 3.0);
}

// Core loop; calls on_sample(t, state) for every accepted step (and t = 0).
template <class Callback>
StopReason run_flow(const Vec3& initial, const Coupling& k, const IntegratorConfig& cfg,
                    Callback&& on_sample, Vec3& final_state) {
    Vec3 y = initial;
    double t = 0.0;
    int quiet = 0;
    on_sample(t, y);

    if (cfg.method == Method::RK4Fixed) {
        Vec3 k1 = rhs(y, k); // also the first stage of the next step
        while (t < cfg.t_max) {
            const double h = std::min(cfg.dt, cfg.t_max - t);
            y = rk4_step(y, h, k, k1);
            t += h;
            on_sample(t, y);
            k1 = rhs(y, k);
            quiet = inf_norm(k1) < cfg.convergence_eps ? quiet + 1 : 0;
            if (quiet >= cfg.convergence_window) {
                final_state = y;
                return StopReason::Converged;
            }
        }
    } else {
        double h = cfg.dt;
        while (t < cfg.t_max) {
            h = std::min(h, cfg.t_max - t);
            if (h < 1e-12)
                throw StepUnderflowError("integrate: adaptive step below 1e-12");
            const Vec3 k1 = rhs(y, k);
            Vec3 y_new;
            double err;
            dp_step(y, h, k, k1, cfg.rtol, cfg.atol, y_new, err);
            if (err <= 1.0) {
                y = y_new;
                t += h;
                on_sample(t, y);
                quiet = inf_norm(rhs(y, k)) < cfg.convergence_eps ? quiet + 1 : 0;
                if (quiet >= cfg.convergence_window) {
                    final_state = y;
                    return StopReason::Converged;
                }
            }
            const double fac = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
            h *= std::clamp(fac, 0.2, 5.0);
        }
    }
    final_state = y;
    return StopReason::TimeLimit;
}

} // namespace

Trajectory integrate(const Vec3& initial, const Coupling& k, const IntegratorConfig& cfg) {
    Trajectory traj;
    std::size_t stride = 1;
    if (cfg.t_max > 100.0) {
        const double steps = cfg.t_max / cfg.dt;
        stride = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(steps / 1e5)));
    }

    std::size_t count = 0;
    double last_t = 0.0;
    Vec3 last_y{};
    auto record = [&](double t, const Vec3& y) {
        traj.times.push_back(t);
        traj.states.push_back(y);
        traj.energies.push_back(energy(y, k));
    };
    Vec3 final_state;
    traj.stop = run_flow(initial, k, cfg, [&](double t, const Vec3& y) {
        if (count++ % stride == 0)
            record(t, y);
        last_t = t;
        last_y = y;
    }, final_state);

    // keep the endpoint even when decimating
    if (traj.times.empty() || traj.times.back() != last_t)
        record(last_t, last_y);
    return traj;
}

LimitResult limit_point(const Vec3& initial, const Coupling& k, const IntegratorConfig& cfg) {
    Vec3 final_state;
    run_flow(initial, k, cfg, [](double, const Vec3&) {}, final_state);

    const DiffCoords dc = diff_coords(final_state);
    LimitResult out{std::nullopt, dc, std::numeric_limits<double>::infinity()};
    for (const CriticalPoint& p : enumerate_critical_points(k)) {
        const double d = torus_distance(dc, diff_coords(p.phases));
        if (d < out.wrapped_distance) {
            out.wrapped_distance = d;
            out.target = d < 1e-3 ? std::optional<PointId>(p.id) : std::nullopt;
        }
    }
    return out;
}

double energy_monotonicity_check(const Trajectory& traj) {
    double worst = 0.0;
    for (std::size_t i = 1; i < traj.energies.size(); ++i)
        worst = std::max(worst, traj.energies[i] - traj.energies[i - 1]);
    return worst;
}

} // namespace isokura
