// End-to-end acceptance checks for the isosceles Kuramoto library.
// Prints one pass/fail line per criterion and exits nonzero on any failure.

#include "helpers.hpp"
#include "isokura/basin.hpp"
#include "isokura/diameter.hpp"
#include "isokura/equilibria.hpp"
#include "isokura/integrate.hpp"
#include "isokura/model.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace isokura;
using namespace isokura::testing;

namespace {

int g_failures = 0;

void report(int n, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %-28s %s\n", pass ? "PASS" : "FAIL", n,
                name.c_str(), detail.c_str());
    if (!pass)
        ++g_failures;
}

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

double eigenpair_residual(const Mat3& j, double lambda, const Vec3& v) {
    const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    double worst = 0.0;
    for (int r = 0; r < 3; ++r) {
        const double jv = j[r][0] * v[0] + j[r][1] * v[1] + j[r][2] * v[2];
        worst = std::max(worst, std::fabs(jv - lambda * v[r]) / norm);
    }
    return worst;
}

bool unique_extrema(const Vec3& t, double gap) {
    std::array<double, 3> s{t[0], t[1], t[2]};
    std::sort(s.begin(), s.end());
    return s[1] - s[0] > gap && s[2] - s[1] > gap;
}

// single RK4 step of the original flow, returned in translated coordinates
TranslatedState flow_step(const TranslatedState& ts, double k2, double h) {
    const Vec3& p = ts.target == PointId::Star5 ? kStar5Phases : kStar6Phases;
    Vec3 y{ts.theta_tilde[0] + p[0], ts.theta_tilde[1] + p[1],
           ts.theta_tilde[2] + p[2]};
    const Coupling k(-k2, k2);
    const Vec3 s1 = rhs(y, k);
    const Vec3 s2 = rhs({y[0] + 0.5 * h * s1[0], y[1] + 0.5 * h * s1[1],
                         y[2] + 0.5 * h * s1[2]}, k);
    const Vec3 s3 = rhs({y[0] + 0.5 * h * s2[0], y[1] + 0.5 * h * s2[1],
                         y[2] + 0.5 * h * s2[2]}, k);
    const Vec3 s4 = rhs({y[0] + h * s3[0], y[1] + h * s3[1], y[2] + h * s3[2]}, k);
    for (int i = 0; i < 3; ++i)
        y[i] += h / 6.0 * (s1[i] + 2.0 * s2[i] + 2.0 * s3[i] + s4[i]);
    return translate(y, ts.target);
}

std::vector<Coupling> sample_couplings(std::mt19937_64& rng, int count) {
    std::vector<Coupling> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i)
        out.push_back(random_interior_coupling(rng, 1e-6));
    return out;
}

void criterion_1_equilibrium_exactness(const std::vector<Coupling>& ks) {
    double worst = 0.0;
    for (const Coupling& k : ks)
        for (const CriticalPoint& p : enumerate_critical_points(k))
            worst = std::max(worst, inf_norm3(rhs(p.phases, k)));
    report(1, "equilibrium exactness", worst < 1e-12,
           fmt("max ||rhs||_inf = %.3e (tol 1e-12)", worst));
}

void criterion_2_spectrum_agreement(const std::vector<Coupling>& ks) {
    double worst = 0.0;
    int class_errors = 0;
    for (const Coupling& k : ks) {
        const ParamRegion region = classify_region(k);
        for (const CriticalPoint& p : enumerate_critical_points(k)) {
            std::array<double, 3> closed = p.spectrum.eigenvalues;
            std::sort(closed.begin(), closed.end());
            const EigenDecomposition num = numeric_spectrum(jacobian(p.phases, k));
            for (int i = 0; i < 3; ++i)
                worst = std::max(worst, std::fabs(closed[i] - num.values[i]));

            Stability expect = Stability::Unstable;
            if ((p.id == PointId::Star3 && region == ParamRegion::Case2_Star3Stable) ||
                (p.id == PointId::Star4 && region == ParamRegion::Case3_Star4Stable) ||
                ((p.id == PointId::Star5 || p.id == PointId::Star6) &&
                 region == ParamRegion::Case4_Star56Stable))
                expect = Stability::Stable;
            if (p.stability != expect)
                ++class_errors;
        }
    }
    report(2, "spectrum agreement", worst < 1e-9 && class_errors == 0,
           fmt("max eigenvalue gap = %.3e (tol 1e-9), class errors = %.0f", worst,
               static_cast<double>(class_errors)));
}

void criterion_3_gradient_identity(std::mt19937_64& rng) {
    double worst_id = 0.0, worst_fd = 0.0;
    for (int n = 0; n < 10000; ++n) {
        const Coupling k = random_interior_coupling(rng);
        const Vec3 t = random_state(rng);
        const Vec3 g = gradient(t, k), f = rhs(t, k);
        for (int i = 0; i < 3; ++i) {
            worst_id = std::max(worst_id, std::fabs(g[i] + f[i]));
            worst_fd = std::max(worst_fd, std::fabs(g[i] - fd_energy(t, k, i)));
        }
    }
    report(3, "gradient-system identity", worst_id < 1e-14 && worst_fd < 1e-8,
           fmt("|grad + rhs| = %.3e (tol 1e-14), |grad - fd| = %.3e (tol 1e-8)",
               worst_id, worst_fd));
}

void criterion_4_dissipation(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> phase(-kPi, kPi);
    IntegratorConfig cfg{};
    cfg.t_max = 200.0;
    std::array<int, 3> done{};
    double worst_uphill = 0.0, worst_drift = 0.0;
    while (done[0] < 100 || done[1] < 100 || done[2] < 100) {
        const Coupling k = random_interior_coupling(rng);
        int slot;
        switch (classify_region(k)) {
        case ParamRegion::Case2_Star3Stable: slot = 0; break;
        case ParamRegion::Case3_Star4Stable: slot = 1; break;
        default: slot = 2; break;
        }
        if (done[slot] >= 100)
            continue;
        ++done[slot];
        const Vec3 t0{phase(rng), phase(rng), phase(rng)};
        const Trajectory traj = integrate(t0, k, cfg);
        worst_uphill = std::max(worst_uphill, energy_monotonicity_check(traj));
        const double sum0 = t0[0] + t0[1] + t0[2];
        for (std::size_t i = 0; i < traj.times.size(); ++i) {
            const Vec3& s = traj.states[i];
            const double drift = std::fabs(s[0] + s[1] + s[2] - sum0);
            worst_drift =
                std::max(worst_drift, drift / (1e-8 * (1.0 + traj.times[i])));
        }
    }
    report(4, "dissipation / conservation", worst_uphill < 1e-8 && worst_drift < 1.0,
           fmt("max uphill = %.3e (tol 1e-8), drift / bound = %.3e (tol 1)",
               worst_uphill, worst_drift));
}

void criterion_5_proof_inequalities() {
    const InequalityMargins m = check_proof_inequalities(1000000);
    // both inequalities are tight at x = 0; pi/6 is not representable, so the
    // evaluated margin there is zero up to one rounding of sin (about 1e-16)
    const double zero1 = 2.0 * std::sin(kPi / 6.0) - 1.0;
    const double zero2 = std::sin(-kPi / 3.0) + std::sin(kPi / 3.0);
    const bool pass = m.min_margin_1 >= -1e-12 && m.min_margin_2 >= -1e-12 &&
                      std::fabs(zero1) <= 4e-16 && std::fabs(zero2) <= 4e-16;
    report(5, "proof inequalities", pass,
           fmt("min margins = %.3e / %.3e (tol -1e-12), x=0 zero within rounding",
               m.min_margin_1, m.min_margin_2));
}

void criterion_6_dini_consistency(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-kPi / 2.0, kPi / 2.0);
    const double h = 1e-6;
    double worst = 0.0;
    int tested = 0;
    while (tested < 10000) {
        const TranslatedState ts{{dist(rng), dist(rng), dist(rng)}, PointId::Star5};
        if (!unique_extrema(ts.theta_tilde, 1e-4))
            continue;
        ++tested;
        const double fd = (diameter(flow_step(ts, 1.0, h)) - diameter(ts)) / h;
        worst = std::max(worst, std::fabs(dini_closed_form(ts, 1.0).value - fd));
    }
    report(6, "Dini derivative consistency", worst < 1e-4,
           fmt("max |closed - fd| = %.3e (tol 1e-4)", worst));
}

void criterion_7_decay_certificates(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-0.9 * kPi / 3.0, 0.9 * kPi / 3.0);
    IntegratorConfig cfg{};
    cfg.t_max = 500.0;
    int tested = 0, failures = 0;
    double worst_slack = 0.0;
    while (tested < 200) {
        const Vec3 tilde{dist(rng), dist(rng), dist(rng)};
        if (diameter({tilde, PointId::Star5}) > 0.9 * 2.0 * kPi / 3.0)
            continue;
        ++tested;
        const Vec3 theta{tilde[0] + kStar5Phases[0], tilde[1] + kStar5Phases[1],
                         tilde[2] + kStar5Phases[2]};
        const DecayCertificate c = certify_decay(theta, PointId::Star5, 1.0, cfg);
        worst_slack = std::max(worst_slack, c.max_slack);
        if (!c.verified || !(c.fitted_rate >= c.lambda))
            ++failures;
    }
    report(7, "decay certificates", failures == 0,
           fmt("failures = %.0f / 200, max envelope slack = %.3e (tol 1e-9)",
               static_cast<double>(failures), worst_slack));
}

void criterion_8_basin_containment() {
    SweepConfig cfg{.resolution = 256, .coupling = Coupling(-1.0, 1.0)};
    const BasinGrid grid = sweep(cfg);
    const std::size_t bad5 = verify_region_subset(grid, PointId::Star5).size();
    const std::size_t bad6 = verify_region_subset(grid, PointId::Star6).size();
    const BasinReport rep = basin_report(grid);
    const double f5 = rep.area_fraction[static_cast<int>(PointId::Star5)];
    const double f6 = rep.area_fraction[static_cast<int>(PointId::Star6)];
    const bool pass = bad5 == 0 && bad6 == 0 && rep.unclassified_fraction < 0.005 &&
                      std::fabs(f5 - 0.5) <= 0.02 && std::fabs(f6 - 0.5) <= 0.02;
    report(8, "basin containment (res 256)", pass,
           fmt("box violations = %.0f, fractions = %.4f", static_cast<double>(bad5 + bad6),
               f5) +
               fmt(" / %.4f, unclassified = %.4f", f6, rep.unclassified_fraction));
}

void criterion_9_figure1() {
    std::vector<double> ratios;
    for (int i = 0; i <= 120; ++i)
        ratios.push_back(-3.0 + 0.05 * i);
    const auto rows = figure1_data(-1, ratios);
    int class_errors = 0;
    double worst_v = 0.0;
    for (const Figure1Row& row : rows) {
        const double r = row.ratio;
        const double k1 = -1.0, k2 = r * k1;
        if (row.id == PointId::Star5 || row.id == PointId::Star6)
            worst_v = std::max(worst_v,
                               std::fabs(row.v - (k1 / 3.0 + k2 * k2 / (6.0 * k1))));
        if (std::fabs(std::fabs(r) - 2.0) < 1e-9 || std::fabs(r) < 1e-9)
            continue; // stability boundaries
        Stability expect = Stability::Unstable;
        if ((row.id == PointId::Star5 || row.id == PointId::Star6) && std::fabs(r) < 2.0)
            expect = Stability::Stable;
        if (row.id == PointId::Star3 && r < -2.0)
            expect = Stability::Stable;
        if (row.id == PointId::Star4 && r > 2.0)
            expect = Stability::Stable;
        if (row.stability != expect)
            ++class_errors;
    }
    report(9, "energy-vs-ratio table", class_errors == 0 && worst_v < 1e-12,
           fmt("class errors = %.0f, max |V - closed form| = %.3e (tol 1e-12)",
               static_cast<double>(class_errors), worst_v));
}

void criterion_10_eigenvector_typo(std::mt19937_64& rng) {
    double max_res_3 = 0.0, max_res_2 = 0.0;
    for (int n = 0; n < 100; ++n) {
        const Coupling k = random_interior_coupling(rng, 1e-3);
        for (PointId id : {PointId::Star1, PointId::Star2}) {
            const Mat3 j = jacobian(critical_phases(id, k), k);
            const Spectrum s = closed_form_spectrum(id, k);
            for (int i = 1; i < 3; ++i)
                max_res_3 = std::max(
                    max_res_3, eigenpair_residual(j, s.eigenvalues[i], s.eigenvectors[i]));
            const double bad = std::sqrt(k.k1 * k.k1 + 2.0 * k.k2 * k.k2);
            for (double sign : {1.0, -1.0}) {
                const double lambda =
                    (k.k1 + sign * std::sqrt(k.k1 * k.k1 + 3.0 * k.k2 * k.k2)) / 3.0;
                const double u = (k.k1 + sign * bad) / k.k2;
                Vec3 v{-u - 1.0, u - 1.0, 2.0};
                if (id == PointId::Star1)
                    std::swap(v[0], v[1]);
                max_res_2 = std::max(max_res_2, eigenpair_residual(j, lambda, v));
            }
        }
    }
    const bool pass = max_res_3 < 1e-9 && max_res_2 > 1e-9;
    report(10, "eigenvector radicand verdict", pass,
           fmt("residuals: radicand 3k2^2 = %.3e (tol 1e-9), radicand 2k2^2 = %.3e",
               max_res_3, max_res_2));
    if (pass)
        std::printf("       verdict: sqrt(k1^2+3k2^2) is correct; "
                    "sqrt(k1^2+2k2^2) fails the eigenpair residual test\n");
}

} // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240817);
    const std::vector<Coupling> ks = sample_couplings(rng, 1000);

    criterion_1_equilibrium_exactness(ks);
    criterion_2_spectrum_agreement(ks);
    criterion_3_gradient_identity(rng);
    criterion_4_dissipation(rng);
    criterion_5_proof_inequalities();
    criterion_6_dini_consistency(rng);
    criterion_7_decay_certificates(rng);
    criterion_8_basin_containment();
    criterion_9_figure1();
    criterion_10_eigenvector_typo(rng);

    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    std::printf("%d/10 criteria passed in %.1f s\n", 10 - g_failures, secs);
    return g_failures == 0 ? 0 : 1;
}
