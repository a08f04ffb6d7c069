#include "commands.hpp"

#include "io.hpp"
#include "svg.hpp"

#include "isokura/basin.hpp"
#include "isokura/diameter.hpp"
#include "isokura/equilibria.hpp"
#include "isokura/integrate.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace isokura::cli {

namespace {

using nlohmann::json;

Coupling make_coupling(const RunConfig& cfg) {
    return Coupling(cfg.k1, cfg.k2); // throws on zero strengths
}

IntegratorConfig integrator_for(const RunConfig& cfg, double default_tmax) {
    IntegratorConfig ic{};
    ic.dt = cfg.dt;
    ic.t_max = cfg.tmax > 0.0 ? cfg.tmax : default_tmax;
    return ic;
}

bool wants(const RunConfig& cfg, const char* f) { return cfg.formats.count(f) > 0; }

int write_or_io_error(const std::filesystem::path& p, const std::string& content) {
    if (!write_file_atomic(p, content)) {
        print_error("cannot write " + p.string());
        return kExitIo;
    }
    return kExitOk;
}

double inf_norm(const Vec3& v) {
    return std::max({std::fabs(v[0]), std::fabs(v[1]), std::fabs(v[2])});
}

Vec3 matvec(const Mat3& m, const Vec3& v) {
    return {m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2]};
}

double eigenpair_residual(const Mat3& j, double lambda, Vec3 v) {
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    for (auto& x : v)
        x /= n;
    const Vec3 jv = matvec(j, v);
    return std::max({std::fabs(jv[0] - lambda * v[0]), std::fabs(jv[1] - lambda * v[1]),
                     std::fabs(jv[2] - lambda * v[2])});
}

Coupling random_interior_coupling(std::mt19937_64& rng, double margin) {
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (;;) {
        const double k1 = dist(rng), k2 = dist(rng);
        if (std::fabs(k1) < margin || std::fabs(k2) < margin ||
            std::fabs(2.0 * k1 + k2) < margin || std::fabs(2.0 * k1 - k2) < margin)
            continue;
        return Coupling(k1, k2);
    }
}

} // namespace

int cmd_equilibria(const RunConfig& cfg) {
    std::vector<CriticalPoint> points;
    double k1 = cfg.k1, k2 = cfg.k2;
    try {
        points = enumerate_critical_points(make_coupling(cfg));
    } catch (const std::invalid_argument& e) {
        print_error(e.what());
        return kExitBadParams;
    }
    const Coupling k(k1, k2);

    if (wants(cfg, "csv")) {
        std::ostringstream csv;
        csv << "id,theta1,theta2,theta3,lambda1,lambda2,lambda3,stability,energy\n";
        for (const auto& p : points) {
            csv << to_string(p.id);
            for (double t : p.phases)
                csv << ',' << fmt(t);
            for (double l : p.spectrum.eigenvalues)
                csv << ',' << fmt(l);
            csv << ',' << to_string(p.stability) << ',' << fmt(energy(p.phases, k)) << '\n';
        }
        if (int rc = write_or_io_error(std::filesystem::path(cfg.out) / "equilibria.csv",
                                       csv.str()))
            return rc;
    }
    if (wants(cfg, "json")) {
        json j = json::array();
        for (const auto& p : points) {
            j.push_back({{"id", to_string(p.id)},
                         {"phases", p.phases},
                         {"eigenvalues", p.spectrum.eigenvalues},
                         {"stability", to_string(p.stability)},
                         {"energy", energy(p.phases, k)}});
        }
        if (int rc = write_or_io_error(std::filesystem::path(cfg.out) / "equilibria.json",
                                       j.dump(2) + "\n"))
            return rc;
    }
    return kExitOk;
}

int cmd_simulate(const RunConfig& cfg) {
    Vec3 theta0;
    try {
        theta0 = parse_theta0(cfg.theta0);
        make_coupling(cfg);
    } catch (const std::invalid_argument& e) {
        print_error(e.what());
        return kExitBadParams;
    }
    const Coupling k(cfg.k1, cfg.k2);
    const Trajectory traj = integrate(theta0, k, integrator_for(cfg, 1e4));

    std::ostringstream csv;
    csv << "t,theta1,theta2,theta3,energy,diameter\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const Vec3& s = traj.states[i];
        const double d = *std::max_element(s.begin(), s.end()) -
                         *std::min_element(s.begin(), s.end());
        csv << fmt(traj.times[i]) << ',' << fmt(s[0]) << ',' << fmt(s[1]) << ','
            << fmt(s[2]) << ',' << fmt(traj.energies[i]) << ',' << fmt(d) << '\n';
    }
    return write_or_io_error(std::filesystem::path(cfg.out) / "trajectory.csv", csv.str());
}

int cmd_basin(const RunConfig& cfg) {
    SweepConfig sc{.resolution = 0, .coupling = Coupling(1.0, 1.0)};
    try {
        sc.coupling = make_coupling(cfg);
        if (cfg.res < 2)
            throw std::invalid_argument("--res must be >= 2");
        if (cfg.check_theorem && !(cfg.k1 == -cfg.k2 && cfg.k1 < 0.0))
            throw std::invalid_argument("--check-theorem requires k1 = -k2 < 0");
    } catch (const std::invalid_argument& e) {
        print_error(e.what());
        return kExitBadParams;
    }
    sc.resolution = cfg.res;
    sc.integrator = integrator_for(cfg, 2000.0);

    const BasinGrid grid = sweep(sc);
    const BasinReport rep = basin_report(grid);

    if (wants(cfg, "csv")) {
        std::ostringstream csv;
        csv << "x,y,class\n";
        for (int a = 0; a < grid.resolution; ++a)
            for (int b = 0; b < grid.resolution; ++b) {
                const DiffCoords c = grid.cell_center(a, b);
                const auto& cls = grid.at(a, b);
                csv << fmt(c.x) << ',' << fmt(c.y) << ','
                    << (cls ? to_string(*cls) : "unclassified") << '\n';
            }
        if (int rc = write_or_io_error(std::filesystem::path(cfg.out) / "basin.csv",
                                       csv.str()))
            return rc;
    }
    if (wants(cfg, "svg")) {
        if (int rc = write_or_io_error(std::filesystem::path(cfg.out) / "basin.svg",
                                       render_basin_svg(grid, cfg.deterministic)))
            return rc;
    }

    std::vector<CellRef> violations;
    if (cfg.check_theorem) {
        for (PointId id : {PointId::Star5, PointId::Star6})
            for (const CellRef& c : verify_region_subset(grid, id))
                violations.push_back(c);
    }

    if (wants(cfg, "json")) {
        json j;
        j["resolution"] = grid.resolution;
        j["k1"] = grid.k1;
        j["k2"] = grid.k2;
        json fracs;
        for (int i = 0; i < 6; ++i)
            fracs[to_string(static_cast<PointId>(i))] = rep.area_fraction[i];
        j["area_fraction"] = fracs;
        j["unclassified_fraction"] = rep.unclassified_fraction;
        json viol = json::array();
        for (const CellRef& c : violations)
            viol.push_back({{"a", c.a}, {"b", c.b}});
        j["violations"] = viol;
        if (int rc = write_or_io_error(std::filesystem::path(cfg.out) / "basin_report.json",
                                       j.dump(2) + "\n"))
            return rc;
    }
    if (cfg.check_theorem && !violations.empty()) {
        print_error("theorem containment violated in " +
                    std::to_string(violations.size()) + " cells");
        return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_figure1(const RunConfig& cfg) {
    std::vector<double> ratios;
    try {
        ratios = parse_range(cfg.ratios);
    } catch (const std::invalid_argument& e) {
        print_error(e.what());
        return kExitBadParams;
    }
    const auto rows = figure1_data(cfg.k1_sign, ratios);

    if (wants(cfg, "csv")) {
        std::ostringstream csv;
        csv << "ratio,id,v,stability\n";
        for (const auto& r : rows)
            csv << fmt(r.ratio) << ',' << to_string(r.id) << ',' << fmt(r.v) << ','
                << to_string(r.stability) << '\n';
        if (int rc = write_or_io_error(std::filesystem::path(cfg.out) / "figure1.csv",
                                       csv.str()))
            return rc;
    }
    if (wants(cfg, "svg")) {
        if (int rc = write_or_io_error(std::filesystem::path(cfg.out) / "figure1.svg",
                                       render_figure1_svg(rows, cfg.deterministic)))
            return rc;
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    try {
        make_coupling(cfg);
    } catch (const std::invalid_argument& e) {
        print_error(e.what());
        return kExitBadParams;
    }
    std::mt19937_64 rng(cfg.seed);
    json report;
    bool all_pass = true;
    auto record = [&](const char* name, bool pass, json detail) {
        detail["pass"] = pass;
        report["checks"][name] = detail;
        all_pass = all_pass && pass;
    };

    // equilibrium residuals and spectrum agreement across random couplings
    {
        double max_residual = 0.0, max_eig_err = 0.0;
        bool pattern_ok = true;
        for (long n = 0; n < cfg.samples; ++n) {
            const Coupling k = random_interior_coupling(rng, 1e-6);
            const ParamRegion region = classify_region(k);
            for (const auto& p : enumerate_critical_points(k)) {
                max_residual = std::max(max_residual, inf_norm(rhs(p.phases, k)));
                auto closed = p.spectrum.eigenvalues;
                std::sort(closed.begin(), closed.end());
                const auto numeric = numeric_spectrum(jacobian(p.phases, k));
                for (int i = 0; i < 3; ++i)
                    max_eig_err =
                        std::max(max_eig_err, std::fabs(closed[i] - numeric.values[i]));
                if (region != ParamRegion::Boundary) {
                    const bool expect_stable =
                        (region == ParamRegion::Case2_Star3Stable &&
                         p.id == PointId::Star3) ||
                        (region == ParamRegion::Case3_Star4Stable &&
                         p.id == PointId::Star4) ||
                        (region == ParamRegion::Case4_Star56Stable &&
                         (p.id == PointId::Star5 || p.id == PointId::Star6));
                    if (p.stability !=
                        (expect_stable ? Stability::Stable : Stability::Unstable))
                        pattern_ok = false;
                }
            }
        }
        record("equilibrium_residual", max_residual < 1e-12,
               {{"max_rhs_inf_norm", max_residual}, {"tolerance", 1e-12}});
        record("spectrum_agreement", max_eig_err < 1e-9,
               {{"max_eigenvalue_error", max_eig_err}, {"tolerance", 1e-9}});
        record("stability_pattern", pattern_ok, json::object());
    }

    // gradient-system identity on random states
    {
        std::uniform_real_distribution<double> dist(-10.0, 10.0);
        double max_identity = 0.0, max_fd = 0.0;
        for (int n = 0; n < 10000; ++n) {
            const Coupling k = random_interior_coupling(rng, 1e-6);
            const Vec3 t{dist(rng), dist(rng), dist(rng)};
            const Vec3 g = gradient(t, k);
            const Vec3 f = rhs(t, k);
            for (int i = 0; i < 3; ++i) {
                max_identity = std::max(max_identity, std::fabs(g[i] + f[i]));
                Vec3 p = t, m = t;
                p[i] += 1e-6;
                m[i] -= 1e-6;
                max_fd = std::max(
                    max_fd, std::fabs(g[i] - (energy(p, k) - energy(m, k)) / 2e-6));
            }
        }
        record("gradient_identity", max_identity < 1e-14 && max_fd < 1e-8,
               {{"max_identity_error", max_identity}, {"max_fd_error", max_fd}});
    }

    // inequalities underpinning the certified decay rate
    {
        const InequalityMargins m = check_proof_inequalities(1000001);
        report["inequality1_min_margin"] = m.min_margin_1;
        report["inequality2_min_margin"] = m.min_margin_2;
        record("proof_inequalities", m.min_margin_1 >= -1e-12 && m.min_margin_2 >= -1e-12,
               {{"min_margin_1", m.min_margin_1}, {"min_margin_2", m.min_margin_2}});
    }

    // Dini closed form vs finite differences of the diameter
    {
        std::uniform_real_distribution<double> dist(-kPi / 2.0, kPi / 2.0);
        double max_err = 0.0;
        const Coupling k(-1.0, 1.0);
        int tested = 0;
        while (tested < 10000) {
            const Vec3 tilde{dist(rng), dist(rng), dist(rng)};
            const TranslatedState ts{tilde, PointId::Star5};
            if (diameter(ts) >= kPi)
                continue;
            // unique extrema only
            const auto [lo, hi] = std::minmax_element(tilde.begin(), tilde.end());
            bool unique = lo != hi;
            for (int i = 0; i < 3 && unique; ++i) {
                if (&tilde[i] != hi && tilde[i] == *hi) unique = false;
                if (&tilde[i] != lo && tilde[i] == *lo) unique = false;
            }
            if (!unique)
                continue;
            ++tested;
            const double h = 1e-6;
            Vec3 y{tilde[0] + kStar5Phases[0], tilde[1] + kStar5Phases[1],
                   tilde[2] + kStar5Phases[2]};
            // one RK4 micro-step as the flow oracle
            const Vec3 k1v = rhs(y, k);
            const Vec3 k2v = rhs({y[0] + 0.5 * h * k1v[0], y[1] + 0.5 * h * k1v[1],
                                  y[2] + 0.5 * h * k1v[2]}, k);
            const Vec3 k3v = rhs({y[0] + 0.5 * h * k2v[0], y[1] + 0.5 * h * k2v[1],
                                  y[2] + 0.5 * h * k2v[2]}, k);
            const Vec3 k4v = rhs({y[0] + h * k3v[0], y[1] + h * k3v[1],
                                  y[2] + h * k3v[2]}, k);
            for (int i = 0; i < 3; ++i)
                y[i] += h / 6.0 * (k1v[i] + 2.0 * k2v[i] + 2.0 * k3v[i] + k4v[i]);
            const double fd =
                (diameter(translate(y, PointId::Star5)) - diameter(ts)) / h;
            max_err = std::max(max_err, std::fabs(dini_closed_form(ts, 1.0).value - fd));
        }
        record("dini_consistency", max_err < 1e-4,
               {{"max_error", max_err}, {"tolerance", 1e-4}});
    }

    // decay certificates at k1 = -k2
    {
        const double k2 = (cfg.k1 == -cfg.k2 && cfg.k2 > 0.0) ? cfg.k2 : 1.0;
        std::uniform_real_distribution<double> dist(-0.9 * kPi / 3.0, 0.9 * kPi / 3.0);
        IntegratorConfig ic{};
        ic.t_max = 500.0;
        int failures = 0;
        const int n_certs = 50;
        for (int n = 0; n < n_certs; ++n) {
            Vec3 tilde{dist(rng), dist(rng), dist(rng)};
            if (diameter({tilde, PointId::Star5}) > 0.9 * 2.0 * kPi / 3.0)
                continue;
            const Vec3 theta{tilde[0] + kStar5Phases[0], tilde[1] + kStar5Phases[1],
                             tilde[2] + kStar5Phases[2]};
            if (!certify_decay(theta, PointId::Star5, k2, ic).verified)
                ++failures;
        }
        record("decay_certificates", failures == 0,
               {{"failures", failures}, {"count", n_certs}});
    }

    // eigenvector radicand: the printed anti-phase eigenvectors carry
    // sqrt(k1^2 + 2 k2^2) but only sqrt(k1^2 + 3 k2^2) passes J v = lambda v
    {
        double max_res_3 = 0.0, max_res_2 = 0.0;
        for (int n = 0; n < 50; ++n) {
            const Coupling k = random_interior_coupling(rng, 1e-3);
            for (PointId id : {PointId::Star1, PointId::Star2}) {
                const Mat3 j = jacobian(critical_phases(id, k), k);
                const Spectrum s = closed_form_spectrum(id, k);
                for (int i = 1; i < 3; ++i)
                    max_res_3 = std::max(
                        max_res_3,
                        eigenpair_residual(j, s.eigenvalues[i], s.eigenvectors[i]));
                // radicand-2 variant, as printed
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
        const double checked = cfg.inject_typo_eigvec ? max_res_2 : max_res_3;
        report["eigvec_radicand_3k2_max_residual"] = max_res_3;
        report["eigvec_radicand_2k2_max_residual"] = max_res_2;
        report["eigvec_radicand_verdict"] =
            max_res_3 < 1e-9 && max_res_2 > 1e-9
                ? "sqrt(k1^2+3k2^2) is correct; the printed sqrt(k1^2+2k2^2) is a typo"
                : "inconclusive";
        record("eigenvector_typo_resolution", checked < 1e-9,
               {{"max_residual", checked}, {"tolerance", 1e-9}});
    }

    report["all_pass"] = all_pass;
    report["seed"] = cfg.seed;
    report["samples"] = cfg.samples;

    if (int rc = write_or_io_error(std::filesystem::path(cfg.out) / "verify.json",
                                   report.dump(2) + "\n"))
        return rc;
    if (!all_pass) {
        print_error("one or more verification checks failed (see verify.json)");
        return kExitCheckFailed;
    }
    return kExitOk;
}

} // namespace isokura::cli
