#include "isokura/diameter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace isokura {

namespace {

const Vec3& target_phases(PointId target) {
    if (target == PointId::Star5)
        return kStar5Phases;
    if (target == PointId::Star6)
        return kStar6Phases;
    throw std::invalid_argument("target must be Star5 or Star6");
}

} // namespace

TranslatedState translate(const Vec3& theta, PointId target) {
    const Vec3& p = target_phases(target);
    return {{theta[0] - p[0], theta[1] - p[1], theta[2] - p[2]}, target};
}

double diameter(const TranslatedState& ts) {
    const auto [lo, hi] = std::minmax_element(ts.theta_tilde.begin(), ts.theta_tilde.end());
    return *hi - *lo;
}

DiniResult dini_closed_form(const TranslatedState& ts, double k2) {
    if (k2 <= 0.0)
        throw std::invalid_argument("dini_closed_form: k2 must be positive");
    const Vec3& t = ts.theta_tilde;
    // velocities of the translated flow equal those of the original flow
    const Coupling k(-k2, k2);
    const Vec3 v = rhs({t[0] + target_phases(ts.target)[0],
                        t[1] + target_phases(ts.target)[1],
                        t[2] + target_phases(ts.target)[2]},
                       k);

    // argmax of phase, ties by larger velocity, then lower index
    int imax = 0, imin = 0;
    for (int i = 1; i < 3; ++i) {
        if (t[i] > t[imax] || (t[i] == t[imax] && v[i] > v[imax]))
            imax = i;
        if (t[i] < t[imin] || (t[i] == t[imin] && v[i] < v[imin]))
            imin = i;
    }
    const int kk = 3 - imax - imin; // the remaining index (valid when imax != imin)
    const int i1 = imax + 1, j1 = imin + 1;

    const bool case1 = (i1 == 3 && j1 == 1) || (i1 == 1 && j1 == 2) || (i1 == 2 && j1 == 3);
    const double d = t[imax] - t[imin];
    const double mid = imax == imin ? 0.0 : t[kk] - 0.5 * (t[imax] + t[imin]);

    double value;
    if (case1) {
        value = -(2.0 * k2 / 3.0) * std::cos(d / 2.0 + kPi / 6.0) *
                (2.0 * std::sin(d / 2.0 + kPi / 6.0) - std::cos(mid));
    } else {
        value = -(2.0 * k2 / 3.0) *
                (std::sin(d - kPi / 3.0) + std::cos(mid) * std::sin(d / 2.0 + kPi / 3.0));
    }
    return {i1, j1, value, case1 ? DiniCase::Case1 : DiniCase::Case2};
}

double decay_bound(double delta, double k2) {
    if (!(delta > 0.0 && delta <= 2.0 * kPi / 3.0))
        throw std::domain_error("decay_bound: delta must lie in (0, 2*pi/3]");
    return (2.0 * k2 / 15.0) * std::sin(delta / 2.0);
}

InequalityMargins check_proof_inequalities(long samples) {
    if (samples < 2)
        throw std::invalid_argument("check_proof_inequalities: samples >= 2 required");
    double m1 = std::numeric_limits<double>::infinity();
    double m2 = std::numeric_limits<double>::infinity();
    for (long i = 0; i < samples; ++i) {
        const double x = kPi * static_cast<double>(i) / static_cast<double>(samples - 1);
        m1 = std::min(m1, 2.0 * std::sin(x / 2.0 + kPi / 6.0) - (x / 5.0 + 1.0));
        m2 = std::min(m2, std::sin(x - kPi / 3.0) +
                              std::cos(x / 2.0) * std::sin(x / 2.0 + kPi / 3.0) - x / 5.0);
    }
    return {m1, m2};
}

bool region_membership(const Vec3& th, PointId which) {
    const double d13 = th[0] - th[2];
    const double d23 = th[1] - th[2];
    const double d12 = th[0] - th[1];
    if (which == PointId::Star5)
        return -kPi < d13 && d13 < kPi / 3.0 && -kPi / 3.0 < d23 && d23 < kPi &&
               -4.0 * kPi / 3.0 < d12 && d12 < 0.0;
    if (which == PointId::Star6)
        return -7.0 * kPi / 3.0 < d13 && d13 < -kPi && -kPi < d23 && d23 < kPi / 3.0 &&
               -2.0 * kPi < d12 && d12 < -2.0 * kPi / 3.0;
    throw std::invalid_argument("region_membership: which must be Star5 or Star6");
}

DecayCertificate certify_decay(const Vec3& initial, PointId target, double k2,
                               const IntegratorConfig& cfg) {
    if (k2 <= 0.0)
        throw std::invalid_argument("certify_decay: k2 must be positive");
    const double d0 = diameter(translate(initial, target));
    if (d0 >= 2.0 * kPi / 3.0)
        throw PreconditionError("certify_decay: initial diameter must be below 2*pi/3");

    DecayCertificate cert{};
    cert.initial_diameter = d0;
    cert.delta = 2.0 * kPi / 3.0 - d0;
    cert.lambda = decay_bound(cert.delta, k2);

    const Coupling k(-k2, k2);
    const Trajectory traj = integrate(initial, k, cfg);

    double max_slack = -std::numeric_limits<double>::infinity();
    bool envelope_ok = true;
    // least-squares fit of log D(t) = log D(0) - rate * t
    double sw = 0.0, st = 0.0, sl = 0.0, stt = 0.0, stl = 0.0;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const double t = traj.times[i];
        const double d = diameter(translate(traj.states[i], target));
        const double slack = d - d0 * std::exp(-cert.lambda * t);
        max_slack = std::max(max_slack, slack);
        if (slack > 1e-9)
            envelope_ok = false;
        if (d > 1e-8) {
            const double l = std::log(d);
            sw += 1.0;
            st += t;
            sl += l;
            stt += t * t;
            stl += t * l;
        }
    }
    cert.max_slack = max_slack;

    if (sw >= 2.0 && sw * stt - st * st > 0.0) {
        cert.fitted_rate = -(sw * stl - st * sl) / (sw * stt - st * st);
        cert.verified = envelope_ok && cert.fitted_rate >= cert.lambda;
    } else {
        // diameter already at numerical zero; nothing to fit
        cert.fitted_rate = std::numeric_limits<double>::quiet_NaN();
        cert.verified = envelope_ok;
    }
    return cert;
}

} // namespace isokura
