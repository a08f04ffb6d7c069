#include "isokura/equilibria.hpp"

#include <algorithm>
#include <cmath>

namespace isokura {

namespace {

constexpr double kSignEps = 1e-12;

double wrap_to_2pi(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0)
        r += kTwoPi;
    return r;
}

// alpha = arccos(-k2 / (2 k1)), defined when the argument is in [-1, 1]
double alpha_of(const Coupling& k) {
    double c = -k.k2 / (2.0 * k.k1);
    c = std::clamp(c, -1.0, 1.0);
    return std::acos(c);
}

} // namespace

bool point_exists(PointId id, const Coupling& k) {
    if (id == PointId::Star5 || id == PointId::Star6)
        return std::fabs(k.k2 / (2.0 * k.k1)) <= 1.0;
    return true;
}

Vec3 critical_phases(PointId id, const Coupling& k) {
    switch (id) {
    case PointId::Star1:
        return {0.0, kPi, 0.0};
    case PointId::Star2:
        return {0.0, kPi, kPi};
    case PointId::Star3:
        return {0.0, 0.0, 0.0};
    case PointId::Star4:
        return {0.0, 0.0, kPi};
    case PointId::Star5: {
        if (!point_exists(id, k))
            throw NotPresentError("Star5 requires |k2/(2 k1)| <= 1");
        const double a = alpha_of(k);
        return {0.0, wrap_to_2pi(2.0 * a), wrap_to_2pi(a)};
    }
    case PointId::Star6: {
        if (!point_exists(id, k))
            throw NotPresentError("Star6 requires |k2/(2 k1)| <= 1");
        const double a = alpha_of(k);
        return {0.0, wrap_to_2pi(kTwoPi - 2.0 * a), wrap_to_2pi(kTwoPi - a)};
    }
    }
    throw std::logic_error("unreachable");
}

Spectrum closed_form_spectrum(PointId id, const Coupling& k) {
    const Vec3 one{1.0, 1.0, 1.0};
    switch (id) {
    case PointId::Star1:
    case PointId::Star2: {
        const double s = std::sqrt(k.k1 * k.k1 + 3.0 * k.k2 * k.k2);
        const double up = (k.k1 + s) / k.k2;
        const double um = (k.k1 - s) / k.k2;
        Vec3 v2{-up - 1.0, up - 1.0, 2.0};
        Vec3 v3{-um - 1.0, um - 1.0, 2.0};
        // These vectors diagonalize the Jacobian at Star2, where oscillator 1
        // is the anti-phase one; at Star1 it is oscillator 2, so swap.
        if (id == PointId::Star1) {
            std::swap(v2[0], v2[1]);
            std::swap(v3[0], v3[1]);
        }
        return {{0.0, (k.k1 + s) / 3.0, (k.k1 - s) / 3.0}, {one, v2, v3}};
    }
    case PointId::Star3:
        return {{0.0, -(2.0 * k.k1 + k.k2) / 3.0, -k.k2},
                {one, Vec3{-1.0, 1.0, 0.0}, Vec3{-0.5, -0.5, 1.0}}};
    case PointId::Star4:
        return {{0.0, (k.k2 - 2.0 * k.k1) / 3.0, k.k2},
                {one, Vec3{-1.0, 1.0, 0.0}, Vec3{-0.5, -0.5, 1.0}}};
    case PointId::Star5:
    case PointId::Star6:
        if (!point_exists(id, k))
            throw NotPresentError("Star5/Star6 require |k2/(2 k1)| <= 1");
        return {{0.0, (4.0 * k.k1 * k.k1 - k.k2 * k.k2) / (6.0 * k.k1),
                 k.k2 * k.k2 / (2.0 * k.k1)},
                {one, Vec3{-1.0, 1.0, 0.0}, Vec3{-0.5, -0.5, 1.0}}};
    }
    throw std::logic_error("unreachable");
}

Stability classify_spectrum(const Spectrum& s) {
    const double a = s.eigenvalues[1];
    const double b = s.eigenvalues[2];
    if (a > kSignEps || b > kSignEps)
        return Stability::Unstable;
    if (a < -kSignEps && b < -kSignEps)
        return Stability::Stable;
    return Stability::Degenerate;
}

std::vector<CriticalPoint> enumerate_critical_points(const Coupling& k) {
    std::vector<CriticalPoint> points;
    auto add = [&](PointId id) {
        const Spectrum s = closed_form_spectrum(id, k);
        points.push_back({id, critical_phases(id, k), s, classify_spectrum(s)});
    };
    add(PointId::Star1);
    add(PointId::Star2);
    add(PointId::Star3);
    add(PointId::Star4);

    for (PointId id : {PointId::Star5, PointId::Star6}) {
        if (!point_exists(id, k))
            continue;
        const Vec3 phases = critical_phases(id, k);
        const DiffCoords dc = diff_coords(phases);
        auto dup = std::find_if(points.begin(), points.end(), [&](const CriticalPoint& p) {
            return torus_distance(diff_coords(p.phases), dc) < 1e-9;
        });
        if (dup != points.end()) {
            dup->stability = Stability::Degenerate; // merged point, zero eigenvalue
            continue;
        }
        add(id);
    }
    return points;
}

EigenDecomposition numeric_spectrum(const Mat3& m) {
    double asym = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            asym = std::max(asym, std::fabs(m[i][j] - m[j][i]));
    if (asym > 1e-12)
        throw NonSymmetricError("numeric_spectrum: matrix is not symmetric");

    Mat3 a = m;
    Mat3 q{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

    auto offdiag = [&] {
        return std::sqrt(a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2]);
    };

    // cyclic Jacobi sweeps
    for (int sweep = 0; sweep < 64 && offdiag() > 1e-13; ++sweep) {
        for (int p = 0; p < 2; ++p) {
            for (int r = p + 1; r < 3; ++r) {
                if (a[p][r] == 0.0)
                    continue;
                const double tau = (a[r][r] - a[p][p]) / (2.0 * a[p][r]);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                Mat3 rot{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
                rot[p][p] = c;
                rot[r][r] = c;
                rot[p][r] = s;
                rot[r][p] = -s;
                // a := rot^T a rot, q := q rot
                Mat3 tmp{}, na{}, nq{};
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) {
                        double av = 0.0, qv = 0.0;
                        for (int l = 0; l < 3; ++l) {
                            av += a[i][l] * rot[l][j];
                            qv += q[i][l] * rot[l][j];
                        }
                        tmp[i][j] = av;
                        nq[i][j] = qv;
                    }
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) {
                        double v = 0.0;
                        for (int l = 0; l < 3; ++l)
                            v += rot[l][i] * tmp[l][j];
                        na[i][j] = v;
                    }
                a = na;
                q = nq;
            }
        }
    }

    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a[i][i] < a[j][j]; });

    EigenDecomposition out{};
    for (int n = 0; n < 3; ++n) {
        out.values[n] = a[order[n]][order[n]];
        for (int i = 0; i < 3; ++i)
            out.vectors[n][i] = q[i][order[n]];
    }
    return out;
}

ParamRegion classify_region(const Coupling& k) {
    const double tol = 1e-12 * std::max(1.0, std::fabs(k.k1) + std::fabs(k.k2));
    const double e1 = k.k2;
    const double e2 = 2.0 * k.k1 + k.k2;
    const double e3 = 2.0 * k.k1 - k.k2;
    if (std::fabs(e1) <= tol || std::fabs(e2) <= tol || std::fabs(e3) <= tol)
        return ParamRegion::Boundary;
    if (e1 > 0.0 && e2 > 0.0)
        return ParamRegion::Case2_Star3Stable;
    if (e1 < 0.0 && e3 > 0.0)
        return ParamRegion::Case3_Star4Stable;
    return ParamRegion::Case4_Star56Stable; // e2 < 0 && e3 < 0
}

std::vector<Figure1Row> figure1_data(int k1_sign, const std::vector<double>& ratios) {
    std::vector<Figure1Row> rows;
    const double k1 = k1_sign >= 0 ? 1.0 : -1.0;
    for (double r : ratios) {
        if (r == 0.0)
            continue; // k2 = 0 is outside the model
        const Coupling k(k1, r * k1);
        for (const CriticalPoint& p : enumerate_critical_points(k))
            rows.push_back({r, p.id, energy(p.phases, k), p.stability});
    }
    return rows;
}

std::string to_string(PointId id) {
    switch (id) {
    case PointId::Star1: return "star1";
    case PointId::Star2: return "star2";
    case PointId::Star3: return "star3";
    case PointId::Star4: return "star4";
    case PointId::Star5: return "star5";
    case PointId::Star6: return "star6";
    }
    return "?";
}

std::string to_string(Stability s) {
    switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Unstable: return "unstable";
    case Stability::Degenerate: return "degenerate";
    }
    return "?";
}

std::string to_string(ParamRegion r) {
    switch (r) {
    case ParamRegion::Case2_Star3Stable: return "case2_star3_stable";
    case ParamRegion::Case3_Star4Stable: return "case3_star4_stable";
    case ParamRegion::Case4_Star56Stable: return "case4_star56_stable";
    case ParamRegion::Boundary: return "boundary";
    }
    return "?";
}

} // namespace isokura
