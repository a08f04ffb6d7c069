#include "isokura/model.hpp"

#include <cmath>

namespace isokura {

double wrap_angle(double x) {
    double r = std::remainder(x, kTwoPi); // lands in [-pi, pi]
    if (r <= -kPi)
        r += kTwoPi;
    return r;
}

Vec3 rhs(const Vec3& t, const Coupling& k) {
    const double s31 = std::sin(t[2] - t[0]);
    const double s21 = std::sin(t[1] - t[0]);
    const double s32 = std::sin(t[2] - t[1]);
    return {
        (k.k2 * s31 + k.k1 * s21) / 3.0,
        (k.k2 * s32 - k.k1 * s21) / 3.0,
        (-k.k2 * s31 - k.k2 * s32) / 3.0,
    };
}

double energy(const Vec3& t, const Coupling& k) {
    return -(k.k2 * std::cos(t[2] - t[0]) + k.k1 * std::cos(t[1] - t[0]) +
             k.k2 * std::cos(t[1] - t[2])) /
           3.0;
}

Vec3 gradient(const Vec3& t, const Coupling& k) {
    const Vec3 v = rhs(t, k);
    return {-v[0], -v[1], -v[2]};
}

Mat3 jacobian(const Vec3& t, const Coupling& k) {
    const double j12 = k.k1 * std::cos(t[1] - t[0]) / 3.0;
    const double j13 = k.k2 * std::cos(t[2] - t[0]) / 3.0;
    const double j23 = k.k2 * std::cos(t[2] - t[1]) / 3.0;
    return {{
        {-(j12 + j13), j12, j13},
        {j12, -(j12 + j23), j23},
        {j13, j23, -(j13 + j23)},
    }};
}

DiffCoords diff_coords(const Vec3& t) {
    return {wrap_angle(t[0] - t[2]), wrap_angle(t[1] - t[2])};
}

double torus_distance(const DiffCoords& a, const DiffCoords& b) {
    const double dx = wrap_angle(a.x - b.x);
    const double dy = wrap_angle(a.y - b.y);
    return std::sqrt(dx * dx + dy * dy);
}

} // namespace isokura
