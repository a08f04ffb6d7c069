#pragma once

#include <array>
#include <stdexcept>

namespace isokura {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Signed coupling strengths: k1 on the 1-2 edge, k2 on the two equal edges.
/// Both must be nonzero.
struct Coupling {
    double k1;
    double k2;

    Coupling(double k1_, double k2_) : k1(k1_), k2(k2_) {
        if (k1 == 0.0 || k2 == 0.0)
            throw std::invalid_argument("Coupling: k1 and k2 must be nonzero");
    }
};

/// Phase differences (theta1 - theta3, theta2 - theta3) wrapped to (-pi, pi].
/// Invariant under adding a common constant to all phases.
struct DiffCoords {
    double x;
    double y;
};

/// Reduce x modulo 2*pi into (-pi, pi].
double wrap_angle(double x);

/// Right-hand side of the three-oscillator system. Components sum to zero.
Vec3 rhs(const Vec3& theta, const Coupling& k);

/// Energy V; the flow is the negative gradient of this.
double energy(const Vec3& theta, const Coupling& k);

/// Analytic gradient of `energy`; equals -rhs componentwise.
Vec3 gradient(const Vec3& theta, const Coupling& k);

/// Jacobian of `rhs`. Symmetric, rows sum to zero, so (1,1,1) is in the kernel.
Mat3 jacobian(const Vec3& theta, const Coupling& k);

DiffCoords diff_coords(const Vec3& theta);

/// Wrapped Euclidean distance between two points on the 2-torus.
double torus_distance(const DiffCoords& a, const DiffCoords& b);

} // namespace isokura
