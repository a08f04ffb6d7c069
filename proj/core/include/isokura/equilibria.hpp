#pragma once

#include "isokura/model.hpp"

#include <string>
#include <vector>

namespace isokura {

enum class PointId { Star1, Star2, Star3, Star4, Star5, Star6 };
enum class Stability { Stable, Unstable, Degenerate };

/// Parameter regions of the (k1, k2) plane by which point is stable.
/// Boundary covers the sets {k2 = 0, 2 k1 + k2 = 0, 2 k1 - k2 = 0}.
enum class ParamRegion {
    Case2_Star3Stable,
    Case3_Star4Stable,
    Case4_Star56Stable,
    Boundary,
};

/// Closed-form Jacobian spectrum at a critical point.
/// eigenvalues[0] is identically 0 with eigenvector (1,1,1).
struct Spectrum {
    std::array<double, 3> eigenvalues;
    std::array<Vec3, 3> eigenvectors;
};

struct CriticalPoint {
    PointId id;
    Vec3 phases; // representative with theta1 = 0, components in [0, 2*pi)
    Spectrum spectrum;
    Stability stability;
};

/// Ascending eigenvalues with orthonormal eigenvectors.
struct EigenDecomposition {
    std::array<double, 3> values;
    std::array<Vec3, 3> vectors;
};

struct NotPresentError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NonSymmetricError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// True when the point exists at this coupling (Star5/Star6 need
/// |k2 / (2 k1)| <= 1; the first four always exist).
bool point_exists(PointId id, const Coupling& k);

/// Canonical phases of the point, theta1 = 0, wrapped to [0, 2*pi).
/// Throws NotPresentError when the point does not exist.
Vec3 critical_phases(PointId id, const Coupling& k);

/// All critical points for this coupling. Star5/Star6 are appended when they
/// exist; coincident points at |k2/(2 k1)| = 1 are deduplicated, and the
/// surviving point is Degenerate (one nonzero eigenvalue vanishes there).
std::vector<CriticalPoint> enumerate_critical_points(const Coupling& k);

Spectrum closed_form_spectrum(PointId id, const Coupling& k);

/// Stability from eigenvalue signs: Stable iff both nonzero eigenvalues are
/// below -1e-12, Unstable iff any exceeds 1e-12, Degenerate otherwise.
Stability classify_spectrum(const Spectrum& s);

/// Jacobi rotation eigensolver for a symmetric 3x3 matrix.
/// Throws NonSymmetricError when asymmetry exceeds 1e-12.
EigenDecomposition numeric_spectrum(const Mat3& m);

ParamRegion classify_region(const Coupling& k);

struct Figure1Row {
    double ratio; // k2 / k1
    PointId id;
    double v; // energy at the point
    Stability stability;
};

/// Energy-vs-ratio table over all existing points, |k1| normalized to 1.
std::vector<Figure1Row> figure1_data(int k1_sign, const std::vector<double>& ratios);

std::string to_string(PointId id);
std::string to_string(Stability s);
std::string to_string(ParamRegion r);

} // namespace isokura
