#pragma once

#include "isokura/equilibria.hpp"
#include "isokura/model.hpp"

#include <random>

namespace isokura::testing {

inline Vec3 random_state(std::mt19937_64& rng, double lo = -10.0, double hi = 10.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return {dist(rng), dist(rng), dist(rng)};
}

/// Random coupling with both strengths in [-3, 3], rejecting points within
/// `margin` of the region boundaries {k2 = 0, 2 k1 + k2 = 0, 2 k1 - k2 = 0}.
inline Coupling random_interior_coupling(std::mt19937_64& rng, double margin = 1e-6) {
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (;;) {
        const double k1 = dist(rng), k2 = dist(rng);
        if (std::fabs(k1) < margin || std::fabs(k2) < margin)
            continue;
        if (std::fabs(2.0 * k1 + k2) < margin || std::fabs(2.0 * k1 - k2) < margin)
            continue;
        return Coupling(k1, k2);
    }
}

/// Central finite difference of `energy` in direction i.
inline double fd_energy(const Vec3& t, const Coupling& k, int i, double h = 1e-6) {
    Vec3 p = t, m = t;
    p[i] += h;
    m[i] -= h;
    return (energy(p, k) - energy(m, k)) / (2.0 * h);
}

inline double inf_norm3(const Vec3& v) {
    return std::max({std::fabs(v[0]), std::fabs(v[1]), std::fabs(v[2])});
}

} // namespace isokura::testing
