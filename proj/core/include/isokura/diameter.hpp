#pragma once

#include "isokura/equilibria.hpp"
#include "isokura/integrate.hpp"
#include "isokura/model.hpp"

namespace isokura {

// Everything in this header assumes the balanced repulsive case
// k1 = -k2 < 0, where the two phase-locked points are
// Star5 = (0, 2*pi/3, pi/3) and Star6 = (0, 4*pi/3, 5*pi/3).

inline constexpr Vec3 kStar5Phases{0.0, 2.0 * kPi / 3.0, kPi / 3.0};
inline constexpr Vec3 kStar6Phases{0.0, 4.0 * kPi / 3.0, 5.0 * kPi / 3.0};

/// Phases relative to one of the two synchronization modes (no wrapping).
struct TranslatedState {
    Vec3 theta_tilde;
    PointId target; // Star5 or Star6
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

TranslatedState translate(const Vec3& theta, PointId target);

/// Phase diameter: max component minus min component.
double diameter(const TranslatedState& ts);

enum class DiniCase { Case1, Case2 };

struct DiniResult {
    int max_index; // i' (1-based, as the attaining max index)
    int min_index; // j'
    double value;  // upper Dini derivative of the diameter along the flow
    DiniCase kind;
};

/// Closed-form upper Dini derivative of the diameter for the translated flow
/// at k1 = -k2. Max/min index ties are broken by velocity, then lowest index.
DiniResult dini_closed_form(const TranslatedState& ts, double k2);

/// Certified decay rate (2 k2 / 15) * sin(delta / 2); delta in (0, 2*pi/3].
double decay_bound(double delta, double k2);

struct InequalityMargins {
    double min_margin_1; // min of 2 sin(x/2 + pi/6) - (x/5 + 1) over [0, pi]
    double min_margin_2; // min of sin(x - pi/3) + cos(x/2) sin(x/2 + pi/3) - x/5
};

/// Scan both proof inequalities on a uniform grid over [0, pi].
InequalityMargins check_proof_inequalities(long samples);

/// Open initial boxes guaranteeing exponential convergence to Star5 / Star6.
/// Evaluated on raw (unwrapped) phase differences of the given representative.
bool region_membership(const Vec3& initial, PointId which);

struct DecayCertificate {
    double delta;            // 2*pi/3 - D(0)
    double lambda;           // certified rate, decay_bound(delta, k2)
    double initial_diameter; // D(0)
    double fitted_rate;      // least-squares rate from log D(t); NaN if D == 0
    double max_slack;        // max over samples of D(t) - D(0) e^{-lambda t}
    bool verified;
};

/// Integrate the translated flow and check the exponential envelope
/// D(t) <= D(0) e^{-lambda t} + 1e-9 at every sample. Requires D(0) < 2*pi/3.
DecayCertificate certify_decay(const Vec3& initial, PointId target, double k2,
                               const IntegratorConfig& cfg);

} // namespace isokura
