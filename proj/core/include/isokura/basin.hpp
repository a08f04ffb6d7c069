#pragma once

#include "isokura/integrate.hpp"

#include <optional>
#include <vector>

namespace isokura {

struct SweepConfig {
    int resolution; // cells per torus axis, >= 2
    Coupling coupling;
    IntegratorConfig integrator{.t_max = 2000.0, .convergence_eps = 1e-10};
    unsigned threads = 0; // 0 = hardware concurrency
};

/// Classification of a grid of initial phase differences. Cell (a, b) holds
/// the limit point of the lifted initial state (x, y, 0) with
/// x = -pi + 2*pi*(a+0.5)/res, y = -pi + 2*pi*(b+0.5)/res.
struct BasinGrid {
    int resolution = 0;
    double k1 = 0.0, k2 = 0.0;
    std::vector<std::optional<PointId>> cells; // row-major in (a, b)

    DiffCoords cell_center(int a, int b) const;
    const std::optional<PointId>& at(int a, int b) const {
        return cells[static_cast<std::size_t>(a) * resolution + b];
    }
};

struct BasinReport {
    std::array<double, 6> area_fraction{}; // indexed by PointId
    double unclassified_fraction = 0.0;
};

struct CellRef {
    int a, b;
};

/// Classify every cell. Cells run in parallel; the result is a pure function
/// of the config. Integrator failures mark the cell Unclassified.
BasinGrid sweep(const SweepConfig& cfg);

BasinReport basin_report(const BasinGrid& grid);

/// Cells whose lifted initial state lies in the guaranteed box for `which`
/// (testing the nine 2*pi lattice shifts of the representative) but whose
/// class is not `which`. Must be empty for a correct sweep at k1 = -k2 < 0.
std::vector<CellRef> verify_region_subset(const BasinGrid& grid, PointId which);

} // namespace isokura
