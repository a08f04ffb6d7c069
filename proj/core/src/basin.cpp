#include "isokura/basin.hpp"

#include "isokura/diameter.hpp"

#include <atomic>
#include <thread>

namespace isokura {

DiffCoords BasinGrid::cell_center(int a, int b) const {
    const double step = kTwoPi / resolution;
    return {-kPi + (a + 0.5) * step, -kPi + (b + 0.5) * step};
}

BasinGrid sweep(const SweepConfig& cfg) {
    if (cfg.resolution < 2)
        throw std::invalid_argument("sweep: resolution must be >= 2");

    BasinGrid grid;
    grid.resolution = cfg.resolution;
    grid.k1 = cfg.coupling.k1;
    grid.k2 = cfg.coupling.k2;
    grid.cells.assign(static_cast<std::size_t>(cfg.resolution) * cfg.resolution,
                      std::nullopt);

    unsigned nthreads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
    if (nthreads == 0)
        nthreads = 1;

    std::atomic<int> next_row{0};
    auto worker = [&] {
        for (int a; (a = next_row.fetch_add(1)) < cfg.resolution;) {
            for (int b = 0; b < cfg.resolution; ++b) {
                const DiffCoords c = grid.cell_center(a, b);
                std::optional<PointId> cls;
                try {
                    const LimitResult r =
                        limit_point({c.x, c.y, 0.0}, cfg.coupling, cfg.integrator);
                    cls = r.target;
                } catch (const StepUnderflowError&) {
                    // leave the cell unclassified
                }
                grid.cells[static_cast<std::size_t>(a) * cfg.resolution + b] = cls;
            }
        }
    };

    std::vector<std::thread> pool;
    for (unsigned i = 1; i < nthreads; ++i)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    return grid;
}

BasinReport basin_report(const BasinGrid& grid) {
    if (grid.cells.empty())
        throw std::invalid_argument("basin_report: empty grid");
    BasinReport rep{};
    const double w = 1.0 / static_cast<double>(grid.cells.size());
    for (const auto& c : grid.cells) {
        if (c)
            rep.area_fraction[static_cast<int>(*c)] += w;
        else
            rep.unclassified_fraction += w;
    }
    return rep;
}

std::vector<CellRef> verify_region_subset(const BasinGrid& grid, PointId which) {
    std::vector<CellRef> violations;
    for (int a = 0; a < grid.resolution; ++a) {
        for (int b = 0; b < grid.resolution; ++b) {
            const DiffCoords c = grid.cell_center(a, b);
            bool inside = false;
            for (int sa = -1; sa <= 1 && !inside; ++sa)
                for (int sb = -1; sb <= 1 && !inside; ++sb)
                    inside = region_membership(
                        {c.x + kTwoPi * sa, c.y + kTwoPi * sb, 0.0}, which);
            if (inside && grid.at(a, b) != which)
                violations.push_back({a, b});
        }
    }
    return violations;
}

} // namespace isokura
