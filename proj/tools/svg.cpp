#include "svg.hpp"

#include "io.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <map>
#include <sstream>

namespace isokura::cli {

namespace {

const char* class_color(const std::optional<PointId>& c) {
    if (!c)
        return "#c8c8c8";
    switch (*c) {
    case PointId::Star1: return "#8c564b";
    case PointId::Star2: return "#e377c2";
    case PointId::Star3: return "#1f77b4";
    case PointId::Star4: return "#2ca02c";
    case PointId::Star5: return "#d62728";
    case PointId::Star6: return "#ff7f0e";
    }
    return "#000000";
}

void append_header(std::ostringstream& s, int w, int h, bool deterministic) {
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    if (!deterministic) {
        std::time_t now = std::time(nullptr);
        char buf[64];
        std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        s << "<!-- generated " << buf << " -->\n";
    }
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
}

} // namespace

std::string render_basin_svg(const BasinGrid& grid, bool deterministic) {
    const int res = grid.resolution;
    std::ostringstream s;
    append_header(s, res, res, deterministic);
    s << "<g shape-rendering=\"crispEdges\">\n";
    // run-length encode each row; y axis points down, so flip b
    for (int b = res - 1; b >= 0; --b) {
        int a = 0;
        while (a < res) {
            int a2 = a;
            const auto& cls = grid.at(a, b);
            while (a2 < res && grid.at(a2, b) == cls)
                ++a2;
            s << "<rect x=\"" << a << "\" y=\"" << res - 1 - b << "\" width=\"" << a2 - a
              << "\" height=\"1\" fill=\"" << class_color(cls) << "\"/>\n";
            a = a2;
        }
    }
    s << "</g>\n</svg>\n";
    return s.str();
}

std::string render_figure1_svg(const std::vector<Figure1Row>& rows, bool deterministic) {
    const int w = 640, h = 480, ml = 60, mr = 20, mt = 20, mb = 45;

    double rmin = 0.0, rmax = 1.0, vmin = 0.0, vmax = 1.0;
    if (!rows.empty()) {
        rmin = rmax = rows.front().ratio;
        vmin = vmax = rows.front().v;
        for (const auto& r : rows) {
            rmin = std::min(rmin, r.ratio);
            rmax = std::max(rmax, r.ratio);
            vmin = std::min(vmin, r.v);
            vmax = std::max(vmax, r.v);
        }
    }
    if (rmax == rmin)
        rmax = rmin + 1.0;
    if (vmax == vmin)
        vmax = vmin + 1.0;

    auto px = [&](double r) { return ml + (r - rmin) / (rmax - rmin) * (w - ml - mr); };
    auto py = [&](double v) { return h - mb - (v - vmin) / (vmax - vmin) * (h - mt - mb); };

    std::ostringstream s;
    append_header(s, w, h, deterministic);
    s << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << w - ml - mr
      << "\" height=\"" << h - mt - mb
      << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    s << "<text x=\"" << (ml + w - mr) / 2 << "\" y=\"" << h - 10
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">"
         "K2 / K1</text>\n";
    s << "<text x=\"15\" y=\"" << (mt + h - mb) / 2
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 15 "
      << (mt + h - mb) / 2 << ")\">V</text>\n";

    // group by point, keep ratio order, draw segments styled by stability
    std::map<PointId, std::vector<const Figure1Row*>> series;
    for (const auto& r : rows)
        series[r.id].push_back(&r);
    for (auto& [id, pts] : series) {
        std::stable_sort(pts.begin(), pts.end(),
                         [](const auto* a, const auto* b) { return a->ratio < b->ratio; });
        for (std::size_t i = 1; i < pts.size(); ++i) {
            const auto* a = pts[i - 1];
            const auto* b = pts[i];
            const bool solid = a->stability == Stability::Stable &&
                               b->stability == Stability::Stable;
            s << "<line x1=\"" << fmt(px(a->ratio)) << "\" y1=\"" << fmt(py(a->v))
              << "\" x2=\"" << fmt(px(b->ratio)) << "\" y2=\"" << fmt(py(b->v))
              << "\" stroke=\"" << class_color(id) << "\" stroke-width=\"2\"";
            if (!solid)
                s << " stroke-dasharray=\"6 4\"";
            s << "/>\n";
        }
    }
    s << "</svg>\n";
    return s.str();
}

} // namespace isokura::cli
