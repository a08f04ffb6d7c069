#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace isokura::cli {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::error_code ec;
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            return false;
        out << content;
        if (!out.flush())
            return false;
    }
    std::filesystem::rename(tmp, path, ec);
    return !ec;
}

std::vector<double> parse_range(const std::string& spec) {
    double start, stop, step;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 ||
        step <= 0.0 || stop < start)
        throw std::invalid_argument("range must be start:stop:step with step > 0");
    std::vector<double> grid;
    for (double x = start; x <= stop + 0.5 * step; x += step)
        grid.push_back(x);
    return grid;
}

Vec3 parse_theta0(const std::string& spec) {
    Vec3 t;
    if (std::sscanf(spec.c_str(), "%lf,%lf,%lf", &t[0], &t[1], &t[2]) != 3)
        throw std::invalid_argument("--theta0 expects a,b,c");
    return t;
}

void print_error(const std::string& msg) {
    const bool color = std::getenv("NO_COLOR") == nullptr;
    if (color)
        std::fprintf(stderr, "\033[31merror:\033[0m %s\n", msg.c_str());
    else
        std::fprintf(stderr, "error: %s\n", msg.c_str());
}

} // namespace isokura::cli
