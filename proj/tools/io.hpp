#pragma once

#include "isokura/model.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace isokura::cli {

/// Shortest round-trippable decimal form of a double (17 significant digits).
std::string fmt(double v);

/// Write content to path via a temp file + rename, so failures never leave a
/// partial file behind. Returns false on any I/O error.
bool write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// Parse "start:stop:step" into an inclusive grid (endpoint within half a step).
std::vector<double> parse_range(const std::string& spec);

/// Parse "a,b,c" into a phase triple.
Vec3 parse_theta0(const std::string& spec);

/// Diagnostic to stderr; colored unless NO_COLOR is set.
void print_error(const std::string& msg);

} // namespace isokura::cli
