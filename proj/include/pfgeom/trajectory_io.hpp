#pragma once

#include <string>

#include "pfgeom/curves.hpp"

namespace pfgeom {

/// Render a trajectory as CSV: header "s,x0..x{d-1},v0..v{d-1},lambda,drift,
/// speed", one row per sample, 17 significant digits, LF line endings.
std::string trajectory_csv(const Trajectory& traj);

/// Write text atomically (temp file in the target directory, then rename).
void atomic_write_text(const std::string& path, const std::string& content);

void write_trajectory_csv(const Trajectory& traj, const std::string& path);

}  // namespace pfgeom
