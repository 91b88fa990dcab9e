#include "pfgeom/trajectory_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <system_error>

#include "pfgeom/error.hpp"

namespace pfgeom {

namespace {

void append_number(std::string& out, double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  out += buf;
}

}  // namespace

std::string trajectory_csv(const Trajectory& traj) {
  std::string out;
  out += "s";
  for (int i = 0; i < traj.dim; ++i) out += ",x" + std::to_string(i);
  for (int i = 0; i < traj.dim; ++i) out += ",v" + std::to_string(i);
  out += ",lambda,drift,speed\n";
  for (const auto& st : traj.states) {
    append_number(out, st.s);
    for (int i = 0; i < traj.dim; ++i) {
      out += ',';
      append_number(out, st.x[i]);
    }
    for (int i = 0; i < traj.dim; ++i) {
      out += ',';
      append_number(out, st.v[i]);
    }
    out += ',';
    append_number(out, st.lambda);
    out += ',';
    append_number(out, st.drift);
    out += ',';
    append_number(out, st.speed);
    out += '\n';
  }
  return out;
}

void atomic_write_text(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  std::error_code ec;
  if (target.has_parent_path()) {
    fs::create_directories(target.parent_path(), ec);
    if (ec) throw Error(ErrorKind::IoError, "cannot create directory for " + path);
  }
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream stream(tmp, std::ios::binary | std::ios::trunc);
    if (!stream) throw Error(ErrorKind::IoError, "cannot open " + tmp.string());
    stream << content;
    if (!stream.good()) throw Error(ErrorKind::IoError, "short write to " + tmp.string());
  }
  fs::rename(tmp, target, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot rename into place: " + path);
}

void write_trajectory_csv(const Trajectory& traj, const std::string& path) {
  atomic_write_text(path, trajectory_csv(traj));
}

}  // namespace pfgeom
