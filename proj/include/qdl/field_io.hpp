#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qdl/grid.hpp"

// CF2D v1 field files: two text header lines
//   CF2D 1
//   grid <x_min> <x_max> <y_min> <y_max> <nx> <ny>
// followed by the row-major payload of little-endian float64 (re, im) pairs.

namespace qdl {

static_assert(sizeof(double) == 8);

namespace detail {
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
}  // namespace detail

inline void write_cf2d(const ComplexField& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_cf2d: cannot open " + path);
  const Grid2D& g = f.grid;
  out << "CF2D 1\n"
      << "grid " << detail::format_double(g.x_min) << ' '
      << detail::format_double(g.x_max) << ' '
      << detail::format_double(g.y_min) << ' '
      << detail::format_double(g.y_max) << ' ' << g.nx << ' ' << g.ny << '\n';
  out.write(reinterpret_cast<const char*>(f.values.data()),
            static_cast<std::streamsize>(sizeof(complexd) * f.values.size()));
  if (!out) throw std::runtime_error("write_cf2d: write failed for " + path);
}

inline ComplexField read_cf2d(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_cf2d: cannot open " + path);
  std::string magic, grid_tag;
  int version = 0;
  in >> magic >> version;
  if (magic != "CF2D" || version != 1)
    throw std::runtime_error("read_cf2d: bad header in " + path);
  double x0, x1, y0, y1;
  int nx, ny;
  in >> grid_tag >> x0 >> x1 >> y0 >> y1 >> nx >> ny;
  if (grid_tag != "grid" || !in)
    throw std::runtime_error("read_cf2d: bad grid line in " + path);
  in.ignore(2, '\n');
  ComplexField f(make_grid(x0, x1, y0, y1, nx, ny));
  in.read(reinterpret_cast<char*>(f.values.data()),
          static_cast<std::streamsize>(sizeof(complexd) * f.values.size()));
  if (in.gcount() != static_cast<std::streamsize>(sizeof(complexd) * f.values.size()))
    throw std::runtime_error("read_cf2d: truncated payload in " + path);
  return f;
}

// CSV export: columns x,y,re,im with 17 significant digits (round-trip exact
// for float64). Import accepts only this layout.
inline void write_csv(const ComplexField& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path);
  out << "x,y,re,im\n";
  const Grid2D& g = f.grid;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) {
      const complexd v = f.at(i, j);
      out << detail::format_double(g.x(i)) << ',' << detail::format_double(g.y(j))
          << ',' << detail::format_double(v.real()) << ','
          << detail::format_double(v.imag()) << '\n';
    }
}

inline ComplexField read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_csv: cannot open " + path);
  std::string line;
  std::getline(in, line);
  if (line != "x,y,re,im") throw std::runtime_error("read_csv: bad header");
  std::vector<double> xs, ys;
  std::vector<complexd> vals;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    double x, y, re, im;
    if (!(ss >> x >> y >> re >> im))
      throw std::runtime_error("read_csv: bad row: " + line);
    xs.push_back(x);
    ys.push_back(y);
    vals.emplace_back(re, im);
  }
  if (vals.empty()) throw std::runtime_error("read_csv: no data rows");
  // infer grid: rows are written x-major, y fastest
  int ny = 1;
  while (ny < static_cast<int>(ys.size()) && ys[ny] != ys[0]) ++ny;
  const int nx = static_cast<int>(vals.size()) / ny;
  if (nx * ny != static_cast<int>(vals.size()))
    throw std::runtime_error("read_csv: ragged grid");
  return ComplexField(make_grid(xs.front(), xs.back(), ys.front(), ys[ny - 1], nx, ny),
                      std::move(vals));
}

inline void export_field(const ComplexField& f, const std::string& path,
                         const std::string& format) {
  if (format == "cf2d")
    write_cf2d(f, path);
  else if (format == "csv")
    write_csv(f, path);
  else
    throw std::invalid_argument("export_field: unknown format " + format);
}

inline ComplexField import_field(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  char head[4] = {};
  in.read(head, 4);
  in.close();
  if (std::strncmp(head, "CF2D", 4) == 0) return read_cf2d(path);
  return read_csv(path);
}

/// Time-stamped sequence of snapshots of one evolving field.
struct FieldSeries {
  std::vector<double> times;
  std::vector<ComplexField> snapshots;
  double dt = 0.0;  // integrator step used to produce the snapshots
};

/// Writes snapshots as CF2D files plus a JSON manifest listing them.
inline void export_series(const FieldSeries& s, const std::string& dir,
                          const std::string& stem) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  nlohmann::json manifest;
  manifest["dt"] = s.dt;
  manifest["times"] = s.times;
  if (!s.snapshots.empty()) {
    const Grid2D& g = s.snapshots.front().grid;
    manifest["grid"] = {{"x_min", g.x_min}, {"x_max", g.x_max},
                        {"y_min", g.y_min}, {"y_max", g.y_max},
                        {"nx", g.nx},       {"ny", g.ny}};
  }
  std::vector<std::string> files;
  for (size_t i = 0; i < s.snapshots.size(); ++i) {
    std::string name = stem + "_" + std::to_string(i) + ".cf2d";
    write_cf2d(s.snapshots[i], (fs::path(dir) / name).string());
    files.push_back(name);
  }
  manifest["files"] = files;
  std::ofstream out((fs::path(dir) / (stem + "_manifest.json")).string());
  out << manifest.dump(2) << '\n';
}

/// Grayscale portable-pixmap (P5) heatmap of |f|, linear scale from 0 to
/// max|f|. A zero field renders all black.
inline void emit_heatmap(const ComplexField& f, const std::string& path) {
  const Grid2D& g = f.grid;
  const double mx = f.max_abs();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("emit_heatmap: cannot open " + path);
  out << "P5\n" << g.ny << ' ' << g.nx << "\n255\n";
  std::vector<unsigned char> row(g.ny);
  for (int i = 0; i < g.nx; ++i) {
    for (int j = 0; j < g.ny; ++j) {
      const double t = mx > 0.0 ? std::abs(f.at(i, j)) / mx : 0.0;
      row[j] = static_cast<unsigned char>(std::min(255.0, t * 255.0));
    }
    out.write(reinterpret_cast<const char*>(row.data()), row.size());
  }
}

}  // namespace qdl
