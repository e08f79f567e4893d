#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "diam/geometry.hpp"
#include "diam/pair_diameter.hpp"

namespace diam {

enum class PointFormat { Xyz, Off, PlyAscii };

/// Maps "xyz" / "off" / "ply"; throws on anything else.
PointFormat format_from_name(std::string_view name);

/// XYZ: one point per line, whitespace-separated reals, dimension inferred
/// from the first data line, '#' starts a comment. OFF: the vertex block of
/// an ASCII OFF mesh (faces ignored). PLY: the x/y/z properties of an ASCII
/// PLY vertex element; binary PLY is rejected. Parse errors carry the line
/// number.
PointSet read_points(std::istream& in, PointFormat format);
PointSet read_points(const std::filesystem::path& path, PointFormat format);

/// 17 significant digits per coordinate, so read(write(points)) is bit-exact.
void write_xyz(std::ostream& out, const PointSet& points);

/// One benchmark measurement: what ran, on what, and what came out.
struct ResultRecord {
  std::string algorithm;
  double eps = 0.0;
  std::string input;  // file path or generator descriptor
  std::size_t n = 0;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  std::size_t best_first = 0, best_second = 0;
  double distance = 0.0;
  RunStats stats;

  bool operator==(const ResultRecord&) const = default;
};

std::string to_json(const ResultRecord& record);
ResultRecord record_from_json(const std::string& text);

/// Fixed column order:
/// algorithm,eps,n,d,distance,i,j,pairs_created,distance_evals,nodes_built,heap_ops,wall_ms
/// Numbers are written with up to 17 significant digits.
std::string csv_header();
std::string to_csv_row(const ResultRecord& record);
/// Parses one data row back; fields absent from the CSV schema (input, seed)
/// stay default.
ResultRecord record_from_csv_row(const std::string& row);

}  // namespace diam
