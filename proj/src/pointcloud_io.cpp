#include "diam/pointcloud_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace diam {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("parse error at line " + std::to_string(line_no) + ": " + what);
}

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool parse_doubles(const std::string& text, std::vector<double>& out) {
  out.clear();
  std::istringstream ss(text);
  double v;
  while (ss >> v) out.push_back(v);
  ss.clear();
  std::string rest;
  ss >> rest;
  return rest.empty();  // trailing junk means a malformed line
}

PointSet read_xyz(std::istream& in) {
  PointSet points(1);
  bool first = true;
  std::string line;
  std::vector<double> values;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip_comment(line);
    if (!parse_doubles(body, values)) parse_fail(line_no, "malformed coordinate line");
    if (values.empty()) continue;
    if (first) {
      points = PointSet(values.size());
      first = false;
    } else if (values.size() != points.dim()) {
      parse_fail(line_no, "expected " + std::to_string(points.dim()) + " coordinates, got " +
                              std::to_string(values.size()));
    }
    try {
      points.add(values);
    } catch (const std::exception& e) {
      parse_fail(line_no, e.what());
    }
  }
  if (first) throw std::runtime_error("xyz: no points in input");
  return points;
}

/// Reads the next line that still has content after comment stripping.
bool next_content_line(std::istream& in, std::size_t& line_no, std::string& body) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    body = strip_comment(line);
    if (body.find_first_not_of(" \t\r\n") != std::string::npos) return true;
  }
  return false;
}

PointSet read_off(std::istream& in) {
  std::size_t line_no = 0;
  std::string body;
  if (!next_content_line(in, line_no, body)) parse_fail(1, "empty OFF file");
  {
    std::istringstream ss(body);
    std::string magic;
    ss >> magic;
    if (magic != "OFF") parse_fail(line_no, "missing OFF header");
  }
  if (!next_content_line(in, line_no, body)) parse_fail(line_no, "missing OFF counts");
  std::size_t n_vertices = 0, n_faces = 0, n_edges = 0;
  {
    std::istringstream ss(body);
    if (!(ss >> n_vertices >> n_faces >> n_edges)) parse_fail(line_no, "bad OFF counts line");
  }
  if (n_vertices == 0) parse_fail(line_no, "OFF file declares zero vertices");
  PointSet points(3);
  std::vector<double> values;
  for (std::size_t i = 0; i < n_vertices; ++i) {
    if (!next_content_line(in, line_no, body)) parse_fail(line_no, "unexpected end of vertices");
    if (!parse_doubles(body, values) || values.size() < 3)
      parse_fail(line_no, "bad OFF vertex line");
    try {
      points.add({values[0], values[1], values[2]});
    } catch (const std::exception& e) {
      parse_fail(line_no, e.what());
    }
  }
  return points;  // faces ignored
}

PointSet read_ply(std::istream& in) {
  std::size_t line_no = 1;
  std::string line;
  if (!std::getline(in, line) || strip_comment(line).substr(0, 3) != "ply")
    parse_fail(line_no, "missing ply magic");

  std::size_t n_vertices = 0;
  int idx_x = -1, idx_y = -1, idx_z = -1;
  int property_index = 0;
  bool in_vertex_element = false, saw_format = false, past_vertices = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string word;
    ss >> word;
    if (word == "comment" || word.empty()) continue;
    if (word == "format") {
      std::string kind;
      ss >> kind;
      if (kind != "ascii") throw std::runtime_error("ply: unsupported format '" + kind +
                                                    "' (only ascii is supported)");
      saw_format = true;
    } else if (word == "element") {
      std::string name;
      std::size_t count = 0;
      ss >> name >> count;
      if (name == "vertex") {
        in_vertex_element = true;
        n_vertices = count;
      } else {
        if (in_vertex_element) past_vertices = true;
        in_vertex_element = false;
      }
      if (!past_vertices) property_index = 0;
    } else if (word == "property" && in_vertex_element) {
      std::string type, name;
      ss >> type >> name;
      if (name == "x") idx_x = property_index;
      if (name == "y") idx_y = property_index;
      if (name == "z") idx_z = property_index;
      ++property_index;
    } else if (word == "end_header") {
      break;
    }
  }
  if (!saw_format) parse_fail(line_no, "ply: missing format line");
  if (n_vertices == 0) parse_fail(line_no, "ply: no vertex element");
  if (idx_x < 0 || idx_y < 0 || idx_z < 0) parse_fail(line_no, "ply: vertex needs x/y/z");

  PointSet points(3);
  std::vector<double> values;
  for (std::size_t i = 0; i < n_vertices; ++i) {
    if (!std::getline(in, line)) parse_fail(line_no, "ply: unexpected end of vertex data");
    ++line_no;
    if (!parse_doubles(line, values) ||
        values.size() <= static_cast<std::size_t>(std::max({idx_x, idx_y, idx_z})))
      parse_fail(line_no, "ply: bad vertex line");
    try {
      points.add({values[idx_x], values[idx_y], values[idx_z]});
    } catch (const std::exception& e) {
      parse_fail(line_no, e.what());
    }
  }
  return points;  // any further elements are ignored
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

PointFormat format_from_name(std::string_view name) {
  if (name == "xyz") return PointFormat::Xyz;
  if (name == "off") return PointFormat::Off;
  if (name == "ply") return PointFormat::PlyAscii;
  throw std::invalid_argument("unknown point format '" + std::string(name) + "'");
}

PointSet read_points(std::istream& in, PointFormat format) {
  switch (format) {
    case PointFormat::Xyz:
      return read_xyz(in);
    case PointFormat::Off:
      return read_off(in);
    case PointFormat::PlyAscii:
      return read_ply(in);
  }
  throw std::invalid_argument("read_points: bad format");
}

PointSet read_points(const std::filesystem::path& path, PointFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return read_points(in, format);
}

void write_xyz(std::ostream& out, const PointSet& points) {
  for (std::size_t r = 0; r < points.size(); ++r) {
    auto p = points[r];
    for (std::size_t a = 0; a < p.size(); ++a) {
      if (a) out << ' ';
      out << format_double(p[a]);
    }
    out << '\n';
  }
}

std::string to_json(const ResultRecord& r) {
  nlohmann::json j;
  j["algorithm"] = r.algorithm;
  j["eps"] = r.eps;
  j["input"] = r.input;
  j["n"] = r.n;
  j["d"] = r.dim;
  j["seed"] = r.seed;
  j["pair"] = {r.best_first, r.best_second};
  j["distance"] = r.distance;
  j["stats"] = {{"pairs_created", r.stats.pairs_created},
                {"distance_evals", r.stats.distance_evaluations},
                {"nodes_built", r.stats.nodes_built},
                {"heap_ops", r.stats.heap_ops},
                {"wall_ms", r.stats.wall_ms}};
  return j.dump();
}

ResultRecord record_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  ResultRecord r;
  r.algorithm = j.at("algorithm").get<std::string>();
  r.eps = j.at("eps").get<double>();
  r.input = j.at("input").get<std::string>();
  r.n = j.at("n").get<std::size_t>();
  r.dim = j.at("d").get<std::size_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.best_first = j.at("pair").at(0).get<std::size_t>();
  r.best_second = j.at("pair").at(1).get<std::size_t>();
  r.distance = j.at("distance").get<double>();
  const auto& s = j.at("stats");
  r.stats.pairs_created = s.at("pairs_created").get<std::uint64_t>();
  r.stats.distance_evaluations = s.at("distance_evals").get<std::uint64_t>();
  r.stats.nodes_built = s.at("nodes_built").get<std::uint64_t>();
  r.stats.heap_ops = s.at("heap_ops").get<std::uint64_t>();
  r.stats.wall_ms = s.at("wall_ms").get<double>();
  return r;
}

std::string csv_header() {
  return "algorithm,eps,n,d,distance,i,j,pairs_created,distance_evals,nodes_built,heap_ops,"
         "wall_ms";
}

std::string to_csv_row(const ResultRecord& r) {
  std::ostringstream out;
  out << r.algorithm << ',' << format_double(r.eps) << ',' << r.n << ',' << r.dim << ','
      << format_double(r.distance) << ',' << r.best_first << ',' << r.best_second << ','
      << r.stats.pairs_created << ',' << r.stats.distance_evaluations << ','
      << r.stats.nodes_built << ',' << r.stats.heap_ops << ',' << format_double(r.stats.wall_ms);
  return out.str();
}

ResultRecord record_from_csv_row(const std::string& row) {
  std::vector<std::string> fields;
  std::stringstream ss(row);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (fields.size() != 12) throw std::runtime_error("csv row: expected 12 fields");
  ResultRecord r;
  r.algorithm = fields[0];
  r.eps = std::stod(fields[1]);
  r.n = std::stoull(fields[2]);
  r.dim = std::stoull(fields[3]);
  r.distance = std::stod(fields[4]);
  r.best_first = std::stoull(fields[5]);
  r.best_second = std::stoull(fields[6]);
  r.stats.pairs_created = std::stoull(fields[7]);
  r.stats.distance_evaluations = std::stoull(fields[8]);
  r.stats.nodes_built = std::stoull(fields[9]);
  r.stats.heap_ops = std::stoull(fields[10]);
  r.stats.wall_ms = std::stod(fields[11]);
  return r;
}

}  // namespace diam
