#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diam/bench.hpp"
#include "diam/generators.hpp"
#include "diam/pointcloud_io.hpp"
#include "diam/svg_snapshot.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("DIAM_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

struct InputSource {
  std::string path;
  std::string format = "xyz";
  std::string gen;
};

diam::PointSet load_input(const InputSource& src, std::uint64_t seed, std::string& label) {
  if (!src.gen.empty()) {
    diam::GenSpec spec = diam::parse_gen_spec(src.gen);
    if (src.gen.find("seed=") == std::string::npos) spec.seed = seed;
    label = diam::describe(spec);
    return diam::generate(spec);
  }
  if (src.path.empty()) throw UsageError("no input: pass --in or --gen");
  label = src.path;
  return diam::read_points(std::filesystem::path(src.path), diam::format_from_name(src.format));
}

diam::Algorithm parse_algorithm(const std::string& name) {
  auto algo = diam::algorithm_from_name(name);
  if (!algo) throw UsageError("unknown algorithm '" + name + "'");
  return *algo;
}

void check_eps(diam::Algorithm algo, double eps) {
  if (eps < 0.0) throw UsageError("eps must be >= 0");
  if (eps == 0.0 && diam::algorithm_requires_positive_eps(algo))
    throw UsageError(std::string(diam::algorithm_name(algo)) + " requires --eps > 0");
}

diam::ResultRecord make_record(const std::string& algo_name, double eps,
                               const std::string& input, std::uint64_t seed,
                               const diam::PointSet& points, const diam::DiameterResult& res) {
  diam::ResultRecord rec;
  rec.algorithm = algo_name;
  rec.eps = eps;
  rec.input = input;
  rec.n = points.size();
  rec.dim = points.dim();
  rec.seed = seed;
  rec.best_first = res.first;
  rec.best_second = res.second;
  rec.distance = res.distance;
  rec.stats = res.stats;
  return rec;
}

int cmd_compute(const InputSource& src, const std::string& algo_name, double eps,
                std::uint64_t seed, const std::string& out_format, bool trace_flag) {
  diam::Algorithm algo = parse_algorithm(algo_name);
  check_eps(algo, eps);
  std::string label;
  diam::PointSet points = load_input(src, seed, label);
  diam::RunTrace trace;
  diam::DiameterResult res =
      diam::run_algorithm(points, algo, eps, trace_flag ? &trace : nullptr);
  diam::ResultRecord rec = make_record(algo_name, diam::algorithm_uses_eps(algo) ? eps : 0.0,
                                       label, seed, points, res);
  if (out_format == "csv") {
    std::cout << diam::csv_header() << '\n' << diam::to_csv_row(rec) << '\n';
  } else {
    std::string json = diam::to_json(rec);
    if (trace_flag) {
      json.pop_back();  // splice the event count into the object
      json += ",\"trace_events\":" + std::to_string(trace.events.size()) + "}";
    }
    std::cout << json << '\n';
  }
  return 0;
}

int cmd_bench(const std::vector<std::string>& ins, const std::string& format,
              const std::vector<std::string>& gens, const std::vector<std::string>& algo_names,
              std::vector<double> eps_values, std::size_t repetitions, std::size_t oracle_cutoff,
              std::uint64_t seed, const std::string& out_format) {
  diam::BenchConfig config;
  config.repetitions = repetitions;
  config.oracle_cutoff = oracle_cutoff;
  for (const auto& path : ins) {
    InputSource src;
    src.path = path;
    src.format = format;
    std::string label;
    diam::PointSet points = load_input(src, seed, label);
    config.inputs.push_back({label, std::move(points)});
  }
  for (const auto& gen : gens) {
    InputSource src;
    src.gen = gen;
    std::string label;
    diam::PointSet points = load_input(src, seed, label);
    config.inputs.push_back({label, std::move(points)});
  }
  if (config.inputs.empty()) throw UsageError("bench: no inputs (--in/--gen)");
  if (algo_names.empty()) throw UsageError("bench: no algorithms (--algo)");
  for (const auto& name : algo_names) config.algorithms.push_back(parse_algorithm(name));
  config.eps_values = std::move(eps_values);

  std::vector<diam::BenchCell> cells = diam::run_bench(config);
  if (out_format == "md")
    std::cout << diam::bench_to_markdown(cells);
  else
    std::cout << diam::bench_to_csv(cells);
  return 0;
}

int cmd_gen(const std::string& gen, std::uint64_t seed, const std::string& out_file) {
  if (gen.empty()) throw UsageError("gen: pass --gen FAMILY:k=v:...");
  InputSource src;
  src.gen = gen;
  std::string label;
  diam::PointSet points = load_input(src, seed, label);
  std::ostringstream body;
  body << "# " << label << " prng=" << diam::kPrngId << '\n';
  diam::write_xyz(body, points);
  if (out_file.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_file);
    if (!out) throw std::runtime_error("cannot write '" + out_file + "'");
    out << body.str();
  }
  return 0;
}

int cmd_snapshot(const InputSource& src, const std::string& algo_name, double eps,
                 std::uint64_t seed, std::size_t every, const std::string& out_dir,
                 const std::string& plane) {
  diam::Algorithm algo = parse_algorithm(algo_name);
  check_eps(algo, eps);
  std::string label;
  diam::PointSet points = load_input(src, seed, label);

  diam::SnapshotOptions options;
  options.every = every;
  if (points.dim() < 2) throw UsageError("snapshot: input must have dimension >= 2");
  if (points.dim() > 2 || !plane.empty()) {
    if (plane == "xy" || plane.empty()) {
      options.axis_x = 0;
      options.axis_y = 1;
    } else if (plane == "xz") {
      options.axis_x = 0;
      options.axis_y = 2;
    } else if (plane == "yz") {
      options.axis_x = 1;
      options.axis_y = 2;
    } else {
      throw UsageError("snapshot: --plane must be xy, xz or yz");
    }
    if (points.dim() == 2 && (options.axis_x > 1 || options.axis_y > 1))
      throw UsageError("snapshot: plane " + plane + " needs a 3d input");
    if (points.dim() > 2 && plane.empty())
      throw UsageError("snapshot: 3d input needs --plane xy|xz|yz");
  }

  diam::RunTrace trace;
  diam::run_algorithm(points, algo, eps, &trace);
  std::vector<diam::SnapshotFrame> frames = diam::render_snapshots(points, trace, options);

  std::filesystem::create_directories(out_dir);
  for (std::size_t i = 0; i < frames.size(); ++i) {
    std::ostringstream name;
    name << "frame_" << std::setw(4) << std::setfill('0') << i << ".svg";
    std::ofstream out(std::filesystem::path(out_dir) / name.str());
    if (!out) throw std::runtime_error("cannot write frame in '" + out_dir + "'");
    out << frames[i].svg;
  }
  std::cout << frames.size() << " frames, " << trace.events.size() << " events\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"point-set diameter toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = default_seed();
  app.add_option("--seed", seed, "default generator seed (env DIAM_SEED)");

  InputSource src;
  std::string algo_name, out_format = "json", plane, out_file, out_dir = "snapshots";
  double eps = 0.0;
  bool trace_flag = false;
  std::size_t every = 100, repetitions = 1, oracle_cutoff = 5000;
  std::vector<std::string> bench_ins, bench_gens, bench_algos;
  std::vector<double> bench_eps;

  auto* compute = app.add_subcommand("compute", "run one algorithm on one input");
  compute->add_option("--in", src.path, "input point file");
  compute->add_option("--format", src.format, "xyz|off|ply")->default_str("xyz");
  compute->add_option("--gen", src.gen, "generator spec FAMILY:k=v:...");
  compute->add_option("--algo", algo_name, "algorithm name")->required();
  compute->add_option("--eps", eps, "approximation parameter");
  compute->add_option("--out", out_format, "json|csv")->default_str("json");
  compute->add_flag("--trace", trace_flag, "collect a trace and report its size");

  auto* bench = app.add_subcommand("bench", "run an algorithm/eps/input matrix");
  bench->add_option("--in", bench_ins, "input point files");
  bench->add_option("--format", src.format, "xyz|off|ply")->default_str("xyz");
  bench->add_option("--gen", bench_gens, "generator specs");
  bench->add_option("--algo", bench_algos, "algorithm names")->delimiter(',');
  bench->add_option("--eps", bench_eps, "eps values")->delimiter(',');
  bench->add_option("--repetitions", repetitions, "runs per cell (median reported)");
  bench->add_option("--oracle-cutoff", oracle_cutoff, "validate inline when n <= cutoff");
  bench->add_option("--out", out_format, "csv|md")->default_str("csv");

  auto* gen = app.add_subcommand("gen", "emit a synthetic point set as xyz");
  gen->add_option("--gen", src.gen, "generator spec FAMILY:k=v:...")->required();
  gen->add_option("--out-file", out_file, "write here instead of stdout");

  auto* snapshot = app.add_subcommand("snapshot", "render refinement frames as SVG");
  snapshot->add_option("--in", src.path, "input point file");
  snapshot->add_option("--format", src.format, "xyz|off|ply")->default_str("xyz");
  snapshot->add_option("--gen", src.gen, "generator spec");
  snapshot->add_option("--algo", algo_name, "algorithm name")->required();
  snapshot->add_option("--eps", eps, "approximation parameter");
  snapshot->add_option("--every", every, "trace events per frame");
  snapshot->add_option("--out-dir", out_dir, "frame output directory");
  snapshot->add_option("--plane", plane, "projection plane for 3d inputs: xy|xz|yz");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (compute->parsed())
      return cmd_compute(src, algo_name, eps, seed, out_format, trace_flag);
    if (bench->parsed())
      return cmd_bench(bench_ins, src.format, bench_gens, bench_algos, bench_eps, repetitions,
                       oracle_cutoff, seed, out_format == "json" ? "csv" : out_format);
    if (gen->parsed()) return cmd_gen(src.gen, seed, out_file);
    if (snapshot->parsed())
      return cmd_snapshot(src, algo_name, eps, seed, every, out_dir, plane);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
