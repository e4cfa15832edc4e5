// Copyright 2026 The projtri Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <iostream>
#include <string>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>

#include "projtri/pipeline.hpp"
#include "projtri/selftest.hpp"

namespace {

using namespace projtri;

constexpr int kExitFailure = 1;
constexpr int kExitNoSeed = 2;
constexpr int kExitCollinear = 3;
constexpr int kExitInput = 4;
constexpr int kExitInvalid = 5;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::no_seed: return kExitNoSeed;
    case ErrorKind::collinear_obstruction: return kExitCollinear;
    case ErrorKind::parse_error:
    case ErrorKind::io_error: return kExitInput;
    default: return kExitFailure;
  }
}

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("projtri");
  logger->set_pattern("%^%l%$: %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("PROJTRI_LOG")) {
    const auto level = spdlog::level::from_str(env);
    if (level != spdlog::level::off || std::string(env) == "off") {
      spdlog::set_level(level);
    } else {
      spdlog::warn("ignoring PROJTRI_LOG={}", env);
    }
  }
}

void print_report(const ValidationReport& report) {
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << ": " << c.detail;
    if (!c.counterexamples.empty()) {
      std::cout << " [";
      for (std::size_t i = 0; i < c.counterexamples.size() && i < 10; ++i) {
        std::cout << (i ? " " : "") << c.counterexamples[i];
      }
      if (c.counterexamples.size() > 10) std::cout << " ...";
      std::cout << "]";
    }
    std::cout << "\n";
  }
  std::cout << "V=" << report.vertices << " E=" << report.edges
            << " F=" << report.faces << " chi=" << report.euler_characteristic
            << "\n";
}

struct TriangulateArgs {
  std::string input;
  std::string output;
  std::string arithmetic = "exact";
  double tolerance = 1e-12;
  std::string strategies = "linecover,exhaustive";
  std::optional<std::uint64_t> shuffle;
  std::string validation = "full";
  std::size_t samples = 10000;
  std::uint64_t sample_seed = 1;
  bool check_steps = false;
  std::string obj;
};

int run_triangulate(const TriangulateArgs& args) {
  PipelineConfig cfg;
  cfg.arithmetic = arithmetic_from_string(args.arithmetic);
  cfg.tolerance = args.tolerance;
  cfg.seed_strategies = parse_seed_strategies(args.strategies);
  cfg.shuffle = args.shuffle;
  cfg.validation = validation_level_from_string(args.validation);
  cfg.tiling_samples = args.samples;
  cfg.sample_seed = args.sample_seed;
  cfg.check_each_insertion = args.check_steps;

  const PointSetDocument points = read_point_set(args.input);
  spdlog::info("read {} points from {}", points.points.size(), args.input);
  const TriangulationDocument doc = triangulate(points, cfg);
  for (const auto& w : doc.warnings) spdlog::warn("{}", w);
  write_text(args.output, to_json(doc));
  if (!args.obj.empty()) write_text(args.obj, to_obj(doc));
  spdlog::info("wrote V={} E={} F={} to {}", doc.vertices.size(),
               doc.edge_count(), doc.faces.size(), args.output);
  if (doc.validation && !doc.validation->ok()) {
    print_report(*doc.validation);
    spdlog::error("output failed validation");
    return kExitInvalid;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Triangulations of the real projective plane"};
  app.require_subcommand(1);

  TriangulateArgs tri;
  auto* triangulate_cmd = app.add_subcommand("triangulate", "Triangulate a point set");
  triangulate_cmd->add_option("--input,-i", tri.input, "Point set JSON")->required();
  triangulate_cmd->add_option("--output,-o", tri.output, "Triangulation JSON")->required();
  triangulate_cmd->add_option("--arithmetic", tri.arithmetic, "exact or float")
      ->check(CLI::IsMember({"exact", "float"}));
  triangulate_cmd->add_option("--tolerance", tri.tolerance, "Float sign tolerance")
      ->check(CLI::PositiveNumber);
  triangulate_cmd->add_option("--seed-strategy", tri.strategies,
                              "Comma separated: linecover, exhaustive");
  triangulate_cmd->add_option("--shuffle", tri.shuffle, "Shuffle insertion order with this seed");
  triangulate_cmd->add_option("--validate", tri.validation, "off, fast or full")
      ->check(CLI::IsMember({"off", "fast", "full"}));
  triangulate_cmd->add_option("--samples", tri.samples, "Sphere tiling sample count");
  triangulate_cmd->add_option("--sample-seed", tri.sample_seed, "Sphere tiling sampler seed");
  triangulate_cmd->add_flag("--check-each-insertion", tri.check_steps,
                            "Run the fast checks after every insertion");
  triangulate_cmd->add_option("--obj", tri.obj, "Also write a Wavefront OBJ mesh");

  std::string validate_file;
  ValidationOptions validate_opts;
  auto* validate_cmd = app.add_subcommand("validate", "Check a triangulation file");
  validate_cmd->add_option("file", validate_file, "Triangulation JSON")->required();
  validate_cmd->add_option("--samples", validate_opts.tiling_samples, "Sphere tiling sample count");
  validate_cmd->add_option("--seed", validate_opts.seed, "Sphere tiling sampler seed");

  std::string render_file;
  std::string render_out;
  RenderOptions render_opts;
  auto* render_cmd = app.add_subcommand("render", "Draw a triangulation as SVG");
  render_cmd->add_option("file", render_file, "Triangulation JSON")->required();
  render_cmd->add_option("-o,--output", render_out, "SVG file")->required();
  render_cmd->add_option("--size", render_opts.size, "Image size in pixels")
      ->check(CLI::Range(64, 20000));

  SelftestOptions self_opts;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the oracle suite");
  selftest_cmd->add_option("--instances", self_opts.random_instances,
                           "Random predicate instances");
  selftest_cmd->add_option("--samples", self_opts.tiling_samples, "Sphere tiling sample count");
  selftest_cmd->add_option("--seed", self_opts.seed, "Random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*triangulate_cmd) return run_triangulate(tri);
    if (*validate_cmd) {
      const ValidationReport report =
          validate_document(read_triangulation(validate_file), validate_opts);
      print_report(report);
      return report.ok() ? 0 : kExitInvalid;
    }
    if (*render_cmd) {
      write_text(render_out, render_svg(read_triangulation(render_file), render_opts));
      return 0;
    }
    if (*selftest_cmd) {
      bool ok = true;
      for (const auto& r : run_selftest(self_opts)) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        ok = ok && r.passed;
      }
      return ok ? 0 : kExitFailure;
    }
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitFailure;
  }
  return kExitFailure;
}
