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

#include "projtri/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace projtri {
namespace {

using json = nlohmann::json;

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<std::uint64_t>())));
    return Rational(mpz_class(std::to_string(j.get<std::int64_t>())));
  }
  if (j.is_number_float()) return Rational(j.get<double>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorKind::parse_error, where + ": " + e.what());
    }
  }
  throw Error(ErrorKind::parse_error, where + ": expected a number or string");
}

Vec3<Rational> triple_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) {
    throw Error(ErrorKind::parse_error, where + ": expected three entries");
  }
  return {rational_from_json(j[0], where), rational_from_json(j[1], where),
          rational_from_json(j[2], where)};
}

json triple_to_json(const Vec3<Rational>& v, Arithmetic mode) {
  json out = json::array();
  for (const auto& c : v) {
    if (mode == Arithmetic::exact) {
      out.push_back(to_string(c));
    } else {
      out.push_back(c.get_d());
    }
  }
  return out;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io_error, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json report_to_json(const ValidationReport& report, ValidationLevel level) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"counterexamples", c.counterexamples},
                      {"detail", c.detail}});
  }
  return {{"level", std::string(to_string(level))},
          {"passed", report.ok()},
          {"checks", checks}};
}

json config_to_json(const PipelineConfig& cfg) {
  json strategies = json::array();
  for (auto s : cfg.seed_strategies) strategies.push_back(std::string(to_string(s)));
  return {{"arithmetic", std::string(to_string(cfg.arithmetic))},
          {"tolerance", cfg.tolerance},
          {"seed_strategies", strategies},
          {"shuffle", cfg.shuffle ? json(*cfg.shuffle) : json(nullptr)},
          {"sample_seed", cfg.sample_seed},
          {"tiling_samples", cfg.tiling_samples},
          {"validation", std::string(to_string(cfg.validation))},
          {"check_each_insertion", cfg.check_each_insertion}};
}

PipelineConfig config_from_json(const json& j) {
  PipelineConfig cfg;
  cfg.arithmetic = arithmetic_from_string(j.value("arithmetic", "exact"));
  cfg.tolerance = j.value("tolerance", 1e-12);
  if (j.contains("seed_strategies")) {
    cfg.seed_strategies.clear();
    for (const auto& s : j["seed_strategies"]) {
      cfg.seed_strategies.push_back(seed_strategy_from_string(s.get<std::string>()));
    }
  }
  if (j.contains("shuffle") && !j["shuffle"].is_null()) {
    cfg.shuffle = j["shuffle"].get<std::uint64_t>();
  }
  cfg.sample_seed = j.value("sample_seed", std::uint64_t{1});
  cfg.tiling_samples = j.value("tiling_samples", std::size_t{10000});
  cfg.validation = validation_level_from_string(j.value("validation", "full"));
  cfg.check_each_insertion = j.value("check_each_insertion", false);
  return cfg;
}

ValidationReport report_from_json(const json& j) {
  ValidationReport report;
  for (const auto& c : j.value("checks", json::array())) {
    report.checks.push_back({c.value("name", ""), c.value("passed", false),
                             c.value("counterexamples", std::vector<std::size_t>{}),
                             c.value("detail", "")});
  }
  return report;
}

/// Longest line through one of the first three points, counted exactly when
/// it holds all but at most two points.
template <Kernel K>
std::size_t long_line_hint(const std::vector<ProjectivePoint<K>>& pts,
                           const K& k) {
  const std::size_t n = pts.size();
  if (n < 3) return n;
  std::size_t best = 2;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < std::min<std::size_t>(4, n); ++j) {
      if (j == i) continue;
      std::size_t count = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (k.sign_det(pts[i].coords(), pts[j].coords(), pts[x].coords()) == 0) {
          ++count;
        }
      }
      best = std::max(best, count);
    }
  }
  return best;
}

template <Kernel K>
SeedSet search_seed(const std::vector<ProjectivePoint<K>>& pts,
                    const PipelineConfig& cfg, const K& k,
                    std::vector<std::string>& warnings) {
  const std::size_t n = pts.size();
  if (n < 6) {
    throw Error(ErrorKind::no_seed,
                "only " + std::to_string(n) +
                    " distinct points; at least six are needed");
  }
  for (SeedStrategy s : cfg.seed_strategies) {
    try {
      return s == SeedStrategy::linecover ? find_seed_linecover(pts, k)
                                          : find_seed_exhaustive(pts, k);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::no_seed) throw;
      warnings.push_back(std::string(to_string(s)) + " seed search failed");
    }
  }
  const std::size_t line = long_line_hint(pts, k);
  if (line == n - 2) {
    throw Error(ErrorKind::collinear_obstruction,
                std::to_string(line) + " of the " + std::to_string(n) +
                    " distinct points lie on one line; the two points off "
                    "it cannot complete a triangulation");
  }
  std::string why =
      line + 1 >= n
          ? std::to_string(line) + " of the " + std::to_string(n) +
                " distinct points lie on one line, so no six points with no "
                "three collinear exist"
          : "no six points with no three collinear were found; no search "
            "method is known to succeed on every input";
  throw Error(ErrorKind::no_seed, why);
}

template <Kernel K>
TriangulationDocument run(const PointSetDocument& input,
                          const PipelineConfig& cfg, const K& k) {
  using Point = ProjectivePoint<K>;
  using Coord = typename K::Coord;

  std::vector<std::string> warnings;
  std::vector<Point> pts;
  std::vector<std::size_t> origin;  // dedup index -> input index
  std::map<std::size_t, std::vector<std::size_t>> merged;
  {
    std::map<Vec3<Coord>, std::size_t> seen;
    for (std::size_t i = 0; i < input.points.size(); ++i) {
      Point p = Point::from_rational(input.points[i]);
      auto [it, inserted] = seen.emplace(p.coords(), pts.size());
      if (inserted) {
        pts.push_back(std::move(p));
        origin.push_back(i);
      } else {
        merged[origin[it->second]].push_back(i);
      }
    }
  }

  TriangulationDocument doc;
  const SeedSet seed = search_seed(pts, cfg, k, warnings);
  const CanonicalSet cs = find_canonical(pts, seed, k);
  Triangulation<K> tri = build_canonical(pts, cs, k);

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (std::find(seed.begin(), seed.end(), i) == seed.end()) order.push_back(i);
  }
  if (cfg.shuffle) {
    std::mt19937_64 rng(*cfg.shuffle);
    std::shuffle(order.begin(), order.end(), rng);
  }

  std::vector<VertexId> vertex_of(pts.size(), kNoVertex);
  for (VertexId v : tri.vertex_ids()) {
    vertex_of[static_cast<std::size_t>(tri.vertex(v).source)] = v;
  }
  VertexId last = vertex_of[cs.extras[1]];
  const ValidationOptions step_check{ValidationLevel::fast, 0, cfg.sample_seed, 1e-12};
  for (std::size_t i : order) {
    const auto source = static_cast<std::int64_t>(i);
    const WalkTrace trace = tri.locate(pts[i], last);
    switch (trace.status) {
      case WalkTrace::Status::found:
        last = tri.split_face(trace.face, pts[i], source).vertex;
        break;
      case WalkTrace::Status::on_edge:
        last = tri.split_edge(trace.edge, pts[i], source).vertex;
        break;
      case WalkTrace::Status::on_vertex: {
        const auto kept = static_cast<std::size_t>(tri.vertex(trace.vertex).source);
        merged[origin[kept]].push_back(origin[i]);
        last = trace.vertex;
        continue;
      }
    }
    vertex_of[i] = last;
    if (cfg.check_each_insertion) {
      const ValidationReport step = tri.validate(step_check);
      if (!step.ok()) {
        throw Error(ErrorKind::invalid_argument,
                    "structure invalid after inserting point " +
                        std::to_string(origin[i]));
      }
    }
  }

  doc = make_document(tri);
  for (auto& s : doc.sources) {
    if (s >= 0) s = static_cast<std::int64_t>(origin[static_cast<std::size_t>(s)]);
  }
  if (!input.labels.empty()) {
    for (auto s : doc.sources) {
      doc.labels.push_back(s >= 0 ? input.labels[static_cast<std::size_t>(s)] : "");
    }
  }
  for (auto& [kept, dups] : merged) {
    std::sort(dups.begin(), dups.end());
    std::vector<std::size_t> group{kept};
    group.insert(group.end(), dups.begin(), dups.end());
    std::string text = "merged duplicate point(s)";
    for (auto d : dups) text += " " + std::to_string(d);
    text += " into point " + std::to_string(kept);
    warnings.push_back(text);
    doc.merged_duplicates.push_back(std::move(group));
  }
  SeedSet seed_input;
  for (int i = 0; i < 6; ++i) seed_input[i] = origin[seed[i]];
  CanonicalSet cs_input{{origin[cs.quad[0]], origin[cs.quad[1]],
                         origin[cs.quad[2]], origin[cs.quad[3]]},
                        {origin[cs.extras[0]], origin[cs.extras[1]]}};
  doc.seed = seed_input;
  doc.canonical = cs_input;
  doc.warnings = std::move(warnings);
  doc.config = cfg;
  if (cfg.validation != ValidationLevel::off) {
    doc.validation = tri.validate(
        {cfg.validation, cfg.tiling_samples, cfg.sample_seed, 1e-12});
  }
  return doc;
}

template <Kernel K>
ValidationReport rebuild_and_validate(const TriangulationDocument& doc,
                                      const ValidationOptions& options,
                                      const K& k) {
  using Point = ProjectivePoint<K>;
  using Plane = DistinguishingPlane<K>;
  Triangulation<K> tri(k);
  std::vector<VertexId> ids;
  for (std::size_t i = 0; i < doc.vertices.size(); ++i) {
    const bool pseudo = i < doc.pseudo.size() && doc.pseudo[i];
    const std::int64_t source = i < doc.sources.size() ? doc.sources[i] : -1;
    ids.push_back(tri.add_vertex(Point::from_rational(doc.vertices[i]), pseudo, source));
  }
  for (std::size_t f = 0; f < doc.faces.size(); ++f) {
    const auto& t = doc.faces[f];
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      tri.record_malformed_face(t);
      continue;
    }
    std::optional<Plane> plane;
    if (f < doc.planes.size() && !is_zero(doc.planes[f])) {
      plane.emplace(K::from_rational(doc.planes[f]));
    }
    tri.add_face(ids[t[0]], ids[t[1]], ids[t[2]], plane);
  }
  return tri.validate(options);
}

Vec3<double> unit(const Vec3<double>& v) {
  const double n = norm(v);
  return n > 0 ? Vec3<double>{v[0] / n, v[1] / n, v[2] / n} : v;
}

Vec3<double> lerp(const Vec3<double>& a, const Vec3<double>& b, double t) {
  return {a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]),
          a[2] + t * (b[2] - a[2])};
}

Vec3<double> upper(const Vec3<double>& v) {
  return v[2] < 0 ? negated(v) : v;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v == 0 ? 0.0 : v);
  return buf;
}

}  // namespace

std::string_view to_string(SeedStrategy s) {
  return s == SeedStrategy::linecover ? "linecover" : "exhaustive";
}

SeedStrategy seed_strategy_from_string(std::string_view text) {
  if (text == "linecover") return SeedStrategy::linecover;
  if (text == "exhaustive") return SeedStrategy::exhaustive;
  throw Error(ErrorKind::invalid_argument,
              "unknown seed strategy '" + std::string(text) + "'");
}

std::vector<SeedStrategy> parse_seed_strategies(std::string_view text) {
  std::vector<SeedStrategy> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(seed_strategy_from_string(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) {
    throw Error(ErrorKind::invalid_argument, "empty seed strategy list");
  }
  return out;
}

void PipelineConfig::check() const {
  if (!(tolerance > 0) || !std::isfinite(tolerance)) {
    throw Error(ErrorKind::invalid_argument, "tolerance must be positive");
  }
  if (seed_strategies.empty()) {
    throw Error(ErrorKind::invalid_argument, "no seed strategy given");
  }
}

std::size_t TriangulationDocument::edge_count() const {
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& f : faces) {
    for (int i = 0; i < 3; ++i) {
      auto a = f[i], b = f[(i + 1) % 3];
      if (a != b) edges.emplace(std::min(a, b), std::max(a, b));
    }
  }
  return edges.size();
}

PointSetDocument parse_point_set(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) {
    throw Error(ErrorKind::parse_error, "expected an object with a \"points\" array");
  }
  PointSetDocument doc;
  const auto& points = j["points"];
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string where = "point " + std::to_string(i);
    Vec3<Rational> p = triple_from_json(points[i], where);
    if (is_zero(p)) throw Error(ErrorKind::parse_error, where + " is the zero vector");
    doc.points.push_back(std::move(p));
  }
  if (j.contains("labels")) {
    const auto& labels = j["labels"];
    if (!labels.is_array() || labels.size() != points.size()) {
      throw Error(ErrorKind::parse_error, "\"labels\" must match \"points\" in length");
    }
    for (const auto& l : labels) {
      if (!l.is_string()) throw Error(ErrorKind::parse_error, "labels must be strings");
      doc.labels.push_back(l.get<std::string>());
    }
  }
  return doc;
}

PointSetDocument read_point_set(const std::filesystem::path& path) {
  return parse_point_set(read_text(path));
}

std::string to_json(const PointSetDocument& doc) {
  json points = json::array();
  for (const auto& p : doc.points) points.push_back(triple_to_json(p, Arithmetic::exact));
  json out{{"points", points}};
  if (!doc.labels.empty()) out["labels"] = doc.labels;
  return out.dump(2) + "\n";
}

std::string to_json(const TriangulationDocument& doc) {
  json vertices = json::array();
  for (const auto& v : doc.vertices) vertices.push_back(triple_to_json(v, doc.arithmetic));
  json planes = json::array();
  for (const auto& p : doc.planes) planes.push_back(triple_to_json(p, doc.arithmetic));
  json out{{"arithmetic", std::string(to_string(doc.arithmetic))},
           {"vertices", vertices},
           {"faces", doc.faces},
           {"planes", planes},
           {"sources", doc.sources}};
  if (std::find(doc.pseudo.begin(), doc.pseudo.end(), true) != doc.pseudo.end()) {
    out["pseudo"] = doc.pseudo;
  }
  if (!doc.labels.empty()) out["labels"] = doc.labels;

  const std::size_t v = doc.vertices.size();
  const std::size_t e = doc.edge_count();
  const std::size_t f = doc.faces.size();
  json meta{{"counts", {{"vertices", v}, {"edges", e}, {"faces", f}}},
            {"euler_characteristic",
             static_cast<long>(v) - static_cast<long>(e) + static_cast<long>(f)},
            {"warnings", doc.warnings},
            {"merged_duplicates", doc.merged_duplicates}};
  if (doc.config) {
    meta["config"] = config_to_json(*doc.config);
  }
  if (doc.validation) {
    meta["validation"] = report_to_json(
        *doc.validation, doc.config ? doc.config->validation : ValidationLevel::full);
  }
  if (doc.seed) meta["seed"] = *doc.seed;
  if (doc.canonical) {
    meta["canonical_set"] = {{"quad", doc.canonical->quad},
                             {"extras", doc.canonical->extras}};
  }
  out["meta"] = meta;
  return out.dump(2) + "\n";
}

TriangulationDocument parse_triangulation(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("vertices") || !j.contains("faces")) {
    throw Error(ErrorKind::parse_error,
                "expected an object with \"vertices\" and \"faces\"");
  }
  TriangulationDocument doc;
  try {
    doc.arithmetic = arithmetic_from_string(j.value("arithmetic", "exact"));
    const auto& vertices = j["vertices"];
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const std::string where = "vertex " + std::to_string(i);
      Vec3<Rational> p = triple_from_json(vertices[i], where);
      if (is_zero(p)) throw Error(ErrorKind::parse_error, where + " is the zero vector");
      doc.vertices.push_back(std::move(p));
    }
    const std::size_t n = doc.vertices.size();
    for (const auto& face : j["faces"]) {
      if (!face.is_array() || face.size() != 3) {
        throw Error(ErrorKind::parse_error, "faces must be index triples");
      }
      std::array<std::size_t, 3> t{};
      for (int i = 0; i < 3; ++i) {
        if (!face[i].is_number_unsigned() || face[i].get<std::size_t>() >= n) {
          throw Error(ErrorKind::parse_error, "face index out of range");
        }
        t[i] = face[i].get<std::size_t>();
      }
      doc.faces.push_back(t);
    }
    if (j.contains("planes")) {
      const auto& planes = j["planes"];
      if (planes.size() != doc.faces.size()) {
        throw Error(ErrorKind::parse_error, "one plane per face expected");
      }
      for (std::size_t i = 0; i < planes.size(); ++i) {
        doc.planes.push_back(triple_from_json(planes[i], "plane " + std::to_string(i)));
      }
    } else {
      doc.planes.assign(doc.faces.size(), Vec3<Rational>{});
    }
    if (j.contains("pseudo")) doc.pseudo = j["pseudo"].get<std::vector<bool>>();
    if (j.contains("sources")) doc.sources = j["sources"].get<std::vector<std::int64_t>>();
    if (j.contains("labels")) doc.labels = j["labels"].get<std::vector<std::string>>();
    if (j.contains("meta")) {
      const auto& meta = j["meta"];
      doc.warnings = meta.value("warnings", std::vector<std::string>{});
      doc.merged_duplicates =
          meta.value("merged_duplicates", std::vector<std::vector<std::size_t>>{});
      if (meta.contains("config")) doc.config = config_from_json(meta["config"]);
      if (meta.contains("validation")) doc.validation = report_from_json(meta["validation"]);
      if (meta.contains("seed")) doc.seed = meta["seed"].get<SeedSet>();
      if (meta.contains("canonical_set")) {
        doc.canonical = CanonicalSet{
            meta["canonical_set"]["quad"].get<std::array<std::size_t, 4>>(),
            meta["canonical_set"]["extras"].get<std::array<std::size_t, 2>>()};
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse_error, e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::parse_error) throw;
    throw Error(ErrorKind::parse_error, e.what());
  }
  return doc;
}

TriangulationDocument read_triangulation(const std::filesystem::path& path) {
  return parse_triangulation(read_text(path));
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io_error, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::io_error, "write failed for " + path.string());
}

template <Kernel K>
TriangulationDocument make_document(const Triangulation<K>& tri) {
  TriangulationDocument doc;
  doc.arithmetic = K::arithmetic;
  std::vector<VertexId> ids = tri.vertex_ids();
  std::stable_sort(ids.begin(), ids.end(), [&](VertexId a, VertexId b) {
    const auto& va = tri.vertex(a);
    const auto& vb = tri.vertex(b);
    if (va.is_pseudo != vb.is_pseudo) return vb.is_pseudo;
    return va.source < vb.source;
  });
  std::vector<std::size_t> out_index(tri.vertex_capacity(), 0);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto& v = tri.vertex(ids[i]);
    out_index[index(ids[i])] = i;
    if constexpr (K::arithmetic == Arithmetic::exact) {
      doc.vertices.push_back(v.point.canonical_rational());
    } else {
      doc.vertices.push_back(K::to_rational(v.point.coords()));
    }
    doc.pseudo.push_back(v.is_pseudo);
    doc.sources.push_back(v.source);
  }
  std::vector<std::pair<std::array<std::size_t, 3>, Vec3<Rational>>> faces;
  for (FaceId f : tri.face_ids()) {
    const auto& face = tri.face(f);
    std::array<std::size_t, 3> t{out_index[index(face.v[0])],
                                 out_index[index(face.v[1])],
                                 out_index[index(face.v[2])]};
    std::sort(t.begin(), t.end());
    faces.emplace_back(t, face.plane ? K::to_rational(face.plane->normal())
                                     : Vec3<Rational>{});
  }
  std::sort(faces.begin(), faces.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [t, n] : faces) {
    doc.faces.push_back(t);
    doc.planes.push_back(n);
  }
  return doc;
}

template TriangulationDocument make_document<ExactKernel>(const Triangulation<ExactKernel>&);
template TriangulationDocument make_document<FloatKernel>(const Triangulation<FloatKernel>&);

TriangulationDocument triangulate(const PointSetDocument& points,
                                  const PipelineConfig& config) {
  config.check();
  if (!points.labels.empty() && points.labels.size() != points.points.size()) {
    throw Error(ErrorKind::invalid_argument, "labels do not match points");
  }
  if (config.arithmetic == Arithmetic::exact) {
    return run(points, config, ExactKernel{});
  }
  return run(points, config, FloatKernel{config.tolerance});
}

ValidationReport validate_document(const TriangulationDocument& doc,
                                   const ValidationOptions& options) {
  if (doc.arithmetic == Arithmetic::exact) {
    return rebuild_and_validate(doc, options, ExactKernel{});
  }
  const double tol = doc.config ? doc.config->tolerance : 1e-12;
  return rebuild_and_validate(doc, options, FloatKernel{tol});
}

std::string render_svg(const TriangulationDocument& doc,
                       const RenderOptions& options) {
  const ValidationReport report = validate_document(doc, options.validation);
  const double size = options.size;
  const double c = size / 2;
  const double radius = size / 2 - std::max(8.0, size / 40);
  auto x_of = [&](const Vec3<double>& v) { return fmt(c + radius * v[0]); };
  auto y_of = [&](const Vec3<double>& v) { return fmt(c - radius * v[1]); };

  std::vector<Vec3<double>> dirs;
  for (const auto& v : doc.vertices) dirs.push_back(unit(approximate_direction(v)));

  // One face per edge decides which copy of the edge is drawn.
  std::map<std::pair<std::size_t, std::size_t>, std::pair<Vec3<double>, Vec3<double>>> arcs;
  for (std::size_t f = 0; f < doc.faces.size(); ++f) {
    const auto& t = doc.faces[f];
    Vec3<double> n{};
    if (f < doc.planes.size() && !is_zero(doc.planes[f])) {
      n = approximate_direction(doc.planes[f]);
    }
    for (int i = 0; i < 3; ++i) {
      std::size_t a = t[i], b = t[(i + 1) % 3];
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      if (arcs.count({a, b})) continue;
      Vec3<double> u = dirs[a], w = dirs[b];
      if (is_zero(n)) {
        if (dot(u, w) < 0) w = negated(w);
      } else {
        if (dot(n, u) < 0) u = negated(u);
        if (dot(n, w) < 0) w = negated(w);
      }
      arcs[{a, b}] = {u, w};
    }
  }

  constexpr int kSteps = 24;
  std::vector<std::string> paths;
  auto polyline = [&](const Vec3<double>& u, const Vec3<double>& w, double t0,
                      double t1, double s, const std::optional<Vec3<double>>& end0,
                      const std::optional<Vec3<double>>& end1) {
    std::string d;
    const int steps = std::max(1, static_cast<int>(std::ceil(kSteps * (t1 - t0))));
    for (int i = 0; i <= steps; ++i) {
      Vec3<double> p;
      if (i == 0 && end0) {
        p = *end0;
      } else if (i == steps && end1) {
        p = *end1;
      } else {
        p = scaled(unit(lerp(u, w, t0 + (t1 - t0) * i / steps)), s);
      }
      d += (i == 0 ? "M" : " L") + x_of(p) + " " + y_of(p);
    }
    paths.push_back(d);
  };
  for (const auto& [key, arc] : arcs) {
    const auto& [u, w] = arc;
    if (u[2] * w[2] < 0) {
      const double t = u[2] / (u[2] - w[2]);
      Vec3<double> b = unit(lerp(u, w, t));
      b[2] = 0;
      const double s1 = u[2] > 0 ? 1 : -1;
      polyline(u, w, 0, t, s1, std::nullopt, scaled(b, s1));
      polyline(u, w, t, 1, -s1, scaled(b, -s1), std::nullopt);
    } else {
      const double z = u[2] != 0 ? u[2] : w[2];
      polyline(u, w, 0, 1, z < 0 ? -1 : 1, std::nullopt, std::nullopt);
    }
  }

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.size
      << "\" height=\"" << options.size << "\" viewBox=\"0 0 " << options.size
      << " " << options.size << "\">\n";
  svg << "<style>.horizon{fill:#fafafa;stroke:#444;stroke-width:1.5}"
         ".edge{fill:none;stroke:#1f4e79;stroke-width:1}"
         ".vertex{fill:#c0392b}.vertex.pseudo{fill:#fff;stroke:#7d3c98;"
         "stroke-width:2}.warning rect{fill:#fdecea;stroke:#c0392b}"
         ".warning text{fill:#c0392b;font:14px sans-serif}</style>\n";
  svg << "<circle class=\"horizon\" cx=\"" << fmt(c) << "\" cy=\"" << fmt(c)
      << "\" r=\"" << fmt(radius) << "\"/>\n";
  svg << "<g class=\"edges\">\n";
  for (const auto& d : paths) svg << "<path class=\"edge\" d=\"" << d << "\"/>\n";
  svg << "</g>\n<g class=\"vertices\">\n";
  const double r = std::max(2.0, size / 200);
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const Vec3<double> p = upper(dirs[i]);
    const bool pseudo = i < doc.pseudo.size() && doc.pseudo[i];
    svg << "<circle class=\"vertex" << (pseudo ? " pseudo" : "") << "\" cx=\""
        << x_of(p) << "\" cy=\"" << y_of(p) << "\" r=\"" << fmt(r)
        << "\"><title>" << i << "</title></circle>\n";
  }
  svg << "</g>\n";
  if (!report.ok()) {
    std::string failed;
    for (const auto& check : report.checks) {
      if (!check.passed) failed += (failed.empty() ? "" : ", ") + check.name;
    }
    svg << "<g class=\"warning\"><rect x=\"4\" y=\"4\" width=\"" << fmt(size - 8)
        << "\" height=\"24\"/><text x=\"10\" y=\"21\">validation failed: "
        << failed << "</text></g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string to_obj(const TriangulationDocument& doc) {
  std::ostringstream out;
  out << "# projective plane triangulation, topology only\n";
  char buf[96];
  for (const auto& v : doc.vertices) {
    const Vec3<double> p = upper(unit(approximate_direction(v)));
    std::snprintf(buf, sizeof buf, "v %.9f %.9f %.9f\n", p[0], p[1], p[2]);
    out << buf;
  }
  for (const auto& f : doc.faces) {
    out << "f " << f[0] + 1 << " " << f[1] + 1 << " " << f[2] + 1 << "\n";
  }
  return out.str();
}

}  // namespace projtri
