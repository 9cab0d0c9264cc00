#ifndef FLATNEST_PIPELINE_HPP
#define FLATNEST_PIPELINE_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flatnest/blowup.hpp"
#include "flatnest/building.hpp"
#include "flatnest/catalog.hpp"
#include "flatnest/complex.hpp"
#include "flatnest/error.hpp"
#include "flatnest/fan.hpp"
#include "flatnest/flat.hpp"
#include "flatnest/ground.hpp"
#include "flatnest/json_io.hpp"
#include "flatnest/oracle.hpp"

namespace flatnest {

enum class Path { flat, oracle, blowup, all };

inline Path parse_path(const std::string& s) {
  if (s == "flat") return Path::flat;
  if (s == "oracle") return Path::oracle;
  if (s == "blowup") return Path::blowup;
  if (s == "all") return Path::all;
  fail(ErrorKind::parse, "unknown path '" + s + "' (flat, oracle, blowup, all)");
}

inline std::string path_name(Path p) {
  switch (p) {
    case Path::flat:
      return "flat";
    case Path::oracle:
      return "oracle";
    case Path::blowup:
      return "blowup";
    case Path::all:
      return "all";
  }
  return {};
}

struct PipelineOptions {
  bool check_faithful = false;
  bool emit_bases = true;
  bool emit_fvector = true;
  bool emit_fan = false;
  Path path = Path::flat;
  unsigned threads = 1;
  std::size_t max_atoms = 6;
  std::size_t max_levels = 4;
};

/// Sets the emit flags from names among bases, fvector, fan.
inline void set_emit(PipelineOptions& o, const std::vector<std::string>& names) {
  o.emit_bases = o.emit_fvector = o.emit_fan = false;
  for (const auto& n : names) {
    if (n == "bases") {
      o.emit_bases = true;
    } else if (n == "fvector") {
      o.emit_fvector = true;
    } else if (n == "fan") {
      o.emit_fan = true;
    } else {
      fail(ErrorKind::parse, "unknown emit section '" + n + "' (bases, fvector, fan)");
    }
  }
}

struct Level {
  enum class Kind { building_set, flat, literal };
  Kind kind = Kind::flat;
  Hypergraph<SumVec> building_set;
  FlatBuildingSet flat;
  /// Each entry is the literal form of one member.
  std::vector<NestedElem> literal;
};

struct PipelineSpec {
  GroundSet ground;
  Complex host;
  std::vector<Level> levels;
  PipelineOptions options;
};

namespace detail {

inline const Json& require_field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::parse, where + ": missing \"" + key + "\"");
  return j[key];
}

inline Level parse_level(const GroundSet& g, const Json& j, std::size_t index) {
  const std::string where = "level " + std::to_string(index);
  if (!j.is_object() || j.size() != 1)
    fail(ErrorKind::parse, where + ": expected one of {\"building_set\"}, {\"flat\"}, {\"literal\"}");
  Level level;
  if (j.contains("building_set")) {
    if (index != 0) fail(ErrorKind::parse, where + ": \"building_set\" is only allowed as the first level");
    level.kind = Level::Kind::building_set;
    const auto& members = j["building_set"];
    if (!members.is_array()) fail(ErrorKind::parse, where + ": \"building_set\" must be an array of faces");
    std::vector<Face> faces;
    for (const auto& m : members) faces.push_back(face_from_json(g, m));
    level.building_set = Hypergraph<SumVec>(std::move(faces));
  } else if (j.contains("flat")) {
    level.kind = Level::Kind::flat;
    const auto& raw = j["flat"];
    const auto& members = raw.is_object() && raw.contains("members") ? raw["members"] : raw;
    if (!members.is_array()) fail(ErrorKind::parse, where + ": \"flat\" must be an array of sums");
    std::vector<SumVec> sums;
    for (const auto& m : members) sums.push_back(sum_from_json(g, m));
    level.flat = FlatBuildingSet(std::move(sums));
  } else if (j.contains("literal")) {
    level.kind = Level::Kind::literal;
    const auto& members = j["literal"];
    if (!members.is_array()) fail(ErrorKind::parse, where + ": \"literal\" must be an array of strings");
    for (const auto& m : members) {
      if (!m.is_string()) fail(ErrorKind::parse, where + ": literal members are curly-brace strings");
      auto e = parse_literal(g, m.get<std::string>());
      if (e.is_atom()) fail(ErrorKind::parse, where + ": a literal member must be a set");
      level.literal.push_back(e);
    }
  } else {
    fail(ErrorKind::parse, where + ": expected one of {\"building_set\"}, {\"flat\"}, {\"literal\"}");
  }
  return level;
}

}  // namespace detail

/// Reads a pipeline spec:
///
///   {"atoms": [...],                                  optional with a preset
///    "host": {"preset": "simplex-3"} | {"bases": [[sum, ...], ...]},
///    "levels": [{"building_set": [[sum, ...], ...]}   first level only
///               | {"flat": [sum, ...]}
///               | {"literal": ["{{x},{x,y}}", ...]}, ...],
///    "options": {"check_faithful": bool, "emit": [...], "path": "...", "threads": n}}
inline PipelineSpec parse_spec(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::parse, "a pipeline spec is a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "atoms" && key != "host" && key != "levels" && key != "options")
      fail(ErrorKind::parse, "unknown key \"" + key + "\"");
  PipelineSpec spec;
  const auto& host = detail::require_field(j, "host", "spec");
  if (host.is_object() && host.contains("preset")) {
    if (!host["preset"].is_string()) fail(ErrorKind::parse, "host: \"preset\" must be a string");
    auto preset = facet_complex_preset(host["preset"].get<std::string>());
    if (j.contains("atoms") && !(atoms_from_json(j["atoms"]) == preset.ground))
      fail(ErrorKind::parse, "\"atoms\" disagree with the preset's atoms");
    spec.ground = std::move(preset.ground);
    spec.host = std::move(preset.complex);
  } else if (host.is_object() && host.contains("bases")) {
    spec.ground = atoms_from_json(detail::require_field(j, "atoms", "spec"));
    if (!host["bases"].is_array()) fail(ErrorKind::parse, "host: \"bases\" must be an array");
    std::vector<Face> faces;
    for (const auto& f : host["bases"]) faces.push_back(face_from_json(spec.ground, f));
    spec.host = Complex(std::move(faces));
  } else {
    fail(ErrorKind::parse, "host: expected {\"preset\": name} or {\"bases\": [...]}");
  }
  if (j.contains("levels")) {
    if (!j["levels"].is_array()) fail(ErrorKind::parse, "\"levels\" must be an array");
    for (std::size_t i = 0; i < j["levels"].size(); ++i)
      spec.levels.push_back(detail::parse_level(spec.ground, j["levels"][i], i));
  }
  if (j.contains("options")) {
    const auto& o = j["options"];
    if (!o.is_object()) fail(ErrorKind::parse, "\"options\" must be an object");
    for (const auto& [key, value] : o.items()) {
      if (key == "check_faithful") {
        if (!value.is_boolean()) fail(ErrorKind::parse, "options.check_faithful must be a boolean");
        spec.options.check_faithful = value.get<bool>();
      } else if (key == "emit") {
        if (!value.is_array()) fail(ErrorKind::parse, "options.emit must be an array");
        std::vector<std::string> names;
        for (const auto& n : value) {
          if (!n.is_string()) fail(ErrorKind::parse, "options.emit entries are strings");
          names.push_back(n.get<std::string>());
        }
        set_emit(spec.options, names);
      } else if (key == "path") {
        if (!value.is_string()) fail(ErrorKind::parse, "options.path must be a string");
        spec.options.path = parse_path(value.get<std::string>());
      } else if (key == "threads") {
        if (!value.is_number_unsigned() || value.get<unsigned>() == 0)
          fail(ErrorKind::parse, "options.threads must be a positive integer");
        spec.options.threads = value.get<unsigned>();
      } else {
        fail(ErrorKind::parse, "unknown option \"" + key + "\"");
      }
    }
  }
  return spec;
}

/// Bases only in one of two complexes, in canonical order.
struct ComplexDiff {
  std::vector<Face> only_left;
  std::vector<Face> only_right;
  bool empty() const { return only_left.empty() && only_right.empty(); }
  std::size_t size() const { return only_left.size() + only_right.size(); }
};

inline ComplexDiff diff_complexes(const Complex& a, const Complex& b) {
  ComplexDiff d;
  std::set_difference(a.bases().begin(), a.bases().end(), b.bases().begin(), b.bases().end(),
                      std::back_inserter(d.only_left));
  std::set_difference(b.bases().begin(), b.bases().end(), a.bases().begin(), a.bases().end(),
                      std::back_inserter(d.only_right));
  return d;
}

inline Json diff_to_json(const GroundSet& g, const ComplexDiff& d) {
  Json out = Json::object();
  out["equal"] = d.empty();
  out["count"] = d.size();
  Json l = Json::array(), r = Json::array();
  for (const auto& f : d.only_left) l.push_back(face_to_json(g, f));
  for (const auto& f : d.only_right) r.push_back(face_to_json(g, f));
  out["only_left"] = std::move(l);
  out["only_right"] = std::move(r);
  return out;
}

/// One stage per level, for each path that ran.
struct PathRun {
  std::vector<Complex> stages;
  std::vector<LiteralComplex> literal_stages;
};

namespace detail {

inline void require_faithful(const GroundSet& g, const Complex& c, unsigned threads, const std::string& what) {
  auto report = faithfully_realizes(c, threads);
  if (!report.faithful)
    fail(ErrorKind::validation, what + " is not faithfully realized: " + describe_witness(g, *report.witness));
}

/// The level as an atomic building set over the current flat complex.
inline Hypergraph<SumVec> level_building_set(const GroundSet& g, const Level& level, const Complex& current) {
  switch (level.kind) {
    case Level::Kind::building_set:
      return level.building_set;
    case Level::Kind::flat:
      if (auto v = flat_building_set_violation(level.flat, current))
        fail(ErrorKind::validation, "not a flat building set: " + v->describe(g));
      return from_flat(level.flat, current);
    case Level::Kind::literal: {
      std::vector<Face> members;
      for (const auto& e : level.literal) {
        std::vector<SumVec> face;
        for (const auto& m : e.members()) face.push_back(flatten(m, g.size()));
        members.emplace_back(std::move(face));
      }
      return Hypergraph<SumVec>(std::move(members));
    }
  }
  return {};
}

template <class Fn>
auto at_level(std::size_t i, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.kind(), "level " + std::to_string(i) + ": " + e.what());
  }
}

inline PathRun run_flat(const PipelineSpec& spec) {
  PathRun run;
  Complex current = spec.host;
  for (std::size_t i = 0; i < spec.levels.size(); ++i) {
    current = at_level(i, [&] {
      if (spec.options.check_faithful)
        require_faithful(spec.ground, current, spec.options.threads, i == 0 ? "host" : "input complex");
      const auto& level = spec.levels[i];
      FlatBuildingSet d;
      if (level.kind == Level::Kind::flat) {
        d = level.flat;
      } else {
        const auto b = level_building_set(spec.ground, level, current);
        require_building_set(b, current);
        d = to_flat(b, current);
      }
      return et(current, d, EtOptions{false, spec.options.threads});
    });
    run.stages.push_back(current);
  }
  return run;
}

inline PathRun run_blowup(const PipelineSpec& spec) {
  PathRun run;
  Complex current = spec.host;
  for (std::size_t i = 0; i < spec.levels.size(); ++i) {
    current = at_level(i, [&] {
      if (spec.options.check_faithful)
        require_faithful(spec.ground, current, spec.options.threads, i == 0 ? "host" : "input complex");
      return sb_via_blowups(current, level_building_set(spec.ground, spec.levels[i], current));
    });
    run.stages.push_back(current);
  }
  return run;
}

inline PathRun run_oracle(const PipelineSpec& spec) {
  PathRun run;
  const std::size_t dim = spec.ground.size();
  OracleLimits limits;
  if (dim > limits.max_atoms)
    fail(ErrorKind::cap_exceeded, "oracle limited to " + std::to_string(limits.max_atoms) + " atoms");
  if (spec.levels.size() > limits.max_levels)
    fail(ErrorKind::cap_exceeded, "oracle limited to " + std::to_string(limits.max_levels) + " levels");
  LiteralComplex lit = literal_host(spec.host);
  Complex flat = spec.host;
  for (std::size_t i = 0; i < spec.levels.size(); ++i) {
    lit = at_level(i, [&] {
      const auto& level = spec.levels[i];
      LevelSpec b;
      if (level.kind == Level::Kind::literal) {
        std::vector<SortedSet<NestedElem>> members;
        for (const auto& e : level.literal) members.push_back(e.members());
        b = LevelSpec(std::move(members));
      } else {
        b = literal_level(level_building_set(spec.ground, level, flat), lit, dim);
      }
      return literal_nt(lit, b, limits);
    });
    flat = at_level(i, [&] { return flatten_complex(lit, dim); });
    run.literal_stages.push_back(lit);
    run.stages.push_back(flat);
  }
  return run;
}

}  // namespace detail

/// Outcome of run(): the report and the exit status it calls for.
struct RunResult {
  Json report;
  int exit_code = 0;
};

namespace detail {

inline Json stage_json(const GroundSet& g, const PipelineOptions& o, std::size_t level, const Complex& c,
                       const LiteralComplex* literal) {
  Json s = Json::object();
  s["level"] = level;
  s["basis_count"] = c.basis_count();
  s["vertex_count"] = c.vertices().size();
  if (o.emit_fvector) s["fvector"] = f_vector(c);
  if (o.emit_bases) {
    s["bases"] = bases_to_json(g, c);
    if (literal) s["literal_bases"] = literal_bases_to_json(g, *literal);
  }
  return s;
}

}  // namespace detail

/// Runs the requested path(s). Under "all", the oracle and blowup stages are
/// compared with the flat stages and the first differing stage is reported.
inline RunResult run(const PipelineSpec& spec, bool emit_literal = false) {
  const auto& o = spec.options;
  if (spec.ground.size() > o.max_atoms)
    fail(ErrorKind::cap_exceeded, "spec has " + std::to_string(spec.ground.size()) + " atoms; the limit is " +
                                      std::to_string(o.max_atoms));
  if (spec.levels.size() > o.max_levels)
    fail(ErrorKind::cap_exceeded, "spec has " + std::to_string(spec.levels.size()) + " levels; the limit is " +
                                      std::to_string(o.max_levels));
  if (o.check_faithful && spec.levels.empty()) detail::require_faithful(spec.ground, spec.host, o.threads, "host");

  RunResult result;
  Json& r = result.report;
  r = Json::object();
  r["atoms"] = atoms_to_json(spec.ground);
  r["path"] = path_name(o.path);
  Json host = Json::object();
  host["basis_count"] = spec.host.basis_count();
  host["vertex_count"] = spec.host.vertices().size();
  if (o.emit_fvector) host["fvector"] = f_vector(spec.host);
  r["host"] = std::move(host);

  PathRun primary;
  const bool literal_primary = o.path == Path::oracle;
  switch (o.path) {
    case Path::flat:
    case Path::all:
      primary = detail::run_flat(spec);
      break;
    case Path::oracle:
      primary = detail::run_oracle(spec);
      break;
    case Path::blowup:
      primary = detail::run_blowup(spec);
      break;
  }

  Json stages = Json::array();
  for (std::size_t i = 0; i < primary.stages.size(); ++i)
    stages.push_back(detail::stage_json(spec.ground, o, i, primary.stages[i],
                                        literal_primary && emit_literal ? &primary.literal_stages[i] : nullptr));
  r["stages"] = std::move(stages);

  const Complex& final_complex = primary.stages.empty() ? spec.host : primary.stages.back();
  if (o.emit_fan) r["fan"] = fan_to_json(fan_export(final_complex, o.threads));

  if (o.path == Path::all) {
    Json cmp = Json::object();
    for (Path other : {Path::oracle, Path::blowup}) {
      const PathRun alt = other == Path::oracle ? detail::run_oracle(spec) : detail::run_blowup(spec);
      Json entry = Json::object();
      entry["equal"] = true;
      for (std::size_t i = 0; i < alt.stages.size(); ++i) {
        auto d = diff_complexes(primary.stages[i], alt.stages[i]);
        if (!d.empty()) {
          entry["equal"] = false;
          entry["level"] = i;
          entry["diff"] = diff_to_json(spec.ground, d);
          result.exit_code = 3;
          break;
        }
      }
      cmp[path_name(other)] = std::move(entry);
    }
    r["comparison"] = std::move(cmp);
  }
  return result;
}

/// Exit status for a failure of the given kind.
inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::mismatch:
      return 3;
    case ErrorKind::cap_exceeded:
      return 4;
    default:
      return 2;
  }
}

/// The pipeline spec of a catalog entry. Besides the facet-complex presets:
///
///   permutohedron-n   B⊤ on the boundary of the n-simplex
///   associahedron-n   the path graph x1 - ... - x(n+1) on that boundary
///   pa-n              the two levels of the permutohedron-based associahedron
inline Json catalog_spec(const std::string& name) {
  Json spec = Json::object();
  auto numbered = [&](const std::string& prefix) {
    return detail::preset_size(name, prefix, 1);
  };
  auto simplex_spec = [&](std::size_t n) {
    auto preset = facet_complex_preset("simplex-" + std::to_string(n));
    spec["atoms"] = atoms_to_json(preset.ground);
    Json host = Json::object();
    host["preset"] = "simplex-" + std::to_string(n);
    spec["host"] = std::move(host);
    return preset;
  };
  if (name.starts_with("permutohedron-")) {
    auto preset = simplex_spec(numbered("permutohedron-"));
    Json level = Json::object();
    level["flat"] = flat_to_json(preset.ground, to_flat(b_top(preset.complex), preset.complex));
    spec["levels"] = Json::array({level});
  } else if (name.starts_with("associahedron-")) {
    auto preset = simplex_spec(numbered("associahedron-"));
    std::vector<std::pair<SumVec, SumVec>> edges;
    for (std::size_t i = 0; i + 1 < preset.ground.size(); ++i)
      edges.emplace_back(SumVec::unit(preset.ground.size(), i), SumVec::unit(preset.ground.size(), i + 1));
    Json level = Json::object();
    level["building_set"] = hypergraph_to_json(preset.ground, graph_building_set(preset.complex, edges));
    spec["levels"] = Json::array({level});
  } else if (name.starts_with("pa-")) {
    auto preset = simplex_spec(numbered("pa-"));
    auto [top, d] = pa_levels(preset.ground);
    Json l0 = Json::object(), l1 = Json::object();
    l0["flat"] = flat_to_json(preset.ground, to_flat(top, preset.complex));
    l1["flat"] = flat_to_json(preset.ground, d);
    spec["levels"] = Json::array({l0, l1});
  } else {
    auto preset = facet_complex_preset(name);
    spec["atoms"] = atoms_to_json(preset.ground);
    Json host = Json::object();
    host["preset"] = name;
    spec["host"] = std::move(host);
    spec["levels"] = Json::array();
  }
  Json options = Json::object();
  options["emit"] = Json::array({"bases", "fvector"});
  options["path"] = "flat";
  spec["options"] = std::move(options);
  return spec;
}

}  // namespace flatnest

#endif  // FLATNEST_PIPELINE_HPP
