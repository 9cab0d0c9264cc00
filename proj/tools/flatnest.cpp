#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flatnest/flatnest.hpp"

using namespace flatnest;

namespace {

constexpr int exit_usage = 1;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::invalid_argument, "cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::parse, (source.empty() ? std::string("<stdin>") : source) + ": " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::invalid_argument, "cannot write '" + path + "'");
  out << text;
}

std::vector<std::string> split_commas(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

struct RunFlags {
  std::string input;
  std::string output;
  std::vector<std::string> emit;
  std::string expect;
  std::string path;
  std::size_t max_atoms = 6;
  std::size_t max_levels = 4;
  unsigned threads = 0;
  bool check_faithful = false;
};

void add_run_flags(CLI::App* cmd, RunFlags& f, bool with_path) {
  cmd->add_option("-i,--input", f.input, "Pipeline spec (JSON); '-' or absent reads stdin");
  cmd->add_option("-o,--output", f.output, "Report destination; stdout when absent");
  cmd->add_option("--emit", f.emit, "Report sections: bases, fvector, fan (comma separated)");
  cmd->add_option("--expect", f.expect, "Golden report; exit 3 if the report differs");
  if (with_path) cmd->add_option("--path", f.path, "flat, oracle, blowup or all (overrides the spec)");
  cmd->add_option("--max-atoms", f.max_atoms, "Largest accepted ground set")->capture_default_str();
  cmd->add_option("--max-levels", f.max_levels, "Largest accepted number of levels")->capture_default_str();
  cmd->add_option("--threads", f.threads, "Worker threads for per-basis work (overrides the spec)");
  cmd->add_flag("--check-faithful", f.check_faithful, "Verify each input complex spans a fan before a level");
}

int finish(const Json& report, int code, const RunFlags& f) {
  write_output(f.output, dump(report));
  if (!f.expect.empty()) {
    const Json golden = parse_json(read_input(f.expect), f.expect);
    if (golden != report) {
      std::cerr << "error: report differs from " << f.expect << "\n";
      return 3;
    }
  }
  return code;
}

int cmd_run(const RunFlags& f, bool oracle) {
  auto spec = parse_spec(parse_json(read_input(f.input), f.input));
  spec.options.max_atoms = f.max_atoms;
  spec.options.max_levels = f.max_levels;
  if (!f.emit.empty()) set_emit(spec.options, split_commas(f.emit));
  if (!f.path.empty()) spec.options.path = parse_path(f.path);
  if (f.threads) spec.options.threads = f.threads;
  if (f.check_faithful) spec.options.check_faithful = true;
  if (oracle) {
    spec.options.path = Path::oracle;
    spec.options.threads = 1;
  }
  auto result = run(spec, oracle);
  return finish(result.report, result.exit_code, f);
}

int cmd_check_fan(const RunFlags& f) {
  auto [g, c] = complex_from_json(parse_json(read_input(f.input), f.input));
  const unsigned threads = f.threads ? f.threads : 1;
  auto report = faithfully_realizes(c, threads);
  Json out = Json::object();
  out["faithful"] = report.faithful;
  if (report.witness) out["witness"] = witness_to_json(g, *report.witness);
  const auto emit = split_commas(f.emit);
  if (report.faithful && std::find(emit.begin(), emit.end(), "fan") != emit.end())
    out["fan"] = fan_to_json(fan_export(c, threads));
  return finish(out, report.faithful ? 0 : 2, f);
}

int cmd_blowup_order(const RunFlags& f) {
  auto spec = parse_spec(parse_json(read_input(f.input), f.input));
  if (spec.levels.empty()) fail(ErrorKind::invalid_argument, "blowup-order needs a first level");
  const auto& level = spec.levels.front();
  Hypergraph<SumVec> b;
  if (level.kind == Level::Kind::building_set) {
    b = level.building_set;
  } else if (level.kind == Level::Kind::flat) {
    if (auto v = flat_building_set_violation(level.flat, spec.host))
      fail(ErrorKind::validation, "not a flat building set: " + v->describe(spec.ground));
    b = from_flat(level.flat, spec.host);
  } else {
    fail(ErrorKind::invalid_argument, "blowup-order takes a building_set or flat first level");
  }
  auto removal = blowup_order(b, spec.host);
  Json out = Json::object();
  out["atoms"] = atoms_to_json(spec.ground);
  Json rm = Json::array();
  for (const auto& m : removal) rm.push_back(face_to_json(spec.ground, m));
  out["removal_order"] = rm;
  Json applied = Json::array();
  for (auto it = removal.rbegin(); it != removal.rend(); ++it) applied.push_back(face_to_json(spec.ground, *it));
  out["application_order"] = applied;
  const auto result = sb_via_blowups(spec.host, b);
  out["basis_count"] = result.basis_count();
  out["bases"] = bases_to_json(spec.ground, result);
  return finish(out, 0, f);
}

int cmd_diff(const std::string& left, const std::string& right, const RunFlags& f) {
  auto [ga, a] = complex_from_json(parse_json(read_input(left), left));
  auto [gb, b] = complex_from_json(parse_json(read_input(right), right));
  if (!(ga == gb)) fail(ErrorKind::invalid_argument, "the two complexes have different atoms");
  auto d = diff_complexes(a, b);
  return finish(diff_to_json(ga, d), d.empty() ? 0 : 3, f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Iterated nested-set complexes in flat form, checked against a literal oracle and blowups.\n"
      "f-vectors count faces by size and exclude the empty face.\n"
      "Exit status: 0 ok, 1 usage, 2 parse or validation failure, 3 mismatch, 4 size cap exceeded."};
  app.require_subcommand(1);

  RunFlags run_flags, oracle_flags, fan_flags, order_flags, diff_flags, catalog_flags;
  auto* run_cmd = app.add_subcommand("run", "Run a pipeline spec");
  add_run_flags(run_cmd, run_flags, true);
  auto* oracle_cmd = app.add_subcommand("oracle", "Run a pipeline spec on the literal oracle (single-threaded)");
  add_run_flags(oracle_cmd, oracle_flags, false);

  auto* fan_cmd = app.add_subcommand("check-fan", "Decide whether a complex's vertex vectors span a simplicial fan");
  fan_cmd->add_option("-i,--input", fan_flags.input, "Complex (JSON)");
  fan_cmd->add_option("-o,--output", fan_flags.output, "Report destination");
  fan_cmd->add_option("--emit", fan_flags.emit, "Add 'fan' to include rays and cones");
  fan_cmd->add_option("--expect", fan_flags.expect, "Golden report");
  fan_cmd->add_option("--threads", fan_flags.threads, "Worker threads");

  auto* order_cmd = app.add_subcommand("blowup-order", "Show the blowup sequence for a spec's first level");
  order_cmd->add_option("-i,--input", order_flags.input, "Pipeline spec (JSON)");
  order_cmd->add_option("-o,--output", order_flags.output, "Report destination");
  order_cmd->add_option("--expect", order_flags.expect, "Golden report");

  std::string catalog_name;
  auto* catalog_cmd = app.add_subcommand(
      "catalog", "Print the pipeline spec of a named object: simplex-n, cube-d, polygon-n, prism-n, "
                 "permutohedron-n, associahedron-n, pa-n");
  catalog_cmd->add_option("name", catalog_name, "Catalog entry")->required();
  catalog_cmd->add_option("-o,--output", catalog_flags.output, "Destination");

  std::string left, right;
  auto* diff_cmd = app.add_subcommand("diff", "Compare the bases of two complexes");
  diff_cmd->add_option("left", left, "First complex (JSON)")->required();
  diff_cmd->add_option("right", right, "Second complex (JSON)")->required();
  diff_cmd->add_option("-o,--output", diff_flags.output, "Report destination");
  diff_cmd->add_option("--expect", diff_flags.expect, "Golden report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (*run_cmd) return cmd_run(run_flags, false);
    if (*oracle_cmd) return cmd_run(oracle_flags, true);
    if (*fan_cmd) return cmd_check_fan(fan_flags);
    if (*order_cmd) return cmd_blowup_order(order_flags);
    if (*catalog_cmd) {
      write_output(catalog_flags.output, dump(catalog_spec(catalog_name)));
      return 0;
    }
    if (*diff_cmd) return cmd_diff(left, right, diff_flags);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_usage;
}
