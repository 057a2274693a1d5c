#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fourcolor/errors.hpp"
#include "fourcolor/generator.hpp"
#include "fourcolor/growth.hpp"
#include "fourcolor/harness.hpp"
#include "fourcolor/map_io.hpp"
#include "fourcolor/pipeline.hpp"
#include "fourcolor/properties.hpp"
#include "fourcolor/render.hpp"

using namespace fourcolor;

namespace {

enum Status { kOk = 0, kFailure = 1, kClaimViolation = 2, kScaleCap = 3 };

struct RunConfig {
  std::uint64_t seed = 1;
  int max_k = 12;
  std::size_t max_faces = 40;
  std::size_t max_states = 2'000'000;
  std::string out;
  std::string render;
};

// Lines go to --out when given, otherwise stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("cannot write " + path);
    }
  }
  void line(const nlohmann::json& j) { (file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout) << j.dump() << "\n"; }

 private:
  std::ofstream file_;
};

GrowthTrace read_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  auto parsed = nlohmann::json::parse(text, nullptr, false);
  if (parsed.is_discarded()) {
    // JSON lines: the first non-empty line holds the trace.
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
    }
    parsed = nlohmann::json::parse(line, nullptr, false);
    if (parsed.is_discarded()) throw InputError("cannot parse trace file " + path);
  }
  return GrowthTrace::from_json(parsed);
}

int cmd_color(const RunConfig& cfg, const std::string& input, const std::string& seed_face) {
  const PlanarMap map = read_map_file(input);
  PipelineOptions options;
  options.max_faces = cfg.max_faces;
  const auto run = color_with_islands(map, cfg.seed, options,
                                      seed_face.empty() ? std::nullopt : std::optional<FaceId>(seed_face));
  if (!cfg.out.empty()) write_text_file(cfg.out, coloring_to_json(run.coloring).dump(2) + "\n");
  if (!cfg.render.empty()) write_text_file(cfg.render, render_svg(map, run.coloring));
  for (const auto& c : run.components) std::cout << c.to_json().dump() << "\n";
  std::cout << nlohmann::json{{"summary",
                               {{"faces", map.num_faces()},
                                {"trace_length", run.trace_length()},
                                {"used_fallback", run.used_fallback},
                                {"violations", run.violations},
                                {"verified", run.verified},
                                {"seconds", run.seconds}}}}
                   .dump()
            << "\n";
  if (!run.verified) return kFailure;
  return run.used_fallback ? kClaimViolation : kOk;
}

int cmd_props(const RunConfig& cfg, int polygon, const std::string& trace_path, bool pruned, bool per_interval) {
  GrowthTrace trace;
  if (!trace_path.empty()) {
    trace = read_trace(trace_path);
  } else if (polygon > 0) {
    trace.polygon_k = polygon;
  } else {
    throw InputError("props needs --polygon or --trace");
  }
  PropertyOptions o;
  o.max_k = cfg.max_k;
  o.max_states = cfg.max_states;
  o.quantification = pruned ? Quantification::Pruned : Quantification::Strict;
  o.reading = per_interval ? OuterColorReading::PerInterval : OuterColorReading::OneScheme;
  if (trace.polygon_k > cfg.max_k) throw ScaleLimitError("scale limit: polygon size exceeds --max-k");
  const GrownState g = replay_growth(trace);
  const auto a = check_property_A(g.state.k(), g.pset.schemes(), o);
  const auto b = check_property_B(g.state.k(), g.pset.schemes(), o);
  Sink sink(cfg.out);
  sink.line({{"state", trace.to_json()},
             {"k", g.state.k()},
             {"schemes", g.pset.size()},
             {"A", a.to_json()},
             {"B", b.to_json()}});
  return kOk;
}

int cmd_fuzz(const RunConfig& cfg, const std::string& theorem, std::size_t trials, int n_max, int k) {
  HarnessOptions o;
  o.properties.max_k = cfg.max_k;
  o.properties.max_states = cfg.max_states;
  std::vector<Trial> result;
  if (theorem == "1") {
    result = verify_theorem1(k > 0 ? k : 7, o);
  } else if (theorem == "2") {
    result = verify_theorem2(trials, cfg.seed, o);
  } else if (theorem == "3") {
    result = verify_theorem3(n_max, trials, cfg.seed, o);
  } else if (theorem == "decomp") {
    result = check_decomposition_equivalences(trials, cfg.seed, o);
  } else if (theorem == "abstract") {
    result = fuzz_abstract(k > 0 ? k : 4, trials, cfg.seed, o);
  } else {
    throw InputError("unknown --theorem " + theorem);
  }
  Sink sink(cfg.out);
  std::size_t unvalidated = 0;
  for (const auto& t : result) {
    sink.line(t.to_json());
    if (t.counterexample && !t.counterexample->revalidated) ++unvalidated;
  }
  const auto s = summarize(result);
  sink.line({{"summary", s.to_json()}, {"theorem", theorem}, {"seed", cfg.seed}, {"unvalidated", unvalidated}});
  if (unvalidated > 0 || s.oracle_mismatches > 0) return kFailure;
  return s.counterexample + s.unconfirmed > 0 ? kClaimViolation : kOk;
}

int cmd_verify(const std::string& map_path, const std::string& coloring_path) {
  const PlanarMap map = read_map_file(map_path);
  const auto report = validate_map(map);
  if (!report.ok()) throw InputError("invalid map: " + report.problems.front());
  const auto r = verify_coloring(map, read_coloring_file(coloring_path));
  nlohmann::json v = nlohmann::json::array();
  for (const auto& [a, b] : r.violations) v.push_back({a, b});
  std::cout << nlohmann::json{{"proper", r.ok}, {"violations", v}}.dump() << "\n";
  return r.ok ? kOk : kFailure;
}

int cmd_gen(const RunConfig& cfg, int faces) {
  const PlanarMap map = generate_map(faces, cfg.seed);
  const std::string text = map_to_json(map).dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(cfg.out, text);
  }
  return kOk;
}

int cmd_export_svg(const RunConfig& cfg, const std::string& map_path, const std::string& coloring_path) {
  const PlanarMap map = read_map_file(map_path);
  const Coloring coloring = coloring_path.empty() ? Coloring{} : read_coloring_file(coloring_path);
  const std::string svg = render_svg(map, coloring);
  const std::string target = !cfg.render.empty() ? cfg.render : cfg.out;
  if (target.empty()) {
    std::cout << svg;
  } else {
    write_text_file(target, svg);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four-coloring of sphere maps by boundary growth, with property checkers and a theorem harness"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "RNG seed")->envname("FOURCOLOR_SEED");
  app.add_option("--max-k", cfg.max_k, "Largest interval count for property checks")
      ->envname("FOURCOLOR_MAX_K")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-faces", cfg.max_faces, "Largest face count after cubification")
      ->envname("FOURCOLOR_MAX_FACES")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-states", cfg.max_states, "Largest memo table for property checks")
      ->envname("FOURCOLOR_MAX_STATES")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "Output file")->envname("FOURCOLOR_OUT");
  app.add_option("--render", cfg.render, "SVG output file")->envname("FOURCOLOR_RENDER");

  std::string input, second, seed_face, trace_path, theorem = "2";
  int polygon = 0, n_max = 4, faces = 10, k = 0;
  std::size_t trials = 100;
  bool pruned = false, per_interval = false;

  auto* color = app.add_subcommand("color", "Color a map file");
  color->add_option("map", input, "Map JSON")->required();
  color->add_option("--seed-face", seed_face, "Face to grow from");

  auto* props = app.add_subcommand("props", "Check Properties A and B");
  props->add_option("--polygon", polygon, "Seed polygon size");
  props->add_option("--trace", trace_path, "Growth trace file (JSON or JSON lines)");
  props->add_flag("--pruned", pruned, "Ignore moves that empty the scheme set");
  props->add_flag("--per-interval", per_interval, "Per-interval outer-color reading");

  auto* fuzz = app.add_subcommand("fuzz-theorems", "Run the theorem harness");
  fuzz->add_option("--theorem", theorem, "1, 2, 3, decomp or abstract");
  fuzz->add_option("--trials", trials, "Number of start states or samples");
  fuzz->add_option("--n-max", n_max, "Largest n for --theorem 3");
  fuzz->add_option("--k", k, "Polygon bound for --theorem 1, interval count for abstract");

  auto* verify = app.add_subcommand("verify", "Check a coloring against a map");
  verify->add_option("map", input, "Map JSON")->required();
  verify->add_option("coloring", second, "Coloring JSON")->required();

  auto* gen = app.add_subcommand("gen", "Generate a random cubic map");
  gen->add_option("--faces", faces, "Face count")->check(CLI::Range(4, 200));

  auto* svg = app.add_subcommand("export-svg", "Render a map, optionally colored");
  svg->add_option("map", input, "Map JSON")->required();
  svg->add_option("coloring", second, "Coloring JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*color) return cmd_color(cfg, input, seed_face);
    if (*props) return cmd_props(cfg, polygon, trace_path, pruned, per_interval);
    if (*fuzz) return cmd_fuzz(cfg, theorem, trials, n_max, k);
    if (*verify) return cmd_verify(input, second);
    if (*gen) return cmd_gen(cfg, faces);
    if (*svg) return cmd_export_svg(cfg, input, second);
  } catch (const ScaleLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kScaleCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
