#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mtavg/average.hpp"
#include "mtavg/field.hpp"
#include "mtavg/generate.hpp"
#include "mtavg/interleave.hpp"
#include "mtavg/io.hpp"
#include "mtavg/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNo = 2;
constexpr int kCertificationFailed = 3;

using namespace mtavg;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    io::write_text(path, text);
  }
}

Height parse_epsilon(const std::string& text) {
  Height eps = Height::parse(text);
  if (eps < Height(0)) throw std::invalid_argument("epsilon must be non-negative");
  return eps;
}

struct DistanceArgs {
  std::string a, b, epsilon, witness;
};

int run_distance(const DistanceArgs& args) {
  const MergeTree t1 = io::load_tree(args.a);
  const MergeTree t2 = io::load_tree(args.b);
  if (!args.epsilon.empty()) {
    const Decision d = decide(t1, t2, parse_epsilon(args.epsilon));
    std::cout << (d.yes ? "yes" : "no") << "\n";
    if (d.yes && !args.witness.empty()) io::write_text(args.witness, io::format_witness(*d.witness));
    return d.yes ? kOk : kNo;
  }
  const DistanceResult r = distance(t1, t2);
  std::cout << r.epsilon.str() << "\n";
  if (!args.witness.empty()) io::write_text(args.witness, io::format_witness(r.witness));
  return kOk;
}

struct AverageArgs {
  std::string a, b, out, map, certificate, epsilon;
  bool no_simplify = false;
};

int run_average(const AverageArgs& args) {
  const MergeTree t1 = io::load_tree(args.a);
  const MergeTree t2 = io::load_tree(args.b);
  std::optional<Height> eps;
  if (!args.epsilon.empty()) eps = parse_epsilon(args.epsilon);

  AverageResult result = average_tree(t1, t2, eps);
  if (!args.no_simplify) result = simplified(result);
  const MidpointReport report = check_midpoint(t1, t2, result);
  if (!report.ok()) {
    std::cerr << "error: " << report.describe() << "\n";
    return kCertificationFailed;
  }
  emit(args.out, io::format_tree(result.t3));
  if (!args.map.empty()) io::write_text(args.map, io::format_gamma(result));
  if (!args.certificate.empty()) io::write_text(args.certificate, io::format_certificate(report, result.epsilon));
  return kOk;
}

struct ExtractArgs {
  std::string input, field = "geodesic", orientation, out;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  int connectivity = 4;
};

int run_extract(const ExtractArgs& args) {
  const std::string text = io::read_text(args.input);
  field::ScalarGraph g;
  if (args.field == "geodesic") {
    const auto mask = field::parse_grid_mask(
        text, args.connectivity == 8 ? field::Connectivity::Eight : field::Connectivity::Four);
    const std::size_t samples = args.samples == 0 ? mask.rows * mask.cols : args.samples;
    g = field::geodesic_field(mask, samples, args.seed);
  } else {
    g = io::parse_scalar_graph(text);
  }
  std::string orientation = args.orientation;
  if (orientation.empty()) orientation = args.field == "geodesic" ? "superlevel" : "sublevel";
  const auto o = orientation == "superlevel" ? field::Orientation::Superlevel : field::Orientation::Sublevel;
  emit(args.out, io::format_tree(field::merge_tree_from_field(g, o)));
  return kOk;
}

struct RenderArgs {
  std::string input, out;
};

int run_render(const RenderArgs& args) {
  emit(args.out, io::render_dot(io::load_tree(args.input)));
  return kOk;
}

struct GenArgs {
  std::size_t leaves = 1;
  std::uint64_t seed = 0;
  std::string range = "0..20";
};

int run_gen(const GenArgs& args) {
  const auto dots = args.range.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("height range must look like lo..hi");
  std::size_t used = 0;
  const std::string lo_text = args.range.substr(0, dots);
  const std::string hi_text = args.range.substr(dots + 2);
  const std::int64_t lo = std::stoll(lo_text, &used);
  if (used != lo_text.size()) throw std::invalid_argument("bad lower bound '" + lo_text + "'");
  const std::int64_t hi = std::stoll(hi_text, &used);
  if (used != hi_text.size()) throw std::invalid_argument("bad upper bound '" + hi_text + "'");
  std::cout << io::format_tree(random_merge_tree(args.leaves, args.seed, lo, hi));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interleaving distance and average trees for merge trees"};
  app.require_subcommand(1);

  DistanceArgs dist;
  auto* cmd_distance = app.add_subcommand("distance", "Print the interleaving distance, or decide it against --epsilon");
  cmd_distance->add_option("a", dist.a, "First tree file")->required();
  cmd_distance->add_option("b", dist.b, "Second tree file")->required();
  cmd_distance->add_option("--epsilon", dist.epsilon, "Decide distance <= epsilon instead; prints yes/no");
  cmd_distance->add_option("--witness", dist.witness, "Write the good-map witness here");

  AverageArgs avg;
  auto* cmd_average = app.add_subcommand("average", "Build and certify the average tree");
  cmd_average->add_option("a", avg.a, "First tree file")->required();
  cmd_average->add_option("b", avg.b, "Second tree file")->required();
  cmd_average->add_option("-o,--output", avg.out, "Average tree file (default stdout)");
  cmd_average->add_option("--map", avg.map, "Write the average map here");
  cmd_average->add_option("--certificate", avg.certificate, "Write the midpoint certificate here");
  cmd_average->add_option("--epsilon", avg.epsilon, "Use this epsilon instead of the distance");
  cmd_average->add_flag("--no-simplify", avg.no_simplify, "Keep one-child vertices");

  ExtractArgs ext;
  auto* cmd_extract = app.add_subcommand("extract", "Merge tree of a grid mask or scalar graph");
  cmd_extract->add_option("input", ext.input, "Grid mask (geodesic) or scalar-graph file (identity)")->required();
  cmd_extract->add_option("--field", ext.field, "geodesic or identity")
      ->check(CLI::IsMember({"geodesic", "identity"}));
  cmd_extract->add_option("--orientation", ext.orientation, "sublevel or superlevel")
      ->check(CLI::IsMember({"sublevel", "superlevel"}));
  cmd_extract->add_option("--samples", ext.samples, "Source cells for the geodesic field (default all)");
  cmd_extract->add_option("--seed", ext.seed, "Seed for sampled source cells");
  cmd_extract->add_option("--connectivity", ext.connectivity, "4 or 8")->check(CLI::IsMember({4, 8}));
  cmd_extract->add_option("-o,--output", ext.out, "Tree file (default stdout)");

  RenderArgs ren;
  auto* cmd_render = app.add_subcommand("render", "Graphviz rendering of a tree file");
  cmd_render->add_option("input", ren.input, "Tree file")->required();
  cmd_render->add_option("-o,--output", ren.out, "DOT file (default stdout)");

  GenArgs gen;
  auto* cmd_gen = app.add_subcommand("gen", "Print a random merge tree");
  cmd_gen->add_option("--leaves", gen.leaves, "Number of leaves")->required()->check(CLI::PositiveNumber);
  cmd_gen->add_option("--seed", gen.seed, "Random seed");
  cmd_gen->add_option("--height-range", gen.range, "Integer heights lo..hi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (cmd_distance->parsed()) return run_distance(dist);
    if (cmd_average->parsed()) return run_average(avg);
    if (cmd_extract->parsed()) return run_extract(ext);
    if (cmd_render->parsed()) return run_render(ren);
    if (cmd_gen->parsed()) return run_gen(gen);
  } catch (const CertificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCertificationFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kCertificationFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
