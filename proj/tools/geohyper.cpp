#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace geohyper;
using namespace geohyper::cli;

namespace {

void emit(const RunConfig& c, const std::string& payload) {
  if (c.output.empty()) std::cout << payload;
  else write_text_file(c.output, payload);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact geometric hypergraph toolkit"};
  app.require_subcommand(1);
  RunConfig c;

  auto* gen = app.add_subcommand("generate", "generate a point set or hypergraph");
  gen->add_option("--dim", c.dimension, "ambient dimension (2 or 3)");
  gen->add_option("--n", c.n, "number of points")->required();
  gen->add_option("--seed", c.seed, "random seed");
  gen->add_flag("--convex", c.convex, "points in clockwise convex position");
  gen->add_option("--star", c.star_center, "add all edges through this vertex");
  gen->add_flag("--complete", c.complete, "add every r-tuple as an edge");
  gen->add_option("--uniformity,-r", c.uniformity, "edge size");
  gen->add_option("-o,--output", c.output, "output file (default stdout)");

  auto* det = app.add_subcommand("detect", "search a hypergraph for a forbidden pattern");
  det->add_option("--input,-i", c.input, "hypergraph JSON")->required();
  det->add_option("--pattern", c.pattern, "strongly-crossing | disjoint | crossing-segments | convex");
  det->add_option("--k", c.k, "pattern size");
  det->add_option("-o,--output", c.output, "output file (default stdout)");

  auto* wit = app.add_subcommand("witness", "run a witness extraction and print its trace");
  wit->add_option("--scenario", c.scenario, "four-crossing | greedy | disjoint");
  wit->add_option("--input,-i", c.input, "hypergraph JSON");
  wit->add_option("--random", c.random_scenario, "build a random valid instance from this seed");
  wit->add_option("--v", c.apex, "apex vertex");
  wit->add_option("--bases", c.bases, "comma separated bases, e.g. 0-1,2-3");
  wit->add_option("--apexes", c.apexes, "comma separated apex vertices");
  wit->add_option("--k", c.k, "number of edges to select (greedy)");
  wit->add_option("--n", c.n, "number of points for random disjoint instances");
  wit->add_option("--min-apexes", c.min_apexes, "apexes required per base group (four-crossing)");
  wit->add_option("-o,--output", c.output, "output file (default stdout)");

  auto* ext = app.add_subcommand("extremal", "largest pattern-free edge set on one point set");
  ext->add_option("--mode", c.mode, "exact | greedy")->check(CLI::IsMember({"exact", "greedy"}));
  ext->add_option("--pattern", c.pattern, "strongly-crossing | disjoint");
  ext->add_option("--k", c.k, "pattern size");
  ext->add_option("--n", c.n, "number of generated points");
  ext->add_option("--seed", c.seed, "generator and greedy seed");
  ext->add_flag("--convex", c.convex, "generate points in convex position");
  ext->add_option("--input,-i", c.input, "point set JSON instead of generating");
  ext->add_option("--budget", c.budget, "search node budget");
  ext->add_option("--precision", c.precision, "significant digits for bound decimals");
  ext->add_option("-o,--output", c.output, "output file (default stdout)");

  auto* exp = app.add_subcommand("experiment", "sweep n and seeds, write CSV");
  exp->add_option("--pattern", c.pattern, "strongly-crossing | disjoint");
  exp->add_option("--k", c.k, "pattern size");
  exp->add_option("--n-min", c.n_min, "smallest n");
  exp->add_option("--n-max", c.n_max, "largest n");
  exp->add_option("--seeds", c.seeds, "seeds 1..S per n");
  exp->add_flag("--exact", c.exact, "also run the exact search");
  exp->add_flag("--timing", c.timing, "fill the runtime_ms column");
  exp->add_flag("--convex", c.convex, "convex position point sets");
  exp->add_option("--budget", c.budget, "search node budget per row");
  exp->add_option("--emit-svg", c.emit_svg, "arrangements | counts")->check(CLI::IsMember({"arrangements", "counts"}));
  exp->add_option("--svg-out", c.svg_out, "SVG output file");
  exp->add_option("--input,-i", c.input, "segment fixture for --emit-svg arrangements");
  exp->add_option("-o,--output", c.output, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kPrecondition;
  }

  try {
    if (*gen) {
      c.command = "generate";
      emit(c, cmd_generate(c));
    } else if (*det) {
      c.command = "detect";
      emit(c, cmd_detect(c));
    } else if (*wit) {
      c.command = "witness";
      emit(c, cmd_witness(c));
    } else if (*ext) {
      c.command = "extremal";
      emit(c, cmd_extremal(c));
    } else if (*exp) {
      c.command = "experiment";
      std::string svg;
      if (!c.emit_svg.empty() && c.svg_out.empty()) throw Error(Errc::PreconditionUnmet, "--emit-svg needs --svg-out");
      std::string csv = cmd_experiment(c, c.emit_svg.empty() ? nullptr : &svg);
      emit(c, csv);
      if (!svg.empty()) write_text_file(c.svg_out, svg);
    }
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kOk;
}
