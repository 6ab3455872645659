// movcone: command-line front end for the movcone headers.
//
// Exit codes: 0 success, 2 usage or parameter error, 3 domain failure
// (classification cap, failed verify suite).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "movcone/movcone.hpp"

namespace {

using movcone::json;

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

int fail(int code, const std::string& type, const std::string& message, json extra = json::object()) {
  json err = {{"error", {{"type", type}, {"message", message}}}};
  for (auto& [k, v] : extra.items()) err["error"][k] = v;
  std::cerr << err.dump() << "\n";
  return code;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw movcone::ParameterError("cannot open output file '" + out + "'");
  f << text;
}

struct Common {
  int n = 2;
  int m = 3;
  bool any_range = false;
  std::string out;
};

void add_system_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--n", c.n, "projective space dimension")->required();
  cmd->add_option("--m", c.m, "number of factors")->required();
  cmd->add_flag("--any-range", c.any_range, "allow parameters with nm - (n+1) < 3");
  cmd->add_option("--out", c.out, "write to this file instead of stdout");
}

std::string format_of(const std::string& f) {
  if (f != "json" && f != "svg") throw movcone::ParameterError("format must be json or svg");
  return f;
}

movcone::svg::RenderConfig render_config(int depth, const std::vector<double>& viewport, bool labels) {
  movcone::svg::RenderConfig cfg;
  cfg.depth = depth;
  if (!viewport.empty()) {
    if (viewport.size() != 4) throw movcone::ParameterError("viewport needs four numbers x,y,width,height");
    std::copy(viewport.begin(), viewport.end(), cfg.viewport.begin());
  }
  cfg.labels = labels;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace movcone;

  CLI::App app{"Movable cones of blow-ups of products of projective spaces"};
  app.require_subcommand(1);

  Common sys_opts;
  auto* system_cmd = app.add_subcommand("system", "Gram matrix, dual generators and quadric");
  add_system_flags(system_cmd, sys_opts);

  Common ch_opts;
  int ch_depth = 3;
  std::string ch_format = "json";
  std::vector<double> ch_viewport;
  bool ch_labels = false;
  auto* chambers_cmd = app.add_subcommand("chambers", "Chambers w.Nef up to a word length");
  add_system_flags(chambers_cmd, ch_opts);
  chambers_cmd->add_option("--depth", ch_depth, "maximal t-word length");
  chambers_cmd->add_option("--format", ch_format, "json or svg");
  chambers_cmd->add_option("--viewport", ch_viewport, "svg viewport x y width height")->expected(4)->delimiter(',');
  chambers_cmd->add_flag("--labels", ch_labels, "label the simplex vertices");

  Common cl_opts;
  std::string cl_class;
  std::size_t cl_max_steps = kDefaultMaxSteps;
  auto* classify_cmd = app.add_subcommand("classify", "Locate a class in the chamber decomposition");
  add_system_flags(classify_cmd, cl_opts);
  classify_cmd->add_option("--class", cl_class, "comma-separated rational coordinates")->required();
  classify_cmd->add_option("--max-steps", cl_max_steps, "reflection step cap");

  Common bd_opts;
  int bd_depth = 1;
  std::string bd_format = "json";
  std::vector<double> bd_viewport;
  auto* boundary_cmd = app.add_subcommand("boundary", "Boundary cones of the movable cone");
  add_system_flags(boundary_cmd, bd_opts);
  boundary_cmd->add_option("--depth", bd_depth, "maximal t-word length");
  boundary_cmd->add_option("--format", bd_format, "json or svg");
  boundary_cmd->add_option("--viewport", bd_viewport, "svg viewport x y width height")->expected(4)->delimiter(',');

  int sy_depth = 3;
  std::string sy_layer = "movable";
  std::string sy_format = "json";
  std::string sy_out;
  std::vector<double> sy_viewport;
  bool sy_labels = false;
  auto* symmetric_cmd = app.add_subcommand("symmetric", "The (2,3) case with an extra automorphism");
  symmetric_cmd->add_option("--depth", sy_depth, "maximal word length in a, b, b^-1");
  symmetric_cmd->add_option("--layer", sy_layer, "movable or psef");
  symmetric_cmd->add_option("--format", sy_format, "json or svg");
  symmetric_cmd->add_option("--out", sy_out, "write to this file instead of stdout");
  symmetric_cmd->add_option("--viewport", sy_viewport, "svg viewport x y width height")->expected(4)->delimiter(',');
  symmetric_cmd->add_flag("--labels", sy_labels, "label D1 and D2");

  std::string vf_suite = "all";
  std::optional<int> vf_n;
  std::optional<int> vf_m;
  std::string vf_out;
  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  verify_cmd->add_option("--suite", vf_suite, "all, identities, free, tiling, boundary or symmetric");
  verify_cmd->add_option("--n", vf_n, "restrict to one n");
  verify_cmd->add_option("--m", vf_m, "restrict to one m");
  verify_cmd->add_option("--out", vf_out, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kExitUsage, "usage", e.what());
  }

  try {
    if (system_cmd->parsed()) {
      const CoxeterSystem sys = build_system(sys_opts.n, sys_opts.m, !sys_opts.any_range);
      emit(dump(document("system", system_json(sys))), sys_opts.out);
    } else if (chambers_cmd->parsed()) {
      const std::string fmt = format_of(ch_format);
      const CoxeterSystem sys = build_system(ch_opts.n, ch_opts.m, !ch_opts.any_range);
      if (fmt == "svg") svg::require_rank3(sys.m(), "chambers");
      const auto chambers = enumerate_chambers(sys, ch_depth);
      if (fmt == "svg")
        emit(svg::render_chambers(sys, chambers, render_config(ch_depth, ch_viewport, ch_labels)), ch_opts.out);
      else
        emit(dump(document("chambers", {{"n", sys.n()}, {"m", sys.m()}, {"depth", ch_depth}, {"chambers", chambers}})),
             ch_opts.out);
    } else if (classify_cmd->parsed()) {
      const CoxeterSystem sys = build_system(cl_opts.n, cl_opts.m, !cl_opts.any_range);
      const DivisorClass d{parse_rational_list(cl_class)};
      try {
        const ClassificationResult r = classify(sys, d, cl_max_steps);
        emit(dump(document("classification", {{"n", sys.n()}, {"m", sys.m()}, {"class", d}, {"result", r}})),
             cl_opts.out);
      } catch (const ClassificationError& e) {
        return fail(kExitDomain, "classification", e.what(),
                    {{"reason", e.reason()},
                     {"steps", e.steps()},
                     {"partial_word", e.partial_word()},
                     {"last_iterate", e.last_iterate()}});
      }
    } else if (boundary_cmd->parsed()) {
      if (bd_opts.n == 1) throw ParameterError("the boundary of the Tits cone for n = 1 is not given by eigenvector cones");
      const std::string fmt = format_of(bd_format);
      const CoxeterSystem sys = build_system(bd_opts.n, bd_opts.m, !bd_opts.any_range);
      if (fmt == "svg") svg::require_rank3(sys.m(), "boundary");
      const auto patches = boundary_patches(sys, bd_depth);
      if (fmt == "svg")
        emit(svg::render_boundary(sys, patches, render_config(bd_depth, bd_viewport, false)), bd_opts.out);
      else
        emit(dump(document("boundary", {{"n", sys.n()}, {"m", sys.m()}, {"depth", bd_depth}, {"patches", patches}})),
             bd_opts.out);
    } else if (symmetric_cmd->parsed()) {
      const std::string fmt = format_of(sy_format);
      if (sy_layer != "movable" && sy_layer != "psef") throw ParameterError("layer must be movable or psef");
      const auto cfg = render_config(sy_depth, sy_viewport, sy_labels);
      if (sy_layer == "movable") {
        const auto cones = symmetric::sym_enumerate(sy_depth);
        if (fmt == "svg")
          emit(svg::render_symmetric_movable(cones, cfg), sy_out);
        else
          emit(dump(document("symmetric_movable", {{"depth", sy_depth},
                                                   {"fundamental_domain", symmetric::sym_fundamental_domain()},
                                                   {"cones", cones}})),
               sy_out);
      } else {
        const auto patches = symmetric::psef_patches(sy_depth);
        if (fmt == "svg")
          emit(svg::render_psef(patches, cfg), sy_out);
        else
          emit(dump(document("symmetric_psef",
                             {{"depth", sy_depth},
                              {"d_classes", symmetric::d_classes()},
                              {"layers",
                               {{"proven", "boundary segments [D1,D2], [D1,phi01*H], [D2,a.phi01*H] and their orbit"},
                                {"expected", "conjectural beyond the proven segments: cones glued tangentially at "
                                             "the orbit of D1 and D2"}}},
                              {"patches", patches}})),
               sy_out);
      }
    } else if (verify_cmd->parsed()) {
      const verify::Report report = verify::run(vf_suite, vf_n, vf_m);
      emit(dump(document("verify", report)), vf_out);
      return report.passed() ? 0 : kExitDomain;
    }
  } catch (const ParameterError& e) {
    return fail(kExitUsage, "parameter", e.what());
  } catch (const BudgetExceeded& e) {
    return fail(kExitUsage, "budget", e.what());
  } catch (const DomainError& e) {
    return fail(kExitDomain, "domain", e.what());
  } catch (const std::exception& e) {
    return fail(kExitUsage, "parameter", e.what());
  }
  return 0;
}
