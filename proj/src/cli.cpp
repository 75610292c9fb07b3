#include "hqft/cli.hpp"

#include "hqft/bridge.hpp"
#include "hqft/errors.hpp"
#include "hqft/io.hpp"
#include "hqft/sampling.hpp"
#include "hqft/smith.hpp"
#include "hqft/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>

namespace hqft::cli {

namespace {

using io::json;

struct Inputs {
  std::string complex_path, cochain_path, surface_path, map_path, chain_path, matrix_path;
  std::string group, phase = "0", suite;
  int degree = -1;
  bool json_out = false;
  bool selfcheck = false;
};

std::string require(const std::string& value, const std::string& flag) {
  if (value.empty()) throw CLI::RequiredError(flag);
  return value;
}

std::string factors_string(const std::vector<Integer>& d) {
  std::string s;
  for (size_t i = 0; i < d.size(); ++i) s += (i ? " " : "") + d[i].str();
  return s;
}

XSurface load_surface_with_map(const Inputs& in, const ComplexPtr& X) {
  const std::string path = require(in.surface_path, "--surface");
  if (in.map_path.empty()) return io::load_surface(path, X);
  json bundle = io::read_json_file(path);
  bundle["map"] = io::read_json_file(in.map_path);
  const auto dir = std::filesystem::path(path).parent_path().string();
  return io::surface_from_json(bundle, X, dir.empty() ? "." : dir);
}

Cochain load_cocycle(const Inputs& in, const ComplexPtr& X) {
  Cochain theta = io::cochain_from_json(io::read_json_file(require(in.cochain_path, "--cochain")), X);
  if (theta.degree() != 2) throw DimensionError("the cochain must have degree 2, got " + std::to_string(theta.degree()));
  require_cocycle(theta);
  return theta;
}

json group_json(const FgAbGroup& G) {
  json factors = json::array();
  for (const auto& d : G.invariant_factors()) factors.push_back(d.str());
  return {{"group", G.to_string()}, {"invariant_factors", factors}, {"rank", G.rank()}};
}

int emit_report(const Report& r, const Inputs& in, std::ostream& out) {
  if (in.json_out) out << r.to_json().dump(2) << '\n';
  else out << r.to_text();
  return r.passed() ? 0 : 2;
}

int cmd_homology(const Inputs& in, std::ostream& out) {
  const ComplexPtr X = io::load_complex(require(in.complex_path, "--complex"));
  const HomologyGroup H = homology(X, in.degree < 0 ? 1 : in.degree);
  if (in.json_out) {
    json j = group_json(H.group);
    j["degree"] = H.degree;
    j["generators"] = json::array();
    for (const auto& g : H.generators) j["generators"].push_back(io::to_json(g));
    out << j.dump(2) << '\n';
  } else {
    out << H.group.to_string() << '\n';
  }
  return 0;
}

int cmd_cohomology(const Inputs& in, std::ostream& out) {
  const ComplexPtr X = io::load_complex(require(in.complex_path, "--complex"));
  const CoeffGroup A = CoeffGroup::parse(require(in.group, "--group"));
  const CohomologyGroup C = cohomology(X, A, in.degree < 0 ? 2 : in.degree);
  if (in.json_out) {
    json j = group_json(C.group);
    j["degree"] = C.degree;
    j["coefficients"] = A.to_string();
    j["order"] = C.order().str();
    j["representatives"] = json::array();
    for (const auto& g : C.generators) j["representatives"].push_back(io::to_json(g));
    out << j.dump(2) << '\n';
  } else {
    out << C.group.to_string() << '\n';
  }
  return 0;
}

int cmd_snf(const Inputs& in, std::ostream& out) {
  IntMatrix M;
  if (!in.matrix_path.empty()) {
    const json j = io::read_json_file(in.matrix_path);
    if (!j.is_array()) throw MalformedInput("matrix: expected an array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
    M.resize(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
      const json& row = j[static_cast<size_t>(r)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
        throw MalformedInput("matrix: row " + std::to_string(r) + " has the wrong length");
      for (Eigen::Index c = 0; c < cols; ++c) {
        const json& v = row[static_cast<size_t>(c)];
        if (!v.is_number_integer()) throw MalformedInput("matrix: entries must be integers");
        M(r, c) = Integer(v.get<long long>());
      }
    }
  } else {
    const ComplexPtr X = io::load_complex(require(in.complex_path, "--complex or --matrix"));
    M = boundary_matrix(*X, in.degree < 0 ? 1 : in.degree);
  }
  const auto snf = smith_normal_form(M);
  if (in.json_out) {
    json d = json::array();
    for (const auto& v : snf.diagonal()) d.push_back(v.str());
    out << json{{"rows", M.rows()}, {"cols", M.cols()}, {"rank", snf.rank}, {"invariant_factors", d}}.dump(2) << '\n';
  } else {
    out << "rank: " << snf.rank << '\n' << "invariant factors: " << factors_string(snf.diagonal()) << '\n';
  }
  return 0;
}

int cmd_holonomy(const Inputs& in, std::ostream& out) {
  const ComplexPtr X = io::load_complex(require(in.complex_path, "--complex"));
  const Hqft h(load_cocycle(in, X));
  const XSurface g = load_surface_with_map(in, X);
  const CoeffElement v = holonomy(h, g);
  if (in.json_out) out << json{{"holonomy", v.to_string()}}.dump(2) << '\n';
  else out << v.to_string() << '\n';
  return 0;
}

int cmd_character(const Inputs& in, std::ostream& out) {
  const ComplexPtr X = io::load_complex(require(in.complex_path, "--complex"));
  const Hqft h(load_cocycle(in, X));
  const HolonomyCharacter c = holonomy_character(h);
  if (in.json_out) {
    json j = json::object();
    for (size_t i = 0; i < c.values.size(); ++i) j[c.h2.labels()[i]] = c.values[i].to_string();
    out << json{{"h2", c.h2.to_string()}, {"character", j}}.dump(2) << '\n';
  } else {
    out << c.to_string();
  }
  return 0;
}

int cmd_evaluate(const Inputs& in, std::ostream& out) {
  const ComplexPtr X = io::load_complex(require(in.complex_path, "--complex"));
  const Hqft h(load_cocycle(in, X));
  const XSurface g = load_surface_with_map(in, X);
  const FiberElement e = h.element(g.input_object(), h.coeff().parse_element(in.phase));
  const FiberElement r = evaluate(h, g, e, in.selfcheck);
  if (in.json_out) out << json{{"phase", r.phase.to_string()}, {"object", io::to_json(r.object)}}.dump(2) << '\n';
  else out << "phase: " << r.phase.to_string() << '\n' << "object: " << r.object.to_string() << '\n';
  return 0;
}

int cmd_verify_surface(const Inputs& in, std::ostream& out) {
  const ComplexPtr X = io::load_complex(require(in.complex_path, "--complex"));
  const XSurface g = load_surface_with_map(in, X);
  const int chi = euler_characteristic(g);
  const int components = component_count(g);
  std::optional<int> gen;
  if (g.closed() && components == 1) gen = genus(g);
  auto lengths = [](const std::vector<std::vector<int>>& cs) {
    std::vector<size_t> l;
    for (const auto& c : cs) l.push_back(c.size());
    return l;
  };
  if (in.json_out) {
    json j{{"valid", true},
           {"euler_characteristic", chi},
           {"components", components},
           {"inputs", lengths(g.inputs)},
           {"outputs", lengths(g.outputs)},
           {"pushed_cycle", io::to_json(g.pushed_cycle())}};
    if (gen) j["genus"] = *gen;
    out << j.dump(2) << '\n';
  } else {
    out << "valid surface\n"
        << "euler characteristic: " << chi << '\n'
        << "components: " << components << '\n';
    if (gen) out << "genus: " << *gen << '\n';
    out << "input circles: " << g.inputs.size() << '\n' << "output circles: " << g.outputs.size() << '\n';
  }
  return 0;
}

int cmd_surface_from_cycle(const Inputs& in, std::ostream& out) {
  const ComplexPtr X = io::load_complex(require(in.complex_path, "--complex"));
  const Chain y = io::chain_from_json(io::read_json_file(require(in.chain_path, "--chain")), *X);
  const XSurface g = surface_from_cycle(X, y);
  if (in.json_out) {
    out << io::to_json(g).dump(2) << '\n';
  } else {
    out << "vertices: " << g.surface->vertex_count() << '\n'
        << "triangles: " << g.surface->count(2) << '\n'
        << "euler characteristic: " << euler_characteristic(g) << '\n'
        << "components: " << component_count(g) << '\n';
  }
  return 0;
}

int cmd_verify(const Inputs& in, std::ostream& out) {
  const std::uint64_t seed = Sampler::seed_from_env(1);
  if (in.suite == "linalg") return emit_report(verify_linalg({seed, 200, false}), in, out);
  const ComplexPtr X = io::load_complex(require(in.complex_path, "--complex"));
  if (in.suite == "thm71") {
    const CoeffGroup A = CoeffGroup::parse(in.group.empty() ? "z/2" : in.group);
    DiagramOptions options;
    options.seed = seed;
    if (!in.cochain_path.empty()) options.test_cocycles.push_back(load_cocycle(in, X));
    return emit_report(verify_cohomology_diagram(X, A, options), in, out);
  }
  if (in.suite == "q/z") return emit_report(verify_divisibility(X, {seed, 20, false}), in, out);
  if (in.suite == "hqft") {
    const CoeffGroup A = CoeffGroup::parse(in.group.empty() ? "q/z" : in.group);
    return emit_report(verify_hqft_properties(X, A, {seed, 20, in.selfcheck}), in, out);
  }
  throw CLI::ValidationError("suite", "unknown suite '" + in.suite + "'");
}

int cmd_ext(const Inputs& in, std::ostream& out) {
  const ComplexPtr X = io::load_complex(require(in.complex_path, "--complex"));
  const CoeffGroup A = CoeffGroup::parse(require(in.group, "--group"));
  const HomologyGroup h1 = homology(X, 1);
  const ExtGroup E = ext_group(h1.group, A);
  if (in.json_out) {
    json classes = json::array();
    for (const auto& c : E.classes()) classes.push_back(c.to_string());
    out << json{{"h1", h1.group.to_string()}, {"ext", E.as_group().to_string()}, {"order", E.order().str()},
                {"classes", classes}}
               .dump(2)
        << '\n';
  } else {
    out << E.as_group().to_string() << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact homology, cohomology and rank-one surface theories over simplicial complexes", "hqft"};
  app.require_subcommand(1);
  Inputs in;

  auto common = [&](CLI::App* c) {
    c->add_option("--complex", in.complex_path, "complex JSON file");
    c->add_flag("--json", in.json_out, "print JSON instead of text");
  };
  auto* homology_cmd = app.add_subcommand("homology", "integral homology group");
  common(homology_cmd);
  homology_cmd->add_option("--degree", in.degree, "degree (default 1)");
  auto* cohomology_cmd = app.add_subcommand("cohomology", "cohomology with finite coefficients");
  common(cohomology_cmd);
  cohomology_cmd->add_option("--group", in.group, "coefficient group, e.g. z/2");
  cohomology_cmd->add_option("--degree", in.degree, "degree (default 2)");
  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of a boundary matrix or a matrix file");
  common(snf_cmd);
  snf_cmd->add_option("--degree", in.degree, "boundary degree (default 1)");
  snf_cmd->add_option("--matrix", in.matrix_path, "JSON array of integer rows");
  auto* holonomy_cmd = app.add_subcommand("holonomy", "holonomy of a closed surface");
  common(holonomy_cmd);
  auto* character_cmd = app.add_subcommand("character", "holonomy on the H_2 generators");
  common(character_cmd);
  auto* evaluate_cmd = app.add_subcommand("evaluate", "apply a cobordism to a fiber element");
  common(evaluate_cmd);
  evaluate_cmd->add_option("--phase", in.phase, "input phase (default 0)");
  evaluate_cmd->add_flag("--debug-selfcheck", in.selfcheck, "recompute the relative cycle and compare");
  for (auto* c : {holonomy_cmd, character_cmd, evaluate_cmd})
    c->add_option("--cochain", in.cochain_path, "degree-2 cocycle JSON file");
  auto* verify_surface_cmd = app.add_subcommand("verify-surface", "check a surface bundle");
  common(verify_surface_cmd);
  for (auto* c : {holonomy_cmd, evaluate_cmd, verify_surface_cmd}) {
    c->add_option("--surface", in.surface_path, "surface bundle JSON file");
    c->add_option("--map", in.map_path, "map JSON file replacing the bundle's map");
  }
  auto* sfc_cmd = app.add_subcommand("surface-from-cycle", "closed surface realising a 2-cycle");
  common(sfc_cmd);
  sfc_cmd->add_option("--chain", in.chain_path, "2-cycle JSON file");
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite: thm71, q/z, hqft, linalg");
  common(verify_cmd);
  verify_cmd->add_option("suite", in.suite, "suite name")->required()->check(
      CLI::IsMember({"thm71", "q/z", "hqft", "linalg"}));
  verify_cmd->add_option("--group", in.group, "coefficient group");
  verify_cmd->add_option("--cochain", in.cochain_path, "test cocycle for infinite coefficients");
  verify_cmd->add_flag("--debug-selfcheck", in.selfcheck, "recompute relative cycles during evaluation");
  auto* ext_cmd = app.add_subcommand("ext", "Ext(H_1, A) and its classes");
  common(ext_cmd);
  ext_cmd->add_option("--group", in.group, "coefficient group");

  if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
    const auto subs = app.get_subcommands([](CLI::App*) { return true; });
    if (std::none_of(subs.begin(), subs.end(), [&](CLI::App* c) { return c->get_name() == args[0]; })) {
      err << "error: unknown command '" << args[0] << "'\n" << app.help();
      return 1;
    }
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 1;
  }

  try {
    if (homology_cmd->parsed()) return cmd_homology(in, out);
    if (cohomology_cmd->parsed()) return cmd_cohomology(in, out);
    if (snf_cmd->parsed()) return cmd_snf(in, out);
    if (holonomy_cmd->parsed()) return cmd_holonomy(in, out);
    if (character_cmd->parsed()) return cmd_character(in, out);
    if (evaluate_cmd->parsed()) return cmd_evaluate(in, out);
    if (verify_surface_cmd->parsed()) return cmd_verify_surface(in, out);
    if (sfc_cmd->parsed()) return cmd_surface_from_cycle(in, out);
    if (verify_cmd->parsed()) return cmd_verify(in, out);
    if (ext_cmd->parsed()) return cmd_ext(in, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << app.help();
  return 1;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace hqft::cli
