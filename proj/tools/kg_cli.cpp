// kg: command line driver for the k-graph library.
// Exit codes: 0 success / property true, 1 property false or hypotheses
// unmet (report printed), 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hrg/format.hpp"
#include "hrg/generators.hpp"
#include "hrg/saturation.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hrg::invalid_parameter_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw hrg::invalid_parameter_error("cannot write " + path);
  out << text;
}

hrg::KGraph load(const std::string& path) {
  return hrg::to_kgraph(hrg::parse_kg(read_file(path)));
}

hrg::ColorSet parse_colors(const std::string& list) {
  hrg::ColorSet out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.insert(std::stoi(tok));
  }
  if (out.empty()) throw hrg::invalid_parameter_error("empty color list");
  return out;
}

std::vector<std::string> parse_id_list(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

void emit(bool as_json, const nlohmann::json& j, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

nlohmann::json hr_json(const hrg::HrReport& hr) {
  nlohmann::json j;
  j["vertex"] = hr.vertex;
  j["colors"] = hr.colors;
  j["neighborhood"] = {{"vertices", hr.neighborhood.vertices},
                       {"edges", hr.neighborhood.edges}};
  j["bridges"] = hr.bridge_edges;
  j["cobridges"] = hr.cobridge_edges;
  j["disjoint"] = hr.disjoint;
  j["pass"] = hr.passed();
  j["summary"] = hr.summary();
  for (const auto& [x, r] : hr.reducibility) {
    nlohmann::json rx;
    rx["reducible"] = r.reducible;
    if (r.reducible) {
      rx["source"] = r.common_source;
      for (const auto& [c, e] : r.bridges) rx["bridges"][std::to_string(c)] = e;
    } else {
      rx["failing_condition"] = r.failing_condition;
    }
    j["reducibility"][x] = rx;
  }
  return j;
}

void save_graph(const hrg::KGraph& k, const std::string& path) {
  write_file(path, hrg::serialize_kg(hrg::document_of(k)));
}

hrg::KGraph run_gen(const std::string& name, const std::vector<int>& args) {
  if (name == "torus") {
    if (args.empty()) throw hrg::invalid_parameter_error("torus needs cycle lengths");
    return hrg::gen_torus(args);
  }
  if (name == "figure1") return hrg::gen_figure1();
  if (name == "cr-example") return hrg::gen_cr_example();
  if (name == "doubled-cycle") return hrg::gen_doubled_cycle();
  throw hrg::invalid_parameter_error("unknown generator " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite higher-rank graph toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit reports as JSON");

  std::string file, file2, out, vertex, colors, edge, set_list, format = "dot";
  std::string gen_name, emit_par;
  int bridge = 0;
  std::size_t max_degree = 0;
  bool per_color = false, allow_perm = false;
  std::vector<int> gen_args;

  auto* validate = app.add_subcommand("validate", "KG0-3 validation of a .kg file");
  validate->add_option("file", file)->required();
  validate->add_flag("--per-color-source-free", per_color);

  auto* checkhr = app.add_subcommand("check-hr", "H_R hypotheses at (vertex, colors)");
  checkhr->add_option("file", file)->required();
  checkhr->add_option("--vertex", vertex)->required();
  checkhr->add_option("--colors", colors)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "apply the move (R)");
  reduce_cmd->add_option("file", file)->required();
  reduce_cmd->add_option("--vertex", vertex)->required();
  reduce_cmd->add_option("--colors", colors)->required();
  reduce_cmd->add_option("--bridge-color", bridge)->required();
  reduce_cmd->add_option("-o,--output", out)->required();
  reduce_cmd->add_option("--emit-par", emit_par, "write the parent map to this file");

  auto* delay_cmd = app.add_subcommand("delay", "apply the move (D)");
  delay_cmd->add_option("file", file)->required();
  delay_cmd->add_option("--edge", edge)->required();
  delay_cmd->add_option("-o,--output", out)->required();

  auto* cr_cmd = app.add_subcommand("cr", "apply the move (CR)");
  cr_cmd->add_option("file", file)->required();
  cr_cmd->add_option("--vertex", vertex)->required();
  cr_cmd->add_option("-o,--output", out)->required();

  auto* product_cmd = app.add_subcommand("product", "Cartesian product of two graphs");
  product_cmd->add_option("a", file)->required();
  product_cmd->add_option("b", file2)->required();
  product_cmd->add_option("-o,--output", out)->required();

  auto* iso_cmd = app.add_subcommand("iso", "isomorphism test");
  iso_cmd->add_option("a", file)->required();
  iso_cmd->add_option("b", file2)->required();
  iso_cmd->add_flag("--allow-color-permutation", allow_perm);

  auto* sat_cmd = app.add_subcommand("saturate", "hereditary-saturated closure");
  sat_cmd->add_option("file", file)->required();
  sat_cmd->add_option("--set", set_list)->required();
  sat_cmd->add_option("--max-degree", max_degree);

  auto* cert_cmd = app.add_subcommand("certify", "Morita certificate for a reduction");
  cert_cmd->add_option("file", file)->required();
  cert_cmd->add_option("--vertex", vertex)->required();
  cert_cmd->add_option("--colors", colors)->required();
  cert_cmd->add_option("--bridge-color", bridge)->required();
  cert_cmd->add_option("-o,--output", out)->required();

  auto* export_cmd = app.add_subcommand("export", "DOT or JSON export");
  export_cmd->add_option("file", file)->required();
  export_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

  auto* gen_cmd = app.add_subcommand("gen", "built-in example generators");
  gen_cmd->add_option("name", gen_name)->required();
  gen_cmd->add_option("args", gen_args);
  gen_cmd->add_option("-o,--output", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) {
      try {
        hrg::KGraph k = load(file);
        hrg::SourceFreeReport sf = hrg::source_free_report(k);
        bool ok = !per_color || sf.per_color_passed();
        nlohmann::json j{{"valid", true},
                         {"rank", k.rank()},
                         {"vertices", k.skeleton().vertices().size()},
                         {"edges", k.skeleton().edges().size()},
                         {"squares", k.squares().squares().size()},
                         {"per_color_source_free", sf.per_color_passed()}};
        std::ostringstream t;
        t << "valid k-graph: rank " << k.rank() << ", "
          << k.skeleton().vertices().size() << " vertices, "
          << k.skeleton().edges().size() << " edges, "
          << k.squares().squares().size() << " squares\n";
        if (per_color && !sf.per_color_passed()) {
          t << "per-color source-freeness fails at:";
          for (const auto& [v, c] : sf.per_color_violations)
            t << " (" << v << "," << c << ")";
          t << "\n";
          j["per_color_violations"] = sf.per_color_violations;
        }
        emit(as_json, j, t.str());
        return ok ? 0 : 1;
      } catch (const hrg::kg2_failure& e) {
        emit(as_json, {{"valid", false}, {"reason", e.what()}},
             std::string(e.what()) + "\n");
        return 1;
      } catch (const hrg::kg3_failure& e) {
        emit(as_json, {{"valid", false}, {"reason", e.what()}},
             std::string(e.what()) + "\n");
        return 1;
      }
    }
    if (*checkhr) {
      hrg::KGraph k = load(file);
      hrg::HrReport hr = hrg::check_hr(k, vertex, parse_colors(colors));
      emit(as_json, hr_json(hr),
           (hr.passed() ? "H_R holds" : "H_R fails: " + hr.summary()) + "\n");
      return hr.passed() ? 0 : 1;
    }
    if (*reduce_cmd) {
      hrg::KGraph k = load(file);
      try {
        hrg::ReductionResult r =
            hrg::reduce(k, vertex, parse_colors(colors), bridge);
        save_graph(r.graph, out);
        if (!emit_par.empty()) {
          std::ostringstream p;
          const auto& gs = r.graph.skeleton();
          for (std::size_t e = 0; e < gs.edges().size(); ++e)
            p << "par " << gs.edges()[e].id << " = "
              << hrg::path_to_string(k.skeleton(), r.parent_paths[e])
              << (r.theta_type[e] ? " theta" : " xi") << "\n";
          write_file(emit_par, p.str());
        }
        emit(as_json,
             {{"ok", true},
              {"vertices", r.graph.skeleton().vertices().size()},
              {"edges", r.graph.skeleton().edges().size()}},
             "reduced: " + std::to_string(r.graph.skeleton().vertices().size()) +
                 " vertices, " + std::to_string(r.graph.skeleton().edges().size()) +
                 " edges\n");
        return 0;
      } catch (const hrg::reduce_hypotheses_error& e) {
        emit(as_json, hr_json(e.report), std::string(e.what()) + "\n");
        return 1;
      }
    }
    if (*delay_cmd) {
      hrg::KGraph k = load(file);
      hrg::DelayResult d = hrg::delay(k, edge);
      save_graph(d.graph, out);
      nlohmann::json j{{"ok", true},
                       {"delayed_edge", d.delayed_edge},
                       {"linkage_class", d.linkage_class},
                       {"split_vertices", d.split_vertex}};
      for (const auto& a : d.added_edges)
        j["added_edges"].push_back({{"id", a.id},
                                    {"inner_rep", a.inner_rep},
                                    {"outer_rep", a.outer_rep}});
      emit(as_json, j,
           "delayed " + edge + ": class size " +
               std::to_string(d.linkage_class.size()) + ", added " +
               std::to_string(d.added_edges.size()) + " edges\n");
      return 0;
    }
    if (*cr_cmd) {
      hrg::KGraph k = load(file);
      try {
        hrg::CompleteEdgeReductionResult r = hrg::complete_edge_reduction(k, vertex);
        save_graph(r.graph, out);
        emit(as_json,
             {{"ok", true}, {"fixed_parent_edge", r.fixed_parent_edge}},
             "complete-edge reduced through " + r.fixed_parent_edge + "\n");
        return 0;
      } catch (const hrg::hypotheses_not_met_error& e) {
        emit(as_json, {{"ok", false}, {"reason", e.what()}},
             std::string(e.what()) + "\n");
        return 1;
      }
    }
    if (*product_cmd) {
      hrg::KGraph a = load(file), b = load(file2);
      save_graph(hrg::product(a, b), out);
      std::cout << "product written\n";
      return 0;
    }
    if (*iso_cmd) {
      hrg::KGraph a = load(file), b = load(file2);
      auto iso = hrg::isomorphic(a, b, allow_perm);
      if (!iso) {
        emit(as_json, {{"isomorphic", false}}, "not isomorphic\n");
        return 1;
      }
      nlohmann::json j{{"isomorphic", true},
                       {"vertex_map", iso->vertex_map},
                       {"edge_map", iso->edge_map},
                       {"color_perm", iso->color_perm}};
      std::ostringstream t;
      t << "isomorphic\n";
      for (const auto& [u, v] : iso->vertex_map) t << "vertex " << u << " -> " << v << "\n";
      for (const auto& [e, f] : iso->edge_map) t << "edge " << e << " -> " << f << "\n";
      emit(as_json, j, t.str());
      return 0;
    }
    if (*sat_cmd) {
      hrg::KGraph k = load(file);
      std::size_t bound = sat_cmd->count("--max-degree")
                              ? max_degree
                              : k.skeleton().vertices().size();
      hrg::SaturationResult r = hrg::saturate(k, parse_id_list(set_list), bound);
      nlohmann::json j{{"closure", r.closure}, {"max_degree", r.max_degree}};
      std::ostringstream t;
      t << "closure:";
      for (const std::string& v : r.closure) t << " " << v;
      t << "\n";
      for (const auto& step : r.trace) {
        t << "added " << step.vertex << " by " << step.rule << " via " << step.witness
          << "\n";
        j["trace"].push_back(
            {{"vertex", step.vertex}, {"rule", step.rule}, {"witness", step.witness}});
      }
      emit(as_json, j, t.str());
      return 0;
    }
    if (*cert_cmd) {
      hrg::KGraph k = load(file);
      try {
        hrg::MoritaCertificate cert =
            hrg::morita_certificate(k, vertex, parse_colors(colors), bridge);
        nlohmann::json j{{"schema", "kg-certificate-1"},
                         {"vertex", cert.vertex},
                         {"colors", cert.colors},
                         {"bridge_color", cert.bridge_color},
                         {"hr", hr_json(cert.hypotheses)},
                         {"per_color_source_free", cert.source_free.per_color_passed()},
                         {"grading_well_defined", cert.grading_well_defined.passed()},
                         {"realization", cert.realization.passed()},
                         {"injectivity_bound", cert.realization.injectivity_bound},
                         {"corner_set", cert.corner_set},
                         {"saturation_full", cert.saturation_full},
                         {"hereditary_only", cert.hereditary_only},
                         {"verdict", cert.passed()}};
        if (!cert.source_free.per_color_passed())
          j["per_color_violations"] = cert.source_free.per_color_violations;
        write_file(out, j.dump(2) + "\n");
        emit(as_json, j,
             std::string("certificate ") + (cert.passed() ? "passes" : "fails") + "\n");
        return cert.passed() ? 0 : 1;
      } catch (const hrg::reduce_hypotheses_error& e) {
        emit(as_json, hr_json(e.report), std::string(e.what()) + "\n");
        return 1;
      }
    }
    if (*export_cmd) {
      hrg::KgDocument doc = hrg::parse_kg(read_file(file));
      if (format == "dot")
        std::cout << hrg::to_dot(doc);
      else
        std::cout << hrg::to_json(doc).dump(2) << "\n";
      return 0;
    }
    if (*gen_cmd) {
      save_graph(run_gen(gen_name, gen_args), out);
      std::cout << "generated " << gen_name << "\n";
      return 0;
    }
  } catch (const hrg::syntax_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const hrg::semantic_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const hrg::invalid_parameter_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const hrg::error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
