#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "homflow/amalgam.hpp"
#include "homflow/flows.hpp"
#include "homflow/io.hpp"
#include "homflow/limit.hpp"
#include "homflow/ramsey.hpp"

using namespace homflow;
using nlohmann::json;

namespace {

struct Report {
  std::string command;
  json inputs = json::object();
  std::string verdict;  // pass | fail | witness
  json witness;         // optional
  int exit_code = 0;
};

int emit(Report rep, std::chrono::steady_clock::time_point t0) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  json doc;
  doc["command"] = rep.command;
  doc["inputs"] = rep.inputs;
  doc["verdict"] = rep.verdict;
  if (!rep.witness.is_null()) doc["witness"] = rep.witness;
  doc["timing_ms"] = ms;
  std::cout << doc.dump(2) << "\n";
  std::cerr << rep.command << ": " << rep.verdict << " (" << ms << " ms)\n";
  return rep.exit_code;
}

std::vector<int> map_from_file(const std::string& path, int domain_size) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open map file: " + path);
  json doc;
  in >> doc;
  std::vector<int> out(domain_size, -1);
  for (const json& p : doc) {
    int x = p.at(0).get<int>(), y = p.at(1).get<int>();
    if (x < 0 || x >= domain_size || out[x] >= 0)
      throw std::invalid_argument("malformed embedding map: " + path);
    out[x] = y;
  }
  for (int v : out)
    if (v < 0) throw std::invalid_argument("embedding map not total: " + path);
  return out;
}

json map_to_json(const std::vector<int>& m) {
  json out = json::array();
  for (size_t x = 0; x < m.size(); ++x) out.push_back({static_cast<int>(x), m[x]});
  return out;
}

json coloring_to_json(const ColoringWitness& w) {
  json out;
  out["copies"] = w.copies;
  out["colors"] = w.colors;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  auto t0 = std::chrono::steady_clock::now();
  CLI::App app{"finite-scale checks for amalgamation classes, Ramsey properties, "
               "order flows and the chain-gluing construction"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "search parallelism bound (currently single-threaded)");

  std::string cls_flag = "graph";
  bool ordered = false;

  auto* cmd_am = app.add_subcommand("amalgamate", "amalgamate B and C over A");
  std::string am_a, am_b, am_c, am_i, am_j;
  cmd_am->add_option("--A", am_a)->required();
  cmd_am->add_option("--B", am_b)->required();
  cmd_am->add_option("--C", am_c)->required();
  cmd_am->add_option("--i", am_i, "embedding A->B as a list of pairs")->required();
  cmd_am->add_option("--j", am_j, "embedding A->C as a list of pairs")->required();
  cmd_am->add_option("--class", cls_flag);
  cmd_am->add_flag("--ordered", ordered);

  auto* cmd_ram = app.add_subcommand("check-ramsey", "arrow check or witness search");
  std::string ram_a, ram_b, ram_c;
  int ram_colors = 2, ram_bound = 0;
  bool ram_exhaustive = false;
  cmd_ram->add_option("--A", ram_a)->required();
  cmd_ram->add_option("--B", ram_b)->required();
  cmd_ram->add_option("--C", ram_c);
  cmd_ram->add_option("--search-bound", ram_bound);
  cmd_ram->add_option("--colors", ram_colors);
  cmd_ram->add_option("--class", cls_flag);
  cmd_ram->add_flag("--ordered", ordered);
  cmd_ram->add_flag("--exhaustive", ram_exhaustive);

  auto* cmd_op = app.add_subcommand("check-ordering-property", "ordering-property witness search");
  std::string op_b;
  int op_bound = 4;
  cmd_op->add_option("--B", op_b)->required();
  cmd_op->add_option("--class", cls_flag);
  cmd_op->add_option("--bound", op_bound);

  auto* cmd_cc = app.add_subcommand("check-class", "hereditary / JEP / amalgamation checks");
  int cc_bound = 3;
  cmd_cc->add_option("--class", cls_flag);
  cmd_cc->add_flag("--ordered", ordered);
  cmd_cc->add_option("--bound", cc_bound);

  auto* cmd_bl = app.add_subcommand("build-limit", "scheduled chain-gluing construction");
  std::string bl_seed, bl_trace;
  int bl_budget = 10, bl_window = 1, bl_cap = 48;
  cmd_bl->add_option("--seed", bl_seed)->required();
  cmd_bl->add_option("--class", cls_flag);
  cmd_bl->add_option("--budget", bl_budget);
  cmd_bl->add_option("--window", bl_window);
  cmd_bl->add_option("--max-stage-size", bl_cap);
  cmd_bl->add_option("--trace", bl_trace);

  auto* cmd_ep = app.add_subcommand("check-ep", "extension-property report");
  std::string ep_structure;
  int ep_bound = 3;
  cmd_ep->add_option("--structure", ep_structure)->required();
  cmd_ep->add_option("--class", cls_flag);
  cmd_ep->add_option("--bound", ep_bound);

  auto* cmd_fl = app.add_subcommand("flow", "order-flow queries");
  std::string fl_structure, fl_orbit;
  bool fl_torder = false, fl_minimal = false;
  cmd_fl->add_option("--structure", fl_structure)->required();
  cmd_fl->add_option("--class", cls_flag);
  cmd_fl->add_option("--orbit-of", fl_orbit, "order point as a JSON list");
  cmd_fl->add_flag("--check-torder", fl_torder);
  cmd_fl->add_flag("--minimal", fl_minimal);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    Report rep;
    if (*cmd_am) {
      rep.command = "amalgamate";
      FinStructure a = load_structure(am_a), b = load_structure(am_b), c = load_structure(am_c);
      Embedding i{a, b, map_from_file(am_i, a.size)};
      Embedding j{a, c, map_from_file(am_j, a.size)};
      ClassSpec k = class_from_flag(cls_flag, ordered);
      bool all_ordered = a.linear_order && b.linear_order && c.linear_order;
      AmalgamResult r = (ordered && all_ordered) ? amalgamate_ordered(a, b, c, i, j, k)
                                                 : amalgamate(a, b, c, i, j, k);
      rep.inputs = {{"A", am_a}, {"B", am_b}, {"C", am_c}, {"class", k.name()}};
      rep.verdict = "witness";
      rep.witness = {{"D", structure_to_json(r.amalgam)},
                     {"k", map_to_json(r.into_b.map)},
                     {"l", map_to_json(r.into_c.map)}};
    } else if (*cmd_ram) {
      rep.command = "check-ramsey";
      ClassSpec k = class_from_flag(cls_flag, ordered);
      FinStructure a = load_structure(ram_a), b = load_structure(ram_b);
      rep.inputs = {{"A", ram_a}, {"B", ram_b}, {"colors", ram_colors}, {"class", k.name()}};
      if (!ram_c.empty()) {
        FinStructure c = load_structure(ram_c);
        rep.inputs["C"] = ram_c;
        ArrowInstance inst{c, b, a, ram_colors};
        ArrowResult r = arrows(inst, ram_exhaustive);
        if (r.holds) {
          rep.verdict = "pass";
        } else {
          rep.verdict = "fail";
          rep.exit_code = 1;
          if (r.bad) rep.witness = coloring_to_json(*r.bad);
        }
      } else {
        if (ram_bound <= 0) throw std::invalid_argument("need --C or --search-bound");
        rep.inputs["search_bound"] = ram_bound;
        auto w = find_ramsey_witness(a, b, ram_colors, k, ram_bound);
        if (w) {
          rep.verdict = "witness";
          rep.witness = structure_to_json(*w);
        } else {
          rep.verdict = "fail";
          rep.exit_code = 1;
        }
      }
    } else if (*cmd_op) {
      rep.command = "check-ordering-property";
      ClassSpec k = class_from_flag(cls_flag, true);
      FinStructure b = load_structure(op_b);
      rep.inputs = {{"B", op_b}, {"class", k.name()}, {"bound", op_bound}};
      auto w = check_ordering_property(b, k, op_bound);
      if (w) {
        rep.verdict = "witness";
        rep.witness = structure_to_json(*w);
      } else {
        rep.verdict = "fail";
        rep.exit_code = 1;
      }
    } else if (*cmd_cc) {
      rep.command = "check-class";
      ClassSpec k = class_from_flag(cls_flag, ordered);
      rep.inputs = {{"class", k.name()}, {"bound", cc_bound}};
      json results = json::object();
      bool all_ok = true;
      auto record = [&](const std::string& name, const ClassCheckResult& r) {
        results[name] = {{"ok", r.ok}, {"note", r.note}};
        json ws = json::array();
        for (const auto& w : r.witnesses) ws.push_back(structure_to_json(w));
        if (!ws.empty()) results[name]["witnesses"] = ws;
        all_ok &= r.ok;
      };
      record("hereditary", check_hereditary(k, cc_bound));
      record("jep", check_jep(k, cc_bound));
      record("amalgamation", check_amalgamation(k, cc_bound));
      if (k.ordered) record("reasonable", check_reasonable(k, cc_bound));
      rep.witness = results;
      rep.verdict = all_ok ? "pass" : "fail";
      rep.exit_code = all_ok ? 0 : 1;
    } else if (*cmd_bl) {
      rep.command = "build-limit";
      ClassSpec k = class_from_flag(cls_flag, true);
      FinStructure seed = load_structure(bl_seed);
      rep.inputs = {{"seed", bl_seed}, {"class", k.name()}, {"budget", bl_budget},
                    {"window", bl_window}};
      ConstructionState st = init_state(seed, k, bl_window);
      st.max_stage_size = bl_cap;
      for (int step = 0; step < bl_budget; ++step)
        if (!construction_step(st)) break;
      AuditReport audit = audit_state(st);
      json stages = json::array();
      for (const auto& s : st.stages) stages.push_back(s.size);
      rep.witness = {{"steps", st.steps_done},
                     {"stage_sizes", stages},
                     {"exhausted", st.exhausted},
                     {"audit_ok", audit.ok},
                     {"audit_issues", audit.issues}};
      if (!bl_trace.empty()) {
        std::filesystem::create_directories(bl_trace);
        for (size_t s = 0; s < st.stages.size(); ++s) {
          char name[32];
          std::snprintf(name, sizeof name, "stage_%03zu.json", s);
          save_structure(bl_trace + "/" + name, st.stages[s]);
        }
        json ledger = json::array();
        for (size_t ti = 0; ti < st.triples.size(); ++ti) {
          if (st.psi_of[ti].empty()) continue;
          const Triple& t = st.triples[ti];
          json pairs = json::array();
          for (size_t x = 0; x < st.psi_of[ti].size(); ++x)
            if (st.psi_of[ti][x] >= 0) pairs.push_back({static_cast<int>(x), st.psi_of[ti][x]});
          ledger.push_back({{"F", t.f},
                            {"G", t.g},
                            {"phi", t.phi},
                            {"order_preserving", t.order_preserving},
                            {"psi", pairs}});
        }
        std::ofstream out(bl_trace + "/psi_ledger.json");
        out << ledger.dump(2) << "\n";
      }
      rep.verdict = audit.ok ? (st.exhausted ? "fail" : "pass") : "fail";
      rep.exit_code = (audit.ok && !st.exhausted) ? 0 : 1;
    } else if (*cmd_ep) {
      rep.command = "check-ep";
      ClassSpec k = class_from_flag(cls_flag, ordered);
      FinStructure a = load_structure(ep_structure);
      rep.inputs = {{"structure", ep_structure}, {"class", k.name()}, {"bound", ep_bound}};
      EpReport r = check_extension_property(a, k, ep_bound);
      json fails = json::array();
      for (const auto& [b, c] : r.failures)
        fails.push_back({{"B", structure_to_json(b)}, {"C", structure_to_json(c)}});
      rep.witness = {{"pass", r.pass}, {"fail", r.fail}, {"failures", fails}};
      rep.verdict = r.fail == 0 ? "pass" : "fail";
      rep.exit_code = r.fail == 0 ? 0 : 1;
    } else if (*cmd_fl) {
      rep.command = "flow";
      ClassSpec k = class_from_flag(cls_flag, true);
      FinStructure base = drop_linear_order(load_structure(fl_structure));
      rep.inputs = {{"structure", fl_structure}, {"class", k.name()}};
      FiniteFlow flow = make_flow(base, k);
      json results;
      results["points"] = flow.points;
      results["group_size"] = flow.group.size();
      bool ok = true;
      if (!fl_orbit.empty()) {
        OrderPoint p = json::parse(fl_orbit).get<OrderPoint>();
        results["orbit"] = orbit_closure(flow, p);
      }
      if (fl_torder) {
        TorderReport tr = check_torder_equivalence(base, base.size);
        results["torder"] = {{"homogeneous", tr.homogeneous},
                             {"pairs", tr.pairs},
                             {"forward_ok", tr.forward_ok},
                             {"agreement", tr.agreement}};
        ok &= tr.forward_ok;
      }
      if (fl_minimal) {
        bool min = is_minimal(flow);
        results["minimal"] = min;
        ok &= min;
      }
      rep.witness = results;
      rep.verdict = ok ? "pass" : "fail";
      rep.exit_code = ok ? 0 : 1;
    }
    return emit(std::move(rep), t0);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
