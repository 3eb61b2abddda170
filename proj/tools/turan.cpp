// turan - exact computations around clique-free edge sets: extremal numbers,
// inequality generators, tightness witnesses, Chvatal-Gomory derivations,
// facet verification by exact rank, and an exact rational LP over the clique
// relaxation. All output is deterministic; JSON is the default format.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "turan/combinat.hpp"
#include "turan/extremal.hpp"
#include "turan/facets.hpp"
#include "turan/inequalities.hpp"
#include "turan/json_io.hpp"
#include "turan/limits.hpp"
#include "turan/lp.hpp"
#include "turan/rational.hpp"

namespace {

using nlohmann::ordered_json;
using namespace turan;

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw std::invalid_argument("empty vertex list");
  return out;
}

std::map<Vertex, int> parse_multiplicities(const std::string& text) {
  std::map<Vertex, int> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("multiplicities look like v:m,v:m");
    out[std::stoi(item.substr(0, colon))] = std::stoi(item.substr(colon + 1));
  }
  return out;
}

// Inline inequality construction shared by `gen` and the `check`/`cg` verbs.
struct GenOptions {
  std::string family;
  int n = 0, a = 0, r = 2, l = 0;
  Vertex v = 1;
  int size = 0;
  std::string vertices;
  std::string mult;
};

void add_gen_flags(CLI::App* cmd, GenOptions& gen, bool with_family) {
  if (with_family)
    cmd->add_option("family", gen.family, "clique|doubling|blowup|wheel|web")
        ->required();
  cmd->add_option("--n", gen.n, "ambient vertex count");
  cmd->add_option("--a", gen.a, "forbidden clique size");
  cmd->add_option("--r", gen.r, "edge uniformity")->capture_default_str();
  cmd->add_option("--l", gen.l, "wheel/web cycle parameter");
  cmd->add_option("--v", gen.v, "doubled vertex");
  cmd->add_option("--size", gen.size, "clique support = vertices 1..size");
  cmd->add_option("--vertices", gen.vertices,
                  "comma separated clique support, e.g. 1,2,3,4,5");
  cmd->add_option("--mult", gen.mult,
                  "blow-up multiplicities, e.g. 1:2,2:2");
}

LinearInequality build_from_gen(const GenOptions& gen) {
  if (gen.a == 0) throw std::invalid_argument("--a is required");
  if (gen.family == "clique") {
    std::vector<Vertex> support;
    if (!gen.vertices.empty())
      support = parse_vertex_list(gen.vertices);
    else if (gen.size > 0)
      for (Vertex i = 1; i <= gen.size; ++i) support.push_back(i);
    else
      throw std::invalid_argument("clique needs --vertices or --size");
    return clique_inequality(support, gen.a, gen.r, gen.n);
  }
  if (gen.family == "doubling") {
    if (gen.n == 0) throw std::invalid_argument("doubling needs --n");
    return doubling_inequality(gen.n, gen.a, gen.v);
  }
  if (gen.family == "blowup") {
    if (gen.n == 0 || gen.mult.empty())
      throw std::invalid_argument("blowup needs --n and --mult");
    return blowup_inequality(
        BlowupSpec(gen.n, gen.a, parse_multiplicities(gen.mult)));
  }
  if (gen.family == "wheel") {
    if (gen.l == 0) throw std::invalid_argument("wheel needs --l");
    return wheel_inequality(WheelSpec(gen.l, gen.a, gen.r));
  }
  if (gen.family == "web") {
    if (gen.l == 0) throw std::invalid_argument("web needs --l");
    return web_inequality(WebSpec(gen.l, gen.a, gen.r));
  }
  throw std::invalid_argument("unknown family: " + gen.family);
}

LinearInequality load_inequality(const std::string& path,
                                 const GenOptions& gen) {
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return inequality_from_json(buffer.str());
  }
  if (gen.family.empty())
    throw std::invalid_argument("provide --ineq FILE or --gen FAMILY");
  return build_from_gen(gen);
}

EdgeSet resolve_ambient(const std::string& text, const LinearInequality& ineq) {
  if (text == "support" || text.empty()) return ineq.support();
  if (text.rfind("complete:", 0) == 0) {
    int n = std::stoi(text.substr(9));
    return EdgeSet::complete(n, ineq.r);
  }
  throw std::invalid_argument("ambient must be 'support' or 'complete:N'");
}

int effective_a(const GenOptions& gen, int a_flag) {
  if (a_flag > 0) return a_flag;
  if (gen.a > 0) return gen.a;
  throw std::invalid_argument("--a is required");
}

void emit(const ordered_json& doc, const std::string& format) {
  if (format == "csv")
    throw std::invalid_argument("csv output is only available for `table`");
  std::cout << doc.dump(2) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact Turan-polytope computations"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  app.add_option("--format", format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  std::uint64_t max_edges = 0;
  app.add_option("--max-edges", max_edges, "edge universe cap")
      ->envname("TURAN_MAX_EDGES");

  // --- ex -------------------------------------------------------------
  auto* ex_cmd = app.add_subcommand("ex", "extremal number ex(n,a,r)")->fallthrough();
  int ex_n = 0, ex_a = 0, ex_r = 2;
  bool ex_oracle_flag = false;
  ex_cmd->add_option("--n", ex_n)->required();
  ex_cmd->add_option("--a", ex_a)->required();
  ex_cmd->add_option("--r", ex_r, "uniformity (r >= 3 always uses the oracle)");
  ex_cmd->add_flag("--oracle", ex_oracle_flag, "force the brute-force oracle");

  // --- table ----------------------------------------------------------
  auto* table_cmd = app.add_subcommand("table", "t-recurrence table")->fallthrough();
  int table_a = 0, table_nmax = 0;
  table_cmd->add_option("--a", table_a)->required();
  table_cmd->add_option("--n-max", table_nmax)->required();

  // --- gen ------------------------------------------------------------
  auto* gen_cmd = app.add_subcommand("gen", "generate an inequality")->fallthrough();
  GenOptions gen_opts;
  add_gen_flags(gen_cmd, gen_opts, true);

  // --- witness ----------------------------------------------------------
  auto* wit_cmd = app.add_subcommand("witness", "tightness witness edge sets")->fallthrough();
  std::string wit_family, wit_kind = "I";
  int wit_l = 0, wit_a = 0, wit_r = 2;
  wit_cmd->add_option("family", wit_family, "wheel|web")->required();
  wit_cmd->add_option("--l", wit_l)->required();
  wit_cmd->add_option("--a", wit_a)->required();
  wit_cmd->add_option("--r", wit_r);
  wit_cmd->add_option("--kind", wit_kind)->check(CLI::IsMember({"I", "II"}));

  // --- check ----------------------------------------------------------
  auto* check_cmd = app.add_subcommand("check", "verify inequalities")->fallthrough();
  check_cmd->require_subcommand(1);

  auto* facet_cmd = check_cmd->add_subcommand("facet", "facet verdict")->fallthrough();
  std::string facet_ineq_path, facet_ambient = "support", facet_gen;
  GenOptions facet_gen_opts;
  int facet_a = 0;
  facet_cmd->add_option("--ineq", facet_ineq_path, "inequality JSON file");
  facet_cmd->add_option("--gen", facet_gen_opts.family,
                        "generate inline: clique|doubling|blowup|wheel|web");
  add_gen_flags(facet_cmd, facet_gen_opts, false);
  facet_cmd->add_option("--ambient", facet_ambient, "'support' or 'complete:N'");
  facet_cmd->add_option("--check-a", facet_a, "clique bound when using --ineq");

  auto* validity_cmd = check_cmd->add_subcommand("validity", "oracle validity")->fallthrough();
  std::string val_ineq_path;
  GenOptions val_gen_opts;
  int val_a = 0;
  validity_cmd->add_option("--ineq", val_ineq_path, "inequality JSON file");
  validity_cmd->add_option("--gen", val_gen_opts.family);
  add_gen_flags(validity_cmd, val_gen_opts, false);
  validity_cmd->add_option("--check-a", val_a, "clique bound when using --ineq");

  auto* lift_cmd = check_cmd->add_subcommand("lift", "sequential lifting")->fallthrough();
  std::string lift_form = "rank", lift_ambient, lift_ineq_path;
  GenOptions lift_gen_opts;
  int lift_a = 0;
  lift_cmd->add_option("--form", lift_form, "rank|general")
      ->check(CLI::IsMember({"rank", "general"}));
  lift_cmd->add_option("--ineq", lift_ineq_path, "inequality JSON file");
  lift_cmd->add_option("--gen", lift_gen_opts.family);
  add_gen_flags(lift_cmd, lift_gen_opts, false);
  lift_cmd->add_option("--ambient", lift_ambient, "'complete:N'")->required();
  lift_cmd->add_option("--check-a", lift_a, "clique bound when using --ineq");

  // --- cg -------------------------------------------------------------
  auto* cg_cmd = app.add_subcommand("cg", "Chvatal-Gomory derivations")->fallthrough();
  cg_cmd->require_subcommand(1);

  auto* cg_subset = cg_cmd->add_subcommand("subset", "subset aggregation step")->fallthrough();
  std::string cgs_vertices;
  int cgs_size = 0, cgs_a = 0;
  cg_subset->add_option("--vertices", cgs_vertices);
  cg_subset->add_option("--size", cgs_size, "S = {1..size}");
  cg_subset->add_option("--a", cgs_a)->required();

  auto* cg_doub = cg_cmd->add_subcommand("doubling", "doubling aggregation")->fallthrough();
  int cgd_n = 0, cgd_a = 0;
  cg_doub->add_option("--n", cgd_n)->required();
  cg_doub->add_option("--a", cgd_a)->required();

  auto* cg_wheel = cg_cmd->add_subcommand("wheel", "wheel derivation")->fallthrough();
  int cgw_l = 0, cgw_a = 0, cgw_r = 2;
  cg_wheel->add_option("--l", cgw_l)->required();
  cg_wheel->add_option("--a", cgw_a)->required();
  cg_wheel->add_option("--r", cgw_r);

  // --- lp -------------------------------------------------------------
  auto* lp_cmd = app.add_subcommand("lp", "exact LP over the clique relaxation")->fallthrough();
  int lp_n = 0, lp_a = 0, lp_r = 2;
  bool lp_full_clique = false;
  std::string lp_export;
  lp_cmd->add_option("--n", lp_n)->required();
  lp_cmd->add_option("--a", lp_a)->required();
  lp_cmd->add_option("--r", lp_r);
  lp_cmd->add_flag("--include-full-clique", lp_full_clique,
                   "add the i = n clique row");
  lp_cmd->add_option("--export-lp", lp_export, "write LP text format to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);           // prints help or the parse diagnostic
    return code == 0 ? 0 : 2;         // flag mistakes are usage errors
  }

  if (max_edges > 0) limits::set_max_edges(max_edges);

  if (*ex_cmd) {
    std::int64_t value;
    if (ex_r >= 3 || ex_oracle_flag) {
      OracleOptions opts;
      opts.enumerate_optima = false;
      value = ex_oracle(EdgeSet::complete(ex_n, ex_r), ex_a, {}, opts).value;
    } else {
      value = ex_exact(ex_n, ex_a);
    }
    std::cout << value << "\n";
    return 0;
  }

  if (*table_cmd) {
    ExtremalTable table = t_table(table_a, table_nmax);
    if (format == "csv") {
      std::cout << "n,t\n";
      for (const auto& [i, t] : table.rows) std::cout << i << "," << t << "\n";
    } else if (format == "text") {
      for (const auto& [i, t] : table.rows) std::cout << i << " " << t << "\n";
    } else {
      ordered_json doc;
      doc["a"] = table.a;
      ordered_json rows = ordered_json::array();
      for (const auto& [i, t] : table.rows)
        rows.push_back(ordered_json{{"n", i}, {"t", t}});
      doc["rows"] = std::move(rows);
      std::cout << doc.dump(2) << "\n";
    }
    return 0;
  }

  if (*gen_cmd) {
    std::cout << to_json_string(build_from_gen(gen_opts)) << "\n";
    return 0;
  }

  if (*wit_cmd) {
    WitnessKind kind = wit_kind == "I" ? WitnessKind::I : WitnessKind::II;
    EdgeSet witness = [&] {
      if (wit_family == "wheel")
        return wheel_witness(WheelSpec(wit_l, wit_a, wit_r), kind);
      if (wit_family == "web")
        return web_witness(WebSpec(wit_l, wit_a, wit_r), kind);
      throw std::invalid_argument("witness family must be wheel or web");
    }();
    std::int64_t rhs = wit_family == "wheel"
                           ? wheel_inequality(WheelSpec(wit_l, wit_a, wit_r)).rhs
                           : web_inequality(WebSpec(wit_l, wit_a, wit_r)).rhs;
    ordered_json doc = ordered_json::parse(to_json_string(witness));
    ordered_json out;
    out["family"] = wit_family;
    out["l"] = wit_l;
    out["a"] = wit_a;
    out["r"] = wit_r;
    out["kind"] = wit_kind;
    out["n"] = doc["n"];
    out["edges"] = doc["edges"];
    out["size"] = witness.size();
    out["rhs"] = rhs;
    emit(out, format);
    return 0;
  }

  if (*facet_cmd) {
    LinearInequality ineq = load_inequality(facet_ineq_path, facet_gen_opts);
    int a = effective_a(facet_gen_opts, facet_a);
    EdgeSet ambient = resolve_ambient(facet_ambient, ineq);
    FacetVerdict verdict = is_facet(ineq, a, ambient);
    std::cout << to_json_string(verdict) << "\n";
    return 0;
  }

  if (*validity_cmd) {
    LinearInequality ineq = load_inequality(val_ineq_path, val_gen_opts);
    int a = effective_a(val_gen_opts, val_a);
    ValidityReport report = check_validity(ineq, a);
    std::cout << to_json_string(report) << "\n";
    return 0;
  }

  if (*lift_cmd) {
    LinearInequality ineq = load_inequality(lift_ineq_path, lift_gen_opts);
    int a = effective_a(lift_gen_opts, lift_a);
    EdgeSet ambient = resolve_ambient(lift_ambient, ineq);
    bool holds = lift_form == "rank"
                     ? check_lift_rank_form(ineq.support(ambient.ambient().n),
                                            ambient, a)
                     : check_lift_general_form(ineq, ambient, a);
    ordered_json doc;
    doc["form"] = lift_form;
    doc["label"] = ineq.label;
    doc["ambient_n"] = ambient.ambient().n;
    doc["holds"] = holds;
    emit(doc, format);
    return 0;
  }

  if (*cg_subset) {
    std::vector<Vertex> support;
    if (!cgs_vertices.empty())
      support = parse_vertex_list(cgs_vertices);
    else if (cgs_size > 0)
      for (Vertex i = 1; i <= cgs_size; ++i) support.push_back(i);
    else
      throw std::invalid_argument("cg subset needs --vertices or --size");
    std::cout << to_json_string(cg_subset_step(support, cgs_a)) << "\n";
    return 0;
  }

  if (*cg_doub) {
    std::cout << to_json_string(cg_doubling_aggregate(cgd_n, cgd_a)) << "\n";
    return 0;
  }

  if (*cg_wheel) {
    std::cout << to_json_string(cg_wheel_derivation(WheelSpec(cgw_l, cgw_a,
                                                              cgw_r)))
              << "\n";
    return 0;
  }

  if (*lp_cmd) {
    ConstraintSystem system = build_Q(lp_n, lp_a, lp_r, lp_full_clique);
    std::vector<Rational> ones(system.variable_count(), Rational(1));
    if (!lp_export.empty()) {
      std::ofstream out(lp_export);
      if (!out) throw std::invalid_argument("cannot write " + lp_export);
      write_lp_format(system, ones, out);
    }
    LpResult lp = lp_max(system, ones);
    BigInt floor_value = floor_rational(lp.value);
    std::optional<std::int64_t> ex_value;
    if (lp_r == 2) ex_value = ex_exact(lp_n, lp_a);
    if (format == "text") {
      std::cout << "optimum = " << rational_to_string(lp.value) << "\n"
                << "floor = " << floor_value.str() << "\n";
      if (ex_value) std::cout << "ex = " << *ex_value << "\n";
      std::cout << "pivots = " << lp.pivots << "\n";
    } else {
      ordered_json doc;
      doc["n"] = lp_n;
      doc["a"] = lp_a;
      doc["r"] = lp_r;
      doc["optimum"] = rational_to_string(lp.value);
      doc["floor"] = std::stoll(floor_value.str());
      if (ex_value)
        doc["ex"] = *ex_value;
      else
        doc["ex"] = nullptr;
      doc["pivots"] = lp.pivots;
      emit(doc, format);
    }
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    return 2;  // unreachable: CLI11_PARSE handles these
  } catch (const turan::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
