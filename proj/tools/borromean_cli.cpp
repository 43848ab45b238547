// borromean: modular data and Borromean tensors of twisted Drinfeld doubles.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "borromean/center.hpp"
#include "borromean/error.hpp"
#include "borromean/io.hpp"
#include "borromean/matcher.hpp"
#include "borromean/oracle.hpp"
#include "borromean/parallel.hpp"
#include "borromean/pq_family.hpp"
#include "borromean/selftest.hpp"

using namespace borromean;

namespace {

constexpr int kExitNoMatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInternal = 4;

struct CategoryArgs {
  std::string group;
  std::string cocycle = "trivial";
  std::vector<std::string> chars;
};

struct OutputArgs {
  std::string out;
};

void emit(const OutputArgs& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_file_atomic(o.out, text);
  }
}

void add_category_options(CLI::App* cmd, CategoryArgs& args) {
  cmd->add_option("group", args.group, "group file, pq:P,Q or cyclic:N")->required();
  cmd->add_option("cocycle", args.cocycle, "cocycle file, pq:U or trivial");
  cmd->add_option("--chars", args.chars, "character table files for centralizers");
}

struct LoadedCategory {
  GroupPtr group;
  std::optional<ThreeCocycle> omega;
  std::vector<CharacterTable> tables;
};

LoadedCategory load_category(const CategoryArgs& args) {
  LoadedCategory c;
  c.group = load_group_argument(args.group);
  c.omega = load_cocycle_argument(args.cocycle, c.group);
  c.omega->require_valid();
  for (const auto& path : args.chars) c.tables.push_back(table_from_json(read_json_file(path), c.group));
  return c;
}

std::vector<Element> parse_elements(const std::string& text) {
  std::vector<Element> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      out.push_back(static_cast<Element>(std::stol(token)));
    } catch (const std::exception&) {
      throw ValidationError("malformed element list '" + text + "'");
    }
  }
  return out;
}

std::string theorem_text(const TheoremResult& r) {
  std::ostringstream os;
  os << "pq(" << r.p << "," << r.q << ") invariants";
  for (const auto& i : r.invariants) os << ' ' << i;
  os << (r.fast ? " (fast sub-tensor)" : "") << "\nmatch matrix (row u, column u'):\n";
  for (const auto& row : r.matches) {
    os << "  ";
    for (bool m : row) os << (m ? '1' : '.');
    os << '\n';
  }
  os << "classes:";
  for (const auto& c : r.classes) {
    os << " {";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << '}';
  }
  os << "\n" << std::fixed << std::setprecision(2) << r.seconds << " s\n";
  return os.str();
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Modular data and Borromean tensors of twisted Drinfeld doubles"};
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = default_jobs();
  OutputArgs output;
  app.add_option("--out", output.out, "write the result to this file atomically");

  // group
  auto* group_cmd = app.add_subcommand("group", "group inspection");
  group_cmd->require_subcommand(1);
  std::string group_arg;
  auto* group_info = group_cmd->add_subcommand("info", "order, classes and centralizer sizes");
  group_info->add_option("group", group_arg)->required();
  auto* group_export = group_cmd->add_subcommand("export", "write the group as JSON");
  group_export->add_option("group", group_arg)->required();

  // cocycle
  auto* cocycle_cmd = app.add_subcommand("cocycle", "3-cocycles");
  cocycle_cmd->require_subcommand(1);
  std::string cocycle_arg;
  auto* cocycle_verify = cocycle_cmd->add_subcommand("verify", "check normalization and the cocycle identity");
  cocycle_verify->add_option("group", group_arg)->required();
  cocycle_verify->add_option("cocycle", cocycle_arg)->required();
  int p = 0, q = 0, u = 0;
  auto* cocycle_pq = cocycle_cmd->add_subcommand("pq", "the cocycle w^u on Z/q x| Z/p");
  cocycle_pq->add_option("--p", p)->required();
  cocycle_pq->add_option("--q", q)->required();
  cocycle_pq->add_option("--u", u)->required();

  // chars
  auto* chars_cmd = app.add_subcommand("chars", "character tables");
  chars_cmd->require_subcommand(1);
  std::string subgroup_arg, table_path;
  auto* chars_abelian = chars_cmd->add_subcommand("abelian", "linear characters of an abelian subgroup");
  chars_abelian->add_option("group", group_arg)->required();
  chars_abelian->add_option("--subgroup", subgroup_arg, "comma-separated sorted elements")->required();
  auto* chars_pq = chars_cmd->add_subcommand("pq", "Irr(Z/q x| Z/p)");
  chars_pq->add_option("group", group_arg)->required();
  auto* chars_load = chars_cmd->add_subcommand("load", "validate a character table file");
  chars_load->add_option("group", group_arg)->required();
  chars_load->add_option("table", table_path)->required();

  // category commands
  CategoryArgs cat;
  auto* simples_cmd = app.add_subcommand("simples", "list the simple objects");
  add_category_options(simples_cmd, cat);
  auto* tmatrix_cmd = app.add_subcommand("tmatrix", "bundle with T");
  add_category_options(tmatrix_cmd, cat);
  auto* smatrix_cmd = app.add_subcommand("smatrix", "bundle with T and S");
  add_category_options(smatrix_cmd, cat);
  smatrix_cmd->add_option("--jobs", jobs, "worker threads (default: BORROMEAN_JOBS or all cores)");
  auto* btensor_cmd = app.add_subcommand("btensor", "bundle with T and B");
  add_category_options(btensor_cmd, cat);
  std::string mode = "general";
  bool full_fill = false;
  btensor_cmd->add_option("--mode", mode, "general or auto")->check(CLI::IsMember({"general", "auto"}));
  btensor_cmd->add_option("--jobs", jobs, "worker threads (default: BORROMEAN_JOBS or all cores)");
  btensor_cmd->add_flag("--full-fill", full_fill, "evaluate every entry instead of one per cyclic orbit");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "categorical braid evaluation");
  oracle_cmd->require_subcommand(1);
  auto* oracle_trace = oracle_cmd->add_subcommand("trace", "trace of a braid closure on three colored strands");
  add_category_options(oracle_trace, cat);
  std::string word = "s2' s1 s2' s1 s2' s1", colors_arg;
  oracle_trace->add_option("--word", word, "tokens s1, s1', s2, s2', applied right to left");
  oracle_trace->add_option("--colors", colors_arg, "three simple indices i,j,k")->required();

  // match
  auto* match_cmd = app.add_subcommand("match", "compare two bundles up to relabeling");
  std::string invariants = "T,B", bundle_a, bundle_b;
  match_cmd->add_option("--invariants", invariants, "subset of T,S,B");
  match_cmd->add_option("a", bundle_a)->required();
  match_cmd->add_option("b", bundle_b)->required();

  // pq
  auto* pq_cmd = app.add_subcommand("pq", "the Z/q x| Z/p family");
  pq_cmd->require_subcommand(1);
  auto* pq_verify = pq_cmd->add_subcommand("verify", "pairwise comparison of the p categories");
  std::string pq_invariants = "T,B";
  bool fast = false, json_output = false;
  pq_verify->add_option("--p", p)->required();
  pq_verify->add_option("--q", q)->required();
  pq_verify->add_option("--invariants", pq_invariants, "T,B or S,T");
  pq_verify->add_flag("--fast", fast, "restrict B to unit entries and families (2,2,3)");
  pq_verify->add_option("--jobs", jobs, "worker threads (default: BORROMEAN_JOBS or all cores)");
  pq_verify->add_flag("--json", json_output, "emit JSON instead of text");
  auto* pq_proof = pq_cmd->add_subcommand("proof-support", "arithmetic identities used by the distinction argument");
  pq_proof->add_option("--p", p)->required();
  pq_proof->add_option("--q", q)->required();

  // selftest
  auto* selftest_cmd = app.add_subcommand("selftest", "property suite at order <= 21");
  bool fault_omega = false;
  selftest_cmd->add_flag("--fault-omega", fault_omega, "drop one Omega term to exercise failure reporting");
  selftest_cmd->add_option("--jobs", jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (jobs < 1) {
    std::cerr << "error: --jobs must be positive\n";
    return kExitUsage;
  }

  if (*group_info) {
    const GroupPtr g = load_group_argument(group_arg);
    Json classes = Json::array();
    for (const auto& c : g->conjugacy_classes()) {
      classes.push_back(Json{{"representative", c.representative},
                             {"size", c.members.size()},
                             {"centralizer_order", g->centralizer(c.representative).size()},
                             {"element_order", g->element_order(c.representative)}});
    }
    emit(output, dump(Json{{"name", g->name()}, {"order", g->order()}, {"classes", classes}}));
    return 0;
  }
  if (*group_export) {
    emit(output, dump(group_to_json(*load_group_argument(group_arg))));
    return 0;
  }
  if (*cocycle_verify) {
    const GroupPtr g = load_group_argument(group_arg);
    const ThreeCocycle w = [&] {
      if (cocycle_arg == "trivial" || cocycle_arg.rfind("pq:", 0) == 0) return load_cocycle_argument(cocycle_arg, g);
      const Json j = read_json_file(cocycle_arg);
      const long modulus = j.value("modulus", 0L);
      auto values = j.value("values", std::vector<long>{});
      const std::size_t n = static_cast<std::size_t>(g->order());
      if (modulus < 1 || values.size() != n * n * n) throw ValidationError("cocycle file has the wrong shape");
      return ThreeCocycle(g, modulus, std::move(values));
    }();
    if (auto bad = w.validate()) {
      std::cerr << "invalid: " << bad->describe() << "\n";
      return kExitValidation;
    }
    emit(output, "valid\n");
    return 0;
  }
  if (*cocycle_pq) {
    const GroupPtr g = std::make_shared<const FiniteGroup>(pq_group(p, q));
    emit(output, dump(cocycle_to_json(pq_cocycle(g, u))));
    return 0;
  }
  if (*chars_abelian) {
    const GroupPtr g = load_group_argument(group_arg);
    emit(output, dump(table_to_json(abelian_character_table(g, parse_elements(subgroup_arg)))));
    return 0;
  }
  if (*chars_pq) {
    const GroupPtr g = load_group_argument(group_arg);
    if (!g->pq_parameters()) throw ValidationError("group has no pq parameters");
    emit(output, dump(table_to_json(pq_character_table(g))));
    return 0;
  }
  if (*chars_load) {
    const GroupPtr g = load_group_argument(group_arg);
    emit(output, dump(table_to_json(table_from_json(read_json_file(table_path), g))));
    return 0;
  }
  if (*simples_cmd) {
    const LoadedCategory c = load_category(cat);
    Json list = Json::array();
    for (const auto& s : enumerate_simples(*c.omega, c.tables)) list.push_back(simple_to_json(s));
    emit(output, dump(list));
    return 0;
  }
  if (*tmatrix_cmd || *smatrix_cmd || *btensor_cmd) {
    const LoadedCategory c = load_category(cat);
    const TwistedDouble category(*c.omega, enumerate_simples(*c.omega, c.tables));
    BundleRequest request;
    request.jobs = jobs;
    request.s = static_cast<bool>(*smatrix_cmd);
    request.b = static_cast<bool>(*btensor_cmd);
    request.b_options.mode = mode == "auto" ? BMode::kAuto : BMode::kGeneral;
    request.b_options.full_fill = full_fill;
    emit(output, dump(bundle_to_json(compute_bundle(category, request))));
    return 0;
  }
  if (*oracle_trace) {
    const LoadedCategory c = load_category(cat);
    const auto simples = enumerate_simples(*c.omega, c.tables);
    const auto idx = parse_elements(colors_arg);
    if (idx.size() != 3) throw ValidationError("--colors needs exactly three indices");
    std::array<std::size_t, 3> colors{};
    for (int i = 0; i < 3; ++i) {
      if (idx[i] < 0 || static_cast<std::size_t>(idx[i]) >= simples.size()) {
        throw ValidationError("color index " + std::to_string(idx[i]) + " is out of range");
      }
      colors[i] = static_cast<std::size_t>(idx[i]);
    }
    const BraidOracle oracle(*c.omega, simples);
    emit(output, dump(cyclotomic_to_json(oracle.trace(parse_braid_word(word), colors))));
    return 0;
  }
  if (*match_cmd) {
    const InvariantSet which = InvariantSet::parse(invariants);
    const InvariantBundle a = bundle_from_json(read_json_file(bundle_a));
    const InvariantBundle b = bundle_from_json(read_json_file(bundle_b));
    const MatchResult r = match(a, b, which);
    emit(output, dump(match_to_json(r)));
    return r.found ? 0 : kExitNoMatch;
  }
  if (*pq_verify) {
    const InvariantSet which = InvariantSet::parse(pq_invariants);
    TheoremOptions options;
    if (which == InvariantSet{true, false, true}) {
      options.use_s = false;
    } else if (which == InvariantSet{true, true, false}) {
      options.use_s = true;
    } else {
      std::cerr << "error: --invariants must be T,B or S,T\n";
      return kExitUsage;
    }
    options.fast = fast;
    options.jobs = jobs;
    const TheoremResult r = verify_theorem(p, q, options);
    emit(output, json_output ? dump(theorem_to_json(r)) : theorem_text(r));
    return 0;
  }
  if (*pq_proof) {
    const ProofSupportReport r = proof_support_checks(p, q);
    std::string text;
    for (const auto& line : r.lines) text += line + "\n";
    emit(output, text);
    return r.ok ? 0 : kExitInternal;
  }
  if (*selftest_cmd) {
    SelftestOptions options;
    options.fault_omega = fault_omega;
    options.jobs = jobs;
    bool all = true;
    std::ostringstream os;
    for (const auto& r : run_selftest(options)) {
      all = all && r.ok;
      os << (r.ok ? "PASS " : "FAIL ") << r.name << std::fixed << std::setprecision(2) << " (" << r.seconds << " s)";
      if (!r.ok) os << ": " << r.detail;
      os << '\n';
    }
    emit(output, os.str());
    return all ? 0 : kExitInternal;
  }
  return kExitUsage;
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const UnsupportedCentralizer& e) {
    std::cerr << "unsupported centralizer: " << e.what() << "\n";
    return kExitValidation;
  } catch (const UnsolvableCoboundary& e) {
    std::cerr << "unsolvable coboundary: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
