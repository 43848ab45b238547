#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "borromean/io.hpp"
#include "borromean/oracle.hpp"
#include "borromean/parallel.hpp"
#include "borromean/pq_family.hpp"
#include "borromean/selftest.hpp"

namespace py = pybind11;
using namespace borromean;

namespace {

int resolve_jobs(int jobs) { return jobs > 0 ? jobs : default_jobs(); }

struct Loaded {
  GroupPtr group;
  ThreeCocycle omega;
  std::vector<SimpleObject> simples;
};

Loaded load(const std::string& group, const std::string& cocycle, const std::vector<std::string>& chars) {
  const GroupPtr g = load_group_argument(group);
  ThreeCocycle omega = load_cocycle_argument(cocycle, g);
  omega.require_valid();
  std::vector<CharacterTable> tables;
  for (const auto& path : chars) tables.push_back(table_from_json(read_json_file(path), g));
  auto simples = enumerate_simples(omega, tables);
  return {g, std::move(omega), std::move(simples)};
}

BundleRequest request_for(const std::string& invariants, const std::string& mode, int jobs) {
  const InvariantSet which = InvariantSet::parse(invariants);
  if (mode != "general" && mode != "auto") throw ValidationError("mode must be general or auto");
  BundleRequest request;
  request.s = which.s;
  request.b = which.b;
  request.b_options.mode = mode == "auto" ? BMode::kAuto : BMode::kGeneral;
  request.jobs = resolve_jobs(jobs);
  return request;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Modular data and Borromean tensors of twisted Drinfeld doubles";

  auto error = py::register_exception<Error>(m, "Error");
  auto validation = py::register_exception<ValidationError>(m, "ValidationError", error.ptr());
  py::register_exception<UnsupportedCentralizer>(m, "UnsupportedCentralizer", error.ptr());
  py::register_exception<UnsolvableCoboundary>(m, "UnsolvableCoboundary", error.ptr());
  py::register_exception<InternalConsistencyError>(m, "InternalConsistencyError", error.ptr());
  (void)validation;

  m.def("normalize_cyclotomic", [](const std::string& text) { return render(parse_cyclotomic(text)); },
        py::arg("text"));

  m.def(
      "simples",
      [](const std::string& group, const std::string& cocycle, const std::vector<std::string>& chars) {
        const Loaded c = load(group, cocycle, chars);
        Json list = Json::array();
        for (const auto& s : c.simples) list.push_back(simple_to_json(s));
        return dump(list);
      },
      py::arg("group"), py::arg("cocycle"), py::arg("chars") = std::vector<std::string>{});

  m.def(
      "bundle",
      [](const std::string& group, const std::string& cocycle, const std::string& invariants,
         const std::vector<std::string>& chars, const std::string& mode, int jobs) {
        const BundleRequest request = request_for(invariants, mode, jobs);
        py::gil_scoped_release release;
        const Loaded c = load(group, cocycle, chars);
        return dump(bundle_to_json(compute_bundle(TwistedDouble(c.omega, c.simples), request)));
      },
      py::arg("group"), py::arg("cocycle"), py::arg("invariants") = "T", py::arg("chars") = std::vector<std::string>{},
      py::arg("mode") = "general", py::arg("jobs") = 0);

  m.def(
      "pq_bundle",
      [](int p, int q, int u, const std::string& invariants, const std::string& mode, int jobs) {
        const BundleRequest request = request_for(invariants, mode, jobs);
        py::gil_scoped_release release;
        const ThreeCocycle omega = PqCategorySpec::make(p, q, u).cocycle();
        return dump(bundle_to_json(compute_bundle(TwistedDouble(omega, enumerate_simples(omega)), request)));
      },
      py::arg("p"), py::arg("q"), py::arg("u"), py::arg("invariants") = "T", py::arg("mode") = "general",
      py::arg("jobs") = 0);

  m.def(
      "oracle_trace",
      [](const std::string& group, const std::string& cocycle, const std::string& word,
         std::array<std::size_t, 3> colors, const std::vector<std::string>& chars) {
        const Loaded c = load(group, cocycle, chars);
        for (std::size_t x : colors) {
          if (x >= c.simples.size()) throw ValidationError("color index " + std::to_string(x) + " is out of range");
        }
        const BraidOracle oracle(c.omega, c.simples);
        return render(oracle.trace(parse_braid_word(word), colors));
      },
      py::arg("group"), py::arg("cocycle"), py::arg("word"), py::arg("colors"),
      py::arg("chars") = std::vector<std::string>{});

  m.def(
      "match",
      [](const std::string& a, const std::string& b, const std::string& invariants, std::size_t max_nodes) {
        const InvariantSet which = InvariantSet::parse(invariants);
        const InvariantBundle x = bundle_from_json(Json::parse(a));
        const InvariantBundle y = bundle_from_json(Json::parse(b));
        MatchOptions options;
        options.max_nodes = max_nodes;
        py::gil_scoped_release release;
        return dump(match_to_json(match(x, y, which, options)));
      },
      py::arg("a"), py::arg("b"), py::arg("invariants"), py::arg("max_nodes") = 0);

  m.def(
      "verify_theorem",
      [](int p, int q, const std::string& invariants, bool fast, int jobs) {
        const InvariantSet which = InvariantSet::parse(invariants);
        TheoremOptions options;
        if (which == InvariantSet{true, true, false}) {
          options.use_s = true;
        } else if (!(which == InvariantSet{true, false, true})) {
          throw ValidationError("invariants must be T,B or S,T");
        }
        options.fast = fast;
        options.jobs = resolve_jobs(jobs);
        py::gil_scoped_release release;
        return dump(theorem_to_json(verify_theorem(p, q, options)));
      },
      py::arg("p"), py::arg("q"), py::arg("invariants") = "T,B", py::arg("fast") = false, py::arg("jobs") = 0);

  m.def(
      "proof_support",
      [](int p, int q) {
        const ProofSupportReport r = proof_support_checks(p, q);
        return py::make_tuple(r.ok, r.lines);
      },
      py::arg("p"), py::arg("q"));

  m.def(
      "selftest",
      [](bool fault_omega, int jobs) {
        SelftestOptions options;
        options.fault_omega = fault_omega;
        options.jobs = resolve_jobs(jobs);
        std::vector<PropertyResult> results;
        {
          py::gil_scoped_release release;
          results = run_selftest(options);
        }
        py::list out;
        for (const auto& r : results) {
          py::dict d;
          d["name"] = r.name;
          d["ok"] = r.ok;
          d["detail"] = r.detail;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("fault_omega") = false, py::arg("jobs") = 0);
}
