#include "borromean/io.hpp"

#include <fstream>
#include <sstream>

#include "borromean/error.hpp"

namespace borromean {

namespace {

Json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ValidationError("malformed integer '" + j.get<std::string>() + "'");
    return z;
  }
  throw ValidationError("expected an integer, got " + j.dump());
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("field '") + key + "' has the wrong type: " + e.what());
  }
}

std::vector<Element> element_list(const Json& j, const FiniteGroup& g, const char* what) {
  std::vector<Element> out;
  for (long x : j.get<std::vector<long>>()) {
    if (x < 0 || x >= g.order()) throw ValidationError(std::string(what) + " element " + std::to_string(x) + " is out of range");
    out.push_back(static_cast<Element>(x));
  }
  return out;
}

void require_sorted_subgroup(const FiniteGroup& g, const std::vector<Element>& s, const char* what) {
  if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw ValidationError(std::string(what) + " must be sorted without repetition");
  }
  if (!g.is_subgroup(s)) throw ValidationError(std::string(what) + " is not a subgroup");
}

}  // namespace

Json cyclotomic_to_json(const Cyclotomic& x) {
  Json terms = Json::array();
  for (const auto& [e, c] : x.terms()) {
    terms.push_back(Json::array({e, integer_json(c.get_num()), integer_json(c.get_den())}));
  }
  return Json{{"N", x.conductor()}, {"terms", terms}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (j.is_string()) return parse_cyclotomic(j.get<std::string>());
  if (j.is_number_integer()) return Cyclotomic(j.get<long>());
  const long n = field<long>(j, "N");
  if (n < 1) throw ValidationError("cyclotomic conductor must be positive");
  std::vector<Cyclotomic::Term> terms;
  for (const auto& t : field<Json>(j, "terms")) {
    if (!t.is_array() || t.size() != 3) throw ValidationError("cyclotomic term must be [exponent, numerator, denominator]");
    const mpz_class den = integer_from_json(t[2]);
    if (den == 0) throw ValidationError("zero denominator in cyclotomic term");
    Rational c(integer_from_json(t[1]), den);
    c.canonicalize();
    terms.emplace_back(static_cast<int>(mod_floor(t[0].get<long>(), n)), c);
  }
  return Cyclotomic::from_terms(n, terms);
}

Json group_to_json(const FiniteGroup& g) {
  Json out{{"name", g.name()}, {"order", g.order()}, {"mul", g.multiplication_table()}};
  if (g.pq_parameters()) {
    const auto& pq = *g.pq_parameters();
    out["pq"] = Json{{"p", pq.p}, {"q", pq.q}, {"n", pq.n}};
  }
  return out;
}

FiniteGroup group_from_json(const Json& j) {
  const auto table = field<std::vector<std::vector<int>>>(j, "mul");
  const std::string name = j.contains("name") ? field<std::string>(j, "name") : std::string("G");
  if (j.contains("order") && field<long>(j, "order") != static_cast<long>(table.size())) {
    throw ValidationError("declared order does not match the table size");
  }
  FiniteGroup g = FiniteGroup::from_multiplication_table(table, name);
  if (j.contains("pq")) {
    const Json& pq = j.at("pq");
    const FiniteGroup reference = pq_group(field<int>(pq, "p"), field<int>(pq, "q"));
    if (reference.multiplication_table() != table) {
      throw ValidationError("table does not match pq_group(" + std::to_string(field<int>(pq, "p")) + ", " +
                            std::to_string(field<int>(pq, "q")) + ")");
    }
    g.set_pq_parameters(*reference.pq_parameters());
  }
  return g;
}

GroupPtr load_group_argument(const std::string& arg) {
  if (arg.rfind("pq:", 0) == 0) {
    int p = 0, q = 0;
    char comma = 0;
    std::istringstream in(arg.substr(3));
    if (!(in >> p >> comma >> q) || comma != ',' || !in.eof()) throw ValidationError("expected pq:P,Q, got '" + arg + "'");
    return std::make_shared<const FiniteGroup>(pq_group(p, q));
  }
  if (arg.rfind("cyclic:", 0) == 0) {
    int n = 0;
    std::istringstream in(arg.substr(7));
    if (!(in >> n) || !in.eof() || n < 1) throw ValidationError("expected cyclic:N, got '" + arg + "'");
    return std::make_shared<const FiniteGroup>(cyclic_group(n));
  }
  return std::make_shared<const FiniteGroup>(group_from_json(read_json_file(arg)));
}

Json cocycle_to_json(const ThreeCocycle& w) { return Json{{"modulus", w.modulus()}, {"values", w.values()}}; }

ThreeCocycle cocycle_from_json(const Json& j, GroupPtr group) {
  const long modulus = field<long>(j, "modulus");
  if (modulus < 1) throw ValidationError("cocycle modulus must be positive");
  auto values = field<std::vector<long>>(j, "values");
  const std::size_t n = static_cast<std::size_t>(group->order());
  if (values.size() != n * n * n) {
    throw ValidationError("cocycle has " + std::to_string(values.size()) + " values, expected " + std::to_string(n * n * n));
  }
  ThreeCocycle w(std::move(group), modulus, std::move(values));
  w.require_valid();
  return w;
}

ThreeCocycle load_cocycle_argument(const std::string& arg, GroupPtr group) {
  if (arg == "trivial") return ThreeCocycle::trivial(group);
  if (arg.rfind("pq:", 0) == 0) {
    int u = 0;
    std::istringstream in(arg.substr(3));
    if (!(in >> u) || !in.eof()) throw ValidationError("expected pq:U, got '" + arg + "'");
    if (!group->pq_parameters()) throw ValidationError("pq cocycle requested on a group without pq parameters");
    return pq_cocycle(group, u);
  }
  return cocycle_from_json(read_json_file(arg), std::move(group));
}

Json table_to_json(const CharacterTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(cyclotomic_to_json(v));
    rows.push_back(r);
  }
  Json out{{"subgroup", t.subgroup}, {"rows", rows}};
  bool any = false;
  Json inducing = Json::array();
  for (const auto& ind : t.inducing) {
    if (ind) {
      any = true;
      inducing.push_back(Json{{"subgroup", ind->subgroup}, {"modulus", ind->modulus}, {"exponents", ind->exponents}});
    } else {
      inducing.push_back(nullptr);
    }
  }
  if (any) out["inducing"] = inducing;
  if (t.base) out["base"] = *t.base;
  return out;
}

CharacterTable table_from_json(const Json& j, GroupPtr group) {
  const FiniteGroup& g = *group;
  CharacterTable t;
  t.group = group;
  t.subgroup = element_list(field<Json>(j, "subgroup"), g, "subgroup");
  require_sorted_subgroup(g, t.subgroup, "subgroup");
  for (const auto& row : field<Json>(j, "rows")) {
    if (!row.is_array() || row.size() != t.subgroup.size()) {
      throw ValidationError("character row " + std::to_string(t.rows.size()) + " has the wrong length");
    }
    std::vector<Cyclotomic> values;
    for (const auto& v : row) values.push_back(cyclotomic_from_json(v));
    t.rows.push_back(std::move(values));
  }
  t.inducing.assign(t.rows.size(), std::nullopt);
  if (j.contains("inducing")) {
    const Json& list = j.at("inducing");
    if (!list.is_array() || list.size() != t.rows.size()) throw ValidationError("inducing list must have one entry per row");
    for (std::size_t r = 0; r < list.size(); ++r) {
      if (list[r].is_null()) continue;
      MonomialInducing ind;
      ind.subgroup = element_list(field<Json>(list[r], "subgroup"), g, "inducing subgroup");
      require_sorted_subgroup(g, ind.subgroup, "inducing subgroup");
      ind.modulus = field<long>(list[r], "modulus");
      ind.exponents = field<std::vector<long>>(list[r], "exponents");
      if (ind.modulus < 1 || ind.exponents.size() != ind.subgroup.size()) {
        throw ValidationError("inducing data of row " + std::to_string(r) + " is malformed");
      }
      for (Element k : ind.subgroup) {
        if (!std::binary_search(t.subgroup.begin(), t.subgroup.end(), k)) {
          throw ValidationError("inducing subgroup of row " + std::to_string(r) + " is not inside the table subgroup");
        }
      }
      t.inducing[r] = std::move(ind);
    }
  }
  if (j.contains("base")) {
    const long base = field<long>(j, "base");
    if (base < 0 || base >= g.order()) throw ValidationError("base element out of range");
    t.base = static_cast<Element>(base);
  }
  const bool projective = j.contains("projective") && field<bool>(j, "projective");
  if (auto bad = check_character_table(t, !projective)) {
    std::string rows;
    for (std::size_t r : bad->rows) rows += (rows.empty() ? "" : ", ") + std::to_string(r);
    throw ValidationError("character table rejected: " + bad->message + (rows.empty() ? "" : " (rows " + rows + ")"));
  }
  return t;
}

Json bundle_to_json(const InvariantBundle& b) {
  Json simples = Json::array();
  for (const auto& l : b.simples) simples.push_back(Json::array({l.class_index, l.char_index}));
  Json t = Json::array();
  for (const auto& v : b.t) t.push_back(cyclotomic_to_json(v));
  Json out{{"simples", simples}, {"dims", b.dims}, {"T", t}};
  if (b.s) {
    Json s = Json::array();
    for (const auto& row : *b.s) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(cyclotomic_to_json(v));
      s.push_back(r);
    }
    out["S"] = s;
  }
  if (b.b) {
    const BTensor& tensor = *b.b;
    Json bj = Json::array();
    for (std::size_t i = 0; i < tensor.n; ++i) {
      Json plane = Json::array();
      for (std::size_t j = 0; j < tensor.n; ++j) {
        Json line = Json::array();
        for (std::size_t k = 0; k < tensor.n; ++k) {
          line.push_back(tensor.has(i, j, k) ? cyclotomic_to_json(tensor(i, j, k)) : Json(nullptr));
        }
        plane.push_back(line);
      }
      bj.push_back(plane);
    }
    out["B"] = bj;
  }
  return out;
}

InvariantBundle bundle_from_json(const Json& j) {
  InvariantBundle b;
  for (const auto& l : field<Json>(j, "simples")) {
    if (!l.is_array() || l.size() != 2) throw ValidationError("simple label must be [class, char]");
    b.simples.push_back({l[0].get<int>(), l[1].get<int>()});
  }
  const std::size_t n = b.simples.size();
  b.dims = field<std::vector<long>>(j, "dims");
  if (b.dims.size() != n) throw ValidationError("dims has the wrong length");
  for (const auto& v : field<Json>(j, "T")) b.t.push_back(cyclotomic_from_json(v));
  if (b.t.size() != n) throw ValidationError("T has the wrong length");
  if (j.contains("S")) {
    CyclotomicMatrix s;
    for (const auto& row : j.at("S")) {
      if (!row.is_array() || row.size() != n) throw ValidationError("S row has the wrong length");
      std::vector<Cyclotomic> r;
      for (const auto& v : row) r.push_back(cyclotomic_from_json(v));
      s.push_back(std::move(r));
    }
    if (s.size() != n) throw ValidationError("S has the wrong number of rows");
    b.s = std::move(s);
  }
  if (j.contains("B")) {
    BTensor t;
    t.n = n;
    t.values.assign(n * n * n, Cyclotomic());
    std::vector<char> present(n * n * n, 1);
    bool partial = false;
    const Json& bj = j.at("B");
    if (!bj.is_array() || bj.size() != n) throw ValidationError("B has the wrong shape");
    for (std::size_t i = 0; i < n; ++i) {
      if (!bj[i].is_array() || bj[i].size() != n) throw ValidationError("B has the wrong shape");
      for (std::size_t jj = 0; jj < n; ++jj) {
        if (!bj[i][jj].is_array() || bj[i][jj].size() != n) throw ValidationError("B has the wrong shape");
        for (std::size_t k = 0; k < n; ++k) {
          const Json& v = bj[i][jj][k];
          if (v.is_null()) {
            present[t.index(i, jj, k)] = 0;
            partial = true;
          } else {
            t.values[t.index(i, jj, k)] = cyclotomic_from_json(v);
          }
        }
      }
    }
    if (partial) t.present = std::move(present);
    b.b = std::move(t);
  }
  b.normalize();
  return b;
}

Json match_to_json(const MatchResult& r) {
  Json out{{"found", r.found}, {"certificate", render(r.certificate)}, {"nodes", r.nodes}};
  if (r.found) out["permutation"] = r.permutation;
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write '" + tmp.string() + "'");
    out << contents;
    out.flush();
    if (!out) throw ValidationError("failed writing '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

Json theorem_to_json(const TheoremResult& r) {
  Json pairs = Json::array();
  std::size_t idx = 0;
  for (int a = 0; a < r.p; ++a) {
    for (int b = a + 1; b < r.p; ++b) {
      Json pr = match_to_json(r.pair_results[idx++]);
      pr["u"] = Json::array({a, b});
      pairs.push_back(pr);
    }
  }
  return Json{{"p", r.p}, {"q", r.q}, {"invariants", r.invariants}, {"fast", r.fast},
              {"matches", r.matches}, {"classes", r.classes}, {"pairs", pairs}};
}

Json simple_to_json(const SimpleObject& s) {
  return Json{{"label", Json::array({s.label.class_index, s.label.char_index})},
              {"base", s.g},
              {"degree", s.chi.degree},
              {"dimension", s.dimension}};
}

}  // namespace borromean
