#include "borromean/matcher.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "borromean/error.hpp"

namespace borromean {

namespace {

long bundle_conductor(const InvariantBundle& x) {
  long n = 1;
  for (const auto& v : x.t) n = lcm_long(n, v.conductor());
  if (x.s) {
    for (const auto& row : *x.s) {
      for (const auto& v : row) n = lcm_long(n, v.conductor());
    }
  }
  if (x.b) {
    for (const auto& v : x.b->values) n = lcm_long(n, v.conductor());
  }
  return n;
}

InvariantBundle lifted_bundle(const InvariantBundle& x, long n) {
  InvariantBundle out = x;
  for (auto& v : out.t) v = v.lifted(n);
  if (out.s) {
    for (auto& row : *out.s) {
      for (auto& v : row) v = v.lifted(n);
    }
  }
  if (out.b) {
    for (auto& v : out.b->values) v = v.lifted(n);
  }
  return out;
}

void require_invariants(const InvariantBundle& x, InvariantSet which, const char* name) {
  const std::size_t n = x.size();
  if (x.dims.size() != n) throw ValidationError(std::string(name) + ": dimension vector has the wrong length");
  if (which.t && x.t.size() != n) throw ValidationError(std::string(name) + ": T is missing or has the wrong length");
  if (which.s) {
    if (!x.s) throw ValidationError(std::string(name) + ": S requested but absent");
    if (x.s->size() != n) throw ValidationError(std::string(name) + ": S has the wrong size");
    for (const auto& row : *x.s) {
      if (row.size() != n) throw ValidationError(std::string(name) + ": S is not square");
    }
  }
  if (which.b) {
    if (!x.b) throw ValidationError(std::string(name) + ": B requested but absent");
    if (x.b->n != n || x.b->values.size() != n * n * n) throw ValidationError(std::string(name) + ": B has the wrong size");
  }
}

bool complete_b(const InvariantBundle& x) { return x.b && x.b->present.empty(); }

std::string basic_label(const InvariantBundle& x, InvariantSet which, std::size_t i) {
  std::string out = "D=" + std::to_string(x.dims[i]);
  if (which.t) out += ";T=" + render(x.t[i]);
  return out;
}

std::string sorted_join(std::vector<std::string> items) {
  std::sort(items.begin(), items.end());
  std::string out = "[";
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += ',';
    out += items[k];
  }
  return out + "]";
}

std::vector<std::string> labels_of(const InvariantBundle& x, InvariantSet which, bool use_fiber) {
  const std::size_t n = x.size();
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string label = basic_label(x, which, i);
    if (which.s) {
      std::vector<std::string> row;
      for (const auto& v : (*x.s)[i]) row.push_back(render(v));
      label += ";Sii=" + render((*x.s)[i][i]) + ";S=" + sorted_join(std::move(row));
    } else if (which.b && use_fiber) {
      const BTensor& b = *x.b;
      std::vector<std::string> fiber;
      for (std::size_t j = 0; j < n; ++j) {
        fiber.push_back(render(b(i, i, j)));
        fiber.push_back(render(b(i, j, i)));
        fiber.push_back(render(b(j, i, i)));
      }
      label += ";B=" + sorted_join(std::move(fiber));
    }
    labels[i] = std::move(label);
  }
  return labels;
}

BlockPartition partition_from(std::vector<std::string> labels) {
  BlockPartition out;
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < labels.size(); ++i) groups[labels[i]].push_back(i);
  for (auto& [key, members] : groups) out.blocks.push_back(std::move(members));
  out.labels = std::move(labels);
  return out;
}

std::map<std::string, std::size_t> label_counts(const std::vector<std::string>& labels) {
  std::map<std::string, std::size_t> counts;
  for (const auto& l : labels) ++counts[l];
  return counts;
}

class Interner {
 public:
  int operator()(const Cyclotomic& v) {
    auto [it, inserted] = ids_.try_emplace(render(v), static_cast<int>(ids_.size()));
    return it->second;
  }

 private:
  std::unordered_map<std::string, int> ids_;
};

struct Encoded {
  std::vector<int> s;  // n*n
  std::vector<int> b;  // n*n*n, -1 when absent
};

Encoded encode(const InvariantBundle& x, InvariantSet which, Interner& intern) {
  Encoded e;
  const std::size_t n = x.size();
  if (which.s) {
    for (const auto& row : *x.s) {
      for (const auto& v : row) e.s.push_back(intern(v));
    }
  }
  if (which.b) {
    e.b.resize(n * n * n);
    for (std::size_t idx = 0; idx < n * n * n; ++idx) {
      e.b[idx] = x.b->present.empty() || x.b->present[idx] ? intern(x.b->values[idx]) : -1;
    }
  }
  return e;
}

class Search {
 public:
  Search(std::size_t n, const Encoded& a, const Encoded& b, InvariantSet which, std::vector<std::size_t> order,
         std::vector<std::vector<std::size_t>> candidates, std::size_t max_nodes)
      : n_(n), a_(a), b_(b), which_(which), order_(std::move(order)), candidates_(std::move(candidates)),
        max_nodes_(max_nodes), image_(n, 0), used_(n, 0) {}

  // 1 found, 0 exhausted, -1 budget exceeded
  int run() { return extend(0); }
  const std::vector<std::size_t>& image() const { return image_; }
  std::size_t nodes() const { return nodes_; }

 private:
  static bool same(int x, int y) { return x < 0 || y < 0 || x == y; }

  std::size_t bi(std::size_t i, std::size_t j, std::size_t k) const { return (i * n_ + j) * n_ + k; }

  bool consistent(std::size_t level) const {
    const std::size_t v = order_[level];
    const std::size_t w = image_[v];
    if (which_.s) {
      for (std::size_t l = 0; l <= level; ++l) {
        const std::size_t x = order_[l], px = image_[x];
        if (a_.s[x * n_ + v] != b_.s[px * n_ + w] || a_.s[v * n_ + x] != b_.s[w * n_ + px]) return false;
      }
    }
    if (which_.b) {
      for (std::size_t l = 0; l <= level; ++l) {
        const std::size_t x = order_[l], px = image_[x];
        for (std::size_t m = 0; m <= level; ++m) {
          const std::size_t y = order_[m], py = image_[y];
          if (!same(a_.b[bi(v, x, y)], b_.b[bi(w, px, py)])) return false;
          if (!same(a_.b[bi(x, v, y)], b_.b[bi(px, w, py)])) return false;
          if (!same(a_.b[bi(x, y, v)], b_.b[bi(px, py, w)])) return false;
        }
      }
    }
    return true;
  }

  int extend(std::size_t level) {
    if (level == order_.size()) return 1;
    const std::size_t v = order_[level];
    for (std::size_t w : candidates_[level]) {
      if (used_[w]) continue;
      if (max_nodes_ && nodes_ >= max_nodes_) return -1;
      ++nodes_;
      image_[v] = w;
      if (!consistent(level)) continue;
      used_[w] = 1;
      const int r = extend(level + 1);
      if (r != 0) return r;
      used_[w] = 0;
    }
    return 0;
  }

  std::size_t n_;
  const Encoded& a_;
  const Encoded& b_;
  InvariantSet which_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::size_t max_nodes_;
  std::size_t nodes_ = 0;
  std::vector<std::size_t> image_;
  std::vector<char> used_;
};

}  // namespace

InvariantSet InvariantSet::parse(std::string_view text) {
  InvariantSet out;
  std::string token;
  std::istringstream in{std::string(text)};
  bool any = false;
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token == "T" || token == "t") {
      out.t = true;
    } else if (token == "S" || token == "s") {
      out.s = true;
    } else if (token == "B" || token == "b") {
      out.b = true;
    } else {
      throw ValidationError("unknown invariant '" + token + "'; expected a comma-separated subset of T, S, B");
    }
    any = true;
  }
  if (!any) throw ValidationError("empty invariant list");
  return out;
}

std::string InvariantSet::render() const {
  std::string out;
  for (auto [flag, name] : {std::pair{t, "T"}, {s, "S"}, {b, "B"}}) {
    if (!flag) continue;
    if (!out.empty()) out += ',';
    out += name;
  }
  return out;
}

BlockPartition fingerprint(const InvariantBundle& bundle, InvariantSet which) {
  require_invariants(bundle, which, "bundle");
  return partition_from(labels_of(bundle, which, complete_b(bundle)));
}

std::string render(MatchCertificate c) {
  switch (c) {
    case MatchCertificate::kNone: return "none";
    case MatchCertificate::kFingerprintMismatch: return "fingerprint mismatch";
    case MatchCertificate::kBlockStructureMismatch: return "block-structure mismatch";
    case MatchCertificate::kExhausted: return "exhausted search";
    case MatchCertificate::kBudgetExceeded: return "search budget exceeded";
  }
  return "unknown";
}

std::pair<InvariantBundle, InvariantBundle> common_conductor(const InvariantBundle& a, const InvariantBundle& b) {
  const long n = lcm_long(bundle_conductor(a), bundle_conductor(b));
  return {lifted_bundle(a, n), lifted_bundle(b, n)};
}

MatchResult match(const InvariantBundle& a_in, const InvariantBundle& b_in, InvariantSet which,
                  const MatchOptions& options) {
  if (a_in.size() != b_in.size()) {
    throw ValidationError("bundles have different sizes (" + std::to_string(a_in.size()) + " and " +
                          std::to_string(b_in.size()) + ")");
  }
  require_invariants(a_in, which, "first bundle");
  require_invariants(b_in, which, "second bundle");
  const auto [a, b] = common_conductor(a_in, b_in);
  const std::size_t n = a.size();
  MatchResult result;

  std::vector<std::string> basic_a(n), basic_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    basic_a[i] = basic_label(a, which, i);
    basic_b[i] = basic_label(b, which, i);
  }
  if (label_counts(basic_a) != label_counts(basic_b)) {
    result.certificate = MatchCertificate::kFingerprintMismatch;
    return result;
  }
  const bool use_fiber = complete_b(a) && complete_b(b);
  const BlockPartition pa = partition_from(labels_of(a, which, use_fiber));
  const BlockPartition pb = partition_from(labels_of(b, which, use_fiber));
  if (label_counts(pa.labels) != label_counts(pb.labels)) {
    result.certificate = MatchCertificate::kBlockStructureMismatch;
    return result;
  }

  std::map<std::string, const std::vector<std::size_t>*> target_blocks;
  for (const auto& block : pb.blocks) target_blocks[pb.labels[block.front()]] = &block;
  std::vector<std::size_t> order;
  std::vector<std::vector<std::size_t>> candidates;
  std::size_t longest = 0;
  for (const auto& block : pa.blocks) longest = std::max(longest, block.size());
  for (std::size_t r = 0; r < longest; ++r) {
    for (const auto& block : pa.blocks) {
      if (r >= block.size()) continue;
      order.push_back(block[r]);
      candidates.push_back(*target_blocks.at(pa.labels[block[r]]));
    }
  }

  Interner intern;
  const Encoded ea = encode(a, which, intern);
  const Encoded eb = encode(b, which, intern);
  Search search(n, ea, eb, which, std::move(order), std::move(candidates), options.max_nodes);
  const int status = search.run();
  result.nodes = search.nodes();
  if (status == 0) {
    result.certificate = MatchCertificate::kExhausted;
    return result;
  }
  if (status < 0) {
    result.certificate = MatchCertificate::kBudgetExceeded;
    return result;
  }
  result.found = true;
  result.permutation = search.image();
  if (auto bad = verify_permutation(a, b, result.permutation, which)) {
    throw InternalConsistencyError("matcher produced a permutation that fails verification: " + bad->describe());
  }
  return result;
}

std::string PermutationViolation::describe() const {
  std::string out(1, invariant);
  out += " at (";
  for (std::size_t k = 0; k < coordinates.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(coordinates[k]);
  }
  return out + ")";
}

std::optional<PermutationViolation> verify_permutation(const InvariantBundle& a, const InvariantBundle& b,
                                                       const std::vector<std::size_t>& perm, InvariantSet which) {
  const std::size_t n = a.size();
  if (b.size() != n || perm.size() != n) throw ValidationError("permutation and bundles have different sizes");
  require_invariants(a, which, "first bundle");
  require_invariants(b, which, "second bundle");
  std::vector<char> seen(n, 0);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) throw ValidationError("index map is not a bijection");
    seen[p] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a.dims[i] != b.dims[perm[i]]) return PermutationViolation{'D', {i}};
    if (which.t && !(a.t[i] == b.t[perm[i]])) return PermutationViolation{'T', {i}};
  }
  if (which.s) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!((*a.s)[i][j] == (*b.s)[perm[i]][perm[j]])) return PermutationViolation{'S', {i, j}};
      }
    }
  }
  if (which.b) {
    const BTensor& ta = *a.b;
    const BTensor& tb = *b.b;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (!ta.has(i, j, k) || !tb.has(perm[i], perm[j], perm[k])) continue;
          if (!(ta(i, j, k) == tb(perm[i], perm[j], perm[k]))) return PermutationViolation{'B', {i, j, k}};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace borromean
