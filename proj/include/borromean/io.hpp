#pragma once

// JSON encoding of groups, cocycles, character tables, cyclotomic values and
// invariant bundles. Emission is compact with sorted keys and canonical
// cyclotomic terms, so equal data serializes to identical bytes.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "borromean/center.hpp"
#include "borromean/matcher.hpp"
#include "borromean/pq_family.hpp"

namespace borromean {

using Json = nlohmann::json;

/// {"N": int, "terms": [[exponent, numerator, denominator], ...]}.
Json cyclotomic_to_json(const Cyclotomic& x);
/// Accepts the object form or a string in the parse_cyclotomic grammar.
Cyclotomic cyclotomic_from_json(const Json& j);

/// {"name", "order", "mul", optional "pq": {"p", "q", "n"}}.
Json group_to_json(const FiniteGroup& g);
/// Validates the table; a "pq" entry must reproduce pq_group(p, q) exactly.
FiniteGroup group_from_json(const Json& j);
/// "pq:P,Q", "cyclic:N" or a path to a group file.
GroupPtr load_group_argument(const std::string& arg);

/// {"modulus": e, "values": flat row-major n^3 array}.
Json cocycle_to_json(const ThreeCocycle& w);
/// Validates normalization and the cocycle identity.
ThreeCocycle cocycle_from_json(const Json& j, GroupPtr group);
/// "pq:U" (requires a pq group), "trivial" or a path to a cocycle file.
ThreeCocycle load_cocycle_argument(const std::string& arg, GroupPtr group);

/// {"subgroup", "rows", optional "base", "inducing", "projective"}.
Json table_to_json(const CharacterTable& t);
/// Checks the table with check_character_table; ordinary tables (the
/// default) must also consist of class functions.
CharacterTable table_from_json(const Json& j, GroupPtr group);

/// {"simples": [[class, char]], "dims", "T", optional "S" and "B"}; absent
/// B entries are null.
Json bundle_to_json(const InvariantBundle& b);
InvariantBundle bundle_from_json(const Json& j);

Json match_to_json(const MatchResult& r);

Json theorem_to_json(const TheoremResult& r);

Json simple_to_json(const SimpleObject& s);

Json read_json_file(const std::filesystem::path& path);
/// Compact dump with a trailing newline.
std::string dump(const Json& j);
/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace borromean
