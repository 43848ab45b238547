#include <filesystem>
#include <fstream>
#include <memory>

#include "borromean/io.hpp"
#include "doctest.h"

using namespace borromean;

TEST_CASE("cyclotomic JSON") {
  const Cyclotomic x = parse_cyclotomic("3/2*E(9)^2 - E(3) + 7");
  const Json j = cyclotomic_to_json(x);
  CHECK(j.at("N").get<long>() == x.conductor());
  CHECK(cyclotomic_from_json(j) == x);
  CHECK(cyclotomic_from_json(Json("E(9)^3")) == Cyclotomic::root_of_unity(3, 1));
  CHECK(cyclotomic_from_json(Json::parse(R"({"N":4,"terms":[[1,1,1]]})")) == Cyclotomic::root_of_unity(4, 1));
  CHECK_THROWS_AS(cyclotomic_from_json(Json::parse(R"({"N":4,"terms":[[1,1,0]]})")), ValidationError);
  CHECK_THROWS_AS(cyclotomic_from_json(Json::parse(R"({"terms":[]})")), ValidationError);
}

TEST_CASE("group and cocycle round trip") {
  const GroupPtr g = std::make_shared<const FiniteGroup>(pq_group(3, 7));
  const Json gj = group_to_json(*g);
  const FiniteGroup back = group_from_json(gj);
  CHECK(back.multiplication_table() == g->multiplication_table());
  REQUIRE(back.pq_parameters());
  CHECK(back.pq_parameters()->n == 2);

  Json bad = gj;
  bad["pq"]["q"] = 13;
  CHECK_THROWS_AS(group_from_json(bad), ValidationError);

  const ThreeCocycle w = pq_cocycle(g, 2);
  CHECK(cocycle_from_json(cocycle_to_json(w), g) == w);
  Json broken = cocycle_to_json(w);
  broken["values"][21 * 21 * 5 + 21 * 7 + 8] = broken["values"][21 * 21 * 5 + 21 * 7 + 8].get<long>() + 1;
  CHECK_THROWS_AS(cocycle_from_json(broken, g), ValidationError);
  CHECK(load_cocycle_argument("pq:1", g) == pq_cocycle(g, 1));
  CHECK(load_group_argument("cyclic:4")->order() == 4);
  CHECK_THROWS_AS(load_group_argument("pq:3,x"), ValidationError);
}

TEST_CASE("bundle round trip is byte identical") {
  const GroupPtr g = std::make_shared<const FiniteGroup>(pq_group(3, 7));
  const ThreeCocycle w = pq_cocycle(g, 1);
  const TwistedDouble cat(w, enumerate_simples(w));
  BundleRequest request;
  request.s = true;
  request.b = true;
  request.b_options.mask = [](std::size_t i, std::size_t, std::size_t) { return i < 4; };
  const InvariantBundle bundle = compute_bundle(cat, request);
  const std::string text = dump(bundle_to_json(bundle));
  const InvariantBundle back = bundle_from_json(Json::parse(text));
  CHECK(dump(bundle_to_json(back)) == text);
  CHECK_FALSE(back.b->present.empty());
  request.jobs = 3;
  CHECK(dump(bundle_to_json(compute_bundle(cat, request))) == text);
}

TEST_CASE("atomic write") {
  const auto dir = std::filesystem::temp_directory_path() / "borromean_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.json";
  write_file_atomic(path, "{\"a\":1}\n");
  write_file_atomic(path, "{\"a\":2}\n");
  CHECK(read_json_file(path).at("a").get<int>() == 2);
  CHECK_FALSE(std::filesystem::exists(dir / "out.json.tmp"));
  CHECK_THROWS_AS(read_json_file(dir / "missing.json"), ValidationError);
  std::ofstream(dir / "garbage.json") << "{nope";
  CHECK_THROWS_AS(read_json_file(dir / "garbage.json"), ValidationError);
  std::filesystem::remove_all(dir);
}
