#include <doctest.h>

#include <fstream>

#include "zcycles/json_io.hpp"

using namespace zcycles;

namespace {

Json load_schema(const std::string& name) {
  std::string path = std::string(ZCYCLES_SCHEMA_DIR) + "/" + name;
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), ("missing schema " + path));
  return Json::parse(in);
}

void check_required(const Json& schema, const Json& payload) {
  REQUIRE(schema.contains("required"));
  for (const auto& key : schema["required"]) {
    CAPTURE(key.get<std::string>());
    CHECK(payload.contains(key.get<std::string>()));
  }
}

}  // namespace

TEST_SUITE("json_io") {

TEST_CASE("integers wider than 64 bits become strings") {
  CHECK(json_int(Int(42)) == Json(42));
  CHECK(json_int(Int(-7)) == Json(-7));
  Int big = 1;
  for (int i = 0; i < 30; ++i) big *= 1000000;
  CHECK(json_int(big).is_string());
  CHECK(json_int(big).get<std::string>() == big.get_str());
}

TEST_CASE("colored set round trip") {
  ColoredSet D(std::vector<int>{2, 3});
  Json j = colored_set_to_json(D);
  CHECK(j["m"] == 2);
  ColoredSet back = colored_set_from_json(j);
  CHECK(back.sizes() == D.sizes());
  CHECK_THROWS_AS(colored_set_from_json(Json{{"m", 2}}), invalid_input_error);
  CHECK_THROWS_AS(colored_set_from_json(Json{{"m", 3}, {"sizes", {2, 3}}}),
                  invalid_input_error);
}

TEST_CASE("partition round trip canonicalizes") {
  ColoredSet D(std::vector<int>{2, 2});
  // blocks listed out of order: (a2 b1) then (a1 b2)
  Json j = Json::array({Json::array({{1, 2}, {2, 1}}), Json::array({{1, 1}, {2, 2}})});
  NEqualsPartition I = partition_from_json(D, j);
  CHECK(I == canonicalize({0b0110u, 0b1001u}));
  Json out = partition_to_json(D, I);
  CHECK(partition_from_json(D, out) == I);
  // first block now starts at a1
  CHECK(out[0][0] == Json::array({1, 1}));
}

TEST_CASE("broken partitions are rejected") {
  ColoredSet D(std::vector<int>{3});
  Json overlap = Json::array({Json::array({{1, 1}, {1, 2}}), Json::array({{1, 2}, {1, 3}})});
  CHECK_THROWS_AS(partition_from_json(D, overlap), invalid_input_error);
  Json gap = Json::array({Json::array({{1, 1}, {1, 2}})});
  CHECK_THROWS_AS(partition_from_json(D, gap), invalid_input_error);
  CHECK_THROWS_AS(partition_from_json(D, Json::object()), invalid_input_error);
  Json bad_pair = Json::array({Json::array({{1, 1, 1}})});
  CHECK_THROWS_AS(partition_from_json(D, bad_pair), invalid_input_error);
}

TEST_CASE("dims and series serialization") {
  GradedDims d{{-2, 1}, {0, 3}};
  Json j = graded_dims_to_json(d);
  CHECK(j["-2"] == 1);
  CHECK(j["0"] == 3);
  BiGradedDims b{{{1, 2}, 5}};
  CHECK(bigraded_dims_to_json(b)["1,2"] == 5);

  Series1 s(4);
  s[0] = 1;
  s[3] = -2;
  Json js = series_to_json(s);
  CHECK(js.size() == 2);
  CHECK(js["3"] == -2);
  CHECK_FALSE(js.contains("1"));

  Series2 s2(2, 2);
  s2.at(1, 1) = 7;
  Json js2 = series2_to_json(s2);
  CHECK(js2.size() == 1);
  CHECK(js2["1,1"] == 7);
}

TEST_CASE("lattice payload matches its schema") {
  PartitionLattice L = build_lattice(ColoredSet(std::vector<int>{3}), 2);
  Json j = lattice_to_json(L);
  check_required(load_schema("lattice.json"), j);
  CHECK(j["size"] == 5);
  CHECK(j["elements"].size() == 5);
  CHECK(j["covers"].size() == 6);
  CHECK(j["ground"]["sizes"] == Json::array({3}));
  // bottom element is all singletons
  CHECK(j["elements"][j["bottom"].get<int>()].size() == 3);
}

TEST_CASE("verification payloads match the schema") {
  Json schema = load_schema("el_verify.json");
  LabelledLattice L = build_labelled_lattice(ColoredSet(std::vector<int>{3}), 2);
  Json pass = el_verify_to_json(verify_el(L));
  check_required(schema, pass);
  CHECK(pass["status"] == "pass");
  CHECK_FALSE(pass.contains("counterexample"));

  LambdaLabel constant = L.labels.begin()->second;
  for (auto& [edge, label] : L.labels) label = constant;
  Json fail = el_verify_to_json(verify_el(L));
  check_required(schema, fail);
  CHECK(fail["status"] == "fail");
  REQUIRE(fail.contains("counterexample"));
  check_required(schema["properties"]["counterexample"], fail["counterexample"]);
}

TEST_CASE("manifold round trip with Hodge data") {
  ManifoldData X = manifold_torus2();
  X.has_hodge = true;
  X.hodge[{0, 0, 0}] = 1;
  X.hodge[{1, 0, 1}] = 1;
  X.hodge[{0, 1, 1}] = 1;
  X.hodge[{1, 1, 2}] = 1;
  Json j = manifold_to_json(X);
  check_required(load_schema("manifold.json"), j);
  CHECK(j["hodge"]["1,0,1"] == 1);
  ManifoldData back = manifold_from_json(j);
  CHECK(back.dim == X.dim);
  CHECK(back.betti == X.betti);
  CHECK(back.hodge == X.hodge);

  Json bad = j;
  bad["hodge"] = Json{{"1,0", 1}};
  CHECK_THROWS_AS(manifold_from_json(bad), invalid_input_error);
  CHECK_THROWS_AS(manifold_from_json(Json{{"dim", 2}}), invalid_input_error);
}

TEST_CASE("every schema file is well formed") {
  for (const char* name :
       {"lattice.json", "el_verify.json", "homology.json", "gm.json", "density.json",
        "euler.json", "hd.json", "coincide.json", "degeneration.json", "arith_int.json",
        "arith_fq.json", "manifold.json", "ring.json"}) {
    Json schema = load_schema(name);
    CHECK(schema["type"] == "object");
    CHECK(schema.contains("required"));
    CHECK(schema["required"].is_array());
    CHECK(schema.contains("properties"));
    for (const auto& key : schema["required"])
      CHECK(schema["properties"].contains(key.get<std::string>()));
  }
}

}  // TEST_SUITE
