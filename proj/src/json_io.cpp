#include "zcycles/json_io.hpp"

#include <cstdio>
#include <string>

namespace zcycles {

namespace {

std::string pq_key(int p, int q) { return std::to_string(p) + "," + std::to_string(q); }

}  // namespace

Json json_int(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json colored_set_to_json(const ColoredSet& D) {
  Json j;
  j["m"] = D.colors();
  j["sizes"] = D.sizes();
  return j;
}

ColoredSet colored_set_from_json(const nlohmann::json& j) {
  if (!j.contains("sizes") || !j["sizes"].is_array())
    throw invalid_input_error("colored set needs a sizes array");
  std::vector<int> sizes = j["sizes"].get<std::vector<int>>();
  if (j.contains("m") && j["m"].get<int>() != static_cast<int>(sizes.size()))
    throw invalid_input_error("colored set m does not match sizes length");
  return ColoredSet(sizes);
}

Json partition_to_json(const ColoredSet& D, const NEqualsPartition& I) {
  Json blocks = Json::array();
  for (uint32_t mask : I.blocks) {
    Json block = Json::array();
    for (int id = 0; id < D.total(); ++id)
      if (mask & (1u << id)) block.push_back({D.color_of(id), D.index_of(id)});
    blocks.push_back(block);
  }
  return blocks;
}

NEqualsPartition partition_from_json(const ColoredSet& D, const nlohmann::json& j) {
  if (!j.is_array()) throw invalid_input_error("partition must be an array of blocks");
  std::vector<uint32_t> blocks;
  uint32_t seen = 0;
  for (const auto& block : j) {
    uint32_t mask = 0;
    for (const auto& e : block) {
      if (!e.is_array() || e.size() != 2)
        throw invalid_input_error("partition elements are [color, index] pairs");
      int id = D.element(e[0].get<int>(), e[1].get<int>());
      mask |= 1u << id;
    }
    if (mask == 0) throw invalid_input_error("empty block in partition");
    if (mask & seen) throw invalid_input_error("overlapping blocks in partition");
    seen |= mask;
    blocks.push_back(mask);
  }
  if (seen != D.full_mask()) throw invalid_input_error("partition does not cover the ground set");
  return canonicalize(std::move(blocks));
}

Json graded_dims_to_json(const GradedDims& d) {
  Json j = Json::object();
  for (const auto& [deg, dim] : d) j[std::to_string(deg)] = dim;
  return j;
}

Json bigraded_dims_to_json(const BiGradedDims& d) {
  Json j = Json::object();
  for (const auto& [pq, dim] : d) j[pq_key(pq.first, pq.second)] = dim;
  return j;
}

Json series_to_json(const Series1& s) {
  Json j = Json::object();
  for (int k = 0; k <= s.trunc; ++k)
    if (s[k] != 0) j[std::to_string(k)] = json_int(s[k]);
  return j;
}

Json series2_to_json(const Series2& s) {
  Json j = Json::object();
  for (int u = 0; u <= s.tu; ++u)
    for (int v = 0; v <= s.tv; ++v)
      if (s.at(u, v) != 0) j[pq_key(u, v)] = json_int(s.at(u, v));
  return j;
}

Json lattice_to_json(const PartitionLattice& L) {
  Json j;
  j["ground"] = colored_set_to_json(L.D);
  j["n"] = L.n;
  j["size"] = L.poset.size;
  j["bottom"] = L.poset.bottom;
  j["top"] = L.poset.top;
  j["elements"] = Json::array();
  for (const auto& I : L.elements) j["elements"].push_back(partition_to_json(L.D, I));
  j["covers"] = Json::array();
  for (int a = 0; a < L.poset.size; ++a)
    for (int b : L.poset.covers_up[a]) j["covers"].push_back({a, b});
  return j;
}

Json el_verify_to_json(const ELVerifyResult& r) {
  Json j;
  j["status"] = r.pass ? "pass" : "fail";
  j["intervals_checked"] = r.intervals_checked;
  if (r.counterexample) {
    Json c;
    c["a"] = r.counterexample->a;
    c["b"] = r.counterexample->b;
    c["rising_count"] = r.counterexample->rising_count;
    c["lex_first"] = r.counterexample->lex_first;
    c["detail"] = r.counterexample->detail;
    j["counterexample"] = c;
  }
  return j;
}

Json manifold_to_json(const ManifoldData& X) {
  Json j;
  j["dim"] = X.dim;
  j["betti"] = X.betti;
  if (X.has_hodge) {
    j["hodge"] = Json::object();
    for (const auto& [key, v] : X.hodge)
      if (v != 0)
        j["hodge"][pq_key(key[0], key[1]) + "," + std::to_string(key[2])] = v;
  }
  return j;
}

ManifoldData manifold_from_json(const nlohmann::json& j) {
  ManifoldData X;
  if (!j.contains("dim") || !j.contains("betti"))
    throw invalid_input_error("manifold file needs dim and betti");
  X.dim = j["dim"].get<int>();
  X.betti = j["betti"].get<std::vector<long>>();
  if (j.contains("hodge")) {
    X.has_hodge = true;
    for (const auto& [key, v] : j["hodge"].items()) {
      int p, q, i;
      if (std::sscanf(key.c_str(), "%d,%d,%d", &p, &q, &i) != 3)
        throw invalid_input_error("hodge keys are \"p,q,i\"");
      X.hodge[{p, q, i}] = v.get<long>();
    }
  }
  X.validate();
  return X;
}

}  // namespace zcycles
