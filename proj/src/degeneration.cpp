#include "zcycles/degeneration.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace zcycles {

namespace {

Rat rat_from_json(const nlohmann::ordered_json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    Rat r(j.get<std::string>());
    r.canonicalize();
    return r;
  }
  throw invalid_input_error("rational coefficients must be integers or \"p/q\" strings");
}

void prune(SparseElt& x) {
  for (auto it = x.begin(); it != x.end();)
    it = (it->second == 0) ? x.erase(it) : std::next(it);
}

void prune(Tensor& t) {
  for (auto it = t.begin(); it != t.end();)
    it = (it->second == 0) ? t.erase(it) : std::next(it);
}

SparseElt unit_elt(const RingData& ring) { return {{ring.unit, Rat(1)}}; }

bool elt_equal(const SparseElt& a, const SparseElt& b) {
  SparseElt d = a;
  for (const auto& [k, c] : b) d[k] -= c;
  prune(d);
  return d.empty();
}

}  // namespace

SparseElt RingData::mul_basis(const SparseElt& x, int b) const {
  SparseElt out;
  for (const auto& [a, ca] : x)
    for (const auto& [k, ck] : products[a][b]) out[k] += ca * ck;
  prune(out);
  return out;
}

SparseElt RingData::mul(const SparseElt& x, const SparseElt& y) const {
  SparseElt out;
  for (const auto& [b, cb] : y) {
    SparseElt part = mul_basis(x, b);
    for (const auto& [k, ck] : part) out[k] += cb * ck;
  }
  prune(out);
  return out;
}

Rat RingData::trace_of(const SparseElt& x) const {
  Rat out(0);
  for (const auto& [k, c] : x) out += trace[k] * c;
  return out;
}

int RingData::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].name == name) return static_cast<int>(i);
  throw invalid_input_error("unknown basis element '" + name + "'");
}

void RingData::validate() const {
  const int s = static_cast<int>(basis.size());
  if (s == 0) throw invalid_input_error("ring basis is empty");
  if (static_cast<int>(products.size()) != s || static_cast<int>(trace.size()) != s)
    throw invalid_input_error("ring table sizes do not match the basis");
  int units = 0;
  for (int i = 0; i < s; ++i) {
    if (basis[i].degree < 0) throw invalid_input_error("negative degree in ring basis");
    if (basis[i].degree == 0) ++units;
  }
  if (units != 1 || basis[unit].degree != 0)
    throw invalid_input_error("ring must have exactly one degree-0 basis element");
  for (int i = 0; i < s; ++i)
    if (basis[i].degree > top_degree)
      throw invalid_input_error("basis degree exceeds the declared top degree");
  for (int a = 0; a < s; ++a) {
    if (static_cast<int>(products[a].size()) != s)
      throw invalid_input_error("ring table sizes do not match the basis");
    for (int b = 0; b < s; ++b) {
      int deg = basis[a].degree + basis[b].degree;
      for (const auto& [k, c] : products[a][b]) {
        if (c == 0) continue;
        if (basis[k].degree != deg)
          throw invalid_input_error("product " + basis[a].name + "*" + basis[b].name +
                                    " is not degree-homogeneous");
      }
      // graded commutativity
      SparseElt flipped = products[b][a];
      if ((basis[a].degree * basis[b].degree) % 2 != 0)
        for (auto& [k, c] : flipped) c = -c;
      if (!elt_equal(products[a][b], flipped))
        throw invalid_input_error("products " + basis[a].name + "*" + basis[b].name +
                                  " violate graded commutativity");
    }
    if (!elt_equal(products[unit][a], SparseElt{{a, Rat(1)}}))
      throw invalid_input_error("unit does not act as identity");
  }
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b)
      for (int c = 0; c < s; ++c)
        if (!elt_equal(mul(products[a][b], SparseElt{{c, Rat(1)}}),
                       mul(SparseElt{{a, Rat(1)}}, products[b][c])))
          throw invalid_input_error("ring multiplication is not associative");
  for (int i = 0; i < s; ++i)
    if (trace[i] != 0 && basis[i].degree != top_degree)
      throw invalid_input_error("trace must vanish below the top degree");

  const int ts = static_cast<int>(target_basis.size());
  if (static_cast<int>(restriction.size()) != ts)
    throw invalid_input_error("restriction row count does not match the target basis");
  int target_units = 0;
  for (int t = 0; t < ts; ++t) {
    if (target_basis[t].degree == 0) ++target_units;
    if (static_cast<int>(restriction[t].size()) != s)
      throw invalid_input_error("restriction column count does not match the source basis");
    for (int j = 0; j < s; ++j)
      if (restriction[t][j] != 0 && target_basis[t].degree != basis[j].degree)
        throw invalid_input_error("restriction is not degree-preserving");
  }
  if (ts > 0) {
    if (target_units != 1) throw invalid_input_error("target basis needs one degree-0 element");
    for (int t = 0; t < ts; ++t) {
      Rat want = target_basis[t].degree == 0 ? Rat(1) : Rat(0);
      if (restriction[t][unit] != want)
        throw invalid_input_error("restriction is not unital");
    }
  }
}

RingData ring_from_json(const nlohmann::ordered_json& j) {
  RingData ring;
  if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].empty())
    throw invalid_input_error("ring file needs a nonempty basis array");
  for (const auto& b : j["basis"])
    ring.basis.push_back({b.at("name").get<std::string>(), b.at("degree").get<int>()});
  const int s = static_cast<int>(ring.basis.size());
  ring.top_degree = 0;
  for (const auto& b : ring.basis) ring.top_degree = std::max(ring.top_degree, b.degree);
  ring.unit = -1;
  for (int i = 0; i < s; ++i)
    if (ring.basis[i].degree == 0) {
      if (ring.unit >= 0) throw invalid_input_error("multiple degree-0 basis elements");
      ring.unit = i;
    }
  if (ring.unit < 0) throw invalid_input_error("no degree-0 basis element");

  ring.products.assign(s, std::vector<SparseElt>(s));
  std::vector<std::vector<bool>> given(s, std::vector<bool>(s, false));
  if (j.contains("products"))
    for (const auto& p : j["products"]) {
      if (!p.is_array() || p.size() != 4)
        throw invalid_input_error("product entries are [a, b, c, coeff]");
      int a = ring.index_of(p[0].get<std::string>());
      int b = ring.index_of(p[1].get<std::string>());
      int c = ring.index_of(p[2].get<std::string>());
      ring.products[a][b][c] += rat_from_json(p[3]);
      given[a][b] = true;
    }
  // fill unit products, then the graded-commutative mirrors of given entries
  for (int i = 0; i < s; ++i) {
    if (!given[ring.unit][i]) ring.products[ring.unit][i] = {{i, Rat(1)}};
    if (!given[i][ring.unit]) ring.products[i][ring.unit] = {{i, Rat(1)}};
    given[ring.unit][i] = given[i][ring.unit] = true;
  }
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) {
      if (!given[a][b] || given[b][a]) continue;
      SparseElt flipped = ring.products[a][b];
      if ((ring.basis[a].degree * ring.basis[b].degree) % 2 != 0)
        for (auto& [k, c] : flipped) c = -c;
      ring.products[b][a] = flipped;
      given[b][a] = true;
    }
  for (auto& row : ring.products)
    for (auto& e : row) prune(e);

  ring.trace.assign(s, Rat(0));
  if (j.contains("trace"))
    for (const auto& [name, coeff] : j["trace"].items())
      ring.trace[ring.index_of(name)] = rat_from_json(coeff);

  if (j.contains("restriction")) {
    const auto& r = j["restriction"];
    for (const auto& b : r.at("target_basis"))
      ring.target_basis.push_back({b.at("name").get<std::string>(), b.at("degree").get<int>()});
    const auto& m = r.at("matrix");
    if (!m.is_array() || m.size() != ring.target_basis.size())
      throw invalid_input_error("restriction matrix needs one row per target basis element");
    for (const auto& row : m) {
      if (!row.is_array() || static_cast<int>(row.size()) != s)
        throw invalid_input_error("restriction matrix needs one column per source element");
      std::vector<Rat> out;
      for (const auto& e : row) out.push_back(rat_from_json(e));
      ring.restriction.push_back(std::move(out));
    }
  }
  ring.validate();
  return ring;
}

nlohmann::ordered_json ring_to_json(const RingData& ring) {
  nlohmann::ordered_json j;
  j["basis"] = nlohmann::ordered_json::array();
  for (const auto& b : ring.basis) j["basis"].push_back({{"name", b.name}, {"degree", b.degree}});
  j["products"] = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < ring.basis.size(); ++a)
    for (std::size_t b = 0; b < ring.basis.size(); ++b)
      for (const auto& [k, c] : ring.products[a][b]) {
        if (a == static_cast<std::size_t>(ring.unit) || b == static_cast<std::size_t>(ring.unit))
          continue;
        j["products"].push_back({ring.basis[a].name, ring.basis[b].name, ring.basis[k].name,
                                 c.get_str()});
      }
  j["trace"] = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < ring.basis.size(); ++i)
    if (ring.trace[i] != 0) j["trace"][ring.basis[i].name] = ring.trace[i].get_str();
  if (!ring.target_basis.empty()) {
    nlohmann::ordered_json r;
    r["target_basis"] = nlohmann::ordered_json::array();
    for (const auto& b : ring.target_basis)
      r["target_basis"].push_back({{"name", b.name}, {"degree", b.degree}});
    r["matrix"] = nlohmann::ordered_json::array();
    for (const auto& row : ring.restriction) {
      nlohmann::ordered_json jr = nlohmann::ordered_json::array();
      for (const auto& e : row) jr.push_back(e.get_str());
      r["matrix"].push_back(jr);
    }
    j["restriction"] = r;
  }
  return j;
}

RingData ring_point() {
  RingData ring;
  ring.basis = {{"1", 0}};
  ring.products = {{SparseElt{{0, Rat(1)}}}};
  ring.trace = {Rat(1)};
  ring.top_degree = 0;
  ring.unit = 0;
  ring.target_basis = {{"1", 0}};
  ring.restriction = {{Rat(1)}};
  return ring;
}

RingData ring_sphere2_to_c() {
  nlohmann::ordered_json j = {
      {"basis", {{{"name", "1"}, {"degree", 0}}, {{"name", "w"}, {"degree", 2}}}},
      {"trace", {{"w", 1}}},
      {"restriction",
       {{"target_basis", {{{"name", "1"}, {"degree", 0}}}}, {"matrix", {{1, 0}}}}}};
  return ring_from_json(j);
}

RingData ring_torus2_to_punctured() {
  nlohmann::ordered_json j = {
      {"basis",
       {{{"name", "1"}, {"degree", 0}},
        {{"name", "a"}, {"degree", 1}},
        {{"name", "b"}, {"degree", 1}},
        {{"name", "ab"}, {"degree", 2}}}},
      {"products", {{"a", "b", "ab", 1}}},
      {"trace", {{"ab", 1}}},
      {"restriction",
       {{"target_basis",
         {{{"name", "1"}, {"degree", 0}},
          {{"name", "a"}, {"degree", 1}},
          {{"name", "b"}, {"degree", 1}}}},
        {"matrix", {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}}}}};
  return ring_from_json(j);
}

std::vector<SparseElt> dual_basis(const RingData& ring) {
  const int s = static_cast<int>(ring.basis.size());
  // pairing M[a][b] = T(e_a e_b), inverted by Gaussian elimination on [M | I]
  std::vector<std::vector<Rat>> m(s, std::vector<Rat>(2 * s, Rat(0)));
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < s; ++b) m[a][b] = ring.trace_of(ring.products[a][b]);
    m[a][s + a] = 1;
  }
  for (int col = 0; col < s; ++col) {
    int piv = -1;
    for (int row = col; row < s; ++row)
      if (m[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0)
      throw invalid_input_error(
          "singular pairing matrix: not the cohomology of a compact orientable space");
    std::swap(m[col], m[piv]);
    Rat lead = m[col][col];
    for (auto& e : m[col]) e /= lead;
    for (int row = 0; row < s; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rat f = m[row][col];
      for (int k = col; k < 2 * s; ++k) m[row][k] -= f * m[col][k];
    }
  }
  std::vector<SparseElt> duals(s);
  for (int b = 0; b < s; ++b)
    for (int k = 0; k < s; ++k)
      if (m[k][s + b] != 0) duals[b][k] = m[k][s + b];
  return duals;
}

Tensor kappa_element(const RingData& ring, int mn) {
  if (mn < 2) throw invalid_input_error("kappa needs mn >= 2");
  if (mn > 6) throw resource_limit_error("kappa supports mn <= 6");
  ring.validate();
  std::vector<SparseElt> duals = dual_basis(ring);
  const int s = static_cast<int>(ring.basis.size());

  Tensor out;
  std::vector<int> tuple(mn, 0);
  std::vector<int> key(mn, 0);
  std::function<void(std::size_t, Rat)> expand = [&](std::size_t pos, Rat acc) {
    if (pos == static_cast<std::size_t>(mn)) {
      out[key] += acc;
      return;
    }
    for (const auto& [k, c] : duals[tuple[pos]]) {
      key[pos] = k;
      expand(pos + 1, acc * c);
    }
  };
  std::function<void(int, int, const SparseElt&)> rec = [&](int pos, int deg,
                                                            const SparseElt& part) {
    if (pos == mn) {
      Rat c = ring.trace_of(part);
      if (c != 0) expand(0, c);
      return;
    }
    for (int i = 0; i < s; ++i) {
      int nd = deg + ring.basis[i].degree;
      if (nd > ring.top_degree) continue;
      SparseElt next = ring.mul_basis(part, i);
      if (next.empty()) continue;
      tuple[pos] = i;
      rec(pos + 1, nd, next);
    }
  };
  rec(0, 0, unit_elt(ring));
  prune(out);
  return out;
}

Tensor restricted_kappa(const RingData& ring, int mn) {
  if (ring.target_basis.empty())
    throw invalid_input_error("ring file has no restriction data");
  Tensor kappa = kappa_element(ring, mn);
  const int s = static_cast<int>(ring.basis.size());
  std::vector<SparseElt> cols(s);
  for (std::size_t t = 0; t < ring.target_basis.size(); ++t)
    for (int j = 0; j < s; ++j)
      if (ring.restriction[t][j] != 0) cols[j][static_cast<int>(t)] = ring.restriction[t][j];

  Tensor out;
  std::vector<int> key(mn, 0);
  for (const auto& [tuple, c] : kappa) {
    std::function<void(std::size_t, Rat)> expand = [&](std::size_t pos, Rat acc) {
      if (pos == tuple.size()) {
        out[key] += acc;
        return;
      }
      for (const auto& [t, ct] : cols[tuple[pos]]) {
        key[pos] = t;
        expand(pos + 1, acc * ct);
      }
    };
    expand(0, c);
  }
  prune(out);
  return out;
}

bool degeneration_holds(const RingData& ring, int mn) {
  return restricted_kappa(ring, mn).empty();
}

Tensor swap_adjacent(const RingData& ring, const Tensor& t, int pos) {
  Tensor out;
  for (const auto& [key, c] : t) {
    if (pos < 0 || pos + 1 >= static_cast<int>(key.size()))
      throw invalid_input_error("swap position out of range");
    std::vector<int> k2 = key;
    std::swap(k2[pos], k2[pos + 1]);
    int d1 = ring.basis[key[pos]].degree;
    int d2 = ring.basis[key[pos + 1]].degree;
    out[k2] += (d1 * d2) % 2 != 0 ? -c : c;
  }
  prune(out);
  return out;
}

std::string tensor_pretty(const Tensor& t, const std::vector<RingBasisElement>& basis) {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : t) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "- ";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1) os << a.get_str() << "*";
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) os << "(x)";
      os << basis.at(key[i]).name;
    }
  }
  return os.str();
}

nlohmann::ordered_json tensor_to_json(const Tensor& t, const std::vector<RingBasisElement>& basis) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& [key, c] : t) {
    nlohmann::ordered_json names = nlohmann::ordered_json::array();
    for (int k : key) names.push_back(basis.at(k).name);
    out.push_back({{"factors", names}, {"coeff", c.get_str()}});
  }
  return out;
}

}  // namespace zcycles
