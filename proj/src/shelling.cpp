#include "zcycles/shelling.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace zcycles {

namespace {

int popcount(uint32_t m) { return std::popcount(m); }

// largest 1-based index of the given color inside the block mask, 0 if none
int max_index(const ColoredSet& D, uint32_t mask, int color) {
  uint32_t inside = mask & D.color_mask(color);
  if (!inside) return 0;
  int hi = 31 - std::countl_zero(inside);
  return D.index_of(hi);
}

struct EdgeShape {
  uint32_t new_block = 0;
  std::vector<uint32_t> merged;  // blocks of I inside the new block
  std::vector<uint32_t> merged_singles, merged_bigs;
};

EdgeShape edge_shape(const ColoredSet& D, const NEqualsPartition& I,
                     const NEqualsPartition& J) {
  if (!refines(I, J) || I == J)
    throw invalid_input_error("edge endpoints must satisfy I < J");
  EdgeShape s;
  for (uint32_t jb : J.blocks) {
    bool is_old = std::find(I.blocks.begin(), I.blocks.end(), jb) != I.blocks.end();
    if (is_old) continue;
    if (s.new_block) throw invalid_input_error("not a covering edge: several blocks change");
    s.new_block = jb;
  }
  for (uint32_t ib : I.blocks)
    if (ib & s.new_block) {
      s.merged.push_back(ib);
      (popcount(ib) == 1 ? s.merged_singles : s.merged_bigs).push_back(ib);
    }
  return s;
}

}  // namespace

bool LambdaLabel::operator==(const LambdaLabel& o) const {
  return is_bar == o.is_bar && bar_index == o.bar_index && coords == o.coords &&
         first_minus_eps == o.first_minus_eps;
}

bool LambdaLabel::operator<(const LambdaLabel& o) const {
  if (is_bar != o.is_bar) return is_bar;  // every bar below every tuple
  if (is_bar) return bar_index < o.bar_index;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != o.coords[i]) return coords[i] < o.coords[i];
    if (i == 0 && first_minus_eps != o.first_minus_eps) return first_minus_eps;
  }
  return false;
}

std::string LambdaLabel::str() const {
  std::ostringstream os;
  if (is_bar) {
    os << "bar(" << bar_index << ")";
    return os.str();
  }
  os << "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    os << (i ? "," : "") << coords[i];
    if (i == 0 && first_minus_eps) os << "-e";
  }
  os << ")";
  return os.str();
}

EdgeKind classify_edge(const ColoredSet& D, int n, const NEqualsPartition& I,
                       const NEqualsPartition& J) {
  n = normalized_n(D, n);
  EdgeShape s = edge_shape(D, I, J);
  if (s.merged_bigs.size() == 2 && s.merged_singles.empty()) return EdgeKind::BlockMerge;
  if (s.merged_bigs.size() == 1 && s.merged_singles.size() == 1) return EdgeKind::SingletonAdd;
  if (s.merged_bigs.empty() && s.merged_singles.size() >= 2) {
    // creations take exactly n singletons of every color
    for (int c = 1; c <= D.colors(); ++c)
      if (popcount(s.new_block & D.color_mask(c)) != n)
        throw invalid_input_error("not a covering edge: malformed block creation");
    return EdgeKind::BlockCreation;
  }
  throw invalid_input_error("not a covering edge");
}

LambdaLabel edge_label(const ColoredSet& D, int n, const NEqualsPartition& I,
                       const NEqualsPartition& J) {
  n = normalized_n(D, n);
  EdgeKind kind = classify_edge(D, n, I, J);
  EdgeShape s = edge_shape(D, I, J);
  LambdaLabel L;
  switch (kind) {
    case EdgeKind::BlockMerge: {
      L.is_bar = true;
      L.bar_index = max_index(D, s.new_block, 1);
      return L;
    }
    case EdgeKind::BlockCreation: {
      L.coords.resize(D.colors());
      for (int c = 1; c <= D.colors(); ++c) L.coords[c - 1] = max_index(D, s.new_block, c);
      return L;
    }
    case EdgeKind::SingletonAdd: {
      uint32_t receiving = s.merged_bigs[0];
      int elem = std::countr_zero(s.merged_singles[0]);
      int color = D.color_of(elem);
      int index = D.index_of(elem);
      L.coords.resize(D.colors());
      if (color == 1) {
        L.coords[0] = index;
        L.first_minus_eps = index < max_index(D, receiving, 1);
        for (int c = 2; c <= D.colors(); ++c) L.coords[c - 1] = D.size(c);
      } else {
        for (int c = 1; c < color; ++c) L.coords[c - 1] = max_index(D, receiving, c);
        L.coords[color - 1] = index;
        for (int c = color + 1; c <= D.colors(); ++c) L.coords[c - 1] = D.size(c);
      }
      return L;
    }
  }
  throw invalid_input_error("unreachable edge kind");
}

const LambdaLabel& LabelledLattice::label(int a, int b) const {
  auto it = labels.find({a, b});
  if (it == labels.end()) throw invalid_input_error("no label: not a Hasse edge");
  return it->second;
}

std::vector<LambdaLabel> LabelledLattice::word(const std::vector<int>& chain) const {
  std::vector<LambdaLabel> w;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) w.push_back(label(chain[i], chain[i + 1]));
  return w;
}

LabelledLattice build_labelledlattice_impl(PartitionLattice lat) {
  LabelledLattice L{std::move(lat), {}};
  for (int a = 0; a < L.lat.poset.size; ++a)
    for (int b : L.lat.poset.covers_up[a])
      L.labels.emplace(std::pair{a, b},
                       edge_label(L.lat.D, L.lat.n, L.lat.elements[a], L.lat.elements[b]));
  return L;
}

LabelledLattice build_labelled_lattice(const ColoredSet& D, int n, const Limits& limits) {
  return build_labelledlattice_impl(build_lattice(D, n, limits));
}

bool is_rising(const std::vector<LambdaLabel>& word) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (!(word[i] < word[i + 1])) return false;
  return true;
}

bool is_falling(const std::vector<LambdaLabel>& word) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] < word[i + 1]) return false;  // need word[i] >= word[i+1]
  return true;
}

bool lex_less(const std::vector<LambdaLabel>& a, const std::vector<LambdaLabel>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const LambdaLabel& x, const LambdaLabel& y) { return x < y; });
}

std::vector<std::vector<int>> rising_chains(const LabelledLattice& L, int a, int b) {
  std::vector<std::vector<int>> out;
  for (auto& chain : maximal_chains(L.lat.poset, a, b))
    if (is_rising(L.word(chain))) out.push_back(chain);
  return out;
}

std::vector<std::vector<int>> falling_chains(const LabelledLattice& L, int a, int b) {
  std::vector<std::vector<int>> out;
  for (auto& chain : maximal_chains(L.lat.poset, a, b))
    if (is_falling(L.word(chain))) out.push_back(chain);
  return out;
}

ELVerifyResult verify_el(const LabelledLattice& L) {
  ELVerifyResult res;
  const BoundedPoset& P = L.lat.poset;
  for (int a = 0; a < P.size; ++a)
    for (int b = 0; b < P.size; ++b) {
      if (!P.leq[a][b]) continue;
      ++res.intervals_checked;
      auto chains = maximal_chains(P, a, b);
      long rising = 0;
      std::vector<LambdaLabel> rising_word, lex_min;
      bool lex_min_set = false, lex_min_unique = false;
      for (const auto& chain : chains) {
        auto w = L.word(chain);
        if (is_rising(w)) {
          ++rising;
          rising_word = w;
        }
        if (!lex_min_set || lex_less(w, lex_min)) {
          lex_min = w;
          lex_min_set = true;
          lex_min_unique = true;
        } else if (!lex_less(lex_min, w)) {
          lex_min_unique = false;  // tie
        }
      }
      bool ok = rising == 1 && (chains.size() == 1 ||
                                (lex_min_unique && rising_word == lex_min));
      if (!ok) {
        ELCounterexample ce;
        ce.a = a;
        ce.b = b;
        ce.rising_count = rising;
        ce.lex_first = rising == 1 && lex_min_unique && rising_word == lex_min;
        std::ostringstream os;
        os << "interval [" << describe(L.lat.D, L.lat.elements[a]) << ", "
           << describe(L.lat.D, L.lat.elements[b]) << "]: " << rising
           << " rising chain(s)";
        if (rising == 1 && !ce.lex_first) os << ", rising chain not lex-first";
        ce.detail = os.str();
        res.counterexample = ce;
        return res;
      }
    }
  res.pass = true;
  return res;
}

GradedDims homology_via_falling_chains(const LabelledLattice& L, int a, int b) {
  GradedDims out;
  for (const auto& chain : falling_chains(L, a, b))
    ++out[static_cast<int>(chain.size()) - 3];  // length r+2 -> degree r
  return out;
}

GradedDims homology_via_falling_chains(const LabelledLattice& L) {
  return homology_via_falling_chains(L, L.lat.poset.bottom, L.lat.poset.top);
}

}  // namespace zcycles
