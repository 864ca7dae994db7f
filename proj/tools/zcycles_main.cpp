#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "zcycles/arith.hpp"
#include "zcycles/arrangement.hpp"
#include "zcycles/degeneration.hpp"
#include "zcycles/densities.hpp"
#include "zcycles/homology.hpp"
#include "zcycles/json_io.hpp"
#include "zcycles/partition.hpp"
#include "zcycles/poset.hpp"
#include "zcycles/series.hpp"
#include "zcycles/shelling.hpp"

namespace {

using namespace zcycles;

struct GroundFlags {
  int colors = 0;
  std::vector<int> sizes;
  int n = 2;
};

void add_ground_flags(CLI::App* sub, GroundFlags& g) {
  sub->add_option("--colors", g.colors, "number of colors m (checked against --sizes)");
  sub->add_option("--sizes", g.sizes, "color sizes d_1,...,d_m")->required()->delimiter(',');
  sub->add_option("--n", g.n, "multiplicity n")->required();
}

ColoredSet ground_of(const GroundFlags& g) {
  if (g.colors != 0 && g.colors != static_cast<int>(g.sizes.size()))
    throw invalid_input_error("--colors disagrees with the length of --sizes");
  return ColoredSet(g.sizes);
}

struct ManifoldFlags {
  std::string file;
  int dim = -1;
  std::vector<long> betti;
  std::string hodge;
};

void add_manifold_flags(CLI::App* sub, ManifoldFlags& f) {
  sub->add_option("--manifold", f.file, "manifold JSON file {dim, betti, hodge?}");
  sub->add_option("--dim", f.dim, "real dimension of X");
  sub->add_option("--betti", f.betti, "Betti numbers b_0,b_1,...")->delimiter(',');
  sub->add_option("--hodge", f.hodge, "Hodge numbers as p,q,i:h entries joined by ';'");
}

ManifoldData manifold_of(const ManifoldFlags& f) {
  if (!f.file.empty()) {
    std::ifstream in(f.file);
    if (!in) throw invalid_input_error("cannot open manifold file " + f.file);
    return manifold_from_json(nlohmann::ordered_json::parse(in));
  }
  if (f.dim < 0 || f.betti.empty())
    throw invalid_input_error("give --manifold or both --dim and --betti");
  ManifoldData X;
  X.dim = f.dim;
  X.betti = f.betti;
  if (!f.hodge.empty()) {
    X.has_hodge = true;
    std::stringstream ss(f.hodge);
    std::string entry;
    while (std::getline(ss, entry, ';')) {
      int p, q, i;
      long h;
      if (std::sscanf(entry.c_str(), "%d,%d,%d:%ld", &p, &q, &i, &h) != 4)
        throw invalid_input_error("hodge entries look like p,q,i:h");
      X.hodge[{p, q, i}] = h;
    }
  }
  X.validate();
  return X;
}

void emit_json(const std::string& path, const Json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw invalid_input_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw invalid_input_error("cannot write " + path);
  out << text;
}

std::string dims_pretty(const GradedDims& d, const std::string& sym, bool subscript = true) {
  if (d.empty()) return "  (all zero)\n";
  std::ostringstream os;
  for (const auto& [k, v] : d)
    os << "  " << sym << (subscript ? "_" : "") << k << " = " << v << "\n";
  return os.str();
}

std::vector<int> parse_degrees(const std::vector<int>& degrees, int m) {
  if (static_cast<int>(degrees.size()) == m) return degrees;
  if (degrees.size() == 1) return std::vector<int>(m, degrees[0]);
  throw invalid_input_error("--degrees needs one entry per color (or a single shared value)");
}

int run_lattice(const GroundFlags& g, const std::string& dot_path, const std::string& emit,
                const Limits& lim) {
  ColoredSet D = ground_of(g);
  PartitionLattice L = build_lattice(D, g.n, lim);
  long edge_count = 0;
  for (const auto& ups : L.poset.covers_up) edge_count += static_cast<long>(ups.size());
  std::cout << "lattice for " << describe(D) << ", n = " << L.n << "\n";
  std::cout << "elements: " << L.poset.size << ", cover edges: " << edge_count
            << ", one-block top: " << (L.has_one_block_top() ? "yes" : "no") << "\n";
  for (int i = 0; i < L.poset.size; ++i)
    std::cout << "  [" << i << "] " << describe(D, L.elements[i]) << "\n";
  if (!dot_path.empty()) write_file(dot_path, hasse_dot(L));
  emit_json(emit, lattice_to_json(L));
  return 0;
}

int run_shell_verify(const GroundFlags& g, bool corrupt, const std::string& csv_path,
                     const std::string& emit, const Limits& lim) {
  ColoredSet D = ground_of(g);
  LabelledLattice L = build_labelled_lattice(D, g.n, lim);
  if (corrupt && !L.labels.empty()) {
    LambdaLabel constant = L.labels.begin()->second;
    for (auto& [edge, label] : L.labels) label = constant;
  }
  ELVerifyResult r = verify_el(L);
  std::cout << "labelling check for " << describe(D) << ", n = " << L.lat.n << ": "
            << (r.pass ? "pass" : "FAIL") << " (" << r.intervals_checked << " intervals)\n";
  if (!r.pass && r.counterexample) {
    const auto& c = *r.counterexample;
    std::cout << "  interval [" << describe(D, L.lat.elements[c.a]) << ", "
              << describe(D, L.lat.elements[c.b]) << "]: rising chains " << c.rising_count
              << ", lex-first " << (c.lex_first ? "yes" : "no") << "\n  " << c.detail << "\n";
  }
  if (!csv_path.empty()) {
    std::map<std::size_t, long> by_length;
    for (const auto& ch : falling_chains(L, L.lat.poset.bottom, L.lat.poset.top))
      ++by_length[ch.size()];
    std::ostringstream os;
    os << "length,count\n";
    for (const auto& [len, cnt] : by_length) os << len << "," << cnt << "\n";
    write_file(csv_path, os.str());
  }
  emit_json(emit, el_verify_to_json(r));
  return r.pass ? 0 : 1;
}

int run_homology(const GroundFlags& g, const std::string& method, const std::string& emit,
                 const Limits& lim) {
  ColoredSet D = ground_of(g);
  GradedDims dims;
  Json extra;
  if (method == "falling") {
    LabelledLattice L = build_labelled_lattice(D, g.n, lim);
    dims = homology_via_falling_chains(L);
  } else if (method == "oracle") {
    PartitionLattice L = build_lattice(D, g.n, lim);
    dims = reduced_homology(L.poset, lim);
  } else if (method == "integral") {
    PartitionLattice L = build_lattice(D, g.n, lim);
    TorsionReport rep = integral_torsion_check(L.poset, lim);
    dims = rep.dims;
    extra["torsion_free"] = rep.torsion_free;
    std::cout << "torsion: " << (rep.torsion_free ? "none" : "PRESENT") << "\n";
  } else {
    throw invalid_input_error("--method is falling, oracle, or integral");
  }
  std::cout << "reduced homology of the proper part (" << describe(D) << ", n = "
            << normalized_n(D, g.n) << "):\n"
            << dims_pretty(dims, "H~");
  Json j;
  j["ground"] = colored_set_to_json(D);
  j["n"] = normalized_n(D, g.n);
  j["method"] = method;
  j["homology"] = graded_dims_to_json(dims);
  if (!extra.is_null()) j.update(extra);
  emit_json(emit, j);
  return 0;
}

int run_gm(const GroundFlags& g, int ambient, bool invariants, bool oracle,
           const std::string& emit, const Limits& lim) {
  ColoredSet D = ground_of(g);
  ArrangementSpec spec(D, g.n, ambient);
  GradedDims dims = invariants ? invariant_dims(spec, lim)
                               : ordered_cohomology_dims(spec, oracle, lim);
  std::cout << (invariants ? "invariant cohomology" : "cohomology") << " of the complement ("
            << describe(D) << ", n = " << spec.n << ", ambient R^" << ambient << "):\n"
            << dims_pretty(dims, "H^", false);
  Json j;
  j["ground"] = colored_set_to_json(D);
  j["n"] = spec.n;
  j["ambient_dim"] = ambient;
  j["invariants"] = invariants;
  j["cohomology"] = graded_dims_to_json(dims);
  emit_json(emit, j);
  return 0;
}

int run_density(const ManifoldFlags& mf, int m, int n, int order, std::vector<int> degrees,
                bool poincare, const std::string& emit) {
  ManifoldData X = manifold_of(mf);
  DensityParams P = make_density_params(X, m, n);
  Json j;
  j["manifold"] = manifold_to_json(X);
  j["m"] = P.m;
  j["n"] = P.n;
  if (degrees.empty()) {
    if (P.even_dim()) {
      Series1 den = limiting_density(P, order);
      if (poincare) {
        Series1 poin = limiting_poincare(P, order);
        std::cout << "limiting Poincare series: " << pretty(poin) << "\n";
        j["limiting_poincare"] = series_to_json(poin);
      } else {
        std::cout << "limiting density: " << pretty(den) << "\n";
      }
      j["limiting_density"] = series_to_json(den);
    } else {
      Series1 stable = pow(sym_product_poincare(X, -1, order), m);
      std::cout << "odd-dimensional X: density is 1; stable Poincare series "
                << pretty(stable) << "\n";
      j["limiting_density"] = series_to_json(one1(order));
      j["limiting_poincare"] = series_to_json(stable);
    }
  } else {
    std::vector<int> d = parse_degrees(degrees, P.m);
    Series1 poin = P.even_dim() ? poincare_Z_finite(P, d, order) : poincare_via_sym(P, d, order);
    std::cout << "Poincare series of Z: " << pretty(poin) << "\n";
    j["poincare"] = series_to_json(poin);
    if (P.even_dim()) {
      Series1 ratio = density_finite(P, d, order);
      std::cout << "density (ratio to symmetric products): " << pretty(ratio) << "\n";
      j["density"] = series_to_json(ratio);
    } else {
      std::cout << "density (ratio to symmetric products): 1\n";
      j["density"] = series_to_json(one1(order));
    }
  }
  emit_json(emit, j);
  return 0;
}

int run_euler(const ManifoldFlags& mf, int m, int n, int order, bool check_e2,
              const std::string& emit) {
  ManifoldData X = manifold_of(mf);
  DensityParams P = make_density_params(X, m, n);
  Series1 gf = euler_gf(P, order);
  Series1 ratio = euler_ratio(P, order);
  std::cout << "Euler generating function: " << pretty(gf, "x") << "\n";
  std::cout << "ratio to symmetric products: " << pretty(ratio, "x") << "\n";
  Json j;
  j["manifold"] = manifold_to_json(X);
  j["m"] = P.m;
  j["n"] = P.n;
  j["euler_gf"] = series_to_json(gf);
  j["euler_ratio"] = series_to_json(ratio);
  int rc = 0;
  if (check_e2) {
    Series1 hopf = euler_gf_from_e2(P, order);
    bool same = first_difference(gf, hopf) < 0;
    std::cout << "Hopf sums over the spectral sequence: " << pretty(hopf, "x") << "\n"
              << "agreement: " << (same ? "pass" : "FAIL") << "\n";
    j["euler_gf_from_e2"] = series_to_json(hopf);
    j["agree"] = same;
    if (!same) rc = 1;
  }
  emit_json(emit, j);
  return rc;
}

int run_hd(const ManifoldFlags& mf, int m, int n, int order, std::vector<int> degrees,
           const std::string& emit) {
  ManifoldData X = manifold_of(mf);
  DensityParams P = make_density_params(X, m, n);
  Json j;
  j["manifold"] = manifold_to_json(X);
  j["m"] = P.m;
  j["n"] = P.n;
  if (degrees.empty()) {
    Series2 lim = hd_limit(P, order, order);
    std::cout << "limiting Hodge-Deligne density: " << pretty(lim) << "\n";
    j["hd_limit"] = series2_to_json(lim);
  } else {
    std::vector<int> d = parse_degrees(degrees, P.m);
    Series2 fin = hd_Z_finite(P, d, order, order);
    Series2 ratio = hd_density_finite(P, d, order, order);
    std::cout << "Hodge-Deligne polynomial of Z: " << pretty(fin) << "\n";
    std::cout << "ratio to symmetric products: " << pretty(ratio) << "\n";
    j["hd_Z"] = series2_to_json(fin);
    j["hd_density"] = series2_to_json(ratio);
  }
  emit_json(emit, j);
  return 0;
}

int run_coincide(const ManifoldFlags& mf, int product, int order, const std::string& emit) {
  ManifoldData X = manifold_of(mf);
  CoincidenceReport rep = coincidence_report(X, product, order);
  for (const auto& f : rep.factorizations)
    std::cout << "(m,n) = (" << f.m << "," << f.n << "): " << pretty(f.density) << "\n";
  std::cout << "all factorizations of " << product
            << " agree: " << (rep.all_equal ? "yes" : "NO") << "\n";
  Json j;
  j["manifold"] = manifold_to_json(X);
  j["product"] = rep.N_product;
  j["factorizations"] = Json::array();
  for (const auto& f : rep.factorizations)
    j["factorizations"].push_back(
        {{"m", f.m}, {"n", f.n}, {"density", series_to_json(f.density)}});
  j["all_equal"] = rep.all_equal;
  emit_json(emit, j);
  return rep.all_equal ? 0 : 1;
}

int run_degeneration(const std::string& ring_path, const std::string& builtin, int mn,
                     const std::string& emit) {
  RingData ring;
  if (!ring_path.empty()) {
    std::ifstream in(ring_path);
    if (!in) throw invalid_input_error("cannot open ring file " + ring_path);
    ring = ring_from_json(nlohmann::ordered_json::parse(in));
  } else if (builtin == "point") {
    ring = ring_point();
  } else if (builtin == "s2") {
    ring = ring_sphere2_to_c();
  } else if (builtin == "t2") {
    ring = ring_torus2_to_punctured();
  } else {
    throw invalid_input_error("give --ring FILE or --builtin point|s2|t2");
  }
  Tensor kappa = kappa_element(ring, mn);
  Tensor rest = restricted_kappa(ring, mn);
  bool holds = rest.empty();
  std::cout << "kappa = " << tensor_pretty(kappa, ring.basis) << "\n";
  std::cout << "restricted kappa = " << tensor_pretty(rest, ring.target_basis) << "\n";
  std::cout << "degeneration criterion: " << (holds ? "holds" : "does not apply") << "\n";
  Json j;
  j["mn"] = mn;
  j["kappa"] = tensor_to_json(kappa, ring.basis);
  j["restricted_kappa"] = tensor_to_json(rest, ring.target_basis);
  j["holds"] = holds;
  emit_json(emit, j);
  return 0;
}

int run_arith_int(int m, int n, long bound, long zeta_terms, const std::string& emit) {
  IntDensityResult r = nprime_density_integers(m, n, Int(bound));
  RatInterval zi = zeta_inverse_enclosure(m * n, zeta_terms);
  Rat mid = (zi.lo + zi.hi) / 2;
  Rat err = r.density - mid;
  if (err < 0) err = -err;
  std::cout << "bound,count,ratio,zeta_inverse,error\n";
  std::cout << bound << "," << r.count.get_str() << "," << r.density.get_d() << ","
            << mid.get_d() << "," << err.get_d() << "\n";
  Json j;
  j["mode"] = "int";
  j["m"] = m;
  j["n"] = n;
  j["bound"] = bound;
  j["count"] = json_int(r.count);
  j["ratio"] = r.density.get_str();
  j["zeta_inverse_lo"] = zi.lo.get_str();
  j["zeta_inverse_hi"] = zi.hi.get_str();
  emit_json(emit, j);
  return 0;
}

int run_arith_fq(long q, int m, int n, const std::vector<int>& degrees, const std::string& emit,
                 const Limits& lim) {
  std::vector<int> d = parse_degrees(degrees, m);
  FqRatioResult r = nprime_ratio_fq(q, m, n, d, lim);
  Rat zi = zeta_inverse_fq(q, m * n);
  Rat err = r.ratio - zi;
  if (err < 0) err = -err;
  std::ostringstream ds;
  for (std::size_t i = 0; i < d.size(); ++i) ds << (i ? "+" : "") << d[i];
  std::cout << "degree,count,ratio,zeta_inverse,error\n";
  std::cout << ds.str() << "," << r.count.get_str() << "," << r.ratio.get_str() << ","
            << zi.get_str() << "," << err.get_d() << "\n";
  Json j;
  j["mode"] = "fq";
  j["q"] = q;
  j["m"] = m;
  j["n"] = n;
  j["degrees"] = d;
  j["count"] = json_int(r.count);
  j["total"] = json_int(r.total);
  j["ratio"] = r.ratio.get_str();
  j["zeta_inverse"] = zi.get_str();
  emit_json(emit, j);
  return 0;
}

int run_verify_all(int max_total, const Limits& lim) {
  const std::vector<std::pair<int, int>> families = {{1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}};
  bool all_pass = true;
  std::cout << "family    sizes        elems  el      oracle  kunneth\n";
  for (auto [m, n] : families) {
    std::vector<std::vector<int>> size_lists;
    if (m == 1) {
      for (int a = 1; a <= max_total; ++a) size_lists.push_back({a});
    } else if (m == 2) {
      for (int a = 1; a < max_total; ++a)
        for (int b = 1; a + b <= max_total; ++b) size_lists.push_back({a, b});
    } else {
      for (int a = 1; a < max_total; ++a)
        for (int b = 1; a + b < max_total; ++b)
          for (int c = 1; a + b + c <= max_total; ++c) size_lists.push_back({a, b, c});
    }
    for (const auto& sizes : size_lists) {
      ColoredSet D(sizes);
      LabelledLattice L = build_labelled_lattice(D, n, lim);
      bool el = verify_el(L).pass;

      bool oracle = true;
      for (int a = 0; a < L.lat.poset.size && oracle; ++a)
        for (int b = 0; b < L.lat.poset.size && oracle; ++b) {
          if (!L.lat.poset.leq[a][b]) continue;
          GradedDims falling = homology_via_falling_chains(L, a, b);
          InducedPoset sub = interval(L.lat.poset, a, b);
          TorsionReport rep = integral_torsion_check(sub.poset, lim);
          if (!rep.torsion_free || falling != rep.dims) oracle = false;
        }

      bool kunneth = true;
      for (const auto& I : L.lat.elements)
        if (!kunneth_rank_check(L.lat, I, lim).ok) {
          kunneth = false;
          break;
        }

      bool good = el && oracle && kunneth;
      all_pass = all_pass && good;
      std::ostringstream fam, sz;
      fam << "(" << m << "," << n << ")";
      for (std::size_t i = 0; i < sizes.size(); ++i) sz << (i ? "," : "") << sizes[i];
      std::cout << std::left << std::setw(10) << fam.str() << std::setw(13) << sz.str()
                << std::setw(7) << L.lat.poset.size << std::setw(8) << (el ? "pass" : "FAIL")
                << std::setw(8) << (oracle ? "pass" : "FAIL") << (kunneth ? "pass" : "FAIL")
                << "\n";
    }
  }
  std::cout << (all_pass ? "verify-all: pass" : "verify-all: FAIL") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homology of colored n-equals partition lattices and spaces of 0-cycles"};
  app.require_subcommand(1);

  Limits lim;
  app.add_option("--max-ground", lim.max_ground_set, "partition enumeration guard");
  app.add_option("--max-symmetry", lim.max_symmetry_ground, "symmetry group guard");
  app.add_option("--max-poset", lim.max_poset_elements, "poset size guard");
  app.add_option("--max-simplices", lim.max_simplices, "order complex guard");
  app.add_option("--max-fq", lim.max_fq_tuples, "polynomial enumeration guard");

  GroundFlags ground;
  std::string emit, dot_path, csv_path, method = "falling";
  int ambient = 2;
  bool invariants = false, oracle = false, poincare = false, check_e2 = false;
  ManifoldFlags mf;
  int m = 1, n = 2, order = 8, product = 2;
  std::vector<int> degrees;
  std::string ring_path, builtin;
  int mn = 2;
  long bound = 1000, zeta_terms = 1000;
  long q = 3;
  int max_total = 6;

  auto* lattice = app.add_subcommand("lattice", "enumerate a colored n-equals partition lattice");
  add_ground_flags(lattice, ground);
  lattice->add_option("--dot", dot_path, "write the Hasse diagram in DOT format");
  lattice->add_option("--emit", emit, "write a JSON report");

  auto* shell = app.add_subcommand("shell-verify", "verify the edge labelling on every interval");
  add_ground_flags(shell, ground);
  bool corrupt = false;
  shell->add_flag("--corrupt", corrupt, "overwrite all labels with a constant (the check must fail)");
  shell->add_option("--falling-csv", csv_path, "write falling chain counts as CSV");
  shell->add_option("--emit", emit, "write a JSON report");

  auto* hom = app.add_subcommand("homology", "reduced homology of the proper part");
  add_ground_flags(hom, ground);
  hom->add_option("--method", method, "falling | oracle | integral");
  hom->add_option("--emit", emit, "write a JSON report");

  auto* gm = app.add_subcommand("gm", "cohomology of the no-(n,...,n)-equal arrangement complement");
  add_ground_flags(gm, ground);
  gm->add_option("--ambient-dim", ambient, "N in (R^N)^D")->required();
  gm->add_flag("--invariants", invariants, "invariant part under the color-preserving symmetries");
  gm->add_flag("--oracle", oracle, "use the matrix homology oracle instead of falling chains");
  gm->add_option("--emit", emit, "write a JSON report");

  auto* density = app.add_subcommand("density", "Poincare series and homological density");
  add_manifold_flags(density, mf);
  density->add_option("--m", m, "number of colors")->required();
  density->add_option("--n", n, "multiplicity")->required();
  density->add_option("--order", order, "series truncation order");
  density->add_option("--degrees", degrees, "finite degree vector d_1,...,d_m")->delimiter(',');
  density->add_flag("--poincare", poincare, "print the limiting Poincare series");
  density->add_option("--emit", emit, "write a JSON report");

  auto* euler = app.add_subcommand("euler-gf", "Euler characteristic generating function");
  add_manifold_flags(euler, mf);
  euler->add_option("--m", m, "number of colors")->required();
  euler->add_option("--n", n, "multiplicity")->required();
  euler->add_option("--order", order, "x truncation order");
  euler->add_flag("--check-e2", check_e2, "compare against Hopf sums over the spectral sequence");
  euler->add_option("--emit", emit, "write a JSON report");

  auto* hd = app.add_subcommand("hd-limit", "Hodge-Deligne limit and finite-degree polynomials");
  add_manifold_flags(hd, mf);
  hd->add_option("--m", m, "number of colors")->required();
  hd->add_option("--n", n, "multiplicity")->required();
  hd->add_option("--order", order, "truncation order in u and v");
  hd->add_option("--degrees", degrees, "finite degree vector")->delimiter(',');
  hd->add_option("--emit", emit, "write a JSON report");

  auto* coincide = app.add_subcommand("coincide", "limiting density across factorizations of mn");
  add_manifold_flags(coincide, mf);
  coincide->add_option("--product", product, "the product m*n")->required();
  coincide->add_option("--order", order, "series truncation order");
  coincide->add_option("--emit", emit, "write a JSON report");

  auto* degen = app.add_subcommand("degeneration", "diagonal-class degeneration criterion");
  degen->add_option("--ring", ring_path, "ring JSON file");
  degen->add_option("--builtin", builtin, "built-in example: point | s2 | t2");
  degen->add_option("--mn", mn, "number of tensor factors")->required();
  degen->add_option("--emit", emit, "write a JSON report");

  auto* arith = app.add_subcommand("arith", "number-theoretic densities");
  arith->require_subcommand(1);
  auto* arith_int = arith->add_subcommand("int", "relatively n-prime m-tuples of integers");
  arith_int->add_option("--m", m, "tuple length")->required();
  arith_int->add_option("--n", n, "power in the divisibility condition")->required();
  arith_int->add_option("--bound", bound, "count tuples in [1, bound]^m")->required();
  arith_int->add_option("--zeta-terms", zeta_terms, "partial sum length for the zeta enclosure");
  arith_int->add_option("--emit", emit, "write a JSON report");
  auto* arith_fq = arith->add_subcommand("fq", "relatively n-prime tuples of monic polynomials");
  arith_fq->add_option("--q", q, "field size (prime)")->required();
  arith_fq->add_option("--m", m, "tuple length")->required();
  arith_fq->add_option("--n", n, "power in the divisibility condition")->required();
  arith_fq->add_option("--degrees", degrees, "degrees d_1,...,d_m")->required()->delimiter(',');
  arith_fq->add_option("--emit", emit, "write a JSON report");

  auto* verify = app.add_subcommand("verify-all", "oracle equivalence across small lattices");
  verify->add_option("--max-size", max_total, "largest ground set total");

  for (CLI::App* sub : {lattice, shell, hom, gm, density, euler, hd, coincide, degen, arith,
                        arith_int, arith_fq, verify})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*lattice) return run_lattice(ground, dot_path, emit, lim);
    if (*shell) return run_shell_verify(ground, corrupt, csv_path, emit, lim);
    if (*hom) return run_homology(ground, method, emit, lim);
    if (*gm) return run_gm(ground, ambient, invariants, oracle, emit, lim);
    if (*density) return run_density(mf, m, n, order, degrees, poincare, emit);
    if (*euler) return run_euler(mf, m, n, order, check_e2, emit);
    if (*hd) return run_hd(mf, m, n, order, degrees, emit);
    if (*coincide) return run_coincide(mf, product, order, emit);
    if (*degen) return run_degeneration(ring_path, builtin, mn, emit);
    if (*arith_int) return run_arith_int(m, n, bound, zeta_terms, emit);
    if (*arith_fq) return run_arith_fq(q, m, n, degrees, emit, lim);
    if (*verify) return run_verify_all(max_total, lim);
  } catch (const invalid_input_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const resource_limit_error& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
