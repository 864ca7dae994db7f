#include "zcycles/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace zcycles {

namespace {

void axpy(SparseQVec& target, const Rat& coeff, const SparseQVec& src) {
  for (const auto& [idx, val] : src) {
    auto it = target.find(idx);
    if (it == target.end()) {
      target.emplace(idx, coeff * val);
    } else {
      it->second += coeff * val;
      if (it->second == 0) target.erase(it);
    }
  }
}

// quotient with symmetric remainder: a = q*b + r, |r| <= |b|/2
Int nearest_quotient(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int ab = abs(b);
  if (2 * r > ab) q += sgn(b);
  return q;
}

}  // namespace

bool EchelonBasis::insert(SparseQVec v) {
  while (!v.empty()) {
    int leadidx = v.begin()->first;
    auto hit = lead_.find(leadidx);
    if (hit == lead_.end()) {
      Rat inv = 1 / v.begin()->second;
      for (auto& [i, x] : v) x *= inv;
      lead_.emplace(leadidx, static_cast<int>(vecs_.size()));
      vecs_.push_back(std::move(v));
      return true;
    }
    Rat c = -v.begin()->second;
    axpy(v, c, vecs_[hit->second]);
  }
  return false;
}

bool EchelonBasis::in_span(SparseQVec v) const {
  while (!v.empty()) {
    auto hit = lead_.find(v.begin()->first);
    if (hit == lead_.end()) return false;
    Rat c = -v.begin()->second;
    axpy(v, c, vecs_[hit->second]);
  }
  return true;
}

std::optional<std::vector<Rat>> EchelonBasis::coords(SparseQVec v) const {
  std::vector<Rat> out(vecs_.size(), Rat(0));
  while (!v.empty()) {
    auto hit = lead_.find(v.begin()->first);
    if (hit == lead_.end()) return std::nullopt;
    Rat c = v.begin()->second;
    out[hit->second] = c;
    axpy(v, -c, vecs_[hit->second]);
  }
  return out;
}

long rank_rational(const std::vector<SparseQVec>& columns) {
  EchelonBasis basis;
  for (const auto& col : columns) basis.insert(col);
  return basis.rank();
}

std::vector<Int> smith_divisors(std::vector<SparseZVec> rows) {
  std::vector<Int> divisors;
  std::vector<bool> done(rows.size(), false);
  while (true) {
    // pivot of minimal magnitude among all live entries
    int pr = -1, pc = -1;
    Int best;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (done[i]) continue;
      for (const auto& [c, v] : rows[i]) {
        Int a = abs(v);
        if (pr < 0 || a < best) {
          best = a;
          pr = static_cast<int>(i);
          pc = c;
          if (best == 1) break;
        }
      }
      if (pr >= 0 && best == 1) break;
    }
    if (pr < 0) break;

    for (bool moved = true; moved;) {
      moved = false;
      Int pivot = rows[pr].at(pc);
      // clear the pivot column with row operations
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (done[i] || static_cast<int>(i) == pr) continue;
        auto it = rows[i].find(pc);
        if (it == rows[i].end()) continue;
        Int q = nearest_quotient(it->second, pivot);
        if (q != 0) {
          for (const auto& [c, v] : rows[pr]) {
            auto jt = rows[i].find(c);
            if (jt == rows[i].end()) {
              rows[i].emplace(c, -q * v);
            } else {
              jt->second -= q * v;
              if (jt->second == 0) rows[i].erase(jt);
            }
          }
        }
        it = rows[i].find(pc);
        if (it != rows[i].end()) {
          // remainder beats the pivot; move there and restart
          pr = static_cast<int>(i);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      // column is clear, so column operations only touch the pivot row
      pivot = rows[pr].at(pc);
      for (auto it = rows[pr].begin(); it != rows[pr].end();) {
        if (it->first == pc) {
          ++it;
          continue;
        }
        Int q = nearest_quotient(it->second, pivot);
        it->second -= q * pivot;
        if (it->second == 0) {
          it = rows[pr].erase(it);
        } else {
          pc = it->first;  // smaller remainder becomes the pivot
          moved = true;
          break;
        }
      }
    }
    divisors.push_back(abs(rows[pr].at(pc)));
    rows[pr].clear();
    done[pr] = true;
  }
  // enforce d_i | d_{i+1}
  std::sort(divisors.begin(), divisors.end());
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < divisors.size(); ++i)
      for (std::size_t j = i + 1; j < divisors.size(); ++j)
        if (divisors[j] % divisors[i] != 0) {
          Int g = gcd(divisors[i], divisors[j]);
          Int l = divisors[i] / g * divisors[j];
          divisors[i] = g;
          divisors[j] = l;
          changed = true;
        }
    if (changed) std::sort(divisors.begin(), divisors.end());
  }
  return divisors;
}

bool all_units(const std::vector<Int>& divisors) {
  for (const Int& d : divisors)
    if (d != 1) return false;
  return true;
}

}  // namespace zcycles
