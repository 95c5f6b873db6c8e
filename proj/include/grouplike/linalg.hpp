#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "grouplike/rational.hpp"
#include "grouplike/scalar.hpp"

namespace grouplike {

template <class V>
using SparseVec = std::map<int, V>;

inline bool lin_is_zero(const Rat& v) { return v == 0; }
inline bool lin_is_zero(const ScalarFrac& v) { return v.is_zero(); }
inline Rat lin_one(const Rat*) { return Rat(1); }
inline ScalarFrac lin_one(const ScalarFrac*) { return ScalarFrac(Scalar(1)); }

/* Incremental exact reduced row echelon form over an exact coefficient type.
 * Rows are keyed by pivot column; every stored row has entry 1 at its pivot,
 * support in [pivot, inf), and no support on other pivots, so reducing a
 * vector is a single ascending sweep. */
template <class V>
class RowReducer {
public:
  // Residue of row modulo the current row space; no support on pivot columns.
  SparseVec<V> reduce(SparseVec<V> row) const {
    auto it = row.begin();
    while (it != row.end()) {
      if (lin_is_zero(it->second)) {
        it = row.erase(it);
        continue;
      }
      auto p = rows_.find(it->first);
      if (p == rows_.end()) {
        ++it;
        continue;
      }
      const int col = it->first;
      const V c = it->second;
      for (const auto& [j, v] : p->second) {
        auto r = row.try_emplace(j, V()).first;
        r->second -= c * v;
      }
      it = row.lower_bound(col); // the entry at col cancelled; rescan from it
    }
    return row;
  }

  // Returns the new pivot column, or -1 if row lies in the current row space.
  int insert(SparseVec<V> row) {
    row = reduce(std::move(row));
    if (row.empty()) return -1;
    const int piv = row.begin()->first;
    const V lead = row.begin()->second;
    SparseVec<V> norm;
    for (auto& [j, v] : row)
      if (j == piv)
        norm.emplace(j, lin_one(static_cast<V*>(nullptr)));
      else
        norm.emplace(j, v / lead);

    // Eliminate the new pivot column from every stored row touching it.
    if (auto touch = col_index_.find(piv); touch != col_index_.end()) {
      const std::vector<int> holders(touch->second.begin(), touch->second.end());
      for (int p2 : holders) {
        auto& r2 = rows_.at(p2);
        const V c = r2.at(piv);
        for (const auto& [j, v] : norm) {
          auto r = r2.try_emplace(j, V()).first;
          r->second -= c * v;
          if (lin_is_zero(r->second)) {
            r2.erase(j);
            detach(j, p2);
          } else {
            col_index_[j].insert(p2);
          }
        }
      }
    }
    for (const auto& [j, v] : norm) col_index_[j].insert(piv);
    rows_.emplace(piv, std::move(norm));
    return piv;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  bool has_pivot(int col) const { return rows_.count(col) != 0; }
  const std::map<int, SparseVec<V>>& rows() const { return rows_; }

  std::vector<int> free_columns(int ncols) const {
    std::vector<int> out;
    for (int j = 0; j < ncols; ++j)
      if (!rows_.count(j)) out.push_back(j);
    return out;
  }

  // Kernel basis of the system whose equations are the inserted rows: one
  // vector per free column f, with v[f] = 1 and v[p] = -row_p[f].
  std::vector<SparseVec<V>> null_space(int ncols) const {
    std::vector<SparseVec<V>> basis;
    for (int f : free_columns(ncols)) {
      SparseVec<V> v;
      v.emplace(f, lin_one(static_cast<V*>(nullptr)));
      for (const auto& [p, r] : rows_)
        if (auto it = r.find(f); it != r.end())
          if (!lin_is_zero(it->second)) v.emplace(p, -it->second);
      basis.push_back(std::move(v));
    }
    return basis;
  }

private:
  void detach(int col, int pivot) {
    auto it = col_index_.find(col);
    if (it == col_index_.end()) return;
    it->second.erase(pivot);
    if (it->second.empty()) col_index_.erase(it);
  }

  std::map<int, SparseVec<V>> rows_;
  std::map<int, std::set<int>> col_index_;
};

// Exact rank of a dense rational matrix.
inline int matrix_rank(const std::vector<std::vector<Rat>>& m) {
  RowReducer<Rat> red;
  for (const auto& row : m) {
    SparseVec<Rat> r;
    for (int j = 0; j < static_cast<int>(row.size()); ++j)
      if (row[j] != 0) r.emplace(j, row[j]);
    red.insert(std::move(r));
  }
  return red.rank();
}

} // namespace grouplike
