#include "grouplike/convalg.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>

#include "grouplike/linalg.hpp"

namespace grouplike {

namespace {

constexpr int kMaxViolations = 32;

bool add_violation(ValidationReport& rep, const std::string& axiom, const std::string& witness) {
  if (static_cast<int>(rep.violations.size()) < kMaxViolations)
    rep.violations.push_back({axiom, witness});
  return static_cast<int>(rep.violations.size()) < kMaxViolations;
}

// Canonical sparse column, no zero entries.
using Col = std::map<int, Scalar>;

Col to_col(const SparseCol& c) {
  Col out;
  for (const auto& [row, v] : c) {
    auto it = out.try_emplace(row, Scalar()).first;
    it->second += v;
    if (it->second.is_zero()) out.erase(it);
  }
  return out;
}

void col_axpy(Col& acc, const Scalar& c, const SparseCol& col) {
  for (const auto& [row, v] : col) {
    auto it = acc.try_emplace(row, Scalar()).first;
    it->second += c * v;
    if (it->second.is_zero()) acc.erase(it);
  }
}

// op applied to a canonical column.
Col apply_op(const std::vector<SparseCol>& op, const Col& v) {
  Col out;
  for (const auto& [j, c] : v) col_axpy(out, c, op[j]);
  return out;
}

std::string col_str(const Bimodule& b, const Col& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [row, c] : v) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")*" + b.label(row);
  }
  return out;
}



/* Quotient by relations with at most two terms, kept as a union-find whose
 * edges carry exact ratios: e_k = w_k * e_root, plus a per-class zero flag.
 * Classes merge toward the larger index, so the surviving representatives
 * coincide with the echelon free columns (a two-term row pivots at its
 * smaller index). Near-linear where row reduction is quadratic. Unit ratios
 * dominate in practice and travel as null pointers, clear of any field
 * arithmetic. */
class RatioDSU {
public:
  explicit RatioDSU(int n) : parent_(n, -1), weight_(n), zero_(n, 0) {}

  // Root of k's class plus the ratio w with e_k = w * e_root; null w is one.
  // The pointer stays valid until the next relate().
  std::pair<int, const ScalarFrac*> find(int k) {
    if (parent_[k] < 0) return {k, nullptr};
    path_.clear();
    int r = k;
    while (parent_[r] >= 0) {
      path_.push_back(r);
      r = parent_[r];
    }
    const ScalarFrac* acc = nullptr; // finalized ratio of the previous node
    for (auto it = path_.rbegin(); it != path_.rend(); ++it) {
      if (acc) {
        if (weight_[*it].is_one())
          weight_[*it] = *acc;
        else
          weight_[*it] = weight_[*it] * *acc;
      }
      parent_[*it] = r;
      acc = weight_[*it].is_one() ? nullptr : &weight_[*it];
    }
    return {r, acc};
  }

  // Impose cu * e_u = cv * e_v with both coefficients nonzero, u != v.
  void relate(int u, const Scalar& cu, int v, const Scalar& cv) {
    auto [ru, pu] = find(u);
    auto [rv, pv] = find(v);
    const bool units = cu.is_one() && cv.is_one() && !pu && !pv;
    if (ru == rv) {
      if (units) return;
      ScalarFrac alpha = pu ? ScalarFrac(cu) * *pu : ScalarFrac(cu);
      ScalarFrac beta = pv ? ScalarFrac(cv) * *pv : ScalarFrac(cv);
      if (alpha != beta) zero_[ru] = 1;
      return;
    }
    const bool dead = zero_[ru] || zero_[rv];
    if (units) {
      attach(std::min(ru, rv), std::max(ru, rv), ScalarFrac::one(), dead);
      return;
    }
    // alpha e_ru = beta e_rv
    ScalarFrac alpha = pu ? ScalarFrac(cu) * *pu : ScalarFrac(cu);
    ScalarFrac beta = pv ? ScalarFrac(cv) * *pv : ScalarFrac(cv);
    if (ru < rv)
      attach(ru, rv, div(beta, alpha), dead);
    else
      attach(rv, ru, div(alpha, beta), dead);
  }

  // Impose e_u = 0 (any nonzero multiple of it).
  void kill(int u) { zero_[find(u).first] = 1; }

  // Residue of e_k in the quotient: empty or a single weighted representative.
  SparseVec<ScalarFrac> residue(int k) {
    auto [r, p] = find(k);
    SparseVec<ScalarFrac> out;
    if (!zero_[r]) out.emplace(r, p ? *p : ScalarFrac::one());
    return out;
  }

  std::vector<int> free_columns() {
    std::vector<int> out;
    for (int k = 0; k < static_cast<int>(parent_.size()); ++k)
      if (parent_[k] < 0 && !zero_[k]) out.push_back(k);
    return out;
  }

  // One kernel basis vector per live class, classes in ascending root order.
  std::vector<SparseVec<ScalarFrac>> null_space() {
    std::map<int, SparseVec<ScalarFrac>> classes;
    for (int k = 0; k < static_cast<int>(parent_.size()); ++k) {
      auto [r, p] = find(k);
      if (!zero_[r]) classes[r].emplace(k, p ? *p : ScalarFrac::one());
    }
    std::vector<SparseVec<ScalarFrac>> basis;
    basis.reserve(classes.size());
    for (auto& [r, v] : classes) basis.push_back(std::move(v));
    return basis;
  }

private:
  static ScalarFrac div(const ScalarFrac& a, const ScalarFrac& b) {
    if (b.is_one()) return a;
    if (a.is_one()) return b.inverse();
    return a / b;
  }

  void attach(int child, int root, ScalarFrac w, bool dead) {
    parent_[child] = root;
    weight_[child] = std::move(w);
    zero_[root] = dead;
  }

  std::vector<int> parent_; // -1 at roots
  std::vector<ScalarFrac> weight_;
  std::vector<char> zero_;
  std::vector<int> path_;
};

// Every column holds at most one term, so balancing rows stay two-sparse.
bool sub_monomial(const std::vector<std::vector<SparseCol>>& ops) {
  for (const auto& table : ops)
    for (const auto& col : table)
      if (col.size() > 1) return false;
  return true;
}

// Transposed action table: rows[i] lists (k, c) with entry (i, c) in col k.
std::vector<std::vector<SparseCol>> transpose_ops(const std::vector<std::vector<SparseCol>>& ops,
                                                  int dim) {
  std::vector<std::vector<SparseCol>> out(ops.size());
  for (size_t a = 0; a < ops.size(); ++a) {
    out[a].assign(dim, {});
    for (int k = 0; k < static_cast<int>(ops[a].size()); ++k)
      for (const auto& [i, c] : ops[a][k]) out[a][i].push_back({k, c});
  }
  return out;
}

} // namespace

bool same_algebra(const GroupoidPtr& a, const GroupoidPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return same_groupoid(*a, *b);
}

std::string AlgebraElement::str() const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (const auto& [g, c] : coeffs) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")*d[" + (gpd ? gpd->arrow_label(g) : std::to_string(g)) + "]";
  }
  return out;
}

AlgebraElement algebra_zero(const GroupoidPtr& g) { return AlgebraElement{g, {}}; }

AlgebraElement delta_element(const GroupoidPtr& g, int arrow, const Scalar& c) {
  if (arrow < 0 || arrow >= g->num_arrows())
    fail("UnknownObject", "no arrow " + std::to_string(arrow));
  AlgebraElement e{g, {}};
  if (!c.is_zero()) e.coeffs.emplace(arrow, c);
  return e;
}

AlgebraElement unit_element(const GroupoidPtr& g) {
  AlgebraElement e{g, {}};
  for (int x = 0; x < g->num_objects; ++x) e.coeffs.emplace(g->unit[x], Scalar(1));
  return e;
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  if (!same_algebra(a.gpd, b.gpd)) fail("AlgebraMismatch", "sum over different groupoids");
  AlgebraElement out = a;
  for (const auto& [g, c] : b.coeffs) {
    auto it = out.coeffs.try_emplace(g, Scalar()).first;
    it->second += c;
    if (it->second.is_zero()) out.coeffs.erase(it);
  }
  return out;
}

AlgebraElement scale(const Scalar& c, const AlgebraElement& a) {
  AlgebraElement out{a.gpd, {}};
  if (c.is_zero()) return out;
  for (const auto& [g, v] : a.coeffs) {
    Scalar cv = c * v;
    if (!cv.is_zero()) out.coeffs.emplace(g, cv);
  }
  return out;
}

AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b) {
  if (!same_algebra(a.gpd, b.gpd)) fail("AlgebraMismatch", "product over different groupoids");
  AlgebraElement out{a.gpd, {}};
  for (const auto& [g, ca] : a.coeffs)
    for (const auto& [h, cb] : b.coeffs)
      if (auto gh = a.gpd->compose(g, h)) {
        auto it = out.coeffs.try_emplace(*gh, Scalar()).first;
        it->second += ca * cb;
        if (it->second.is_zero()) out.coeffs.erase(it);
      }
  return out;
}

AlgebraElement star(const AlgebraElement& a) {
  AlgebraElement out{a.gpd, {}};
  for (const auto& [g, c] : a.coeffs) out.coeffs.emplace(a.gpd->inv[g], c.conj());
  return out;
}

bool elem_eq(const AlgebraElement& a, const AlgebraElement& b) {
  return same_algebra(a.gpd, b.gpd) && a.coeffs == b.coeffs;
}

std::string Bimodule::label(int i) const {
  if (i >= 0 && i < static_cast<int>(basis_labels.size()) && !basis_labels[i].empty())
    return basis_labels[i];
  return "e" + std::to_string(i);
}

ValidationReport check_bimodule(const Bimodule& b) {
  ValidationReport rep;
  const int la = b.left_alg ? b.left_alg->num_arrows() : -1;
  const int ra = b.right_alg ? b.right_alg->num_arrows() : -1;
  if (!b.left_alg || !b.right_alg || b.dim < 0 ||
      static_cast<int>(b.act_left.size()) != la || static_cast<int>(b.act_right.size()) != ra) {
    add_violation(rep, "shape", "action tables do not match the algebras");
    return rep;
  }
  for (const auto* tab : {&b.act_left, &b.act_right})
    for (const auto& cols : *tab) {
      if (static_cast<int>(cols.size()) != b.dim) {
        add_violation(rep, "shape", "column count != dim");
        return rep;
      }
      for (const auto& col : cols)
        for (const auto& [row, c] : col)
          if (row < 0 || row >= b.dim) {
            add_violation(rep, "shape", "entry row out of range");
            return rep;
          }
    }

  const FiniteGroupoid& gl = *b.left_alg;
  const FiniteGroupoid& gr = *b.right_alg;

  // Unit sums act as the identity on every basis vector.
  for (int j = 0; j < b.dim; ++j) {
    Col lsum, rsum, ej{{j, Scalar(1)}};
    for (int x = 0; x < gl.num_objects; ++x) col_axpy(lsum, Scalar(1), b.act_left[gl.unit[x]][j]);
    for (int x = 0; x < gr.num_objects; ++x) col_axpy(rsum, Scalar(1), b.act_right[gr.unit[x]][j]);
    if (lsum != ej)
      if (!add_violation(rep, "left unit", b.label(j) + " -> " + col_str(b, lsum))) return rep;
    if (rsum != ej)
      if (!add_violation(rep, "right unit", b.label(j) + " -> " + col_str(b, rsum))) return rep;
  }

  for (int g = 0; g < gl.num_arrows(); ++g)
    for (int h = 0; h < gl.num_arrows(); ++h) {
      auto gh = gl.compose(g, h);
      for (int j = 0; j < b.dim; ++j) {
        Col lhs = apply_op(b.act_left[g], to_col(b.act_left[h][j]));
        Col rhs = gh ? to_col(b.act_left[*gh][j]) : Col{};
        if (lhs != rhs) {
          if (!add_violation(rep, "left action",
                             "d[" + gl.arrow_label(g) + "]*d[" + gl.arrow_label(h) + "] on " +
                                 b.label(j)))
            return rep;
          break;
        }
      }
    }

  for (int g = 0; g < gr.num_arrows(); ++g)
    for (int h = 0; h < gr.num_arrows(); ++h) {
      auto gh = gr.compose(g, h);
      for (int j = 0; j < b.dim; ++j) {
        Col lhs = apply_op(b.act_right[h], to_col(b.act_right[g][j]));
        Col rhs = gh ? to_col(b.act_right[*gh][j]) : Col{};
        if (lhs != rhs) {
          if (!add_violation(rep, "right action",
                             b.label(j) + " acted by d[" + gr.arrow_label(g) + "]*d[" +
                                 gr.arrow_label(h) + "]"))
            return rep;
          break;
        }
      }
    }

  for (int g = 0; g < gl.num_arrows(); ++g)
    for (int h = 0; h < gr.num_arrows(); ++h)
      for (int j = 0; j < b.dim; ++j) {
        Col lhs = apply_op(b.act_left[g], to_col(b.act_right[h][j]));
        Col rhs = apply_op(b.act_right[h], to_col(b.act_left[g][j]));
        if (lhs != rhs) {
          if (!add_violation(rep, "actions commute",
                             "g=" + gl.arrow_label(g) + " h=" + gr.arrow_label(h) + " on " +
                                 b.label(j)))
            return rep;
          break;
        }
      }

  return rep;
}

Bimodule bimodule_from_bibundle(const Bibundle& m) {
  ValidationReport rep = validate(m);
  if (!rep.valid()) fail("InvalidBibundle", rep.summary());

  Bimodule b;
  b.left_alg = m.left;
  b.right_alg = m.right;
  b.dim = m.carrier;
  b.act_left.assign(m.left->num_arrows(), std::vector<SparseCol>(m.carrier));
  b.act_right.assign(m.right->num_arrows(), std::vector<SparseCol>(m.carrier));
  for (int g = 0; g < m.left->num_arrows(); ++g)
    for (int p = 0; p < m.carrier; ++p)
      if (auto t = m.left_act(g, p)) b.act_left[g][p].push_back({*t, Scalar(1)});
  for (int h = 0; h < m.right->num_arrows(); ++h)
    for (int p = 0; p < m.carrier; ++p)
      if (auto t = m.right_act(p, h)) b.act_right[h][p].push_back({*t, Scalar(1)});
  for (int p = 0; p < m.carrier; ++p) b.basis_labels.push_back(m.label(p));
  return b;
}

Bimodule regular_bimodule(const GroupoidPtr& g) {
  Bimodule b;
  b.left_alg = b.right_alg = g;
  b.dim = g->num_arrows();
  b.act_left.assign(b.dim, std::vector<SparseCol>(b.dim));
  b.act_right.assign(b.dim, std::vector<SparseCol>(b.dim));
  for (int a = 0; a < b.dim; ++a)
    for (int m = 0; m < b.dim; ++m) {
      if (auto t = g->compose(a, m)) b.act_left[a][m].push_back({*t, Scalar(1)});
      if (auto t = g->compose(m, a)) b.act_right[a][m].push_back({*t, Scalar(1)});
    }
  for (int m = 0; m < b.dim; ++m) b.basis_labels.push_back("d[" + g->arrow_label(m) + "]");
  return b;
}

Bimodule external_tensor(const Bimodule& p, const Bimodule& q) {
  Bimodule b;
  b.left_alg = product_groupoid(p.left_alg, q.left_alg);
  b.right_alg = product_groupoid(p.right_alg, q.right_alg);
  b.dim = p.dim * q.dim;
  auto idx = [&](int i, int j) { return i * q.dim + j; };

  const int pla = p.left_alg->num_arrows(), qla = q.left_alg->num_arrows();
  const int pra = p.right_alg->num_arrows(), qra = q.right_alg->num_arrows();
  b.act_left.assign(pla * qla, std::vector<SparseCol>(b.dim));
  b.act_right.assign(pra * qra, std::vector<SparseCol>(b.dim));
  for (int g1 = 0; g1 < pla; ++g1)
    for (int g2 = 0; g2 < qla; ++g2) {
      auto& cols = b.act_left[g1 * qla + g2];
      for (int i = 0; i < p.dim; ++i)
        for (int j = 0; j < q.dim; ++j)
          for (const auto& [i2, c1] : p.act_left[g1][i])
            for (const auto& [j2, c2] : q.act_left[g2][j])
              cols[idx(i, j)].push_back({idx(i2, j2), c1 * c2});
    }
  for (int h1 = 0; h1 < pra; ++h1)
    for (int h2 = 0; h2 < qra; ++h2) {
      auto& cols = b.act_right[h1 * qra + h2];
      for (int i = 0; i < p.dim; ++i)
        for (int j = 0; j < q.dim; ++j)
          for (const auto& [i2, c1] : p.act_right[h1][i])
            for (const auto& [j2, c2] : q.act_right[h2][j])
              cols[idx(i, j)].push_back({idx(i2, j2), c1 * c2});
    }
  for (int i = 0; i < p.dim; ++i)
    for (int j = 0; j < q.dim; ++j) b.basis_labels.push_back(p.label(i) + "(x)" + q.label(j));
  return b;
}

Bimodule tensor_bimodules(const Bimodule& p, const Bimodule& q, const Budget& budget) {
  if (!same_algebra(p.right_alg, q.left_alg))
    fail("MiddleMismatch", "tensor over mismatched middle algebras (" +
                               std::to_string(p.right_alg ? p.right_alg->num_arrows() : -1) +
                               " vs " + std::to_string(q.left_alg ? q.left_alg->num_arrows() : -1) +
                               " arrows)");
  BudgetMeter meter(budget);
  const int D = p.dim * q.dim;
  auto idx = [&](int i, int j) { return i * q.dim + j; };

  // Row space of the relations p.b (x) q - p (x) b.q. Sub-monomial middle
  // actions keep every relation at two terms, which the union-find resolves
  // in near-linear time; denser actions fall back to echelon reduction.
  const FiniteGroupoid& mid = *p.right_alg;
  const bool two_sparse = sub_monomial(p.act_right) && sub_monomial(q.act_left);
  RatioDSU dsu(two_sparse ? D : 0);
  RowReducer<ScalarFrac> red;
  for (int b = 0; b < mid.num_arrows(); ++b)
    for (int i = 0; i < p.dim; ++i) {
      const SparseCol& pc = p.act_right[b][i];
      for (int j = 0; j < q.dim; ++j) {
        const SparseCol& qc = q.act_left[b][j];
        if (pc.empty() && qc.empty()) continue;
        if (two_sparse) {
          int ku = -1, kv = -1;
          const Scalar *cu = nullptr, *cv = nullptr;
          if (!pc.empty() && !pc[0].second.is_zero()) {
            ku = idx(pc[0].first, j);
            cu = &pc[0].second;
          }
          if (!qc.empty() && !qc[0].second.is_zero()) {
            kv = idx(i, qc[0].first);
            cv = &qc[0].second;
          }
          if (ku >= 0 && ku == kv) {
            if (*cu == *cv) continue; // the relation is trivially satisfied
            meter.spend("tensor relation");
            dsu.kill(ku);
            continue;
          }
          if (ku < 0 && kv < 0) continue;
          meter.spend("tensor relation");
          if (ku >= 0 && kv >= 0)
            dsu.relate(ku, *cu, kv, *cv);
          else
            dsu.kill(ku >= 0 ? ku : kv);
          continue;
        }
        SparseVec<ScalarFrac> row;
        for (const auto& [i2, c] : pc) {
          auto it = row.try_emplace(idx(i2, j), ScalarFrac()).first;
          it->second += ScalarFrac(c);
        }
        for (const auto& [j2, c] : qc) {
          auto it = row.try_emplace(idx(i, j2), ScalarFrac()).first;
          it->second -= ScalarFrac(c);
        }
        for (auto it = row.begin(); it != row.end();)
          it = it->second.is_zero() ? row.erase(it) : std::next(it);
        if (row.empty()) continue;
        meter.spend("tensor relation");
        red.insert(std::move(row));
      }
    }

  const std::vector<int> free = two_sparse ? dsu.free_columns() : red.free_columns(D);
  std::vector<int> dense(D, -1);
  for (int t = 0; t < static_cast<int>(free.size()); ++t) dense[free[t]] = t;

  Bimodule out;
  out.left_alg = p.left_alg;
  out.right_alg = q.right_alg;
  out.dim = static_cast<int>(free.size());
  for (int f : free) out.basis_labels.push_back(p.label(f / q.dim) + "(x)" + q.label(f % q.dim));

  // Residues of basis vectors, computed on demand.
  std::unordered_map<int, SparseVec<ScalarFrac>> proj;
  auto project = [&](int k) -> const SparseVec<ScalarFrac>& {
    auto it = proj.find(k);
    if (it == proj.end()) {
      if (two_sparse) {
        it = proj.emplace(k, dsu.residue(k)).first;
      } else {
        SparseVec<ScalarFrac> e;
        e.emplace(k, ScalarFrac(Scalar(1)));
        it = proj.emplace(k, red.reduce(std::move(e))).first;
      }
    }
    return it->second;
  };

  auto push_entries = [&](SparseCol& col, const SparseVec<ScalarFrac>& v, const Scalar& c) {
    for (const auto& [k, w] : v) {
      ScalarFrac entry = ScalarFrac(c) * w;
      if (entry.is_zero()) continue;
      auto s = entry.as_scalar();
      if (!s)
        fail("NotRepresentable",
             "induced action entry " + entry.str() + " is not a whole scalar");
      col.push_back({dense[k], *s});
    }
  };

  const int pla = p.left_alg->num_arrows(), qra = q.right_alg->num_arrows();
  out.act_left.assign(pla, std::vector<SparseCol>(out.dim));
  out.act_right.assign(qra, std::vector<SparseCol>(out.dim));
  for (int t = 0; t < out.dim; ++t) {
    const int i = free[t] / q.dim, j = free[t] % q.dim;
    for (int a = 0; a < pla; ++a)
      for (const auto& [i2, c] : p.act_left[a][i])
        push_entries(out.act_left[a][t], project(idx(i2, j)), c);
    for (int h = 0; h < qra; ++h)
      for (const auto& [j2, c] : q.act_right[h][j])
        push_entries(out.act_right[h][t], project(idx(i, j2)), c);
  }
  return out;
}


IntertwinerResult bimodule_iso(const Bimodule& p, const Bimodule& q, const Budget& budget) {
  IntertwinerResult res;
  if (!same_algebra(p.left_alg, q.left_alg) || !same_algebra(p.right_alg, q.right_alg)) {
    res.status = IntertwinerResult::Status::None;
    res.note = "bimodules live over different algebra pairs";
    return res;
  }
  if (p.dim != q.dim) {
    res.status = IntertwinerResult::Status::None;
    res.note = "dimension mismatch: " + std::to_string(p.dim) + " vs " + std::to_string(q.dim);
    return res;
  }
  if (p.dim == 0) {
    res.status = IntertwinerResult::Status::Found;
    res.note = "zero bimodules";
    return res;
  }

  BudgetMeter meter(budget);
  const int n = p.dim;
  const int D = n * n;
  auto u = [&](int i, int j) { return i * n + j; };

  // Intertwiner equations X P_a = Q_a X, unknowns X[i][j]. Each equation
  // couples the entries hit by one source column and one target row; with
  // sub-monomial actions on both sides that is two terms, and the whole
  // system resolves by union-find instead of echelon reduction.
  auto qlt = transpose_ops(q.act_left, n);
  auto qrt = transpose_ops(q.act_right, n);
  const bool two_sparse = sub_monomial(p.act_left) && sub_monomial(p.act_right) &&
                          sub_monomial(qlt) && sub_monomial(qrt);
  RatioDSU dsu(two_sparse ? D : 0);
  RowReducer<ScalarFrac> red;
  auto equations_for = [&](const std::vector<std::vector<SparseCol>>& pop,
                           const std::vector<std::vector<SparseCol>>& qt) {
    for (size_t a = 0; a < pop.size(); ++a)
      for (int i = 0; i < n; ++i) {
        const SparseCol& qc = qt[a][i];
        for (int j = 0; j < n; ++j) {
          const SparseCol& pc = pop[a][j];
          if (pc.empty() && qc.empty()) continue;
          if (two_sparse) {
            int ku = -1, kv = -1;
            const Scalar *cu = nullptr, *cv = nullptr;
            if (!pc.empty() && !pc[0].second.is_zero()) {
              ku = u(i, pc[0].first);
              cu = &pc[0].second;
            }
            if (!qc.empty() && !qc[0].second.is_zero()) {
              kv = u(qc[0].first, j);
              cv = &qc[0].second;
            }
            if (ku >= 0 && ku == kv) {
              if (*cu == *cv) continue; // the equation is trivially satisfied
              meter.spend("intertwiner equation");
              dsu.kill(ku);
              continue;
            }
            if (ku < 0 && kv < 0) continue;
            meter.spend("intertwiner equation");
            if (ku >= 0 && kv >= 0)
              dsu.relate(ku, *cu, kv, *cv);
            else
              dsu.kill(ku >= 0 ? ku : kv);
            continue;
          }
          SparseVec<ScalarFrac> row;
          for (const auto& [k, c] : pc) {
            auto it = row.try_emplace(u(i, k), ScalarFrac()).first;
            it->second += ScalarFrac(c);
          }
          for (const auto& [k, c] : qc) {
            auto it = row.try_emplace(u(k, j), ScalarFrac()).first;
            it->second -= ScalarFrac(c);
          }
          for (auto it = row.begin(); it != row.end();)
            it = it->second.is_zero() ? row.erase(it) : std::next(it);
          if (row.empty()) continue;
          meter.spend("intertwiner equation");
          red.insert(std::move(row));
        }
      }
  };
  equations_for(p.act_left, qlt);
  equations_for(p.act_right, qrt);

  std::vector<SparseVec<ScalarFrac>> basis = two_sparse ? dsu.null_space() : red.null_space(D);
  res.hom_dim = static_cast<int>(basis.size());
  if (basis.empty()) {
    res.status = IntertwinerResult::Status::None;
    res.note = "the intertwiner space is zero";
    return res;
  }

  // An invertibility certificate: a monomial permutation matrix is always a
  // unit; otherwise full rank over scalar fractions (exact for the generic
  // reading of the phase ring).
  auto try_candidate = [&](const SparseVec<ScalarFrac>& cand) -> bool {
    meter.spend("iso candidate");
    int nnz = 0;
    for (const auto& [k, v] : cand)
      if (!v.is_zero()) ++nnz;
    if (nnz < n) return false; // invertibility needs at least n nonzero entries

    bool monomial_perm = true;
    std::vector<int> row_hits(n, 0), col_hits(n, 0);
    for (const auto& [k, v] : cand) {
      if (v.is_zero()) continue;
      auto s = v.as_scalar();
      if (!s || !s->is_monomial()) monomial_perm = false;
      ++row_hits[k / n];
      ++col_hits[k % n];
    }
    if (monomial_perm)
      for (int i = 0; i < n; ++i)
        if (row_hits[i] != 1 || col_hits[i] != 1) monomial_perm = false;

    if (!monomial_perm) {
      RowReducer<ScalarFrac> rk;
      auto it = cand.begin();
      for (int i = 0; i < n; ++i) {
        SparseVec<ScalarFrac> row;
        for (; it != cand.end() && it->first < (i + 1) * n; ++it)
          if (!it->second.is_zero()) row.emplace(it->first - i * n, it->second);
        rk.insert(std::move(row));
      }
      if (rk.rank() != n) return false;
    }

    // Clear monomial denominators so the matrix lands in whole scalars.
    std::set<Scalar> dens;
    for (const auto& [k, v] : cand)
      if (!v.is_zero() && !v.den().is_one()) dens.insert(v.den());
    Scalar mult(1);
    for (const Scalar& d : dens) {
      if (!d.is_monomial()) return false;
      mult *= d;
    }
    res.matrix.assign(n, std::vector<Scalar>(n));
    for (const auto& [k, v] : cand) {
      if (v.is_zero()) continue;
      auto s = (v * ScalarFrac(mult)).as_scalar();
      if (!s) return false;
      res.matrix[k / n][k % n] = *s;
    }
    return true;
  };

  auto expand = [&](const std::vector<Int>& coeffs) {
    SparseVec<ScalarFrac> cand;
    for (size_t b = 0; b < basis.size(); ++b) {
      if (coeffs[b] == 0) continue;
      ScalarFrac c{Scalar(Rat(coeffs[b]))};
      for (const auto& [k, v] : basis[b]) {
        auto it = cand.try_emplace(k, ScalarFrac()).first;
        it->second += c * v;
      }
    }
    return cand;
  };

  const int nb = static_cast<int>(basis.size());
  std::vector<Int> coeffs(nb, 0);
  for (int b = 0; b < nb; ++b) {
    std::fill(coeffs.begin(), coeffs.end(), Int(0));
    coeffs[b] = 1;
    if (try_candidate(expand(coeffs))) {
      res.status = IntertwinerResult::Status::Found;
      return res;
    }
  }
  std::fill(coeffs.begin(), coeffs.end(), Int(1));
  if (try_candidate(expand(coeffs))) {
    res.status = IntertwinerResult::Status::Found;
    return res;
  }

  std::mt19937_64 rng(0x5eedc0deULL ^ (static_cast<unsigned long long>(D) << 1));
  for (int t = 0; t < 64; ++t) {
    for (int b = 0; b < nb; ++b) coeffs[b] = Int(static_cast<long long>(rng() % 7) - 3);
    if (try_candidate(expand(coeffs))) {
      res.status = IntertwinerResult::Status::Found;
      return res;
    }
  }

  if (nb <= 3) {
    const int lo = -2, hi = 2, span = hi - lo + 1;
    int total = 1;
    for (int b = 0; b < nb; ++b) total *= span;
    for (int mask = 0; mask < total; ++mask) {
      int m = mask;
      for (int b = 0; b < nb; ++b) {
        coeffs[b] = Int(lo + m % span);
        m /= span;
      }
      if (try_candidate(expand(coeffs))) {
        res.status = IntertwinerResult::Status::Found;
        return res;
      }
    }
    res.status = IntertwinerResult::Status::None;
    res.note = "no invertible intertwiner in the exhausted coefficient range";
    return res;
  }

  res.status = IntertwinerResult::Status::Undecided;
  res.note = "candidate search exhausted over a hom space of dimension " + std::to_string(nb);
  res.matrix.clear();
  return res;
}

HopfishData hopfish_from_stacky_group(const GroupoidPtr& g, const Bibundle& em, const Bibundle& ee,
                                      const Bibundle& einv, const Budget& budget) {
  StackyReport rep = stacky_group_check(g, em, ee, einv, budget);
  if (!rep.all_pass()) fail("AxiomsFailed", rep.summary());

  HopfishData h;
  h.algebra = g;
  h.delta = bimodule_from_bibundle(em);
  h.epsilon = bimodule_from_bibundle(ee);
  h.antipode = bimodule_from_bibundle(einv);
  // Twist the right action through star: m .' d[h] = m . star(d[h]).
  auto orig = h.antipode.act_right;
  for (int a = 0; a < g->num_arrows(); ++a) {
    auto cols = orig[g->inv[a]];
    for (auto& col : cols)
      for (auto& [row, c] : col) c = c.conj();
    h.antipode.act_right[a] = std::move(cols);
  }
  return h;
}

bool check_coassoc(const HopfishData& h, const Budget& budget) {
  Bimodule reg = regular_bimodule(h.algebra);
  Bimodule lhs = tensor_bimodules(external_tensor(h.delta, reg), h.delta, budget);
  Bimodule rhs = tensor_bimodules(external_tensor(reg, h.delta), h.delta, budget);
  return bimodule_iso(lhs, rhs, budget).status == IntertwinerResult::Status::Found;
}

bool check_counit(const HopfishData& h, const Budget& budget) {
  Bimodule reg = regular_bimodule(h.algebra);
  Bimodule lhs = tensor_bimodules(external_tensor(h.epsilon, reg), h.delta, budget);
  Bimodule rhs = tensor_bimodules(external_tensor(reg, h.epsilon), h.delta, budget);
  return bimodule_iso(lhs, reg, budget).status == IntertwinerResult::Status::Found &&
         bimodule_iso(rhs, reg, budget).status == IntertwinerResult::Status::Found;
}

Bimodule module_tensor(const Bimodule& t1, const Bimodule& t2, const HopfishData& h,
                       const Budget& budget) {
  if (!same_algebra(t1.right_alg, h.algebra) || !same_algebra(t2.right_alg, h.algebra))
    fail("AlgebraMismatch", "module tensor needs right modules over the hopfish algebra");
  return tensor_bimodules(external_tensor(t1, t2), h.delta, budget);
}

Bimodule point_module(const GroupoidPtr& trivial_g, int x) {
  if (x < 0 || x >= trivial_g->num_objects)
    fail("UnknownObject", "no object " + std::to_string(x));
  if (trivial_g->num_arrows() != trivial_g->num_objects)
    fail("InvalidGroupoid", "point modules need a groupoid with identity arrows only");
  Bimodule b;
  b.left_alg = terminal_groupoid();
  b.right_alg = trivial_g;
  b.dim = 1;
  b.act_left.assign(1, {SparseCol{{0, Scalar(1)}}});
  b.act_right.assign(trivial_g->num_arrows(), {SparseCol{}});
  b.act_right[x][0].push_back({0, Scalar(1)});
  b.basis_labels = {"T@" + trivial_g->object_label(x)};
  return b;
}

Bimodule character_module(const GroupoidPtr& one_object_g, int p) {
  const int n = one_object_g->num_arrows();
  if (one_object_g->num_objects != 1 || n <= 0)
    fail("InvalidGroupoid", "character modules need a one-object groupoid");
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      if (one_object_g->compose(a, c) != std::optional<int>((a + c) % n))
        fail("InvalidGroup", "arrow ids must compose cyclically for a character module");

  Bimodule b;
  b.left_alg = terminal_groupoid();
  b.right_alg = one_object_g;
  b.dim = 1;
  b.act_left.assign(1, {SparseCol{{0, Scalar(1)}}});
  b.act_right.assign(n, {SparseCol{}});
  for (int a = 0; a < n; ++a)
    b.act_right[a][0].push_back({0, Scalar::unit_phase(Angle::two_pi(Rat(p * a, n)))});
  b.basis_labels = {"chi_" + std::to_string(((p % n) + n) % n)};
  return b;
}

} // namespace grouplike
