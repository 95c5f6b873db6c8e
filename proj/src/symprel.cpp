#include "grouplike/symprel.hpp"

#include <random>

#include "grouplike/errors.hpp"
#include "grouplike/linalg.hpp"

namespace grouplike {

namespace {

using Vec = std::vector<Rat>;
using Mat = std::vector<std::vector<Rat>>;

Rat pair_with(const Mat& form, const Vec& v, const Vec& w) {
  Rat out(0);
  for (size_t i = 0; i < form.size(); ++i) {
    if (v[i] == 0) continue;
    Rat row(0);
    for (size_t j = 0; j < form.size(); ++j)
      if (w[j] != 0) row += form[i][j] * w[j];
    out += v[i] * row;
  }
  return out;
}

// omega_src (+) (-omega_dst) evaluated on vectors of src.dim + dst.dim.
Rat rel_pairing(const LinRelation& r, const Vec& v, const Vec& w) {
  const int sd = r.src.dim;
  Rat out(0);
  for (int i = 0; i < sd; ++i) {
    if (v[i] == 0) continue;
    Rat row(0);
    for (int j = 0; j < sd; ++j)
      if (w[j] != 0) row += r.src.omega[i][j] * w[j];
    out += v[i] * row;
  }
  for (int i = 0; i < r.dst.dim; ++i) {
    if (v[sd + i] == 0) continue;
    Rat row(0);
    for (int j = 0; j < r.dst.dim; ++j)
      if (w[sd + j] != 0) row += r.dst.omega[i][j] * w[j + sd];
    out -= v[sd + i] * row;
  }
  return out;
}

SparseVec<Rat> to_sparse(const Vec& v) {
  SparseVec<Rat> out;
  for (int j = 0; j < static_cast<int>(v.size()); ++j)
    if (v[j] != 0) out.emplace(j, v[j]);
  return out;
}

Mat echelon_rows(const std::vector<Vec>& span, int width) {
  RowReducer<Rat> red;
  for (const auto& row : span) red.insert(to_sparse(row));
  Mat out;
  for (const auto& [piv, row] : red.rows()) {
    Vec dense(width, Rat(0));
    for (const auto& [j, v] : row) dense[j] = v;
    out.push_back(std::move(dense));
  }
  return out;
}

} // namespace

ValidationReport validate(const SympSpace& s) {
  ValidationReport rep;
  if (s.dim < 0 || static_cast<int>(s.omega.size()) != s.dim) {
    rep.violations.push_back({"shape", "omega is not dim x dim"});
    return rep;
  }
  for (const auto& row : s.omega)
    if (static_cast<int>(row.size()) != s.dim) {
      rep.violations.push_back({"shape", "omega is not dim x dim"});
      return rep;
    }
  for (int i = 0; i < s.dim; ++i)
    for (int j = 0; j < s.dim; ++j)
      if (s.omega[i][j] != -s.omega[j][i]) {
        rep.violations.push_back(
            {"skew", "omega[" + std::to_string(i) + "][" + std::to_string(j) + "]"});
        return rep;
      }
  if (matrix_rank(s.omega) != s.dim)
    rep.violations.push_back({"nondegenerate", "rank " + std::to_string(matrix_rank(s.omega)) +
                                                   " < dim " + std::to_string(s.dim)});
  return rep;
}

SympSpace standard_symp(int dim) {
  if (dim < 0 || dim % 2 != 0) fail("ShapeMismatch", "symplectic dimension must be even");
  SympSpace s;
  s.dim = dim;
  s.omega.assign(dim, Vec(dim, Rat(0)));
  for (int i = 0; i < dim / 2; ++i) {
    s.omega[i][dim / 2 + i] = Rat(1);
    s.omega[dim / 2 + i][i] = Rat(-1);
  }
  return s;
}

SympSpace opposite_space(const SympSpace& s) {
  SympSpace o = s;
  for (auto& row : o.omega)
    for (auto& v : row) v = -v;
  return o;
}

SympSpace direct_sum(const SympSpace& a, const SympSpace& b) {
  SympSpace s;
  s.dim = a.dim + b.dim;
  s.omega.assign(s.dim, Vec(s.dim, Rat(0)));
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) s.omega[i][j] = a.omega[i][j];
  for (int i = 0; i < b.dim; ++i)
    for (int j = 0; j < b.dim; ++j) s.omega[a.dim + i][a.dim + j] = b.omega[i][j];
  return s;
}

bool space_eq(const SympSpace& a, const SympSpace& b) {
  return a.dim == b.dim && a.omega == b.omega;
}

LinRelation make_relation(SympSpace src, SympSpace dst, std::vector<Vec> span) {
  ValidationReport rs = validate(src), rd = validate(dst);
  if (!rs.valid()) fail("ShapeMismatch", "source space: " + rs.summary());
  if (!rd.valid()) fail("ShapeMismatch", "target space: " + rd.summary());
  const int width = src.dim + dst.dim;
  for (const auto& row : span)
    if (static_cast<int>(row.size()) != width)
      fail("DimensionMismatch", "relation vector of length " + std::to_string(row.size()) +
                                    ", expected " + std::to_string(width));
  LinRelation r{std::move(src), std::move(dst), {}};
  r.basis = echelon_rows(span, width);
  return r;
}

bool rel_eq(const LinRelation& a, const LinRelation& b) {
  return space_eq(a.src, b.src) && space_eq(a.dst, b.dst) && a.basis == b.basis;
}

bool is_isotropic(const LinRelation& r) {
  for (size_t i = 0; i < r.basis.size(); ++i)
    for (size_t j = i; j < r.basis.size(); ++j)
      if (rel_pairing(r, r.basis[i], r.basis[j]) != 0) return false;
  return true;
}

bool is_coisotropic(const LinRelation& r) {
  const int n = r.src.dim + r.dst.dim;
  // r^perp as the kernel of v -> pairing(basis_i, v).
  RowReducer<Rat> system;
  for (const auto& b : r.basis) {
    Vec row(n, Rat(0));
    for (int k = 0; k < n; ++k) {
      Vec ek(n, Rat(0));
      ek[k] = Rat(1);
      row[k] = rel_pairing(r, b, ek);
    }
    system.insert(to_sparse(row));
  }
  RowReducer<Rat> span;
  for (const auto& b : r.basis) span.insert(to_sparse(b));
  for (const auto& v : system.null_space(n))
    if (!span.reduce(v).empty()) return false;
  return true;
}

bool is_lagrangian(const LinRelation& r) {
  return is_isotropic(r) &&
         2 * static_cast<int>(r.basis.size()) == r.src.dim + r.dst.dim;
}

LinRelation identity_relation(const SympSpace& s) {
  std::vector<Vec> rows;
  for (int i = 0; i < s.dim; ++i) {
    Vec row(2 * s.dim, Rat(0));
    row[i] = row[s.dim + i] = Rat(1);
    rows.push_back(std::move(row));
  }
  return make_relation(s, s, std::move(rows));
}

LinRelation graph_of_linear_map(const SympSpace& src, const SympSpace& dst, const Mat& f) {
  if (static_cast<int>(f.size()) != dst.dim)
    fail("DimensionMismatch", "map has " + std::to_string(f.size()) + " rows, target dim " +
                                  std::to_string(dst.dim));
  for (const auto& row : f)
    if (static_cast<int>(row.size()) != src.dim)
      fail("DimensionMismatch", "map row of length " + std::to_string(row.size()) +
                                    ", source dim " + std::to_string(src.dim));
  std::vector<Vec> rows;
  for (int j = 0; j < src.dim; ++j) {
    Vec row(src.dim + dst.dim, Rat(0));
    row[j] = Rat(1);
    for (int i = 0; i < dst.dim; ++i) row[src.dim + i] = f[i][j];
    rows.push_back(std::move(row));
  }
  return make_relation(src, dst, std::move(rows));
}

LinRelation compose_rel(const LinRelation& f, const LinRelation& g) {
  if (!space_eq(f.dst, g.src))
    fail("MiddleMismatch", "relation composition over different middle spaces (dims " +
                               std::to_string(f.dst.dim) + " vs " + std::to_string(g.src.dim) + ")");
  const int nf = static_cast<int>(f.basis.size()), ng = static_cast<int>(g.basis.size());
  const int mid = f.dst.dim;

  // Coefficients (x, y) with the middle components of sum x_i f_i and
  // sum y_j g_j agreeing.
  RowReducer<Rat> system;
  for (int k = 0; k < mid; ++k) {
    Vec row(nf + ng, Rat(0));
    for (int i = 0; i < nf; ++i) row[i] = f.basis[i][f.src.dim + k];
    for (int j = 0; j < ng; ++j) row[nf + j] = -g.basis[j][k];
    system.insert(to_sparse(row));
  }
  std::vector<Vec> rows;
  for (const auto& sol : system.null_space(nf + ng)) {
    Vec row(f.src.dim + g.dst.dim, Rat(0));
    for (const auto& [idx, c] : sol) {
      if (idx < nf)
        for (int l = 0; l < f.src.dim; ++l) row[l] += c * f.basis[idx][l];
      else
        for (int l = 0; l < g.dst.dim; ++l)
          row[f.src.dim + l] += c * g.basis[idx - nf][g.src.dim + l];
    }
    rows.push_back(std::move(row));
  }
  return make_relation(f.src, g.dst, std::move(rows));
}

LinRelation transpose_rel(const LinRelation& r) {
  std::vector<Vec> rows;
  for (const auto& b : r.basis) {
    Vec row(r.dst.dim + r.src.dim, Rat(0));
    for (int i = 0; i < r.dst.dim; ++i) row[i] = b[r.src.dim + i];
    for (int i = 0; i < r.src.dim; ++i) row[r.dst.dim + i] = b[i];
    rows.push_back(std::move(row));
  }
  return make_relation(r.dst, r.src, std::move(rows));
}

LinRelation rel_tensor(const LinRelation& r1, const LinRelation& r2) {
  SympSpace src = direct_sum(r1.src, r2.src), dst = direct_sum(r1.dst, r2.dst);
  std::vector<Vec> rows;
  for (const auto& b : r1.basis) {
    Vec row(src.dim + dst.dim, Rat(0));
    for (int i = 0; i < r1.src.dim; ++i) row[i] = b[i];
    for (int i = 0; i < r1.dst.dim; ++i) row[src.dim + i] = b[r1.src.dim + i];
    rows.push_back(std::move(row));
  }
  for (const auto& b : r2.basis) {
    Vec row(src.dim + dst.dim, Rat(0));
    for (int i = 0; i < r2.src.dim; ++i) row[r1.src.dim + i] = b[i];
    for (int i = 0; i < r2.dst.dim; ++i) row[src.dim + r1.dst.dim + i] = b[r2.src.dim + i];
    rows.push_back(std::move(row));
  }
  return make_relation(std::move(src), std::move(dst), std::move(rows));
}

bool ZigZagReport::all_pass() const {
  if (rows.empty()) return false;
  for (const auto& r : rows)
    if (!r.passed) return false;
  return true;
}

std::string ZigZagReport::summary() const {
  std::string out;
  for (const auto& r : rows) {
    out += r.name;
    out += r.passed ? ": pass" : ": FAIL (" + r.witness + ")";
    out += "\n";
  }
  return out;
}

ZigZagReport check_zigzag(const SympSpace& s) {
  ZigZagReport rep;
  ValidationReport vs = validate(s);
  if (!vs.valid()) {
    rep.rows.push_back({"space valid", false, vs.summary()});
    return rep;
  }
  rep.rows.push_back({"space valid", true, ""});

  const SympSpace one{0, {}};
  const SympSpace sop = opposite_space(s);

  std::vector<Vec> diag;
  for (int i = 0; i < s.dim; ++i) {
    Vec row(2 * s.dim, Rat(0));
    row[i] = row[s.dim + i] = Rat(1);
    diag.push_back(std::move(row));
  }
  LinRelation ev = make_relation(direct_sum(s, sop), one, diag);
  LinRelation coev = make_relation(one, direct_sum(sop, s), diag);

  rep.rows.push_back({"ev lagrangian", is_lagrangian(ev), is_lagrangian(ev) ? "" : "diagonal is not lagrangian for this form"});
  rep.rows.push_back({"coev lagrangian", is_lagrangian(coev), is_lagrangian(coev) ? "" : "diagonal is not lagrangian for this form"});

  // S -> S (x) S^op (x) S -> S.
  LinRelation left = compose_rel(rel_tensor(identity_relation(s), coev),
                                 rel_tensor(ev, identity_relation(s)));
  bool snake_s = rel_eq(left, identity_relation(s));
  rep.rows.push_back({"snake for S", snake_s,
                      snake_s ? "" : "composite has dimension " + std::to_string(left.basis.size())});

  // S^op -> S^op (x) S (x) S^op -> S^op.
  LinRelation right = compose_rel(rel_tensor(coev, identity_relation(sop)),
                                  rel_tensor(identity_relation(sop), ev));
  bool snake_d = rel_eq(right, identity_relation(sop));
  rep.rows.push_back({"snake for the dual", snake_d,
                      snake_d ? "" : "composite has dimension " + std::to_string(right.basis.size())});
  return rep;
}

std::vector<std::vector<Rat>> darboux_basis(const SympSpace& s) {
  ValidationReport vs = validate(s);
  if (!vs.valid()) fail("ShapeMismatch", vs.summary());

  std::vector<Vec> pool;
  for (int i = 0; i < s.dim; ++i) {
    Vec e(s.dim, Rat(0));
    e[i] = Rat(1);
    pool.push_back(std::move(e));
  }
  std::vector<Vec> us, vs_;
  RowReducer<Rat> chosen;
  while (true) {
    // Next pool vector independent of the chosen ones.
    Vec u;
    for (auto& c : pool)
      if (!chosen.reduce(to_sparse(c)).empty()) {
        u = c;
        break;
      }
    if (u.empty()) break;
    Vec w;
    for (auto& c : pool) {
      if (pair_with(s.omega, u, c) == 0) continue;
      if (chosen.reduce(to_sparse(c)).empty()) continue;
      w = c;
      break;
    }
    if (w.empty()) fail("ShapeMismatch", "form degenerate on the residual subspace");
    Rat scale = pair_with(s.omega, u, w);
    for (auto& x : w) x /= scale;
    // Project the pool into the symplectic complement of span(u, w).
    for (auto& c : pool) {
      Rat cu = pair_with(s.omega, c, u), cw = pair_with(s.omega, c, w);
      for (int k = 0; k < s.dim; ++k) c[k] = c[k] - cw * u[k] + cu * w[k];
    }
    us.push_back(u);
    vs_.push_back(w);
    chosen.insert(to_sparse(u));
    chosen.insert(to_sparse(w));
  }

  std::vector<Vec> cols;
  cols.insert(cols.end(), us.begin(), us.end());
  cols.insert(cols.end(), vs_.begin(), vs_.end());
  return cols;
}

SympSpace random_symp(int dim, std::uint64_t seed) {
  if (dim < 0 || dim % 2 != 0) fail("ShapeMismatch", "symplectic dimension must be even");
  std::mt19937_64 rng(seed ^ 0x53796d70ULL);
  Mat p(dim, Vec(dim));
  do {
    for (auto& row : p)
      for (auto& v : row) v = Rat(static_cast<long long>(rng() % 7) - 3);
  } while (matrix_rank(p) != dim);

  const Mat j = standard_symp(dim).omega;
  SympSpace s;
  s.dim = dim;
  s.omega.assign(dim, Vec(dim, Rat(0)));
  // p^T J p
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      Rat acc(0);
      for (int i = 0; i < dim; ++i) {
        if (p[i][a] == 0) continue;
        for (int k = 0; k < dim; ++k)
          if (j[i][k] != 0 && p[k][b] != 0) acc += p[i][a] * j[i][k] * p[k][b];
      }
      s.omega[a][b] = acc;
    }
  return s;
}

LinRelation random_lagrangian_relation(const SympSpace& a, const SympSpace& b, std::uint64_t seed) {
  const SympSpace w = direct_sum(a, opposite_space(b));
  if (w.dim % 2 != 0) fail("ShapeMismatch", "total dimension must be even");
  const int n = w.dim / 2;
  const std::vector<Vec> d = darboux_basis(w);

  std::mt19937_64 rng(seed ^ 0x4c616772ULL);
  Mat st(n, Vec(n, Rat(0))), tt(n, Vec(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      st[i][j] = st[j][i] = Rat(static_cast<long long>(rng() % 5) - 2);
      tt[i][j] = tt[j][i] = Rat(static_cast<long long>(rng() % 5) - 2);
    }

  // Columns of [[I, S],[0, I]] [[I, 0],[T, I]] restricted to the u-block:
  // e_j + S T e_j in the u part, T e_j in the v part.
  std::vector<Vec> rows;
  for (int j = 0; j < n; ++j) {
    Vec coeff_u(n, Rat(0)), coeff_v(n, Rat(0));
    coeff_u[j] = Rat(1);
    for (int i = 0; i < n; ++i) coeff_v[i] = tt[i][j];
    for (int i = 0; i < n; ++i) {
      Rat acc(0);
      for (int k = 0; k < n; ++k) acc += st[i][k] * tt[k][j];
      coeff_u[i] += acc;
    }
    Vec row(w.dim, Rat(0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < w.dim; ++k) row[k] += coeff_u[i] * d[i][k] + coeff_v[i] * d[n + i][k];
    rows.push_back(std::move(row));
  }
  return make_relation(a, b, std::move(rows));
}

} // namespace grouplike
