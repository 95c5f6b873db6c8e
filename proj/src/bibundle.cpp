#include "grouplike/bibundle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "grouplike/errors.hpp"

namespace grouplike {

namespace {

constexpr size_t kMaxViolations = 32;

void add_violation(ValidationReport& rep, const std::string& axiom, const std::string& witness) {
  if (rep.violations.size() < kMaxViolations) rep.violations.push_back({axiom, witness});
}

} // namespace

std::string Bibundle::label(int m) const {
  if (m >= 0 && m < static_cast<int>(labels.size()) && !labels[m].empty()) return labels[m];
  return std::to_string(m);
}

ValidationReport validate(const Bibundle& b) {
  ValidationReport rep;
  const auto& G = *b.left;
  const auto& H = *b.right;
  if (static_cast<int>(b.lm.size()) != b.carrier || static_cast<int>(b.rm.size()) != b.carrier) {
    add_violation(rep, "shape", "moment maps must cover the carrier");
    return rep;
  }
  for (int m = 0; m < b.carrier; ++m)
    if (b.lm[m] < 0 || b.lm[m] >= G.num_objects || b.rm[m] < 0 || b.rm[m] >= H.num_objects)
      add_violation(rep, "range", "moments of " + b.label(m));
  if (!rep.valid()) return rep;

  // Left action domain: defined exactly when r(g) = lm(m).
  uint64_t expected_l = 0, expected_r = 0;
  for (int m = 0; m < b.carrier; ++m) {
    expected_l += G.arrows_by_r[b.lm[m]].size();
    expected_r += H.arrows_by_l[b.rm[m]].size();
  }
  if (expected_l != b.act_l.size())
    add_violation(rep, "left-domain",
                  "act_l has " + std::to_string(b.act_l.size()) + " entries, expected " +
                      std::to_string(expected_l));
  if (expected_r != b.act_r.size())
    add_violation(rep, "right-domain",
                  "act_r has " + std::to_string(b.act_r.size()) + " entries, expected " +
                      std::to_string(expected_r));

  for (const auto& [key, gm] : b.act_l) {
    int g = static_cast<int>(key >> 32), m = static_cast<int>(key & 0xffffffffu);
    if (g < 0 || g >= G.num_arrows() || m < 0 || m >= b.carrier || gm < 0 || gm >= b.carrier) {
      add_violation(rep, "range", "act_l entry");
      continue;
    }
    if (G.r[g] != b.lm[m])
      add_violation(rep, "left-domain", G.arrow_label(g) + " . " + b.label(m));
    else if (b.lm[gm] != G.l[g] || b.rm[gm] != b.rm[m])
      add_violation(rep, "left-moments", G.arrow_label(g) + " . " + b.label(m));
  }
  for (const auto& [key, mh] : b.act_r) {
    int m = static_cast<int>(key >> 32), h = static_cast<int>(key & 0xffffffffu);
    if (h < 0 || h >= H.num_arrows() || m < 0 || m >= b.carrier || mh < 0 || mh >= b.carrier) {
      add_violation(rep, "range", "act_r entry");
      continue;
    }
    if (H.l[h] != b.rm[m])
      add_violation(rep, "right-domain", b.label(m) + " . " + H.arrow_label(h));
    else if (b.rm[mh] != H.r[h] || b.lm[mh] != b.lm[m])
      add_violation(rep, "right-moments", b.label(m) + " . " + H.arrow_label(h));
  }
  if (!rep.valid()) return rep;

  for (int m = 0; m < b.carrier; ++m) {
    auto um = b.left_act(G.unit[b.lm[m]], m);
    if (!um || *um != m) add_violation(rep, "left-unit", b.label(m));
    auto mu = b.right_act(m, H.unit[b.rm[m]]);
    if (!mu || *mu != m) add_violation(rep, "right-unit", b.label(m));
  }

  // (gg').m = g.(g'.m), m.(hh') = (m.h).h', (g.m).h = g.(m.h).
  for (const auto& [key, gm] : b.act_l) {
    int g2 = static_cast<int>(key >> 32), m = static_cast<int>(key & 0xffffffffu);
    for (int g1 : G.arrows_by_r[G.l[g2]]) {
      auto g12 = G.compose(g1, g2);
      auto lhs = g12 ? b.left_act(*g12, m) : std::nullopt;
      auto rhs = b.left_act(g1, gm);
      if (!g12 || !lhs || !rhs || *lhs != *rhs) {
        add_violation(rep, "left-associativity",
                      G.arrow_label(g1) + "," + G.arrow_label(g2) + "," + b.label(m));
        if (rep.violations.size() >= kMaxViolations) return rep;
      }
    }
    for (int h : H.arrows_by_l[b.rm[m]]) {
      auto lhs = b.right_act(gm, h);
      auto mh = b.right_act(m, h);
      auto rhs = mh ? b.left_act(g2, *mh) : std::nullopt;
      if (!lhs || !rhs || *lhs != *rhs) {
        add_violation(rep, "commuting-actions",
                      G.arrow_label(g2) + "," + b.label(m) + "," + H.arrow_label(h));
        if (rep.violations.size() >= kMaxViolations) return rep;
      }
    }
  }
  for (const auto& [key, mh] : b.act_r) {
    int m = static_cast<int>(key >> 32), h1 = static_cast<int>(key & 0xffffffffu);
    for (int h2 : H.arrows_by_l[H.r[h1]]) {
      auto h12 = H.compose(h1, h2);
      auto lhs = h12 ? b.right_act(m, *h12) : std::nullopt;
      auto rhs = b.right_act(mh, h2);
      if (!h12 || !lhs || !rhs || *lhs != *rhs) {
        add_violation(rep, "right-associativity",
                      b.label(m) + "," + H.arrow_label(h1) + "," + H.arrow_label(h2));
        if (rep.violations.size() >= kMaxViolations) return rep;
      }
    }
  }
  return rep;
}

PrincipalityResult is_right_principal(const Bibundle& b) {
  const auto& G = *b.left;
  const auto& H = *b.right;
  std::vector<std::vector<int>> fiber(G.num_objects);
  for (int m = 0; m < b.carrier; ++m) fiber[b.lm[m]].push_back(m);
  for (int x = 0; x < G.num_objects; ++x)
    if (fiber[x].empty())
      return {false, "object " + G.object_label(x) + " is not in the image of the left moment"};
  for (int x = 0; x < G.num_objects; ++x)
    for (int m : fiber[x])
      for (int m2 : fiber[x]) {
        int count = 0;
        for (int h : H.arrows_by_l[b.rm[m]]) {
          auto mh = b.right_act(m, h);
          if (mh && *mh == m2) ++count;
        }
        if (count != 1)
          return {false, std::to_string(count) + " arrows carry " + b.label(m) + " to " +
                             b.label(m2) + " inside the fiber over " + G.object_label(x)};
      }
  return {true, ""};
}

PrincipalityResult is_left_principal(const Bibundle& b) {
  const auto& G = *b.left;
  const auto& H = *b.right;
  std::vector<std::vector<int>> fiber(H.num_objects);
  for (int m = 0; m < b.carrier; ++m) fiber[b.rm[m]].push_back(m);
  for (int y = 0; y < H.num_objects; ++y)
    if (fiber[y].empty())
      return {false, "object " + H.object_label(y) + " is not in the image of the right moment"};
  for (int y = 0; y < H.num_objects; ++y)
    for (int m : fiber[y])
      for (int m2 : fiber[y]) {
        int count = 0;
        for (int g : G.arrows_by_r[b.lm[m]]) {
          auto gm = b.left_act(g, m);
          if (gm && *gm == m2) ++count;
        }
        if (count != 1)
          return {false, std::to_string(count) + " arrows carry " + b.label(m) + " to " +
                             b.label(m2) + " inside the fiber over " + H.object_label(y)};
      }
  return {true, ""};
}

Bibundle identity_bibundle(const GroupoidPtr& g) {
  Bibundle b;
  b.left = g;
  b.right = g;
  b.carrier = g->num_arrows();
  b.lm = g->l;
  b.rm = g->r;
  for (int m = 0; m < b.carrier; ++m) b.labels.push_back(g->arrow_label(m));
  for (const auto& [key, gh] : g->comp) {
    b.act_l[key] = gh;
    b.act_r[key] = gh;
  }
  return b;
}

Bibundle bibundle_from_functor(const GroupoidFunctor& f) {
  ValidationReport rep = validate(f);
  if (!rep.valid()) fail("NotAFunctor", rep.summary());
  const auto& G = *f.from;
  const auto& H = *f.to;
  Bibundle b;
  b.left = f.from;
  b.right = f.to;
  std::unordered_map<uint64_t, int> index;
  for (int x = 0; x < G.num_objects; ++x)
    for (int h : H.arrows_by_l[f.obj_map[x]]) {
      index[pair_key(x, h)] = b.carrier++;
      b.lm.push_back(x);
      b.rm.push_back(H.r[h]);
      b.labels.push_back("(" + G.object_label(x) + "," + H.arrow_label(h) + ")");
    }
  for (const auto& [key, m] : index) {
    int x = static_cast<int>(key >> 32), h = static_cast<int>(key & 0xffffffffu);
    for (int g : G.arrows_by_r[x]) {
      auto fgh = H.compose(f.arrow_map[g], h);
      b.act_l[pair_key(g, m)] = index.at(pair_key(G.l[g], *fgh));
    }
    for (int h2 : H.arrows_by_l[H.r[h]])
      b.act_r[pair_key(m, h2)] = index.at(pair_key(x, *H.compose(h, h2)));
  }
  return b;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

Bibundle compose_bibundles(const Bibundle& m, const Bibundle& n) {
  if (m.right.get() != n.left.get() && !same_groupoid(*m.right, *n.left))
    fail("MiddleMismatch", "middle groupoids of the two bibundles differ");
  if (auto pr = is_right_principal(m); !pr)
    fail("NotPrincipal", "left factor is not right principal: " + pr.witness);

  const auto& G = *m.left;
  const auto& H = *m.right;
  const auto& K = *n.right;

  // Matched pairs (a, c) with rm(a) = lm(c), glued along the H-action.
  std::vector<std::pair<int, int>> pairs;
  std::unordered_map<uint64_t, int> pid;
  std::vector<std::vector<int>> n_by_lm(H.num_objects);
  for (int c = 0; c < n.carrier; ++c) n_by_lm[n.lm[c]].push_back(c);
  for (int a = 0; a < m.carrier; ++a)
    for (int c : n_by_lm[m.rm[a]]) {
      pid[pair_key(a, c)] = static_cast<int>(pairs.size());
      pairs.emplace_back(a, c);
    }

  UnionFind uf(static_cast<int>(pairs.size()));
  for (size_t p = 0; p < pairs.size(); ++p) {
    auto [a, c] = pairs[p];
    for (int h : H.arrows_by_l[m.rm[a]]) {
      int ah = *m.right_act(a, h);
      int hc = *n.left_act(H.inv[h], c);
      uf.unite(static_cast<int>(p), pid.at(pair_key(ah, hc)));
    }
  }

  Bibundle out;
  out.left = m.left;
  out.right = n.right;
  std::vector<int> orbit_of(pairs.size(), -1);
  std::vector<int> rep;
  for (size_t p = 0; p < pairs.size(); ++p) {
    int root = uf.find(static_cast<int>(p));
    if (orbit_of[root] == -1) {
      orbit_of[root] = out.carrier++;
      rep.push_back(static_cast<int>(p));
      auto [a, c] = pairs[p];
      out.lm.push_back(m.lm[a]);
      out.rm.push_back(n.rm[c]);
      out.labels.push_back("[" + m.label(a) + "|" + n.label(c) + "]");
    }
    orbit_of[p] = orbit_of[root];
  }

  // Actions computed from every pair member; agreement across an orbit is a
  // consequence of the actions commuting with the gluing, asserted here.
  for (size_t p = 0; p < pairs.size(); ++p) {
    auto [a, c] = pairs[p];
    int o = orbit_of[p];
    for (int g : G.arrows_by_r[m.lm[a]]) {
      int t = orbit_of[pid.at(pair_key(*m.left_act(g, a), c))];
      auto [it, fresh] = out.act_l.try_emplace(pair_key(g, o), t);
      if (!fresh && it->second != t)
        fail("InvalidBibundle", "left action does not descend to the orbit space");
    }
    for (int k : K.arrows_by_l[n.rm[c]]) {
      int t = orbit_of[pid.at(pair_key(a, *n.right_act(c, k)))];
      auto [it, fresh] = out.act_r.try_emplace(pair_key(o, k), t);
      if (!fresh && it->second != t)
        fail("InvalidBibundle", "right action does not descend to the orbit space");
    }
  }
  return out;
}

Bibundle product_bibundle(const Bibundle& m, const Bibundle& n) {
  Bibundle out;
  out.left = product_groupoid(m.left, n.left);
  out.right = product_groupoid(m.right, n.right);
  out.carrier = m.carrier * n.carrier;
  const int nlo = n.left->num_objects, nro = n.right->num_objects;
  const int nla = n.left->num_arrows(), nra = n.right->num_arrows();
  out.lm.resize(out.carrier);
  out.rm.resize(out.carrier);
  out.labels.resize(out.carrier);
  for (int a = 0; a < m.carrier; ++a)
    for (int b = 0; b < n.carrier; ++b) {
      int id = a * n.carrier + b;
      out.lm[id] = m.lm[a] * nlo + n.lm[b];
      out.rm[id] = m.rm[a] * nro + n.rm[b];
      out.labels[id] = "(" + m.label(a) + "," + n.label(b) + ")";
    }
  for (const auto& [ka, va] : m.act_l) {
    int g1 = static_cast<int>(ka >> 32), a = static_cast<int>(ka & 0xffffffffu);
    for (const auto& [kb, vb] : n.act_l) {
      int g2 = static_cast<int>(kb >> 32), b = static_cast<int>(kb & 0xffffffffu);
      out.act_l[pair_key(g1 * nla + g2, a * n.carrier + b)] = va * n.carrier + vb;
    }
  }
  for (const auto& [ka, va] : m.act_r) {
    int a = static_cast<int>(ka >> 32), h1 = static_cast<int>(ka & 0xffffffffu);
    for (const auto& [kb, vb] : n.act_r) {
      int b = static_cast<int>(kb >> 32), h2 = static_cast<int>(kb & 0xffffffffu);
      out.act_r[pair_key(a * n.carrier + b, h1 * nra + h2)] = va * n.carrier + vb;
    }
  }
  return out;
}

Bibundle relabel_left(const Bibundle& m, const GroupoidFunctor& iso) {
  if (iso.to.get() != m.left.get() && !same_groupoid(*iso.to, *m.left))
    fail("MiddleMismatch", "relabeling functor does not land in the left groupoid");
  ValidationReport rep = validate(iso);
  if (!rep.valid()) fail("NotAFunctor", rep.summary());
  const auto& Gp = *iso.from;
  std::vector<int> obj_inv(iso.to->num_objects, -1);
  for (int x = 0; x < Gp.num_objects; ++x) {
    if (obj_inv[iso.obj_map[x]] != -1) fail("NotInvertible", "relabeling functor is not injective");
    obj_inv[iso.obj_map[x]] = x;
  }
  for (int y = 0; y < iso.to->num_objects; ++y)
    if (obj_inv[y] == -1) fail("NotInvertible", "relabeling functor is not surjective");

  Bibundle out = m;
  out.left = iso.from;
  for (int x = 0; x < out.carrier; ++x) out.lm[x] = obj_inv[m.lm[x]];
  out.act_l.clear();
  for (int g = 0; g < Gp.num_arrows(); ++g)
    for (int x = 0; x < out.carrier; ++x)
      if (Gp.r[g] == out.lm[x]) out.act_l[pair_key(g, x)] = m.act_l.at(pair_key(iso.arrow_map[g], x));
  return out;
}

Bibundle permute_carrier(const Bibundle& m, const std::vector<int>& perm) {
  Bibundle out;
  out.left = m.left;
  out.right = m.right;
  out.carrier = m.carrier;
  out.lm.resize(m.carrier);
  out.rm.resize(m.carrier);
  out.labels.resize(m.carrier);
  for (int x = 0; x < m.carrier; ++x) {
    out.lm[perm[x]] = m.lm[x];
    out.rm[perm[x]] = m.rm[x];
    out.labels[perm[x]] = m.label(x);
  }
  for (const auto& [key, v] : m.act_l)
    out.act_l[pair_key(static_cast<int>(key >> 32), perm[key & 0xffffffffu])] = perm[v];
  for (const auto& [key, v] : m.act_r)
    out.act_r[pair_key(perm[key >> 32], static_cast<int>(key & 0xffffffffu))] = perm[v];
  return out;
}

Bibundle disjoint_union(const Bibundle& m, const Bibundle& n) {
  if (!same_groupoid(*m.left, *n.left) || !same_groupoid(*m.right, *n.right))
    fail("MiddleMismatch", "disjoint union requires matching groupoids");
  Bibundle out = m;
  out.carrier = m.carrier + n.carrier;
  for (int x = 0; x < n.carrier; ++x) {
    out.lm.push_back(n.lm[x]);
    out.rm.push_back(n.rm[x]);
    out.labels.push_back(n.label(x) + "'");
  }
  for (const auto& [key, v] : n.act_l)
    out.act_l[pair_key(static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu) + m.carrier)] =
        v + m.carrier;
  for (const auto& [key, v] : n.act_r)
    out.act_r[pair_key(static_cast<int>(key >> 32) + m.carrier, static_cast<int>(key & 0xffffffffu))] =
        v + m.carrier;
  return out;
}

ValidationReport check_biequivariant(const Bibundle& m, const Bibundle& n,
                                     const std::vector<int>& map) {
  ValidationReport rep;
  if (static_cast<int>(map.size()) != m.carrier || m.carrier != n.carrier) {
    add_violation(rep, "shape", "map must be a carrier bijection");
    return rep;
  }
  std::vector<bool> hit(n.carrier, false);
  for (int x = 0; x < m.carrier; ++x) {
    if (map[x] < 0 || map[x] >= n.carrier || hit[map[x]]) {
      add_violation(rep, "bijection", m.label(x));
      return rep;
    }
    hit[map[x]] = true;
    if (n.lm[map[x]] != m.lm[x] || n.rm[map[x]] != m.rm[x])
      add_violation(rep, "moments", m.label(x));
  }
  for (const auto& [key, v] : m.act_l) {
    int g = static_cast<int>(key >> 32), x = static_cast<int>(key & 0xffffffffu);
    auto t = n.left_act(g, map[x]);
    if (!t || *t != map[v]) add_violation(rep, "left-equivariance", m.label(x));
    if (rep.violations.size() >= kMaxViolations) return rep;
  }
  for (const auto& [key, v] : m.act_r) {
    int x = static_cast<int>(key >> 32), h = static_cast<int>(key & 0xffffffffu);
    auto t = n.right_act(map[x], h);
    if (!t || *t != map[v]) add_violation(rep, "right-equivariance", m.label(x));
    if (rep.violations.size() >= kMaxViolations) return rep;
  }
  return rep;
}

namespace {

struct IsoSearch {
  const Bibundle& m;
  const Bibundle& n;
  BudgetMeter meter;
  std::vector<std::vector<std::pair<int, int>>> adj;  // m-side: (action key, target)
  std::vector<std::vector<int>> cand;
  std::vector<int> order, fm;
  std::vector<bool> used;

  IsoSearch(const Bibundle& m_, const Bibundle& n_, const Budget& budget)
      : m(m_), n(n_), meter(budget) {}

  // Adjacency tags: left actions keyed (0, g), right actions keyed (1, h);
  // both looked up on the n side through the same key shape.
  bool propagate(int x0, int y0, std::vector<int>& log) {
    std::vector<std::pair<int, int>> stack{{x0, y0}};
    while (!stack.empty()) {
      auto [x, y] = stack.back();
      stack.pop_back();
      if (fm[x] == y) continue;
      if (fm[x] != -1 || used[y]) return false;
      meter.spend("iso-assignment");
      fm[x] = y;
      used[y] = true;
      log.push_back(x);
      for (auto [tag, t] : adj[x]) {
        bool is_right = (tag & 1) != 0;
        int arrow = tag >> 1;
        auto ty = is_right ? n.right_act(y, arrow) : n.left_act(arrow, y);
        if (!ty) return false;
        stack.emplace_back(t, *ty);
      }
    }
    return true;
  }

  void undo(std::vector<int>& log) {
    for (int x : log) {
      used[fm[x]] = false;
      fm[x] = -1;
    }
    log.clear();
  }

  bool search(size_t pos) {
    while (pos < order.size() && fm[order[pos]] != -1) ++pos;
    if (pos == order.size()) return true;
    int x = order[pos];
    for (int y : cand[x]) {
      if (used[y]) continue;
      std::vector<int> log;
      if (propagate(x, y, log) && search(pos + 1)) return true;
      undo(log);
    }
    return false;
  }
};

} // namespace

std::optional<BiequivariantMap> find_biequivariant_iso(const Bibundle& m, const Bibundle& n,
                                                       const Budget& budget) {
  if (m.carrier != n.carrier) return std::nullopt;
  bool same_left = m.left.get() == n.left.get() || same_groupoid(*m.left, *n.left);
  bool same_right = m.right.get() == n.right.get() || same_groupoid(*m.right, *n.right);
  if (!same_left || !same_right) return std::nullopt;
  if (m.carrier > budget.carrier_cap)
    fail("BudgetExceeded", "carrier size " + std::to_string(m.carrier) +
                               " exceeds the 2-isomorphism search cap");

  IsoSearch s(m, n, budget);
  s.adj.resize(m.carrier);
  for (const auto& [key, v] : m.act_l)
    s.adj[key & 0xffffffffu].emplace_back(static_cast<int>(key >> 32) << 1, v);
  for (const auto& [key, v] : m.act_r)
    s.adj[key >> 32].emplace_back((static_cast<int>(key & 0xffffffffu) << 1) | 1, v);
  for (auto& a : s.adj) std::sort(a.begin(), a.end());

  std::unordered_map<uint64_t, std::vector<int>> n_fibers;
  for (int y = 0; y < n.carrier; ++y) n_fibers[pair_key(n.lm[y], n.rm[y])].push_back(y);
  s.cand.resize(m.carrier);
  for (int x = 0; x < m.carrier; ++x) {
    auto it = n_fibers.find(pair_key(m.lm[x], m.rm[x]));
    if (it == n_fibers.end()) return std::nullopt;
    s.cand[x] = it->second;
  }

  s.order.resize(m.carrier);
  std::iota(s.order.begin(), s.order.end(), 0);
  std::sort(s.order.begin(), s.order.end(), [&](int a, int b) {
    if (s.cand[a].size() != s.cand[b].size()) return s.cand[a].size() < s.cand[b].size();
    return a < b;
  });
  s.fm.assign(m.carrier, -1);
  s.used.assign(n.carrier, false);

  if (!s.search(0)) return std::nullopt;
  return BiequivariantMap{s.fm};
}

// ---------------------------------------------------------------------------
// Morita invariants

namespace {

std::string group_tag(const GroupSpec& g) {
  // Coarse human-readable tag; the matching itself uses group_iso.
  bool abelian = true;
  for (int a = 0; a < g.n && abelian; ++a)
    for (int b = 0; b < g.n; ++b)
      if (g.mul[a][b] != g.mul[b][a]) {
        abelian = false;
        break;
      }
  return "order " + std::to_string(g.n) + (abelian ? "" : " nonabelian");
}

struct IsoClasses {
  std::vector<GroupSpec> reps;
  std::vector<int> counts;

  void add(const GroupSpec& g) {
    for (size_t i = 0; i < reps.size(); ++i)
      if (group_iso(reps[i], g)) {
        ++counts[i];
        return;
      }
    reps.push_back(g);
    counts.push_back(1);
  }

  std::string describe() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < reps.size(); ++i)
      os << (i ? ", " : "") << group_tag(reps[i]) << " x" << counts[i];
    os << "}";
    return os.str();
  }
};

IsoClasses isotropy_classes(const FiniteGroupoid& g) {
  IsoClasses cls;
  for (const auto& orbit : orbits(g)) cls.add(isotropy(g, orbit.front()));
  return cls;
}

} // namespace

std::optional<Obstruction> morita_refute(const GroupoidPtr& g, const GroupoidPtr& h) {
  IsoClasses cg = isotropy_classes(*g), ch = isotropy_classes(*h);
  bool match = cg.reps.size() == ch.reps.size();
  size_t total_g = 0, total_h = 0;
  bool trivial_only = true;
  for (size_t i = 0; i < cg.reps.size(); ++i) {
    total_g += cg.counts[i];
    trivial_only = trivial_only && cg.reps[i].n == 1;
  }
  for (size_t j = 0; j < ch.reps.size(); ++j) {
    total_h += ch.counts[j];
    trivial_only = trivial_only && ch.reps[j].n == 1;
  }
  for (size_t i = 0; match && i < cg.reps.size(); ++i) {
    bool found = false;
    for (size_t j = 0; j < ch.reps.size(); ++j)
      if (cg.counts[i] == ch.counts[j] && group_iso(cg.reps[i], ch.reps[j])) {
        found = true;
        break;
      }
    match = found;
  }
  if (match && total_g == total_h) return std::nullopt;
  // The multiset of isotropy classes over orbits refines the orbit count (the
  // count is the multiset's size), so report the count only when it carries
  // all the content, i.e. when every isotropy group in sight is trivial.
  if (trivial_only)
    return Obstruction{"orbit-count",
                       std::to_string(total_g) + " orbits vs " + std::to_string(total_h)};
  return Obstruction{"isotropy-classes",
                     "isotropy classes per orbit: " + cg.describe() + " vs " + ch.describe()};
}

bool morita_verify(const GroupoidPtr& g, const GroupoidPtr& h, const Bibundle& m) {
  if (!same_groupoid(*m.left, *g) || !same_groupoid(*m.right, *h))
    fail("InvalidBibundle", "bibundle endpoints do not match the given groupoids");
  ValidationReport rep = validate(m);
  if (!rep.valid()) fail("InvalidBibundle", rep.summary());
  return is_right_principal(m).ok && is_left_principal(m).ok;
}

// ---------------------------------------------------------------------------
// stacky group axioms

bool StackyReport::all_pass() const {
  for (const auto& row : rows)
    if (!row.passed) return false;
  return !rows.empty();
}

std::string StackyReport::summary() const {
  std::ostringstream os;
  for (const auto& row : rows) {
    os << row.name << ": " << (row.passed ? "pass" : "FAIL");
    if (!row.passed && !row.witness.empty()) os << " (" << row.witness << ")";
    os << "\n";
  }
  os << "convention: " << convention << "\n";
  return os.str();
}

StackyReport stacky_group_check(const GroupoidPtr& g, const Bibundle& em, const Bibundle& ee,
                                const Bibundle& einv, const Budget& budget) {
  auto gg = product_groupoid(g, g);
  auto one = terminal_groupoid();
  if (!same_groupoid(*em.left, *gg) || !same_groupoid(*em.right, *g))
    fail("MiddleMismatch", "multiplication bibundle must be (GxG)-G");
  if (!same_groupoid(*ee.left, *one) || !same_groupoid(*ee.right, *g))
    fail("MiddleMismatch", "unit bibundle must be 1-G");
  if (!same_groupoid(*einv.left, *g) || !same_groupoid(*einv.right, *g))
    fail("MiddleMismatch", "inversion bibundle must be G-G");

  StackyReport report;
  auto add_row = [&report](const std::string& name, bool passed, const std::string& witness) {
    report.rows.push_back({name, passed, passed ? "" : witness});
  };

  struct Leg {
    const char* name;
    const Bibundle* b;
  };
  bool pre_ok = true;
  for (Leg leg : {Leg{"Em", &em}, Leg{"Ee", &ee}, Leg{"Einv", &einv}}) {
    ValidationReport rep = validate(*leg.b);
    add_row(std::string(leg.name) + " valid", rep.valid(), rep.summary());
    pre_ok = pre_ok && rep.valid();
    if (rep.valid()) {
      auto pr = is_right_principal(*leg.b);
      add_row(std::string(leg.name) + " right principal", pr.ok, pr.witness);
      pre_ok = pre_ok && pr.ok;
    } else {
      add_row(std::string(leg.name) + " right principal", false, "not checked: invalid bibundle");
      pre_ok = false;
    }
  }

  const char* diagram_names[] = {"associativity", "left unit", "right unit", "inverse left",
                                 "inverse right"};
  if (!pre_ok) {
    for (const char* name : diagram_names)
      add_row(name, false, "not checked: structural preconditions failed");
    return report;
  }

  Bibundle idg = identity_bibundle(g);
  auto decide = [&](const char* name, const Bibundle& lhs, const Bibundle& rhs) {
    auto iso = find_biequivariant_iso(lhs, rhs, budget);
    add_row(name, iso.has_value(),
            "no biequivariant bijection between carriers of size " +
                std::to_string(lhs.carrier) + " and " + std::to_string(rhs.carrier));
  };

  // Flat pair indexing makes (GxG)xG and Gx(GxG) literally equal tables, so
  // the canonical associator relabeling is the identity and the two composites
  // can be compared directly.
  decide("associativity", compose_bibundles(product_bibundle(em, idg), em),
         compose_bibundles(product_bibundle(idg, em), em));
  decide("left unit", compose_bibundles(product_bibundle(ee, idg), em), idg);
  decide("right unit", compose_bibundles(product_bibundle(idg, ee), em), idg);

  Bibundle diag = bibundle_from_functor(diagonal_functor(g, gg));
  Bibundle eta = bibundle_from_functor(terminal_functor(g, one));
  Bibundle unit_side = compose_bibundles(eta, ee);
  decide("inverse left",
         compose_bibundles(compose_bibundles(diag, product_bibundle(einv, idg)), em), unit_side);
  decide("inverse right",
         compose_bibundles(compose_bibundles(diag, product_bibundle(idg, einv)), em), unit_side);
  return report;
}

} // namespace grouplike
