#include "grouplike/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace grouplike {

namespace {

// Validation reports collect everything up to a cap; one witness is enough to
// refute, the rest is convenience while debugging inputs.
constexpr size_t kMaxViolations = 32;

void add_violation(ValidationReport& rep, const std::string& axiom, const std::string& witness) {
  if (rep.violations.size() < kMaxViolations) rep.violations.push_back({axiom, witness});
}

} // namespace

std::string ValidationReport::summary() const {
  if (valid()) return "valid";
  std::ostringstream os;
  os << violations.size() << " violation(s); first: " << violations[0].axiom << " at "
     << violations[0].witness;
  return os.str();
}

// ---------------------------------------------------------------------------
// groups

GroupSpec GroupSpec::cyclic(int n) {
  GroupSpec g;
  g.n = n;
  g.mul.assign(n, std::vector<int>(n));
  g.inv.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
    g.inv[a] = (n - a) % n;
    g.labels.push_back(std::to_string(a));
  }
  return g;
}

std::string GroupSpec::label(int g) const {
  if (g >= 0 && g < static_cast<int>(labels.size())) return labels[g];
  return std::to_string(g);
}

ValidationReport validate(const GroupSpec& g) {
  ValidationReport rep;
  if (g.n <= 0) {
    add_violation(rep, "nonempty", "group must have at least the identity");
    return rep;
  }
  if (static_cast<int>(g.mul.size()) != g.n || static_cast<int>(g.inv.size()) != g.n ||
      g.id < 0 || g.id >= g.n) {
    add_violation(rep, "shape", "multiplication/inverse tables must be n x n and n");
    return rep;
  }
  for (int a = 0; a < g.n; ++a) {
    if (static_cast<int>(g.mul[a].size()) != g.n) {
      add_violation(rep, "shape", "row " + std::to_string(a));
      return rep;
    }
    for (int b = 0; b < g.n; ++b)
      if (g.mul[a][b] < 0 || g.mul[a][b] >= g.n)
        add_violation(rep, "closure", g.label(a) + "*" + g.label(b));
  }
  if (!rep.valid()) return rep;
  for (int a = 0; a < g.n; ++a) {
    if (g.mul[g.id][a] != a || g.mul[a][g.id] != a)
      add_violation(rep, "identity", g.label(a));
    if (g.inv[a] < 0 || g.inv[a] >= g.n || g.mul[a][g.inv[a]] != g.id ||
        g.mul[g.inv[a]][a] != g.id)
      add_violation(rep, "inverse", g.label(a));
  }
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      for (int c = 0; c < g.n; ++c)
        if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]])
          add_violation(rep, "associativity",
                        g.label(a) + "," + g.label(b) + "," + g.label(c));
  return rep;
}

namespace {

int element_order(const GroupSpec& g, int a) {
  int x = a, k = 1;
  while (x != g.id) {
    x = g.mul[x][a];
    ++k;
  }
  return k;
}

bool iso_backtrack(const GroupSpec& a, const GroupSpec& b, std::vector<int>& map,
                   std::vector<bool>& used, int next) {
  if (next == a.n) return true;
  if (map[next] != -1) return iso_backtrack(a, b, map, used, next + 1);
  for (int img = 0; img < b.n; ++img) {
    if (used[img]) continue;
    if (element_order(a, next) != element_order(b, img)) continue;
    map[next] = img;
    used[img] = true;
    bool ok = true;
    // Check all products whose factors are already mapped.
    for (int x = 0; x < a.n && ok; ++x) {
      if (map[x] == -1) continue;
      if (map[a.mul[next][x]] != -1 && map[a.mul[next][x]] != b.mul[img][map[x]]) ok = false;
      if (ok && map[a.mul[x][next]] != -1 && map[a.mul[x][next]] != b.mul[map[x]][img]) ok = false;
    }
    if (ok && iso_backtrack(a, b, map, used, next + 1)) return true;
    map[next] = -1;
    used[img] = false;
  }
  return false;
}

} // namespace

std::optional<std::vector<int>> group_iso(const GroupSpec& a, const GroupSpec& b) {
  if (a.n != b.n) return std::nullopt;
  std::vector<int> map(a.n, -1);
  std::vector<bool> used(b.n, false);
  map[a.id] = b.id;
  used[b.id] = true;
  if (iso_backtrack(a, b, map, used, 0)) return map;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// groupoids

void FiniteGroupoid::finalize() {
  arrows_by_l.assign(num_objects, {});
  arrows_by_r.assign(num_objects, {});
  for (int g = 0; g < num_arrows(); ++g) {
    if (l[g] >= 0 && l[g] < num_objects) arrows_by_l[l[g]].push_back(g);
    if (r[g] >= 0 && r[g] < num_objects) arrows_by_r[r[g]].push_back(g);
  }
}

std::string FiniteGroupoid::object_label(int x) const {
  if (x >= 0 && x < static_cast<int>(object_labels.size()) && !object_labels[x].empty())
    return object_labels[x];
  return std::to_string(x);
}

std::string FiniteGroupoid::arrow_label(int g) const {
  if (g >= 0 && g < static_cast<int>(arrow_labels.size()) && !arrow_labels[g].empty())
    return arrow_labels[g];
  return std::to_string(g);
}

ValidationReport validate(const FiniteGroupoid& g) {
  ValidationReport rep;
  const int na = g.num_arrows();
  if (g.num_objects < 0 || static_cast<int>(g.r.size()) != na ||
      static_cast<int>(g.inv.size()) != na ||
      static_cast<int>(g.unit.size()) != g.num_objects) {
    add_violation(rep, "shape", "table sizes disagree");
    return rep;
  }
  for (int a = 0; a < na; ++a)
    if (g.l[a] < 0 || g.l[a] >= g.num_objects || g.r[a] < 0 || g.r[a] >= g.num_objects ||
        g.inv[a] < 0 || g.inv[a] >= na)
      add_violation(rep, "range", "arrow " + g.arrow_label(a));
  for (int x = 0; x < g.num_objects; ++x)
    if (g.unit[x] < 0 || g.unit[x] >= na)
      add_violation(rep, "range", "unit of " + g.object_label(x));
  if (!rep.valid()) return rep;

  if (g.arrows_by_l.size() != static_cast<size_t>(g.num_objects)) {
    add_violation(rep, "finalized", "fibers not built; call finalize()");
    return rep;
  }

  // comp is defined exactly on matching pairs: every key must match, and the
  // key count must equal the number of matching pairs.
  uint64_t expected = 0;
  for (int x = 0; x < g.num_objects; ++x)
    expected += static_cast<uint64_t>(g.arrows_by_r[x].size()) * g.arrows_by_l[x].size();
  if (expected != g.comp.size())
    add_violation(rep, "composability-domain",
                  "comp has " + std::to_string(g.comp.size()) + " entries, expected " +
                      std::to_string(expected));
  for (const auto& [key, gh] : g.comp) {
    int a = static_cast<int>(key >> 32), b = static_cast<int>(key & 0xffffffffu);
    if (a < 0 || a >= na || b < 0 || b >= na || gh < 0 || gh >= na) {
      add_violation(rep, "range", "comp entry (" + std::to_string(a) + "," + std::to_string(b) + ")");
      continue;
    }
    if (g.r[a] != g.l[b])
      add_violation(rep, "composability-domain", g.arrow_label(a) + " . " + g.arrow_label(b));
    else {
      if (g.l[gh] != g.l[a] || g.r[gh] != g.r[b])
        add_violation(rep, "moments-of-composite", g.arrow_label(a) + " . " + g.arrow_label(b));
    }
  }
  if (!rep.valid()) return rep;

  for (int x = 0; x < g.num_objects; ++x) {
    int u = g.unit[x];
    if (g.l[u] != x || g.r[u] != x)
      add_violation(rep, "unit-moments", g.object_label(x));
  }
  for (int a = 0; a < na; ++a) {
    auto left = g.compose(g.unit[g.l[a]], a);
    auto right = g.compose(a, g.unit[g.r[a]]);
    if (!left || *left != a) add_violation(rep, "left-unit", g.arrow_label(a));
    if (!right || *right != a) add_violation(rep, "right-unit", g.arrow_label(a));
    int ia = g.inv[a];
    if (g.l[ia] != g.r[a] || g.r[ia] != g.l[a]) {
      add_violation(rep, "inverse-moments", g.arrow_label(a));
      continue;
    }
    auto gi = g.compose(a, ia);
    auto ig = g.compose(ia, a);
    if (!gi || *gi != g.unit[g.l[a]]) add_violation(rep, "right-inverse", g.arrow_label(a));
    if (!ig || *ig != g.unit[g.r[a]]) add_violation(rep, "left-inverse", g.arrow_label(a));
  }

  for (int a = 0; a < na; ++a) {
    for (int b : g.arrows_by_l[g.r[a]]) {
      auto ab = g.compose(a, b);
      if (!ab) continue;
      for (int c : g.arrows_by_l[g.r[b]]) {
        auto bc = g.compose(b, c);
        auto lhs = g.compose(*ab, c);
        auto rhs = bc ? g.compose(a, *bc) : std::nullopt;
        if (!bc || !lhs || !rhs || *lhs != *rhs) {
          add_violation(rep, "associativity",
                        g.arrow_label(a) + "," + g.arrow_label(b) + "," + g.arrow_label(c));
          if (rep.violations.size() >= kMaxViolations) return rep;
        }
      }
    }
  }
  return rep;
}

bool same_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  if (a.num_objects != b.num_objects || a.l != b.l || a.r != b.r || a.unit != b.unit ||
      a.inv != b.inv || a.comp.size() != b.comp.size())
    return false;
  for (const auto& [k, v] : a.comp) {
    auto it = b.comp.find(k);
    if (it == b.comp.end() || it->second != v) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// actions and action groupoids

ValidationReport validate(const GroupAction& a) {
  ValidationReport rep = validate(a.group);
  if (!rep.valid()) return rep;
  if (static_cast<int>(a.act.size()) != a.group.n) {
    add_violation(rep, "shape", "action table must have one row per group element");
    return rep;
  }
  for (int g = 0; g < a.group.n; ++g) {
    if (static_cast<int>(a.act[g].size()) != a.carrier) {
      add_violation(rep, "shape", "action row " + a.group.label(g));
      return rep;
    }
    for (int p = 0; p < a.carrier; ++p)
      if (a.act[g][p] < 0 || a.act[g][p] >= a.carrier)
        add_violation(rep, "range", a.group.label(g) + "." + std::to_string(p));
  }
  if (!rep.valid()) return rep;
  for (int p = 0; p < a.carrier; ++p)
    if (a.act[a.group.id][p] != p)
      add_violation(rep, "identity-acts-trivially", std::to_string(p));
  for (int g = 0; g < a.group.n; ++g)
    for (int h = 0; h < a.group.n; ++h)
      for (int p = 0; p < a.carrier; ++p)
        if (a.act[g][a.act[h][p]] != a.act[a.group.mul[g][h]][p]) {
          add_violation(rep, "action-compatibility",
                        a.group.label(g) + "," + a.group.label(h) + "," + std::to_string(p));
          if (rep.violations.size() >= kMaxViolations) return rep;
        }
  return rep;
}

GroupoidPtr action_groupoid(const GroupAction& a) {
  ValidationReport rep = validate(a);
  if (!rep.valid()) fail("InvalidAction", rep.summary());

  auto g = std::make_shared<FiniteGroupoid>();
  const int n = a.group.n, m = a.carrier;
  g->num_objects = m;
  g->l.resize(n * m);
  g->r.resize(n * m);
  g->inv.resize(n * m);
  g->unit.resize(m);
  for (int p = 0; p < m; ++p) {
    g->object_labels.push_back(p < static_cast<int>(a.point_labels.size()) ? a.point_labels[p]
                                                                           : std::to_string(p));
    g->unit[p] = action_arrow(a, a.group.id, p);
  }
  for (int e = 0; e < n; ++e) {
    for (int p = 0; p < m; ++p) {
      int id = action_arrow(a, e, p);
      g->l[id] = a.act[e][p];
      g->r[id] = p;
      g->inv[id] = action_arrow(a, a.group.inv[e], a.act[e][p]);
      g->arrow_labels.push_back(a.group.label(e) + ":" + g->object_label(p));
    }
  }
  for (int e2 = 0; e2 < n; ++e2)
    for (int p2 = 0; p2 < m; ++p2)
      for (int e1 = 0; e1 < n; ++e1) {
        // (e1, e2.p2) . (e2, p2) = (e1 e2, p2)
        int h = action_arrow(a, e2, p2);
        int gg = action_arrow(a, e1, a.act[e2][p2]);
        g->comp[pair_key(gg, h)] = action_arrow(a, a.group.mul[e1][e2], p2);
      }
  g->finalize();
  return g;
}

GroupoidPtr terminal_groupoid() {
  auto g = std::make_shared<FiniteGroupoid>();
  g->num_objects = 1;
  g->l = {0};
  g->r = {0};
  g->unit = {0};
  g->inv = {0};
  g->comp[pair_key(0, 0)] = 0;
  g->object_labels = {"*"};
  g->arrow_labels = {"id"};
  g->finalize();
  return g;
}

GroupoidPtr group_as_groupoid(const GroupSpec& spec) {
  ValidationReport rep = validate(spec);
  if (!rep.valid()) fail("InvalidGroup", rep.summary());
  auto g = std::make_shared<FiniteGroupoid>();
  g->num_objects = 1;
  g->object_labels = {"*"};
  g->unit = {spec.id};
  for (int a = 0; a < spec.n; ++a) {
    g->l.push_back(0);
    g->r.push_back(0);
    g->inv.push_back(spec.inv[a]);
    g->arrow_labels.push_back(spec.label(a));
    for (int b = 0; b < spec.n; ++b) g->comp[pair_key(a, b)] = spec.mul[a][b];
  }
  g->finalize();
  return g;
}

GroupoidPtr trivial_groupoid(int n_objects) {
  auto g = std::make_shared<FiniteGroupoid>();
  g->num_objects = n_objects;
  for (int x = 0; x < n_objects; ++x) {
    g->l.push_back(x);
    g->r.push_back(x);
    g->inv.push_back(x);
    g->unit.push_back(x);
    g->comp[pair_key(x, x)] = x;
    g->object_labels.push_back(std::to_string(x));
    g->arrow_labels.push_back("id" + std::to_string(x));
  }
  g->finalize();
  return g;
}

GroupoidPtr pair_groupoid(int n_objects) {
  auto g = std::make_shared<FiniteGroupoid>();
  const int n = n_objects;
  g->num_objects = n;
  auto id = [n](int x, int y) { return x * n + y; }; // arrow y -> x
  for (int x = 0; x < n; ++x) {
    g->object_labels.push_back(std::to_string(x));
    g->unit.push_back(id(x, x));
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      g->l.push_back(x);
      g->r.push_back(y);
      g->inv.push_back(id(y, x));
      g->arrow_labels.push_back("(" + std::to_string(x) + "<-" + std::to_string(y) + ")");
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) g->comp[pair_key(id(x, y), id(y, z))] = id(x, z);
  g->finalize();
  return g;
}

GroupoidPtr product_groupoid(const GroupoidPtr& a, const GroupoidPtr& b) {
  auto g = std::make_shared<FiniteGroupoid>();
  const int bo = b->num_objects, ba = b->num_arrows();
  g->num_objects = a->num_objects * bo;
  auto obj = [bo](int x, int y) { return x * bo + y; };
  auto arr = [ba](int x, int y) { return x * ba + y; };
  g->l.resize(a->num_arrows() * ba);
  g->r.resize(a->num_arrows() * ba);
  g->inv.resize(a->num_arrows() * ba);
  g->unit.resize(g->num_objects);
  g->object_labels.resize(g->num_objects);
  g->arrow_labels.resize(a->num_arrows() * ba);
  for (int x = 0; x < a->num_objects; ++x)
    for (int y = 0; y < bo; ++y) {
      g->unit[obj(x, y)] = arr(a->unit[x], b->unit[y]);
      g->object_labels[obj(x, y)] = "(" + a->object_label(x) + "," + b->object_label(y) + ")";
    }
  for (int p = 0; p < a->num_arrows(); ++p)
    for (int q = 0; q < ba; ++q) {
      g->l[arr(p, q)] = obj(a->l[p], b->l[q]);
      g->r[arr(p, q)] = obj(a->r[p], b->r[q]);
      g->inv[arr(p, q)] = arr(a->inv[p], b->inv[q]);
      g->arrow_labels[arr(p, q)] = "(" + a->arrow_label(p) + "," + b->arrow_label(q) + ")";
    }
  for (const auto& [ka, va] : a->comp) {
    int p1 = static_cast<int>(ka >> 32), p2 = static_cast<int>(ka & 0xffffffffu);
    for (const auto& [kb, vb] : b->comp) {
      int q1 = static_cast<int>(kb >> 32), q2 = static_cast<int>(kb & 0xffffffffu);
      g->comp[pair_key(arr(p1, q1), arr(p2, q2))] = arr(va, vb);
    }
  }
  g->finalize();
  return g;
}

GroupSpec isotropy(const FiniteGroupoid& g, int x, std::vector<int>* arrow_ids) {
  if (x < 0 || x >= g.num_objects) fail("UnknownObject", "object " + std::to_string(x));
  std::vector<int> ids;
  for (int a = 0; a < g.num_arrows(); ++a)
    if (g.l[a] == x && g.r[a] == x) ids.push_back(a);
  GroupSpec spec;
  spec.n = static_cast<int>(ids.size());
  spec.mul.assign(spec.n, std::vector<int>(spec.n, -1));
  spec.inv.assign(spec.n, -1);
  std::unordered_map<int, int> index;
  for (int i = 0; i < spec.n; ++i) {
    index[ids[i]] = i;
    spec.labels.push_back(g.arrow_label(ids[i]));
    if (ids[i] == g.unit[x]) spec.id = i;
  }
  for (int i = 0; i < spec.n; ++i) {
    spec.inv[i] = index.at(g.inv[ids[i]]);
    for (int j = 0; j < spec.n; ++j) {
      auto c = g.compose(ids[i], ids[j]);
      if (!c || !index.count(*c)) fail("InvalidGroupoid", "isotropy not closed at object " + std::to_string(x));
      spec.mul[i][j] = index.at(*c);
    }
  }
  if (arrow_ids) *arrow_ids = ids;
  return spec;
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

std::vector<std::vector<int>> orbits(const FiniteGroupoid& g) {
  UnionFind uf(g.num_objects);
  for (int a = 0; a < g.num_arrows(); ++a) uf.unite(g.l[a], g.r[a]);
  std::vector<std::vector<int>> buckets(g.num_objects);
  for (int x = 0; x < g.num_objects; ++x) buckets[uf.find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& b : buckets)
    if (!b.empty()) out.push_back(std::move(b));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

// ---------------------------------------------------------------------------
// functors

GroupoidFunctor GroupoidFunctor::identity(const GroupoidPtr& g) {
  GroupoidFunctor f;
  f.from = g;
  f.to = g;
  f.obj_map.resize(g->num_objects);
  f.arrow_map.resize(g->num_arrows());
  std::iota(f.obj_map.begin(), f.obj_map.end(), 0);
  std::iota(f.arrow_map.begin(), f.arrow_map.end(), 0);
  return f;
}

ValidationReport validate(const GroupoidFunctor& f) {
  ValidationReport rep;
  const auto& G = *f.from;
  const auto& H = *f.to;
  if (static_cast<int>(f.obj_map.size()) != G.num_objects ||
      static_cast<int>(f.arrow_map.size()) != G.num_arrows()) {
    add_violation(rep, "shape", "map sizes disagree with source groupoid");
    return rep;
  }
  for (int x = 0; x < G.num_objects; ++x)
    if (f.obj_map[x] < 0 || f.obj_map[x] >= H.num_objects)
      add_violation(rep, "range", "object " + std::to_string(x));
  for (int a = 0; a < G.num_arrows(); ++a)
    if (f.arrow_map[a] < 0 || f.arrow_map[a] >= H.num_arrows())
      add_violation(rep, "range", "arrow " + std::to_string(a));
  if (!rep.valid()) return rep;
  for (int a = 0; a < G.num_arrows(); ++a) {
    int fa = f.arrow_map[a];
    if (H.l[fa] != f.obj_map[G.l[a]] || H.r[fa] != f.obj_map[G.r[a]])
      add_violation(rep, "moments", G.arrow_label(a));
  }
  for (int x = 0; x < G.num_objects; ++x)
    if (f.arrow_map[G.unit[x]] != H.unit[f.obj_map[x]])
      add_violation(rep, "units", G.object_label(x));
  for (const auto& [key, gh] : G.comp) {
    int a = static_cast<int>(key >> 32), b = static_cast<int>(key & 0xffffffffu);
    auto c = H.compose(f.arrow_map[a], f.arrow_map[b]);
    if (!c || *c != f.arrow_map[gh]) {
      add_violation(rep, "composition", G.arrow_label(a) + " . " + G.arrow_label(b));
      if (rep.violations.size() >= kMaxViolations) return rep;
    }
  }
  return rep;
}

GroupoidFunctor compose(const GroupoidFunctor& f, const GroupoidFunctor& g) {
  if (f.to.get() != g.from.get() && !same_groupoid(*f.to, *g.from))
    fail("MiddleMismatch", "functor composition: middle groupoids differ");
  GroupoidFunctor out;
  out.from = f.from;
  out.to = g.to;
  out.obj_map.resize(f.obj_map.size());
  out.arrow_map.resize(f.arrow_map.size());
  for (size_t x = 0; x < f.obj_map.size(); ++x) out.obj_map[x] = g.obj_map[f.obj_map[x]];
  for (size_t a = 0; a < f.arrow_map.size(); ++a) out.arrow_map[a] = g.arrow_map[f.arrow_map[a]];
  return out;
}

/* With flat pair indexing, (A x B) x C and A x (B x C) produce literally equal
 * tables, so the coherence isos are identity maps; they are still materialized
 * as functors so callers can stay honest about which groupoid they are in. */
GroupoidFunctor associator(const GroupoidPtr& a, const GroupoidPtr& b, const GroupoidPtr& c,
                           const GroupoidPtr& lhs, const GroupoidPtr& rhs) {
  (void)a;
  (void)b;
  (void)c;
  if (!same_groupoid(*lhs, *rhs)) fail("ShapeMismatch", "associator endpoints disagree");
  GroupoidFunctor f = GroupoidFunctor::identity(lhs);
  f.to = rhs;
  return f;
}

GroupoidFunctor left_unitor(const GroupoidPtr& one_a, const GroupoidPtr& a) {
  if (!same_groupoid(*one_a, *a)) fail("ShapeMismatch", "left unitor endpoints disagree");
  GroupoidFunctor f = GroupoidFunctor::identity(one_a);
  f.to = a;
  return f;
}

GroupoidFunctor right_unitor(const GroupoidPtr& a_one, const GroupoidPtr& a) {
  if (!same_groupoid(*a_one, *a)) fail("ShapeMismatch", "right unitor endpoints disagree");
  GroupoidFunctor f = GroupoidFunctor::identity(a_one);
  f.to = a;
  return f;
}

GroupoidFunctor terminal_functor(const GroupoidPtr& g, const GroupoidPtr& one) {
  if (one->num_objects != 1 || one->num_arrows() != 1)
    fail("ShapeMismatch", "target is not the one-arrow groupoid");
  GroupoidFunctor f;
  f.from = g;
  f.to = one;
  f.obj_map.assign(g->num_objects, 0);
  f.arrow_map.assign(g->num_arrows(), 0);
  return f;
}

GroupoidFunctor diagonal_functor(const GroupoidPtr& g, const GroupoidPtr& gg) {
  if (gg->num_objects != g->num_objects * g->num_objects ||
      gg->num_arrows() != g->num_arrows() * g->num_arrows())
    fail("ShapeMismatch", "target is not the square of the source");
  GroupoidFunctor f;
  f.from = g;
  f.to = gg;
  f.obj_map.resize(g->num_objects);
  f.arrow_map.resize(g->num_arrows());
  for (int x = 0; x < g->num_objects; ++x) f.obj_map[x] = x * g->num_objects + x;
  for (int a = 0; a < g->num_arrows(); ++a) f.arrow_map[a] = a * g->num_arrows() + a;
  return f;
}

} // namespace grouplike
