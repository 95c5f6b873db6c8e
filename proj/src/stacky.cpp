#include "grouplike/stacky.hpp"

#include "grouplike/errors.hpp"

namespace grouplike {

StackyFamily make_trivial_group_family(const GroupSpec& s) {
  StackyFamily fam;
  fam.name = "trivial-group(n=" + std::to_string(s.n) + ")";

  auto base = std::make_shared<FiniteGroupoid>(*trivial_groupoid(s.n));
  for (int x = 0; x < s.n; ++x) {
    base->object_labels[x] = s.label(x);
    base->arrow_labels[x] = "id:" + s.label(x);
  }
  fam.g = base;
  auto gg = product_groupoid(fam.g, fam.g);
  auto one = terminal_groupoid();

  // Arrows of a trivial groupoid are its objects, so one map serves as both.
  GroupoidFunctor mult{gg, fam.g, {}, {}};
  mult.obj_map.resize(s.n * s.n);
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) mult.obj_map[x * s.n + y] = s.mul[x][y];
  mult.arrow_map = mult.obj_map;
  fam.em = bibundle_from_functor(mult);

  GroupoidFunctor unit{one, fam.g, {s.id}, {s.id}};
  fam.ee = bibundle_from_functor(unit);

  GroupoidFunctor invf{fam.g, fam.g, s.inv, s.inv};
  fam.einv = bibundle_from_functor(invf);
  return fam;
}

StackyFamily make_one_object_family(const GroupSpec& s) {
  StackyFamily fam;
  fam.name = "one-object(n=" + std::to_string(s.n) + ")";

  fam.g = group_as_groupoid(s);
  auto gg = product_groupoid(fam.g, fam.g);
  auto one = terminal_groupoid();

  // (a, b) -> ab is a functor exactly when s is abelian; the functor check
  // inside bibundle_from_functor rejects the rest.
  GroupoidFunctor mult{gg, fam.g, {0}, {}};
  mult.arrow_map.resize(s.n * s.n);
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b) mult.arrow_map[a * s.n + b] = s.mul[a][b];
  fam.em = bibundle_from_functor(mult);

  GroupoidFunctor unit{one, fam.g, {0}, {s.id}};
  fam.ee = bibundle_from_functor(unit);

  GroupoidFunctor invf{fam.g, fam.g, {0}, s.inv};
  fam.einv = bibundle_from_functor(invf);
  return fam;
}

StackyFamily make_cyclic_quotient_family(int n_total, int subgroup_order) {
  const int n = n_total, m = subgroup_order;
  if (n <= 0 || m <= 0 || n % m != 0)
    fail("InvalidAction", "cyclic quotient family needs orders m | n, got n=" +
                              std::to_string(n) + " m=" + std::to_string(m));
  const int d = n / m; // translation step; H = dZ_n has index d and order m

  StackyFamily fam;
  fam.name = "cyclic-quotient(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")";

  GroupAction act;
  act.group = GroupSpec::cyclic(m);
  act.carrier = n;
  act.act.assign(m, std::vector<int>(n));
  for (int a = 0; a < m; ++a)
    for (int p = 0; p < n; ++p) act.act[a][p] = (p + d * a) % n;
  for (int p = 0; p < n; ++p) act.point_labels.push_back(std::to_string(p));
  fam.g = action_groupoid(act);

  const int ga = fam.g->num_arrows(); // = m * n
  auto arrow = [&](int a, int p) { return a * n + p; };
  auto in_h = [&](int x) { return x % d == 0; };

  // Multiplication: (x, y, z) with x + y = z modulo H, left (GxG)-action by
  // simultaneous translation, right G-action translating z.
  {
    Bibundle em;
    em.left = product_groupoid(fam.g, fam.g);
    em.right = fam.g;
    std::vector<int> idx3(n * n * n, -1);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          if (!in_h(((x + y - z) % n + n) % n)) continue;
          idx3[(x * n + y) * n + z] = em.carrier++;
          em.lm.push_back(x * n + y);
          em.rm.push_back(z);
          em.labels.push_back("(" + std::to_string(x) + "," + std::to_string(y) +
                              "," + std::to_string(z) + ")");
        }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          int p = idx3[(x * n + y) * n + z];
          if (p < 0) continue;
          for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
              int gamma = arrow(a, x) * ga + arrow(b, y);
              int tx = (x + d * a) % n, ty = (y + d * b) % n;
              em.act_l[pair_key(gamma, p)] = idx3[(tx * n + ty) * n + z];
            }
          for (int c = 0; c < m; ++c) {
            int tz = ((z - d * c) % n + n) % n;
            em.act_r[pair_key(p, arrow(c, tz))] = idx3[(x * n + y) * n + tz];
          }
        }
    fam.em = std::move(em);
  }

  // Unit: the subgroup H itself, right translation inside H.
  {
    Bibundle ee;
    ee.left = terminal_groupoid();
    ee.right = fam.g;
    ee.carrier = m;
    for (int k = 0; k < m; ++k) {
      ee.lm.push_back(0);
      ee.rm.push_back(k * d);
      ee.labels.push_back(std::to_string(k * d));
      ee.act_l[pair_key(0, k)] = k;
    }
    for (int k = 0; k < m; ++k)
      for (int c = 0; c < m; ++c) {
        int t = ((k - c) % m + m) % m;
        ee.act_r[pair_key(k, arrow(c, t * d))] = t;
      }
    fam.ee = std::move(ee);
  }

  // Inversion: (x, y) with x + y in H, a two-sided translation correspondence.
  {
    Bibundle einv;
    einv.left = fam.g;
    einv.right = fam.g;
    std::vector<int> idx2(n * n, -1);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (!in_h((x + y) % n)) continue;
        idx2[x * n + y] = einv.carrier++;
        einv.lm.push_back(x);
        einv.rm.push_back(y);
        einv.labels.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
      }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int p = idx2[x * n + y];
        if (p < 0) continue;
        for (int a = 0; a < m; ++a)
          einv.act_l[pair_key(arrow(a, x), p)] = idx2[((x + d * a) % n) * n + y];
        for (int c = 0; c < m; ++c) {
          int ty = ((y - d * c) % n + n) % n;
          einv.act_r[pair_key(p, arrow(c, ty))] = idx2[x * n + ty];
        }
      }
    fam.einv = std::move(einv);
  }

  return fam;
}

} // namespace grouplike
