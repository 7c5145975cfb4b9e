#include "gring/group.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <stdexcept>

namespace gring {

namespace {

std::string power_label(const std::string& base, unsigned e) {
  if (e == 0) return "1";
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

}  // namespace

void GroupTable::finish() {
  const std::size_t n = order_;
  if (n == 0 || table_.size() != n * n) throw std::logic_error("bad group table");
  for (ElemId a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw std::logic_error("identity violated");
  }
  // Latin square rows/columns imply unique solvability; associativity makes
  // it a group.
  std::vector<char> seen(n);
  for (ElemId a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (ElemId b = 0; b < n; ++b) {
      ElemId v = mul(a, b);
      if (v >= n || seen[v]) throw std::logic_error("row not a permutation");
      seen[v] = 1;
    }
  }
  for (ElemId a = 0; a < n; ++a)
    for (ElemId b = 0; b < n; ++b)
      for (ElemId c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::logic_error("associativity violated");

  inv_.assign(n, 0);
  for (ElemId a = 0; a < n; ++a) {
    bool found = false;
    for (ElemId b = 0; b < n; ++b) {
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inv_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("missing inverse");
  }

  elem_order_.assign(n, 1);
  for (ElemId a = 0; a < n; ++a) {
    unsigned k = 1;
    ElemId p = a;
    while (p != 0) {
      p = mul(p, a);
      ++k;
    }
    elem_order_[a] = k;
  }
  if (labels_.size() != n) throw std::logic_error("missing labels");
}

bool GroupTable::is_abelian() const {
  for (ElemId a = 0; a < order_; ++a)
    for (ElemId b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

GroupTable GroupTable::cyclic(unsigned n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  GroupTable g;
  g.order_ = n;
  g.name_ = "C" + std::to_string(n);
  g.table_.resize(std::size_t{n} * n);
  for (ElemId a = 0; a < n; ++a)
    for (ElemId b = 0; b < n; ++b) g.table_[a * n + b] = (a + b) % n;
  g.labels_.reserve(n);
  for (unsigned i = 0; i < n; ++i) g.labels_.push_back(power_label("x", i));
  if (n > 1) g.generators_ = {1};
  g.finish();
  return g;
}

GroupTable GroupTable::dihedral(unsigned n) {
  if (n < 2) throw std::invalid_argument("dihedral index must be >= 2");
  GroupTable g;
  const std::size_t order = 2 * std::size_t{n};
  g.order_ = order;
  g.name_ = "D" + std::to_string(n);
  g.table_.resize(order * order);
  // Element a*n + i is s^a r^i; r^i s = s r^{-i}.
  auto id = [n](unsigned a, unsigned i) { return ElemId(a * n + i % n); };
  for (unsigned a = 0; a < 2; ++a)
    for (unsigned i = 0; i < n; ++i)
      for (unsigned b = 0; b < 2; ++b)
        for (unsigned j = 0; j < n; ++j) {
          ElemId lhs = id(a, i), rhs = id(b, j);
          ElemId out = b == 0 ? id(a, i + j) : id(1 - a, j + n - i % n);
          g.table_[lhs * order + rhs] = out;
        }
  g.labels_.resize(order);
  for (unsigned i = 0; i < n; ++i) {
    g.labels_[i] = power_label("r", i);
    g.labels_[n + i] = i == 0 ? "s" : "s" + power_label("r", i);
  }
  g.generators_ = {1, ElemId(n)};
  g.finish();
  return g;
}

GroupTable GroupTable::quaternion8() {
  GroupTable g;
  g.order_ = 8;
  g.name_ = "Q8";
  // Element s*4 + b with sign s and basis b in {1, i, j, k}.
  static const int kBasis[4][4] = {
      {0, 1, 2, 3},    // 1 * x
      {1, -10, 3, -2}, // i: i*i=-1, i*j=k, i*k=-j
      {2, -3, -10, 1}, // j: j*i=-k, j*j=-1, j*k=i
      {3, 2, -1, -10}, // k: k*i=j, k*j=-i, k*k=-1
  };
  g.table_.resize(64);
  for (unsigned sa = 0; sa < 2; ++sa)
    for (unsigned ba = 0; ba < 4; ++ba)
      for (unsigned sb = 0; sb < 2; ++sb)
        for (unsigned bb = 0; bb < 4; ++bb) {
          int raw = kBasis[ba][bb];
          unsigned sign = sa ^ sb, basis;
          if (raw == -10) {  // product is -1
            sign ^= 1;
            basis = 0;
          } else if (raw < 0) {
            sign ^= 1;
            basis = unsigned(-raw);
          } else {
            basis = unsigned(raw);
          }
          g.table_[(sa * 4 + ba) * 8 + (sb * 4 + bb)] = ElemId(sign * 4 + basis);
        }
  g.labels_ = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
  g.generators_ = {1, 2};
  g.finish();
  return g;
}

GroupTable GroupTable::symmetric(unsigned n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("symmetric degree must be between 1 and 4");
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(n);
  for (unsigned i = 0; i < n; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  GroupTable g;
  const std::size_t order = perms.size();
  g.order_ = order;
  g.name_ = "S" + std::to_string(n);

  std::map<std::vector<unsigned>, ElemId> index;
  for (ElemId i = 0; i < order; ++i) index[perms[i]] = i;

  g.table_.resize(order * order);
  std::vector<unsigned> comp(n);
  for (ElemId a = 0; a < order; ++a)
    for (ElemId b = 0; b < order; ++b) {
      for (unsigned x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];
      g.table_[a * order + b] = index[comp];
    }

  g.labels_.reserve(order);
  for (ElemId i = 0; i < order; ++i) {
    const auto& q = perms[i];
    std::string lab;
    std::vector<char> used(n, 0);
    for (unsigned s = 0; s < n; ++s) {
      if (used[s] || q[s] == s) continue;
      lab += '(';
      unsigned c = s;
      do {
        used[c] = 1;
        lab += std::to_string(c + 1);
        c = q[c];
      } while (c != s);
      lab += ')';
    }
    g.labels_.push_back(lab.empty() ? "e" : lab);
  }

  if (n >= 2) {
    std::vector<unsigned> t(n), cyc(n);
    for (unsigned i = 0; i < n; ++i) t[i] = i;
    std::swap(t[0], t[1]);
    for (unsigned i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    g.generators_.push_back(index[t]);
    if (n >= 3) g.generators_.push_back(index[cyc]);
  }
  g.finish();
  return g;
}

GroupTable GroupTable::product(const GroupTable& a, const GroupTable& b) {
  GroupTable g;
  const std::size_t na = a.order(), nb = b.order();
  g.order_ = na * nb;
  g.name_ = a.name() + " x " + b.name();
  g.table_.resize(g.order_ * g.order_);
  for (ElemId x = 0; x < g.order_; ++x)
    for (ElemId y = 0; y < g.order_; ++y) {
      ElemId xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
      g.table_[x * g.order_ + y] = ElemId(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  g.labels_.reserve(g.order_);
  for (ElemId x = 0; x < g.order_; ++x)
    g.labels_.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
  for (ElemId ga : a.generators()) g.generators_.push_back(ElemId(ga * nb));
  for (ElemId gb : b.generators()) g.generators_.push_back(ElemId(gb));
  g.finish();
  return g;
}

bool Subgroup::contains(ElemId g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

Subgroup trivial_subgroup() { return Subgroup{{0}, true}; }

Subgroup whole_subgroup(const GroupTable& g) {
  Subgroup h;
  h.members.resize(g.order());
  for (ElemId i = 0; i < g.order(); ++i) h.members[i] = i;
  h.normal = true;
  return h;
}

Subgroup cyclic_subgroup(const GroupTable& g, ElemId x) {
  Subgroup h;
  ElemId p = 0;
  do {
    h.members.push_back(p);
    p = g.mul(p, x);
  } while (p != 0);
  std::sort(h.members.begin(), h.members.end());
  h.normal = is_normal_subgroup(g, h);
  return h;
}

Subgroup generated_subgroup(const GroupTable& g, std::span<const ElemId> seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<ElemId> members{0};
  in[0] = 1;
  std::deque<ElemId> queue(seed.begin(), seed.end());
  while (!queue.empty()) {
    ElemId x = queue.front();
    queue.pop_front();
    if (in[x]) continue;
    in[x] = 1;
    members.push_back(x);
    queue.push_back(g.inv(x));
    for (std::size_t i = 0; i < members.size(); ++i) {
      queue.push_back(g.mul(x, members[i]));
      queue.push_back(g.mul(members[i], x));
    }
  }
  std::sort(members.begin(), members.end());
  Subgroup h{std::move(members), false};
  h.normal = is_normal_subgroup(g, h);
  return h;
}

bool is_normal_subgroup(const GroupTable& g, const Subgroup& h) {
  for (ElemId x : h.members)
    for (ElemId a = 0; a < g.order(); ++a)
      if (!h.contains(g.conjugate(a, x))) return false;
  return true;
}

std::vector<Subgroup> all_subgroups(const GroupTable& g,
                                    const EngineLimits& limits) {
  std::set<std::vector<ElemId>> known;
  std::deque<std::vector<ElemId>> queue;
  auto offer = [&](std::vector<ElemId> m) {
    if (known.insert(m).second) {
      if (known.size() > limits.subgroup_count_cap)
        throw CapExceeded("subgroup count", known.size(),
                          limits.subgroup_count_cap);
      queue.push_back(std::move(m));
    }
  };

  offer(std::vector<ElemId>{0});
  std::vector<std::vector<ElemId>> cyclics;
  for (ElemId x = 1; x < g.order(); ++x) {
    auto c = cyclic_subgroup(g, x).members;
    if (known.insert(c).second) {
      if (known.size() > limits.subgroup_count_cap)
        throw CapExceeded("subgroup count", known.size(),
                          limits.subgroup_count_cap);
      queue.push_back(c);
      cyclics.push_back(std::move(c));
    }
  }
  // Close under join with cyclic subgroups; every subgroup is a join of the
  // cyclic subgroups of its elements, so this reaches all of them.
  while (!queue.empty()) {
    limits.poll();
    auto base = std::move(queue.front());
    queue.pop_front();
    for (const auto& c : cyclics) {
      if (std::includes(base.begin(), base.end(), c.begin(), c.end())) continue;
      std::vector<ElemId> seed = base;
      seed.insert(seed.end(), c.begin(), c.end());
      offer(generated_subgroup(g, seed).members);
    }
  }

  std::vector<Subgroup> out;
  out.reserve(known.size());
  for (const auto& m : known) {
    Subgroup h{m, false};
    h.normal = is_normal_subgroup(g, h);
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return out;
}

std::vector<Subgroup> normal_subgroups(const GroupTable& g,
                                       const EngineLimits& limits) {
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(g, limits))
    if (h.normal) out.push_back(std::move(h));
  return out;
}

Subgroup normal_closure(const GroupTable& g, std::span<const ElemId> seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<ElemId> members{0};
  in[0] = 1;
  std::deque<ElemId> queue(seed.begin(), seed.end());
  while (!queue.empty()) {
    ElemId x = queue.front();
    queue.pop_front();
    if (in[x]) continue;
    in[x] = 1;
    members.push_back(x);
    queue.push_back(g.inv(x));
    for (ElemId a = 0; a < g.order(); ++a) queue.push_back(g.conjugate(a, x));
    for (std::size_t i = 0; i < members.size(); ++i) {
      queue.push_back(g.mul(x, members[i]));
      queue.push_back(g.mul(members[i], x));
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members), true};
}

Subgroup center(const GroupTable& g) {
  Subgroup z;
  for (ElemId x = 0; x < g.order(); ++x) {
    bool central = true;
    for (ElemId a = 0; a < g.order() && central; ++a)
      central = g.mul(x, a) == g.mul(a, x);
    if (central) z.members.push_back(x);
  }
  z.normal = true;
  return z;
}

QuotientGroup quotient_group(const GroupTable& g, const Subgroup& h) {
  if (!is_normal_subgroup(g, h))
    throw std::invalid_argument("quotient by a non-normal subgroup");
  QuotientGroup q;
  q.projection.assign(g.order(), ElemId(-1));
  std::vector<ElemId> reps;
  for (ElemId x = 0; x < g.order(); ++x) {
    if (q.projection[x] != ElemId(-1)) continue;
    ElemId idx = ElemId(reps.size());
    reps.push_back(x);
    for (ElemId m : h.members) q.projection[g.mul(x, m)] = idx;
  }

  GroupTable& t = q.group;
  t.order_ = reps.size();
  t.name_ = g.name() + "/" + std::to_string(h.order());
  t.table_.resize(t.order_ * t.order_);
  for (ElemId a = 0; a < t.order_; ++a)
    for (ElemId b = 0; b < t.order_; ++b)
      t.table_[a * t.order_ + b] = q.projection[g.mul(reps[a], reps[b])];
  t.labels_.reserve(t.order_);
  for (ElemId a = 0; a < t.order_; ++a) t.labels_.push_back(g.label(reps[a]) + "H");
  for (ElemId gen : g.generators()) {
    ElemId im = q.projection[gen];
    if (im != 0) t.generators_.push_back(im);
  }
  t.finish();

  // Projection is a homomorphism with kernel exactly h.
  for (ElemId a = 0; a < g.order(); ++a) {
    if ((q.projection[a] == 0) != h.contains(a))
      throw std::logic_error("quotient kernel mismatch");
    for (ElemId b = 0; b < g.order(); ++b)
      if (q.projection[g.mul(a, b)] !=
          t.mul(q.projection[a], q.projection[b]))
        throw std::logic_error("quotient projection not a homomorphism");
  }
  return q;
}

SubgroupAsGroup subgroup_as_group(const GroupTable& g, const Subgroup& h) {
  SubgroupAsGroup s;
  s.to_parent = h.members;  // sorted, so parent identity 0 lands at index 0
  std::vector<ElemId> back(g.order(), ElemId(-1));
  for (ElemId i = 0; i < h.members.size(); ++i) back[h.members[i]] = i;

  GroupTable& t = s.group;
  t.order_ = h.members.size();
  t.name_ = g.name() + "<" + std::to_string(h.order()) + ">";
  t.table_.resize(t.order_ * t.order_);
  for (ElemId a = 0; a < t.order_; ++a)
    for (ElemId b = 0; b < t.order_; ++b) {
      ElemId prod = g.mul(h.members[a], h.members[b]);
      if (back[prod] == ElemId(-1))
        throw std::invalid_argument("subgroup members not closed");
      t.table_[a * t.order_ + b] = back[prod];
    }
  t.labels_.reserve(t.order_);
  for (ElemId a = 0; a < t.order_; ++a) t.labels_.push_back(g.label(h.members[a]));
  for (ElemId a = 1; a < t.order_; ++a) t.generators_.push_back(a);
  t.finish();
  return s;
}

GroupInfo group_info(const GroupTable& g, const EngineLimits& limits) {
  GroupInfo info;
  info.order = g.order();
  info.abelian = g.is_abelian();
  info.element_orders.reserve(g.order());
  for (ElemId x = 0; x < g.order(); ++x)
    info.element_orders.push_back(g.element_order(x));
  info.center_members = center(g).members;
  for (const auto& h : normal_subgroups(g, limits))
    info.normal_subgroup_orders.push_back(h.order());
  std::sort(info.normal_subgroup_orders.begin(),
            info.normal_subgroup_orders.end());
  return info;
}

namespace {

bool is_prime_power_of(unsigned value, unsigned p) {
  if (value == 1) return true;
  while (value % p == 0) value /= p;
  return value == 1;
}

unsigned smallest_prime_factor(std::size_t n) {
  for (unsigned p = 2; std::size_t{p} * p <= n; ++p)
    if (n % p == 0) return p;
  return unsigned(n);
}

}  // namespace

PredicateResult group_predicate(const GroupTable& g, GroupPredicate pred,
                                std::optional<unsigned> p,
                                const EngineLimits& limits) {
  PredicateResult r;
  switch (pred) {
    case GroupPredicate::PGroup: {
      if (g.order() == 1) {
        r.value = true;
        r.prime = p;
        return r;
      }
      unsigned cand = p ? *p : smallest_prime_factor(g.order());
      for (ElemId x = 0; x < g.order(); ++x)
        if (!is_prime_power_of(g.element_order(x), cand)) {
          r.value = false;
          r.witness_element = x;
          return r;
        }
      r.value = true;
      r.prime = cand;
      return r;
    }
    case GroupPredicate::Dedekind: {
      for (const auto& h : all_subgroups(g, limits))
        if (!h.normal) {
          r.value = false;
          r.witness_subgroup = h;
          return r;
        }
      r.value = true;
      return r;
    }
    case GroupPredicate::Prime: {
      // nu(G) = {1}: a finite group is prime only when trivial, since G
      // itself is a finite normal subgroup.
      for (const auto& h : normal_subgroups(g, limits))
        if (!h.is_trivial()) {
          r.value = false;
          r.witness_subgroup = h;
          return r;
        }
      r.value = true;
      return r;
    }
    case GroupPredicate::LocallyNormal:
      // Finite groups are locally normal: every finite subset sits inside G,
      // a finite normal subgroup of itself.
      r.value = true;
      return r;
  }
  throw std::logic_error("unknown group predicate");
}

NuSigma nu_sigma(const GroupTable& g, const EngineLimits& limits) {
  NuSigma ns;
  for (const auto& h : normal_subgroups(g, limits)) ns.nu.push_back(h.order());
  std::sort(ns.nu.begin(), ns.nu.end());
  ns.nu.erase(std::unique(ns.nu.begin(), ns.nu.end()), ns.nu.end());
  ns.sigma = whole_subgroup(g);
  return ns;
}

}  // namespace gring
