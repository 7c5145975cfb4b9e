#include "gring/ring.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "principal_cache.hpp"

namespace gring {

FiniteRing::~FiniteRing() = default;

namespace {

constexpr std::size_t kGroupRingBasisCap = 64;
constexpr std::size_t kMemoEntryCap = std::size_t{1} << 20;
constexpr unsigned kConstructionSamples = 1024;

}  // namespace

ElemId FiniteRing::add_impl(ElemId a, ElemId b) const {
  if (const auto* z = std::get_if<ZmodProv>(&prov_)) {
    std::uint64_t s = std::uint64_t{a} + b;
    return ElemId(s >= z->modulus ? s - z->modulus : s);
  }
  if (const auto* p = std::get_if<ProductProv>(&prov_)) {
    const std::size_t nb = p->right->size();
    return ElemId(p->left->add(ElemId(a / nb), ElemId(b / nb)) * nb +
                  p->right->add(ElemId(a % nb), ElemId(b % nb)));
  }
  if (const auto* g = std::get_if<GroupRingProv>(&prov_)) {
    const std::size_t n = g->group->order();
    const std::size_t asize = g->coeff->size();
    ElemId out = 0;
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      ElemId ca = ElemId((a / g->pow[i]) % asize);
      ElemId cb = ElemId((b / g->pow[i]) % asize);
      acc += std::uint64_t{g->coeff->add(ca, cb)} * g->pow[i];
    }
    out = ElemId(acc);
    return out;
  }
  if (const auto* q = std::get_if<QuotientProv>(&prov_)) {
    return q->to_rep[q->parent->add(q->reps[a], q->reps[b])];
  }
  throw std::logic_error("raw ring without tables");
}

ElemId FiniteRing::neg_impl(ElemId a) const {
  if (const auto* z = std::get_if<ZmodProv>(&prov_)) {
    return a == 0 ? 0 : ElemId(z->modulus - a);
  }
  if (const auto* p = std::get_if<ProductProv>(&prov_)) {
    const std::size_t nb = p->right->size();
    return ElemId(p->left->neg(ElemId(a / nb)) * nb +
                  p->right->neg(ElemId(a % nb)));
  }
  if (const auto* g = std::get_if<GroupRingProv>(&prov_)) {
    const std::size_t n = g->group->order();
    const std::size_t asize = g->coeff->size();
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      ElemId ca = ElemId((a / g->pow[i]) % asize);
      acc += std::uint64_t{g->coeff->neg(ca)} * g->pow[i];
    }
    return ElemId(acc);
  }
  if (const auto* q = std::get_if<QuotientProv>(&prov_)) {
    return q->to_rep[q->parent->neg(q->reps[a])];
  }
  throw std::logic_error("raw ring without tables");
}

ElemId FiniteRing::mul_impl(ElemId a, ElemId b) const {
  if (const auto* z = std::get_if<ZmodProv>(&prov_)) {
    return ElemId((std::uint64_t{a} * b) % z->modulus);
  }
  if (const auto* p = std::get_if<ProductProv>(&prov_)) {
    const std::size_t nb = p->right->size();
    return ElemId(p->left->mul(ElemId(a / nb), ElemId(b / nb)) * nb +
                  p->right->mul(ElemId(a % nb), ElemId(b % nb)));
  }
  if (const auto* g = std::get_if<GroupRingProv>(&prov_)) {
    const std::size_t n = g->group->order();
    const std::size_t asize = g->coeff->size();
    const FiniteRing& A = *g->coeff;
    const GroupTable& G = *g->group;
    std::array<ElemId, kGroupRingBasisCap> ca{}, cb{}, out{};
    for (std::size_t i = 0; i < n; ++i) {
      ca[i] = ElemId((a / g->pow[i]) % asize);
      cb[i] = ElemId((b / g->pow[i]) % asize);
    }
    out.fill(0);
    for (std::size_t i = 0; i < n; ++i) {
      if (ca[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (cb[j] == 0) continue;
        ElemId k = G.mul(ElemId(i), ElemId(j));
        out[k] = A.add(out[k], A.mul(ca[i], cb[j]));
      }
    }
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += std::uint64_t{out[i]} * g->pow[i];
    return ElemId(acc);
  }
  if (const auto* q = std::get_if<QuotientProv>(&prov_)) {
    return q->to_rep[q->parent->mul(q->reps[a], q->reps[b])];
  }
  throw std::logic_error("raw ring without tables");
}

ElemId FiniteRing::mul_memo(ElemId a, ElemId b) const {
  const std::uint64_t key = (std::uint64_t{a} << 32) | b;
  MemoShard& shard = memo_[unsigned((a * 2654435761u) ^ b) % kMemoShards];
  {
    std::shared_lock lock(shard.mutex);
    auto it = shard.map.find(key);
    if (it != shard.map.end()) return it->second;
  }
  ElemId v = mul_impl(a, b);
  if (memo_entries_.load(std::memory_order_relaxed) < kMemoEntryCap) {
    std::unique_lock lock(shard.mutex);
    if (shard.map.emplace(key, v).second)
      memo_entries_.fetch_add(1, std::memory_order_relaxed);
  }
  return v;
}

ElemId FiniteRing::int_mul(std::uint64_t k, ElemId a) const {
  if (characteristic_ > 0) k %= characteristic_;  // char * a = (char * 1) * a = 0
  ElemId res = 0, base = a;
  while (k) {
    if (k & 1) res = add(res, base);
    base = add(base, base);
    k >>= 1;
  }
  return res;
}

ElemId FiniteRing::pow(ElemId a, unsigned k) const {
  if (k == 0) return one();
  ElemId res = a;
  for (unsigned i = 1; i < k; ++i) res = mul(res, a);
  return res;
}

bool FiniteRing::is_unit(ElemId a) const {
  for (ElemId b = 0; b < size_; ++b)
    if (mul(a, b) == one_ && mul(b, a) == one_) return true;
  return false;
}

std::optional<unsigned> FiniteRing::nilpotency_index(ElemId a) const {
  std::unordered_set<ElemId> seen;
  ElemId p = a;
  unsigned k = 1;
  while (p != 0) {
    if (!seen.insert(p).second) return std::nullopt;  // cycled without hitting 0
    p = mul(p, a);
    ++k;
  }
  return k;
}

std::string FiniteRing::label(ElemId a) const {
  if (const auto* z = std::get_if<ZmodProv>(&prov_)) {
    (void)z;
    return std::to_string(a);
  }
  if (const auto* p = std::get_if<ProductProv>(&prov_)) {
    const std::size_t nb = p->right->size();
    return "(" + p->left->label(ElemId(a / nb)) + "," +
           p->right->label(ElemId(a % nb)) + ")";
  }
  if (const auto* g = std::get_if<GroupRingProv>(&prov_)) {
    const std::size_t n = g->group->order();
    const std::size_t asize = g->coeff->size();
    std::string out;
    for (std::size_t i = 0; i < n; ++i) {
      ElemId c = ElemId((a / g->pow[i]) % asize);
      if (c == 0) continue;
      std::string term;
      std::string glab = g->group->label(ElemId(i));
      if (i == g->group->identity()) {
        term = g->coeff->label(c);
      } else if (c == g->coeff->one()) {
        term = glab;
      } else {
        if (!glab.empty() && glab[0] == '-') glab = "(" + glab + ")";
        term = g->coeff->label(c) + "*" + glab;
      }
      if (!out.empty()) out += "+";
      out += term;
    }
    return out.empty() ? "0" : out;
  }
  if (const auto* q = std::get_if<QuotientProv>(&prov_)) {
    return "[" + q->parent->label(q->reps[a]) + "]";
  }
  return std::to_string(a);
}

namespace {

void structural_check(const FiniteRing& r) {
  for (ElemId a = 0; a < r.size(); ++a) {
    if (r.add(0, a) != a || r.add(a, 0) != a)
      throw std::logic_error("additive identity violated in " +
                             r.provenance_string());
    if (r.add(a, r.neg(a)) != 0)
      throw std::logic_error("negation violated in " + r.provenance_string());
    if (r.mul(r.one(), a) != a || r.mul(a, r.one()) != a)
      throw std::logic_error("multiplicative identity violated in " +
                             r.provenance_string());
  }
}

void sampled_law_check(const FiniteRing& r, std::uint64_t seed,
                       unsigned samples) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, r.size() - 1);
  for (unsigned i = 0; i < samples; ++i) {
    ElemId a = ElemId(dist(rng)), b = ElemId(dist(rng)), c = ElemId(dist(rng));
    if (r.add(a, b) != r.add(b, a) ||
        r.add(r.add(a, b), c) != r.add(a, r.add(b, c)) ||
        r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)) ||
        r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)) ||
        r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
      throw std::logic_error("ring law violated in " + r.provenance_string());
  }
}

}  // namespace

// Shared tail of every factory: characteristic, optional tables,
// commutativity, structural checks.
RingPtr finish_ring(std::unique_ptr<FiniteRing> r, const EngineLimits& limits) {
  FiniteRing& ring = *r;
  if (ring.size_ == 0) throw std::logic_error("empty ring");
  if (ring.size_ > limits.ring_size_cap)
    throw CapExceeded("ring size", ring.size_, limits.ring_size_cap);

  const bool raw = std::holds_alternative<RawProv>(ring.prov_);
  if (!ring.tabled_ && ring.size_ <= limits.table_cap) {
    std::vector<ElemId> add(ring.size_ * ring.size_);
    std::vector<ElemId> mul(ring.size_ * ring.size_);
    for (ElemId a = 0; a < ring.size_; ++a)
      for (ElemId b = 0; b < ring.size_; ++b) {
        add[std::size_t{a} * ring.size_ + b] = ring.add_impl(a, b);
        mul[std::size_t{a} * ring.size_ + b] = ring.mul_impl(a, b);
      }
    ring.add_ = std::move(add);
    ring.mul_ = std::move(mul);
    ring.neg_.resize(ring.size_);
    for (ElemId a = 0; a < ring.size_; ++a) ring.neg_[a] = ring.neg_impl(a);
    ring.tabled_ = true;
  }

  // Characteristic: additive order of 1.
  {
    std::uint64_t k = 1;
    ElemId acc = ring.one_;
    while (acc != 0) {
      acc = ring.add(acc, ring.one_);
      ++k;
      if (k > ring.size_ + 1) throw std::logic_error("characteristic overflow");
    }
    ring.characteristic_ = ring.size_ == 1 ? 1 : k;
  }

  // Pairwise-commuting multiplier generators make the whole ring
  // commutative: products of commuting elements commute, and multiplication
  // is Z-bilinear over their spans.
  ring.commutative_ = true;
  for (std::size_t i = 0; i < ring.mult_gens_.size() && ring.commutative_; ++i)
    for (std::size_t j = i + 1; j < ring.mult_gens_.size(); ++j)
      if (ring.mul(ring.mult_gens_[i], ring.mult_gens_[j]) !=
          ring.mul(ring.mult_gens_[j], ring.mult_gens_[i])) {
        ring.commutative_ = false;
        break;
      }

  if (!raw) {
    structural_check(ring);
    if (ring.size_ > 1)
      sampled_law_check(ring, limits.seed, kConstructionSamples);
  }
  return RingPtr(r.release());
}

RingPtr make_zmod(std::uint64_t n, const EngineLimits& limits) {
  if (n < 2) throw std::invalid_argument("modulus must be >= 2");
  if (n > limits.ring_size_cap)
    throw CapExceeded("ring size", n, limits.ring_size_cap);
  std::unique_ptr<FiniteRing> r(new FiniteRing);
  r->size_ = n;
  r->one_ = 1;
  r->prov_ = ZmodProv{n};
  r->name_ = "Z" + std::to_string(n);
  r->add_gens_ = {1};
  r->mult_gens_ = {1};
  return finish_ring(std::move(r), limits);
}

RingPtr make_product_ring(RingPtr a, RingPtr b, const EngineLimits& limits) {
  const std::size_t nb = b->size();
  if (a->size() > limits.ring_size_cap / nb)
    throw CapExceeded("ring size", a->size() * nb, limits.ring_size_cap);
  const std::size_t size = a->size() * nb;
  std::unique_ptr<FiniteRing> r(new FiniteRing);
  r->size_ = size;
  r->one_ = ElemId(a->one() * nb + b->one());
  r->name_ = a->provenance_string() + " x " + b->provenance_string();
  for (ElemId g : a->additive_generators()) r->add_gens_.push_back(ElemId(g * nb));
  for (ElemId g : b->additive_generators()) r->add_gens_.push_back(g);
  for (ElemId g : a->multiplier_generators())
    r->mult_gens_.push_back(ElemId(g * nb));
  for (ElemId g : b->multiplier_generators()) r->mult_gens_.push_back(g);
  r->prov_ = ProductProv{std::move(a), std::move(b)};
  return finish_ring(std::move(r), limits);
}

RingPtr make_group_ring(RingPtr coeff, GroupPtr group,
                        const EngineLimits& limits) {
  const std::size_t n = group->order();
  if (n > kGroupRingBasisCap)
    throw CapExceeded("group ring basis", n, kGroupRingBasisCap);
  if (n > limits.group_order_cap)
    throw CapExceeded("group order", n, limits.group_order_cap);
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    size *= coeff->size();
    if (size > limits.ring_size_cap)
      throw CapExceeded("ring size", size, limits.ring_size_cap);
  }
  GroupRingProv prov;
  prov.pow.resize(n);
  std::uint64_t p = 1;
  for (std::size_t i = n; i-- > 0;) {
    prov.pow[i] = p;
    p *= coeff->size();
  }
  std::unique_ptr<FiniteRing> r(new FiniteRing);
  r->size_ = std::size_t(size);
  r->one_ = ElemId(std::uint64_t{coeff->one()} * prov.pow[0]);
  r->name_ = coeff->provenance_string() + "[" + group->name() + "]";
  for (ElemId a : coeff->additive_generators())
    for (ElemId g = 0; g < n; ++g)
      r->add_gens_.push_back(ElemId(std::uint64_t{a} * prov.pow[g]));
  for (ElemId m : coeff->multiplier_generators())
    r->mult_gens_.push_back(ElemId(std::uint64_t{m} * prov.pow[0]));
  for (ElemId g = 1; g < n; ++g)
    r->mult_gens_.push_back(ElemId(std::uint64_t{coeff->one()} * prov.pow[g]));
  prov.coeff = std::move(coeff);
  prov.group = std::move(group);
  r->prov_ = std::move(prov);
  return finish_ring(std::move(r), limits);
}

RingPtr make_quotient_ring(RingPtr parent, const std::vector<ElemId>& members,
                           std::vector<ElemId> gens,
                           const EngineLimits& limits) {
  if (members.empty() || members[0] != 0 ||
      !std::is_sorted(members.begin(), members.end()))
    throw std::invalid_argument("quotient modulus must be sorted and contain 0");
  QuotientProv prov;
  prov.parent = parent;
  prov.modulus_gens = std::move(gens);
  prov.modulus_size = members.size();
  prov.to_rep.assign(parent->size(), ElemId(-1));
  for (ElemId x = 0; x < parent->size(); ++x) {
    if (prov.to_rep[x] != ElemId(-1)) continue;
    ElemId idx = ElemId(prov.reps.size());
    prov.reps.push_back(x);
    for (ElemId m : members) {
      ElemId y = parent->add(x, m);
      if (prov.to_rep[y] != ElemId(-1) && prov.to_rep[y] != idx)
        throw std::invalid_argument("modulus is not an additive subgroup");
      prov.to_rep[y] = idx;
    }
  }

  std::unique_ptr<FiniteRing> r(new FiniteRing);
  r->size_ = prov.reps.size();
  r->one_ = prov.to_rep[parent->one()];
  r->name_ = parent->provenance_string() + "/{" +
             std::to_string(members.size()) + "}";
  std::set<ElemId> agens, mgens;
  for (ElemId g : parent->additive_generators()) {
    ElemId im = prov.to_rep[g];
    if (im != 0) agens.insert(im);
  }
  if (agens.empty()) agens.insert(0);
  for (ElemId g : parent->multiplier_generators()) mgens.insert(prov.to_rep[g]);
  r->add_gens_.assign(agens.begin(), agens.end());
  r->mult_gens_.assign(mgens.begin(), mgens.end());
  r->prov_ = std::move(prov);
  return finish_ring(std::move(r), limits);
}

RingPtr make_ring_from_tables(std::string name, std::vector<ElemId> add,
                              std::vector<ElemId> mul, ElemId one,
                              const EngineLimits& limits) {
  std::unique_ptr<FiniteRing> r(new FiniteRing);
  std::size_t size = 0;
  while (size * size < add.size()) ++size;
  if (size * size != add.size() || add.size() != mul.size() || size == 0)
    throw std::invalid_argument("tables must be square and equally sized");
  r->size_ = size;
  r->one_ = one;
  r->name_ = std::move(name);
  r->prov_ = RawProv{r->name_};
  r->add_ = std::move(add);
  r->mul_ = std::move(mul);
  r->tabled_ = true;
  r->neg_.assign(size, ElemId(-1));
  for (ElemId a = 0; a < size; ++a)
    for (ElemId b = 0; b < size; ++b)
      if (r->add_[std::size_t{a} * size + b] == 0) r->neg_[a] = b;
  for (ElemId a = 0; a < size; ++a)
    if (r->neg_[a] == ElemId(-1))
      throw std::invalid_argument("additive table has no negatives");
  for (ElemId a = 0; a < size; ++a) {
    if (a != 0) r->add_gens_.push_back(a);
    r->mult_gens_.push_back(a);
  }
  return finish_ring(std::move(r), limits);
}

ElemId GroupRingContext::encode(std::span<const ElemId> coeffs) const {
  const auto& prov = std::get<GroupRingProv>(ring->provenance());
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    acc += std::uint64_t{coeffs[i]} * prov.pow[i];
  return ElemId(acc);
}

void GroupRingContext::decode(ElemId x, std::span<ElemId> out) const {
  const auto& prov = std::get<GroupRingProv>(ring->provenance());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = ElemId((x / prov.pow[i]) % coeff->size());
}

ElemId GroupRingContext::coeff_of(ElemId x, ElemId g) const {
  const auto& prov = std::get<GroupRingProv>(ring->provenance());
  return ElemId((x / prov.pow[g]) % coeff->size());
}

ElemId GroupRingContext::basis_elem(ElemId a, ElemId g) const {
  const auto& prov = std::get<GroupRingProv>(ring->provenance());
  return ElemId(std::uint64_t{a} * prov.pow[g]);
}

std::optional<GroupRingContext> group_ring_context(const RingPtr& r) {
  const auto* prov = std::get_if<GroupRingProv>(&r->provenance());
  if (!prov) return std::nullopt;
  return GroupRingContext{r, prov->coeff, prov->group};
}

ValidationReport validate_ring_axioms(const FiniteRing& r,
                                      const EngineLimits& limits) {
  ValidationReport report;
  auto fail = [&](const char* law, ElemId a, ElemId b, ElemId c) {
    report.pass = false;
    report.failure = std::string(law) + " at (" + std::to_string(a) + "," +
                     std::to_string(b) + "," + std::to_string(c) + ")";
  };
  auto check_triple = [&](ElemId a, ElemId b, ElemId c) {
    ++report.checked;
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) {
      fail("additive associativity", a, b, c);
      return false;
    }
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) {
      fail("multiplicative associativity", a, b, c);
      return false;
    }
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) {
      fail("left distributivity", a, b, c);
      return false;
    }
    if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) {
      fail("right distributivity", a, b, c);
      return false;
    }
    return true;
  };

  for (ElemId a = 0; a < r.size() && report.pass; ++a) {
    if (r.add(0, a) != a) fail("additive identity", 0, a, 0);
    else if (r.add(a, r.neg(a)) != 0) fail("negation", a, 0, 0);
    else if (r.mul(r.one(), a) != a || r.mul(a, r.one()) != a)
      fail("multiplicative identity", a, 0, 0);
  }
  for (ElemId a = 0; a < r.size() && report.pass; ++a)
    for (ElemId b = a; b < r.size(); ++b)
      if (r.add(a, b) != r.add(b, a)) {
        fail("additive commutativity", a, b, 0);
        break;
      }
  if (!report.pass) return report;

  if (r.size() <= limits.axiom_exhaustive_cap) {
    report.mode = "exhaustive";
    for (ElemId a = 0; a < r.size(); ++a) {
      limits.poll();
      for (ElemId b = 0; b < r.size(); ++b)
        for (ElemId c = 0; c < r.size(); ++c)
          if (!check_triple(a, b, c)) return report;
    }
  } else {
    report.mode = "sampled";
    std::mt19937_64 rng(limits.seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, r.size() - 1);
    for (std::size_t i = 0; i < limits.axiom_sample_count; ++i)
      if (!check_triple(ElemId(dist(rng)), ElemId(dist(rng)),
                        ElemId(dist(rng))))
        return report;
  }
  return report;
}

}  // namespace gring
