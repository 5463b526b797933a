#include "gainline/group.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "gainline/error.hpp"

namespace gainline {

FiniteGroup::FiniteGroup(std::vector<std::string> labels,
                         std::vector<std::vector<std::uint32_t>> table, GroupFamily family,
                         std::string name)
    : labels_(std::move(labels)), family_(family), name_(std::move(name)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw ValidationError("group must have at least one element");
  if (n > kMaxOrder)
    throw ValidationError("group order " + std::to_string(n) + " exceeds the limit of " +
                          std::to_string(kMaxOrder));
  if (table.size() != n) throw ValidationError("multiplication table must have one row per label");
  mult_.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw ValidationError("multiplication table must be square");
    for (auto v : row) {
      if (v >= n) throw ValidationError("multiplication table entry out of range");
      mult_.push_back(v);
    }
  }
  validate();
}

void FiniteGroup::validate() {
  const std::size_t n = order();

  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (labels_[i].empty()) throw ValidationError("element labels must be non-empty");
    if (!seen.emplace(labels_[i], i).second)
      throw ValidationError("duplicate element label \"" + labels_[i] + "\"");
  }

  for (std::size_t g = 0; g < n; ++g) {
    if (mult_[g] != g || mult_[g * n] != g)
      throw ValidationError("element 0 must be the identity");
  }

  // Latin square: each row and column is a permutation.
  std::vector<char> hit(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(hit.begin(), hit.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (hit[mult_[r * n + c]]++) throw ValidationError("multiplication table is not a Latin square");
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(hit.begin(), hit.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      if (hit[mult_[r * n + c]]++) throw ValidationError("multiplication table is not a Latin square");
    }
  }

  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    return mult_[mult_[a * n + b] * n + c] == mult_[a * n + mult_[b * n + c]];
  };
  if (n <= kExhaustiveAssociativityLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw ValidationError("multiplication table is not associative");
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int t = 0; t < 10000; ++t)
      if (!assoc(pick(rng), pick(rng), pick(rng)))
        throw ValidationError("multiplication table is not associative");
  }

  inv_.assign(n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (mult_[g * n + h] == 0) {
        inv_[g] = static_cast<std::uint32_t>(h);
        break;
      }
    }
  }
}

void FiniteGroup::check(Element g) const {
  if (!contains(g))
    throw StructuralError("element index " + std::to_string(g.id) + " out of range for group of order " +
                          std::to_string(order()));
}

Element FiniteGroup::multiply(Element g, Element h) const {
  check(g);
  check(h);
  return Element(mult_[g.id * order() + h.id]);
}

Element FiniteGroup::inverse(Element g) const {
  check(g);
  return Element(inv_[g.id]);
}

Element FiniteGroup::power(Element g, long long exponent) const {
  check(g);
  Element base = exponent < 0 ? inverse(g) : g;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                      : static_cast<unsigned long long>(exponent);
  Element result = kIdentity;
  while (e) {
    if (e & 1ULL) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return result;
}

Element FiniteGroup::product(const std::vector<Element>& elements) const {
  Element acc = kIdentity;
  for (auto e : elements) acc = multiply(acc, e);
  return acc;
}

const std::string& FiniteGroup::label(Element g) const {
  check(g);
  return labels_[g.id];
}

std::optional<Element> FiniteGroup::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return Element(static_cast<std::uint32_t>(it - labels_.begin()));
}

Element FiniteGroup::parse(const std::string& label) const {
  if (auto e = find(label)) return *e;
  throw InputError("unknown element label \"" + label + "\" in group " + name_);
}

bool FiniteGroup::commutes(Element g, Element h) const { return multiply(g, h) == multiply(h, g); }

bool FiniteGroup::is_abelian() const { return center().size() == order(); }

std::size_t FiniteGroup::element_order(Element g) const {
  check(g);
  std::size_t k = 1;
  for (Element x = g; x != kIdentity; x = multiply(x, g)) ++k;
  return k;
}

std::vector<Element> FiniteGroup::elements() const {
  std::vector<Element> out;
  out.reserve(order());
  for (std::uint32_t i = 0; i < order(); ++i) out.emplace_back(i);
  return out;
}

std::vector<Element> FiniteGroup::center() const {
  const std::size_t n = order();
  std::vector<Element> out;
  for (std::size_t g = 0; g < n; ++g) {
    bool central = true;
    for (std::size_t h = 0; h < n && central; ++h)
      central = mult_[g * n + h] == mult_[h * n + g];
    if (central) out.emplace_back(static_cast<std::uint32_t>(g));
  }
  return out;
}

std::vector<CentralWeakInvolution> FiniteGroup::central_weak_involutions() const {
  std::vector<CentralWeakInvolution> out;
  for (auto z : center())
    if (multiply(z, z) == kIdentity) out.push_back(CentralWeakInvolution(z));
  return out;
}

CentralWeakInvolution FiniteGroup::central_weak_involution(Element g) const {
  check(g);
  if (multiply(g, g) != kIdentity)
    throw ValidationError("element " + label(g) + " is not a weak involution (g^2 != 1)");
  for (std::uint32_t h = 0; h < order(); ++h)
    if (!commutes(g, Element(h))) throw ValidationError("element " + label(g) + " is not central");
  return CentralWeakInvolution(g);
}

std::vector<Element> FiniteGroup::generated_subgroup(const std::vector<Element>& generators) const {
  std::vector<char> in(order(), 0);
  std::vector<Element> members{kIdentity};
  in[0] = 1;
  // Closure under right multiplication by generators suffices in a finite group.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto gen : generators) {
      Element x = multiply(members[i], gen);
      if (!in[x.id]) {
        in[x.id] = 1;
        members.push_back(x);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
  return a.labels_ == b.labels_ && a.mult_ == b.mult_;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------------------
// Built-in families

GroupPtr FiniteGroup::cyclic(std::size_t n) {
  if (n == 0 || n > kMaxOrder) throw ValidationError("cyclic group order out of range");
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<std::uint32_t>((a + b) % n);
  }
  auto g = std::make_shared<FiniteGroup>(std::move(labels), std::move(table), GroupFamily::Cyclic,
                                         "cyclic(" + std::to_string(n) + ")");
  g->family_parameter_ = n;
  return g;
}

GroupPtr FiniteGroup::sign() {
  auto g = std::make_shared<FiniteGroup>(std::vector<std::string>{"1", "-1"},
                                         std::vector<std::vector<std::uint32_t>>{{0, 1}, {1, 0}},
                                         GroupFamily::Sign, "sign");
  g->family_parameter_ = 2;
  return g;
}

GroupPtr FiniteGroup::t4() {
  // Index a stands for i^a.
  std::vector<std::vector<std::uint32_t>> table(4, std::vector<std::uint32_t>(4));
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) table[a][b] = (a + b) % 4;
  auto g = std::make_shared<FiniteGroup>(std::vector<std::string>{"1", "i", "-1", "-i"},
                                         std::move(table), GroupFamily::T4, "t4");
  g->family_parameter_ = 4;
  return g;
}

GroupPtr FiniteGroup::dihedral(std::size_t n) {
  if (n < 1 || 2 * n > kMaxOrder) throw ValidationError("dihedral parameter out of range");
  // Index a < n is the rotation r^a; index n + a is the reflection r^a s.
  // (r^a s^x)(r^b s^y) = r^(a + (-1)^x b) s^(x + y).
  const std::size_t order = 2 * n;
  std::vector<std::string> labels(order);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = a == 0 ? "1" : "r" + std::to_string(a);
    labels[n + a] = a == 0 ? "s" : "r" + std::to_string(a) + "s";
  }
  std::vector<std::vector<std::uint32_t>> table(order, std::vector<std::uint32_t>(order));
  for (std::size_t p = 0; p < order; ++p) {
    for (std::size_t q = 0; q < order; ++q) {
      std::size_t a = p % n, x = p / n, b = q % n, y = q / n;
      std::size_t rot = x == 0 ? (a + b) % n : (a + n - b) % n;
      table[p][q] = static_cast<std::uint32_t>(((x + y) % 2) * n + rot);
    }
  }
  auto g = std::make_shared<FiniteGroup>(std::move(labels), std::move(table), GroupFamily::Dihedral,
                                         "dihedral(" + std::to_string(n) + ")");
  g->family_parameter_ = n;
  return g;
}

GroupPtr FiniteGroup::quaternion8() {
  // Index 2u + t is (-1)^t times unit u, with units 1, i, j, k.
  // Unit products: u*v = sign * w.
  static constexpr int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<std::uint32_t>> table(8, std::vector<std::uint32_t>(8));
  for (int p = 0; p < 8; ++p) {
    for (int q = 0; q < 8; ++q) {
      int u = p / 2, v = q / 2;
      int t = (p % 2 + q % 2 + unit_sign[u][v]) % 2;
      table[p][q] = static_cast<std::uint32_t>(2 * unit_prod[u][v] + t);
    }
  }
  return std::make_shared<FiniteGroup>(
      std::vector<std::string>{"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, std::move(table),
      GroupFamily::Quaternion8, "quaternion8");
}

GroupPtr FiniteGroup::direct_product(const GroupPtr& a, const GroupPtr& b) {
  if (!a || !b) throw StructuralError("direct_product needs two groups");
  const std::size_t na = a->order(), nb = b->order();
  if (na * nb > kMaxOrder) throw ValidationError("direct product exceeds the order limit");
  // Index x * nb + y is the pair (x, y).
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y)
      labels.push_back("(" + a->labels_[x] + "," + b->labels_[y] + ")");
  std::vector<std::vector<std::uint32_t>> table(na * nb, std::vector<std::uint32_t>(na * nb));
  for (std::size_t p = 0; p < na * nb; ++p)
    for (std::size_t q = 0; q < na * nb; ++q) {
      auto x = a->mult_[(p / nb) * na + q / nb];
      auto y = b->mult_[(p % nb) * nb + q % nb];
      table[p][q] = static_cast<std::uint32_t>(x * nb + y);
    }
  auto g = std::make_shared<FiniteGroup>(std::move(labels), std::move(table),
                                         GroupFamily::DirectProduct,
                                         "direct_product(" + a->name() + "," + b->name() + ")");
  g->factors_ = {a, b};
  return g;
}

GroupPtr FiniteGroup::custom(std::vector<std::string> labels,
                             std::vector<std::vector<std::uint32_t>> table) {
  return std::make_shared<FiniteGroup>(std::move(labels), std::move(table));
}

}  // namespace gainline
