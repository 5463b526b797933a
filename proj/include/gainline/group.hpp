#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gainline {

/// An element of a FiniteGroup, identified by its index in the group's element list.
/// Index 0 is always the identity.
struct Element {
  std::uint32_t id = 0;

  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t i) : id(i) {}

  friend constexpr auto operator<=>(Element, Element) = default;
};

inline constexpr Element kIdentity{0};

/// A central element s with s*s = 1. Only FiniteGroup can mint these.
class CentralWeakInvolution {
 public:
  Element element() const { return element_; }
  operator Element() const { return element_; }

  friend bool operator==(CentralWeakInvolution, CentralWeakInvolution) = default;

 private:
  friend class FiniteGroup;
  explicit CentralWeakInvolution(Element e) : element_(e) {}
  Element element_;
};

enum class GroupFamily { Cyclic, Sign, T4, Dihedral, Quaternion8, DirectProduct, Custom };

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group stored as its full multiplication table.
///
/// Construction validates the table: identity at index 0, every row and column a
/// permutation, and associativity (exhaustive up to order 64, 10,000 random triples
/// above). Instances are immutable.
class FiniteGroup {
 public:
  static constexpr std::size_t kMaxOrder = 512;
  static constexpr std::size_t kExhaustiveAssociativityLimit = 64;

  /// Validating constructor for an arbitrary table; rows are indexed by the left factor.
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<std::uint32_t>> table,
              GroupFamily family = GroupFamily::Custom, std::string name = "custom");

  static GroupPtr cyclic(std::size_t n);
  static GroupPtr sign();
  static GroupPtr t4();
  static GroupPtr dihedral(std::size_t n);
  static GroupPtr quaternion8();
  static GroupPtr trivial() { return cyclic(1); }
  static GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
  static GroupPtr custom(std::vector<std::string> labels,
                         std::vector<std::vector<std::uint32_t>> table);

  std::size_t order() const { return labels_.size(); }
  GroupFamily family() const { return family_; }
  const std::string& name() const { return name_; }

  // Parameters of the built-in family (n for cyclic/dihedral, factors for products).
  std::size_t family_parameter() const { return family_parameter_; }
  const std::vector<GroupPtr>& factors() const { return factors_; }

  Element identity() const { return kIdentity; }
  Element multiply(Element g, Element h) const;
  Element inverse(Element g) const;
  Element power(Element g, long long exponent) const;
  /// Ordered product of a sequence of elements; identity for an empty sequence.
  Element product(const std::vector<Element>& elements) const;

  const std::string& label(Element g) const;
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> find(const std::string& label) const;
  /// Like find() but throws InputError naming the unknown label.
  Element parse(const std::string& label) const;

  bool contains(Element g) const { return g.id < order(); }
  bool commutes(Element g, Element h) const;
  bool is_abelian() const;
  std::size_t element_order(Element g) const;

  std::vector<Element> center() const;
  std::vector<CentralWeakInvolution> central_weak_involutions() const;
  /// Checks that g is central with g^2 = 1 and wraps it; ValidationError otherwise.
  CentralWeakInvolution central_weak_involution(Element g) const;
  CentralWeakInvolution identity_involution() const { return CentralWeakInvolution(kIdentity); }

  std::vector<Element> elements() const;
  /// Smallest subgroup containing the given elements.
  std::vector<Element> generated_subgroup(const std::vector<Element>& generators) const;

  const std::vector<std::uint32_t>& table() const { return mult_; }

  /// Same labels and same multiplication table.
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);

 private:
  void check(Element g) const;
  void validate();

  std::vector<std::string> labels_;
  std::vector<std::uint32_t> mult_;  // row-major order*order
  std::vector<std::uint32_t> inv_;
  GroupFamily family_;
  std::string name_;
  std::size_t family_parameter_ = 0;
  std::vector<GroupPtr> factors_;
};

/// Pointer-equal or structurally equal groups.
bool same_group(const GroupPtr& a, const GroupPtr& b);

}  // namespace gainline
