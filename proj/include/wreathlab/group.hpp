#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wreathlab {

/// Index of a group element in its group's canonical enumeration.
using Element = std::uint32_t;

inline constexpr std::uint64_t kDefaultSizeCap = 10'000'000;

/// Groups up to this order keep a full Cayley table; larger ones multiply by
/// rule.
inline constexpr std::size_t kDenseTableLimit = 2048;

/// Exhaustive associativity checks run on construction up to this order.
inline constexpr std::size_t kAssociativityCheckLimit = 512;

/// One-line permutation data for every element of a group acting faithfully
/// on the points 0..degree-1. images[x * degree + i] is the image of i under x.
struct PermutationData {
  std::size_t degree = 0;
  std::vector<std::uint16_t> images;

  std::span<const std::uint16_t> of(Element x) const {
    return {images.data() + static_cast<std::size_t>(x) * degree, degree};
  }
};

/// First structural defect found in a raw multiplication table.
struct TableDefect {
  std::string property;            // "closure", "identity", "inverse", "associativity"
  std::vector<Element> witness;    // offending element indices
  std::string message;
};

/// Checks closure, identity, two-sided inverses and (for order <= 512)
/// associativity of a row-major table. Returns the first defect, if any.
std::optional<TableDefect> find_table_defect(std::size_t order, Element identity,
                                             std::span<const Element> table);

/// A finite group with canonical element indices 0..order-1.
///
/// FiniteGroup is a cheap-to-copy immutable handle; copies share the same
/// underlying tables, and `same_as` tests whether two handles refer to the
/// same constructed group (not merely an isomorphic one).
class FiniteGroup {
 public:
  using MulFn = std::function<Element(Element, Element)>;
  using LabelFn = std::function<std::string(Element)>;

  /// The trivial group.
  FiniteGroup();

  /// Validates every invariant (closure, identity, inverses, associativity up
  /// to order 512) and throws InvariantError on the first violation.
  static FiniteGroup from_table(std::size_t order, Element identity,
                                std::vector<Element> table,
                                std::vector<std::string> labels = {});

  /// Builds a group whose product is given by a rule that is associative by
  /// construction. Groups of order <= kDenseTableLimit are materialized into a
  /// table and validated like `from_table`; larger ones only get their
  /// identity and inverse data checked.
  static FiniteGroup from_rule(std::size_t order, Element identity, MulFn mul,
                               std::vector<Element> inverses, LabelFn labels = {});

  /// Attaches one-line permutation data; throws if it is not a faithful
  /// homomorphic image consistent with the multiplication.
  FiniteGroup with_permutations(PermutationData perms) const;

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }

  Element mul(Element a, Element b) const {
    if (table_ != nullptr) return table_[static_cast<std::size_t>(a) * order_ + b];
    return slow_mul(a, b);
  }
  Element inverse(Element a) const;
  /// g x g^-1
  Element conjugate(Element g, Element x) const { return mul(mul(g, x), inverse(g)); }
  Element power(Element x, std::int64_t k) const;

  std::string label(Element x) const;
  bool has_labels() const;
  /// Element whose label is exactly `text`.
  std::optional<Element> find_label(std::string_view text) const;

  const PermutationData* permutations() const;

  bool is_dense() const noexcept { return table_ != nullptr; }
  bool is_abelian() const;
  bool same_as(const FiniteGroup& other) const noexcept { return impl_ == other.impl_; }

  /// Full row-major Cayley table (computed on demand for rule groups).
  std::vector<Element> table() const;

 private:
  struct Impl;
  explicit FiniteGroup(std::shared_ptr<const Impl> impl);
  Element slow_mul(Element a, Element b) const;

  std::shared_ptr<const Impl> impl_;
  const Element* table_ = nullptr;
  std::size_t order_ = 1;
  Element identity_ = 0;
};

/// A total map between two groups recorded element by element. Construction
/// only checks shapes; the homomorphism law is checked by `find_violation`.
class GroupHom {
 public:
  GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<Element> image);

  static GroupHom identity(const FiniteGroup& g);

  const FiniteGroup& domain() const noexcept { return domain_; }
  const FiniteGroup& codomain() const noexcept { return codomain_; }
  Element operator()(Element x) const { return image_[x]; }
  std::span<const Element> images() const noexcept { return image_; }

  /// First pair (a, b) in lexicographic order with
  /// image(ab) != image(a) image(b); also reports a non-identity image of the
  /// identity as the pair (e, e).
  std::optional<std::pair<Element, Element>> find_violation() const;
  bool is_homomorphism() const { return !find_violation().has_value(); }
  bool is_injective() const;
  bool is_surjective() const;

  /// Sorted distinct image elements.
  std::vector<Element> image_elements() const;
  /// Sorted preimage of the codomain identity.
  std::vector<Element> kernel() const;

  /// next ∘ this
  GroupHom then(const GroupHom& next) const;
  /// Inverse map of a bijection; throws NotIsomorphism otherwise.
  GroupHom inverse() const;

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.domain_.same_as(b.domain_) && a.codomain_.same_as(b.codomain_) &&
           a.image_ == b.image_;
  }

 private:
  FiniteGroup domain_;
  FiniteGroup codomain_;
  std::vector<Element> image_;
};

/// A right inverse of a surjection, recorded pointwise: choice[q] lies over q.
/// Not required to be a homomorphism.
struct Section {
  FiniteGroup target;
  std::vector<Element> choice;

  Element operator()(std::size_t q) const { return choice[q]; }
  std::size_t size() const noexcept { return choice.size(); }
};

/// A subgroup realized as its own FiniteGroup together with the inclusion.
struct Subgroup {
  FiniteGroup group;
  GroupHom inclusion;

  std::size_t order() const noexcept { return group.order(); }
  /// Sorted parent indices of the members.
  std::span<const Element> elements() const { return inclusion.images(); }
  /// Membership mask over the parent group.
  std::vector<bool> mask() const;
  /// Index inside `group` of a parent element, if it is a member.
  std::optional<Element> locate(Element parent_element) const;
};

}  // namespace wreathlab
