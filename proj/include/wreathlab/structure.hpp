#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "wreathlab/group.hpp"

namespace wreathlab {

/// Builds a named group from a spec string:
///   C:n (n >= 1), D:n (n >= 2, order 2n), S:n (1 <= n <= 6), A:n (2 <= n <= 6),
///   AGL:p (p prime <= 7), V4, Q8, and direct products joined by "×" or "x".
///
/// Enumerations are fixed: C:n by exponent; D:n as r^a s^b with a major;
/// S:n and A:n by lexicographic one-line notation; AGL:p as t -> at+b with a
/// major. Permutation groups (S, A, AGL, D for n >= 3, V4) carry one-line
/// permutation data for their natural action.
FiniteGroup construct_named(std::string_view spec);

/// Componentwise product; element (i, j) has index i * |b| + j.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           std::uint64_t size_cap = kDefaultSizeCap);

/// Closure of `gens` under multiplication, members in increasing parent order.
Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> gens);

/// Wraps an element set already known to be closed under multiplication.
Subgroup subgroup_from_elements(const FiniteGroup& g, std::vector<Element> elements);

bool is_normal(const FiniteGroup& g, const Subgroup& h);

/// Largest normal subgroup of g inside h: the intersection of all conjugates.
Subgroup normal_core(const FiniteGroup& g, const Subgroup& h);

Subgroup center(const FiniteGroup& g);

struct Quotient {
  FiniteGroup group;
  GroupHom projection;
  /// Minimal-index member of each coset, indexed by quotient element.
  std::vector<Element> representatives;
};

/// Coset group g/n. Throws NonNormalSubgroup if n is not normal.
Quotient quotient(const FiniteGroup& g, const Subgroup& n);

/// Least k >= 1 with x^k = e.
std::uint64_t element_order(const FiniteGroup& g, Element x);
std::vector<std::uint32_t> element_orders(const FiniteGroup& g);

/// Greedy small generating set: repeatedly adds the element that enlarges
/// the generated subgroup the most (ties to the smaller index).
std::vector<Element> greedy_generators(const FiniteGroup& g);

/// Conjugacy class id of every element; classes numbered by their minimal
/// member.
std::vector<std::uint32_t> conjugacy_classes(const FiniteGroup& g);

}  // namespace wreathlab
