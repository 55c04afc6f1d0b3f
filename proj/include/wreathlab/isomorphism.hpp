#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wreathlab/group.hpp"

namespace wreathlab {

struct SearchOptions {
  /// Maximum number of candidate generator images tried before giving up
  /// with SearchBudgetExceeded.
  std::uint64_t node_budget = 10'000'000;
};

/// An isomorphism a -> b if one exists. Screens cheap invariants (order,
/// abelianness, element-order multiset, center size) and then backtracks over
/// images of a greedy generating set.
/// Throws SearchBudgetExceeded when the node budget runs out.
std::optional<GroupHom> are_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                                       const SearchOptions& options = {});

/// An injective homomorphism a -> b if one exists.
/// Throws SearchBudgetExceeded when the node budget runs out.
std::optional<GroupHom> embeds_into(const FiniteGroup& a, const FiniteGroup& b,
                                    const SearchOptions& options = {});

/// Name from the small-group catalog ("C:n", "S:n", "A:n", "D:n", "Q8",
/// "C:2 × C:2", ...) or "unidentified(order=n)". Requires order <= 64.
std::string identify_small(const FiniteGroup& g);

/// x^4 = y^2 = e, y x y^-1 = x^-1, and <x, y> = g.
bool check_presentation_d4(const FiniteGroup& g, Element x, Element y);

}  // namespace wreathlab
