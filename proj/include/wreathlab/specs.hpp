#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "wreathlab/action.hpp"
#include "wreathlab/fields.hpp"
#include "wreathlab/group.hpp"

namespace wreathlab {

/// A named group (see construct_named) or "file:path" to a group JSON.
FiniteGroup parse_group(const std::string& spec);

/// An element by label, falling back to a bare index. Throws ParseError.
Element parse_element(const FiniteGroup& g, const std::string& token);

/// Subgroup specs:
///   stab:i      stabilizer of point i (1-based) in the natural action
///   gens:a,b,.. subgroup generated by labels or indices
///   center, trivial, whole
///   any named group spec, e.g. A:3 or V4: the first subgroup isomorphic to
///   it among the one- and two-generated subgroups, normal ones first, then
///   by smallest sorted member list.
Subgroup parse_subgroup(const FiniteGroup& g, const std::string& spec);

/// Distinct subgroups generated by at most two elements, sorted by order and
/// then by member list.
std::vector<Subgroup> two_generated_subgroups(const FiniteGroup& g);

/// "q:g,q:g,..." with labels or indices of the quotient and the group.
std::vector<std::pair<Element, Element>> parse_section_overrides(const FiniteGroup& q, const FiniteGroup& g,
                                                                 const std::string& spec);

/// regular | natural:n | cosets:<subgroup spec> | file:path (action JSON).
/// For file:, the file's group must have the same table as h.
FiniteGSet parse_omega(const FiniteGroup& h, const std::string& mode);

/// Permutation groups listing the same permutations; the matching
/// isomorphism a -> b. Throws InvariantError otherwise.
GroupHom match_permutations(const FiniteGroup& a, const FiniteGroup& b);

/// "--field 5,7 --K 5 --alpha 7"
QuadraticTower parse_tower(const std::string& field, const std::string& k_generators, const std::string& alpha);

/// Comma-separated 64-bit integers. Throws ParseError naming the position.
std::vector<std::int64_t> parse_int_list(const std::string& text);

}  // namespace wreathlab
