#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "wreathlab/action.hpp"
#include "wreathlab/group.hpp"
#include "wreathlab/isomorphism.hpp"
#include "wreathlab/structure.hpp"
#include "wreathlab/wreath.hpp"

namespace wreathlab {

/// 1 -> N --iota--> G --eps--> Q -> 1
class ShortExactSequence {
 public:
  /// Checks iota injective, eps surjective, both homomorphisms, and
  /// image(iota) = kernel(eps). Throws InvariantError otherwise.
  ShortExactSequence(GroupHom iota, GroupHom eps);

  /// N -> G -> G/N for a normal subgroup N.
  static ShortExactSequence from_normal(const FiniteGroup& g, const Subgroup& n);

  const GroupHom& iota() const noexcept { return iota_; }
  const GroupHom& eps() const noexcept { return eps_; }
  const FiniteGroup& n() const noexcept { return iota_.domain(); }
  const FiniteGroup& g() const noexcept { return iota_.codomain(); }
  const FiniteGroup& q() const noexcept { return eps_.codomain(); }
  /// Preimage under iota, if x lies in its image.
  std::optional<Element> pull_back(Element x) const;

 private:
  GroupHom iota_;
  GroupHom eps_;
  std::vector<Element> preimage_;
};

struct EmbeddingReport {
  bool is_homomorphism = false;
  bool is_injective = false;
  std::size_t image_order = 0;
  std::size_t wreath_order = 0;
  bool image_is_full = false;
  std::optional<std::pair<Element, Element>> counterexample;

  nlohmann::ordered_json to_json() const;
};

/// Exhaustive hom-law check over all domain pairs, plus injectivity and
/// fullness of the image.
EmbeddingReport verify_embedding(const GroupHom& phi);

/// Minimal-index preimage of every q, except that e_Q maps to e_G; then
/// `overrides` (pairs q -> g) replace individual choices.
/// Throws NotSurjective, or SectionMismatch if an override is not over q.
Section default_section(const GroupHom& eps, std::span<const std::pair<Element, Element>> overrides = {});

/// Throws SectionMismatch unless eps(s(q)) = q for every q.
void check_section(const GroupHom& eps, const Section& s);

/// Every right inverse of eps, in lexicographic order of choices. Intended
/// for small fibres only.
std::vector<Section> all_sections(const GroupHom& eps);

struct Embedding {
  WreathProduct wreath;
  GroupHom phi;
};

/// phi(g) = (sigma_g, eps(g)) in N wr_r Q with
///   sigma_g(q) = s(q)^-1 g s(eps(g)^-1 q),
/// each value pulled back into N. Throws SectionMismatch for a bad section and
/// InvariantError if some sigma_g(q) falls outside N.
Embedding kk_embedding(const ShortExactSequence& ses, const Section& s,
                       std::uint64_t size_cap = kDefaultSizeCap);

struct OmegaEmbedding {
  WreathProduct wreath;
  GroupHom phi;
  /// Largest normal subgroup M of G inside H_K.
  Subgroup core;
  /// Q = G/M together with the projection eps.
  Quotient top;
  /// Left cosets of H_K (the set Omega) with G acting by translation.
  CosetAction cosets;
  /// s(w) for every coset w.
  Section section;
};

/// Coset model of field data: G plays the whole Galois group, H_K the
/// subgroup fixing K, and Omega the left cosets of H_K. Q = G/core(H_K) acts
/// on Omega through q . xH_K = r(q) x H_K for any lift r(q); this is well
/// defined because the core lies in H_K. Then
///   phi(g) = (sigma_g, eps(g)),  sigma_g(w) = s(w)^-1 g s(eps(g)^-1 . w),
/// with each sigma_g(w) located in H_K. `s` defaults to the minimal coset
/// representatives and is not normalized at the identity coset.
OmegaEmbedding omega_embedding(const FiniteGroup& g, const Subgroup& h_k,
                               const std::optional<Section>& s = std::nullopt,
                               std::uint64_t size_cap = kDefaultSizeCap);

/// theta(f, h) = (psi o f o xi^-1, phi(h)) from w = K wr_Omega H to
/// w_hat = K^ wr_Omega^ H^. Requires psi and phi bijective homomorphisms and
/// xi an equivariant bijection; throws NotIsomorphism / NotEquivariant.
/// With `verify`, the result is checked to be a bijective homomorphism over
/// all pairs and NotIsomorphism is thrown on failure.
GroupHom transport_iso(const GroupHom& psi, const GroupHom& phi, std::span<const Point> xi,
                       const WreathProduct& w, const WreathProduct& w_hat, bool verify = true);

/// Regular wreath products: the same map with xi = phi on Omega = H.
GroupHom transport_regular(const GroupHom& psi, const GroupHom& phi, const WreathProduct& w,
                           const WreathProduct& w_hat, bool verify = true);

/// As transport_iso with psi and phi only injective; the result is an
/// injective homomorphism into w_hat. Throws NotEquivariant, or
/// InvariantError when psi or phi is not an injective homomorphism.
GroupHom transport_subgroup(const GroupHom& psi, const GroupHom& phi, std::span<const Point> xi,
                            const WreathProduct& w, const WreathProduct& w_hat);

struct SolvabilityResult {
  bool solvable = false;
  WreathProduct target;
  std::optional<GroupHom> witness;
};

/// Whether g embeds into AGL(1,p) wr AGL(1,p), AGL acting on F_p by
/// evaluation. Only p = 2 and p = 3 are supported (UnsupportedPrime).
SolvabilityResult solvability_criterion(const FiniteGroup& g, int p, const SearchOptions& options = {});

}  // namespace wreathlab
