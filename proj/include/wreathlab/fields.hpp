#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wreathlab/embeddings.hpp"
#include "wreathlab/group.hpp"
#include "wreathlab/wreath.hpp"

namespace wreathlab {

using Rational = boost::multiprecision::cpp_rational;

/// Q(sqrt d_1, ..., sqrt d_k) with basis monomials prod_{i in S} sqrt d_i
/// indexed by the bitmask S (bit i <-> d_i).
class MultiQuadField {
 public:
  /// Each d_i must be square-free, not 0 or 1, and |d_i| <= 10^6; no nonempty
  /// sub-product may be a perfect square. Throws InvariantError otherwise.
  explicit MultiQuadField(std::vector<std::int64_t> generators);

  std::size_t k() const noexcept { return data_->gens.size(); }
  std::size_t degree() const noexcept { return std::size_t{1} << k(); }
  const std::vector<std::int64_t>& generators() const noexcept { return data_->gens; }
  /// Position of d among the generators.
  std::optional<std::size_t> index_of(std::int64_t d) const;
  /// "1", "√5", "√5·√7", ...
  std::string monomial_label(std::uint32_t mask) const;
  /// prod_{i in mask} d_i
  std::int64_t monomial_square(std::uint32_t mask) const;

  bool same_as(const MultiQuadField& other) const noexcept { return data_ == other.data_; }

 private:
  struct Data {
    std::vector<std::int64_t> gens;
  };
  std::shared_ptr<const Data> data_;
};

class MultiQuadElement {
 public:
  MultiQuadElement(MultiQuadField field, std::vector<Rational> coords);

  static MultiQuadElement rational(const MultiQuadField& field, const Rational& value);
  /// The basis monomial prod_{i in mask} sqrt d_i.
  static MultiQuadElement monomial(const MultiQuadField& field, std::uint32_t mask);

  const MultiQuadField& field() const noexcept { return field_; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  bool is_zero() const;
  /// The value if the element lies in Q.
  std::optional<Rational> as_rational() const;

  MultiQuadElement operator+(const MultiQuadElement& b) const;
  MultiQuadElement operator-(const MultiQuadElement& b) const;
  MultiQuadElement operator-() const;
  MultiQuadElement operator*(const MultiQuadElement& b) const;
  /// Throws DivisionByZero for 0.
  MultiQuadElement inverse() const;
  MultiQuadElement operator/(const MultiQuadElement& b) const { return *this * b.inverse(); }
  bool operator==(const MultiQuadElement& b) const;

  /// "3/2 + 1/2·√5·√7"
  std::string to_string() const;

 private:
  void require_same_field(const MultiQuadElement& b) const;

  MultiQuadField field_;
  std::vector<Rational> coords_;
};

/// The automorphism negating sqrt d_i exactly for the bits i set in `mask`.
struct FieldAutomorphism {
  MultiQuadField field;
  std::uint32_t mask = 0;

  MultiQuadElement operator()(const MultiQuadElement& a) const;
  /// Componentwise sign product.
  FieldAutomorphism then(const FieldAutomorphism& other) const { return {field, mask ^ other.mask}; }
  /// +1 or -1 for each generator.
  std::vector<int> signs() const;
};

/// Gal(field/Q), element index = sign mask. Labels are `identity_label` for
/// the identity and prefix + mask otherwise (just the prefix when k = 1).
FiniteGroup galois_group(const MultiQuadField& field, const std::string& prefix = "rho",
                         const std::string& identity_label = "id");

/// Sub-field generated by the listed generator positions of `big`.
MultiQuadField subfield(const MultiQuadField& big, const std::vector<std::size_t>& positions);

/// rho restricted to the sub-field on `positions`: keeps those sign bits.
FieldAutomorphism restriction(const MultiQuadField& big, const std::vector<std::size_t>& positions,
                              const FieldAutomorphism& rho);

/// F <= K <= L = K(sqrt alpha) with alpha a positive rational and L, K
/// multiquadratic. L must have exactly one generator beyond those of K.
class QuadraticTower {
 public:
  /// `k_generators` are values of L's generators; alpha = r^2 prod_{i in S} d_i
  /// must hold for some S not contained in K. Throws InvariantError.
  QuadraticTower(MultiQuadField l, const std::vector<std::int64_t>& k_generators, Rational alpha);

  const MultiQuadField& l() const noexcept { return l_; }
  const MultiQuadField& k() const noexcept { return k_; }
  const Rational& alpha() const noexcept { return alpha_; }
  /// Positions of K's generators inside L.
  const std::vector<std::size_t>& k_positions() const noexcept { return k_positions_; }
  /// The chosen root |r| * prod_{i in S} sqrt d_i.
  const MultiQuadElement& sqrt_alpha() const noexcept { return *sqrt_alpha_; }
  /// Mask of the L-automorphism negating sqrt alpha and fixing K.
  std::uint32_t eta_mask() const noexcept { return eta_mask_; }

  /// Canonical root in L of a positive rational of the form r^2 prod d_i.
  std::optional<MultiQuadElement> canonical_sqrt(const Rational& value) const;

 private:
  MultiQuadField l_;
  MultiQuadField k_;
  std::vector<std::size_t> k_positions_;
  Rational alpha_;
  std::optional<MultiQuadElement> sqrt_alpha_;
  std::uint32_t eta_mask_ = 0;
};

/// The groups and maps of a tower: Gal(L/Q) -> Gal(K/Q) with kernel Gal(L/K).
struct TowerGroups {
  FiniteGroup gal_l;   // labels rho*, id_L
  FiniteGroup gal_k;   // labels eta*, id_K
  Subgroup gal_lk;     // {id_L, eta_flip}
  ShortExactSequence ses;
};
TowerGroups tower_groups(const QuadraticTower& t);

/// chi(rho, tau) in {0, 1}:
///   (-1)^chi = rho(sqrt(rho^-1(tau(alpha)))) / sqrt(tau(alpha)),
/// evaluated exactly in L. Throws NonUnitQuotient if the quotient is not +-1.
int chi(const QuadraticTower& t, std::uint32_t rho_mask, std::uint32_t tau_mask);

struct KummerEmbedding {
  TowerGroups groups;
  WreathProduct wreath;
  GroupHom phi;
  EmbeddingReport report;
};

/// phi(rho) = (sigma_rho, eps(rho)) in Gal(L/K) wr Gal(K/Q), Omega = Gal(K/Q)
/// acting on itself, with sigma_rho(tau) = eta^chi(rho, tau).
KummerEmbedding quadratic_kummer_embedding(const QuadraticTower& t, std::uint64_t size_cap = kDefaultSizeCap);

struct CocycleCheck {
  bool holds = true;
  std::size_t triples = 0;
  /// (rho1, rho2, tau) masks of the first failure.
  std::optional<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> counterexample;
};

/// chi(rho1 rho2, tau) = chi(rho2, eps(rho1)^-1 tau) + chi(rho1, tau) mod 2
/// over every triple.
CocycleCheck verify_cocycle(const QuadraticTower& t);

/// Reduced fraction "p/q" or "p".
std::string format_rational(const Rational& r);
/// Parses "p", "-p" or "p/q". Throws ParseError.
Rational parse_rational(const std::string& text);

}  // namespace wreathlab
