#include "wreathlab/fields.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>

#include "wreathlab/errors.hpp"

namespace wreathlab {
namespace {

using boost::multiprecision::cpp_int;

constexpr std::int64_t kGeneratorBound = 1'000'000;

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    n /= p;
    if (n % p == 0) out.push_back(p);  // repeated factor; caller rejects
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<cpp_int> exact_sqrt(const cpp_int& n) {
  if (n < 0) return std::nullopt;
  cpp_int r = boost::multiprecision::sqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  auto num = exact_sqrt(boost::multiprecision::numerator(q));
  auto den = exact_sqrt(boost::multiprecision::denominator(q));
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

/// Maps a K-mask (bits over K's generators) to the L-mask.
std::uint32_t lift_mask(std::uint32_t k_mask, const std::vector<std::size_t>& positions) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (k_mask & (1u << i)) out |= 1u << positions[i];
  }
  return out;
}

}  // namespace

MultiQuadField::MultiQuadField(std::vector<std::int64_t> generators) {
  if (generators.size() > 16) throw InvariantError("at most 16 generators are supported");
  std::map<std::int64_t, std::size_t> prime_index;
  std::vector<std::vector<bool>> rows;
  for (std::int64_t d : generators) {
    if (d == 0 || d == 1) throw InvariantError("generator " + std::to_string(d) + " must not be 0 or 1");
    if (d > kGeneratorBound || d < -kGeneratorBound) {
      throw InvariantError("generator " + std::to_string(d) + " exceeds the bound 10^6");
    }
    auto factors = prime_factors(d < 0 ? -d : d);
    if (std::adjacent_find(factors.begin(), factors.end()) != factors.end()) {
      throw InvariantError("generator " + std::to_string(d) + " is not square-free");
    }
    if (d < 0) factors.push_back(-1);
    std::vector<bool> row;
    for (auto p : factors) {
      auto [it, fresh] = prime_index.emplace(p, prime_index.size());
      if (row.size() <= it->second) row.resize(it->second + 1, false);
      row[it->second] = true;
    }
    rows.push_back(std::move(row));
  }
  // Gaussian elimination over GF(2) on prime-exponent vectors.
  const std::size_t width = prime_index.size();
  for (auto& r : rows) r.resize(width, false);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][col]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && rows[i][col]) {
        for (std::size_t c = 0; c < width; ++c) rows[i][c] = rows[i][c] != rows[rank][c];
      }
    }
    ++rank;
  }
  if (rank != rows.size()) throw InvariantError("generators are not multiplicatively independent");
  data_ = std::make_shared<const Data>(Data{std::move(generators)});
}

std::optional<std::size_t> MultiQuadField::index_of(std::int64_t d) const {
  auto it = std::find(data_->gens.begin(), data_->gens.end(), d);
  if (it == data_->gens.end()) return std::nullopt;
  return static_cast<std::size_t>(it - data_->gens.begin());
}

std::string MultiQuadField::monomial_label(std::uint32_t mask) const {
  if (mask == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < k(); ++i) {
    if (!(mask & (1u << i))) continue;
    if (!out.empty()) out += "\xC2\xB7";
    out += "\xE2\x88\x9A" + std::to_string(data_->gens[i]);
  }
  return out;
}

std::int64_t MultiQuadField::monomial_square(std::uint32_t mask) const {
  std::int64_t out = 1;
  for (std::size_t i = 0; i < k(); ++i) {
    if (mask & (1u << i)) out *= data_->gens[i];
  }
  return out;
}

MultiQuadElement::MultiQuadElement(MultiQuadField field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() != field_.degree()) throw InvariantError("coordinate vector has the wrong length");
}

MultiQuadElement MultiQuadElement::rational(const MultiQuadField& field, const Rational& value) {
  std::vector<Rational> c(field.degree());
  c[0] = value;
  return MultiQuadElement(field, std::move(c));
}

MultiQuadElement MultiQuadElement::monomial(const MultiQuadField& field, std::uint32_t mask) {
  if (mask >= field.degree()) throw InvariantError("monomial mask out of range");
  std::vector<Rational> c(field.degree());
  c[mask] = 1;
  return MultiQuadElement(field, std::move(c));
}

bool MultiQuadElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<Rational> MultiQuadElement::as_rational() const {
  for (std::size_t s = 1; s < coords_.size(); ++s) {
    if (coords_[s] != 0) return std::nullopt;
  }
  return coords_[0];
}

void MultiQuadElement::require_same_field(const MultiQuadElement& b) const {
  if (!field_.same_as(b.field_)) throw InvariantError("elements belong to different fields");
}

MultiQuadElement MultiQuadElement::operator+(const MultiQuadElement& b) const {
  require_same_field(b);
  auto c = coords_;
  for (std::size_t s = 0; s < c.size(); ++s) c[s] += b.coords_[s];
  return MultiQuadElement(field_, std::move(c));
}

MultiQuadElement MultiQuadElement::operator-(const MultiQuadElement& b) const { return *this + (-b); }

MultiQuadElement MultiQuadElement::operator-() const {
  auto c = coords_;
  for (auto& v : c) v = -v;
  return MultiQuadElement(field_, std::move(c));
}

MultiQuadElement MultiQuadElement::operator*(const MultiQuadElement& b) const {
  require_same_field(b);
  std::vector<Rational> c(coords_.size());
  for (std::uint32_t s = 0; s < coords_.size(); ++s) {
    if (coords_[s] == 0) continue;
    for (std::uint32_t t = 0; t < coords_.size(); ++t) {
      if (b.coords_[t] == 0) continue;
      // sqrt(d_S) sqrt(d_T) = prod_{S and T} d_i * sqrt(d_{S xor T})
      c[s ^ t] += coords_[s] * b.coords_[t] * field_.monomial_square(s & t);
    }
  }
  return MultiQuadElement(field_, std::move(c));
}

MultiQuadElement MultiQuadElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  // a * prod_{sigma != id} sigma(a) is the norm, a nonzero rational.
  auto cofactor = rational(field_, 1);
  for (std::uint32_t m = 1; m < field_.degree(); ++m) cofactor = cofactor * FieldAutomorphism{field_, m}(*this);
  const auto norm = (*this * cofactor).as_rational();
  if (!norm || *norm == 0) throw InvariantError("norm is not a nonzero rational");
  return cofactor * rational(field_, 1 / *norm);
}

bool MultiQuadElement::operator==(const MultiQuadElement& b) const {
  return field_.same_as(b.field_) && coords_ == b.coords_;
}

std::string MultiQuadElement::to_string() const {
  std::string out;
  for (std::uint32_t s = 0; s < coords_.size(); ++s) {
    const Rational& c = coords_[s];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (s == 0) {
      out += format_rational(mag);
    } else if (mag == 1) {
      out += field_.monomial_label(s);
    } else {
      out += format_rational(mag) + "\xC2\xB7" + field_.monomial_label(s);
    }
  }
  return out.empty() ? "0" : out;
}

MultiQuadElement FieldAutomorphism::operator()(const MultiQuadElement& a) const {
  if (!a.field().same_as(field)) throw InvariantError("automorphism applied to an element of another field");
  auto c = a.coords();
  for (std::uint32_t s = 0; s < c.size(); ++s) {
    if (std::popcount(s & mask) % 2 == 1) c[s] = -c[s];
  }
  return MultiQuadElement(field, std::move(c));
}

std::vector<int> FieldAutomorphism::signs() const {
  std::vector<int> out(field.k());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (mask & (1u << i)) ? -1 : 1;
  return out;
}

FiniteGroup galois_group(const MultiQuadField& field, const std::string& prefix, const std::string& identity_label) {
  const std::size_t n = field.degree();
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) table[a * n + b] = a ^ b;
    labels[a] = a == 0 ? identity_label : (n == 2 ? prefix : prefix + std::to_string(a));
  }
  return FiniteGroup::from_table(n, 0, std::move(table), std::move(labels));
}

MultiQuadField subfield(const MultiQuadField& big, const std::vector<std::size_t>& positions) {
  std::vector<std::int64_t> gens;
  for (auto p : positions) {
    if (p >= big.k()) throw InvariantError("generator position out of range");
    gens.push_back(big.generators()[p]);
  }
  return MultiQuadField(std::move(gens));
}

FieldAutomorphism restriction(const MultiQuadField& big, const std::vector<std::size_t>& positions,
                              const FieldAutomorphism& rho) {
  if (!rho.field.same_as(big)) throw InvariantError("automorphism belongs to another field");
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (rho.mask & (1u << positions[i])) mask |= 1u << i;
  }
  return FieldAutomorphism{subfield(big, positions), mask};
}

QuadraticTower::QuadraticTower(MultiQuadField l, const std::vector<std::int64_t>& k_generators, Rational alpha)
    : l_(std::move(l)), k_(std::vector<std::int64_t>{}), alpha_(std::move(alpha)) {
  for (auto d : k_generators) {
    auto pos = l_.index_of(d);
    if (!pos) throw InvariantError("K generator " + std::to_string(d) + " is not a generator of L");
    if (std::find(k_positions_.begin(), k_positions_.end(), *pos) != k_positions_.end()) {
      throw InvariantError("K generator " + std::to_string(d) + " listed twice");
    }
    k_positions_.push_back(*pos);
  }
  if (k_positions_.size() + 1 != l_.k()) {
    throw InvariantError("L must be K(sqrt alpha): exactly one generator of L may lie outside K");
  }
  k_ = MultiQuadField(k_generators);
  if (alpha_ <= 0) throw InvariantError("alpha must be a positive rational");
  sqrt_alpha_ = canonical_sqrt(alpha_);
  if (!sqrt_alpha_) throw InvariantError("sqrt(alpha) does not lie in L");
  const std::uint32_t k_mask = lift_mask(static_cast<std::uint32_t>(k_.degree() - 1), k_positions_);
  std::uint32_t support = 0;
  for (std::uint32_t s = 0; s < l_.degree(); ++s) {
    if (sqrt_alpha_->coords()[s] != 0) support = s;
  }
  if ((support & ~k_mask) == 0) throw InvariantError("sqrt(alpha) lies in K");
  eta_mask_ = static_cast<std::uint32_t>(l_.degree() - 1) & ~k_mask;
}

std::optional<MultiQuadElement> QuadraticTower::canonical_sqrt(const Rational& value) const {
  if (value <= 0) return std::nullopt;
  for (std::uint32_t s = 0; s < l_.degree(); ++s) {
    const Rational rest = value / Rational(l_.monomial_square(s));
    if (auto r = rational_sqrt(rest)) {
      return MultiQuadElement::monomial(l_, s) * MultiQuadElement::rational(l_, *r);
    }
  }
  return std::nullopt;
}

TowerGroups tower_groups(const QuadraticTower& t) {
  auto gal_l = galois_group(t.l(), "rho", "id_L");
  auto gal_k = galois_group(t.k(), "eta", "id_K");
  std::vector<Element> image(gal_l.order());
  for (Element m = 0; m < gal_l.order(); ++m) {
    image[m] = restriction(t.l(), t.k_positions(), FieldAutomorphism{t.l(), m}).mask;
  }
  GroupHom eps(gal_l, gal_k, std::move(image));
  auto gal_lk = subgroup_from_elements(gal_l, {gal_l.identity(), t.eta_mask()});
  ShortExactSequence ses(gal_lk.inclusion, eps);
  return TowerGroups{std::move(gal_l), std::move(gal_k), std::move(gal_lk), std::move(ses)};
}

int chi(const QuadraticTower& t, std::uint32_t rho_mask, std::uint32_t tau_mask) {
  if (rho_mask >= t.l().degree() || tau_mask >= t.k().degree()) throw InvariantError("automorphism out of range");
  const auto tau_alpha_k = FieldAutomorphism{t.k(), tau_mask}(MultiQuadElement::rational(t.k(), t.alpha()));
  std::vector<Rational> lifted(t.l().degree());
  for (std::uint32_t s = 0; s < t.k().degree(); ++s) lifted[lift_mask(s, t.k_positions())] = tau_alpha_k.coords()[s];
  const MultiQuadElement tau_alpha(t.l(), std::move(lifted));
  // Sign automorphisms are involutions, so rho^-1 has the same mask.
  const FieldAutomorphism rho{t.l(), rho_mask};
  const auto inner = rho(tau_alpha).as_rational();
  const auto outer = tau_alpha.as_rational();
  if (!inner || !outer) throw NonUnitQuotient("tau(alpha) is not rational");
  const auto root_inner = t.canonical_sqrt(*inner);
  const auto root_outer = t.canonical_sqrt(*outer);
  if (!root_inner || !root_outer) throw NonUnitQuotient("square root of tau(alpha) is not in L");
  const auto quotient = (rho(*root_inner) / *root_outer).as_rational();
  if (quotient && *quotient == 1) return 0;
  if (quotient && *quotient == -1) return 1;
  throw NonUnitQuotient("chi quotient is not +1 or -1");
}

KummerEmbedding quadratic_kummer_embedding(const QuadraticTower& t, std::uint64_t size_cap) {
  auto groups = tower_groups(t);
  auto wreath = regular_wreath(groups.gal_lk.group, groups.gal_k, size_cap);
  const Element eta = *groups.gal_lk.locate(t.eta_mask());
  const Element id = groups.gal_lk.group.identity();
  std::vector<Element> image(groups.gal_l.order());
  Tuple sigma(groups.gal_k.order());
  for (Element rho = 0; rho < groups.gal_l.order(); ++rho) {
    for (Element tau = 0; tau < groups.gal_k.order(); ++tau) sigma[tau] = chi(t, rho, tau) == 1 ? eta : id;
    image[rho] = wreath.encode(sigma, groups.ses.eps()(rho));
  }
  GroupHom phi(groups.gal_l, wreath.product(), std::move(image));
  auto report = verify_embedding(phi);
  return KummerEmbedding{std::move(groups), std::move(wreath), std::move(phi), report};
}

CocycleCheck verify_cocycle(const QuadraticTower& t) {
  CocycleCheck out;
  const auto n_l = static_cast<std::uint32_t>(t.l().degree());
  const auto n_k = static_cast<std::uint32_t>(t.k().degree());
  for (std::uint32_t r1 = 0; r1 < n_l; ++r1) {
    const std::uint32_t r1_k = restriction(t.l(), t.k_positions(), FieldAutomorphism{t.l(), r1}).mask;
    for (std::uint32_t r2 = 0; r2 < n_l; ++r2) {
      for (std::uint32_t tau = 0; tau < n_k; ++tau) {
        ++out.triples;
        const int lhs = chi(t, r1 ^ r2, tau);
        const int rhs = (chi(t, r2, r1_k ^ tau) + chi(t, r1, tau)) % 2;
        if (lhs != rhs && out.holds) {
          out.holds = false;
          out.counterexample = std::make_tuple(r1, r2, tau);
        }
      }
    }
  }
  return out;
}

std::string format_rational(const Rational& r) {
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (start == part.size() ||
        !std::all_of(part.begin() + static_cast<long>(start), part.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw ParseError("malformed rational '" + text + "'");
    }
    cpp_int v(part.substr(start));
    return part[0] == '-' ? cpp_int(-v) : v;
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  const cpp_int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(parse_int(s.substr(0, slash)), den);
}

}  // namespace wreathlab
