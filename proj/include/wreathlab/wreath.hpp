#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wreathlab/action.hpp"
#include "wreathlab/group.hpp"

namespace wreathlab {

using BigInt = boost::multiprecision::cpp_int;

/// A function Omega -> K, stored as K-indices with tuple[w] = f(w).
using Tuple = std::vector<Element>;

/// theta_h(f)(w) = f(h^-1 . w). Throws InvariantError on a length mismatch.
Tuple theta(const FiniteGSet& omega, Element h, std::span<const Element> f);

/// |K|^|Omega| * |H| as an exact integer.
BigInt wreath_order(const FiniteGroup& k, const FiniteGSet& omega);

/// K wr_Omega H = K^Omega semidirect H, with
///   (f1, h1)(f2, h2) = (f1 . theta_h1(f2), h1 h2).
///
/// Element index = h * |K|^|Omega| + sum_w f(w) * |K|^w, so w = 0 is the least
/// significant digit and h the most significant one. Products of order
/// <= kDenseTableLimit carry a Cayley table; larger ones multiply through the
/// formula above.
class WreathProduct {
 public:
  const FiniteGroup& base() const noexcept { return data_->k; }
  const FiniteGSet& top() const noexcept { return data_->omega; }
  const FiniteGroup& top_group() const noexcept { return data_->omega.group(); }
  const FiniteGroup& product() const noexcept { return product_; }
  std::size_t omega_size() const noexcept { return data_->omega.size(); }
  /// |K|^|Omega|, the order of the base group.
  std::size_t base_power_order() const noexcept { return data_->base_order; }

  Element encode(std::span<const Element> f, Element h) const;
  std::pair<Tuple, Element> decode(Element x) const;
  Element top_of(Element x) const { return static_cast<Element>(x / data_->base_order); }
  Element coordinate(Element x, std::size_t w) const {
    return static_cast<Element>((x % data_->base_order) / data_->radix[w] % data_->k.order());
  }

  /// (f, h) -> h, a surjective homomorphism onto H.
  GroupHom top_projection() const;
  /// K^Omega as a group in its own right (same mixed-radix indexing).
  FiniteGroup base_power() const;
  /// f -> (f, e_H).
  GroupHom base_inclusion() const;

  /// "(t0,...,tn; h)" with base and top labels.
  std::string format(Element x) const;
  /// Inverse of `format`; tokens may be labels or bare indices. Throws
  /// ParseError naming the offending position.
  Element parse(std::string_view text) const;

 private:
  friend WreathProduct build_wreath(const FiniteGroup&, const FiniteGSet&, std::uint64_t);

  struct Data {
    FiniteGroup k;
    FiniteGSet omega;
    std::size_t base_order = 1;
    std::vector<std::size_t> radix;
  };

  WreathProduct(std::shared_ptr<const Data> data, FiniteGroup product)
      : data_(std::move(data)), product_(std::move(product)) {}

  std::shared_ptr<const Data> data_;
  FiniteGroup product_;
};

/// Throws SizeLimitError (carrying the exact order) above `size_cap`.
WreathProduct build_wreath(const FiniteGroup& k, const FiniteGSet& omega,
                           std::uint64_t size_cap = kDefaultSizeCap);

/// K wr_r H: Omega = H under left multiplication.
WreathProduct regular_wreath(const FiniteGroup& k, const FiniteGroup& h,
                             std::uint64_t size_cap = kDefaultSizeCap);

/// (f, h)^-1 = (theta_{h^-1}(f^-1), h^-1), computed from the formula.
Element wreath_inverse(const WreathProduct& w, Element x);

}  // namespace wreathlab
