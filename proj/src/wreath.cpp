#include "wreathlab/wreath.hpp"

#include <cctype>

#include "wreathlab/errors.hpp"

namespace wreathlab {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Splits on `sep` at bracket depth zero; returns (token, offset) pairs.
std::vector<std::pair<std::string_view, std::size_t>> split_top_level(std::string_view s, char sep,
                                                                      std::size_t base) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.emplace_back(s.substr(start, i - start), base + start);
      start = i + 1;
    }
  }
  out.emplace_back(s.substr(start), base + start);
  return out;
}

Element resolve_token(const FiniteGroup& g, std::string_view token, std::size_t pos) {
  token = trim(token);
  if (auto hit = g.find_label(token)) return *hit;
  if (!token.empty() && std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const auto value = std::stoull(std::string(token));
    if (value < g.order()) return static_cast<Element>(value);
  }
  throw ParseError("unknown element '" + std::string(token) + "' at position " + std::to_string(pos));
}

}  // namespace

Tuple theta(const FiniteGSet& omega, Element h, std::span<const Element> f) {
  if (f.size() != omega.size()) {
    throw InvariantError("tuple has length " + std::to_string(f.size()) + ", expected " +
                         std::to_string(omega.size()));
  }
  const Element h_inv = omega.group().inverse(h);
  Tuple out(f.size());
  for (Point w = 0; w < omega.size(); ++w) out[w] = f[omega.act(h_inv, w)];
  return out;
}

BigInt wreath_order(const FiniteGroup& k, const FiniteGSet& omega) {
  BigInt order = boost::multiprecision::pow(BigInt(k.order()), static_cast<unsigned>(omega.size()));
  return order * omega.group().order();
}

Element WreathProduct::encode(std::span<const Element> f, Element h) const {
  if (f.size() != omega_size()) throw InvariantError("tuple length does not match |Omega|");
  std::size_t value = 0;
  for (std::size_t w = 0; w < f.size(); ++w) value += f[w] * data_->radix[w];
  return static_cast<Element>(h * data_->base_order + value);
}

std::pair<Tuple, Element> WreathProduct::decode(Element x) const {
  Tuple f(omega_size());
  std::size_t rest = x % data_->base_order;
  for (std::size_t w = 0; w < f.size(); ++w) {
    f[w] = static_cast<Element>(rest % data_->k.order());
    rest /= data_->k.order();
  }
  return {std::move(f), top_of(x)};
}

GroupHom WreathProduct::top_projection() const {
  std::vector<Element> image(product_.order());
  for (Element x = 0; x < product_.order(); ++x) image[x] = top_of(x);
  return GroupHom(product_, top_group(), std::move(image));
}

FiniteGroup WreathProduct::base_power() const {
  auto data = data_;
  const std::size_t n = data->base_order;
  auto mul = [data](Element a, Element b) {
    const auto& k = data->k;
    std::size_t out = 0;
    for (std::size_t w = 0; w < data->radix.size(); ++w) {
      const auto ka = static_cast<Element>(a % k.order());
      const auto kb = static_cast<Element>(b % k.order());
      out += k.mul(ka, kb) * data->radix[w];
      a /= static_cast<Element>(k.order());
      b /= static_cast<Element>(k.order());
    }
    return static_cast<Element>(out);
  };
  std::vector<Element> inverses(n);
  for (Element a = 0; a < n; ++a) {
    std::size_t out = 0;
    Element rest = a;
    for (std::size_t w = 0; w < data->radix.size(); ++w) {
      out += data->k.inverse(rest % data->k.order()) * data->radix[w];
      rest /= static_cast<Element>(data->k.order());
    }
    inverses[a] = static_cast<Element>(out);
  }
  std::size_t identity = 0;
  for (std::size_t r : data->radix) identity += data->k.identity() * r;
  return FiniteGroup::from_rule(n, static_cast<Element>(identity), mul, std::move(inverses));
}

GroupHom WreathProduct::base_inclusion() const {
  auto base = base_power();
  std::vector<Element> image(base.order());
  const std::size_t offset = top_group().identity() * data_->base_order;
  for (Element f = 0; f < base.order(); ++f) image[f] = static_cast<Element>(offset + f);
  return GroupHom(std::move(base), product_, std::move(image));
}

std::string WreathProduct::format(Element x) const {
  std::string out = "(";
  for (std::size_t w = 0; w < omega_size(); ++w) {
    if (w > 0) out += ",";
    out += data_->k.label(coordinate(x, w));
  }
  out += "; " + top_group().label(top_of(x)) + ")";
  return out;
}

Element WreathProduct::parse(std::string_view text) const {
  const auto open = text.find('(');
  const auto close = text.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw ParseError("wreath element must look like (t0,...,tn; h)");
  }
  if (!trim(text.substr(0, open)).empty() || !trim(text.substr(close + 1)).empty()) {
    throw ParseError("unexpected text outside parentheses at position " + std::to_string(close + 1));
  }
  const auto inner = text.substr(open + 1, close - open - 1);
  const auto halves = split_top_level(inner, ';', open + 1);
  if (halves.size() != 2) throw ParseError("expected exactly one ';' in wreath element");
  const auto parts = split_top_level(halves[0].first, ',', halves[0].second);
  if (parts.size() != omega_size()) {
    throw ParseError("expected " + std::to_string(omega_size()) + " coordinates, found " +
                     std::to_string(parts.size()));
  }
  Tuple f(parts.size());
  for (std::size_t w = 0; w < parts.size(); ++w) f[w] = resolve_token(data_->k, parts[w].first, parts[w].second);
  const Element h = resolve_token(top_group(), halves[1].first, halves[1].second);
  return encode(f, h);
}

WreathProduct build_wreath(const FiniteGroup& k, const FiniteGSet& omega, std::uint64_t size_cap) {
  const BigInt order = wreath_order(k, omega);
  if (order > size_cap) {
    throw SizeLimitError("wreath product of order " + order.str() + " exceeds the cap of " +
                             std::to_string(size_cap),
                         order.str());
  }
  auto data = std::make_shared<WreathProduct::Data>(WreathProduct::Data{k, omega, 1, {}});
  for (std::size_t w = 0; w < omega.size(); ++w) {
    data->radix.push_back(data->base_order);
    data->base_order *= k.order();
  }
  const std::size_t n = data->base_order * omega.group().order();
  std::shared_ptr<const WreathProduct::Data> cdata = data;

  auto mul = [cdata](Element a, Element b) {
    const auto& kk = cdata->k;
    const auto& hs = cdata->omega;
    const std::size_t bo = cdata->base_order;
    const auto h1 = static_cast<Element>(a / bo);
    const auto h2 = static_cast<Element>(b / bo);
    const std::size_t fa = a % bo;
    const std::size_t fb = b % bo;
    const Element h1_inv = hs.group().inverse(h1);
    std::size_t out = 0;
    for (std::size_t w = 0; w < cdata->radix.size(); ++w) {
      const auto k1 = static_cast<Element>(fa / cdata->radix[w] % kk.order());
      const Point src = hs.act(h1_inv, static_cast<Point>(w));
      const auto k2 = static_cast<Element>(fb / cdata->radix[src] % kk.order());
      out += kk.mul(k1, k2) * cdata->radix[w];
    }
    return static_cast<Element>(hs.group().mul(h1, h2) * bo + out);
  };

  std::vector<Element> inverses(n);
  for (Element x = 0; x < n; ++x) {
    const auto h = static_cast<Element>(x / cdata->base_order);
    const Element h_inv = omega.group().inverse(h);
    std::size_t out = 0;
    for (std::size_t w = 0; w < omega.size(); ++w) {
      // (theta_{h^-1}(f^-1))(w) = f(h . w)^-1
      const Point src = omega.act(h, static_cast<Point>(w));
      const auto kv = static_cast<Element>(x % cdata->base_order / cdata->radix[src] % k.order());
      out += k.inverse(kv) * cdata->radix[w];
    }
    inverses[x] = static_cast<Element>(h_inv * cdata->base_order + out);
  }
  std::size_t identity = omega.group().identity() * cdata->base_order;
  for (std::size_t r : cdata->radix) identity += k.identity() * r;

  auto label = [cdata](Element x) {
    std::string out = "(";
    const std::size_t bo = cdata->base_order;
    for (std::size_t w = 0; w < cdata->radix.size(); ++w) {
      if (w > 0) out += ",";
      out += cdata->k.label(static_cast<Element>(x % bo / cdata->radix[w] % cdata->k.order()));
    }
    return out + "; " + cdata->omega.group().label(static_cast<Element>(x / bo)) + ")";
  };
  auto product = FiniteGroup::from_rule(n, static_cast<Element>(identity), mul, std::move(inverses), label);
  return WreathProduct(std::move(cdata), std::move(product));
}

WreathProduct regular_wreath(const FiniteGroup& k, const FiniteGroup& h, std::uint64_t size_cap) {
  return build_wreath(k, regular_action(h), size_cap);
}

Element wreath_inverse(const WreathProduct& w, Element x) {
  auto [f, h] = w.decode(x);
  const auto& k = w.base();
  for (auto& v : f) v = k.inverse(v);
  const Element h_inv = w.top_group().inverse(h);
  return w.encode(theta(w.top(), h_inv, f), h_inv);
}

}  // namespace wreathlab
