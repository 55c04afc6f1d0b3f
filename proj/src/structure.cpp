#include "wreathlab/structure.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <numeric>
#include <string>

#include "wreathlab/errors.hpp"

namespace wreathlab {
namespace {

int parse_int(std::string_view text, std::string_view spec) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("bad integer in group spec '" + std::string(spec) + "'");
  }
  return value;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FiniteGroup cyclic(std::size_t n) {
  std::vector<Element> inverses(n);
  for (std::size_t k = 0; k < n; ++k) inverses[k] = static_cast<Element>((n - k) % n);
  auto group = FiniteGroup::from_rule(
      n, 0, [n](Element a, Element b) { return static_cast<Element>((a + b) % n); },
      std::move(inverses), [](Element x) { return std::to_string(x); });
  if (n > 1 && n <= 64) {
    PermutationData perms{n, std::vector<std::uint16_t>(n * n)};
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) perms.images[k * n + i] = static_cast<std::uint16_t>((i + k) % n);
    }
    group = group.with_permutations(std::move(perms));
  }
  return group;
}

std::string dihedral_label(std::size_t a, std::size_t b) {
  if (a == 0 && b == 0) return "e";
  std::string out;
  if (a == 1) out = "r";
  if (a > 1) out = "r" + std::to_string(a);
  if (b == 1) out += "s";
  return out;
}

FiniteGroup dihedral(std::size_t n) {
  const std::size_t order = 2 * n;
  auto mul = [n](Element x, Element y) {
    const std::size_t a = x / 2, b = x % 2, c = y / 2, d = y % 2;
    const std::size_t rot = b == 0 ? (a + c) % n : (a + n - c) % n;
    return static_cast<Element>(rot * 2 + ((b + d) % 2));
  };
  std::vector<Element> inverses(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x / 2, b = x % 2;
    inverses[x] = b == 1 ? static_cast<Element>(x) : static_cast<Element>(((n - a) % n) * 2);
  }
  auto group = FiniteGroup::from_rule(order, 0, mul, std::move(inverses),
                                      [](Element x) { return dihedral_label(x / 2, x % 2); });
  if (n >= 3 && n <= 64) {
    PermutationData perms{n, std::vector<std::uint16_t>(order * n)};
    for (std::size_t x = 0; x < order; ++x) {
      const std::size_t a = x / 2, b = x % 2;
      for (std::size_t i = 0; i < n; ++i) {
        perms.images[x * n + i] = static_cast<std::uint16_t>(b == 0 ? (a + i) % n : (a + n - i) % n);
      }
    }
    group = group.with_permutations(std::move(perms));
  }
  return group;
}

std::string one_line_label(std::span<const std::uint16_t> p) {
  std::string out;
  for (auto v : p) out += static_cast<char>('1' + v);
  return out;
}

/// Permutation group from an explicit list of one-line permutations that is
/// closed under composition (x y)(i) = x(y(i)).
FiniteGroup permutation_group(std::size_t degree, const std::vector<std::vector<std::uint16_t>>& elements) {
  std::map<std::vector<std::uint16_t>, Element> index;
  for (Element i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  std::vector<std::uint16_t> buf(degree);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t i = 0; i < degree; ++i) buf[i] = elements[x][elements[y][i]];
      table[x * n + y] = index.at(buf);
    }
  }
  std::vector<std::uint16_t> id(degree);
  std::iota(id.begin(), id.end(), std::uint16_t{0});
  std::vector<std::string> labels;
  PermutationData perms{degree, {}};
  for (const auto& p : elements) {
    labels.push_back(one_line_label(p));
    perms.images.insert(perms.images.end(), p.begin(), p.end());
  }
  auto group = FiniteGroup::from_table(n, index.at(id), std::move(table), std::move(labels));
  return group.with_permutations(std::move(perms));
}

int parity(const std::vector<std::uint16_t>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j] ? 1 : 0;
  }
  return inversions % 2;
}

FiniteGroup symmetric_or_alternating(std::size_t n, bool even_only) {
  std::vector<std::uint16_t> p(n);
  std::iota(p.begin(), p.end(), std::uint16_t{0});
  std::vector<std::vector<std::uint16_t>> elements;
  do {
    if (!even_only || parity(p) == 0) elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return permutation_group(n, elements);
}

FiniteGroup affine(int p) {
  const auto order = static_cast<std::size_t>(p * (p - 1));
  // index (a - 1) * p + b  <->  t -> a t + b
  auto mul = [p](Element x, Element y) {
    const int a = static_cast<int>(x) / p + 1, b = static_cast<int>(x) % p;
    const int c = static_cast<int>(y) / p + 1, d = static_cast<int>(y) % p;
    const int na = (a * c) % p, nb = (a * d + b) % p;
    return static_cast<Element>((na - 1) * p + nb);
  };
  std::vector<Element> inverses(order);
  for (Element x = 0; x < order; ++x) {
    for (Element y = 0; y < order; ++y) {
      if (mul(x, y) == 0) inverses[x] = y;
    }
  }
  auto label = [p](Element x) {
    const int a = static_cast<int>(x) / p + 1, b = static_cast<int>(x) % p;
    return std::to_string(a) + "t+" + std::to_string(b);
  };
  auto group = FiniteGroup::from_rule(order, 0, mul, std::move(inverses), label);
  PermutationData perms{static_cast<std::size_t>(p), std::vector<std::uint16_t>(order * p)};
  for (std::size_t x = 0; x < order; ++x) {
    const int a = static_cast<int>(x) / p + 1, b = static_cast<int>(x) % p;
    for (int t = 0; t < p; ++t) perms.images[x * p + t] = static_cast<std::uint16_t>((a * t + b) % p);
  }
  return group.with_permutations(std::move(perms));
}

FiniteGroup klein_four() {
  std::vector<Element> table(16);
  for (Element a = 0; a < 4; ++a) {
    for (Element b = 0; b < 4; ++b) table[a * 4 + b] = a ^ b;
  }
  auto group = FiniteGroup::from_table(4, 0, std::move(table), {"e", "a", "b", "c"});
  PermutationData perms{4, {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0}};
  return group.with_permutations(std::move(perms));
}

FiniteGroup quaternion() {
  // index 2u + s for the unit u in {1, i, j, k} with sign (-1)^s
  static constexpr std::array<std::array<int, 4>, 4> unit{{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  static constexpr std::array<std::array<int, 4>, 4> sign{{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
  std::vector<Element> table(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int s = (x % 2 + y % 2 + sign[u][v]) % 2;
      table[x * 8 + y] = static_cast<Element>(unit[u][v] * 2 + s);
    }
  }
  return FiniteGroup::from_table(8, 0, std::move(table), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

std::vector<std::string_view> split_product(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i < spec.size();) {
    std::size_t width = 0;
    if (spec.substr(i, 2) == "\xC3\x97") width = 2;  // U+00D7
    else if (spec[i] == 'x' || spec[i] == '*') width = 1;
    if (width > 0) {
      parts.push_back(spec.substr(start, i - start));
      i += width;
      start = i;
    } else {
      ++i;
    }
  }
  parts.push_back(spec.substr(start));
  for (auto& part : parts) {
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
  }
  return parts;
}

FiniteGroup construct_single(std::string_view spec) {
  if (spec == "V4") return klein_four();
  if (spec == "Q8") return quaternion();
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError("unknown group spec '" + std::string(spec) + "'");
  const auto family = spec.substr(0, colon);
  const int n = parse_int(spec.substr(colon + 1), spec);
  auto out_of_range = [&] { return ParseError("parameter out of range in group spec '" + std::string(spec) + "'"); };
  if (family == "C") {
    if (n < 1 || static_cast<std::uint64_t>(n) > kDefaultSizeCap) throw out_of_range();
    return cyclic(static_cast<std::size_t>(n));
  }
  if (family == "D") {
    if (n < 2 || static_cast<std::uint64_t>(n) * 2 > kDefaultSizeCap) throw out_of_range();
    return dihedral(static_cast<std::size_t>(n));
  }
  if (family == "S") {
    if (n < 1 || n > 6) throw out_of_range();
    return symmetric_or_alternating(static_cast<std::size_t>(n), false);
  }
  if (family == "A") {
    if (n < 2 || n > 6) throw out_of_range();
    return symmetric_or_alternating(static_cast<std::size_t>(n), true);
  }
  if (family == "AGL") {
    if (!is_prime(n) || n > 7) throw out_of_range();
    return affine(n);
  }
  throw ParseError("unknown group family in spec '" + std::string(spec) + "'");
}

}  // namespace

FiniteGroup construct_named(std::string_view spec) {
  auto parts = split_product(spec);
  FiniteGroup result = construct_single(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) result = direct_product(result, construct_single(parts[i]));
  return result;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::uint64_t size_cap) {
  const std::uint64_t order = static_cast<std::uint64_t>(a.order()) * b.order();
  if (order > size_cap) {
    throw SizeLimitError("direct product exceeds size cap", std::to_string(order));
  }
  const auto nb = static_cast<Element>(b.order());
  auto mul = [a, b, nb](Element x, Element y) {
    return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  };
  std::vector<Element> inverses(order);
  for (Element x = 0; x < order; ++x) inverses[x] = a.inverse(x / nb) * nb + b.inverse(x % nb);
  auto label = [a, b, nb](Element x) { return "(" + a.label(x / nb) + "," + b.label(x % nb) + ")"; };
  auto group = FiniteGroup::from_rule(order, a.identity() * nb + b.identity(), mul, std::move(inverses), label);
  const auto* pa = a.permutations();
  const auto* pb = b.permutations();
  if (pa != nullptr && pb != nullptr && order <= kDenseTableLimit) {
    const std::size_t degree = pa->degree + pb->degree;
    PermutationData perms{degree, std::vector<std::uint16_t>(order * degree)};
    for (Element x = 0; x < order; ++x) {
      auto ia = pa->of(x / nb), ib = pb->of(x % nb);
      auto* out = perms.images.data() + static_cast<std::size_t>(x) * degree;
      for (std::size_t i = 0; i < pa->degree; ++i) out[i] = ia[i];
      for (std::size_t i = 0; i < pb->degree; ++i) out[pa->degree + i] = static_cast<std::uint16_t>(pa->degree + ib[i]);
    }
    group = group.with_permutations(std::move(perms));
  }
  return group;
}

Subgroup subgroup_from_elements(const FiniteGroup& g, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const std::size_t m = elements.size();
  std::vector<Element> local(g.order(), 0);
  std::vector<bool> member(g.order(), false);
  for (Element i = 0; i < m; ++i) {
    local[elements[i]] = i;
    member[elements[i]] = true;
  }
  if (m == 0 || !member[g.identity()]) throw InvariantError("subgroup must contain the identity");
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Element p = g.mul(elements[i], elements[j]);
      if (!member[p]) throw InvariantError("element set is not closed under multiplication");
      table[i * m + j] = local[p];
    }
  }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (Element x : elements) labels.push_back(g.label(x));
  auto group = FiniteGroup::from_table(m, local[g.identity()], std::move(table), std::move(labels));
  if (const auto* perms = g.permutations()) {
    PermutationData sub{perms->degree, {}};
    for (Element x : elements) {
      auto p = perms->of(x);
      sub.images.insert(sub.images.end(), p.begin(), p.end());
    }
    group = group.with_permutations(std::move(sub));
  }
  GroupHom inclusion(group, g, std::move(elements));
  return Subgroup{std::move(group), std::move(inclusion)};
}

namespace {

/// Closure of `seed` (assumed to be a subgroup membership mask) with `extra`.
void close_under(const FiniteGroup& g, std::vector<bool>& member, std::vector<Element>& members,
                 std::span<const Element> gens) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : gens) {
      const Element p = g.mul(members[i], s);
      if (!member[p]) {
        member[p] = true;
        members.push_back(p);
      }
    }
  }
}

std::size_t generated_size(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<bool> member(g.order(), false);
  std::vector<Element> members{g.identity()};
  member[g.identity()] = true;
  close_under(g, member, members, gens);
  return members.size();
}

}  // namespace

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> gens) {
  for (Element x : gens) {
    if (x >= g.order()) throw InvariantError("generator index out of range");
  }
  std::vector<bool> member(g.order(), false);
  std::vector<Element> members{g.identity()};
  member[g.identity()] = true;
  close_under(g, member, members, gens);
  return subgroup_from_elements(g, std::move(members));
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  const auto member = h.mask();
  for (Element x = 0; x < g.order(); ++x) {
    for (Element n : h.elements()) {
      if (!member[g.conjugate(x, n)]) return false;
    }
  }
  return true;
}

Subgroup normal_core(const FiniteGroup& g, const Subgroup& h) {
  std::vector<bool> core = h.mask();
  std::vector<bool> conj(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    std::fill(conj.begin(), conj.end(), false);
    for (Element n : h.elements()) conj[g.conjugate(x, n)] = true;
    for (Element y = 0; y < g.order(); ++y) core[y] = core[y] && conj[y];
  }
  std::vector<Element> elements;
  for (Element y = 0; y < g.order(); ++y) {
    if (core[y]) elements.push_back(y);
  }
  return subgroup_from_elements(g, std::move(elements));
}

Subgroup center(const FiniteGroup& g) {
  std::vector<Element> elements;
  for (Element z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Element x = 0; x < g.order() && central; ++x) central = g.mul(z, x) == g.mul(x, z);
    if (central) elements.push_back(z);
  }
  return subgroup_from_elements(g, std::move(elements));
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!n.inclusion.codomain().same_as(g)) throw InvariantError("subgroup does not belong to this group");
  if (!is_normal(g, n)) throw NonNormalSubgroup("subgroup is not normal");
  constexpr Element kUnassigned = ~Element{0};
  std::vector<Element> coset_of(g.order(), kUnassigned);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kUnassigned) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element m : n.elements()) coset_of[g.mul(x, m)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Element> table(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) table[i * q + j] = coset_of[g.mul(reps[i], reps[j])];
  }
  std::vector<std::string> labels;
  for (Element r : reps) labels.push_back("[" + g.label(r) + "]");
  auto group = FiniteGroup::from_table(q, coset_of[g.identity()], std::move(table), std::move(labels));
  GroupHom projection(g, group, std::move(coset_of));
  return Quotient{std::move(group), std::move(projection), std::move(reps)};
}

std::uint64_t element_order(const FiniteGroup& g, Element x) {
  std::uint64_t k = 1;
  Element y = x;
  while (y != g.identity()) {
    y = g.mul(y, x);
    ++k;
  }
  return k;
}

std::vector<std::uint32_t> element_orders(const FiniteGroup& g) {
  std::vector<std::uint32_t> out(g.order(), 0);
  out[g.identity()] = 1;
  for (Element x = 0; x < g.order(); ++x) {
    if (out[x] != 0) continue;
    // Walk the cyclic subgroup once and fill in every power's order.
    std::vector<Element> powers{x};
    Element y = x;
    while (y != g.identity()) {
      y = g.mul(y, x);
      powers.push_back(y);
    }
    const auto n = static_cast<std::uint32_t>(powers.size());
    for (std::uint32_t k = 1; k <= n; ++k) {
      const Element p = powers[k - 1];
      if (out[p] == 0) out[p] = n / std::gcd(n, k);
    }
  }
  return out;
}

std::vector<Element> greedy_generators(const FiniteGroup& g) {
  std::vector<Element> gens;
  std::vector<bool> member(g.order(), false);
  std::vector<Element> members{g.identity()};
  member[g.identity()] = true;
  while (members.size() < g.order()) {
    Element best = 0;
    std::size_t best_size = 0;
    if (g.order() <= kDenseTableLimit) {
      for (Element x = 0; x < g.order(); ++x) {
        if (member[x]) continue;
        gens.push_back(x);
        const std::size_t size = generated_size(g, gens);
        gens.pop_back();
        if (size > best_size) {
          best_size = size;
          best = x;
          if (size == g.order()) break;
        }
      }
    } else {
      best = static_cast<Element>(std::find(member.begin(), member.end(), false) - member.begin());
    }
    gens.push_back(best);
    close_under(g, member, members, gens);
  }
  return gens;
}

std::vector<std::uint32_t> conjugacy_classes(const FiniteGroup& g) {
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> cls(g.order(), kNone);
  std::uint32_t next = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (cls[x] != kNone) continue;
    for (Element y = 0; y < g.order(); ++y) cls[g.conjugate(y, x)] = next;
    ++next;
  }
  return cls;
}

}  // namespace wreathlab
