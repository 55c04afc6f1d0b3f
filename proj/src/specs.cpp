#include "wreathlab/specs.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "wreathlab/errors.hpp"
#include "wreathlab/io.hpp"
#include "wreathlab/isomorphism.hpp"
#include "wreathlab/structure.hpp"

namespace wreathlab {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("bad " + what + " '" + text + "'");
  }
  return value;
}

Subgroup named_subgroup(const FiniteGroup& g, const std::string& spec) {
  const auto target = construct_named(spec);
  if (g.order() % target.order() != 0) throw InvariantError(spec + " cannot be a subgroup: order does not divide");
  if (g.order() > 256) {
    auto emb = embeds_into(target, g);
    if (!emb) throw InvariantError("no subgroup isomorphic to " + spec);
    return subgroup_from_elements(g, emb->image_elements());
  }
  std::optional<Subgroup> fallback;
  for (auto& h : two_generated_subgroups(g)) {
    if (h.order() != target.order() || !are_isomorphic(h.group, target)) continue;
    if (is_normal(g, h)) return h;
    if (!fallback) fallback = std::move(h);
  }
  if (!fallback) throw InvariantError("no subgroup isomorphic to " + spec);
  return *fallback;
}

}  // namespace

FiniteGroup parse_group(const std::string& spec) {
  if (starts_with(spec, "file:")) return group_from_json(read_json_file(spec.substr(5)));
  return construct_named(spec);
}

Element parse_element(const FiniteGroup& g, const std::string& token) {
  const auto t = trim(token);
  if (auto x = g.find_label(t)) return *x;
  const auto idx = parse_count(t, "element");
  if (idx >= g.order()) throw ParseError("element index " + t + " out of range");
  return static_cast<Element>(idx);
}

std::vector<Subgroup> two_generated_subgroups(const FiniteGroup& g) {
  std::set<std::vector<Element>> seen;
  std::vector<Subgroup> out;
  auto add = [&](std::vector<Element> gens) {
    auto h = subgroup_generated(g, gens);
    std::vector<Element> members(h.elements().begin(), h.elements().end());
    if (seen.insert(members).second) out.push_back(std::move(h));
  };
  for (Element a = 0; a < g.order(); ++a) add({a});
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = a + 1; b < g.order(); ++b) add({a, b});
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return std::lexicographical_compare(x.elements().begin(), x.elements().end(), y.elements().begin(),
                                        y.elements().end());
  });
  return out;
}

Subgroup parse_subgroup(const FiniteGroup& g, const std::string& raw) {
  const auto spec = trim(raw);
  if (spec == "center") return center(g);
  if (spec == "trivial") return subgroup_generated(g, std::vector<Element>{g.identity()});
  if (spec == "whole") {
    std::vector<Element> all(g.order());
    for (Element x = 0; x < g.order(); ++x) all[x] = x;
    return subgroup_from_elements(g, std::move(all));
  }
  if (starts_with(spec, "stab:")) {
    const auto* perms = g.permutations();
    if (perms == nullptr) throw InvariantError("stab: needs a group with a natural action");
    const auto point = parse_count(spec.substr(5), "point");
    if (point < 1 || point > perms->degree) {
      throw ParseError("point " + spec.substr(5) + " outside 1.." + std::to_string(perms->degree));
    }
    std::vector<Element> members;
    for (Element x = 0; x < g.order(); ++x) {
      if (perms->of(x)[point - 1] == point - 1) members.push_back(x);
    }
    return subgroup_from_elements(g, std::move(members));
  }
  if (starts_with(spec, "gens:")) {
    std::vector<Element> gens;
    for (const auto& t : split(spec.substr(5), ',')) gens.push_back(parse_element(g, t));
    return subgroup_generated(g, gens);
  }
  return named_subgroup(g, spec);
}

std::vector<std::pair<Element, Element>> parse_section_overrides(const FiniteGroup& q, const FiniteGroup& g,
                                                                 const std::string& spec) {
  std::vector<std::pair<Element, Element>> out;
  if (trim(spec).empty()) return out;
  for (const auto& item : split(spec, ',')) {
    const auto colon = item.rfind(':');
    if (colon == std::string::npos) throw ParseError("section entry '" + item + "' must look like q:g");
    out.emplace_back(parse_element(q, item.substr(0, colon)), parse_element(g, item.substr(colon + 1)));
  }
  return out;
}

FiniteGSet parse_omega(const FiniteGroup& h, const std::string& mode) {
  if (mode == "regular") return regular_action(h);
  if (starts_with(mode, "natural:")) return natural_action(parse_count(mode.substr(8), "degree"), h);
  if (mode == "natural") return natural_action(h);
  if (starts_with(mode, "cosets:")) return coset_action(h, parse_subgroup(h, mode.substr(7))).action;
  if (starts_with(mode, "file:")) {
    const std::filesystem::path path = mode.substr(5);
    auto omega = action_from_json(read_json_file(path), path.parent_path());
    if (omega.group().order() != h.order() || omega.group().table() != h.table()) {
      throw InvariantError("the action file's group differs from the top group");
    }
    std::vector<Point> act;
    for (Element x = 0; x < h.order(); ++x) {
      auto row = omega.row(x);
      act.insert(act.end(), row.begin(), row.end());
    }
    return FiniteGSet::from_table(h, omega.size(), std::move(act), omega.point_labels());
  }
  throw ParseError("unknown omega mode '" + mode + "'");
}

GroupHom match_permutations(const FiniteGroup& a, const FiniteGroup& b) {
  const auto* pa = a.permutations();
  const auto* pb = b.permutations();
  if (pa == nullptr || pb == nullptr || pa->degree != pb->degree || a.order() != b.order()) {
    throw InvariantError("groups do not carry comparable permutation data");
  }
  std::vector<Element> image(a.order());
  for (Element x = 0; x < a.order(); ++x) {
    auto px = pa->of(x);
    bool found = false;
    for (Element y = 0; y < b.order() && !found; ++y) {
      auto py = pb->of(y);
      if (std::equal(px.begin(), px.end(), py.begin(), py.end())) {
        image[x] = y;
        found = true;
      }
    }
    if (!found) throw InvariantError("permutation of " + a.label(x) + " is missing from the other group");
  }
  return GroupHom(a, b, std::move(image));
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t offset = 0;
  for (const auto& item : split(text, ',')) {
    const auto t = trim(item);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
      throw ParseError("bad integer '" + item + "' at position " + std::to_string(offset));
    }
    out.push_back(v);
    offset += item.size() + 1;
  }
  return out;
}

QuadraticTower parse_tower(const std::string& field, const std::string& k_generators, const std::string& alpha) {
  MultiQuadField l(parse_int_list(field));
  const auto k = trim(k_generators).empty() ? std::vector<std::int64_t>{} : parse_int_list(k_generators);
  return QuadraticTower(l, k, parse_rational(alpha));
}

}  // namespace wreathlab
