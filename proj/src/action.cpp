#include "wreathlab/action.hpp"

#include <algorithm>

#include "wreathlab/errors.hpp"

namespace wreathlab {

FiniteGSet FiniteGSet::from_table(FiniteGroup group, std::size_t size, std::vector<Point> act,
                                  std::vector<std::string> point_labels) {
  if (size == 0) throw InvariantError("a G-set needs at least one point");
  if (act.size() != group.order() * size) throw InvariantError("action table has wrong shape");
  if (!point_labels.empty() && point_labels.size() != size) {
    throw InvariantError("point labels must have one entry per point");
  }
  for (Point p : act) {
    if (p >= size) throw InvariantError("action table entry out of range");
  }
  auto at = [&](Element h, Point w) { return act[static_cast<std::size_t>(h) * size + w]; };
  for (Point w = 0; w < size; ++w) {
    if (at(group.identity(), w) != w) {
      throw InvariantError("identity does not fix point " + std::to_string(w));
    }
  }
  for (Element h1 = 0; h1 < group.order(); ++h1) {
    for (Element h2 = 0; h2 < group.order(); ++h2) {
      const Element h12 = group.mul(h1, h2);
      for (Point w = 0; w < size; ++w) {
        if (at(h1, at(h2, w)) != at(h12, w)) {
          throw InvariantError("action is not compatible with multiplication at (" + std::to_string(h1) + ", " +
                               std::to_string(h2) + ", " + std::to_string(w) + ")");
        }
      }
    }
  }
  if (point_labels.empty()) {
    for (Point w = 0; w < size; ++w) point_labels.push_back(std::to_string(w));
  }
  return FiniteGSet(std::move(group), size, std::make_shared<const std::vector<Point>>(std::move(act)),
                    std::make_shared<const std::vector<std::string>>(std::move(point_labels)));
}

std::string FiniteGSet::point_label(Point w) const { return (*labels_)[w]; }

bool FiniteGSet::is_transitive() const {
  std::vector<bool> hit(size_, false);
  for (Element h = 0; h < group_.order(); ++h) hit[act(h, 0)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::size_t FiniteGSet::stabilizer_order(Point w) const {
  std::size_t count = 0;
  for (Element h = 0; h < group_.order(); ++h) count += act(h, w) == w ? 1 : 0;
  return count;
}

FiniteGSet regular_action(const FiniteGroup& h) {
  const std::size_t n = h.order();
  std::vector<Point> act(n * n);
  std::vector<std::string> labels;
  for (Element g = 0; g < n; ++g) {
    labels.push_back(h.label(g));
    for (Element x = 0; x < n; ++x) act[static_cast<std::size_t>(g) * n + x] = h.mul(g, x);
  }
  return FiniteGSet::from_table(h, n, std::move(act), std::move(labels));
}

CosetAction coset_action(const FiniteGroup& g, const Subgroup& h) {
  if (!h.inclusion.codomain().same_as(g)) throw InvariantError("subgroup does not belong to this group");
  constexpr Point kUnassigned = ~Point{0};
  std::vector<Point> coset_of(g.order(), kUnassigned);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kUnassigned) continue;
    const auto id = static_cast<Point>(reps.size());
    reps.push_back(x);
    for (Element m : h.elements()) coset_of[g.mul(x, m)] = id;
  }
  const std::size_t size = reps.size();
  std::vector<Point> act(g.order() * size);
  for (Element y = 0; y < g.order(); ++y) {
    for (Point w = 0; w < size; ++w) act[static_cast<std::size_t>(y) * size + w] = coset_of[g.mul(y, reps[w])];
  }
  std::vector<std::string> labels;
  for (Element r : reps) labels.push_back(g.label(r) + "H");
  auto action = FiniteGSet::from_table(g, size, std::move(act), std::move(labels));
  return CosetAction{std::move(action), Section{g, std::move(reps)}, std::move(coset_of)};
}

FiniteGSet natural_action(const FiniteGroup& g) {
  const auto* perms = g.permutations();
  if (perms == nullptr) throw InvariantError("group carries no permutation data");
  std::vector<Point> act(perms->images.begin(), perms->images.end());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < perms->degree; ++i) labels.push_back(std::to_string(i + 1));
  return FiniteGSet::from_table(g, perms->degree, std::move(act), std::move(labels));
}

FiniteGSet natural_action(std::size_t n, const FiniteGroup& g) {
  const auto* perms = g.permutations();
  if (perms == nullptr || perms->degree != n) {
    throw InvariantError("group does not act on " + std::to_string(n) + " points");
  }
  return natural_action(g);
}

bool check_equivariant(std::span<const Point> xi, const FiniteGSet& omega, const FiniteGSet& omega_hat,
                       const GroupHom& phi) {
  if (xi.size() != omega.size() || omega.size() != omega_hat.size()) return false;
  if (phi.domain().order() != omega.group().order() || phi.codomain().order() != omega_hat.group().order()) {
    return false;
  }
  std::vector<bool> hit(omega_hat.size(), false);
  for (Point v : xi) {
    if (v >= omega_hat.size() || hit[v]) return false;
    hit[v] = true;
  }
  for (Element h = 0; h < omega.group().order(); ++h) {
    for (Point w = 0; w < omega.size(); ++w) {
      if (xi[omega.act(h, w)] != omega_hat.act(phi(h), xi[w])) return false;
    }
  }
  return true;
}

}  // namespace wreathlab
