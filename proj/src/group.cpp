#include "wreathlab/group.hpp"

#include <algorithm>
#include <sstream>

#include "wreathlab/errors.hpp"

namespace wreathlab {

struct FiniteGroup::Impl {
  std::size_t order = 1;
  Element identity = 0;
  std::vector<Element> table;
  MulFn rule;
  std::vector<Element> inverses;
  std::vector<std::string> labels;
  LabelFn label_fn;
  std::optional<PermutationData> perms;
};

namespace {

std::string describe(std::string_view property, std::initializer_list<Element> witness) {
  std::ostringstream out;
  out << property << " fails at (";
  bool first = true;
  for (Element w : witness) {
    if (!first) out << ", ";
    out << w;
    first = false;
  }
  out << ")";
  return out.str();
}

}  // namespace

std::optional<TableDefect> find_table_defect(std::size_t order, Element identity,
                                             std::span<const Element> table) {
  if (order == 0) return TableDefect{"order", {}, "order must be positive"};
  if (table.size() != order * order) {
    return TableDefect{"shape", {}, "table must have order*order entries"};
  }
  if (identity >= order) return TableDefect{"identity", {identity}, "identity index out of range"};
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= order) {
      auto a = static_cast<Element>(i / order);
      auto b = static_cast<Element>(i % order);
      return TableDefect{"closure", {a, b}, describe("closure", {a, b})};
    }
  }
  auto at = [&](Element a, Element b) { return table[static_cast<std::size_t>(a) * order + b]; };
  for (Element j = 0; j < order; ++j) {
    if (at(identity, j) != j || at(j, identity) != j) {
      return TableDefect{"identity", {j}, describe("identity", {j})};
    }
  }
  for (Element i = 0; i < order; ++i) {
    bool found = false;
    for (Element j = 0; j < order; ++j) {
      if (at(i, j) == identity) {
        if (at(j, i) != identity) return TableDefect{"inverse", {i, j}, describe("inverse", {i, j})};
        found = true;
        break;
      }
    }
    if (!found) return TableDefect{"inverse", {i}, describe("inverse", {i})};
  }
  if (order <= kAssociativityCheckLimit) {
    for (Element a = 0; a < order; ++a) {
      for (Element b = 0; b < order; ++b) {
        const Element ab = at(a, b);
        for (Element c = 0; c < order; ++c) {
          if (at(ab, c) != at(a, at(b, c))) {
            return TableDefect{"associativity", {a, b, c}, describe("associativity", {a, b, c})};
          }
        }
      }
    }
  }
  return std::nullopt;
}

FiniteGroup::FiniteGroup() : FiniteGroup(std::make_shared<Impl>(Impl{1, 0, {0}, {}, {0}, {}, {}, {}})) {}

FiniteGroup::FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {
  order_ = impl_->order;
  identity_ = impl_->identity;
  table_ = impl_->table.empty() ? nullptr : impl_->table.data();
}

FiniteGroup FiniteGroup::from_table(std::size_t order, Element identity, std::vector<Element> table,
                                    std::vector<std::string> labels) {
  if (auto defect = find_table_defect(order, identity, table)) {
    throw InvariantError("invalid group table: " + defect->message);
  }
  if (!labels.empty() && labels.size() != order) {
    throw InvariantError("labels must have one entry per element");
  }
  auto impl = std::make_shared<Impl>();
  impl->order = order;
  impl->identity = identity;
  impl->table = std::move(table);
  impl->inverses.resize(order);
  for (Element i = 0; i < order; ++i) {
    for (Element j = 0; j < order; ++j) {
      if (impl->table[static_cast<std::size_t>(i) * order + j] == identity) {
        impl->inverses[i] = j;
        break;
      }
    }
  }
  impl->labels = std::move(labels);
  return FiniteGroup(std::move(impl));
}

FiniteGroup FiniteGroup::from_rule(std::size_t order, Element identity, MulFn mul,
                                   std::vector<Element> inverses, LabelFn labels) {
  if (order == 0) throw InvariantError("order must be positive");
  if (inverses.size() != order) throw InvariantError("inverse table has wrong length");
  if (order <= kDenseTableLimit) {
    std::vector<Element> table(order * order);
    for (Element a = 0; a < order; ++a) {
      for (Element b = 0; b < order; ++b) table[static_cast<std::size_t>(a) * order + b] = mul(a, b);
    }
    if (auto defect = find_table_defect(order, identity, table)) {
      throw InvariantError("invalid group rule: " + defect->message);
    }
    auto impl = std::make_shared<Impl>();
    impl->order = order;
    impl->identity = identity;
    impl->table = std::move(table);
    impl->inverses = std::move(inverses);
    for (Element a = 0; a < order; ++a) {
      if (impl->table[static_cast<std::size_t>(a) * order + impl->inverses[a]] != identity) {
        throw InvariantError(describe("supplied inverse", {a}));
      }
    }
    impl->label_fn = std::move(labels);
    return FiniteGroup(std::move(impl));
  }
  if (identity >= order) throw InvariantError("identity index out of range");
  for (Element a = 0; a < order; ++a) {
    if (inverses[a] >= order || mul(a, inverses[a]) != identity || mul(inverses[a], a) != identity) {
      throw InvariantError(describe("inverse", {a}));
    }
    if (mul(identity, a) != a || mul(a, identity) != a) throw InvariantError(describe("identity", {a}));
  }
  auto impl = std::make_shared<Impl>();
  impl->order = order;
  impl->identity = identity;
  impl->rule = std::move(mul);
  impl->inverses = std::move(inverses);
  impl->label_fn = std::move(labels);
  return FiniteGroup(std::move(impl));
}

FiniteGroup FiniteGroup::with_permutations(PermutationData perms) const {
  if (perms.images.size() != perms.degree * order_) {
    throw InvariantError("permutation data has wrong shape");
  }
  for (Element x = 0; x < order_; ++x) {
    auto p = perms.of(x);
    std::vector<bool> hit(perms.degree, false);
    for (auto v : p) {
      if (v >= perms.degree || hit[v]) throw InvariantError(describe("permutation", {x}));
      hit[v] = true;
    }
  }
  // The data must compose like the group: (xy)(i) = x(y(i)).
  if (order_ <= kDenseTableLimit) {
    for (Element x = 0; x < order_; ++x) {
      for (Element y = 0; y < order_; ++y) {
        auto px = perms.of(x), py = perms.of(y), pxy = perms.of(mul(x, y));
        for (std::size_t i = 0; i < perms.degree; ++i) {
          if (pxy[i] != px[py[i]]) throw InvariantError(describe("permutation composition", {x, y}));
        }
      }
    }
  }
  auto impl = std::make_shared<Impl>(*impl_);
  impl->perms = std::move(perms);
  return FiniteGroup(std::move(impl));
}

Element FiniteGroup::slow_mul(Element a, Element b) const { return impl_->rule(a, b); }

Element FiniteGroup::inverse(Element a) const { return impl_->inverses[a]; }

Element FiniteGroup::power(Element x, std::int64_t k) const {
  if (k < 0) {
    x = inverse(x);
    k = -k;
  }
  Element result = identity_;
  Element base = x;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::string FiniteGroup::label(Element x) const {
  if (!impl_->labels.empty()) return impl_->labels[x];
  if (impl_->label_fn) return impl_->label_fn(x);
  return std::to_string(x);
}

bool FiniteGroup::has_labels() const { return !impl_->labels.empty() || static_cast<bool>(impl_->label_fn); }

std::optional<Element> FiniteGroup::find_label(std::string_view text) const {
  for (Element x = 0; x < order_; ++x) {
    if (label(x) == text) return x;
  }
  return std::nullopt;
}

const PermutationData* FiniteGroup::permutations() const {
  return impl_->perms ? &*impl_->perms : nullptr;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a) {
    for (Element b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<Element> FiniteGroup::table() const {
  if (table_ != nullptr) return impl_->table;
  std::vector<Element> out(order_ * order_);
  for (Element a = 0; a < order_; ++a) {
    for (Element b = 0; b < order_; ++b) out[static_cast<std::size_t>(a) * order_ + b] = mul(a, b);
  }
  return out;
}

GroupHom::GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<Element> image)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), image_(std::move(image)) {
  if (image_.size() != domain_.order()) throw InvariantError("hom image has wrong length");
  for (Element v : image_) {
    if (v >= codomain_.order()) throw InvariantError("hom image entry out of range");
  }
}

GroupHom GroupHom::identity(const FiniteGroup& g) {
  std::vector<Element> image(g.order());
  for (Element x = 0; x < g.order(); ++x) image[x] = x;
  return GroupHom(g, g, std::move(image));
}

std::optional<std::pair<Element, Element>> GroupHom::find_violation() const {
  const Element e = domain_.identity();
  if (image_[e] != codomain_.identity()) return std::pair{e, e};
  const auto n = static_cast<Element>(domain_.order());
  for (Element a = 0; a < n; ++a) {
    const Element ia = image_[a];
    for (Element b = 0; b < n; ++b) {
      if (image_[domain_.mul(a, b)] != codomain_.mul(ia, image_[b])) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

bool GroupHom::is_injective() const { return image_elements().size() == image_.size(); }

bool GroupHom::is_surjective() const { return image_elements().size() == codomain_.order(); }

std::vector<Element> GroupHom::image_elements() const {
  std::vector<bool> hit(codomain_.order(), false);
  std::vector<Element> out;
  for (Element v : image_) {
    if (!hit[v]) {
      hit[v] = true;
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> GroupHom::kernel() const {
  std::vector<Element> out;
  for (Element x = 0; x < image_.size(); ++x) {
    if (image_[x] == codomain_.identity()) out.push_back(x);
  }
  return out;
}

GroupHom GroupHom::then(const GroupHom& next) const {
  if (!codomain_.same_as(next.domain_)) throw InvariantError("cannot compose: group mismatch");
  std::vector<Element> image(image_.size());
  for (std::size_t x = 0; x < image_.size(); ++x) image[x] = next.image_[image_[x]];
  return GroupHom(domain_, next.codomain_, std::move(image));
}

GroupHom GroupHom::inverse() const {
  if (domain_.order() != codomain_.order() || !is_injective()) {
    throw NotIsomorphism("map is not a bijection");
  }
  std::vector<Element> image(image_.size());
  for (Element x = 0; x < image_.size(); ++x) image[image_[x]] = x;
  return GroupHom(codomain_, domain_, std::move(image));
}

std::vector<bool> Subgroup::mask() const {
  std::vector<bool> out(inclusion.codomain().order(), false);
  for (Element x : elements()) out[x] = true;
  return out;
}

std::optional<Element> Subgroup::locate(Element parent_element) const {
  auto members = elements();
  auto it = std::lower_bound(members.begin(), members.end(), parent_element);
  if (it == members.end() || *it != parent_element) return std::nullopt;
  return static_cast<Element>(it - members.begin());
}

}  // namespace wreathlab
