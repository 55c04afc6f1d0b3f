#include "wreathlab/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "wreathlab/errors.hpp"
#include "wreathlab/structure.hpp"

namespace wreathlab {
namespace {

std::vector<std::uint32_t> centralizer_sizes(const FiniteGroup& g) {
  std::vector<std::uint32_t> out(g.order(), 0);
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) out[x] += g.mul(x, y) == g.mul(y, x) ? 1 : 0;
  }
  return out;
}

std::map<std::uint32_t, std::size_t> order_profile(const std::vector<std::uint32_t>& orders) {
  std::map<std::uint32_t, std::size_t> profile;
  for (auto o : orders) ++profile[o];
  return profile;
}

/// Backtracking search for an injective homomorphism a -> b, assigning images
/// to a greedy generating set of a one generator at a time.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const FiniteGroup& a, const FiniteGroup& b, const SearchOptions& options)
      : a_(a), b_(b), budget_(options.node_budget) {
    gens_ = greedy_generators(a_);
    ord_a_ = element_orders(a_);
    ord_b_ = element_orders(b_);
    use_centralizers_ = a_.is_dense() && b_.is_dense();
    if (use_centralizers_) {
      cent_a_ = centralizer_sizes(a_);
      cent_b_ = centralizer_sizes(b_);
    }
    image_.assign(a_.order(), 0);
    seen_a_.assign(a_.order(), 0);
    seen_b_.assign(b_.order(), 0);
    build_candidates();
  }

  std::optional<GroupHom> run() {
    if (gens_.empty()) {
      // a is trivial.
      std::vector<Element> image(a_.order(), b_.identity());
      return GroupHom(a_, b_, std::move(image));
    }
    if (!descend(0)) return std::nullopt;
    return GroupHom(a_, b_, image_);
  }

 private:
  void build_candidates() {
    std::vector<bool> class_rep(b_.order(), true);
    if (b_.is_dense()) {
      const auto cls = conjugacy_classes(b_);
      std::vector<bool> taken(b_.order(), false);
      for (Element y = 0; y < b_.order(); ++y) {
        class_rep[y] = !taken[cls[y]];
        taken[cls[y]] = true;
      }
    }
    candidates_.resize(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      const Element g = gens_[i];
      for (Element y = 0; y < b_.order(); ++y) {
        if (ord_b_[y] != ord_a_[g]) continue;
        if (use_centralizers_ && cent_b_[y] % cent_a_[g] != 0) continue;
        // Conjugating a solution by b keeps it a solution, so the first image
        // may be taken up to conjugacy.
        if (i == 0 && !class_rep[y]) continue;
        candidates_[i].push_back(y);
      }
    }
  }

  bool descend(std::size_t depth) {
    for (Element y : candidates_[depth]) {
      if (++nodes_ > budget_) {
        throw SearchBudgetExceeded("embedding search exceeded node budget of " + std::to_string(budget_));
      }
      assigned_.push_back(y);
      if (pairwise_orders_match(depth) && extend_consistently(depth)) {
        if (depth + 1 == gens_.size()) return true;
        if (descend(depth + 1)) return true;
      }
      assigned_.pop_back();
    }
    return false;
  }

  bool pairwise_orders_match(std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      if (ord_a_[a_.mul(gens_[i], gens_[depth])] != ord_b_[b_.mul(assigned_[i], assigned_[depth])]) return false;
      if (ord_a_[a_.mul(gens_[depth], gens_[i])] != ord_b_[b_.mul(assigned_[depth], assigned_[i])]) return false;
    }
    return true;
  }

  /// Walks the Cayley graph of <gens[0..depth]> from the identity, defining
  /// image(x g_i) = image(x) image(g_i). Fails on any conflict or collision.
  /// Consistency along every generator edge makes the map a homomorphism on
  /// the generated subgroup.
  bool extend_consistently(std::size_t depth) {
    ++stamp_;
    queue_.clear();
    queue_.push_back(a_.identity());
    seen_a_[a_.identity()] = stamp_;
    seen_b_[b_.identity()] = stamp_;
    image_[a_.identity()] = b_.identity();
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Element x = queue_[head];
      for (std::size_t i = 0; i <= depth; ++i) {
        const Element next = a_.mul(x, gens_[i]);
        const Element target = b_.mul(image_[x], assigned_[i]);
        if (seen_a_[next] == stamp_) {
          if (image_[next] != target) return false;
          continue;
        }
        if (seen_b_[target] == stamp_) return false;
        seen_a_[next] = stamp_;
        seen_b_[target] = stamp_;
        image_[next] = target;
        queue_.push_back(next);
      }
    }
    return true;
  }

  const FiniteGroup& a_;
  const FiniteGroup& b_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Element> gens_;
  std::vector<std::uint32_t> ord_a_, ord_b_, cent_a_, cent_b_;
  bool use_centralizers_ = false;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> assigned_;
  std::vector<Element> image_;
  std::vector<std::uint32_t> seen_a_, seen_b_;
  std::uint32_t stamp_ = 0;
  std::vector<Element> queue_;
};

bool invariants_match(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  if (a.is_abelian() != b.is_abelian()) return false;
  if (order_profile(element_orders(a)) != order_profile(element_orders(b))) return false;
  return center(a).order() == center(b).order();
}

struct CatalogEntry {
  std::string name;
  std::size_t order;
};

std::string join_cyclic(const std::vector<int>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += " \xC3\x97 ";
    out += "C:" + std::to_string(factors[i]);
  }
  return out;
}

/// Invariant-factor lists d1 | d2 | ... | dk with k >= 2 and product <= limit.
void abelian_noncyclic(std::vector<int>& prefix, int product, int limit, std::vector<CatalogEntry>& out) {
  if (prefix.size() >= 2) out.push_back({join_cyclic(prefix), static_cast<std::size_t>(product)});
  const int last = prefix.empty() ? 2 : prefix.back();
  for (int d = last; product * d <= limit; d += last) {
    if (!prefix.empty() && d % prefix.back() != 0) continue;
    prefix.push_back(d);
    abelian_noncyclic(prefix, product * d, limit, out);
    prefix.pop_back();
  }
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    constexpr int kLimit = 64;
    std::vector<CatalogEntry> out;
    for (int n = 1; n <= kLimit; ++n) out.push_back({"C:" + std::to_string(n), static_cast<std::size_t>(n)});
    out.push_back({"S:3", 6});
    out.push_back({"S:4", 24});
    out.push_back({"A:4", 12});
    for (int n = 4; 2 * n <= kLimit; ++n) out.push_back({"D:" + std::to_string(n), static_cast<std::size_t>(2 * n)});
    out.push_back({"Q8", 8});
    std::vector<CatalogEntry> abelian;
    std::vector<int> prefix;
    abelian_noncyclic(prefix, 1, kLimit, abelian);
    out.insert(out.end(), abelian.begin(), abelian.end());
    std::vector<CatalogEntry> nonabelian{{"S:3", 6}, {"Q8", 8}, {"A:4", 12}, {"S:4", 24}};
    for (int n = 4; 2 * n <= kLimit / 2; ++n) nonabelian.push_back({"D:" + std::to_string(n), static_cast<std::size_t>(2 * n)});
    std::vector<CatalogEntry> factors;
    for (int n = 2; n <= kLimit / 6; ++n) factors.push_back({"C:" + std::to_string(n), static_cast<std::size_t>(n)});
    for (const auto& e : abelian) {
      if (e.order <= kLimit / 6) factors.push_back(e);
    }
    for (const auto& x : nonabelian) {
      for (const auto& f : factors) {
        if (x.order * f.order <= kLimit) out.push_back({x.name + " \xC3\x97 " + f.name, x.order * f.order});
      }
    }
    return out;
  }();
  return entries;
}

}  // namespace

std::optional<GroupHom> are_isomorphic(const FiniteGroup& a, const FiniteGroup& b, const SearchOptions& options) {
  if (!invariants_match(a, b)) return std::nullopt;
  EmbeddingSearch search(a, b, options);
  return search.run();
}

std::optional<GroupHom> embeds_into(const FiniteGroup& a, const FiniteGroup& b, const SearchOptions& options) {
  if (b.order() % a.order() != 0) return std::nullopt;
  const auto pa = order_profile(element_orders(a));
  const auto pb = order_profile(element_orders(b));
  for (const auto& [ord, count] : pa) {
    auto it = pb.find(ord);
    if (it == pb.end() || it->second < count) return std::nullopt;
  }
  EmbeddingSearch search(a, b, options);
  return search.run();
}

std::string identify_small(const FiniteGroup& g) {
  if (g.order() > 64) throw InvariantError("identify_small supports order <= 64");
  for (const auto& entry : catalog()) {
    if (entry.order != g.order()) continue;
    if (are_isomorphic(g, construct_named(entry.name))) return entry.name;
  }
  return "unidentified(order=" + std::to_string(g.order()) + ")";
}

bool check_presentation_d4(const FiniteGroup& g, Element x, Element y) {
  if (x >= g.order() || y >= g.order()) throw InvariantError("element index out of range");
  const Element e = g.identity();
  if (g.power(x, 4) != e || g.power(y, 2) != e) return false;
  if (g.conjugate(y, x) != g.inverse(x)) return false;
  const Element gens[] = {x, y};
  return subgroup_generated(g, gens).order() == g.order();
}

}  // namespace wreathlab
