#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "wreathlab/group.hpp"

namespace wreathlab {

/// Index of a point of a finite G-set.
using Point = std::uint32_t;

/// A left action of a finite group H on the points 0..size-1, stored as the
/// full |H| x size table act[h][w] = h . w. Immutable and cheap to copy.
class FiniteGSet {
 public:
  /// Validates both action axioms (e . w = w and h1 . (h2 . w) = (h1 h2) . w)
  /// exhaustively; throws InvariantError on the first failure.
  static FiniteGSet from_table(FiniteGroup group, std::size_t size, std::vector<Point> act,
                               std::vector<std::string> point_labels = {});

  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return size_; }
  Point act(Element h, Point w) const { return (*act_)[static_cast<std::size_t>(h) * size_ + w]; }
  std::span<const Point> row(Element h) const {
    return {act_->data() + static_cast<std::size_t>(h) * size_, size_};
  }
  std::string point_label(Point w) const;
  const std::vector<std::string>& point_labels() const noexcept { return *labels_; }

  bool is_transitive() const;
  /// Order of the stabilizer of w.
  std::size_t stabilizer_order(Point w) const;

 private:
  FiniteGSet(FiniteGroup group, std::size_t size, std::shared_ptr<const std::vector<Point>> act,
             std::shared_ptr<const std::vector<std::string>> labels)
      : group_(std::move(group)), size_(size), act_(std::move(act)), labels_(std::move(labels)) {}

  FiniteGroup group_;
  std::size_t size_ = 0;
  std::shared_ptr<const std::vector<Point>> act_;
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// H acting on itself by left multiplication.
FiniteGSet regular_action(const FiniteGroup& h);

struct CosetAction {
  FiniteGSet action;
  /// Minimal-index representative of each coset (a map from points to G).
  Section representatives;
  /// coset_of[g] = the point (coset) containing g.
  std::vector<Point> coset_of;
};

/// G acting by left translation on the left cosets gH, sorted by minimal
/// member.
CosetAction coset_action(const FiniteGroup& g, const Subgroup& h);

/// Evaluation action of a group carrying one-line permutation data.
FiniteGSet natural_action(const FiniteGroup& g);
/// As above, additionally requiring the permutation degree to be n.
FiniteGSet natural_action(std::size_t n, const FiniteGroup& g);

/// xi(h . w) = phi(h) . xi(w) for every h and w, with xi a bijection.
bool check_equivariant(std::span<const Point> xi, const FiniteGSet& omega, const FiniteGSet& omega_hat,
                       const GroupHom& phi);

}  // namespace wreathlab
