#include "wreathlab/embeddings.hpp"

#include <algorithm>
#include <set>

#include "wreathlab/errors.hpp"

namespace wreathlab {
namespace {

constexpr Element kNone = ~Element{0};

bool is_bijective_hom(const GroupHom& f) {
  return f.domain().order() == f.codomain().order() && f.is_injective() && f.is_homomorphism();
}

GroupHom transport(const GroupHom& psi, const GroupHom& phi, std::span<const Point> xi, const WreathProduct& w,
                   const WreathProduct& w_hat) {
  if (psi.domain().order() != w.base().order() || psi.codomain().order() != w_hat.base().order()) {
    throw InvariantError("psi does not map between the base groups");
  }
  if (phi.domain().order() != w.top_group().order() || phi.codomain().order() != w_hat.top_group().order()) {
    throw InvariantError("phi does not map between the top groups");
  }
  if (!check_equivariant(xi, w.top(), w_hat.top(), phi)) throw NotEquivariant("xi is not an equivariant bijection");
  std::vector<Point> xi_inv(xi.size());
  for (Point p = 0; p < xi.size(); ++p) xi_inv[xi[p]] = p;

  const auto& src = w.product();
  std::vector<Element> image(src.order());
  Tuple f_hat(w_hat.omega_size());
  for (Element x = 0; x < src.order(); ++x) {
    const Element h = w.top_of(x);
    for (Point v = 0; v < f_hat.size(); ++v) f_hat[v] = psi(w.coordinate(x, xi_inv[v]));
    image[x] = w_hat.encode(f_hat, phi(h));
  }
  return GroupHom(src, w_hat.product(), std::move(image));
}

}  // namespace

ShortExactSequence::ShortExactSequence(GroupHom iota, GroupHom eps) : iota_(std::move(iota)), eps_(std::move(eps)) {
  if (!iota_.codomain().same_as(eps_.domain()) && iota_.codomain().order() != eps_.domain().order()) {
    throw InvariantError("iota and eps do not share the middle group");
  }
  if (!iota_.is_homomorphism() || !eps_.is_homomorphism()) throw InvariantError("iota and eps must be homomorphisms");
  if (!iota_.is_injective()) throw InvariantError("iota is not injective");
  if (!eps_.is_surjective()) throw NotSurjective("eps is not surjective");
  if (iota_.image_elements() != eps_.kernel()) throw InvariantError("image(iota) differs from kernel(eps)");
  preimage_.assign(g().order(), kNone);
  for (Element x = 0; x < n().order(); ++x) preimage_[iota_(x)] = x;
}

ShortExactSequence ShortExactSequence::from_normal(const FiniteGroup& g, const Subgroup& n) {
  auto q = quotient(g, n);
  return ShortExactSequence(n.inclusion, q.projection);
}

std::optional<Element> ShortExactSequence::pull_back(Element x) const {
  if (preimage_[x] == kNone) return std::nullopt;
  return preimage_[x];
}

nlohmann::ordered_json EmbeddingReport::to_json() const {
  nlohmann::ordered_json out;
  out["is_homomorphism"] = is_homomorphism;
  out["is_injective"] = is_injective;
  out["image_order"] = image_order;
  out["wreath_order"] = wreath_order;
  out["image_is_full"] = image_is_full;
  if (counterexample) {
    out["counterexample"] = {counterexample->first, counterexample->second};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

EmbeddingReport verify_embedding(const GroupHom& phi) {
  EmbeddingReport report;
  report.counterexample = phi.find_violation();
  report.is_homomorphism = !report.counterexample.has_value();
  report.image_order = phi.image_elements().size();
  report.is_injective = report.image_order == phi.domain().order();
  report.wreath_order = phi.codomain().order();
  report.image_is_full = report.image_order == report.wreath_order;
  return report;
}

Section default_section(const GroupHom& eps, std::span<const std::pair<Element, Element>> overrides) {
  const auto& g = eps.domain();
  const auto& q = eps.codomain();
  std::vector<Element> choice(q.order(), kNone);
  for (Element x = 0; x < g.order(); ++x) {
    if (choice[eps(x)] == kNone) choice[eps(x)] = x;
  }
  if (std::find(choice.begin(), choice.end(), kNone) != choice.end()) throw NotSurjective("eps is not surjective");
  if (eps(g.identity()) == q.identity()) choice[q.identity()] = g.identity();
  for (const auto& [qe, ge] : overrides) {
    if (qe >= q.order() || ge >= g.order()) throw SectionMismatch("section override out of range");
    if (eps(ge) != qe) {
      throw SectionMismatch("override " + g.label(ge) + " does not lie over " + q.label(qe));
    }
    choice[qe] = ge;
  }
  return Section{g, std::move(choice)};
}

void check_section(const GroupHom& eps, const Section& s) {
  if (s.size() != eps.codomain().order()) throw SectionMismatch("section has the wrong length");
  for (Element q = 0; q < s.size(); ++q) {
    if (s(q) >= eps.domain().order() || eps(s(q)) != q) {
      throw SectionMismatch("eps(s(" + eps.codomain().label(q) + ")) differs from " + eps.codomain().label(q));
    }
  }
}

std::vector<Section> all_sections(const GroupHom& eps) {
  const auto& q = eps.codomain();
  std::vector<std::vector<Element>> fibres(q.order());
  for (Element x = 0; x < eps.domain().order(); ++x) fibres[eps(x)].push_back(x);
  std::vector<Section> out;
  std::vector<std::size_t> pick(q.order(), 0);
  for (const auto& f : fibres) {
    if (f.empty()) throw NotSurjective("eps is not surjective");
  }
  while (true) {
    std::vector<Element> choice(q.order());
    for (std::size_t i = 0; i < choice.size(); ++i) choice[i] = fibres[i][pick[i]];
    out.push_back(Section{eps.domain(), std::move(choice)});
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == fibres[i].size()) pick[i++] = 0;
    if (i == pick.size()) return out;
  }
}

Embedding kk_embedding(const ShortExactSequence& ses, const Section& s, std::uint64_t size_cap) {
  check_section(ses.eps(), s);
  auto wreath = regular_wreath(ses.n(), ses.q(), size_cap);
  const auto& g = ses.g();
  const auto& q = ses.q();
  std::vector<Element> image(g.order());
  Tuple sigma(q.order());
  for (Element x = 0; x < g.order(); ++x) {
    const Element ex = ses.eps()(x);
    const Element ex_inv = q.inverse(ex);
    for (Element p = 0; p < q.order(); ++p) {
      const Element value = g.mul(g.mul(g.inverse(s(p)), x), s(q.mul(ex_inv, p)));
      const auto n = ses.pull_back(value);
      if (!n) {
        throw InvariantError("sigma_" + g.label(x) + "(" + q.label(p) + ") = " + g.label(value) + " is not in N");
      }
      sigma[p] = *n;
    }
    image[x] = wreath.encode(sigma, ex);
  }
  GroupHom phi(g, wreath.product(), std::move(image));
  return Embedding{std::move(wreath), std::move(phi)};
}

OmegaEmbedding omega_embedding(const FiniteGroup& g, const Subgroup& h_k, const std::optional<Section>& s,
                               std::uint64_t size_cap) {
  auto core = normal_core(g, h_k);
  auto top = quotient(g, core);
  auto cosets = coset_action(g, h_k);
  const std::size_t n_points = cosets.action.size();
  const auto& qg = top.group;

  // Induced action of Q = G/M on the cosets through any lift.
  std::vector<Point> act(qg.order() * n_points);
  for (Element q = 0; q < qg.order(); ++q) {
    for (Point w = 0; w < n_points; ++w) act[q * n_points + w] = cosets.action.act(top.representatives[q], w);
  }
  for (Element x = 0; x < g.order(); ++x) {
    for (Point w = 0; w < n_points; ++w) {
      if (act[top.projection(x) * n_points + w] != cosets.action.act(x, w)) {
        throw InvariantError("the quotient action on cosets is not well defined");
      }
    }
  }
  auto omega = FiniteGSet::from_table(qg, n_points, std::move(act), cosets.action.point_labels());

  Section section = s.value_or(cosets.representatives);
  if (section.size() != n_points) throw SectionMismatch("section must choose one element per coset");
  for (Point w = 0; w < n_points; ++w) {
    if (section(w) >= g.order() || cosets.coset_of[section(w)] != w) {
      throw SectionMismatch("s(" + cosets.action.point_label(w) + ") does not lie in that coset");
    }
  }

  auto wreath = build_wreath(h_k.group, omega, size_cap);
  std::vector<Element> image(g.order());
  Tuple sigma(n_points);
  for (Element x = 0; x < g.order(); ++x) {
    const Element ex = top.projection(x);
    const Element ex_inv = qg.inverse(ex);
    for (Point w = 0; w < n_points; ++w) {
      const Point moved = omega.act(ex_inv, w);
      const Element value = g.mul(g.mul(g.inverse(section(w)), x), section(moved));
      const auto local = h_k.locate(value);
      if (!local) {
        throw InvariantError("sigma_" + g.label(x) + "(" + omega.point_label(w) + ") = " + g.label(value) +
                             " is not in H_K");
      }
      sigma[w] = *local;
    }
    image[x] = wreath.encode(sigma, ex);
  }
  GroupHom phi(g, wreath.product(), std::move(image));
  return OmegaEmbedding{std::move(wreath), std::move(phi), std::move(core), std::move(top), std::move(cosets),
                        std::move(section)};
}

GroupHom transport_iso(const GroupHom& psi, const GroupHom& phi, std::span<const Point> xi, const WreathProduct& w,
                       const WreathProduct& w_hat, bool verify) {
  if (!is_bijective_hom(psi)) throw NotIsomorphism("psi is not an isomorphism");
  if (!is_bijective_hom(phi)) throw NotIsomorphism("phi is not an isomorphism");
  auto theta = transport(psi, phi, xi, w, w_hat);
  if (verify && (!theta.is_injective() || !theta.is_surjective() || !theta.is_homomorphism())) {
    throw NotIsomorphism("transported map is not an isomorphism");
  }
  return theta;
}

GroupHom transport_regular(const GroupHom& psi, const GroupHom& phi, const WreathProduct& w,
                           const WreathProduct& w_hat, bool verify) {
  std::vector<Point> xi(phi.images().begin(), phi.images().end());
  return transport_iso(psi, phi, xi, w, w_hat, verify);
}

GroupHom transport_subgroup(const GroupHom& psi, const GroupHom& phi, std::span<const Point> xi,
                            const WreathProduct& w, const WreathProduct& w_hat) {
  if (!psi.is_homomorphism() || !psi.is_injective()) throw InvariantError("psi is not an injective homomorphism");
  if (!phi.is_homomorphism() || !phi.is_injective()) throw InvariantError("phi is not an injective homomorphism");
  return transport(psi, phi, xi, w, w_hat);
}

SolvabilityResult solvability_criterion(const FiniteGroup& g, int p, const SearchOptions& options) {
  if (p != 2 && p != 3) throw UnsupportedPrime("solvability criterion supports p = 2 and p = 3 only");
  auto agl = construct_named("AGL:" + std::to_string(p));
  auto target = build_wreath(agl, natural_action(agl));
  auto witness = embeds_into(g, target.product(), options);
  const bool solvable = witness.has_value();
  return SolvabilityResult{solvable, std::move(target), std::move(witness)};
}

}  // namespace wreathlab
