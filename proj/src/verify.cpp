#include "wreathlab/verify.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <random>

#include "wreathlab/embeddings.hpp"
#include "wreathlab/errors.hpp"
#include "wreathlab/fields.hpp"
#include "wreathlab/io.hpp"
#include "wreathlab/sizes.hpp"
#include "wreathlab/specs.hpp"

namespace wreathlab {
namespace {

/// Collects checks for one property; keeps the first failure.
class Tally {
 public:
  Tally(std::string suite, std::string property) {
    result_.suite = std::move(suite);
    result_.property = std::move(property);
  }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checked;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }
  void add_checked(std::uint64_t n) { result_.checked += n; }
  void fail(std::string why) {
    if (result_.passed) {
      result_.passed = false;
      result_.counterexample = std::move(why);
    }
  }
  PropertyResult done() const { return result_; }

 private:
  PropertyResult result_;
};

std::string tuple_text(const std::vector<Element>& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + std::to_string(f[i]);
  return out + "]";
}

/// Homomorphism law of f, exhaustively or on random pairs.
void check_hom(Tally& tally, const GroupHom& f, const VerifyDepth& depth, std::mt19937_64& rng,
               const std::string& where) {
  const auto& a = f.domain();
  const auto& b = f.codomain();
  if (depth.samples == 0) {
    const auto bad = f.find_violation();
    tally.add_checked(a.order() * a.order() - 1);
    tally.check(!bad, [&] {
      return where + ": image(" + a.label(bad->first) + " * " + a.label(bad->second) + ") differs";
    });
    return;
  }
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(a.order() - 1));
  for (std::uint64_t i = 0; i < depth.samples; ++i) {
    const Element x = pick(rng);
    const Element y = pick(rng);
    tally.check(f(a.mul(x, y)) == b.mul(f(x), f(y)),
                [&] { return where + ": image(" + a.label(x) + " * " + a.label(y) + ") differs"; });
  }
}

Subgroup generated(const FiniteGroup& g, std::initializer_list<const char*> labels) {
  std::vector<Element> gens;
  for (const char* l : labels) gens.push_back(*g.find_label(l));
  return subgroup_generated(g, gens);
}

struct KKCase {
  std::string name;
  FiniteGroup g;
  Subgroup n;
};

std::vector<KKCase> kk_catalog() {
  std::vector<KKCase> out;
  auto add = [&](const char* name, const char* spec, std::initializer_list<const char*> gens) {
    auto g = construct_named(spec);
    out.push_back({name, g, generated(g, gens)});
  };
  add("S:3/A:3", "S:3", {"231"});
  add("D:4/<r>", "D:4", {"r"});
  add("D:4/V4", "D:4", {"s", "r2"});
  add("S:4/V4", "S:4", {"2143", "3412"});
  add("Q8/center", "Q8", {"-1"});
  return out;
}

}  // namespace

VerifyDepth VerifyDepth::parse(const std::string& text, std::uint64_t seed) {
  if (text == "exhaustive") return {0, seed};
  if (text.rfind("sampled:", 0) == 0) {
    const std::string n = text.substr(8);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(n.data(), n.data() + n.size(), v);
    if (ec == std::errc() && ptr == n.data() + n.size() && v > 0) return {v, seed};
  }
  throw ParseError("depth must be 'exhaustive' or 'sampled:n' with n >= 1, got '" + text + "'");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cocycle", "group", "iso", "kk", "omega", "theta"};
  return names;
}

std::vector<PropertyResult> verify_theta(const VerifyDepth& depth, std::uint64_t max_size) {
  Tally composition("theta", "composition");
  Tally automorphism("theta", "automorphism");
  std::mt19937_64 rng(depth.seed);
  const std::vector<std::string> bases{"C:1", "C:2", "C:3", "V4", "S:3"};
  const std::vector<std::pair<std::string, std::string>> tops{
      {"C:2", "regular"},   {"C:3", "regular"},  {"C:4", "regular"},   {"V4", "regular"},
      {"S:3", "regular"},   {"S:3", "natural"},  {"AGL:3", "natural"}, {"D:4", "natural"},
      {"A:4", "natural"},   {"S:4", "natural"}};
  for (const auto& kspec : bases) {
    const auto k = construct_named(kspec);
    for (const auto& [hspec, mode] : tops) {
      const auto h = construct_named(hspec);
      const auto omega = parse_omega(h, mode);
      const auto n = omega.size();
      const BigInt size = boost::multiprecision::pow(BigInt(k.order()), static_cast<unsigned>(n)) * h.order();
      if (size > max_size) continue;
      const std::string where = kspec + " wr " + hspec + " (" + mode + ")";
      const std::size_t nf = static_cast<std::size_t>(size / h.order());

      std::vector<Tuple> tuples(nf, Tuple(n));
      for (std::size_t i = 0; i < nf; ++i) {
        std::size_t r = i;
        for (std::size_t w = 0; w < n; ++w, r /= k.order()) tuples[i][w] = static_cast<Element>(r % k.order());
      }
      auto index = [&](const Tuple& f) {
        std::size_t i = 0;
        for (std::size_t w = n; w-- > 0;) i = i * k.order() + f[w];
        return i;
      };
      // theta_h(f) as tuple indices, computed by the library.
      std::vector<std::size_t> image(h.order() * nf);
      for (Element x = 0; x < h.order(); ++x) {
        for (std::size_t i = 0; i < nf; ++i) image[x * nf + i] = index(theta(omega, x, tuples[i]));
      }
      auto product = [&](std::size_t a, std::size_t b) {
        Tuple f(n);
        for (std::size_t w = 0; w < n; ++w) f[w] = k.mul(tuples[a][w], tuples[b][w]);
        return index(f);
      };

      auto compose = [&](Element x, Element y, std::size_t i) {
        composition.check(image[h.mul(x, y) * nf + i] == image[x * nf + image[y * nf + i]], [&] {
          return where + ": theta(" + h.label(x) + "*" + h.label(y) + ") on " + tuple_text(tuples[i]);
        });
      };
      auto respects = [&](Element x, std::size_t i, std::size_t j) {
        automorphism.check(image[x * nf + product(i, j)] == product(image[x * nf + i], image[x * nf + j]), [&] {
          return where + ": theta(" + h.label(x) + ") on " + tuple_text(tuples[i]) + "*" + tuple_text(tuples[j]);
        });
      };

      if (depth.samples == 0) {
        for (Element x = 0; x < h.order(); ++x)
          for (Element y = 0; y < h.order(); ++y)
            for (std::size_t i = 0; i < nf; ++i) compose(x, y, i);
        for (Element x = 0; x < h.order(); ++x)
          for (std::size_t i = 0; i < nf; ++i)
            for (std::size_t j = 0; j < nf; ++j) respects(x, i, j);
      } else {
        std::uniform_int_distribution<Element> ph(0, static_cast<Element>(h.order() - 1));
        std::uniform_int_distribution<std::size_t> pf(0, nf - 1);
        for (std::uint64_t s = 0; s < depth.samples; ++s) {
          compose(ph(rng), ph(rng), pf(rng));
          respects(ph(rng), pf(rng), pf(rng));
        }
      }
      // Each theta_h is a bijection of K^Omega and theta_e is the identity.
      for (Element x = 0; x < h.order(); ++x) {
        std::vector<bool> hit(nf, false);
        bool bijective = true;
        for (std::size_t i = 0; i < nf; ++i) {
          bijective = bijective && !hit[image[x * nf + i]];
          hit[image[x * nf + i]] = true;
        }
        automorphism.check(bijective, [&] { return where + ": theta(" + h.label(x) + ") is not bijective"; });
      }
      for (std::size_t i = 0; i < nf; ++i) {
        composition.check(image[h.identity() * nf + i] == i,
                          [&] { return where + ": theta(e) moves " + tuple_text(tuples[i]); });
      }
    }
  }
  return {automorphism.done(), composition.done()};
}

std::vector<PropertyResult> verify_kk(const VerifyDepth& depth, const std::optional<std::filesystem::path>& group_file) {
  Tally hom("kk", "homomorphism");
  Tally inj("kk", "injective");
  std::mt19937_64 rng(depth.seed);
  auto cases = kk_catalog();
  if (group_file) {
    try {
      auto g = group_from_json(read_json_file(*group_file));
      if (g.order() <= 64) {
        for (auto& n : two_generated_subgroups(g)) {
          if (n.order() > 1 && n.order() < g.order() && is_normal(g, n)) {
            cases.push_back({group_file->filename().string() + "/" + tuple_text(
                                 std::vector<Element>(n.elements().begin(), n.elements().end())),
                             g, n});
          }
        }
      }
    } catch (const Error&) {
      // Reported by the group suite.
    }
  }
  for (const auto& c : cases) {
    const auto ses = ShortExactSequence::from_normal(c.g, c.n);
    std::vector<Section> sections;
    if (ses.q().order() <= 4) {
      sections = all_sections(ses.eps());
    } else {
      sections.push_back(default_section(ses.eps()));
    }
    for (std::size_t i = 0; i < sections.size(); ++i) {
      const std::string where = c.name + " section " + std::to_string(i);
      const auto e = kk_embedding(ses, sections[i]);
      check_hom(hom, e.phi, depth, rng, where);
      inj.check(e.phi.is_injective(), [&] { return where + ": not injective"; });
    }
  }
  return {hom.done(), inj.done()};
}

std::vector<PropertyResult> verify_omega(const VerifyDepth& depth) {
  Tally hom("omega", "homomorphism");
  Tally inj("omega", "injective");
  Tally order("omega", "wreath_order");
  std::mt19937_64 rng(depth.seed);
  const std::vector<std::pair<std::string, std::string>> cases{
      {"S:4", "stab:4"}, {"S:3", "stab:3"}, {"D:4", "gens:s"}, {"A:4", "stab:4"}, {"D:4", "gens:r"}, {"S:4", "V4"}};
  for (const auto& [gspec, hspec] : cases) {
    const auto g = construct_named(gspec);
    const auto h = parse_subgroup(g, hspec);
    const auto om = omega_embedding(g, h);
    const std::string where = gspec + " over " + hspec;
    check_hom(hom, om.phi, depth, rng, where);
    inj.check(om.phi.is_injective(), [&] { return where + ": not injective"; });
    const auto m = static_cast<std::int64_t>(g.order());
    const auto k = static_cast<std::int64_t>(g.order() / h.order());
    const auto kc = static_cast<std::int64_t>(om.top.group.order());
    const BigInt expected = omega_size(m, k, kc);
    order.check(BigInt(om.wreath.product().order()) == expected, [&] {
      return where + ": order " + std::to_string(om.wreath.product().order()) + " vs " + expected.str();
    });
  }
  return {hom.done(), inj.done(), order.done()};
}

std::vector<PropertyResult> verify_cocycles() {
  Tally rel("cocycle", "relation");
  struct TowerCase {
    std::string field, k, alpha;
  };
  for (const auto& t : {TowerCase{"5,7", "5", "7"}, TowerCase{"2,3", "2", "3"}, TowerCase{"2,3,5", "2,3", "5"}}) {
    const auto tower = parse_tower(t.field, t.k, t.alpha);
    const auto res = verify_cocycle(tower);
    rel.add_checked(res.triples - 1);
    rel.check(res.holds, [&] {
      const auto [a, b, c] = *res.counterexample;
      return "field " + t.field + ", alpha " + t.alpha + ": masks (" + std::to_string(a) + "," + std::to_string(b) +
             "," + std::to_string(c) + ")";
    });
  }
  return {rel.done()};
}

std::vector<PropertyResult> verify_iso(const VerifyDepth& depth) {
  Tally bij("iso", "bijective_homomorphism");
  Tally trip("iso", "round_trip");
  Tally coherence("iso", "kk_omega_coherence");
  Tally solv("iso", "solvability_criterion");
  std::mt19937_64 rng(depth.seed);

  const auto agl = construct_named("AGL:3");
  const auto s3 = construct_named("S:3");
  const auto w = build_wreath(agl, natural_action(agl));
  const auto w_hat = build_wreath(s3, natural_action(s3));
  const auto psi = match_permutations(agl, s3);
  const std::vector<Point> xi{0, 1, 2};
  const auto t = transport_iso(psi, psi, xi, w, w_hat, false);
  const std::string where = "AGL:3 wr AGL:3 -> S:3 wr S:3";
  check_hom(bij, t, depth, rng, where);
  bij.check(t.is_injective() && t.is_surjective(), [&] { return where + ": not a bijection"; });
  const auto back = transport_iso(psi.inverse(), psi.inverse(), xi, w_hat, w, false);
  for (Element x = 0; x < w.product().order(); ++x) {
    trip.check(back(t(x)) == x, [&] { return where + ": round trip moves " + w.product().label(x); });
  }

  for (const auto& c : kk_catalog()) {
    const auto ses = ShortExactSequence::from_normal(c.g, c.n);
    const auto kk = kk_embedding(ses, default_section(ses.eps()));
    const auto om = omega_embedding(c.g, c.n);
    std::vector<Element> same(om.wreath.top_group().order());
    for (Element x = 0; x < same.size(); ++x) same[x] = x;
    const GroupHom phi(om.wreath.top_group(), kk.wreath.top_group(), same);
    std::vector<Point> ident(om.wreath.omega_size());
    for (Point p = 0; p < ident.size(); ++p) ident[p] = p;
    const auto tr =
        transport_iso(GroupHom::identity(c.n.group), phi, ident, om.wreath, kk.wreath, om.wreath.product().is_dense());
    for (Element x = 0; x < c.g.order(); ++x) {
      coherence.check(tr(om.phi(x)) == kk.phi(x), [&] { return c.name + ": images differ at " + c.g.label(x); });
    }
  }

  const auto res = solvability_criterion(w_hat.product(), 3);
  solv.check(res.solvable && res.witness && res.witness->is_injective() && res.witness->is_homomorphism(),
             [] { return std::string("S:3 wr S:3 does not embed into AGL:3 wr AGL:3"); });
  solv.check(!solvability_criterion(construct_named("C:5"), 3).solvable,
             [] { return std::string("C:5 embeds into AGL:3 wr AGL:3"); });
  return {bij.done(), coherence.done(), trip.done(), solv.done()};
}

std::vector<PropertyResult> verify_group_file(const std::filesystem::path& path) {
  Tally axioms("group", "axioms");
  try {
    const auto raw = raw_group_from_json(read_json_file(path));
    const auto defect = find_table_defect(raw.order, raw.identity, raw.table);
    axioms.check(!defect, [&] { return defect->property + " " + tuple_text(defect->witness) + ": " + defect->message; });
  } catch (const Error& e) {
    axioms.fail(e.what());
  }
  return {axioms.done()};
}

std::vector<PropertyResult> run_suites(const std::string& suite, const VerifyDepth& depth,
                                       const std::optional<std::filesystem::path>& group_file) {
  const bool all = suite == "all";
  if (!all && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw ParseError("unknown suite '" + suite + "'");
  }
  std::vector<PropertyResult> out;
  auto take = [&](std::vector<PropertyResult> part) { out.insert(out.end(), part.begin(), part.end()); };
  if (all || suite == "cocycle") take(verify_cocycles());
  if ((all || suite == "group") && group_file) take(verify_group_file(*group_file));
  if (all || suite == "iso") take(verify_iso(depth));
  if (all || suite == "kk") take(verify_kk(depth, group_file));
  if (all || suite == "omega") take(verify_omega(depth));
  if (all || suite == "theta") take(verify_theta(depth));
  std::stable_sort(out.begin(), out.end(), [](const PropertyResult& a, const PropertyResult& b) {
    return std::tie(a.suite, a.property) < std::tie(b.suite, b.property);
  });
  return out;
}

nlohmann::ordered_json results_to_json(const std::vector<PropertyResult>& results) {
  nlohmann::ordered_json out;
  out["passed"] = all_passed(results);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["property"] = r.property;
    j["passed"] = r.passed;
    j["checked"] = r.checked;
    j["counterexample"] = r.counterexample ? nlohmann::ordered_json(*r.counterexample) : nlohmann::ordered_json();
    arr.push_back(std::move(j));
  }
  out["results"] = std::move(arr);
  return out;
}

bool all_passed(const std::vector<PropertyResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
}

}  // namespace wreathlab
