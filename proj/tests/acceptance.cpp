// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "wreathlab/embeddings.hpp"
#include "wreathlab/errors.hpp"
#include "wreathlab/fields.hpp"
#include "wreathlab/isomorphism.hpp"
#include "wreathlab/sizes.hpp"
#include "wreathlab/specs.hpp"
#include "wreathlab/verify.hpp"

using namespace wreathlab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

/// Fails the outcome with `why` unless `cond` holds.
void expect(Outcome& o, bool cond, const std::string& why) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = why;
  }
}

bool passed(const std::vector<PropertyResult>& results, std::string& why) {
  for (const auto& r : results) {
    if (!r.passed) {
      why = r.suite + "/" + r.property + ": " + r.counterexample.value_or("failed");
      return false;
    }
  }
  return true;
}

Subgroup generated(const FiniteGroup& g, std::initializer_list<const char*> labels) {
  std::vector<Element> gens;
  for (const char* l : labels) gens.push_back(*g.find_label(l));
  return subgroup_generated(g, gens);
}

std::vector<Element> identity_indices(std::size_t n) {
  std::vector<Element> out(n);
  for (Element x = 0; x < n; ++x) out[x] = x;
  return out;
}

Outcome criterion1() {
  Outcome o;
  std::ostringstream out;
  cli::cmd_build({"C:2", "C:2", "regular"}, out);
  expect(o, out.str() == "order 8, identified D:4\n", "build printed " + out.str());
  const auto c2 = construct_named("C:2");
  const auto w = regular_wreath(c2, c2);
  // f1 = (e,e), f2 = (e,a); [1] is the non-identity top element.
  const Element x = w.encode(Tuple{0, 1}, 1);
  const Element y = w.encode(Tuple{0, 0}, 1);
  expect(o, w.product().order() == 8, "order differs from 8");
  expect(o, check_presentation_d4(w.product(), x, y), "presentation check failed");
  expect(o, identify_small(w.product()) == "D:4", "identified as " + identify_small(w.product()));
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto tower = parse_tower("5,7", "5", "7");
  const auto groups = tower_groups(tower);
  const auto overrides = parse_section_overrides(groups.gal_k, groups.gal_l, "eta:rho1");
  const auto e = kk_embedding(groups.ses, default_section(groups.ses.eps(), overrides));
  const std::vector<std::pair<std::string, std::string>> expected{{"id_L", "(id_L,id_L; id_K)"},
                                                                  {"rho1", "(id_L,id_L; eta)"},
                                                                  {"rho2", "(rho2,rho2; id_K)"},
                                                                  {"rho3", "(rho2,rho2; eta)"}};
  for (const auto& [from, to] : expected) {
    const auto x = groups.gal_l.find_label(from);
    expect(o, x.has_value(), "missing element " + from);
    if (x) expect(o, e.wreath.format(e.phi(*x)) == to, from + " maps to " + e.wreath.format(e.phi(*x)));
  }
  const auto kummer = quadratic_kummer_embedding(tower);
  expect(o, kummer.phi.images().size() == e.phi.images().size() &&
                std::equal(kummer.phi.images().begin(), kummer.phi.images().end(), e.phi.images().begin()),
         "chi-built embedding differs from the section-built one");
  const auto r = verify_embedding(e.phi);
  expect(o, r.is_homomorphism && r.is_injective, "not an injective homomorphism");
  expect(o, r.image_order == 4 && r.wreath_order == 8 && !r.image_is_full, "unexpected image or fullness");
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::string why;
  const auto results = verify_kk({});
  expect(o, passed(results, why), why);
  // Sections: 3/A3 -> 3^2, D4/<r> -> 4^2, D4/V4 -> 4^2, Q8/center -> 2^4 each
  // (|Q| <= 4), S4/V4 default only.
  std::uint64_t injective_checks = 0;
  for (const auto& r : results)
    if (r.property == "injective") injective_checks = r.checked;
  expect(o, injective_checks == 9 + 16 + 16 + 1 + 16, "section count " + std::to_string(injective_checks));
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto s4 = construct_named("S:4");
  const auto h = parse_subgroup(s4, "stab:4");
  const auto om = omega_embedding(s4, h);
  expect(o, normal_core(s4, h).order() == 1, "core is not trivial");
  expect(o, om.wreath.product().order() == 31104, "wreath order " + std::to_string(om.wreath.product().order()));
  const auto r = verify_embedding(om.phi);
  expect(o, r.is_homomorphism && r.is_injective, "not an injective homomorphism");
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::string why;
  const auto results = verify_cocycles();
  expect(o, passed(results, why), why);
  expect(o, results.at(0).checked == 32 + 32 + 256, "triple count " + std::to_string(results.at(0).checked));
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::string why;
  expect(o, passed(verify_theta({}, 10'000), why), why);
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto agl = construct_named("AGL:3");
  const auto s3 = construct_named("S:3");
  const auto w = build_wreath(agl, natural_action(agl));
  const auto w_hat = build_wreath(s3, natural_action(s3));
  const auto psi = match_permutations(agl, s3);
  const std::vector<Point> xi{0, 1, 2};
  try {
    const auto t = transport_iso(psi, psi, xi, w, w_hat, true);
    expect(o, t.is_injective() && t.is_surjective() && t.is_homomorphism(), "transport is not bijective");
  } catch (const NotIsomorphism& e) {
    expect(o, false, e.what());
  }
  const auto res = solvability_criterion(w_hat.product(), 3);
  expect(o, res.solvable, "S:3 wr S:3 reported not solvable");
  return o;
}

Outcome criterion8() {
  Outcome o;
  // Every wreath materialized in the criteria above against the formulas.
  const auto c2 = construct_named("C:2");
  expect(o, BigInt(regular_wreath(c2, c2).product().order()) == regular_size(4, 2), "C2 wr C2");
  const auto kummer = quadratic_kummer_embedding(parse_tower("5,7", "5", "7"));
  expect(o, BigInt(kummer.wreath.product().order()) == kummer_size(2, 2, 2), "Kummer wreath of (5,7)");
  expect(o, BigInt(kummer.wreath.product().order()) == regular_size(4, 2), "regular wreath of (5,7)");
  for (auto [spec, gens] : {std::pair{"S:3", std::vector<const char*>{"231"}}, std::pair{"D:4", std::vector<const char*>{"r"}},
                            std::pair{"D:4", std::vector<const char*>{"s", "r2"}},
                            std::pair{"S:4", std::vector<const char*>{"2143", "3412"}},
                            std::pair{"Q8", std::vector<const char*>{"-1"}}}) {
    const auto g = construct_named(spec);
    std::vector<Element> ids;
    for (auto l : gens) ids.push_back(*g.find_label(l));
    const auto ses = ShortExactSequence::from_normal(g, subgroup_generated(g, ids));
    const auto e = kk_embedding(ses, default_section(ses.eps()));
    expect(o, BigInt(e.wreath.product().order()) == regular_size(g.order(), ses.q().order()),
           std::string("KK wreath of ") + spec);
    const auto om = omega_embedding(g, subgroup_generated(g, ids));
    expect(o, BigInt(om.wreath.product().order()) == omega_size(g.order(), ses.q().order(), ses.q().order()),
           std::string("omega wreath of ") + spec);
  }
  expect(o, BigInt(31104) == omega_size(24, 4, 24), "S4 omega wreath");
  for (const auto& kspec : {"C:1", "C:2", "C:3", "V4", "S:3", "AGL:3"}) {
    for (const auto& [hspec, mode] : {std::pair{"C:2", "regular"}, std::pair{"S:3", "natural"},
                                      std::pair{"AGL:3", "natural"}, std::pair{"S:4", "natural"}}) {
      const auto k = construct_named(kspec);
      const auto h = construct_named(hspec);
      const auto omega = parse_omega(h, mode);
      if (wreath_order(k, omega) > 10'000) continue;
      const auto w = build_wreath(k, omega);
      expect(o, BigInt(w.product().order()) == omega_size(k.order() * omega.size(), omega.size(), h.order()),
             std::string(kspec) + " wr " + hspec);
    }
  }

  for (int kf = 2; kf <= 5; ++kf) {
    for (const auto& r : table1(kf)) {
      for (std::int64_t j = 1; j <= 20; ++j) {
        const std::int64_t m = j * r.kc;
        expect(o, r.regular_at(m) == regular_size(m, r.kc) && r.omega_at(m) == omega_size(m, r.k, r.kc),
               r.group_name + " at m=" + std::to_string(m));
      }
    }
  }

  std::ifstream in(std::string(WREATHLAB_SOURCE_DIR) + "/tests/data/figure_reference.csv");
  std::string line;
  std::getline(in, line);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string kf, group, kc, m, series, value;
    std::getline(ss, kf, ',');
    std::getline(ss, group, ',');
    std::getline(ss, kc, ',');
    std::getline(ss, m, ',');
    std::getline(ss, series, ',');
    std::getline(ss, value, ',');
    const auto data = figure_data(std::stoi(kf), group, std::stoll(m));
    const double got = series == "regular" ? data.back().log_regular : data.back().log_omega;
    expect(o, std::abs(got - std::stod(value)) <= 1e-9, group + " m=" + m + " " + series);
    ++rows;
  }
  expect(o, rows == 160, "reference rows " + std::to_string(rows));
  expect(o, figure_data(3, "S3", 12).back().log_regular == 5.950642552587727, "S3 at m=12");
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto c = degree432_comparison();
  expect(o, c.kummer == 3359232 && c.kummer_factored == "2^9\xC2\xB7" "3^8", "Kummer size " + c.kummer.str());
  expect(o, c.omega == BigInt("10030613004288") && c.omega_factored == "2^21\xC2\xB7" "3^14",
         "omega size " + c.omega.str());
  expect(o, c.ratio == 2985984, "ratio " + c.ratio.str());
  expect(o, c.note.find("40 million") != std::string::npos, "missing discrepancy note");
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (auto [spec, gens] : {std::pair{"D:4", std::vector<const char*>{"r"}},
                            std::pair{"S:4", std::vector<const char*>{"2143", "3412"}},
                            std::pair{"Q8", std::vector<const char*>{"-1"}}, std::pair{"S:3", std::vector<const char*>{"231"}}}) {
    const auto g = construct_named(spec);
    std::vector<Element> ids;
    for (auto l : gens) ids.push_back(*g.find_label(l));
    const auto n = subgroup_generated(g, ids);
    const auto ses = ShortExactSequence::from_normal(g, n);
    const auto kk = kk_embedding(ses, default_section(ses.eps()));
    const auto om = omega_embedding(g, n);
    const GroupHom phi(om.wreath.top_group(), kk.wreath.top_group(), identity_indices(om.wreath.top_group().order()));
    const auto xi = identity_indices(om.wreath.omega_size());
    const auto t = transport_iso(GroupHom::identity(n.group), phi, xi, om.wreath, kk.wreath,
                                 om.wreath.product().is_dense());
    for (Element x = 0; x < g.order(); ++x) {
      expect(o, t(om.phi(x)) == kk.phi(x), std::string(spec) + ": images differ at " + g.label(x));
    }
  }
  // Also from the field side: the tower (5,7) has K Galois.
  const auto groups = tower_groups(parse_tower("5,7", "5", "7"));
  const auto om = omega_embedding(groups.gal_l, groups.gal_lk);
  const auto kk = kk_embedding(groups.ses, default_section(groups.ses.eps()));
  for (Element x = 0; x < groups.gal_l.order(); ++x) {
    expect(o, om.phi(x) == kk.phi(x), "tower (5,7): images differ at " + groups.gal_l.label(x));
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "D4 identification of C2 wr C2", 1, criterion1},
      {2, "tower (5,7) embedding with s(eta) = rho1", 1, criterion2},
      {3, "Kaloujnine-Krasner property suite", 30, criterion3},
      {4, "Omega-embedding of S4 over a point stabilizer", 10, criterion4},
      {5, "cocycle relation on three towers", 5, criterion5},
      {6, "theta homomorphism checks", 60, criterion6},
      {7, "AGL(1,3) wr AGL(1,3) vs S3 wr S3 transport and solvability", 120, criterion7},
      {8, "size formulas, table rows and figure data", 5, criterion8},
      {9, "degree-432 size arithmetic", 1, criterion9},
      {10, "identity transport between KK and omega embeddings", 5, criterion10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && seconds > c.budget_seconds) {
      outcome = {false, "exceeded the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget"};
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    std::cout << "criterion " << c.id << ": " << (outcome.ok ? "PASS" : "FAIL") << " [" << timing << "] " << c.name;
    if (!outcome.ok) std::cout << " -- " << outcome.detail;
    std::cout << "\n";
    failures += outcome.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
