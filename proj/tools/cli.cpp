#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "wreathlab/embeddings.hpp"
#include "wreathlab/errors.hpp"
#include "wreathlab/fields.hpp"
#include "wreathlab/io.hpp"
#include "wreathlab/isomorphism.hpp"
#include "wreathlab/sizes.hpp"
#include "wreathlab/specs.hpp"
#include "wreathlab/verify.hpp"

namespace wreathlab::cli {
namespace {

using Json = nlohmann::ordered_json;

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw ParseError("unsupported format '" + format + "'");
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw ParseError(std::string("missing ") + flag);
}

std::optional<std::string> identification(const FiniteGroup& g) {
  if (g.order() > 64) return std::nullopt;
  auto name = identify_small(g);
  if (name.rfind("unidentified", 0) == 0) return std::nullopt;
  return name;
}

int print_embedding(const std::string& mode, const GroupHom& phi, const WreathProduct& w, const std::string& format,
                    std::ostream& out) {
  const auto report = verify_embedding(phi);
  const auto& g = phi.domain();
  if (format == "json") {
    Json j;
    j["mode"] = mode;
    auto rows = Json::array();
    for (Element x = 0; x < g.order(); ++x) {
      Json r;
      r["element"] = g.label(x);
      r["image"] = w.format(phi(x));
      rows.push_back(std::move(r));
    }
    j["phi"] = std::move(rows);
    j["report"] = report.to_json();
    out << j.dump(2) << "\n";
  } else {
    out << "phi:\n";
    for (Element x = 0; x < g.order(); ++x) out << "  " << g.label(x) << " -> " << w.format(phi(x)) << "\n";
    const auto j = report.to_json();
    for (auto& [key, value] : j.items()) out << key << ": " << value.dump() << "\n";
  }
  return report.is_homomorphism && report.is_injective ? kExitOk : kExitFail;
}

std::string table1_text(const std::vector<SizeRow>& rows, const std::string& format) {
  std::ostringstream s;
  if (format == "json") {
    auto arr = Json::array();
    for (const auto& r : rows) {
      Json j;
      j["group"] = r.group_name;
      j["k"] = r.k;
      j["kc"] = r.kc;
      j["regular"] = r.regular_formula;
      j["omega"] = r.omega_formula;
      arr.push_back(std::move(j));
    }
    s << arr.dump(2) << "\n";
  } else if (format == "csv") {
    s << "group,k,kc,regular,omega\n";
    for (const auto& r : rows) {
      s << r.group_name << "," << r.k << "," << r.kc << "," << r.regular_formula << "," << r.omega_formula << "\n";
    }
  } else {
    for (const auto& r : rows) s << r.group_name << ": " << r.regular_formula << ", " << r.omega_formula << "\n";
  }
  return s.str();
}

std::string crossover_text(const CrossoverReport& rep, const std::string& format) {
  std::ostringstream s;
  if (format == "json") {
    Json j;
    j["group"] = rep.group_name;
    j["galois"] = rep.galois;
    j["dihedral"] = rep.dihedral;
    j["matches_pattern"] = rep.matches_pattern;
    auto arr = Json::array();
    for (const auto& c : rep.rows) {
      Json r;
      r["m"] = c.m;
      r["regular"] = c.regular.str();
      r["omega"] = c.omega.str();
      r["verdict"] = c.verdict;
      arr.push_back(std::move(r));
    }
    j["rows"] = std::move(arr);
    s << j.dump(2) << "\n";
  } else {
    s << "m,regular,omega,verdict\n";
    for (const auto& c : rep.rows) s << c.m << "," << c.regular << "," << c.omega << "," << c.verdict << "\n";
    if (format == "text") s << "matches pattern: " << (rep.matches_pattern ? "yes" : "no") << "\n";
  }
  return s.str();
}

std::string degree432_text(const std::string& format) {
  const auto c = degree432_comparison();
  std::ostringstream s;
  if (format == "json") {
    Json j;
    j["kummer"] = c.kummer.str();
    j["kummer_factored"] = c.kummer_factored;
    j["omega"] = c.omega.str();
    j["omega_factored"] = c.omega_factored;
    j["ratio"] = c.ratio.str();
    j["note"] = c.note;
    s << j.dump(2) << "\n";
  } else {
    s << "kummer wreath: " << c.kummer << " = " << c.kummer_factored << "\n"
      << "omega wreath: " << c.omega << " = " << c.omega_factored << "\n"
      << "ratio: " << c.ratio << "\n"
      << "note: " << c.note << "\n";
  }
  return s.str();
}

}  // namespace

std::uint64_t resolve_size_cap(std::optional<std::uint64_t> flag) {
  std::uint64_t cap = kDefaultSizeCap;
  if (flag) {
    cap = *flag;
  } else if (const char* env = std::getenv("WREATHLAB_SIZE_CAP"); env != nullptr && *env != '\0') {
    const std::string text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ParseError("WREATHLAB_SIZE_CAP must be a positive integer, got '" + text + "'");
    }
  }
  if (cap < 1) throw ParseError("size cap must be at least 1");
  return cap;
}

int cmd_build(const BuildOptions& o, std::ostream& out) {
  require_format(o.format, {"text", "json"});
  const auto k = parse_group(o.k);
  const auto h = parse_group(o.h);
  const auto w = build_wreath(k, parse_omega(h, o.omega), o.size_cap);
  const auto& g = w.product();
  if (o.out) {
    if (g.order() > kDenseTableLimit) {
      throw SizeLimitError("group JSON is limited to order " + std::to_string(kDenseTableLimit),
                           std::to_string(g.order()));
    }
    write_json_file(*o.out, group_to_json(g));
  }
  const auto name = identification(g);
  if (o.format == "json") {
    Json j;
    j["order"] = g.order();
    j["identified"] = name ? Json(*name) : Json();
    j["written"] = o.out ? Json(*o.out) : Json();
    out << j.dump(2) << "\n";
  } else {
    out << "order " << g.order();
    if (name) out << ", identified " << *name;
    out << "\n";
  }
  return kExitOk;
}

int cmd_embed(const EmbedOptions& o, std::ostream& out) {
  require_format(o.format, {"text", "json"});
  if (o.mode == "kk") {
    require(o.group, "--group");
    require(o.normal, "--normal");
    const auto g = parse_group(o.group);
    const auto ses = ShortExactSequence::from_normal(g, parse_subgroup(g, o.normal));
    const auto overrides = parse_section_overrides(ses.q(), g, o.section);
    const auto e = kk_embedding(ses, default_section(ses.eps(), overrides), o.size_cap);
    return print_embedding(o.mode, e.phi, e.wreath, o.format, out);
  }
  if (o.mode == "omega") {
    require(o.group, "--group");
    require(o.subgroup, "--subgroup");
    if (!o.section.empty()) throw ParseError("--section is not supported in omega mode");
    const auto g = parse_group(o.group);
    const auto e = omega_embedding(g, parse_subgroup(g, o.subgroup), std::nullopt, o.size_cap);
    return print_embedding(o.mode, e.phi, e.wreath, o.format, out);
  }
  if (o.mode == "tower") {
    require(o.field, "--field");
    require(o.alpha, "--alpha");
    const auto tower = parse_tower(o.field, o.k_generators, o.alpha);
    if (o.section.empty()) {
      const auto e = quadratic_kummer_embedding(tower, o.size_cap);
      return print_embedding(o.mode, e.phi, e.wreath, o.format, out);
    }
    const auto groups = tower_groups(tower);
    const auto overrides = parse_section_overrides(groups.gal_k, groups.gal_l, o.section);
    const auto e = kk_embedding(groups.ses, default_section(groups.ses.eps(), overrides), o.size_cap);
    return print_embedding(o.mode, e.phi, e.wreath, o.format, out);
  }
  throw ParseError("--mode must be kk, omega or tower");
}

int cmd_sizes(const SizesOptions& o, std::ostream& out) {
  std::string text;
  if (o.emit == "figure") {
    const auto format = o.format == "auto" ? "csv" : o.format;
    require_format(format, {"csv", "json", "text"});
    require(o.group, "--group");
    const auto rows = figure_data(o.kf, o.group, o.m_max);
    text = format == "json" ? figure_json(rows).dump(2) + "\n" : figure_csv(rows);
  } else if (o.emit == "table1") {
    const auto format = o.format == "auto" ? "text" : o.format;
    require_format(format, {"csv", "json", "text"});
    text = table1_text(table1(o.kf), format);
  } else if (o.emit == "crossover") {
    const auto format = o.format == "auto" ? "text" : o.format;
    require_format(format, {"csv", "json", "text"});
    require(o.group, "--group");
    text = crossover_text(crossover_report(o.kf, o.group, o.m_max), format);
  } else if (o.emit == "degree432") {
    const auto format = o.format == "auto" ? "text" : o.format;
    require_format(format, {"json", "text"});
    text = degree432_text(format);
  } else {
    throw ParseError("--emit must be figure, table1, crossover or degree432");
  }
  if (o.out) {
    std::ofstream file(*o.out);
    if (!file) throw ParseError("cannot write " + *o.out);
    file << text;
  } else {
    out << text;
  }
  return kExitOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  require_format(o.format, {"text", "json"});
  std::optional<std::filesystem::path> file;
  if (o.group_file) file = *o.group_file;
  const auto results = run_suites(o.suite, VerifyDepth::parse(o.depth, o.seed), file);
  if (o.format == "json") {
    out << results_to_json(results).dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << r.suite << " " << r.property << " " << (r.passed ? "PASS" : "FAIL") << " (" << r.checked << " checks)";
      if (r.counterexample) out << " " << *r.counterexample;
      out << "\n";
    }
  }
  return all_passed(results) ? kExitOk : kExitFail;
}

int cmd_identify(const IdentifyOptions& o, std::ostream& out) {
  require_format(o.format, {"text", "json"});
  const auto g = parse_group(o.group);
  const auto name = identification(g);
  if (o.format == "json") {
    Json j;
    j["order"] = g.order();
    j["identified"] = name ? Json(*name) : Json();
    out << j.dump(2) << "\n";
  } else {
    out << "order " << g.order() << ", identified " << name.value_or("none") << "\n";
  }
  return kExitOk;
}

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << " (order " << e.would_be_order() << ")\n";
    return kExitResource;
  } catch (const SearchBudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace wreathlab::cli
