#include "wreathlab/sizes.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>

#include "wreathlab/errors.hpp"

namespace wreathlab {
namespace {

BigInt power(std::int64_t base, std::int64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

BigInt exact_div(const BigInt& num, const BigInt& den, const std::string& what) {
  if (num % den != 0) throw DivisibilityViolation(what + " is not an integer");
  return num / den;
}

std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

SizeRow row(int k, int kc, std::string name, BigInt rden, BigInt onum, BigInt oden, std::string rf, std::string of,
            bool dihedral = false) {
  return SizeRow{k, kc, std::move(name), std::move(rden), std::move(onum), std::move(oden), std::move(rf),
                 std::move(of), dihedral};
}

const std::map<int, std::vector<SizeRow>>& catalog() {
  static const std::map<int, std::vector<SizeRow>> rows = [] {
    std::map<int, std::vector<SizeRow>> out;
    out[2] = {row(2, 2, "C2", 2, 1, 2, "m²/2", "m²/2")};
    out[3] = {row(3, 3, "C3", 9, 1, 9, "m³/9", "m³/9"),
              row(3, 6, "S3", power(6, 5), 2, 9, "m⁶/6⁵", "2m³/9", true)};
    out[4] = {row(4, 4, "C4", 64, 1, 64, "m⁴/64", "m⁴/64"),
              row(4, 4, "C2 \xC3\x97 C2", 64, 1, 64, "m⁴/64", "m⁴/64"),
              row(4, 8, "D4", power(2, 21), 1, power(2, 5), "m⁸/2²¹", "m⁴/2⁵", true),
              row(4, 12, "A4", power(2, 22) * power(3, 11), 3, 64, "m¹²/(2²²·3¹¹)", "3m⁴/64"),
              row(4, 24, "S4", power(2, 69) * power(3, 23), 3, 32, "m²⁴/(2⁶⁹·3²³)", "3m⁴/32")};
    out[5] = {row(5, 5, "C5", 625, 1, 625, "m⁵/625", "m⁵/625"),
              row(5, 10, "D5", power(2, 9) * power(5, 9), 2, 625, "m¹⁰/(2⁹·5⁹)", "2m⁵/625", true),
              row(5, 20, "F5 \xE2\x89\x83 AGL(1, F5)", power(2, 38) * power(5, 19), 4, 625, "m²⁰/(2³⁸·5¹⁹)",
                  "4m⁵/625"),
              row(5, 60, "A5", power(2, 118) * power(3, 59) * power(5, 59), 12, 625, "m⁶⁰/(2¹¹⁸·3⁵⁹·5⁵⁹)",
                  "12m⁵/625"),
              row(5, 120, "S5", power(2, 357) * power(3, 119) * power(5, 119), 24, 625,
                  "m¹²⁰/(2³⁵⁷·3¹¹⁹·5¹¹⁹)", "24m⁵/625")};
    return out;
  }();
  return rows;
}

std::string compact(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == 'x' || c == 'X') continue;
    if (std::isalnum(static_cast<unsigned char>(c))) out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace

BigInt regular_size(std::int64_t m, std::int64_t kc) {
  if (kc < 1 || m < 1 || m % kc != 0) {
    throw DivisibilityViolation("[K^c:F] = " + std::to_string(kc) + " must divide m = " + std::to_string(m));
  }
  return power(m / kc, kc) * kc;
}

BigInt omega_size(std::int64_t m, std::int64_t k, std::int64_t kc) {
  if (k < 1 || m < 1 || m % k != 0) {
    throw DivisibilityViolation("[K:F] = " + std::to_string(k) + " must divide m = " + std::to_string(m));
  }
  if (k > kc) throw DivisibilityViolation("[K:F] cannot exceed [K^c:F]");
  return power(m / k, k) * kc;
}

BigInt kummer_size(std::int64_t lk, std::int64_t k, std::int64_t kc) {
  if (lk < 1 || k < 1 || kc < k) throw DivisibilityViolation("invalid degrees");
  return power(lk, k) * kc;
}

double log_big(const BigInt& n) {
  if (n <= 0) throw InvariantError("logarithm of a non-positive integer");
  const auto bits = boost::multiprecision::msb(n) + 1;
  if (bits <= 60) return std::log(static_cast<double>(static_cast<std::uint64_t>(n)));
  const auto shift = static_cast<unsigned>(bits - 60);
  const BigInt top = n >> shift;
  return std::log(static_cast<double>(static_cast<std::uint64_t>(top))) + shift * std::log(2.0);
}

BigInt SizeRow::regular_at(std::int64_t m) const {
  if (m < 1 || m % kc != 0) throw DivisibilityViolation(std::to_string(kc) + " does not divide m");
  return exact_div(power(m, kc), regular_den, regular_formula);
}

BigInt SizeRow::omega_at(std::int64_t m) const {
  if (m < 1 || m % kc != 0) throw DivisibilityViolation(std::to_string(kc) + " does not divide m");
  return exact_div(omega_num * power(m, k), omega_den, omega_formula);
}

std::vector<SizeRow> table1(int kf) {
  auto it = catalog().find(kf);
  if (it == catalog().end()) throw InvariantError("[K:F] must be 2, 3, 4 or 5");
  return it->second;
}

const SizeRow& find_row(int kf, const std::string& group) {
  auto it = catalog().find(kf);
  if (it == catalog().end()) throw InvariantError("[K:F] must be 2, 3, 4 or 5");
  const std::string key = compact(group);
  for (const auto& r : it->second) {
    const std::string full = compact(r.group_name);
    if (full == key || full.substr(0, key.size()) == key) return r;
  }
  throw InvariantError("no row for group " + group + " with [K:F] = " + std::to_string(kf));
}

std::vector<FigureRow> figure_data(int kf, const std::string& group, std::int64_t m_max) {
  const auto& r = find_row(kf, group);
  std::vector<FigureRow> out;
  for (std::int64_t m = r.kc; m <= m_max; m += r.kc) {
    out.push_back(FigureRow{m, log_big(regular_size(m, r.kc)), log_big(omega_size(m, r.k, r.kc)),
                            m == 2 * r.kc ? "2kc" : ""});
  }
  return out;
}

std::string figure_csv(const std::vector<FigureRow>& rows) {
  std::string out = "m,log_regular,log_omega,marker\n";
  for (const auto& r : rows) {
    out += std::to_string(r.m) + "," + shortest(r.log_regular) + "," + shortest(r.log_omega) + "," + r.marker + "\n";
  }
  return out;
}

nlohmann::ordered_json figure_json(const std::vector<FigureRow>& rows) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["m"] = r.m;
    j["log_regular"] = r.log_regular;
    j["log_omega"] = r.log_omega;
    j["marker"] = r.marker;
    out.push_back(std::move(j));
  }
  return out;
}

CrossoverReport crossover_report(int kf, const std::string& group, std::int64_t m_max) {
  const auto& r = find_row(kf, group);
  CrossoverReport report;
  report.group_name = r.group_name;
  report.galois = r.k == r.kc;
  report.dihedral = r.dihedral;
  bool pattern = true;
  for (std::int64_t m = r.kc; m <= m_max; m += r.kc) {
    Crossover c{m, regular_size(m, r.kc), omega_size(m, r.k, r.kc), ""};
    c.verdict = c.regular > c.omega ? "regular>omega" : (c.regular == c.omega ? "equal" : "regular<omega");
    if (report.galois) {
      pattern = pattern && c.verdict == "equal";
    } else if (m == 2 * r.kc) {
      pattern = pattern && ((c.verdict == "equal") == r.dihedral);
    } else if (m >= 3 * r.kc) {
      pattern = pattern && c.verdict == "regular>omega";
    }
    report.rows.push_back(std::move(c));
  }
  report.matches_pattern = pattern;
  return report;
}

std::string factor_small(const BigInt& n) {
  BigInt rest = n;
  std::string out;
  for (int p : {2, 3, 5, 7, 11, 13}) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e == 0) continue;
    if (!out.empty()) out += "\xC2\xB7";
    out += std::to_string(p) + (e > 1 ? "^" + std::to_string(e) : "");
  }
  if (rest != 1) out += (out.empty() ? "" : "\xC2\xB7") + rest.str();
  return out.empty() ? "1" : out;
}

KummerComparison degree432_comparison() {
  KummerComparison c;
  c.kummer = kummer_size(6, 6, 72);
  c.omega = omega_size(432, 6, 72);
  c.ratio = c.omega / c.kummer;
  c.kummer_factored = factor_small(c.kummer);
  c.omega_factored = factor_small(c.omega);
  c.note = "exact ratio " + c.ratio.str() + " = " + factor_small(c.ratio) +
           " (about 3 million); the frequently stated \"about 40 million\" does not match this arithmetic";
  return c;
}

}  // namespace wreathlab
