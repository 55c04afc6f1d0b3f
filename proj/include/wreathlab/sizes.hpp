#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace wreathlab {

using BigInt = boost::multiprecision::cpp_int;

/// (m/kc)^kc * kc, the order of Gal(L^c/K^c) wr_r Gal(K^c/F).
/// Throws DivisibilityViolation unless kc >= 1 divides m.
BigInt regular_size(std::int64_t m, std::int64_t kc);

/// (m/k)^k * kc, the order of Gal(L^c/K) wr_Omega Gal(K^c/F).
/// Throws DivisibilityViolation unless k divides m and 1 <= k <= kc.
BigInt omega_size(std::int64_t m, std::int64_t k, std::int64_t kc);

/// |Gal(L/K)|^k * kc, the order of Gal(L/K) wr_Omega Gal(K^c/F).
BigInt kummer_size(std::int64_t lk, std::int64_t k, std::int64_t kc);

/// Natural logarithm of a positive big integer.
double log_big(const BigInt& n);

/// One row of the size table: regular = m^kc / regular_den,
/// omega = omega_num * m^k / omega_den.
struct SizeRow {
  int k = 0;
  int kc = 0;
  std::string group_name;
  BigInt regular_den;
  BigInt omega_num;
  BigInt omega_den;
  std::string regular_formula;
  std::string omega_formula;
  /// Whether the group is dihedral (S3 counts as D3).
  bool dihedral = false;

  /// Exact values at m; throws DivisibilityViolation if the formula does not
  /// produce an integer or kc does not divide m.
  BigInt regular_at(std::int64_t m) const;
  BigInt omega_at(std::int64_t m) const;
};

/// Rows for [K:F] = kf in {2, 3, 4, 5}, with group names as printed in the
/// table. Throws InvariantError for other kf.
std::vector<SizeRow> table1(int kf);

/// Finds a row by name; accepts the printed name or a compact alias such as
/// "S3", "C2xC2" or "F5". Throws InvariantError when absent.
const SizeRow& find_row(int kf, const std::string& group);

struct FigureRow {
  std::int64_t m = 0;
  double log_regular = 0;
  double log_omega = 0;
  /// "2kc" on the m = 2 kc row, empty otherwise.
  std::string marker;
};

/// m = kc, 2kc, ... up to m_max.
std::vector<FigureRow> figure_data(int kf, const std::string& group, std::int64_t m_max);

/// CSV with header "m,log_regular,log_omega,marker"; doubles in shortest
/// round-trip form.
std::string figure_csv(const std::vector<FigureRow>& rows);
nlohmann::ordered_json figure_json(const std::vector<FigureRow>& rows);

struct Crossover {
  std::int64_t m = 0;
  BigInt regular;
  BigInt omega;
  /// "regular>omega", "equal" or "regular<omega".
  std::string verdict;
};

struct CrossoverReport {
  std::string group_name;
  bool galois = false;
  bool dihedral = false;
  std::vector<Crossover> rows;
  /// For Galois rows: equal everywhere. Otherwise: regular > omega for every
  /// m >= 3kc, and equality at m = 2kc exactly for dihedral groups.
  bool matches_pattern = false;
};

CrossoverReport crossover_report(int kf, const std::string& group, std::int64_t m_max);

/// Size arithmetic of the degree-432 example with [K:F] = 6, [K^c:F] = 72
/// and [L:K] = 6.
struct KummerComparison {
  BigInt kummer;       // 6^6 * 72
  BigInt omega;        // (432/6)^6 * 72
  BigInt ratio;        // omega / kummer
  std::string kummer_factored;
  std::string omega_factored;
  std::string note;
};
KummerComparison degree432_comparison();

/// "2^9·3^8" style factorization over small primes.
std::string factor_small(const BigInt& n);

}  // namespace wreathlab
