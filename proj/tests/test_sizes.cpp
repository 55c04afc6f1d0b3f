#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "wreathlab/errors.hpp"
#include "wreathlab/sizes.hpp"

using namespace wreathlab;

namespace {

struct Reference {
  int kf;
  std::string group;
  int kc;
  std::int64_t m;
  std::string series;
  double value;
};

std::vector<Reference> load_reference() {
  std::ifstream in(std::string(WREATHLAB_SOURCE_DIR) + "/tests/data/figure_reference.csv");
  std::vector<Reference> out;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    Reference r;
    std::string cell;
    std::getline(ss, cell, ',');
    r.kf = std::stoi(cell);
    std::getline(ss, r.group, ',');
    std::getline(ss, cell, ',');
    r.kc = std::stoi(cell);
    std::getline(ss, cell, ',');
    r.m = std::stoll(cell);
    std::getline(ss, r.series, ',');
    std::getline(ss, cell, ',');
    r.value = std::stod(cell);
    out.push_back(r);
  }
  return out;
}

}  // namespace

TEST(Sizes, Formulas) {
  EXPECT_EQ(regular_size(4, 2), 8);
  EXPECT_EQ(regular_size(6, 6), 6);
  EXPECT_EQ(regular_size(12, 6), 384);
  EXPECT_EQ(omega_size(12, 3, 6), 384);
  EXPECT_EQ(omega_size(7, 7, 7), 7);
  EXPECT_THROW(regular_size(7, 2), DivisibilityViolation);
  EXPECT_THROW(omega_size(10, 3, 6), DivisibilityViolation);
  EXPECT_THROW(omega_size(12, 4, 3), DivisibilityViolation);
  EXPECT_EQ(kummer_size(6, 6, 72), 3359232);
}

TEST(Sizes, SizeTableAgainstGeneralFormulas) {
  std::size_t rows = 0;
  for (int kf = 2; kf <= 5; ++kf) {
    for (const auto& r : table1(kf)) {
      ++rows;
      for (std::int64_t j = 1; j <= 20; ++j) {
        const std::int64_t m = j * r.kc;
        ASSERT_EQ(r.regular_at(m), regular_size(m, r.kc)) << r.group_name << " m=" << m;
        ASSERT_EQ(r.omega_at(m), omega_size(m, r.k, r.kc)) << r.group_name << " m=" << m;
      }
    }
  }
  EXPECT_EQ(rows, 13u);
  EXPECT_THROW(table1(6), InvariantError);
}

TEST(Sizes, SizeTableText) {
  auto two = table1(2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].regular_formula, "m²/2");
  EXPECT_EQ(two[0].omega_formula, "m²/2");
  const auto& s4 = find_row(4, "S4");
  EXPECT_EQ(s4.regular_formula, "m²⁴/(2⁶⁹·3²³)");
  EXPECT_EQ(s4.omega_formula, "3m⁴/32");
  EXPECT_EQ(find_row(4, "C2xC2").group_name, "C2 \xC3\x97 C2");
  EXPECT_EQ(find_row(5, "F5").kc, 20);
  const auto& a5 = find_row(5, "A5");
  EXPECT_EQ(a5.regular_at(120), BigInt(boost::multiprecision::pow(BigInt(120), 60)) /
                                     (BigInt(boost::multiprecision::pow(BigInt(2), 118)) *
                                      boost::multiprecision::pow(BigInt(3), 59) * boost::multiprecision::pow(BigInt(5), 59)));
  EXPECT_EQ(a5.omega_at(120), BigInt(12) * boost::multiprecision::pow(BigInt(120), 5) / 625);
}

TEST(Sizes, FigureReference) {
  auto ref = load_reference();
  ASSERT_EQ(ref.size(), 160u);
  for (const auto& r : ref) {
    auto rows = figure_data(r.kf, r.group, r.m);
    ASSERT_EQ(rows.back().m, r.m);
    const double got = r.series == "regular" ? rows.back().log_regular : rows.back().log_omega;
    EXPECT_NEAR(got, r.value, 1e-9) << r.group << " m=" << r.m << " " << r.series;
  }
}

TEST(Sizes, FigureCsv) {
  auto rows = figure_data(3, "S3", 60);
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows[1].marker, "2kc");
  auto csv = figure_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "m,log_regular,log_omega,marker");
  EXPECT_NE(csv.find("12,5.950642552587727,5.950642552587727,2kc"), std::string::npos);
  EXPECT_NEAR(rows[0].log_regular, std::log(6.0), 1e-12);
  EXPECT_NEAR(figure_data(5, "S5", 120)[0].log_regular, 4.787491742782046, 1e-12);
  EXPECT_EQ(figure_json(rows)[1]["marker"], "2kc");
}

TEST(Sizes, LogBig) {
  const BigInt big = boost::multiprecision::pow(BigInt(3), 500);
  EXPECT_NEAR(log_big(big), 500 * std::log(3.0), 1e-9);
  EXPECT_THROW(log_big(0), InvariantError);
}

TEST(Sizes, Crossover) {
  auto s3 = crossover_report(3, "S3", 60);
  EXPECT_TRUE(s3.dihedral);
  EXPECT_EQ(s3.rows[1].verdict, "equal");
  EXPECT_EQ(s3.rows[1].regular, 384);
  EXPECT_TRUE(s3.matches_pattern);
  auto s4 = crossover_report(4, "S4", 72);
  EXPECT_EQ(s4.rows[2].verdict, "regular>omega");
  EXPECT_NE(s4.rows[1].verdict, "equal");
  EXPECT_TRUE(s4.matches_pattern);
  auto d4 = crossover_report(4, "D4", 80);
  EXPECT_EQ(d4.rows[1].verdict, "equal");
  auto f5 = crossover_report(5, "F5", 200);
  EXPECT_NE(f5.rows[1].verdict, "equal");
  EXPECT_TRUE(f5.matches_pattern);
  auto c4 = crossover_report(4, "C4", 40);
  EXPECT_TRUE(c4.galois);
  EXPECT_TRUE(c4.matches_pattern);
}

TEST(Sizes, Degree432) {
  auto c = degree432_comparison();
  EXPECT_EQ(c.kummer, 3359232);
  EXPECT_EQ(c.kummer_factored, "2^9\xC2\xB7" "3^8");
  EXPECT_EQ(c.omega, BigInt("10030613004288"));
  EXPECT_EQ(c.omega_factored, "2^21\xC2\xB7" "3^14");
  EXPECT_EQ(c.ratio, 2985984);
  EXPECT_EQ(factor_small(c.ratio), "2^12\xC2\xB7" "3^6");
}
