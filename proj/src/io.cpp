#include "wreathlab/io.hpp"

#include <fstream>

#include "wreathlab/errors.hpp"

namespace wreathlab {
namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::uint64_t count(const nlohmann::json& j, const std::string& what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw ParseError(what + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

std::vector<std::string> labels_of(const nlohmann::json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) throw ParseError(what + " must be an array of " + std::to_string(n) + " strings");
  std::vector<std::string> out;
  for (const auto& l : j) {
    if (!l.is_string()) throw ParseError(what + " must contain strings");
    out.push_back(l.get<std::string>());
  }
  return out;
}

std::vector<std::uint32_t> square_table(const nlohmann::json& j, std::size_t rows, std::size_t cols,
                                        const std::string& what) {
  if (!j.is_array() || j.size() != rows) throw ParseError(what + " must have " + std::to_string(rows) + " rows");
  std::vector<std::uint32_t> out;
  out.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols) {
      throw ParseError(what + " row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    }
    for (const auto& v : row) out.push_back(static_cast<std::uint32_t>(count(v, what + " entry")));
  }
  return out;
}

}  // namespace

nlohmann::ordered_json group_to_json(const FiniteGroup& g) {
  nlohmann::ordered_json out;
  out["order"] = g.order();
  out["identity"] = g.identity();
  auto labels = nlohmann::ordered_json::array();
  for (Element x = 0; x < g.order(); ++x) labels.push_back(g.label(x));
  out["labels"] = std::move(labels);
  const auto flat = g.table();
  auto table = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < g.order(); ++r) {
    table.push_back(std::vector<Element>(flat.begin() + r * g.order(), flat.begin() + (r + 1) * g.order()));
  }
  out["table"] = std::move(table);
  return out;
}

RawGroup raw_group_from_json(const nlohmann::json& j) {
  RawGroup raw;
  raw.order = count(field(j, "order"), "order");
  if (raw.order == 0) throw ParseError("order must be positive");
  if (raw.order > kDenseTableLimit) throw ParseError("order exceeds the table limit");
  raw.identity = static_cast<Element>(count(field(j, "identity"), "identity"));
  raw.labels = labels_of(field(j, "labels"), raw.order, "labels");
  raw.table = square_table(field(j, "table"), raw.order, raw.order, "table");
  return raw;
}

FiniteGroup group_from_json(const nlohmann::json& j) {
  auto raw = raw_group_from_json(j);
  return FiniteGroup::from_table(raw.order, raw.identity, std::move(raw.table), std::move(raw.labels));
}

nlohmann::ordered_json action_to_json(const FiniteGSet& omega) {
  nlohmann::ordered_json out;
  out["group"] = group_to_json(omega.group());
  out["size"] = omega.size();
  auto act = nlohmann::ordered_json::array();
  for (Element h = 0; h < omega.group().order(); ++h) {
    auto row = omega.row(h);
    act.push_back(std::vector<Point>(row.begin(), row.end()));
  }
  out["act"] = std::move(act);
  auto labels = nlohmann::ordered_json::array();
  for (Point w = 0; w < omega.size(); ++w) labels.push_back(omega.point_label(w));
  out["point_labels"] = std::move(labels);
  return out;
}

FiniteGSet action_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  const auto& gj = field(j, "group");
  FiniteGroup g;
  if (gj.is_string()) {
    std::filesystem::path p = gj.get<std::string>();
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    g = group_from_json(read_json_file(p));
  } else {
    g = group_from_json(gj);
  }
  const std::size_t size = count(field(j, "size"), "size");
  auto act = square_table(field(j, "act"), g.order(), size, "act");
  std::vector<std::string> labels;
  if (j.contains("point_labels")) labels = labels_of(j["point_labels"], size, "point_labels");
  return FiniteGSet::from_table(g, size, std::move(act), std::move(labels));
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const nlohmann::ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace wreathlab
