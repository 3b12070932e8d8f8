#include "qstirling/triangle.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qstirling {

std::string family_name(TriangleFamily f) {
  switch (f) {
    case TriangleFamily::tilde2: return "tilde2";
    case TriangleFamily::carlitz2: return "carlitz2";
    case TriangleFamily::inv2: return "inv2";
    case TriangleFamily::cigl2: return "cigl2";
    case TriangleFamily::tilde1: return "tilde1";
    case TriangleFamily::cycle1: return "cycle1";
  }
  throw std::logic_error("unreachable");
}

std::optional<TriangleFamily> family_from_string(const std::string& name) {
  for (TriangleFamily f : {TriangleFamily::tilde2, TriangleFamily::carlitz2, TriangleFamily::inv2,
                           TriangleFamily::cigl2, TriangleFamily::tilde1, TriangleFamily::cycle1})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

Triangle::Triangle(TriangleFamily family, std::string params,
                   std::vector<std::vector<Rational>> rows)
    : family_(family), params_(std::move(params)), rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("triangle needs at least row 0");
  for (std::size_t n = 0; n < rows_.size(); ++n)
    if (rows_[n].size() != n + 1) throw std::invalid_argument("triangle row has wrong length");
}

Rational Triangle::cell(int n, int k) const {
  if (n < 0 || n > max_n()) throw std::out_of_range("triangle row out of range");
  if (k < 0 || k > n) return Rational(0);
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::span<const Rational> Triangle::row(int n) const {
  if (n < 0 || n > max_n()) throw std::out_of_range("triangle row out of range");
  return rows_[static_cast<std::size_t>(n)];
}

Rational Triangle::row_sum(int n) const {
  Rational acc(0);
  for (const auto& c : row(n)) acc += c;
  return acc;
}

std::string Triangle::to_csv() const {
  std::string out = "n,k,value\n";
  for (int n = 0; n <= max_n(); ++n)
    for (int k = 0; k <= n; ++k)
      out += std::to_string(n) + "," + std::to_string(k) + "," + cell(n, k).to_string() + "\n";
  return out;
}

std::string Triangle::to_json() const {
  nlohmann::ordered_json j;
  j["family"] = family_name(family_);
  j["params"] = params_;
  auto rows = nlohmann::ordered_json::array();
  for (int n = 0; n <= max_n(); ++n) {
    auto row_json = nlohmann::ordered_json::array();
    for (int k = 0; k <= n; ++k) row_json.push_back(cell(n, k).to_string());
    rows.push_back(std::move(row_json));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

Triangle Triangle::from_csv(const std::string& text, TriangleFamily family, std::string params) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "n,k,value")
    throw std::invalid_argument("bad CSV header (expected n,k,value)");
  std::vector<std::vector<Rational>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto c1 = line.find(',');
    auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw std::invalid_argument("bad CSV row: " + line);
    const int n = std::stoi(line.substr(0, c1));
    const int k = std::stoi(line.substr(c1 + 1, c2 - c1 - 1));
    Rational v = Rational::from_string(line.substr(c2 + 1));
    if (n == static_cast<int>(rows.size()) && k == 0) rows.emplace_back();
    if (n != static_cast<int>(rows.size()) - 1 || k != static_cast<int>(rows.back().size()))
      throw std::invalid_argument("CSV cells out of order at " + line);
    rows.back().push_back(std::move(v));
  }
  return Triangle(family, std::move(params), std::move(rows));
}

Triangle Triangle::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad triangle JSON: ") + e.what());
  }
  auto fam = family_from_string(j.at("family").get<std::string>());
  if (!fam) throw std::invalid_argument("unknown triangle family in JSON");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row_json : j.at("rows")) {
    std::vector<Rational> row;
    for (const auto& cell_json : row_json)
      row.push_back(Rational::from_string(cell_json.get<std::string>()));
    rows.push_back(std::move(row));
  }
  return Triangle(*fam, j.at("params").get<std::string>(), std::move(rows));
}

}  // namespace qstirling
