#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qstirling/rational.hpp"

namespace qstirling {

enum class TriangleFamily { tilde2, carlitz2, inv2, cigl2, tilde1, cycle1 };

std::string family_name(TriangleFamily f);
std::optional<TriangleFamily> family_from_string(const std::string& name);

/**
 * Triangular table (n,k) -> Rational for 0 <= k <= n <= max_n, tagged with
 * its family and parameter descriptor. Cells with k > n (or k < 0) read as 0;
 * rows beyond max_n throw. Construction is single-writer; a completed
 * triangle is immutable and safe to read concurrently.
 */
class Triangle {
 public:
  Triangle(TriangleFamily family, std::string params, std::vector<std::vector<Rational>> rows);

  TriangleFamily family() const { return family_; }
  const std::string& params() const { return params_; }
  int max_n() const { return static_cast<int>(rows_.size()) - 1; }

  Rational cell(int n, int k) const;
  std::span<const Rational> row(int n) const;

  // Row sums B(n) = sum_k cell(n,k).
  Rational row_sum(int n) const;

  friend bool operator==(const Triangle& a, const Triangle& b) { return a.rows_ == b.rows_; }

  // CSV with header "n,k,value", exact rational strings, LF line endings.
  std::string to_csv() const;
  // JSON object {"family":..., "params":..., "rows":[[...],...]}.
  std::string to_json() const;

  // Inverse of the emitters; both round-trip byte-identically.
  static Triangle from_csv(const std::string& text, TriangleFamily family, std::string params);
  static Triangle from_json(const std::string& text);

 private:
  TriangleFamily family_;
  std::string params_;
  std::vector<std::vector<Rational>> rows_;
};

}  // namespace qstirling
