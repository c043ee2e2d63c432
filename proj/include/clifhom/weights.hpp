#pragma once

#include "clifhom/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace clifhom {

class WeightError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Sign { Plus, Minus };
enum class CasimirVariant { Plain, Tilde };

inline int sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }
inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline const char* sign_symbol(Sign s) { return s == Sign::Plus ? "+" : "-"; }

bool is_dominant(const std::vector<long>& entries);

// Weakly decreasing integer vector; construction rejects anything else.
class HighestWeight {
 public:
  explicit HighestWeight(std::vector<long> entries);

  int m() const { return static_cast<int>(entries_.size()); }
  // 1-based, matching rho^i.
  long operator[](int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<long>& entries() const { return entries_; }
  long total() const;
  std::string to_string() const;

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
  friend auto operator<=>(const HighestWeight&, const HighestWeight&) = default;

 private:
  std::vector<long> entries_;
};

HighestWeight parse_weight(const std::string& text);

std::optional<HighestWeight> shift(const HighestWeight& rho, Sign sign, int i);

struct ConformalWeightTable {
  HighestWeight rho;
  Sign sign;
  std::vector<long> w;
  std::vector<Rational> gamma;
  std::vector<bool> valid;
};

long conformal_weight(const HighestWeight& rho, Sign sign, int i);
ConformalWeightTable conformal_table(const HighestWeight& rho, Sign sign);

Rational casimir_eigenvalue(const HighestWeight& rho, unsigned q, CasimirVariant variant);
HighestWeight transpose_weight(const HighestWeight& rho);
std::uint64_t weyl_dimension(const HighestWeight& rho);

// Inverse of V with V(r, c) = w_c^r, entry (i, j) from the elementary symmetric
// polynomials of the remaining weights.
RationalMatrix vandermonde_inverse(const std::vector<long>& w);

// Every dominant weight of rank m with entries in [-bound, bound], lexicographically descending.
std::vector<HighestWeight> dominant_weights(int m, long bound);

}  // namespace clifhom
