#include "clifhom/weights.hpp"

#include <sstream>

namespace clifhom {

bool is_dominant(const std::vector<long>& entries) {
  if (entries.empty()) throw WeightError("empty weight");
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i - 1] < entries[i]) return false;
  return true;
}

HighestWeight::HighestWeight(std::vector<long> entries) : entries_(std::move(entries)) {
  if (!is_dominant(entries_)) {
    std::string text = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i)
      text += (i ? "," : "") + std::to_string(entries_[i]);
    throw WeightError("weight " + text + ") is not dominant");
  }
}

long HighestWeight::total() const {
  long s = 0;
  for (long e : entries_) s += e;
  return s;
}

std::string HighestWeight::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) out += (i ? "," : "") + std::to_string(entries_[i]);
  return out;
}

HighestWeight parse_weight(const std::string& text) {
  std::vector<long> entries;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw WeightError("malformed weight entry '" + item + "'");
    }
    if (used != item.size()) throw WeightError("malformed weight entry '" + item + "'");
    entries.push_back(v);
  }
  if (entries.empty() || text.empty() || text.back() == ',') throw WeightError("malformed weight '" + text + "'");
  return HighestWeight(std::move(entries));
}

std::optional<HighestWeight> shift(const HighestWeight& rho, Sign sign, int i) {
  if (i < 1 || i > rho.m()) throw WeightError("shift index out of range");
  std::vector<long> e = rho.entries();
  e[static_cast<std::size_t>(i - 1)] += sign_value(sign);
  if (!is_dominant(e)) return std::nullopt;
  return HighestWeight(std::move(e));
}

long conformal_weight(const HighestWeight& rho, Sign sign, int i) {
  return sign == Sign::Minus ? rho[i] + (rho.m() - i) : -rho[i] + i - 1;
}

ConformalWeightTable conformal_table(const HighestWeight& rho, Sign sign) {
  const int m = rho.m();
  ConformalWeightTable t{rho, sign, {}, {}, {}};
  for (int i = 1; i <= m; ++i) t.w.push_back(conformal_weight(rho, sign, i));
  for (int i = 0; i < m; ++i) {
    Rational g = 1;
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      g *= 1 - Rational(1) / (t.w[i] - t.w[j]);
    }
    t.gamma.push_back(g);
    t.valid.push_back(shift(rho, sign, i + 1).has_value());
  }
  return t;
}

Rational casimir_eigenvalue(const HighestWeight& rho, unsigned q, CasimirVariant variant) {
  auto t = conformal_table(rho, variant == CasimirVariant::Plain ? Sign::Minus : Sign::Plus);
  Rational sum = 0;
  for (int i = 0; i < rho.m(); ++i) sum += rational_pow(Rational(t.w[i]), q) * t.gamma[i];
  return sum;
}

HighestWeight transpose_weight(const HighestWeight& rho) {
  std::vector<long> e;
  for (int i = rho.m(); i >= 1; --i) e.push_back(-rho[i]);
  return HighestWeight(std::move(e));
}

std::uint64_t weyl_dimension(const HighestWeight& rho) {
  Rational d = 1;
  for (int i = 1; i <= rho.m(); ++i)
    for (int j = i + 1; j <= rho.m(); ++j) d *= make_rational(rho[i] - rho[j] + j - i, j - i);
  if (d.get_den() != 1 || sgn(d) <= 0 || !d.get_num().fits_ulong_p())
    throw WeightError("non-integral Weyl dimension for " + rho.to_string());
  return d.get_num().get_ui();
}

RationalMatrix vandermonde_inverse(const std::vector<long>& w) {
  const std::size_t m = w.size();
  RationalMatrix inv(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    // Elementary symmetric polynomials of w without w_i.
    std::vector<Rational> s(m, 0);
    s[0] = 1;
    std::size_t count = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      ++count;
      for (std::size_t d = count; d >= 1; --d) s[d] += s[d - 1] * w[j];
    }
    Rational denom = 1;
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) denom *= w[i] - w[j];
    if (sgn(denom) == 0) throw WeightError("conformal weights not distinct");
    for (std::size_t j = 1; j <= m; ++j) {
      Rational v = s[m - j] / denom;
      inv(i, j - 1) = ((m - j) % 2 == 0) ? v : Rational(-v);
    }
  }
  return inv;
}

std::vector<HighestWeight> dominant_weights(int m, long bound) {
  std::vector<HighestWeight> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long upper) -> void {
    if (static_cast<int>(cur.size()) == m) {
      out.emplace_back(cur);
      return;
    }
    for (long v = upper; v >= -bound; --v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, bound);
  return out;
}

}  // namespace clifhom
