#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fermicalc/scalar.hpp"

namespace fermicalc {

/// Bit k-1 set <=> generator k occurs in the blade. Generators inside a
/// stored blade are always in ascending index order.
using BladeMask = std::uint32_t;

inline constexpr std::size_t kMaxGenerators = 20;

inline int grade_of(BladeMask mask) { return std::popcount(mask); }

/// Sign of reordering e_S e_T (concatenated, each ascending) into ascending
/// order: (-1)^(number of pairs s in S, t in T with s > t).
inline int reorder_sign(BladeMask lhs, BladeMask rhs) {
  int swaps = 0;
  for (lhs >>= 1; lhs != 0; lhs >>= 1) swaps += std::popcount(lhs & rhs);
  return (swaps & 1) ? -1 : 1;
}

/// (-1)^(k(k-1)/2): the sign picked up by reversing k anticommuting factors.
inline int reversal_sign(int k) { return ((k * (k - 1) / 2) & 1) ? -1 : 1; }

/// Generator indices (1-based, ascending) of a blade.
inline std::vector<std::size_t> generators_of(BladeMask mask) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; mask != 0; ++k, mask >>= 1)
    if (mask & 1u) out.push_back(k + 1);
  return out;
}

struct ExteriorTag {
  static constexpr const char* separator = "^";
};
struct CliffordTag {
  static constexpr const char* separator = " ";
};

/// Sparse linear combination of blades over `dim` generators. The tag keeps
/// exterior and Clifford elements distinct types; all products live in
/// exterior.hpp and clifford.hpp.
template <Field F, class Tag>
class BladeSum {
 public:
  using Scalar = F;
  using Terms = std::map<BladeMask, F>;

  BladeSum() = default;
  explicit BladeSum(std::size_t dim) : dim_(dim) {
    if (dim > kMaxGenerators)
      throw std::invalid_argument("too many generators: " + std::to_string(dim));
  }

  static BladeSum scalar(std::size_t dim, const F& value) {
    BladeSum out(dim);
    out.add_term(0, value);
    return out;
  }

  static BladeSum blade(std::size_t dim, BladeMask mask, const F& coeff = F(1)) {
    BladeSum out(dim);
    out.add_term(mask, coeff);
    return out;
  }

  /// The single generator with 1-based index `k`.
  static BladeSum generator(std::size_t dim, std::size_t k) {
    if (k < 1 || k > dim)
      throw std::out_of_range("generator index " + std::to_string(k) + " outside 1.." +
                              std::to_string(dim));
    return blade(dim, BladeMask{1} << (k - 1));
  }

  std::size_t dim() const { return dim_; }
  BladeMask full_mask() const { return dim_ == 0 ? 0 : ((BladeMask{1} << dim_) - 1); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  F coeff(BladeMask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? F() : it->second;
  }

  /// Adds `value` to the coefficient of `mask`, dropping the entry if it
  /// cancels.
  void add_term(BladeMask mask, const F& value) {
    if (mask & ~full_mask())
      throw std::out_of_range("blade mask exceeds generator count");
    if (value.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mask, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Terms whose grade satisfies `keep`.
  template <class Pred>
  BladeSum filter_grades(Pred keep) const {
    BladeSum out(dim_);
    for (const auto& [mask, c] : terms_)
      if (keep(grade_of(mask))) out.terms_.emplace(mask, c);
    return out;
  }

  bool has_parity(int parity) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return (grade_of(t.first) & 1) == parity; });
  }

  BladeSum operator-() const {
    BladeSum out = *this;
    for (auto& [mask, c] : out.terms_) c = -c;
    return out;
  }

  BladeSum& operator+=(const BladeSum& other) {
    require_same_dim(*this, other);
    for (const auto& [mask, c] : other.terms_) add_term(mask, c);
    return *this;
  }
  BladeSum& operator-=(const BladeSum& other) { return *this += -other; }

  friend BladeSum operator+(BladeSum a, const BladeSum& b) { return a += b; }
  friend BladeSum operator-(BladeSum a, const BladeSum& b) { return a -= b; }

  friend BladeSum operator*(const F& s, const BladeSum& a) {
    BladeSum out(a.dim_);
    if (s.is_zero()) return out;
    for (const auto& [mask, c] : a.terms_) out.add_term(mask, s * c);
    return out;
  }

  friend bool operator==(const BladeSum& a, const BladeSum& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const BladeSum& a, const BladeSum& b) { return !(a == b); }

  /// Largest coefficient-wise |a_S - b_S|.
  friend double max_abs_diff(const BladeSum& a, const BladeSum& b) {
    require_same_dim(a, b);
    double worst = 0.0;
    for (const auto& [mask, c] : (a - b).terms_) worst = std::max(worst, c.magnitude());
    return worst;
  }

  /// scalar approx_equal on every blade of the union of supports.
  friend bool approx_equal(const BladeSum& a, const BladeSum& b, double tol) {
    if (a.dim_ != b.dim_) return false;
    for (const auto& [mask, c] : a.terms_)
      if (!approx_equal(c, b.coeff(mask), tol)) return false;
    for (const auto& [mask, c] : b.terms_)
      if (!approx_equal(a.coeff(mask), c, tol)) return false;
    return true;
  }

  /// "(c) e1^e2 + ..." ordered by grade, then bitmask; "0" when empty.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<BladeMask, const F*>> ordered;
    ordered.reserve(terms_.size());
    for (const auto& [mask, c] : terms_) ordered.emplace_back(mask, &c);
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
      return grade_of(x.first) < grade_of(y.first);
    });
    std::string out;
    for (const auto& [mask, c] : ordered) {
      if (!out.empty()) out += " + ";
      out += "(" + c->to_string() + ") " + blade_name(mask);
    }
    return out;
  }

  static std::string blade_name(BladeMask mask) {
    if (mask == 0) return "1";
    std::string out;
    for (std::size_t k : generators_of(mask)) {
      if (!out.empty()) out += Tag::separator;
      out += "e" + std::to_string(k);
    }
    return out;
  }

 private:
  static void require_same_dim(const BladeSum& a, const BladeSum& b) {
    if (a.dim_ != b.dim_)
      throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim_) + " vs " +
                                  std::to_string(b.dim_));
  }

  std::size_t dim_ = 0;
  Terms terms_;
};

}  // namespace fermicalc
