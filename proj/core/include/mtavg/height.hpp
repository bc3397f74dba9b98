#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mtavg {

/// Exact scalar value carried by merge-tree points.
///
/// Heights are rationals so that halving an interleaving bound and comparing
/// shifted heights for equality never rounds.
class Height {
 public:
  Height() = default;
  Height(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Height(std::int64_t num, std::int64_t den);

  /// Parses `p/q`, an integer, or a finite decimal such as `-2.125`.
  /// Throws std::invalid_argument on anything else.
  static Height parse(std::string_view text);

  Height half() const;
  Height abs() const;

  Height& operator+=(const Height& other);
  Height& operator-=(const Height& other);

  friend Height operator+(Height lhs, const Height& rhs) { return lhs += rhs; }
  friend Height operator-(Height lhs, const Height& rhs) { return lhs -= rhs; }
  friend Height operator-(const Height& h);
  friend Height operator*(const Height& lhs, const Height& rhs);
  friend Height operator/(const Height& lhs, const Height& rhs);

  friend bool operator==(const Height& lhs, const Height& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }
  friend std::strong_ordering operator<=>(const Height& lhs, const Height& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  /// Canonical text: `n` for integers, `p/q` in lowest terms otherwise.
  std::string str() const;

  double to_double() const { return value_.get_d(); }
  bool is_integer() const;

  const mpq_class& raw() const { return value_; }

 private:
  explicit Height(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Height& h);

}  // namespace mtavg
