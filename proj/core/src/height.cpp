#include "mtavg/height.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace mtavg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_height(std::string_view text) {
  throw std::invalid_argument("invalid height '" + std::string(text) + "'");
}

}  // namespace

Height::Height(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("height with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Height Height::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  mpq_class value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_height(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) bad_height(text);
    value = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) bad_height(text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    value = mpq_class(digits, scale);
  } else {
    if (!all_digits(body)) bad_height(text);
    value = mpq_class(mpz_class(std::string(body), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Height(std::move(value));
}

Height Height::half() const { return Height(mpq_class(value_ / 2)); }

Height Height::abs() const { return Height(mpq_class(::abs(value_))); }

Height& Height::operator+=(const Height& other) {
  value_ += other.value_;
  return *this;
}

Height& Height::operator-=(const Height& other) {
  value_ -= other.value_;
  return *this;
}

Height operator-(const Height& h) { return Height(mpq_class(-h.value_)); }

Height operator*(const Height& lhs, const Height& rhs) { return Height(mpq_class(lhs.value_ * rhs.value_)); }

Height operator/(const Height& lhs, const Height& rhs) {
  if (rhs.value_ == 0) throw std::domain_error("division by zero height");
  return Height(mpq_class(lhs.value_ / rhs.value_));
}

bool Height::is_integer() const { return value_.get_den() == 1; }

std::string Height::str() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Height& h) { return os << h.str(); }

}  // namespace mtavg
