#pragma once

#include <cstdint>
#include <string>

#include "hypertile/errors.hpp"

namespace hypertile {

/// Exact rational with overflow-checked 64-bit arithmetic. Denominator
/// kept positive, fraction gcd-reduced.
class Rational {
 public:
  Rational() = default;
  Rational(long long num, long long den = 1);

  long long num() const { return num_; }
  long long den() const { return den_; }
  int sign() const { return (num_ > 0) - (num_ < 0); }
  bool is_zero() const { return num_ == 0; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  Rational operator-() const;
  friend Rational operator+(const Rational&, const Rational&);
  friend Rational operator-(const Rational&, const Rational&);
  friend Rational operator*(const Rational&, const Rational&);
  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  long long num_ = 0;
  long long den_ = 1;
};

/// Element a + b*sqrt(3) of the real quadratic field Q[sqrt(3)],
/// with exact rational coordinates.
class QSqrt3 {
 public:
  QSqrt3() = default;
  QSqrt3(Rational a, Rational b) : a_(a), b_(b) {}
  static QSqrt3 integer(long long n) { return {Rational(n), Rational(0)}; }
  static QSqrt3 sqrt3_times(long long n) { return {Rational(0), Rational(n)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt3_part() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  /// Exact sign of a + b*sqrt(3), decided by comparing a^2 with 3 b^2.
  int sign() const;
  double to_double() const;
  std::string str() const;

  QSqrt3 operator-() const { return {-a_, -b_}; }
  friend QSqrt3 operator+(const QSqrt3& x, const QSqrt3& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend QSqrt3 operator-(const QSqrt3& x, const QSqrt3& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend QSqrt3 operator*(const QSqrt3& x, const QSqrt3& y);
  friend QSqrt3 operator*(const Rational& r, const QSqrt3& x) { return {r * x.a_, r * x.b_}; }
  friend bool operator==(const QSqrt3&, const QSqrt3&) = default;

 private:
  Rational a_;
  Rational b_;
};

}  // namespace hypertile
