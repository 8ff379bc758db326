#pragma once

#include <gmpxx.h>

#include <string>

namespace metallic {

using Rat = mpq_class;
using Int = mpz_class;

// Parameter of the field: beta is the positive root of x^2 - n*x - 1,
// the n-th metallic mean, so n < beta < n+1.
struct FieldSpec {
  int n = 0;
};

int sign(const Rat& q);
Int rat_floor(const Rat& q);

// Exact element a + b*beta of Q(beta).  Arithmetic reduces through
// beta^2 = n*beta + 1 and never touches floating point; the representation
// (a, b) is unique because beta is irrational.  Mixing values from fields
// with different n is a hard error.
class QuadNum {
 public:
  QuadNum() = default;  // null-field placeholder; any arithmetic throws
  QuadNum(Rat a, Rat b, int n);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  int field() const { return n_; }
  bool is_rational() const { return b_ == 0; }

  // beta, beta^-1 = beta - n and the conjugate beta* = n - beta = -beta^-1.
  static QuadNum beta(int n) { return QuadNum(0, 1, n); }
  static QuadNum beta_inv(int n) { return QuadNum(-n, 1, n); }
  static QuadNum beta_star(int n) { return QuadNum(n, -1, n); }
  static QuadNum rational(Rat a, int n) { return QuadNum(std::move(a), 0, n); }

  QuadNum operator-() const;
  QuadNum operator+(const QuadNum& y) const;
  QuadNum operator-(const QuadNum& y) const;
  QuadNum operator*(const QuadNum& y) const;
  QuadNum operator/(const QuadNum& y) const;
  QuadNum inverse() const;

  QuadNum& operator+=(const QuadNum& y) { return *this = *this + y; }
  QuadNum& operator-=(const QuadNum& y) { return *this = *this - y; }
  QuadNum& operator*=(const QuadNum& y) { return *this = *this * y; }
  QuadNum& operator/=(const QuadNum& y) { return *this = *this / y; }

  // Exact sign, decided rationally: for b != 0 compare beta against
  // t = -a/b; for t >= 0, beta > t iff t^2 - n*t - 1 < 0, and beta > t
  // always holds when t < 0.
  int sign() const;

  // Unique integer m with m <= x < m+1, found by bracketing beta between
  // continued-fraction convergents of [n; n, n, ...] until the integer
  // part is isolated (x is irrational whenever b != 0, so this terminates).
  Int floor() const;
  QuadNum frac() const;  // x - floor(x), in [0, 1)

  bool operator==(const QuadNum& y) const { return (*this - y).sign() == 0; }
  bool operator!=(const QuadNum& y) const { return !(*this == y); }
  bool operator<(const QuadNum& y) const { return (*this - y).sign() < 0; }
  bool operator<=(const QuadNum& y) const { return (*this - y).sign() <= 0; }
  bool operator>(const QuadNum& y) const { return (*this - y).sign() > 0; }
  bool operator>=(const QuadNum& y) const { return (*this - y).sign() >= 0; }

  double to_double() const;  // display only; never feeds back into exact code

 private:
  Rat a_;
  Rat b_;
  int n_ = 0;

  void require_same_field(const QuadNum& y) const;
  void require_field() const;
};

QuadNum pow(const QuadNum& x, int k);
long floor_long(const QuadNum& x);

// Plain-text forms used by the CLI: "p/q" or "p/q+r/s*beta" (also accepts
// "p", "beta", "r/s*beta" and a leading sign on either part when parsing).
std::string rat_str(const Rat& q);
std::string expr_str(const QuadNum& x);
Rat parse_rat(const std::string& s);
QuadNum parse_expr(const std::string& s, int n);

}  // namespace metallic
