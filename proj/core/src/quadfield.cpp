#include "metallic/quadfield.hpp"

#include <cassert>
#include <cctype>
#include <cmath>
#include <regex>
#include <stdexcept>
#include <utility>

namespace metallic {

int sign(const Rat& q) { return sgn(q); }

Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

QuadNum::QuadNum(Rat a, Rat b, int n) : a_(std::move(a)), b_(std::move(b)), n_(n) {
  if (n < 1) throw std::invalid_argument("QuadNum: field parameter n must be >= 1");
}

void QuadNum::require_field() const {
  if (n_ < 1) throw std::invalid_argument("QuadNum: value has no field attached");
}

void QuadNum::require_same_field(const QuadNum& y) const {
  require_field();
  y.require_field();
  if (n_ != y.n_) throw std::invalid_argument("QuadNum: mixing fields with different n");
}

QuadNum QuadNum::operator-() const {
  require_field();
  return QuadNum(-a_, -b_, n_);
}

QuadNum QuadNum::operator+(const QuadNum& y) const {
  require_same_field(y);
  return QuadNum(a_ + y.a_, b_ + y.b_, n_);
}

QuadNum QuadNum::operator-(const QuadNum& y) const {
  require_same_field(y);
  return QuadNum(a_ - y.a_, b_ - y.b_, n_);
}

QuadNum QuadNum::operator*(const QuadNum& y) const {
  require_same_field(y);
  // (a1 + b1 b)(a2 + b2 b) with b^2 = n b + 1
  return QuadNum(a_ * y.a_ + b_ * y.b_, a_ * y.b_ + b_ * y.a_ + n_ * b_ * y.b_, n_);
}

QuadNum QuadNum::inverse() const {
  require_field();
  // (a + b beta)(a + b beta*) = a^2 + n a b - b^2, nonzero unless a = b = 0
  Rat norm = a_ * a_ + n_ * a_ * b_ - b_ * b_;
  if (norm == 0) throw std::domain_error("QuadNum: division by zero");
  return QuadNum((a_ + n_ * b_) / norm, -b_ / norm, n_);
}

QuadNum QuadNum::operator/(const QuadNum& y) const { return *this * y.inverse(); }

int QuadNum::sign() const {
  require_field();
  int sb = sgn(b_);
  if (sb == 0) return sgn(a_);
  Rat t = -a_ / b_;
  int beta_above;  // sign of beta - t
  if (sgn(t) < 0) {
    beta_above = +1;
  } else {
    Rat p = t * t - n_ * t - 1;  // roots beta and -beta^-1; p != 0 for rational t
    beta_above = sgn(p) < 0 ? +1 : -1;
  }
  return sb * beta_above;
}

Int QuadNum::floor() const {
  require_field();
  if (b_ == 0) return rat_floor(a_);
  // Convergents p_k/q_k of [n; n, n, ...] alternate below/above beta.
  Int plo = n_, qlo = 1;                // p_0/q_0 = n < beta
  Int phi = Int(n_) * n_ + 1, qhi = n_;  // p_1/q_1 > beta
  for (;;) {
    Rat lo = a_ + b_ * Rat(plo) / Rat(qlo);
    Rat hi = a_ + b_ * Rat(phi) / Rat(qhi);
    if (b_ < 0) std::swap(lo, hi);
    Int flo = rat_floor(lo), fhi = rat_floor(hi);
    if (flo == fhi) {
      assert((*this - rational(Rat(flo), n_)).sign() >= 0);
      assert((*this - rational(Rat(flo + 1), n_)).sign() < 0);
      return flo;
    }
    Int p2 = n_ * phi + plo, q2 = n_ * qhi + qlo;
    Int p3 = n_ * p2 + phi, q3 = n_ * q2 + qhi;
    plo = p2;
    qlo = q2;
    phi = p3;
    qhi = q3;
  }
}

QuadNum QuadNum::frac() const { return *this - rational(Rat(floor()), n_); }

double QuadNum::to_double() const {
  double beta = (n_ + std::sqrt(double(n_) * n_ + 4.0)) / 2.0;
  return a_.get_d() + b_.get_d() * beta;
}

QuadNum pow(const QuadNum& x, int k) {
  if (k < 0) return pow(x.inverse(), -k);
  QuadNum r = QuadNum::rational(1, x.field());
  QuadNum base = x;
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1) r *= base;
    base *= base;
  }
  return r;
}

long floor_long(const QuadNum& x) {
  Int f = x.floor();
  if (!f.fits_slong_p()) throw std::overflow_error("floor_long: out of range");
  return f.get_si();
}

std::string rat_str(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string expr_str(const QuadNum& x) {
  if (x.is_rational()) return rat_str(x.a());
  std::string b = rat_str(abs(x.b()));
  return rat_str(x.a()) + (sgn(x.b()) < 0 ? "-" : "+") + b + "*beta";
}

Rat parse_rat(const std::string& s) {
  static const std::regex re(R"(^\s*([+-]?\d+)(?:/(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw std::invalid_argument("bad rational: " + s);
  if (m[2].matched && m[2].str().find_first_not_of('0') == std::string::npos)
    throw std::invalid_argument("zero denominator: " + s);
  Rat q(m[1].str() + (m[2].matched ? "/" + m[2].str() : ""));
  q.canonicalize();
  return q;
}

QuadNum parse_expr(const std::string& s, int n) {
  // Accepted forms: "p/q", "p/q+r/s*beta", "p/q-r/s*beta", "r/s*beta",
  // "beta", "-beta", "p/q+beta" (whitespace ignored, "/q" optional).
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.find("beta") == std::string::npos) return QuadNum(parse_rat(t), 0, n);
  static const std::regex re(R"(^([+-]?\d+(?:/\d+)?)?([+-])?(?:(\d+(?:/\d+)?)\*)?beta$)");
  std::smatch m;
  if (!std::regex_match(t, m, re) || (m[1].matched && !m[2].matched))
    throw std::invalid_argument("bad coordinate expression: " + s);
  Rat a = m[1].matched ? parse_rat(m[1].str()) : Rat(0);
  Rat b = m[3].matched ? parse_rat(m[3].str()) : Rat(1);
  if (m[2].matched && m[2].str() == "-") b = -b;
  return QuadNum(a, b, n);
}

}  // namespace metallic
