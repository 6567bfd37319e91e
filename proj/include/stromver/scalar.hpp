#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace stromver {

// Exact rational with arbitrary-precision integer parts. mpq_class keeps
// gcd-reduced, positive-denominator canonical form after arithmetic.
using Rational = mpq_class;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero in Q(i)") {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Gaussian rational p/q + (r/s)i, the coefficient field for every tensor
/// in the engine. All operations are exact; equality is structural.
class GaussRational {
 public:
  GaussRational() : re_(0), im_(0) {}
  GaussRational(long n) : re_(n), im_(0) {}                    // NOLINT
  GaussRational(const Rational& re) : re_(re), im_(0) {}       // NOLINT
  GaussRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  GaussRational(long n, long d) : re_(n, d), im_(0) { re_.canonicalize(); }

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussRational conj() const { return {re_, -im_}; }

  // |z|^2 as an exact rational.
  Rational norm_sq() const { return re_ * re_ + im_ * im_; }

  GaussRational inv() const {
    if (is_zero()) throw DivisionByZero();
    Rational n = norm_sq();
    return {re_ / n, -im_ / n};
  }

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussRational operator-(const GaussRational& a) {
    return {-a.re_, -a.im_};
  }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    return a * b.inv();
  }
  GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
  GaussRational& operator-=(const GaussRational& o) { return *this = *this - o; }
  GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }
  GaussRational& operator/=(const GaussRational& o) { return *this = *this / o; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) {
    return !(a == b);
  }
  // Lexicographic order, for use as map key only; not a field order.
  friend bool operator<(const GaussRational& a, const GaussRational& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  /// Renders in the exact round-trip format "p/q+r/si", e.g. "1/2-3/4i".
  std::string str() const;

  /// Parses the format produced by str(); also accepts "i", "-i", "2i", "1+i".
  static GaussRational parse(const std::string& s);

  double re_double() const { return re_.get_d(); }
  double im_double() const { return im_.get_d(); }

 private:
  Rational re_, im_;
};

}  // namespace stromver
