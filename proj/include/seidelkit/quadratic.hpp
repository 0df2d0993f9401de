#pragma once

// Elements a + b*sqrt(d) of a real quadratic field, with exactly decidable
// sign and comparisons. d is kept square-free; purely rational values are
// canonicalized to d = 0, b = 0, so equality is componentwise.

#include <cmath>
#include <optional>
#include <sstream>
#include <string>

#include "seidelkit/numeric.hpp"

namespace seidelkit {

class Quadratic {
 public:
  Quadratic() : a_(0), b_(0), d_(0) {}
  Quadratic(const Rational& a) : a_(a), b_(0), d_(0) { a_.canonicalize(); }  // NOLINT(runtime/explicit)
  Quadratic(long a) : a_(a), b_(0), d_(0) {}             // NOLINT(runtime/explicit)

  Quadratic(const Rational& a, const Rational& b, const Int& d) : a_(a), b_(b), d_(d) {
    a_.canonicalize();
    b_.canonicalize();
    canonicalize();
  }

  static Quadratic sqrt_of(const Int& d) { return Quadratic(0, 1, d); }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coeff() const { return b_; }
  const Int& surd() const { return d_; }

  bool is_rational() const { return b_ == 0; }

  bool operator==(const Quadratic& o) const {
    return a_ == o.a_ && b_ == o.b_ && d_ == o.d_;
  }
  bool operator!=(const Quadratic& o) const { return !(*this == o); }

  Quadratic operator-() const { return raw(-a_, -b_, d_); }

  Quadratic operator+(const Quadratic& o) const {
    check_field(o);
    return Quadratic(a_ + o.a_, b_ + o.b_, join(o));
  }
  Quadratic operator-(const Quadratic& o) const {
    check_field(o);
    return Quadratic(a_ - o.a_, b_ - o.b_, join(o));
  }
  Quadratic operator*(const Quadratic& o) const {
    check_field(o);
    Int d = join(o);
    return Quadratic(a_ * o.a_ + b_ * o.b_ * Rational(d), a_ * o.b_ + b_ * o.a_, d);
  }
  Quadratic operator/(const Quadratic& o) const {
    check_field(o);
    // 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d)
    Rational n = o.a_ * o.a_ - o.b_ * o.b_ * Rational(o.d_);
    if (n == 0) throw Error("Quadratic: division by zero");
    Quadratic conj = raw(o.a_ / n, -o.b_ / n, o.d_);
    return *this * conj;
  }

  Quadratic& operator+=(const Quadratic& o) { return *this = *this + o; }
  Quadratic& operator-=(const Quadratic& o) { return *this = *this - o; }
  Quadratic& operator*=(const Quadratic& o) { return *this = *this * o; }
  Quadratic& operator/=(const Quadratic& o) { return *this = *this / o; }

  // Exact sign: rational comparisons of a^2 and b^2 d with case analysis.
  int sign() const {
    if (b_ == 0) return sign_of(a_);
    if (a_ == 0) return sign_of(b_);
    int sa = sign_of(a_), sb = sign_of(b_);
    if (sa == sb) return sa;
    // a and b of opposite sign: compare |a| and |b| sqrt(d).
    Rational a2 = a_ * a_;
    Rational b2d = b_ * b_ * Rational(d_);
    if (a2 == b2d) return 0;  // cannot happen with square-free d > 1, but exact anyway
    return a2 > b2d ? sa : sb;
  }

  bool operator<(const Quadratic& o) const { return (*this - o).sign() < 0; }
  bool operator>(const Quadratic& o) const { return (*this - o).sign() > 0; }
  bool operator<=(const Quadratic& o) const { return (*this - o).sign() <= 0; }
  bool operator>=(const Quadratic& o) const { return (*this - o).sign() >= 0; }

  double approx() const {
    double v = a_.get_d();
    if (b_ != 0) v += b_.get_d() * std::sqrt(d_.get_d());
    return v;
  }

  std::string str() const {
    if (b_ == 0) return to_string(a_);
    std::ostringstream os;
    os << "(" << to_string(a_);
    os << (sign_of(b_) < 0 ? " - " : " + ");
    Rational ab = abs(b_);
    if (ab != 1) os << to_string(ab) << "*";
    os << "sqrt(" << to_string(d_) << "))";
    return os.str();
  }

 private:
  static Quadratic raw(const Rational& a, const Rational& b, const Int& d) {
    Quadratic q;
    q.a_ = a;
    q.b_ = b;
    q.d_ = d;
    return q;
  }

  void canonicalize() {
    if (d_ < 0) throw Error("Quadratic: negative radicand");
    if (b_ == 0 || d_ == 0) {
      b_ = 0;
      d_ = 0;
      return;
    }
    Int s, df;
    squarefree_decompose(d_, s, df);
    b_ *= Rational(s);
    d_ = df;
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
      d_ = 0;
    }
  }

  Int join(const Quadratic& o) const {
    if (d_ == 0) return o.d_;
    if (o.d_ == 0) return d_;
    if (d_ != o.d_) throw Error("Quadratic: mixed fields sqrt(" + to_string(d_) + ") vs sqrt(" + to_string(o.d_) + ")");
    return d_;
  }
  void check_field(const Quadratic& o) const { (void)join(o); }

  Rational a_, b_;
  Int d_;
};

inline int sign_of(const Quadratic& x) { return x.sign(); }

inline std::string to_string(const Quadratic& x) { return x.str(); }

}  // namespace seidelkit
