#pragma once

// Exact arithmetic over real quadratic fields.
//
// A value is kept as (a + b*sqrt(d)) / c with integers a, b, c, d in a unique
// canonical form:
//
//   * c > 0,
//   * d >= 0 and square-free,
//   * gcd(a, b, c) = 1,
//   * rationals are folded to b = 0, d = 0 (sqrt(0) and sqrt(1) never appear).
//
// Canonical form makes equality a plain field comparison, and makes every
// nonzero b certify irrationality (d is then square-free and > 1).
//
// Ordering never leaves the integers.  sign(u + v*sqrt(d)) is decided by the
// sign quadrants of (u, v) and, in the mixed quadrant, by comparing u^2 with
// v^2*d.  A difference of values from two different fields has the shape
// A + B*sqrt(d1) - C*sqrt(d2); its sign follows from at most one more squaring,
// since (A + B*sqrt(d1))^2 - (C*sqrt(d2))^2 lies back in a single field.
//
// floor() exploits canonicity: for b != 0 the term b*sqrt(d) is irrational and
// lies strictly between consecutive integers m, m+1 with m = isqrt(b^2*d)
// (negated and shifted for b < 0), so floor((a + b*sqrt(d))/c) is exactly
// floordiv(a + m, c).

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include "sturmian/error.hpp"

namespace sturmian {

using Int = boost::multiprecision::cpp_int;

namespace detail {

inline int sgn(const Int& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

// Floored quotient for c > 0.
inline Int floordiv(const Int& a, const Int& c) {
  Int q = a / c;
  if (a % c != 0 && a < 0) --q;
  return q;
}

// sign of u + v*sqrt(d); d must be square-free (so the sum is irrational
// whenever v != 0 and d > 1).
inline int sign_with_radical(const Int& u, const Int& v, const Int& d) {
  if (d == 0 || v == 0) return sgn(u);
  if (u == 0) return sgn(v);
  if (u > 0 && v > 0) return 1;
  if (u < 0 && v < 0) return -1;
  const Int lhs = u * u;
  const Int rhs = v * v * d;
  const int s = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
  return u > 0 ? s : -s;
}

} // namespace detail

class QuadraticReal {
 public:
  QuadraticReal() : a_(0), b_(0), c_(1), d_(0) {}

  static QuadraticReal make(Int a, Int b, Int c, Int d) {
    if (c == 0) throw error(errc::zero_denominator, "denominator must be nonzero");
    if (d < 0) throw error(errc::unsupported_radicand, "radicand must be nonnegative");
    // Pull the square part of d into b, then fold degenerate radicals.
    if (d > 1 && b != 0) {
      for (Int p = 2; p * p <= d; ++p) {
        while (d % (p * p) == 0) {
          d /= p * p;
          b *= p;
        }
      }
    }
    if (d == 1) {
      a += b;
      b = 0;
    }
    if (b == 0 || d == 0) {
      b = 0;
      d = 0;
    }
    if (c < 0) {
      a = -a;
      b = -b;
      c = -c;
    }
    Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(a), abs(b)), c);
    if (g > 1) {
      a /= g;
      b /= g;
      c /= g;
    }
    QuadraticReal r;
    r.a_ = std::move(a);
    r.b_ = std::move(b);
    r.c_ = std::move(c);
    r.d_ = std::move(d);
    return r;
  }

  static QuadraticReal from_int(Int n) { return make(std::move(n), 0, 1, 0); }
  static QuadraticReal from_ratio(Int p, Int q) { return make(std::move(p), 0, std::move(q), 0); }
  static QuadraticReal sqrt_of(Int d) { return make(0, 1, 1, std::move(d)); }

  // Accepts the canonical text forms "qr:a,b,c,d" and "rat:p/q".
  static QuadraticReal parse(std::string_view text) {
    const auto to_int = [](std::string_view piece) -> Int {
      if (piece.empty()) throw error(errc::bad_format, "empty integer field");
      try {
        return Int(std::string(piece));
      } catch (const std::exception&) {
        throw error(errc::bad_format, "bad integer '" + std::string(piece) + "'");
      }
    };
    if (text.rfind("qr:", 0) == 0) {
      std::string_view rest = text.substr(3);
      Int parts[4];
      for (int i = 0; i < 4; ++i) {
        const auto comma = rest.find(',');
        if ((i < 3) != (comma != std::string_view::npos))
          throw error(errc::bad_format, "qr: expects four comma-separated integers");
        parts[i] = to_int(i < 3 ? rest.substr(0, comma) : rest);
        if (i < 3) rest = rest.substr(comma + 1);
      }
      return make(parts[0], parts[1], parts[2], parts[3]);
    }
    if (text.rfind("rat:", 0) == 0) {
      const std::string_view rest = text.substr(4);
      const auto slash = rest.find('/');
      if (slash == std::string_view::npos) return from_int(to_int(rest));
      return from_ratio(to_int(rest.substr(0, slash)), to_int(rest.substr(slash + 1)));
    }
    throw error(errc::bad_format, "expected qr:a,b,c,d or rat:p/q, got '" + std::string(text) + "'");
  }

  const Int& num_rational() const { return a_; }
  const Int& num_radical() const { return b_; }
  const Int& den() const { return c_; }
  const Int& radicand() const { return d_; }

  bool is_rational() const { return d_ == 0; }
  bool is_integer() const { return d_ == 0 && c_ == 1; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  int sign() const { return detail::sign_with_radical(a_, b_, d_); }

  static int cmp(const QuadraticReal& x, const QuadraticReal& y) {
    const Int A = x.a_ * y.c_ - y.a_ * x.c_;
    if (x.d_ == y.d_) return detail::sign_with_radical(A, x.b_ * y.c_ - y.b_ * x.c_, x.d_);
    if (y.d_ == 0) return detail::sign_with_radical(A, x.b_ * y.c_, x.d_);
    if (x.d_ == 0) return detail::sign_with_radical(A, -(y.b_ * x.c_), y.d_);
    // Distinct irrational radicands: sign of A + B*sqrt(dx) - C*sqrt(dy).
    const Int B = x.b_ * y.c_;
    const Int C = y.b_ * x.c_;
    const int left = detail::sign_with_radical(A, B, x.d_);
    const int right = detail::sgn(C);
    if (left != right) return left > right ? 1 : -1;
    if (left == 0) return 0;
    const int squares =
        detail::sign_with_radical(A * A + B * B * x.d_ - C * C * y.d_, 2 * A * B, x.d_);
    return left > 0 ? squares : -squares;
  }

  friend bool operator==(const QuadraticReal& x, const QuadraticReal& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

  friend std::strong_ordering operator<=>(const QuadraticReal& x, const QuadraticReal& y) {
    const int c = cmp(x, y);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend QuadraticReal operator+(const QuadraticReal& x, const QuadraticReal& y) {
    Int d = x.d_;
    if (x.d_ != y.d_) {
      if (x.d_ == 0) {
        d = y.d_;
      } else if (y.d_ != 0) {
        throw error(errc::mixed_radicands,
                    "cannot combine sqrt(" + x.d_.str() + ") with sqrt(" + y.d_.str() + ")");
      }
    }
    return make(x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_, d);
  }

  QuadraticReal operator-() const {
    QuadraticReal r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
  }

  friend QuadraticReal operator-(const QuadraticReal& x, const QuadraticReal& y) {
    return x + (-y);
  }

  QuadraticReal times(const Int& n) const { return make(a_ * n, b_ * n, c_, d_); }

  Int floor() const {
    Int m = 0;
    if (b_ != 0) {
      const Int root = boost::multiprecision::sqrt(Int(b_ * b_ * d_));
      m = b_ > 0 ? root : -root - 1;
    }
    return detail::floordiv(a_ + m, c_);
  }

  QuadraticReal fract() const { return *this - from_int(floor()); }

  // Canonical text form; inverse of parse().
  std::string str() const {
    if (d_ == 0) return "rat:" + a_.str() + "/" + c_.str();
    return "qr:" + a_.str() + "," + b_.str() + "," + c_.str() + "," + d_.str();
  }

  // Display-only approximation.
  double approx() const {
    using Float = boost::multiprecision::cpp_bin_float_50;
    const Float v = (Float(a_) + Float(b_) * sqrt(Float(d_))) / Float(c_);
    return static_cast<double>(v);
  }

 private:
  Int a_, b_, c_, d_;
};

} // namespace sturmian
