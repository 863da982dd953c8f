#pragma once

#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace ggk {

struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* Exact rational scalar over 64-bit integers.  All intermediates go through
   128-bit arithmetic and overflow throws instead of wrapping, so a dimension
   count can never be silently wrong. */
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { reduce(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return make(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return make(n, d);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw ArithmeticError("division by zero");
    return make((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  static std::int64_t checked(__int128 v) {
    if (v > (__int128)INT64_MAX || v < (__int128)INT64_MIN)
      throw ArithmeticError("rational overflow");
    return (std::int64_t)v;
  }
  static Rational make(__int128 n, __int128 d) {
    if (d == 0) throw ArithmeticError("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 an = n < 0 ? -n : n;
    __int128 g = gcd128(an, d);
    if (g > 1) { n /= g; d /= g; }
    Rational r;
    r.num_ = checked(n);
    r.den_ = checked(d);
    return r;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b) { __int128 t = a % b; a = b; b = t; }
    return a;
  }
  void reduce() {
    Rational r = make(num_, den_);
    num_ = r.num_;
    den_ = r.den_;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/* Prime field of order P, for fast verification runs.  P must be prime. */
template <std::uint32_t P>
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t v) {  // NOLINT: implicit by design
    std::int64_t m = v % (std::int64_t)P;
    if (m < 0) m += P;
    v_ = (std::uint32_t)m;
  }
  explicit Fp(const Rational& r) : Fp(Fp(r.num()) / Fp(r.den())) {}

  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) { return from((a.v_ + (std::uint64_t)b.v_) % P); }
  friend Fp operator-(Fp a, Fp b) { return from((a.v_ + (std::uint64_t)P - b.v_) % P); }
  friend Fp operator*(Fp a, Fp b) { return from((std::uint64_t)a.v_ * b.v_ % P); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return from(v_ == 0 ? 0 : P - v_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }

  Fp inverse() const {
    if (v_ == 0) throw ArithmeticError("division by zero in prime field");
    std::uint64_t base = v_, acc = 1, e = P - 2;
    while (e) {
      if (e & 1) acc = acc * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return from(acc);
  }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

 private:
  static Fp from(std::uint64_t v) {
    Fp r;
    r.v_ = (std::uint32_t)v;
    return r;
  }
  std::uint32_t v_ = 0;
};

using F32003 = Fp<32003>;

/* Conversion hook used by the linear-algebra layer: matrices are assembled
   over the rationals and mapped into the working field on demand. */
inline Rational to_scalar(const Rational& r, Rational /*tag*/) { return r; }
template <std::uint32_t P>
inline Fp<P> to_scalar(const Rational& r, Fp<P> /*tag*/) { return Fp<P>(r); }

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace ggk

namespace Eigen {

template <>
struct NumTraits<ggk::Rational> : GenericNumTraits<ggk::Rational> {
  using Real = ggk::Rational;
  using NonInteger = ggk::Rational;
  using Nested = ggk::Rational;
  using Literal = std::int64_t;
  static inline Real epsilon() { return ggk::Rational(0); }
  static inline Real dummy_precision() { return ggk::Rational(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 6,
    MulCost = 6
  };
};

template <std::uint32_t P>
struct NumTraits<ggk::Fp<P>> : GenericNumTraits<ggk::Fp<P>> {
  using Real = ggk::Fp<P>;
  using NonInteger = ggk::Fp<P>;
  using Nested = ggk::Fp<P>;
  using Literal = std::int64_t;
  static inline Real epsilon() { return ggk::Fp<P>(0); }
  static inline Real dummy_precision() { return ggk::Fp<P>(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 2
  };
};

}  // namespace Eigen
