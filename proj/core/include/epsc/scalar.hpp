#ifndef EPSC_SCALAR_HPP
#define EPSC_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace epsc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Coefficient field: p == 0 means arbitrary-precision rationals,
// p > 0 means the prime field F_p (p < 2^31).
struct FieldSpec {
  std::uint32_t p = 0;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

FieldSpec rationalField();
FieldSpec primeField(std::uint32_t p);  // throws unless p is a prime < 2^31

// An exact field element.  Over F_p the value is kept as the canonical
// integer representative in [0, p).
class Scalar {
 public:
  Scalar() = default;                       // zero over Q
  explicit Scalar(FieldSpec f) : f_(f) {}   // zero
  Scalar(FieldSpec f, long long n);
  Scalar(FieldSpec f, const Rational& q);

  const FieldSpec& field() const { return f_; }
  const Rational& value() const { return v_; }
  bool isZero() const { return v_ == 0; }
  bool isOne() const { return v_ == 1; }

  Scalar operator-() const;
  Scalar inverse() const;  // throws on zero
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // "num/den" over Q (plain integer when den == 1), integer string over F_p.
  std::string str() const;
  static Scalar parse(FieldSpec f, const std::string& s);

 private:
  FieldSpec f_;
  Rational v_;

  void reduce();
  static void sameField(const Scalar& a, const Scalar& b);
};

inline Scalar one(FieldSpec f) { return Scalar(f, 1); }
inline Scalar zero(FieldSpec f) { return Scalar(f); }

// (-1)^e as a Scalar; e may be negative.
inline Scalar signPow(FieldSpec f, long long e) {
  return Scalar(f, (e % 2 == 0) ? 1 : -1);
}

}  // namespace epsc

#endif
