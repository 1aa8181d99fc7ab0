#include "epsc/scalar.hpp"

namespace epsc {

namespace {

bool isPrime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Inverse of a mod p via extended Euclid.
std::int64_t modInverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, newt = 1, r = p, newr = a % p;
  if (newr < 0) newr += p;
  if (newr == 0) throw Error("division by zero in F_p");
  while (newr != 0) {
    std::int64_t q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (r != 1) throw Error("non-invertible element in F_p");
  return t < 0 ? t + p : t;
}

}  // namespace

FieldSpec rationalField() { return FieldSpec{0}; }

FieldSpec primeField(std::uint32_t p) {
  if (p >= (1u << 31) || !isPrime(p))
    throw Error("field modulus must be a prime < 2^31");
  return FieldSpec{p};
}

void Scalar::reduce() {
  if (f_.p == 0) return;
  BigInt num = boost::multiprecision::numerator(v_);
  BigInt den = boost::multiprecision::denominator(v_);
  std::int64_t p = f_.p;
  std::int64_t n = static_cast<std::int64_t>(num % p);
  if (n < 0) n += p;
  std::int64_t d = static_cast<std::int64_t>(den % p);
  v_ = Rational((n * modInverse(d, p)) % p);
}

Scalar::Scalar(FieldSpec f, long long n) : f_(f), v_(n) { reduce(); }

Scalar::Scalar(FieldSpec f, const Rational& q) : f_(f), v_(q) { reduce(); }

void Scalar::sameField(const Scalar& a, const Scalar& b) {
  if (!(a.f_ == b.f_)) throw Error("scalars from different fields");
}

Scalar Scalar::operator-() const {
  Scalar r(f_);
  r.v_ = -v_;
  r.reduce();
  return r;
}

Scalar Scalar::inverse() const {
  if (isZero()) throw Error("division by zero");
  if (f_.p == 0) {
    Scalar r(f_);
    r.v_ = 1 / v_;
    return r;
  }
  std::int64_t a = static_cast<std::int64_t>(BigInt(v_));
  return Scalar(f_, modInverse(a, f_.p));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::sameField(a, b);
  Scalar r(a.f_);
  r.v_ = a.v_ + b.v_;
  r.reduce();
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar::sameField(a, b);
  Scalar r(a.f_);
  r.v_ = a.v_ - b.v_;
  r.reduce();
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::sameField(a, b);
  Scalar r(a.f_);
  r.v_ = a.v_ * b.v_;
  r.reduce();
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  Scalar::sameField(a, b);
  return a.v_ == b.v_;
}

std::string Scalar::str() const {
  BigInt num = boost::multiprecision::numerator(v_);
  BigInt den = boost::multiprecision::denominator(v_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Scalar Scalar::parse(FieldSpec f, const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Scalar(f, Rational(BigInt(s)));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in scalar literal");
    return Scalar(f, Rational(num, den));
  } catch (const std::exception& e) {
    throw Error("bad scalar literal '" + s + "': " + e.what());
  }
}

}  // namespace epsc
