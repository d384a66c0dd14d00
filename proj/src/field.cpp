#include "preproj/field.hpp"

#include <cctype>

namespace preproj {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!preproj::is_prime(p) || p >= (1u << 31)) throw FieldError("not a supported prime: " + std::to_string(p));
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += static_cast<char>(std::tolower(c));
  if (t == "rat" || t == "q") return rationals();
  std::string digits;
  if (t.rfind("gfp:", 0) == 0)
    digits = t.substr(4);
  else if (t.rfind("gf(", 0) == 0 && t.back() == ')')
    digits = t.substr(3, t.size() - 4);
  else if (t.rfind("gf", 0) == 0)
    digits = t.substr(2);
  if (digits.empty() || digits.size() > 10) throw FieldError("unknown field: " + text);
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw FieldError("unknown field: " + text);
  std::uint64_t p = std::stoull(digits);
  if (p >= (1ull << 31)) throw FieldError("prime too large: " + text);
  return prime(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::name() const {
  return p_ ? "GF(" + std::to_string(p_) + ")" : std::string("Q");
}

Scalar::Scalar(const FieldSpec& f, long long v) : p_(f.characteristic()) {
  if (p_) {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += p_;
    r_ = static_cast<std::uint32_t>(m);
  } else {
    q_ = v;
  }
}

Scalar::Scalar(const FieldSpec& f, const BigRational& v) : p_(f.characteristic()) {
  if (p_) {
    BigInt num = boost::multiprecision::numerator(v) % p_;
    BigInt den = boost::multiprecision::denominator(v) % p_;
    if (num < 0) num += p_;
    if (den == 0) throw DivisionByZero();
    Scalar n(f, num.convert_to<long long>());
    Scalar d(f, den.convert_to<long long>());
    *this = n / d;
  } else {
    q_ = v;
  }
}

FieldSpec Scalar::field() const { return p_ ? FieldSpec::prime(p_) : FieldSpec::rationals(); }

void Scalar::check(const Scalar& b) const {
  if (p_ != b.p_) throw FieldMismatch();
}

Scalar Scalar::operator+(const Scalar& b) const {
  check(b);
  Scalar s = *this;
  if (p_) {
    std::uint64_t v = std::uint64_t(r_) + b.r_;
    s.r_ = static_cast<std::uint32_t>(v >= p_ ? v - p_ : v);
  } else {
    s.q_ += b.q_;
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_)
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  else
    s.q_ = -q_;
  return s;
}

Scalar Scalar::operator-(const Scalar& b) const { return *this + (-b); }

Scalar Scalar::operator*(const Scalar& b) const {
  check(b);
  Scalar s = *this;
  if (p_)
    s.r_ = static_cast<std::uint32_t>(std::uint64_t(r_) * b.r_ % p_);
  else
    s.q_ *= b.q_;
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  Scalar s = *this;
  if (p_) {
    // Extended Euclid on (r, p).
    long long a = r_, m = p_, x0 = 1, x1 = 0;
    while (m) {
      long long q = a / m;
      long long t = a - q * m;
      a = m;
      m = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    x0 %= static_cast<long long>(p_);
    if (x0 < 0) x0 += p_;
    s.r_ = static_cast<std::uint32_t>(x0);
  } else {
    s.q_ = 1 / q_;
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& b) const {
  check(b);
  return *this * b.inv();
}

Scalar Scalar::pow(long long k) const {
  Scalar base = k < 0 ? inv() : *this;
  if (k < 0) k = -k;
  Scalar acc = one(field());
  acc.p_ = p_;
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& b) const {
  if (p_ != b.p_) return false;
  return p_ ? r_ == b.r_ : q_ == b.q_;
}

std::string Scalar::str() const {
  if (p_) return std::to_string(r_);
  return q_.str();
}

Scalar half(const FieldSpec& f) {
  if (f.characteristic() == 2) throw CharTwo();
  return Scalar(f, 2).inv();
}

}  // namespace preproj
