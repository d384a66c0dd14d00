#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace preproj {

using BigRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivisionByZero : FieldError {
  DivisionByZero() : FieldError("division by zero") {}
};
struct FieldMismatch : FieldError {
  FieldMismatch() : FieldError("scalars from different fields") {}
};
struct CharTwo : FieldError {
  CharTwo() : FieldError("1/2 does not exist in characteristic 2") {}
};

/// GF(p) for prime p < 2^31, or Q (stored as p = 0).
class FieldSpec {
 public:
  FieldSpec() = default;
  static FieldSpec prime(std::uint32_t p);
  static FieldSpec rationals() { return FieldSpec(); }
  /// Accepts "gf2", "gf3", "gfP:<p>", "rat", "GF(p)", "Q".
  static FieldSpec parse(const std::string& text);

  bool is_prime() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;
  bool operator==(const FieldSpec&) const = default;

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

class Scalar {
 public:
  Scalar() = default;
  Scalar(const FieldSpec& f, long long v);
  Scalar(const FieldSpec& f, const BigRational& v);
  static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
  static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }

  FieldSpec field() const;
  bool is_zero() const { return p_ ? r_ == 0 : q_ == 0; }
  bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }

  Scalar operator+(const Scalar& b) const;
  Scalar operator-(const Scalar& b) const;
  Scalar operator*(const Scalar& b) const;
  Scalar operator/(const Scalar& b) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar inv() const;
  Scalar pow(long long k) const;
  bool operator==(const Scalar& b) const;

  std::string str() const;
  std::uint32_t residue() const { return r_; }
  const BigRational& rational() const { return q_; }

 private:
  void check(const Scalar& b) const;
  std::uint32_t p_ = 0;
  std::uint32_t r_ = 0;
  BigRational q_;
};

/// Multiplicative inverse of 1+1.
Scalar half(const FieldSpec& f);

bool is_prime(std::uint64_t n);

}  // namespace preproj
