#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "liesc/error.hpp"

namespace liesc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class DomainKind : std::uint8_t { prime, rational };

inline bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Base domain of all scalars: a prime field F_p or the rationals.
class Domain {
 public:
  static constexpr std::uint32_t kDefaultPrimeCap = 101;

  static Domain prime(std::uint64_t p) {
    if (p >= (1ULL << 31) || !is_prime_number(p)) {
      throw Error(ErrorCode::InvalidDomain, "modulus " + std::to_string(p) + " is not a supported prime");
    }
    return Domain(DomainKind::prime, static_cast<std::uint32_t>(p));
  }
  static Domain rational() noexcept { return Domain(DomainKind::rational, 0); }

  /// Accepts "F<p>" (e.g. "F5") or "Q".
  static Domain parse(std::string_view text) {
    if (text == "Q" || text == "q") return rational();
    if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
      std::uint64_t p = 0;
      for (char c : text.substr(1)) {
        if (c < '0' || c > '9' || p > (1ULL << 32)) {
          throw Error(ErrorCode::InvalidDomain, "cannot parse field '" + std::string(text) + "'");
        }
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
      }
      return prime(p);
    }
    throw Error(ErrorCode::InvalidDomain, "cannot parse field '" + std::string(text) + "'");
  }

  DomainKind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == DomainKind::prime; }
  bool is_finite() const noexcept { return kind_ == DomainKind::prime; }
  /// 0 for the rationals.
  std::uint32_t modulus() const noexcept { return p_; }

  std::string name() const { return is_prime() ? "F" + std::to_string(p_) : "Q"; }

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  Domain(DomainKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  DomainKind kind_;
  std::uint32_t p_;
};

enum class ArithOp { add, sub, mul, div };

/// An exact element of F_p (residue in [0, p)) or Q (reduced fraction, positive denominator).
class Scalar {
 public:
  Scalar() : Scalar(Domain::rational(), 0) {}

  Scalar(Domain domain, std::int64_t value) : domain_(domain) {
    if (domain.is_prime()) {
      const std::int64_t p = domain.modulus();
      std::int64_t r = value % p;
      if (r < 0) r += p;
      value_ = static_cast<std::uint32_t>(r);
    } else {
      value_ = Rational(value);
    }
  }

  static Scalar zero(Domain domain) { return Scalar(domain, 0); }
  static Scalar one(Domain domain) { return Scalar(domain, 1); }
  static Scalar from_rational(const Rational& q) {
    Scalar s(Domain::rational(), 0);
    s.value_ = q;
    return s;
  }

  /// Decimal literal: "2", "-3", "3/4". Prime-field literals must be plain integers in [0, p).
  static Scalar parse(Domain domain, std::string_view text);

  const Domain& domain() const noexcept { return domain_; }

  bool is_zero() const {
    if (auto r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
    return std::get<Rational>(value_) == 0;
  }
  bool is_one() const {
    if (auto r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
    return std::get<Rational>(value_) == 1;
  }

  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }

  std::string to_string() const {
    if (auto r = std::get_if<std::uint32_t>(&value_)) return std::to_string(*r);
    const Rational& q = std::get<Rational>(value_);
    if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
  }

  Scalar inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    Scalar out = *this;
    if (domain_.is_prime()) {
      out.value_ = static_cast<std::uint32_t>(pow_mod(residue(), domain_.modulus() - 2, domain_.modulus()));
    } else {
      out.value_ = Rational(1) / rational();
    }
    return out;
  }

  Scalar operator-() const {
    Scalar out = *this;
    if (domain_.is_prime()) {
      const std::uint32_t r = residue();
      out.value_ = r == 0 ? 0u : domain_.modulus() - r;
    } else {
      out.value_ = Rational(-rational());
    }
    return out;
  }

  friend Scalar arith(const Scalar& a, const Scalar& b, ArithOp op) {
    if (!(a.domain_ == b.domain_)) {
      throw Error(ErrorCode::DomainMismatch, a.domain_.name() + " vs " + b.domain_.name());
    }
    if (op == ArithOp::div && b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
    Scalar out = a;
    if (a.domain_.is_prime()) {
      const std::uint64_t p = a.domain_.modulus();
      const std::uint64_t x = a.residue();
      const std::uint64_t y = b.residue();
      std::uint64_t r = 0;
      switch (op) {
        case ArithOp::add: r = (x + y) % p; break;
        case ArithOp::sub: r = (x + p - y) % p; break;
        case ArithOp::mul: r = (x * y) % p; break;
        case ArithOp::div: r = (x * pow_mod(y, p - 2, p)) % p; break;
      }
      out.value_ = static_cast<std::uint32_t>(r);
    } else {
      const Rational& x = a.rational();
      const Rational& y = b.rational();
      switch (op) {
        case ArithOp::add: out.value_ = Rational(x + y); break;
        case ArithOp::sub: out.value_ = Rational(x - y); break;
        case ArithOp::mul: out.value_ = Rational(x * y); break;
        case ArithOp::div: out.value_ = Rational(x / y); break;
      }
    }
    return out;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return arith(a, b, ArithOp::add); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return arith(a, b, ArithOp::sub); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return arith(a, b, ArithOp::mul); }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return arith(a, b, ArithOp::div); }
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.domain_ == b.domain_ && a.value_ == b.value_;
  }

  /// Total order used for canonical sorting: residues numerically, rationals by value.
  friend int compare(const Scalar& a, const Scalar& b) {
    if (!(a.domain_ == b.domain_)) {
      throw Error(ErrorCode::DomainMismatch, a.domain_.name() + " vs " + b.domain_.name());
    }
    if (a.domain_.is_prime()) {
      return a.residue() < b.residue() ? -1 : (a.residue() > b.residue() ? 1 : 0);
    }
    return a.rational() < b.rational() ? -1 : (a.rational() > b.rational() ? 1 : 0);
  }

 private:
  static std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
      if (exp & 1) result = result * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    return result;
  }

  Domain domain_;
  std::variant<std::uint32_t, Rational> value_;
};

inline Scalar inverse(const Scalar& a) { return a.inverse(); }

inline Scalar pow(Scalar base, std::uint64_t exp) {
  Scalar result = Scalar::one(base.domain());
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

namespace detail {

inline bool parse_digits(std::string_view digits, BigInt& out) {
  if (digits.empty()) return false;
  out = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + (c - '0');
  }
  return true;
}

}  // namespace detail

inline Scalar Scalar::parse(Domain domain, std::string_view text) {
  auto bad = [&](const char* why) {
    return Error(ErrorCode::InvalidScalar, "'" + std::string(text) + "' in " + domain.name() + ": " + why);
  };
  if (domain.is_prime()) {
    BigInt v;
    if (!detail::parse_digits(text, v)) throw bad("expected a nonnegative integer");
    if (v >= domain.modulus()) throw bad("residue out of range [0, p)");
    return Scalar(domain, static_cast<std::int64_t>(v));
  }
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  BigInt num;
  BigInt den = 1;
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    if (!detail::parse_digits(body, num)) throw bad("expected an integer or fraction");
  } else {
    if (!detail::parse_digits(body.substr(0, slash), num) || !detail::parse_digits(body.substr(slash + 1), den)) {
      throw bad("expected an integer or fraction");
    }
    if (den == 0) throw bad("zero denominator");
  }
  if (negative) num = -num;
  return from_rational(Rational(num, den));
}

}  // namespace liesc
