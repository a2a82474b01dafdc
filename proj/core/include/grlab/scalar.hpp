#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace grlab {

/// Exact scalar. Rational values are kept in lowest terms by GMP; elements
/// of Z/p^k and F_p are integers in [0, p^k) with denominator 1.
using Scalar = mpq_class;

enum class RingKind { Rational, PrimeField, TruncatedPadic };

// Valuation of a nonzero rational is reported as 0 and valuation of 0 as
// this sentinel, so field and Z/p^k elimination share one code path.
inline constexpr int val_infinity = 1 << 24;

/// Coefficient ring descriptor: Q, F_p, or Z/p^k. All element operations go
/// through the ring so that canonical form (least nonnegative residue) is
/// maintained for the modular kinds.
class ScalarRing {
 public:
  static ScalarRing rationals();
  static ScalarRing prime_field(std::int64_t p);
  static ScalarRing truncated_padic(std::int64_t p, int k);

  RingKind kind() const { return kind_; }
  std::int64_t prime() const { return p_; }
  int precision() const { return k_; }
  const mpz_class& modulus() const { return modulus_; }
  bool modular() const { return kind_ != RingKind::Rational; }

  bool operator==(const ScalarRing& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && k_ == o.k_;
  }
  bool operator!=(const ScalarRing& o) const { return !(*this == o); }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }

  /// Canonical form. For modular rings the denominator must be a unit
  /// (coprime to p); it is cleared by modular inversion.
  Scalar canon(const Scalar& v) const;
  Scalar from_int(long v) const { return canon(Scalar(v)); }

  Scalar add(const Scalar& a, const Scalar& b) const { return canon(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return canon(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return canon(a * b); }
  Scalar neg(const Scalar& a) const { return canon(-a); }

  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  bool is_one(const Scalar& a) const { return a == 1; }
  bool is_unit(const Scalar& a) const;

  /// Multiplicative inverse; empty when a is not a unit.
  std::optional<Scalar> inverse(const Scalar& a) const;

  /// p-valuation of a canonical element: 0 for units, precision() for 0.
  /// Rational ring: 0 for nonzero, val_infinity for 0.
  int valuation(const Scalar& a) const;

  /// Exact division b / (p^a * unit) given val(b) >= a = val(pivot).
  /// Result is the least nonnegative choice, determined mod p^(k-a).
  Scalar div_by_pivot(const Scalar& b, const Scalar& pivot) const;

  /// p^j as a ring element (modular rings only).
  Scalar p_power(int j) const;

  /// Map a value from another ring into this one. Q -> Z/p^k reduces
  /// numerator and denominator (denominator must be coprime to p);
  /// Z/p^k -> Z/p^j for j <= k truncates; Z/p^k -> Q is the integer lift.
  Scalar convert_from(const ScalarRing& src, const Scalar& v) const;

  /// Parse "a" or "a/b" with optional sign.
  Scalar parse(const std::string& text) const;
  static std::string to_string(const Scalar& a);

  std::string describe() const;

 private:
  ScalarRing(RingKind kind, std::int64_t p, int k);

  RingKind kind_;
  std::int64_t p_ = 0;
  int k_ = 0;
  mpz_class modulus_;  // p^k, or 0 for Q
};

}  // namespace grlab
