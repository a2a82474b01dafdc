#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace grlab {

/// Dense univariate polynomial over F_p with small prime p. Coefficients are
/// least nonnegative residues; the zero polynomial has empty coefficients.
class FpPoly {
 public:
  FpPoly(std::int64_t p, std::vector<std::int64_t> coeffs = {});
  static FpPoly x(std::int64_t p);
  static FpPoly constant(std::int64_t p, std::int64_t c);

  std::int64_t p() const { return p_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  bool is_zero() const { return c_.empty(); }
  std::int64_t leading() const { return c_.back(); }
  std::int64_t coeff(int i) const {
    return i < static_cast<int>(c_.size()) ? c_[i] : 0;
  }

  bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly scaled(std::int64_t s) const;
  FpPoly monic() const;

  /// Quotient and remainder by a nonzero divisor.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const;
  FpPoly operator%(const FpPoly& d) const { return divmod(d).second; }
  FpPoly operator/(const FpPoly& d) const { return divmod(d).first; }

  FpPoly derivative() const;
  std::string to_string() const;

 private:
  void trim();
  std::int64_t p_;
  std::vector<std::int64_t> c_;  // c_[i] is the coefficient of x^i
};

FpPoly poly_gcd(FpPoly a, FpPoly b);  // monic gcd
/// Bezout data: g = gcd(a, b) monic with g = u*a + v*b.
struct PolyBezout { FpPoly g, u, v; };
PolyBezout poly_ext_gcd(const FpPoly& a, const FpPoly& b);

FpPoly poly_powmod(const FpPoly& base, const mpz_class& e, const FpPoly& mod);

/// Irreducible factors with multiplicities (squarefree + distinct-degree +
/// Cantor-Zassenhaus equal-degree splitting; randomness is seeded).
std::vector<std::pair<FpPoly, int>> factor_poly(const FpPoly& f,
                                                std::mt19937_64& rng);
bool poly_is_irreducible(const FpPoly& f, std::mt19937_64& rng);

}  // namespace grlab
