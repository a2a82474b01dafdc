#include "grlab/scalar.hpp"

#include <sstream>

namespace grlab {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

ScalarRing::ScalarRing(RingKind kind, std::int64_t p, int k)
    : kind_(kind), p_(p), k_(k) {
  if (kind_ != RingKind::Rational) {
    if (!is_prime(p_)) throw std::invalid_argument("ScalarRing: p must be prime");
    if (k_ < 1) throw std::invalid_argument("ScalarRing: precision k must be >= 1");
    mpz_ui_pow_ui(modulus_.get_mpz_t(), static_cast<unsigned long>(p_),
                  static_cast<unsigned long>(k_));
  }
}

ScalarRing ScalarRing::rationals() { return ScalarRing(RingKind::Rational, 0, 0); }

ScalarRing ScalarRing::prime_field(std::int64_t p) {
  return ScalarRing(RingKind::PrimeField, p, 1);
}

ScalarRing ScalarRing::truncated_padic(std::int64_t p, int k) {
  return ScalarRing(RingKind::TruncatedPadic, p, k);
}

Scalar ScalarRing::canon(const Scalar& v) const {
  if (kind_ == RingKind::Rational) {
    Scalar r = v;
    r.canonicalize();
    return r;
  }
  mpz_class num = v.get_num(), den = v.get_den();
  mpz_class n = num % modulus_;
  if (n < 0) n += modulus_;
  if (den != 1) {
    mpz_class d = den % modulus_;
    if (d < 0) d += modulus_;
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), modulus_.get_mpz_t()) == 0)
      throw std::domain_error("ScalarRing: denominator not invertible mod p^k");
    n = (n * dinv) % modulus_;
  }
  return Scalar(n);
}

bool ScalarRing::is_unit(const Scalar& a) const {
  if (kind_ == RingKind::Rational) return sgn(a) != 0;
  return mpz_divisible_ui_p(a.get_num().get_mpz_t(),
                            static_cast<unsigned long>(p_)) == 0;
}

std::optional<Scalar> ScalarRing::inverse(const Scalar& a) const {
  if (kind_ == RingKind::Rational) {
    if (sgn(a) == 0) return std::nullopt;
    return Scalar(1 / a);
  }
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_num().get_mpz_t(),
                 modulus_.get_mpz_t()) == 0)
    return std::nullopt;
  return Scalar(inv);
}

int ScalarRing::valuation(const Scalar& a) const {
  if (kind_ == RingKind::Rational) return sgn(a) == 0 ? val_infinity : 0;
  if (sgn(a) == 0) return k_;
  mpz_class n = a.get_num();
  int v = 0;
  while (v < k_ && mpz_divisible_ui_p(n.get_mpz_t(),
                                      static_cast<unsigned long>(p_))) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(),
                    static_cast<unsigned long>(p_));
    ++v;
  }
  return v;
}

Scalar ScalarRing::div_by_pivot(const Scalar& b, const Scalar& pivot) const {
  if (kind_ == RingKind::Rational) return canon(b / pivot);
  int a = valuation(pivot);
  if (valuation(b) < a)
    throw std::domain_error("div_by_pivot: insufficient valuation");
  if (is_zero(b)) return zero();
  mpz_class pa;
  mpz_ui_pow_ui(pa.get_mpz_t(), static_cast<unsigned long>(p_),
                static_cast<unsigned long>(a));
  mpz_class u;
  mpz_divexact(u.get_mpz_t(), pivot.get_num().get_mpz_t(), pa.get_mpz_t());
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), b.get_num().get_mpz_t(), pa.get_mpz_t());
  mpz_class uinv;
  if (mpz_invert(uinv.get_mpz_t(), u.get_mpz_t(), modulus_.get_mpz_t()) == 0)
    throw std::domain_error("div_by_pivot: pivot unit part not invertible");
  mpz_class pk_a;
  mpz_ui_pow_ui(pk_a.get_mpz_t(), static_cast<unsigned long>(p_),
                static_cast<unsigned long>(k_ - a));
  mpz_class r = (q * uinv) % pk_a;
  if (r < 0) r += pk_a;
  return Scalar(r);
}

Scalar ScalarRing::p_power(int j) const {
  if (kind_ == RingKind::Rational)
    throw std::domain_error("p_power: rational ring has no p");
  if (j >= k_) return zero();
  mpz_class pj;
  mpz_ui_pow_ui(pj.get_mpz_t(), static_cast<unsigned long>(p_),
                static_cast<unsigned long>(j));
  return Scalar(pj);
}

Scalar ScalarRing::convert_from(const ScalarRing& src, const Scalar& v) const {
  if (src == *this) return v;
  if (kind_ == RingKind::Rational) {
    if (src.kind_ == RingKind::Rational) return v;
    return v;  // integer lift of the canonical residue
  }
  if (src.modular() && src.p_ != p_)
    throw std::invalid_argument("convert_from: incompatible primes");
  if (src.modular() && src.k_ < k_)
    throw std::invalid_argument("convert_from: cannot increase precision");
  return canon(v);
}

Scalar ScalarRing::parse(const std::string& text) const {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  try {
    Scalar q(s);
    return canon(q);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad scalar literal: " + text);
  }
}

std::string ScalarRing::to_string(const Scalar& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

std::string ScalarRing::describe() const {
  switch (kind_) {
    case RingKind::Rational: return "Q";
    case RingKind::PrimeField: return "F_" + std::to_string(p_);
    case RingKind::TruncatedPadic:
      return "Z/" + std::to_string(p_) + "^" + std::to_string(k_);
  }
  return "?";
}

}  // namespace grlab
