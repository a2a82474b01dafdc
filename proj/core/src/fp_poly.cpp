#include "grlab/fp_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grlab {

namespace {

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t; new_t = tmp;
    tmp = r - q * new_r;
    r = new_r; new_r = tmp;
  }
  if (r != 1) throw std::domain_error("mod_inverse: not invertible");
  return ((t % p) + p) % p;
}

}  // namespace

FpPoly::FpPoly(std::int64_t p, std::vector<std::int64_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
  if (p_ < 2) throw std::invalid_argument("FpPoly: p must be >= 2");
  for (auto& c : c_) c = ((c % p_) + p_) % p_;
  trim();
}

FpPoly FpPoly::x(std::int64_t p) { return FpPoly(p, {0, 1}); }

FpPoly FpPoly::constant(std::int64_t p, std::int64_t c) { return FpPoly(p, {c}); }

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  std::vector<std::int64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = (coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i))) % p_;
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  std::vector<std::int64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = (coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i)) + p_) % p_;
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  if (is_zero() || o.is_zero()) return FpPoly(p_);
  std::vector<std::int64_t> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = (r[i + j] + c_[i] * o.c_[j]) % p_;
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::scaled(std::int64_t s) const {
  std::vector<std::int64_t> r = c_;
  for (auto& c : r) c = (c * (((s % p_) + p_) % p_)) % p_;
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(mod_inverse(leading(), p_));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& d) const {
  if (d.is_zero()) throw std::domain_error("FpPoly: division by zero");
  std::vector<std::int64_t> rem = c_;
  std::vector<std::int64_t> quo(
      degree() >= d.degree() ? degree() - d.degree() + 1 : 0, 0);
  std::int64_t lead_inv = mod_inverse(d.leading(), p_);
  for (int i = degree(); i >= d.degree(); --i) {
    std::int64_t q = (rem[i] * lead_inv) % p_;
    if (q == 0) continue;
    quo[i - d.degree()] = q;
    for (int j = 0; j <= d.degree(); ++j) {
      auto& r = rem[i - d.degree() + j];
      r = ((r - q * d.c_[j]) % p_ + p_) % p_;
    }
  }
  return {FpPoly(p_, std::move(quo)), FpPoly(p_, std::move(rem))};
}

FpPoly FpPoly::derivative() const {
  std::vector<std::int64_t> r;
  for (int i = 1; i <= degree(); ++i) r.push_back((c_[i] * i) % p_);
  return FpPoly(p_, std::move(r));
}

std::string FpPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i > 0) {
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

FpPoly poly_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyBezout poly_ext_gcd(const FpPoly& a, const FpPoly& b) {
  std::int64_t p = a.p();
  FpPoly r0 = a, r1 = b;
  FpPoly u0 = FpPoly::constant(p, 1), u1 = FpPoly(p);
  FpPoly v0 = FpPoly(p), v1 = FpPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1); r1 = std::move(r);
    FpPoly u2 = u0 - q * u1, v2 = v0 - q * v1;
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  std::int64_t s = mod_inverse(r0.leading(), p);
  return {r0.scaled(s), u0.scaled(s), v0.scaled(s)};
}

FpPoly poly_powmod(const FpPoly& base, const mpz_class& e, const FpPoly& mod) {
  FpPoly acc = FpPoly::constant(base.p(), 1) % mod;
  FpPoly b = base % mod;
  mpz_class n = e;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) acc = (acc * b) % mod;
    b = (b * b) % mod;
    n >>= 1;
  }
  return acc;
}

namespace {

FpPoly pth_root(const FpPoly& f) {
  // Over F_p the Frobenius fixes coefficients, so f(x) = g(x^p) has the
  // p-th root with coefficients c_{p*i}.
  std::vector<std::int64_t> r;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(f.p()))
    r.push_back(f.coeff(i));
  return FpPoly(f.p(), std::move(r));
}

// Collect (squarefree part, multiplicity) pairs; char-p aware.
void squarefree_decompose(const FpPoly& f, int mult,
                          std::vector<std::pair<FpPoly, int>>& out) {
  const std::int64_t p = f.p();
  if (f.degree() <= 0) return;
  FpPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree_decompose(pth_root(f), mult * static_cast<int>(p), out);
    return;
  }
  FpPoly c = poly_gcd(f, d);
  FpPoly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    FpPoly y = poly_gcd(w, c);
    FpPoly z = w / y;
    if (z.degree() > 0) out.push_back({z.monic(), mult * i});
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (c.degree() > 0)
    squarefree_decompose(pth_root(c), mult * static_cast<int>(p), out);
}

// Split a squarefree product of degree-d irreducibles (Cantor-Zassenhaus).
void equal_degree_split(const FpPoly& f, int d, std::mt19937_64& rng,
                        std::vector<FpPoly>& out) {
  const std::int64_t p = f.p();
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  while (true) {
    std::vector<std::int64_t> rc(f.degree());
    for (auto& c : rc) c = static_cast<std::int64_t>(rng() % p);
    FpPoly r(p, std::move(rc));
    if (r.degree() < 1) continue;
    FpPoly t(p);
    if (p == 2) {
      // trace map r + r^2 + ... + r^(2^(d-1))
      FpPoly acc = r % f, term = r % f;
      for (int i = 1; i < d; ++i) {
        term = (term * term) % f;
        acc = acc + term;
      }
      t = poly_gcd(acc, f);
    } else {
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p),
                    static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      FpPoly s = poly_powmod(r, e, f);
      t = poly_gcd(s - FpPoly::constant(p, 1), f);
    }
    if (t.degree() > 0 && t.degree() < f.degree()) {
      equal_degree_split(t, d, rng, out);
      equal_degree_split(f / t, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<FpPoly, int>> factor_poly(const FpPoly& f,
                                                std::mt19937_64& rng) {
  if (f.is_zero()) throw std::invalid_argument("factor_poly: zero polynomial");
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly g = f.monic();
  if (g.degree() == 0) return out;

  std::vector<std::pair<FpPoly, int>> squarefree;
  squarefree_decompose(g, 1, squarefree);

  const std::int64_t p = f.p();
  for (const auto& [sf, mult] : squarefree) {
    FpPoly w = sf;
    FpPoly h = FpPoly::x(p) % w;  // maintains x^(p^d) mod w by Frobenius steps
    int d = 0;
    while (w.degree() > 0 && 2 * (d + 1) <= w.degree()) {
      ++d;
      h = poly_powmod(h, mpz_class(static_cast<long>(p)), w);
      FpPoly g_d = poly_gcd(h - FpPoly::x(p), w);
      if (g_d.degree() > 0) {
        std::vector<FpPoly> irr;
        equal_degree_split(g_d, d, rng, irr);
        for (auto& q : irr) out.push_back({std::move(q), mult});
        w = w / g_d;
        h = h % w;
      }
    }
    if (w.degree() > 0) out.push_back({w.monic(), mult});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree())
      return a.first.degree() < b.first.degree();
    return a.first.coeffs() < b.first.coeffs();
  });
  return out;
}

bool poly_is_irreducible(const FpPoly& f, std::mt19937_64& rng) {
  if (f.degree() <= 0) return false;
  auto factors = factor_poly(f, rng);
  return factors.size() == 1 && factors[0].second == 1;
}

}  // namespace grlab
