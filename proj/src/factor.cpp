#include "prf/factor.hpp"

#include "prf/error.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>

namespace prf {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over Z/q, q an odd prime below 2^31; coefficients low to high.

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 pow_mod(u64 b, u64 e, u64 q) {
  u64 r = 1;
  b %= q;
  while (e) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 q) { return pow_mod(a, q - 2, q); }

ModPoly sub(ModPoly a, const ModPoly& b, u64 q) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + q - b[i]) % q;
  trim(a);
  return a;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, u64 q) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q;
  trim(r);
  return r;
}

/// Quotient and remainder; b nonzero.
std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b, u64 q) {
  if (deg(a) < deg(b)) return {{}, a};
  const u64 inv = inv_mod(b.back(), q);
  ModPoly quot(a.size() - b.size() + 1, 0);
  for (int i = deg(a); i >= deg(b); --i) {
    u64 c = a[i] * inv % q;
    quot[i - deg(b)] = c;
    if (!c) continue;
    for (int j = 0; j <= deg(b); ++j) a[i - deg(b) + j] = (a[i - deg(b) + j] + q - c * b[j] % q) % q;
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(quot);
  return {quot, a};
}

ModPoly monic(ModPoly a, u64 q) {
  if (a.empty()) return a;
  u64 inv = inv_mod(a.back(), q);
  for (auto& c : a) c = c * inv % q;
  return a;
}

ModPoly gcd(ModPoly a, ModPoly b, u64 q) {
  while (!b.empty()) {
    ModPoly r = divmod(a, b, q).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, q);
}

/// s·a + t·b = 1 for coprime a, b.
std::pair<ModPoly, ModPoly> xgcd(const ModPoly& a, const ModPoly& b, u64 q) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [qq, r] = divmod(r0, r1, q);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = sub(s0, mul(qq, s1, q), q);
    ModPoly t2 = sub(t0, mul(qq, t1, q), q);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is a nonzero constant
  u64 inv = inv_mod(r0[0], q);
  for (auto& c : s0) c = c * inv % q;
  for (auto& c : t0) c = c * inv % q;
  return {s0, t0};
}

ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& f, u64 q) {
  ModPoly r{1};
  base = divmod(base, f, q).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = divmod(mul(r, r, q), f, q).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = divmod(mul(r, base, q), f, q).second;
  }
  return r;
}

/// Monic square-free f → monic irreducible factors.
std::vector<ModPoly> factor_mod(ModPoly f, u64 q, std::mt19937_64& rng) {
  std::vector<std::pair<ModPoly, int>> dd;
  const ModPoly x{0, 1};
  ModPoly h = x;
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powmod(h, Integer(static_cast<unsigned long>(q)), f, q);
    ModPoly g = gcd(f, sub(h, x, q), q);
    if (deg(g) > 0) {
      dd.emplace_back(g, d);
      f = divmod(f, g, q).first;
      h = divmod(h, f, q).second;
    }
  }
  if (deg(f) > 0) dd.emplace_back(f, deg(f));

  std::vector<ModPoly> out;
  std::uniform_int_distribution<u64> coef(0, q - 1);
  for (auto& [g0, d] : dd) {
    Integer qd;
    mpz_ui_pow_ui(qd.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(d));
    const Integer e = (qd - 1) / 2;
    std::vector<ModPoly> todo{g0};
    while (!todo.empty()) {
      ModPoly g = std::move(todo.back());
      todo.pop_back();
      if (deg(g) == d) {
        out.push_back(std::move(g));
        continue;
      }
      for (;;) {
        ModPoly a(static_cast<std::size_t>(deg(g)));
        for (auto& c : a) c = coef(rng);
        trim(a);
        if (deg(a) < 1) continue;
        ModPoly b = sub(powmod(a, e, g, q), ModPoly{1}, q);
        ModPoly u = gcd(g, b, q);
        if (deg(u) > 0 && deg(u) < deg(g)) {
          todo.push_back(divmod(g, u, q).first);
          todo.push_back(monic(u, q));
          break;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials over Z/M for Hensel lifting.

using ZPoly = std::vector<Integer>;

void zreduce(ZPoly& a, const Integer& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zadd(ZPoly a, const ZPoly& b, const Integer& m) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  zreduce(a, m);
  return a;
}

ZPoly zsub(ZPoly a, const ZPoly& b, const Integer& m) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  zreduce(a, m);
  return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  zreduce(r, m);
  return r;
}

/// Division by a monic b.
std::pair<ZPoly, ZPoly> zdivmod(ZPoly a, const ZPoly& b, const Integer& m) {
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) return {{}, a};
  ZPoly quot(a.size() - b.size() + 1, 0);
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    Integer c = a[i] % m;
    if (c < 0) c += m;
    quot[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) mpz_submul(a[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    a[i] = 0;
  }
  a.resize(b.size() - 1);
  zreduce(a, m);
  zreduce(quot, m);
  return {quot, a};
}

ZPoly lift_poly(const ModPoly& a) { return ZPoly(a.begin(), a.end()); }

Integer inverse(const Integer& a, const Integer& m) {
  Integer r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw Error(ErrorKind::InvalidArgument, "leading coefficient not invertible");
  return r;
}

/// Monic F mod M (M a power of q reached by squaring) from the monic
/// factorisation of F mod q.
std::vector<ZPoly> hensel(const ZPoly& f_int, const std::vector<ModPoly>& facs, u64 q, const Integer& big_m) {
  if (facs.size() == 1) {
    ZPoly f = f_int;
    zreduce(f, big_m);
    Integer inv = inverse(f.back(), big_m);
    for (auto& c : f) c *= inv;
    zreduce(f, big_m);
    return {f};
  }
  const std::size_t half = facs.size() / 2;
  std::vector<ModPoly> fa(facs.begin(), facs.begin() + half), fb(facs.begin() + half, facs.end());
  ModPoly g0{1}, h0{1};
  for (const auto& p : fa) g0 = mul(g0, p, q);
  for (const auto& p : fb) h0 = mul(h0, p, q);
  auto [s0, t0] = xgcd(g0, h0, q);
  ZPoly g = lift_poly(g0), h = lift_poly(h0), s = lift_poly(s0), t = lift_poly(t0);
  Integer m(static_cast<unsigned long>(q));
  while (m < big_m) {
    const Integer m2 = m * m;
    ZPoly f = f_int;
    zreduce(f, m2);
    Integer inv = inverse(f.back(), m2);
    for (auto& c : f) c *= inv;
    zreduce(f, m2);
    ZPoly e = zsub(f, zmul(g, h, m2), m2);
    auto [qq, r] = zdivmod(zmul(s, e, m2), h, m2);
    ZPoly g2 = zadd(zadd(g, zmul(t, e, m2), m2), zmul(qq, g, m2), m2);
    ZPoly h2 = zadd(h, r, m2);
    ZPoly b = zsub(zadd(zmul(s, g2, m2), zmul(t, h2, m2), m2), ZPoly{1}, m2);
    auto [c, d] = zdivmod(zmul(s, b, m2), h2, m2);
    s = zsub(s, d, m2);
    t = zsub(zsub(t, zmul(t, b, m2), m2), zmul(c, g2, m2), m2);
    g = std::move(g2);
    h = std::move(h2);
    m = m2;
  }
  auto left = hensel(g, fa, q, big_m);
  auto right = hensel(h, fb, q, big_m);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

ZPoly symmetric(ZPoly a, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : a)
    if (c > half) c -= m;
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

ZPoly primitive(ZPoly a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

/// Exact division over Z; nullopt unless b | a.
std::optional<ZPoly> exact_div(ZPoly a, const ZPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) return std::nullopt;
  ZPoly quot(a.size() - b.size() + 1, 0);
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    if (!mpz_divisible_p(a[i].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), a[i].get_mpz_t(), b.back().get_mpz_t());
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) mpz_submul(a[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
  }
  for (int i = 0; i < db; ++i)
    if (a[i] != 0) return std::nullopt;
  return quot;
}

ZPoly to_zpoly(const UniPoly& p) {
  const UniPoly q = p.primitive();
  ZPoly out;
  for (const auto& c : q.coeffs()) out.push_back(c.get_num());
  return out;
}

UniPoly from_zpoly(const std::string& var, const ZPoly& z) {
  return UniPoly(var, std::vector<Rational>(z.begin(), z.end())).primitive();
}

bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<ZPoly> zassenhaus(ZPoly f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  std::mt19937_64 rng(0x5eed);

  // pick the prime with the fewest modular factors among a few good ones
  static const u64 primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                               59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127};
  u64 best_q = 0;
  std::vector<ModPoly> best;
  int good = 0;
  for (u64 q : primes) {
    if (mpz_fdiv_ui(f.back().get_mpz_t(), static_cast<unsigned long>(q)) == 0) continue;
    ModPoly fq;
    for (const auto& c : f) fq.push_back(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(q)));
    trim(fq);
    ModPoly dq;
    for (std::size_t i = 1; i < fq.size(); ++i) dq.push_back(fq[i] * i % q);
    trim(dq);
    if (dq.empty() || deg(gcd(fq, dq, q)) > 0) continue;
    auto facs = factor_mod(monic(fq, q), q, rng);
    if (best_q == 0 || facs.size() < best.size()) {
      best_q = q;
      best = std::move(facs);
    }
    if (best.size() == 1 || ++good == 6) break;
  }
  if (best_q == 0 || best.size() == 1) return {f};

  // coefficient bound for factors, times the leading coefficient
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer bound = abs(f.back()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n + 1));
  Integer m(static_cast<unsigned long>(best_q));
  while (m <= bound) m *= m;

  std::vector<ZPoly> lifted = hensel(f, best, best_q, m);
  std::vector<ZPoly> out;
  std::vector<std::size_t> alive(lifted.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  for (std::size_t s = 1; 2 * s <= alive.size();) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      ZPoly g{f.back()};
      for (std::size_t i : idx) g = zmul(g, lifted[alive[i]], m);
      g = primitive(symmetric(g, m));
      if (auto q = exact_div(f, g)) {
        out.push_back(g);
        f = primitive(*q);
        std::vector<std::size_t> rest;
        for (std::size_t i = 0, j = 0; i < alive.size(); ++i) {
          if (j < s && idx[j] == i) {
            ++j;
            continue;
          }
          rest.push_back(alive[i]);
        }
        alive = std::move(rest);
        found = true;
        break;
      }
    } while (next_subset(idx, alive.size()));
    if (!found) ++s;
  }
  if (f.size() > 1) out.push_back(f);
  return out;
}

}  // namespace

std::vector<UniPoly> factor_square_free(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "factorisation of the zero polynomial");
  if (p.degree() < 1) return {};
  UniPoly sf = square_free_part(p).primitive();
  std::vector<UniPoly> out;
  // powers of the variable first: keeps the prime search simple
  if (sf.coeff(0) == 0) {
    out.push_back(UniPoly(sf.var(), {Rational(0), Rational(1)}));
    sf = exact_quotient(sf, out.back()).primitive();
  }
  if (sf.degree() >= 1)
    for (const auto& z : zassenhaus(to_zpoly(sf))) out.push_back(from_zpoly(sf.var(), z));
  std::sort(out.begin(), out.end(), [](const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
      if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
  });
  return out;
}

std::string factored_string(const UniPoly& p) {
  auto fs = factor_square_free(p);
  if (fs.empty()) return p.is_zero() ? "0" : "1";
  if (fs.size() == 1) return fs.front().to_string();
  std::string s;
  for (std::size_t i = 0; i < fs.size(); ++i) s += (i ? "*(" : "(") + fs[i].to_string() + ")";
  return s;
}

}  // namespace prf
