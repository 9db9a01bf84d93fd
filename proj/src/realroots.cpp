#include "prf/realroots.hpp"

#include "prf/error.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace prf {

namespace {

std::vector<Integer> integer_coeffs(const UniPoly& p) {
  // scale by a positive rational only, so signs are preserved
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Rational s = c * Rational(den_lcm, num_gcd == 0 ? Integer(1) : num_gcd);
    s.canonicalize();
    out.push_back(s.get_num());
  }
  return out;
}

UniPoly positive_scaled(const UniPoly& p) {
  std::vector<Rational> c;
  for (const auto& z : integer_coeffs(p)) c.emplace_back(z);
  return UniPoly(p.var(), std::move(c));
}

int sign_of_int(const Integer& z) { return sgn(z); }

int lead_sign(const std::vector<Integer>& c) { return c.empty() ? 0 : sign_of_int(c.back()); }

/// Canonical defining polynomial: square-free, primitive, positive leading coefficient.
UniPoly canonical(const UniPoly& p) { return square_free_part(p).primitive(); }

}  // namespace

int sign_at(const std::vector<Integer>& c, const Rational& x) {
  if (c.empty()) return 0;
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc = c.back();
  Integer bpow = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    bpow *= b;
    acc *= a;
    mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), bpow.get_mpz_t());
  }
  return sign_of_int(acc);
}

// ---------------------------------------------------------------------------
// SturmSequence

SturmSequence::SturmSequence(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Sturm sequence of the zero polynomial");
  UniPoly a = positive_scaled(p);
  UniPoly b = positive_scaled(p.derivative());
  seq_.push_back(integer_coeffs(a));
  while (!b.is_zero()) {
    seq_.push_back(integer_coeffs(b));
    UniPoly r = -(a % b);
    a = std::move(b);
    b = r.is_zero() ? r : positive_scaled(r);
  }
}

int SturmSequence::variations(const Rational& x) const {
  int count = 0, last = 0;
  for (const auto& c : seq_) {
    int s = sign_at(c, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::variations_at_pos_inf() const {
  int count = 0, last = 0;
  for (const auto& c : seq_) {
    int s = lead_sign(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::variations_at_neg_inf() const {
  int count = 0, last = 0;
  for (const auto& c : seq_) {
    int s = lead_sign(c);
    if ((c.size() - 1) % 2 == 1) s = -s;
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::sign_of_first(const Rational& x) const { return sign_at(seq_.front(), x); }

int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root count of the zero polynomial");
  if (!(lo < hi)) throw Error(ErrorKind::InvalidArgument, "sturm_count needs lo < hi");
  if (p.sign_at(lo) == 0 || p.sign_at(hi) == 0)
    throw Error(ErrorKind::EndpointIsRoot, "interval endpoint is a root; perturb it");
  SturmSequence s(p);
  return s.count_half_open(lo, hi);
}

Rational root_bound(const UniPoly& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeffs()[i] / p.lc())));
  Rational bound = 1 + m;
  Rational pow2 = 1;
  while (pow2 <= bound) pow2 *= 2;
  return pow2;
}

// ---------------------------------------------------------------------------
// RealAlgebraicNumber

RealAlgebraicNumber::RealAlgebraicNumber(const Rational& q)
    : defining_(UniPoly("x", {-q, Rational(1)}).primitive()), lo_(q - 1), hi_(q), rational_(q) {}

RealAlgebraicNumber::RealAlgebraicNumber(Trusted, UniPoly defining, Rational lo, Rational hi,
                                         std::shared_ptr<const SturmSequence> sturm, bool known_irrational)
    : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)), sturm_(std::move(sturm)) {
  settle(known_irrational);
}

RealAlgebraicNumber RealAlgebraicNumber::trusted(UniPoly defining, Rational lo, Rational hi,
                                                 std::shared_ptr<const SturmSequence> sturm, bool known_irrational) {
  return RealAlgebraicNumber(Trusted{}, std::move(defining), std::move(lo), std::move(hi), std::move(sturm),
                             known_irrational);
}

RealAlgebraicNumber::RealAlgebraicNumber(const UniPoly& defining, const Rational& lo, const Rational& hi) {
  if (defining.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "defining polynomial is zero");
  if (!(lo < hi)) throw Error(ErrorKind::InvalidArgument, "isolating interval needs lo < hi");
  UniPoly p = canonical(defining);
  auto sturm = std::make_shared<const SturmSequence>(p);
  if (sturm->count_half_open(lo, hi) != 1)
    throw Error(ErrorKind::InvalidArgument, "interval does not isolate exactly one root of " + defining.to_string());
  *this = RealAlgebraicNumber(Trusted{}, std::move(p), lo, hi, std::move(sturm));
}

void RealAlgebraicNumber::settle(bool known_irrational) {
  // Invariant on entry: exactly one root of defining_ in (lo_, hi_].
  if (defining_.degree() == 1) {
    rational_ = -defining_.coeffs()[0] / defining_.coeffs()[1];
    lo_ = *rational_ - (hi_ - lo_);
    hi_ = *rational_;
    return;
  }
  if (defining_.sign_at(hi_) == 0) {
    rational_ = hi_;
    defining_ = UniPoly(defining_.var(), {-hi_, Rational(1)}).primitive();
    sturm_.reset();
    return;
  }
  if (!sturm_) sturm_ = std::make_shared<const SturmSequence>(defining_);
  // move lo off a neighbouring root
  while (defining_.sign_at(lo_) == 0) {
    Rational mid = (lo_ + hi_) / 2;
    if (sturm_->count_half_open(mid, hi_) == 1) lo_ = mid;
    else hi_ = mid;
    if (defining_.sign_at(hi_) == 0) {
      settle();
      return;
    }
  }
  if (known_irrational) return;
  // Rational roots r = p/q satisfy q | lc. Once the width is below 1/lc^2,
  // such an r is a continued-fraction convergent of the midpoint.
  Integer lc = defining_.lc().get_num();
  Rational limit(Integer(1), lc * lc);
  limit.canonicalize();
  RealAlgebraicNumber work = *this;
  work.rational_.reset();
  while (!work.rational_ && work.hi_ - work.lo_ >= limit) work = work.bisected();
  if (work.rational_) {
    *this = work;
    return;
  }
  Rational x = (work.lo_ + work.hi_) / 2;
  // convergents h/k of x
  Integer h_prev = 1, h = floor(x), k_prev = 0, k = 1;
  Rational frac = x - Rational(h);
  for (;;) {
    Rational cand(h, k);
    cand.canonicalize();
    if (cand > work.lo_ && cand < work.hi_ && defining_.sign_at(cand) == 0) {
      rational_ = cand;
      defining_ = UniPoly(defining_.var(), {-cand, Rational(1)}).primitive();
      hi_ = cand;
      lo_ = cand - (work.hi_ - work.lo_);
      sturm_.reset();
      return;
    }
    if (frac == 0 || k > abs(lc)) break;
    Rational inv = 1 / frac;
    Integer a = floor(inv);
    frac = inv - Rational(a);
    Integer h_next = a * h + h_prev, k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
}

RealAlgebraicNumber RealAlgebraicNumber::root_of(const UniPoly& p, int k) {
  auto roots = isolate_roots(p);
  if (k < 1 || k > static_cast<int>(roots.size()))
    throw Error(ErrorKind::NotFound, "polynomial " + p.to_string() + " has no real root with index " + std::to_string(k));
  return roots[k - 1];
}

const Rational& RealAlgebraicNumber::rational_value() const {
  if (!rational_) throw Error(ErrorKind::InvalidArgument, "algebraic number is irrational");
  return *rational_;
}

RealAlgebraicNumber RealAlgebraicNumber::bisected() const {
  if (rational_) return *this;
  RealAlgebraicNumber out = *this;
  Rational mid = (lo_ + hi_) / 2;
  int s_mid = defining_.sign_at(mid);
  if (s_mid == 0) {
    out.rational_ = mid;
    out.defining_ = UniPoly(defining_.var(), {-mid, Rational(1)}).primitive();
    out.hi_ = mid;
    out.lo_ = mid - (hi_ - lo_) / 2;
    out.sturm_.reset();
    return out;
  }
  if (s_mid == defining_.sign_at(lo_)) out.lo_ = mid;
  else out.hi_ = mid;
  return out;
}

RealAlgebraicNumber RealAlgebraicNumber::refined(const Rational& width) const {
  if (width <= 0) throw Error(ErrorKind::InvalidArgument, "refinement width must be positive");
  if (rational_) {
    RealAlgebraicNumber out = *this;
    out.lo_ = *rational_ - width;
    return out;
  }
  RealAlgebraicNumber out = *this;
  while (!out.rational_ && out.hi_ - out.lo_ > width) out = out.bisected();
  return out;
}

double RealAlgebraicNumber::to_double() const {
  if (rational_) return rational_->get_d();
  auto r = refined(Rational(1, 1) / Rational(Integer(1) << 60));
  return Rational((r.lower_bound() + r.upper_bound()) / 2).get_d();
}

std::string RealAlgebraicNumber::to_decimal(int digits) const {
  if (rational_) return prf::to_decimal(*rational_, digits);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits + 3));
  auto r = refined(Rational(Integer(1), scale));
  return prf::to_decimal((r.lo_ + r.hi_) / 2, digits);
}

int RealAlgebraicNumber::root_index() const {
  if (rational_) return 1;
  if (!sturm_) {
    SturmSequence s(defining_);
    return s.variations_at_neg_inf() - s.variations(hi_);
  }
  return sturm_->variations_at_neg_inf() - sturm_->variations(hi_);
}

std::string RealAlgebraicNumber::to_string() const {
  if (rational_) return prf::to_string(*rational_);
  return "RootOf(" + defining_.to_string() + ", " + std::to_string(root_index()) + ")";
}

namespace {

Integer eval_mod(const std::vector<Integer>& c, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * x + c[i];
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

/// All rational roots of a square-free primitive integer polynomial: simple
/// roots mod a prime not dividing lc, Newton lifting past 2|c0||lc|, then
/// rational reconstruction. nullopt if no usable prime turns up.
std::optional<std::vector<Rational>> rational_roots(const UniPoly& q) {
  std::vector<Integer> c;
  for (const auto& x : q.coeffs()) c.push_back(x.get_num());
  std::vector<Rational> out;
  if (!c.empty() && c[0] == 0) {
    out.push_back(0);
    c.erase(c.begin());
  }
  if (c.size() < 2) return out;
  std::vector<Integer> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<unsigned long>(i));
  const Integer lc = abs(c.back()), c0 = abs(c[0]);
  const Integer bound = 2 * c0 * lc;
  Integer p = 100;
  for (int tries = 0; tries < 40; ++tries) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (lc % p == 0) continue;
    std::vector<Integer> roots;
    bool simple = true;
    for (Integer x = 0; x < p && simple; ++x) {
      if (eval_mod(c, x, p) != 0) continue;
      if (eval_mod(d, x, p) == 0) simple = false;
      roots.push_back(x);
    }
    if (!simple) continue;
    for (const auto& r : roots) {
      Integer m = p, x = r;
      while (m <= bound) {
        m *= m;
        Integer inv = eval_mod(d, x, m);
        mpz_invert(inv.get_mpz_t(), inv.get_mpz_t(), m.get_mpz_t());
        x -= eval_mod(c, x, m) * inv;
        mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
      }
      // a = b*x mod m with |a| <= c0, 0 < b <= lc
      Integer r0 = m, r1 = x, t0 = 0, t1 = 1;
      while (abs(r1) > c0) {
        Integer k = r0 / r1;
        r0 -= k * r1;
        std::swap(r0, r1);
        t0 -= k * t1;
        std::swap(t0, t1);
      }
      if (t1 == 0 || abs(t1) > lc) continue;
      Rational cand(r1, t1);
      cand.canonicalize();
      if (sign_at(c, cand) == 0) out.push_back(cand);
    }
    return out;
  }
  return std::nullopt;
}

}  // namespace

std::vector<RealAlgebraicNumber> isolate_roots(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root isolation of the zero polynomial");
  UniPoly q = canonical(p);
  std::vector<RealAlgebraicNumber> out;
  if (q.degree() <= 0) return out;
  auto sturm = std::make_shared<const SturmSequence>(q);
  const Rational bound = root_bound(q);
  const auto rational = rational_roots(q);
  struct Job {
    Rational lo, hi;
    int count;
  };
  std::vector<Job> stack{{-bound, bound, sturm->count_all()}};
  while (!stack.empty()) {
    Job job = std::move(stack.back());
    stack.pop_back();
    if (job.count == 0) continue;
    if (job.count == 1) {
      if (!rational) {
        out.push_back(RealAlgebraicNumber::trusted(q, job.lo, job.hi, sturm));
        continue;
      }
      auto r = std::find_if(rational->begin(), rational->end(),
                            [&](const Rational& x) { return job.lo < x && x <= job.hi; });
      if (r != rational->end())
        out.push_back(RealAlgebraicNumber::trusted(UniPoly(q.var(), {-*r, Rational(1)}).primitive(), job.lo, job.hi,
                                                   nullptr));
      else
        out.push_back(RealAlgebraicNumber::trusted(q, job.lo, job.hi, sturm, true));
      continue;
    }
    Rational mid = (job.lo + job.hi) / 2;
    int left = sturm->count_half_open(job.lo, mid);
    stack.push_back({mid, job.hi, job.count - left});
    stack.push_back({job.lo, mid, left});
  }
  // jobs are processed left to right already; keep the sort as a guard
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.upper_bound() < b.upper_bound(); });
  return out;
}

RealAlgebraicNumber refine(const RealAlgebraicNumber& a, const Rational& width) { return a.refined(width); }

std::strong_ordering compare(const RealAlgebraicNumber& a0, const RealAlgebraicNumber& b0) {
  if (a0.is_rational() && b0.is_rational()) {
    const int c = cmp(a0.rational_value(), b0.rational_value());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  if (a0.is_rational() || b0.is_rational()) {
    const bool flip = b0.is_rational();
    const Rational& q = flip ? b0.rational_value() : a0.rational_value();
    const RealAlgebraicNumber& x = flip ? a0 : b0;
    // q versus irrational x
    std::strong_ordering r = std::strong_ordering::equal;
    if (q <= x.lo()) r = std::strong_ordering::less;
    else if (q >= x.hi()) r = std::strong_ordering::greater;
    else {
      int sq = x.defining().sign_at(q);
      r = sq == x.defining().sign_at(x.lo()) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (!flip) return r;
    return r == std::strong_ordering::less ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  RealAlgebraicNumber a = a0, b = b0;
  bool equality_checked = false;
  for (;;) {
    if (a.hi() <= b.lo()) return std::strong_ordering::less;
    if (b.hi() <= a.lo()) return std::strong_ordering::greater;
    if (!equality_checked) {
      equality_checked = true;
      UniPoly g = gcd(a.defining(), b.defining());
      if (g.degree() >= 1) {
        Rational lo = std::max(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
        SturmSequence s(g);
        if (s.count_half_open(lo, hi) >= 1) return std::strong_ordering::equal;
      }
    }
    if (a.hi() - a.lo() >= b.hi() - b.lo()) a = a.bisected();
    else b = b.bisected();
    if (a.is_rational() || b.is_rational()) return compare(a, b);
  }
}

namespace {

/// Interval Horner enclosure of p over [lo, hi].
std::pair<Rational, Rational> enclose(const UniPoly& p, const Rational& lo, const Rational& hi) {
  Rational a = 0, b = 0;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c[4] = {a * lo, a * hi, b * lo, b * hi};
    a = *std::min_element(c, c + 4) + p.coeff(k);
    b = *std::max_element(c, c + 4) + p.coeff(k);
  }
  return {a, b};
}

/// Mean-value form p(c) + p'([lo, hi]) * [lo - c, hi - c], intersected with
/// the Horner enclosure; tight where Horner suffers from cancellation.
std::pair<Rational, Rational> enclose_centered(const UniPoly& p, const UniPoly& dp, const Rational& lo,
                                               const Rational& hi) {
  auto [a, b] = enclose(p, lo, hi);
  const Rational c = (lo + hi) / 2, h = (hi - lo) / 2;
  const Rational pc = p.evaluate(c);
  auto [da, db] = enclose(dp, lo, hi);
  const Rational m = std::max(abs(da), abs(db)) * h;
  if (pc - m > a) a = pc - m;
  if (pc + m < b) b = pc + m;
  return {a, b};
}

}  // namespace

int sign_at(const UniPoly& p, const RealAlgebraicNumber& a) {
  if (a.is_rational()) return p.sign_at(a.rational_value());
  if (p.is_zero()) return 0;
  if (p.degree() == 0) return sgn(p.lc());
  // nonzero values usually separate from 0 after a little refinement; the
  // exact test below is for the rest
  const UniPoly dp = p.derivative();
  RealAlgebraicNumber r = a;
  for (int round = 0; round < 16; ++round) {
    if (r.is_rational()) return p.sign_at(r.rational_value());
    auto [lo, hi] = enclose_centered(p, dp, r.lo(), r.hi());
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    r = r.refined((r.hi() - r.lo()) / 16);
  }
  UniPoly g = gcd(p.renamed(a.defining().var()), a.defining());
  if (g.degree() >= 1 && g.sign_at(a.lo()) * g.sign_at(a.hi()) < 0) return 0;
  // p(a) != 0, so the enclosure eventually excludes 0
  for (;;) {
    if (r.is_rational()) return p.sign_at(r.rational_value());
    auto [lo, hi] = enclose_centered(p, dp, r.lo(), r.hi());
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    r = r.refined((r.hi() - r.lo()) / 16);
  }
}

Rational rational_between(const RealAlgebraicNumber& a0, const RealAlgebraicNumber& b0) {
  if (compare(a0, b0) != std::strong_ordering::less)
    throw Error(ErrorKind::InvalidArgument, "rational_between needs a < b");
  RealAlgebraicNumber a = a0, b = b0;
  while (!(a.upper_bound() < b.lower_bound())) {
    const Rational wa = a.is_rational() ? Rational(0) : a.hi() - a.lo();
    const Rational wb = b.is_rational() ? Rational(0) : b.hi() - b.lo();
    if (wa >= wb) a = a.bisected();
    else b = b.bisected();
  }
  return (a.upper_bound() + b.lower_bound()) / 2;
}

// ---------------------------------------------------------------------------
// Radical display

namespace {

/// n = s^2 * k with k square-free over the small primes; returns {s, k}.
/// Best effort: large prime squares beyond the trial bound stay inside k.
std::pair<Integer, Integer> split_square(const Integer& n) {
  Integer s = 1, k = n;
  Integer root;
  if (mpz_perfect_square_p(k.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), k.get_mpz_t());
    return {root, Integer(1)};
  }
  for (unsigned long p = 2; p < 20000; ++p) {
    const unsigned long pp = p * p;
    if (pp > k) break;
    while (mpz_divisible_ui_p(k.get_mpz_t(), pp)) {
      mpz_divexact_ui(k.get_mpz_t(), k.get_mpz_t(), pp);
      s *= p;
    }
  }
  if (k > 1 && mpz_perfect_square_p(k.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), k.get_mpz_t());
    s *= root;
    k = 1;
  }
  return {s, k};
}

/// sqrt(D) for rational D > 0 as coeff * sqrt(k), k square-free integer.
std::pair<Rational, Integer> sqrt_rational(const Rational& d) {
  // sqrt(n/m) = sqrt(n*m)/m
  Integer nm = d.get_num() * d.get_den();
  auto [s, k] = split_square(nm);
  Rational coeff(s, d.get_den());
  coeff.canonicalize();
  return {coeff, k};
}

std::string radical_term(const Rational& coeff, const Integer& k) {
  // |coeff| * sqrt(k), rendered as "sqrt(k)", "3*sqrt(k)", "sqrt(k)/2", "3*sqrt(k)/2"
  Rational c = abs(coeff);
  std::string s;
  if (c.get_num() != 1) s = c.get_num().get_str() + "*";
  s += "sqrt(" + k.get_str() + ")";
  if (c.get_den() != 1) s += "/" + c.get_den().get_str();
  return s;
}

/// r + s*sqrt(k) rendered; s may be zero.
std::string surd(const Rational& r, const Rational& s, const Integer& k) {
  if (s == 0 || k == 1) return to_string(r + s * Rational(k == 1 ? Integer(1) : Integer(0)));
  std::string out;
  if (r != 0) out = to_string(r);
  if (s < 0) out += "-";
  else if (!out.empty()) out += "+";
  out += radical_term(s, k);
  return out;
}

}  // namespace

std::optional<std::string> radical_form(const RealAlgebraicNumber& a) {
  if (a.is_rational()) return to_string(a.rational_value());
  const UniPoly& p = a.defining();
  const std::string var = p.var();
  if (p.degree() == 2) {
    const Rational& c2 = p.coeffs()[2];
    const Rational& c1 = p.coeffs()[1];
    const Rational& c0 = p.coeffs()[0];
    Rational disc = c1 * c1 - 4 * c2 * c0;
    auto [coeff, k] = sqrt_rational(disc);
    Rational r = -c1 / (2 * c2);
    Rational s = coeff / (2 * c2);
    // the larger root takes the + branch (c2 > 0 for canonical polynomials)
    int side = sign_at(UniPoly(var, {c1, 2 * c2}), a);
    return surd(r, side > 0 ? s : Rational(-s), k);
  }
  if (p.degree() == 4 && p.is_even()) {
    const Rational& c4 = p.coeffs()[4];
    const Rational& c2 = p.coeffs()[2];
    const Rational& c0 = p.coeffs()[0];
    Rational disc = c2 * c2 - 4 * c4 * c0;
    if (disc <= 0) return std::nullopt;
    auto [coeff, k] = sqrt_rational(disc);
    Rational r = -c2 / (2 * c4);
    Rational s = coeff / (2 * c4);
    // which branch of y = x^2: compare x^2 with the midpoint r
    int branch = sign_at(UniPoly(var, {-r, Rational(0), Rational(1)}), a);
    if (branch < 0) s = -s;
    std::string inner;
    if (k == 1) {
      Rational y = r + s;
      auto [yc, yk] = sqrt_rational(y);
      inner = yk == 1 ? to_string(yc) : radical_term(yc, yk);
    } else {
      // y = content * (r' + s' sqrt(k)) with coprime integers r', s'
      Integer g, l;
      mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), s.get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), r.get_den_mpz_t(), s.get_den_mpz_t());
      Rational content(g, l);
      content.canonicalize();
      Rational rr = r / content, ss = s / content;
      std::string body = surd(rr, ss, k);
      if (content == 1) inner = "sqrt(" + body + ")";
      else inner = "sqrt(" + to_string(content) + "*(" + body + "))";
    }
    if (sign_at(UniPoly(var, {Rational(0), Rational(1)}), a) < 0) return "-" + inner;
    return inner;
  }
  return std::nullopt;
}

std::string display(const RealAlgebraicNumber& a) {
  if (auto r = radical_form(a)) return *r;
  return a.to_string();
}

}  // namespace prf
