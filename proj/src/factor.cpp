#include "tdr/factor.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "tdr/error.hpp"

namespace tdr {

namespace {

using IntPoly = std::vector<Integer>;  // lowest degree first
using FpPoly = std::vector<std::int64_t>;

// ---- arithmetic over F_p -------------------------------------------------

std::int64_t modp(std::int64_t x, std::int64_t p) {
  x %= p;
  return x < 0 ? x + p : x;
}

std::int64_t powp(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  a = modp(a, p);
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

std::int64_t invp(std::int64_t a, std::int64_t p) { return powp(a, p - 2, p); }

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly mulp(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

FpPoly subp(FpPoly a, const FpPoly& b, std::int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = modp(a[i] - b[i], p);
  trim(a);
  return a;
}

FpPoly addp(FpPoly a, const FpPoly& b, std::int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
  trim(a);
  return a;
}

std::pair<FpPoly, FpPoly> divmodp(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  if (deg(a) < deg(b)) return {{}, a};
  FpPoly r = a;
  FpPoly q(a.size() - b.size() + 1, 0);
  const std::int64_t li = invp(b.back(), p);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::int64_t c = r[k + b.size() - 1] * li % p;
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = modp(r[k + j] - c * b[j], p);
  }
  trim(q);
  trim(r);
  return {q, r};
}

FpPoly monicp(FpPoly a, std::int64_t p) {
  if (a.empty()) return a;
  const std::int64_t li = invp(a.back(), p);
  for (auto& c : a) c = c * li % p;
  return a;
}

FpPoly gcdp(FpPoly a, FpPoly b, std::int64_t p) {
  while (!b.empty()) {
    FpPoly r = divmodp(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monicp(a, p);
}

// s a + t b = 1 for coprime a, b.
std::pair<FpPoly, FpPoly> extgcdp(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  FpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmodp(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly s2 = subp(s0, mulp(q, s1, p), p);
    FpPoly t2 = subp(t0, mulp(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const std::int64_t li = invp(r0.back(), p);
  for (auto& c : s0) c = c * li % p;
  for (auto& c : t0) c = c * li % p;
  return {s0, t0};
}

FpPoly powmodp(FpPoly base, std::int64_t e, const FpPoly& m, std::int64_t p) {
  FpPoly r{1};
  base = divmodp(base, m, p).second;
  while (e > 0) {
    if (e & 1) r = divmodp(mulp(r, base, p), m, p).second;
    base = divmodp(mulp(base, base, p), m, p).second;
    e >>= 1;
  }
  return r;
}

FpPoly derivp(const FpPoly& a, std::int64_t p) {
  FpPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<std::int64_t>(i) % p);
  trim(d);
  return d;
}

FpPoly reduce(const IntPoly& f, std::int64_t p) {
  FpPoly out;
  for (const auto& c : f) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
    out.push_back(r.get_si());
  }
  trim(out);
  return out;
}

// Basis of {v : v^p = v mod f} as polynomials; the first one is 1.
std::vector<FpPoly> berlekamp_basis(const FpPoly& f, std::int64_t p) {
  const std::size_t n = static_cast<std::size_t>(deg(f));
  // Rows of Q - I: x^{ip} mod f minus x^i.
  std::vector<std::vector<std::int64_t>> q(n, std::vector<std::int64_t>(n, 0));
  const FpPoly xp = powmodp({0, 1}, p, f, p);
  FpPoly cur{1};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cur.size(); ++j) q[i][j] = cur[j];
    q[i][i] = modp(q[i][i] - 1, p);
    cur = divmodp(mulp(cur, xp, p), f, p).second;
  }
  // Left nullspace: eliminate on the transpose.
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = q[j][i];
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[r]);
    const std::int64_t li = invp(a[r][c], p);
    for (auto& x : a[r]) x = x * li % p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::int64_t fac = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] = modp(a[i][j] - fac * a[r][j], p);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<FpPoly> basis;
  for (std::size_t fcol = 0; fcol < n; ++fcol) {
    if (is_pivot[fcol]) continue;
    FpPoly v(n, 0);
    v[fcol] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = modp(-a[i][fcol], p);
    trim(v);
    basis.push_back(std::move(v));
  }
  // Put the constant first so the splitting loop can skip it.
  std::stable_sort(basis.begin(), basis.end(),
                   [](const FpPoly& x, const FpPoly& y) { return deg(x) < deg(y); });
  return basis;
}

std::vector<FpPoly> berlekamp(const FpPoly& f, std::int64_t p) {
  const auto basis = berlekamp_basis(f, p);
  std::vector<FpPoly> factors{f};
  for (std::size_t k = 1; k < basis.size() && factors.size() < basis.size(); ++k) {
    std::vector<FpPoly> next;
    for (const auto& u : factors) {
      if (deg(u) <= 1) {
        next.push_back(u);
        continue;
      }
      FpPoly rest = u;
      for (std::int64_t s = 0; s < p && deg(rest) > 0; ++s) {
        FpPoly g = gcdp(rest, subp(basis[k], FpPoly{s}, p), p);
        if (deg(g) <= 0) continue;
        rest = divmodp(rest, g, p).first;
        next.push_back(std::move(g));
      }
    }
    factors = std::move(next);
  }
  for (auto& u : factors) u = monicp(u, p);
  return factors;
}

// ---- arithmetic mod M = p^k -------------------------------------------------

IntPoly reduce_mod(IntPoly a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

IntPoly mul_int(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

IntPoly lift(const FpPoly& a) { return IntPoly(a.begin(), a.end()); }

// f = G H mod p^k with G monic, lc(H) = lc(f), from f = g0 h0 mod p.
std::pair<IntPoly, IntPoly> hensel_lift(const IntPoly& f, const FpPoly& g0, const FpPoly& h0,
                                        std::int64_t p, unsigned k, const Integer& m) {
  const auto [s, t] = extgcdp(g0, h0, p);
  IntPoly g = lift(g0);
  IntPoly h = lift(h0);
  h.back() = f.back();
  Integer q = p;
  for (unsigned j = 1; j < k; ++j) {
    IntPoly gh = mul_int(g, h);
    IntPoly e(f.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = f[i] - (i < gh.size() ? gh[i] : Integer(0));
    e = reduce_mod(std::move(e), m);
    for (auto& c : e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), q.get_mpz_t());
    const FpPoly ep = reduce(e, p);
    const auto [quo, dg] = divmodp(mulp(t, ep, p), g0, p);
    const FpPoly dh = addp(mulp(s, ep, p), mulp(quo, h0, p), p);
    for (std::size_t i = 0; i < dg.size(); ++i) g[i] += q * dg[i];
    for (std::size_t i = 0; i < dh.size(); ++i) h[i] += q * dh[i];
    g = reduce_mod(std::move(g), m);
    h = reduce_mod(std::move(h), m);
    q *= p;
  }
  return {g, h};
}

FpPoly product(std::span<const FpPoly> fs, std::int64_t p) {
  FpPoly r{1};
  for (const auto& u : fs) r = mulp(r, u, p);
  return r;
}

void lift_all(const IntPoly& f, std::span<const FpPoly> local, std::int64_t p, unsigned k,
              const Integer& m, std::vector<IntPoly>& out) {
  if (local.size() == 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), m.get_mpz_t());
    IntPoly g = f;
    for (auto& c : g) c *= inv;
    out.push_back(reduce_mod(std::move(g), m));
    return;
  }
  const std::size_t half = local.size() / 2;
  const FpPoly g0 = product(local.subspan(0, half), p);
  FpPoly h0 = product(local.subspan(half), p);
  const FpPoly lc = reduce(IntPoly{f.back()}, p);
  h0 = mulp(h0, lc, p);
  auto [g, h] = hensel_lift(f, g0, h0, p, k, m);
  lift_all(g, local.subspan(0, half), p, k, m, out);
  lift_all(h, local.subspan(half), p, k, m, out);
}

// ---- integer polynomials ---------------------------------------------------

Integer content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly primitive(IntPoly f) {
  const Integer c = content(f);
  if (c == 0) return f;
  for (auto& x : f) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  if (f.back() < 0)
    for (auto& x : f) x = -x;
  return f;
}

IntPoly to_int(const RatPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  for (const auto& c : p.coeffs()) out.push_back(Integer(c * l));
  return primitive(std::move(out));
}

RatPoly to_rat(const IntPoly& f) {
  std::vector<Rational> c;
  for (const auto& x : f) c.emplace_back(x);
  return RatPoly(std::move(c)).monic();
}

IntPoly symmetric(IntPoly f, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : f) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

// Exact quotient if g divides f over Z, else empty.
std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& g) {
  if (f.size() < g.size()) return std::nullopt;
  IntPoly r = f;
  IntPoly q(f.size() - g.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer& top = r[k + g.size() - 1];
    if (!mpz_divisible_p(top.get_mpz_t(), g.back().get_mpz_t())) return std::nullopt;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), g.back().get_mpz_t());
    for (std::size_t j = 0; j < g.size(); ++j) r[k + j] -= q[k] * g[j];
  }
  for (const auto& c : r)
    if (c != 0) return std::nullopt;
  return q;
}

constexpr std::array<std::int64_t, 24> kPrimes = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                  43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
constexpr int kPrimeTrials = 5;

// Irreducible factors (primitive, positive lc) of a square-free primitive f.
std::vector<IntPoly> factor_squarefree(IntPoly f) {
  std::vector<IntPoly> out;
  if (f.size() <= 2) {
    out.push_back(std::move(f));
    return out;
  }
  if (f[0] == 0) {
    out.push_back(IntPoly{0, 1});
    f.erase(f.begin());
    if (f.size() <= 2) {
      out.push_back(std::move(f));
      return out;
    }
  }

  std::int64_t best_p = 0;
  std::vector<FpPoly> best;
  int trials = 0;
  for (std::int64_t p : kPrimes) {
    if (trials == kPrimeTrials) break;
    const FpPoly fp = reduce(f, p);
    if (deg(fp) != static_cast<int>(f.size()) - 1) continue;
    if (deg(gcdp(fp, derivp(fp, p), p)) != 0) continue;
    ++trials;
    auto local = berlekamp(monicp(fp, p), p);
    if (best_p == 0 || local.size() < best.size()) {
      best_p = p;
      best = std::move(local);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw Error(ErrorKind::Unsupported, "no suitable prime for factorization");
  if (best.size() == 1) {
    out.push_back(std::move(f));
    return out;
  }

  // Coefficient bound for lc(f) times any factor.
  const std::size_t n = f.size() - 1;
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer bound = 2 * abs(f.back()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  unsigned k = 1;
  Integer m = best_p;
  while (m <= bound) {
    m *= best_p;
    ++k;
  }

  std::vector<IntPoly> lifted;
  lift_all(reduce_mod(f, m), best, best_p, k, m, lifted);

  // Recombination over subsets of increasing size.
  std::vector<IntPoly> remaining = std::move(lifted);
  for (std::size_t size = 1; 2 * size <= remaining.size();) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      IntPoly g{f.back()};
      for (auto i : idx) g = reduce_mod(mul_int(g, remaining[i]), m);
      g = primitive(symmetric(std::move(g), m));
      if (auto q = divide_exact(f, g)) {
        out.push_back(std::move(g));
        f = std::move(*q);
        for (std::size_t i = size; i-- > 0;) remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(idx[i]));
        found = true;
        break;
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == remaining.size() - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  out.push_back(primitive(std::move(f)));
  return out;
}

}  // namespace

std::vector<PolyFactor> squarefree_decomposition(const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree_decomposition");
  std::vector<PolyFactor> out;
  if (p.degree() == 0) return out;
  const RatPoly f = p.monic();
  const RatPoly a0 = gcd(f, f.derivative());
  RatPoly b = f.divmod(a0).first;
  RatPoly c = f.derivative().divmod(a0).first;
  RatPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const RatPoly a = gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = b.divmod(a).first;
    c = d.divmod(a).first;
    d = c - b.derivative();
  }
  return out;
}

Factorization factor_poly(const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "factor_poly");
  Factorization result{p.leading(), {}};
  for (const auto& part : squarefree_decomposition(p)) {
    for (const auto& g : factor_squarefree(to_int(part.factor))) {
      result.factors.push_back({to_rat(g), part.multiplicity});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.factor != b.factor) return a.factor < b.factor;
    return a.multiplicity < b.multiplicity;
  });
  return result;
}

bool is_irreducible(const RatPoly& p) {
  if (p.degree() < 1) return false;
  const auto f = factor_poly(p);
  return f.factors.size() == 1 && f.factors[0].multiplicity == 1;
}

}  // namespace tdr
