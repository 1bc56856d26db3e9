#include "cifano/roots.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cifano {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q == 0) {
      fs.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  std::vector<std::uint64_t> fs = prime_factors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint64_t q : fs) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: none found (p not prime?)");
}

// --- dense univariate arithmetic over GF(p), ascending coefficients ---

using UPoly = std::vector<std::uint64_t>;

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly poly_rem(UPoly a, const UPoly& b, std::uint64_t p) {
  trim(a);
  std::uint64_t lead_inv = powmod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    std::uint64_t factor = mulmod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint64_t sub = mulmod(factor, b[i], p);
      a[shift + i] = (a[shift + i] + p - sub) % p;
    }
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

UPoly poly_gcd(UPoly a, UPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint64_t inv = powmod(a.back(), p - 2, p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

UPoly poly_mulmod(const UPoly& a, const UPoly& b, const UPoly& mod, std::uint64_t p) {
  UPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  return poly_rem(std::move(prod), mod, p);
}

// x^e mod f
UPoly poly_xpow(std::uint64_t e, const UPoly& mod, std::uint64_t p) {
  UPoly result{1};
  UPoly base{0, 1};
  base = poly_rem(base, mod, p);
  if (base.empty()) return {};
  while (e) {
    if (e & 1) {
      result = poly_mulmod(result, base, mod, p);
      if (result.empty()) return {};
    }
    base = poly_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return result;
}

// (x + c)^e mod f
UPoly poly_shiftpow(std::uint64_t c, std::uint64_t e, const UPoly& mod, std::uint64_t p) {
  UPoly result{1};
  UPoly base{c, 1};
  base = poly_rem(base, mod, p);
  if (base.empty()) return {};
  while (e) {
    if (e & 1) {
      result = poly_mulmod(result, base, mod, p);
      if (result.empty()) return {};
    }
    base = poly_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return result;
}

// f is monic and splits into distinct linear factors; peel its roots off.
void split_linear_factors(const UPoly& f, std::uint64_t p, SeededRng& rng,
                          std::vector<std::uint64_t>& out) {
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    // x + f[0] = 0  =>  root -f[0]
    out.push_back((p - f[0]) % p);
    return;
  }
  for (;;) {
    std::uint64_t c = rng.below(p);
    UPoly w = poly_shiftpow(c, (p - 1) / 2, f, p);
    if (w.empty()) {
      // x = -c is itself a root; divide it out via gcd with (x + c).
      UPoly lin{c, 1};
      UPoly g = poly_gcd(f, lin, p);
      (void)g;
      out.push_back((p - c) % p);
      UPoly rest = f;
      // synthetic division by (x + c)
      UPoly quot(rest.size() - 1, 0);
      std::uint64_t carry = 0;
      for (std::size_t i = rest.size(); i-- > 1;) {
        std::uint64_t cur = (rest[i] + carry) % p;
        quot[i - 1] = cur;
        carry = mulmod(cur, (p - c) % p, p);
      }
      split_linear_factors(quot, p, rng, out);
      return;
    }
    if (!w.empty()) w[0] = (w[0] + p - 1) % p;  // w - 1
    trim(w);
    UPoly g = poly_gcd(f, w, p);
    if (g.size() > 1 && g.size() < f.size()) {
      // f = g * h with both proper; recurse on both halves.
      UPoly h = f;
      // divide f by g
      UPoly quot(f.size() - g.size() + 1, 0);
      UPoly rem = f;
      std::uint64_t lead_inv = powmod(g.back(), p - 2, p);
      while (rem.size() >= g.size()) {
        std::uint64_t factor = mulmod(rem.back(), lead_inv, p);
        std::size_t shift = rem.size() - g.size();
        quot[shift] = factor;
        for (std::size_t i = 0; i < g.size(); ++i) {
          std::uint64_t sub = mulmod(factor, g[i], p);
          rem[shift + i] = (rem[shift + i] + p - sub) % p;
        }
        trim(rem);
        if (rem.empty()) break;
      }
      trim(quot);
      split_linear_factors(g, p, rng, out);
      split_linear_factors(quot, p, rng, out);
      return;
    }
    // unlucky c; try again
  }
}

}  // namespace

std::vector<FieldScalar> nth_roots(std::uint64_t p, int n, int sign) {
  if (!is_prime_u64(p)) throw std::invalid_argument("nth_roots: modulus is not prime");
  if (n < 1) throw std::invalid_argument("nth_roots: N must be positive");
  if (sign != 1 && sign != -1) throw std::invalid_argument("nth_roots: sign must be +1 or -1");
  std::uint64_t order = 2ull * static_cast<std::uint64_t>(n);
  if ((p - 1) % order != 0) {
    throw std::invalid_argument("nth_roots: requires p = 1 (mod " + std::to_string(order) +
                                "), got p = " + std::to_string(p));
  }
  std::uint64_t g = primitive_root(p);
  std::uint64_t omega = powmod(g, (p - 1) / static_cast<std::uint64_t>(n), p);
  std::uint64_t base = 1;
  if (sign == -1) base = powmod(g, (p - 1) / order, p);
  std::vector<std::uint64_t> raw;
  std::uint64_t cur = base;
  for (int k = 0; k < n; ++k) {
    raw.push_back(cur);
    cur = mulmod(cur, omega, p);
  }
  std::sort(raw.begin(), raw.end());
  Field f = Field::prime(p);
  std::vector<FieldScalar> out;
  out.reserve(raw.size());
  for (std::uint64_t r : raw) out.push_back(f.integer(static_cast<long long>(r)));
  return out;
}

std::uint64_t smallest_admissible_prime(const std::vector<int>& root_orders,
                                        const std::vector<int>& avoid_divisors,
                                        std::uint64_t lower_bound) {
  std::uint64_t l = 2;
  for (int n : root_orders) {
    if (n < 1) throw std::invalid_argument("smallest_admissible_prime: bad root order");
    l = std::lcm(l, 2ull * static_cast<std::uint64_t>(n));
    if (l > (1ull << 40)) throw std::invalid_argument("smallest_admissible_prime: congruence too large");
  }
  std::uint64_t k = lower_bound / l + 1;
  for (;; ++k) {
    std::uint64_t p = l * k + 1;
    if (p <= lower_bound) continue;
    if (!is_prime_u64(p)) continue;
    bool ok = true;
    for (int d : avoid_divisors) {
      if (d > 0 && static_cast<std::uint64_t>(d) % p == 0) ok = false;
    }
    if (ok) return p;
  }
}

Field field_with_roots(const std::vector<int>& ds) {
  std::vector<int> avoid;
  for (int d : ds) {
    avoid.push_back(d);
    if (d > 1) avoid.push_back(d - 1);
  }
  return Field::prime(smallest_admissible_prime(ds, avoid));
}

std::vector<FieldScalar> univariate_distinct_roots(const std::vector<FieldScalar>& coeffs,
                                                   SeededRng& rng) {
  if (coeffs.empty()) throw std::invalid_argument("univariate_distinct_roots: empty polynomial");
  const Field& field = coeffs.front().field();
  if (field.is_rationals()) {
    throw std::invalid_argument("univariate_distinct_roots: requires a prime field");
  }
  std::uint64_t p = field.characteristic();
  UPoly f;
  f.reserve(coeffs.size());
  for (const auto& c : coeffs) f.push_back(c.residue());
  trim(f);
  if (f.empty()) throw std::invalid_argument("univariate_distinct_roots: zero polynomial");
  std::vector<std::uint64_t> roots;
  if (f.size() > 1) {
    std::uint64_t lead_inv = powmod(f.back(), p - 2, p);
    for (auto& c : f) c = mulmod(c, lead_inv, p);
    // gcd(f, x^p - x) collects exactly the distinct rational roots.
    UPoly xp = poly_xpow(p, f, p);
    UPoly xpmx = xp;
    if (xpmx.size() < 2) xpmx.resize(2, 0);
    xpmx[1] = (xpmx[1] + p - 1) % p;
    trim(xpmx);
    UPoly g = xpmx.empty() ? f : poly_gcd(f, xpmx, p);
    split_linear_factors(g, p, rng, roots);
  }
  std::sort(roots.begin(), roots.end());
  std::vector<FieldScalar> out;
  out.reserve(roots.size());
  for (std::uint64_t r : roots) out.push_back(field.integer(static_cast<long long>(r)));
  return out;
}

BinaryFormRoots binary_form_roots(const MultiPoly& form, SeededRng& rng) {
  if (form.num_vars() != 2) throw std::invalid_argument("binary_form_roots: not a binary form");
  if (form.is_zero()) throw std::invalid_argument("binary_form_roots: zero form");
  const Field& field = form.field();
  if (field.is_rationals()) throw std::invalid_argument("binary_form_roots: requires a prime field");
  int d = form.degree();
  // Dehomogenize at z0 = 1: u(t) with t = z1. The root at infinity (0:1)
  // has multiplicity d - deg(u).
  std::vector<FieldScalar> u(static_cast<std::size_t>(d) + 1, field.zero());
  for (const auto& [e, c] : form.terms()) u[e[1]] = c;
  int infinity_mult = 0;
  for (int k = d; k >= 0 && u[k].is_zero(); --k) ++infinity_mult;

  BinaryFormRoots out;
  std::vector<FieldScalar> finite_part(u.begin(), u.begin() + (d - infinity_mult) + 1);
  if (finite_part.size() > 1) {
    for (const auto& r : univariate_distinct_roots(finite_part, rng)) {
      out.points.push_back({field.one(), r});
    }
  }
  if (infinity_mult > 0) out.points.push_back({field.zero(), field.one()});

  // Squarefree over the closure: no multiple root at infinity and
  // gcd(u, u') constant for the finite part.
  bool squarefree = infinity_mult < 2;
  if (squarefree && finite_part.size() > 1) {
    std::uint64_t p = field.characteristic();
    UPoly f;
    for (const auto& c : finite_part) f.push_back(c.residue());
    UPoly fd;
    for (std::size_t i = 1; i < f.size(); ++i) fd.push_back(mulmod(f[i], i % p, p));
    trim(fd);
    if (fd.empty()) {
      squarefree = f.size() <= 1;
    } else {
      UPoly g = poly_gcd(f, fd, p);
      squarefree = g.size() <= 1;
    }
  }
  out.squarefree = squarefree;
  return out;
}

}  // namespace cifano
