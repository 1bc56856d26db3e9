#include "cifano/fano.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cifano/roots.hpp"

namespace cifano {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

/// Dense coefficients of a binary form, index = exponent of the second
/// variable; length degree+1 (a zero form yields all zeros).
std::vector<FieldScalar> binary_coeffs(const MultiPoly& b, int degree) {
  std::vector<FieldScalar> c(static_cast<std::size_t>(degree) + 1, b.field().zero());
  for (const auto& [e, v] : b.terms()) c[static_cast<std::size_t>(e[1])] = v;
  return c;
}

MultiPoly embed_vars(const MultiPoly& p, int total_vars, int offset) {
  MultiPoly out(p.field(), total_vars);
  for (const auto& [e, c] : p.terms()) {
    Exponents ne(total_vars, 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[offset + static_cast<int>(i)] = e[i];
    out.add_term(ne, c);
  }
  return out;
}

/// Exact emptiness certificate for the common zero locus of forms of equal
/// degree e in v variables: with no common zero over the closure, the ideal
/// contains every form of degree v(e-1)+1, so the multiplication map from
/// degree v(e-1)+1-e is surjective; with a common zero it never is.
bool forms_have_no_common_zero(const std::vector<MultiPoly>& forms, int vars, int e) {
  if (e == 0) {
    for (const auto& f : forms) {
      if (!f.is_zero()) return true;
    }
    return false;
  }
  int t = vars * (e - 1) + 1;
  std::vector<Exponents> domain = monomial_basis(vars, t - e);
  std::vector<Exponents> codomain = monomial_basis(vars, t);
  std::map<Exponents, std::size_t, GrevlexGreater> row_of;
  for (std::size_t r = 0; r < codomain.size(); ++r) row_of[codomain[r]] = r;
  const Field& field = forms.front().field();
  ExactMatrix m(field, codomain.size(), forms.size() * domain.size());
  std::size_t col = 0;
  for (const auto& f : forms) {
    for (const auto& mu : domain) {
      for (const auto& [e_f, c] : f.terms()) {
        Exponents prod(vars);
        for (int i = 0; i < vars; ++i) prod[i] = e_f[i] + mu[i];
        m.at(row_of.at(prod), col) = c;
      }
      ++col;
    }
  }
  return m.rank() == codomain.size();
}

/// Kernel dimension of (a_i) -> sum a_i g_i from (deg m+1 binary forms)^r
/// to binary forms of degree m+d; the g_i have degree d-1.
long long twisted_relation_dim(const std::vector<std::vector<FieldScalar>>& g_coeffs, int d,
                               int m, const Field& field) {
  if (m < -1) return 0;
  std::size_t r = g_coeffs.size();
  std::size_t dom_each = static_cast<std::size_t>(m) + 2;
  std::size_t codom = static_cast<std::size_t>(m + d) + 1;
  ExactMatrix mat(field, codom, r * dom_each);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t b = 0; b < dom_each; ++b) {
      // column: g_i * s^{m+1-b} t^{b}
      for (std::size_t k = 0; k < g_coeffs[i].size(); ++k) {
        mat.at(k + b, i * dom_each + b) = g_coeffs[i][k];
      }
    }
  }
  return static_cast<long long>(r * dom_each) - static_cast<long long>(mat.rank());
}

std::vector<std::vector<std::pair<int, int>>> pairings_of_six() {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<int> items{0, 1, 2, 3, 4, 5};
  std::vector<std::pair<int, int>> cur;
  struct Rec {
    void operator()(std::vector<int>& rest, std::vector<std::pair<int, int>>& cur,
                    std::vector<std::vector<std::pair<int, int>>>& out) {
      if (rest.empty()) {
        out.push_back(cur);
        return;
      }
      int a = rest.front();
      for (std::size_t k = 1; k < rest.size(); ++k) {
        int b = rest[k];
        std::vector<int> next;
        for (std::size_t j = 1; j < rest.size(); ++j) {
          if (j != k) next.push_back(rest[j]);
        }
        cur.push_back({a, b});
        (*this)(next, cur, out);
        cur.pop_back();
      }
    }
  } rec;
  rec(items, cur, out);
  return out;
}

MultiPoly power_term(const Field& field, int vars, int var, int d, long long coeff) {
  Exponents e(vars, 0);
  e[var] = d;
  return MultiPoly::monomial(field, e, field.integer(coeff));
}

MultiPoly random_form(const Field& field, int vars, int degree, SeededRng& rng) {
  MultiPoly g(field, vars);
  for (const auto& e : monomial_basis(vars, degree)) g.add_term(e, rng.uniform_scalar(field));
  if (g.is_zero()) {
    Exponents e(vars, 0);
    e[0] = degree;
    g.add_term(e, field.one());
  }
  return g;
}

}  // namespace

int SplittingType::degree() const {
  int s = 0;
  for (int a : twists) s += a;
  return s;
}

long long SplittingType::h0() const {
  long long s = 0;
  for (int a : twists) s += std::max(0, a + 1);
  return s;
}

bool contains_subspace(const MultiPoly& f, const LinearSubspace& subspace) {
  return restrict_to_subspace(f, subspace).is_zero();
}

MultiPoly fermat_signed_surface(const Field& field, int d) {
  MultiPoly f = power_term(field, 4, 0, d, 1);
  f += power_term(field, 4, 1, d, -1);
  f += power_term(field, 4, 2, d, 1);
  f += power_term(field, 4, 3, d, -1);
  return f;
}

MultiPoly fermat_signed_threefold(const Field& field, int d, const MultiPoly& g) {
  if (g.num_vars() != 5 || g.degree() != d - 1) {
    throw std::invalid_argument("fermat_signed_threefold: g must have 5 variables and degree d-1");
  }
  MultiPoly f = power_term(field, 5, 0, d, 1);
  f += power_term(field, 5, 1, d, -1);
  f += power_term(field, 5, 2, d, 1);
  f += power_term(field, 5, 3, d, -1);
  Exponents z4(5, 0);
  z4[4] = 1;
  f += MultiPoly::monomial(field, z4, field.one()) * g;
  return f;
}

MultiPoly fermat_p5(const Field& field, int d) {
  MultiPoly f = power_term(field, 6, 0, d, 1);
  for (int i = 1; i < 6; ++i) f += power_term(field, 6, i, d, 1);
  return f;
}

SplittingType normal_bundle_splitting(const MultiPoly& f, const LinearSubspace& line) {
  if (line.sub_dim() != 1) throw std::invalid_argument("normal_bundle_splitting: not a line");
  int n = line.ambient_dim();
  if (f.num_vars() != n + 1) throw std::invalid_argument("normal_bundle_splitting: dimension mismatch");
  if (!contains_subspace(f, line)) {
    throw std::invalid_argument("normal_bundle_splitting: line is not contained in the hypersurface");
  }
  int d = f.degree();
  if (d < 1) throw std::invalid_argument("normal_bundle_splitting: zero hypersurface");
  const Field& field = f.field();

  // Move the line to {u2 = ... = un = 0} and take the derivative forms
  // along the completing directions, restricted back to the line.
  ExactMatrix basis = complete_to_basis(line);
  MultiPoly ft = f.compose_linear(basis);
  std::vector<MultiPoly> g;
  std::vector<std::vector<FieldScalar>> gc;
  for (int i = 2; i <= n; ++i) {
    MultiPoly gi = ft.derivative(i).restrict_to_first_vars(2);
    gc.push_back(binary_coeffs(gi, d - 1));
    g.push_back(std::move(gi));
  }
  if (!forms_have_no_common_zero(g, 2, d - 1)) {
    throw SingularAlongSubspaceError(
        "normal_bundle_splitting: hypersurface is singular along the line");
  }

  // h(m) = h^0(N(m)); the increment h(m) - h(m-1) counts summands with
  // a_i >= -m, which recovers the multiset over the scan window.
  std::vector<long long> h(static_cast<std::size_t>(d) + 2, 0);  // h[m+1] for m = -1..d
  for (int m = -1; m <= d; ++m) {
    h[static_cast<std::size_t>(m + 1)] = twisted_relation_dim(gc, d, m, field);
  }
  SplittingType split;
  long long prev = 0;
  std::vector<long long> count_ge;  // count_ge[m+1] = #{a_i >= -m}
  for (int m = -1; m <= d; ++m) {
    count_ge.push_back(h[static_cast<std::size_t>(m + 1)] - prev);
    prev = h[static_cast<std::size_t>(m + 1)];
  }
  for (int m = -1; m <= d; ++m) {
    long long here = count_ge[static_cast<std::size_t>(m + 1)];
    long long above = m == -1 ? 0 : count_ge[static_cast<std::size_t>(m)];
    long long mult = here - above;
    if (mult < 0) throw InternalInconsistencyError("normal_bundle_splitting: negative multiplicity");
    for (long long k = 0; k < mult; ++k) split.twists.push_back(-m);
  }
  std::sort(split.twists.begin(), split.twists.end(), std::greater<int>());

  if (split.rank() != n - 2) {
    throw InternalInconsistencyError("normal_bundle_splitting: recovered rank != n-2");
  }
  if (split.degree() != (n - 1) - d) {
    throw InternalInconsistencyError("normal_bundle_splitting: degree invariant violated");
  }
  for (int m = -1; m <= d; ++m) {
    long long expect = 0;
    for (int a : split.twists) expect += std::max(0, a + m + 1);
    if (expect != h[static_cast<std::size_t>(m + 1)]) {
      throw InternalInconsistencyError("normal_bundle_splitting: h(m) reconstruction mismatch");
    }
  }
  return split;
}

long long plane_normal_sections(const MultiPoly& f, const LinearSubspace& plane, bool* singular) {
  if (plane.sub_dim() != 2 || plane.ambient_dim() != 5) {
    throw std::invalid_argument("plane_normal_sections: expects a plane in P^5");
  }
  if (f.num_vars() != 6) throw std::invalid_argument("plane_normal_sections: expects 6 variables");
  if (!contains_subspace(f, plane)) {
    throw std::invalid_argument("plane_normal_sections: plane is not contained in the hypersurface");
  }
  int d = f.degree();
  const Field& field = f.field();

  // In adapted coordinates the plane is {u3 = u4 = u5 = 0} and
  // f = u3 F3 + u4 F4 + u5 F5; only the restrictions of the F_j matter.
  ExactMatrix basis = complete_to_basis(plane);
  MultiPoly ft = f.compose_linear(basis);
  std::vector<MultiPoly> fbar(3, MultiPoly(field, 3));
  for (const auto& [e, c] : ft.terms()) {
    int j = -1;
    for (int k = 3; k <= 5; ++k) {
      if (e[k] > 0) {
        j = k;
        break;
      }
    }
    if (j < 0) throw InternalInconsistencyError("plane_normal_sections: containment decomposition failed");
    if (e[j] == 1 && e[3] + e[4] + e[5] == 1) {
      // term = u_j * (monomial on the plane): survives restriction
      Exponents pe{e[0], e[1], e[2]};
      fbar[j - 3].add_term(pe, c);
    }
  }

  bool sing = !forms_have_no_common_zero(fbar, 3, d - 1);
  if (singular) *singular = sing;

  // Solutions (L3, L4, L5), linear forms on the plane, of sum L_j Fbar_j = 0.
  std::vector<Exponents> lin = monomial_basis(3, 1);
  std::vector<Exponents> target = monomial_basis(3, d);
  std::map<Exponents, std::size_t, GrevlexGreater> row_of;
  for (std::size_t r = 0; r < target.size(); ++r) row_of[target[r]] = r;
  ExactMatrix m(field, target.size(), 3 * lin.size());
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t v = 0; v < lin.size(); ++v) {
      for (const auto& [e, c] : fbar[j].terms()) {
        Exponents prod{e[0] + lin[v][0], e[1] + lin[v][1], e[2] + lin[v][2]};
        m.at(row_of.at(prod), j * lin.size() + v) = c;
      }
    }
  }
  return static_cast<long long>(m.cols()) - static_cast<long long>(m.rank());
}

FanoReport fermat_lines(const Field& field, int d, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("fermat_lines: degree must be positive");
  if (field.is_rationals()) {
    throw std::invalid_argument("fermat_lines: needs a prime field with x^" + std::to_string(d) +
                                " = +-1 solvable; use GF(p) with p = 1 mod " + std::to_string(2 * d));
  }
  std::uint64_t p = field.characteristic();
  std::vector<FieldScalar> plus = nth_roots(p, d, +1);
  std::vector<FieldScalar> minus = nth_roots(p, d, -1);

  MultiPoly surface = fermat_signed_surface(field, d);
  int balanced_hi = ceil_div(3 - d, 2);
  int balanced_lo = floor_div(3 - d, 2);
  SplittingType balanced{{balanced_hi, balanced_lo}};

  struct RawLine {
    std::vector<FieldScalar> u, v;  // spanning points in P^3
    std::string label;
  };
  std::vector<RawLine> raw;
  auto axis_pair = [&](int i, int j, const FieldScalar& root) {
    std::vector<FieldScalar> v(4, field.zero());
    v[i] = root;
    v[j] = field.one();
    return v;
  };
  // pairing (z0,z1)(z2,z3): z0 = zeta z1, z2 = xi z3 with zeta^d = xi^d = 1
  for (const auto& zeta : plus) {
    for (const auto& xi : plus) {
      raw.push_back({axis_pair(0, 1, zeta), axis_pair(2, 3, xi),
                     "pairing=(01)(23) zeta=" + zeta.str() + " xi=" + xi.str()});
    }
  }
  // pairing (z0,z2)(z1,z3): z0 = zeta z2, z1 = xi z3 with zeta^d = xi^d = -1
  for (const auto& zeta : minus) {
    for (const auto& xi : minus) {
      raw.push_back({axis_pair(0, 2, zeta), axis_pair(1, 3, xi),
                     "pairing=(02)(13) zeta=" + zeta.str() + " xi=" + xi.str()});
    }
  }
  // pairing (z0,z3)(z1,z2): z0 = zeta z3, z2 = xi z1 with zeta^d = xi^d = 1
  for (const auto& zeta : plus) {
    for (const auto& xi : plus) {
      raw.push_back({axis_pair(0, 3, zeta), axis_pair(2, 1, xi),
                     "pairing=(03)(12) zeta=" + zeta.str() + " xi=" + xi.str()});
    }
  }

  SeededRng master(seed);
  constexpr int kMaxRedraws = 32;
  FanoReport report;
  report.ambient_dim = 4;
  report.degree = d;
  report.hypersurface =
      "z0^" + std::to_string(d) + " - z1^" + std::to_string(d) + " + z2^" + std::to_string(d) +
      " - z3^" + std::to_string(d) + " + z4*g with seeded general g";

  for (int attempt = 0;; ++attempt) {
    if (attempt >= kMaxRedraws) {
      throw std::runtime_error("fermat_lines: no generic auxiliary form found within redraw budget");
    }
    SeededRng rng = master.fork(static_cast<std::uint64_t>(attempt));
    MultiPoly g = random_form(field, 5, d - 1, rng);
    MultiPoly threefold = fermat_signed_threefold(field, d, g);

    report.items.clear();
    bool generic = true;
    for (const auto& rl : raw) {
      LinearSubspace surf_line = LinearSubspace::span_of(field, {rl.u, rl.v});
      std::vector<FieldScalar> u5 = rl.u, v5 = rl.v;
      u5.push_back(field.zero());
      v5.push_back(field.zero());
      LinearSubspace line5 = LinearSubspace::span_of(field, {u5, v5});
      FanoItem item{line5, false, 0, std::nullopt, rl.label};
      item.containment = contains_subspace(surface, surf_line) && contains_subspace(threefold, line5);
      SplittingType split = normal_bundle_splitting(threefold, line5);
      item.h0_normal = split.h0();
      item.splitting = split;
      if (!(split == balanced)) generic = false;
      report.items.push_back(std::move(item));
    }
    if (generic) {
      report.auxiliary_form = "seeded degree-" + std::to_string(d - 1) + " form, " +
                              std::to_string(g.term_count()) + " terms";
      break;
    }
    ++report.redraws;
  }

  std::sort(report.items.begin(), report.items.end(), [](const FanoItem& a, const FanoItem& b) {
    return LinearSubspace::canonical_less(a.space, b.space);
  });
  for (std::size_t i = 0; i + 1 < report.items.size(); ++i) {
    if (report.items[i].space == report.items[i + 1].space) {
      throw InternalInconsistencyError("fermat_lines: enumeration produced a duplicate line");
    }
  }

  bool all_isolated = true;
  for (const auto& item : report.items) all_isolated = all_isolated && item.h0_normal == 0;
  if (all_isolated) {
    report.component_count = static_cast<long long>(report.items.size());
    report.component_dims.assign(report.items.size(), 0);
    report.component_note = "every line is an isolated point of the Fano scheme (h0(N) = 0)";
  } else {
    report.component_count = 0;
    report.component_note = "lines admit normal sections; component structure not determined";
  }
  return report;
}

FanoReport fermat_planes_p5(const Field& field, int d) {
  if (d < 3) throw std::invalid_argument("fermat_planes_p5: degree must be >= 3");
  if (field.is_rationals()) {
    throw std::invalid_argument("fermat_planes_p5: needs a prime field with x^" + std::to_string(d) +
                                " = -1 solvable; use GF(p) with p = 1 mod " + std::to_string(2 * d));
  }
  std::vector<FieldScalar> minus = nth_roots(field.characteristic(), d, -1);
  MultiPoly f = fermat_p5(field, d);

  FanoReport report;
  report.ambient_dim = 5;
  report.degree = d;
  report.hypersurface = "z0^" + std::to_string(d) + " + ... + z5^" + std::to_string(d);

  for (const auto& pairing : pairings_of_six()) {
    for (const auto& w0 : minus) {
      for (const auto& w1 : minus) {
        for (const auto& w2 : minus) {
          const FieldScalar* ws[3] = {&w0, &w1, &w2};
          std::vector<std::vector<FieldScalar>> span;
          std::string label = "pairing=";
          for (int k = 0; k < 3; ++k) {
            auto [i, j] = pairing[static_cast<std::size_t>(k)];
            std::vector<FieldScalar> col(6, field.zero());
            col[i] = field.one();
            col[j] = *ws[k];
            span.push_back(std::move(col));
            label += "(" + std::to_string(i) + std::to_string(j) + ")";
          }
          label += " w=(" + w0.str() + "," + w1.str() + "," + w2.str() + ")";
          LinearSubspace plane = LinearSubspace::span_of(field, span);
          FanoItem item{plane, false, 0, std::nullopt, label};
          item.containment = contains_subspace(f, plane);
          bool singular = false;
          item.h0_normal = plane_normal_sections(f, plane, &singular);
          if (singular) {
            throw InternalInconsistencyError("fermat_planes_p5: smooth Fermat flagged singular");
          }
          report.items.push_back(std::move(item));
        }
      }
    }
  }

  std::sort(report.items.begin(), report.items.end(), [](const FanoItem& a, const FanoItem& b) {
    return LinearSubspace::canonical_less(a.space, b.space);
  });
  for (std::size_t i = 0; i + 1 < report.items.size(); ++i) {
    if (report.items[i].space == report.items[i + 1].space) {
      throw InternalInconsistencyError("fermat_planes_p5: enumeration produced a duplicate plane");
    }
  }

  bool all_isolated = true;
  for (const auto& item : report.items) all_isolated = all_isolated && item.h0_normal == 0;
  if (all_isolated) {
    report.component_count = static_cast<long long>(report.items.size());
    report.component_dims.assign(report.items.size(), 0);
    report.component_note = "every plane is an isolated point of the Fano scheme (h0(N) = 0)";
  } else {
    report.component_count = 0;
    report.component_note = "planes admit normal sections; component structure not determined";
  }
  return report;
}

mpq_class bott_line_count_with_weights(int n, int d, const std::vector<long long>& weights) {
  if (d != 2 * n - 3) {
    throw std::invalid_argument("bott_line_count: requires d = 2n-3 (zero-dimensional count)");
  }
  if (static_cast<int>(weights.size()) != n + 1) {
    throw std::invalid_argument("bott_line_count: need n+1 weights");
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t j = i + 1; j < weights.size(); ++j) {
      if (weights[i] == weights[j]) {
        throw std::invalid_argument("bott_line_count: weights must be pairwise distinct");
      }
    }
  }
  std::vector<mpz_class> w;
  w.reserve(weights.size());
  for (long long x : weights) w.emplace_back(static_cast<long>(x));
  mpq_class acc = 0;
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      mpz_class num = 1;
      for (int a = 0; a <= d; ++a) {
        num *= a * w[static_cast<std::size_t>(i)] + (d - a) * w[static_cast<std::size_t>(j)];
      }
      mpz_class den = 1;
      for (int k = 0; k <= n; ++k) {
        if (k == i || k == j) continue;
        den *= (w[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(k)]) *
               (w[static_cast<std::size_t>(j)] - w[static_cast<std::size_t>(k)]);
      }
      acc += mpq_class(num) / mpq_class(den);
    }
  }
  acc.canonicalize();
  return acc;
}

namespace {

std::vector<long long> draw_distinct_weights(int count, SeededRng& rng) {
  for (;;) {
    std::vector<long long> w;
    for (int i = 0; i < count; ++i) {
      w.push_back(static_cast<long long>(rng.below(2000001)) - 1000000);
    }
    bool distinct = true;
    for (std::size_t i = 0; i < w.size() && distinct; ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[i] == w[j]) {
          distinct = false;
          break;
        }
      }
    }
    if (distinct) return w;
  }
}

}  // namespace

mpz_class bott_line_count(int n, int d, std::uint64_t seed) {
  SeededRng master(seed);
  SeededRng rng1 = master.fork(1);
  SeededRng rng2 = master.fork(2);
  mpq_class first = bott_line_count_with_weights(n, d, draw_distinct_weights(n + 1, rng1));
  mpq_class second = bott_line_count_with_weights(n, d, draw_distinct_weights(n + 1, rng2));
  if (first != second) {
    throw InternalInconsistencyError("bott_line_count: weight draws disagree");
  }
  if (first.get_den() != 1) {
    throw InternalInconsistencyError("bott_line_count: localization sum is not an integer");
  }
  return first.get_num();
}

bool Example46Report::passed() const {
  if (degenerate || !g_squarefree) return false;
  if (static_cast<int>(families.size()) != expected_families) return false;
  for (const auto& fam : families) {
    if (fam.rulings_verified < 3 || fam.rulings_verified != fam.rulings_sampled) return false;
  }
  return rank_meeting_line == expected_rank && rank_disjoint_line == expected_rank;
}

Example46Report example46_check(const Field& field, int d1, const MultiPoly& g,
                                const MultiPoly& h, std::uint64_t seed) {
  if (d1 < 1) throw std::invalid_argument("example46_check: degree must be positive");
  if (g.num_vars() != 2 || g.degree() != d1) {
    throw std::invalid_argument("example46_check: g must be a binary form of degree d1");
  }
  if (h.num_vars() != 3 || h.degree() != d1) {
    throw std::invalid_argument("example46_check: h must be a ternary form of degree d1");
  }
  if (field.is_rationals()) {
    throw std::invalid_argument("example46_check: requires a prime field (root sampling)");
  }

  Example46Report report;
  report.d1 = d1;
  report.expected_families = d1;
  report.expected_rank = d1 + 1;
  report.small_degree_warning = d1 <= 5;
  report.g_text = g.str();
  report.h_text = h.str();

  MultiPoly f = embed_vars(g, 5, 0) + embed_vars(h, 5, 2);
  SeededRng master(seed);

  // (i) cone families: at each zero p of g on the line z2 = z3 = z4 = 0,
  // the lines joining p to points of {h = 0} in the plane z0 = z1 = 0 lie
  // on the hypersurface. Sample curve points by slicing with random lines.
  SeededRng root_rng = master.fork(1);
  BinaryFormRoots g_roots = binary_form_roots(g, root_rng);
  report.g_squarefree = g_roots.squarefree;
  if (static_cast<int>(g_roots.points.size()) < d1 || !g_roots.squarefree) {
    report.degenerate = true;
  }

  SeededRng sample_rng = master.fork(2);
  for (const auto& root : g_roots.points) {
    ConeFamily fam;
    fam.vertex = {root[0], root[1], field.zero(), field.zero(), field.zero()};
    constexpr int kTargetRulings = 3;
    constexpr int kMaxSlices = 48;
    for (int attempt = 0; attempt < kMaxSlices && fam.rulings_verified < kTargetRulings; ++attempt) {
      // random line in the plane, as a span of two points in 3 coordinates
      std::vector<FieldScalar> a(3, field.zero()), b(3, field.zero());
      for (int i = 0; i < 3; ++i) a[i] = sample_rng.uniform_scalar(field);
      for (int i = 0; i < 3; ++i) b[i] = sample_rng.uniform_scalar(field);
      ExactMatrix span(field, 3, 2);
      for (int i = 0; i < 3; ++i) {
        span.at(i, 0) = a[i];
        span.at(i, 1) = b[i];
      }
      if (span.rank() != 2) continue;
      LinearSubspace slice(span);
      MultiPoly h_restricted = restrict_to_subspace(h, slice);
      if (h_restricted.is_zero()) continue;
      BinaryFormRoots curve_pts = binary_form_roots(h_restricted, sample_rng);
      for (const auto& t : curve_pts.points) {
        if (fam.rulings_verified >= kTargetRulings) break;
        std::vector<FieldScalar> q3 = slice.point_at(t);
        std::vector<FieldScalar> q5 = {field.zero(), field.zero(), q3[0], q3[1], q3[2]};
        LinearSubspace ruling = LinearSubspace::span_of(field, {fam.vertex, q5});
        ++fam.rulings_sampled;
        if (contains_subspace(f, ruling)) ++fam.rulings_verified;
      }
    }
    report.families.push_back(std::move(fam));
  }

  // (ii) the linear-conditions rank at the two representative lines: the
  // restriction map from the full (g, h) coefficient space to binary forms
  // of degree d1 on the line.
  auto restriction_rank = [&](const LinearSubspace& line) {
    std::vector<MultiPoly> basis_polys;
    for (const auto& e : monomial_basis(2, d1)) {
      basis_polys.push_back(embed_vars(MultiPoly::monomial(field, e, field.one()), 5, 0));
    }
    for (const auto& e : monomial_basis(3, d1)) {
      basis_polys.push_back(embed_vars(MultiPoly::monomial(field, e, field.one()), 5, 2));
    }
    ExactMatrix m(field, basis_polys.size(), static_cast<std::size_t>(d1) + 1);
    for (std::size_t r = 0; r < basis_polys.size(); ++r) {
      std::vector<FieldScalar> row = binary_coeffs(restrict_to_subspace(basis_polys[r], line), d1);
      for (std::size_t c = 0; c < row.size(); ++c) m.at(r, c) = row[c];
    }
    return static_cast<long long>(m.rank());
  };

  auto mk_line = [&](std::vector<long long> u, std::vector<long long> v) {
    std::vector<FieldScalar> us, vs;
    for (long long x : u) us.push_back(field.integer(x));
    for (long long x : v) vs.push_back(field.integer(x));
    return LinearSubspace::span_of(field, {us, vs});
  };
  // meets the plane z0 = z1 = 0 at (0:0:1:0:0)
  LinearSubspace m1 = mk_line({1, 1, 0, 1, 0}, {0, 0, 1, 0, 0});
  // disjoint from the plane
  LinearSubspace m2 = mk_line({1, 0, 1, 0, 0}, {0, 1, 0, 1, 0});
  report.rank_meeting_line = restriction_rank(m1);
  report.rank_disjoint_line = restriction_rank(m2);

  return report;
}

std::pair<MultiPoly, MultiPoly> example46_default_forms(const Field& field, int d1,
                                                        std::uint64_t seed) {
  if (field.is_rationals()) {
    throw std::invalid_argument("example46_default_forms: requires a prime field");
  }
  SeededRng rng(seed);
  // g split with distinct random zeros so every cone vertex is rational.
  std::vector<FieldScalar> roots;
  while (static_cast<int>(roots.size()) < d1) {
    FieldScalar r = rng.uniform_scalar(field);
    bool dup = false;
    for (const auto& s : roots) dup = dup || s == r;
    if (!dup) roots.push_back(r);
  }
  MultiPoly g = MultiPoly::monomial(field, {0, 0}, field.one());
  for (const auto& r : roots) {
    MultiPoly lin(field, 2);
    lin.add_term({1, 0}, field.one());
    lin.add_term({0, 1}, -r);
    g = g * lin;
  }
  MultiPoly h = random_form(field, 3, d1, rng);
  return {g, h};
}

}  // namespace cifano
