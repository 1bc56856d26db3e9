#include "cifano/point_schemes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cifano/poly.hpp"

namespace cifano {

namespace {

bool point_less(const std::vector<FieldScalar>& a, const std::vector<FieldScalar>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return FieldScalar::canonical_less(a[i], b[i]);
  }
  return false;
}

}  // namespace

std::vector<FieldScalar> normalize_projective(std::vector<FieldScalar> v) {
  for (const FieldScalar& c : v) {
    if (!c.is_zero()) {
      FieldScalar inv = c.inverse();
      for (FieldScalar& x : v) x *= inv;
      return v;
    }
  }
  throw std::invalid_argument("normalize_projective: zero vector is not a projective point");
}

PointSet build_grid_scheme(const Field& field, int n, const std::vector<int>& degrees,
                           std::uint64_t seed, GridBuildStats* stats) {
  if (static_cast<int>(degrees.size()) != n) {
    throw std::invalid_argument("build_grid_scheme: need exactly n divisor degrees");
  }
  long long expected = 1;
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("build_grid_scheme: degrees must be >= 1");
    expected *= d;
  }

  constexpr int kMaxRetries = 64;
  GridBuildStats local;
  GridBuildStats& st = stats ? *stats : local;
  SeededRng master(seed);

  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    SeededRng rng = master.fork(static_cast<std::uint64_t>(attempt));
    // One batch of random hyperplanes per divisor.
    std::vector<std::vector<std::vector<FieldScalar>>> divisors(n);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < degrees[i]; ++k) {
        std::vector<FieldScalar> hyp;
        bool nonzero = false;
        for (int c = 0; c <= n; ++c) {
          FieldScalar s = rng.uniform_scalar(field, 9);
          nonzero = nonzero || !s.is_zero();
          hyp.push_back(s);
        }
        if (!nonzero) hyp[0] = field.one();
        divisors[i].push_back(std::move(hyp));
      }
    }

    PointSet z;
    z.ambient_dim = n;
    z.grid_degrees = degrees;
    bool degenerate = false;
    std::vector<int> choice(n, 0);
    for (long long idx = 0; idx < expected && !degenerate; ++idx) {
      ExactMatrix sys(field, n, n + 1);
      for (int i = 0; i < n; ++i) {
        for (int c = 0; c <= n; ++c) sys.at(i, c) = divisors[i][choice[i]][c];
      }
      auto kernel = sys.kernel_basis();
      if (kernel.size() != 1) {
        degenerate = true;
        break;
      }
      z.points.push_back(normalize_projective(kernel.front()));
      z.grid_choice.push_back(choice);
      // mixed-radix increment
      for (int i = n - 1; i >= 0; --i) {
        if (++choice[i] < degrees[i]) break;
        choice[i] = 0;
      }
    }
    if (!degenerate) {
      std::vector<std::size_t> order(z.points.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) { return point_less(z.points[a], z.points[b]); });
      PointSet sorted;
      sorted.ambient_dim = n;
      sorted.grid_degrees = degrees;
      for (std::size_t i : order) {
        sorted.points.push_back(z.points[i]);
        sorted.grid_choice.push_back(z.grid_choice[i]);
      }
      for (std::size_t i = 0; i + 1 < sorted.points.size(); ++i) {
        if (sorted.points[i] == sorted.points[i + 1]) {
          degenerate = true;
          break;
        }
      }
      if (!degenerate) {
        std::ostringstream prov;
        prov << "grid complete intersection n=" << n << " degrees=(";
        for (std::size_t i = 0; i < degrees.size(); ++i) {
          prov << (i ? "," : "") << degrees[i];
        }
        prov << ") seed=" << seed << " retries=" << st.retries;
        sorted.provenance = prov.str();
        return sorted;
      }
    }
    ++st.retries;
  }
  throw std::runtime_error("build_grid_scheme: retry budget exhausted (degenerate field?)");
}

PointSet random_points(const Field& field, int n, int count, std::uint64_t seed) {
  SeededRng rng(seed);
  PointSet z;
  z.ambient_dim = n;
  int guard = 0;
  while (static_cast<int>(z.points.size()) < count) {
    if (++guard > 1000 * count) {
      throw std::runtime_error("random_points: cannot draw distinct points");
    }
    std::vector<FieldScalar> pt;
    bool nonzero = false;
    for (int c = 0; c <= n; ++c) {
      FieldScalar s = rng.uniform_scalar(field, 50);
      nonzero = nonzero || !s.is_zero();
      pt.push_back(s);
    }
    if (!nonzero) continue;
    pt = normalize_projective(std::move(pt));
    bool dup = false;
    for (const auto& q : z.points) {
      if (q == pt) {
        dup = true;
        break;
      }
    }
    if (!dup) z.points.push_back(std::move(pt));
  }
  std::sort(z.points.begin(), z.points.end(), point_less);
  std::ostringstream prov;
  prov << "uniform random points n=" << n << " count=" << count << " seed=" << seed;
  z.provenance = prov.str();
  return z;
}

PointSet subset(const PointSet& z, const std::vector<bool>& keep) {
  if (keep.size() != z.points.size()) throw std::invalid_argument("subset: selector length mismatch");
  PointSet out;
  out.ambient_dim = z.ambient_dim;
  out.provenance = z.provenance + " [subset]";
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!keep[i]) continue;
    out.points.push_back(z.points[i]);
    if (!z.grid_choice.empty()) out.grid_choice.push_back(z.grid_choice[i]);
  }
  return out;
}

ExactMatrix evaluation_matrix(const PointSet& z, int m) {
  if (m < 0) throw std::invalid_argument("evaluation_matrix: negative degree");
  if (z.points.empty()) throw std::invalid_argument("evaluation_matrix: empty point set");
  const Field& field = z.points.front().front().field();
  std::vector<Exponents> basis = monomial_basis(z.ambient_dim + 1, m);
  ExactMatrix mat(field, z.points.size(), basis.size());
  for (std::size_t r = 0; r < z.points.size(); ++r) {
    const auto& pt = z.points[r];
    for (std::size_t c = 0; c < basis.size(); ++c) {
      FieldScalar v = field.one();
      for (int i = 0; i <= z.ambient_dim; ++i) {
        if (basis[c][i] != 0) v *= pt[i].pow(basis[c][i]);
      }
      mat.at(r, c) = v;
    }
  }
  return mat;
}

long long h0_ideal_points(const PointSet& z, int m) {
  if (m < 0) throw std::invalid_argument("h0_ideal_points: negative degree");
  ExactMatrix mat = evaluation_matrix(z, m);
  return static_cast<long long>(mat.cols()) - static_cast<long long>(mat.rank());
}

CayleyBacharachResult cayley_bacharach_check(const PointSet& z, int m) {
  if (m < 0) throw std::invalid_argument("cayley_bacharach_check: negative degree");
  CayleyBacharachResult res;
  long long full = h0_ideal_points(z, m);
  std::vector<bool> keep(z.points.size(), true);
  for (std::size_t i = 0; i < z.points.size(); ++i) {
    keep[i] = false;
    long long dropped = h0_ideal_points(subset(z, keep), m);
    keep[i] = true;
    if (dropped != full) {
      res.holds = false;
      res.witness_index = i;
      return res;
    }
  }
  res.holds = true;
  return res;
}

bool residual_identity_check(const PointSet& z, const std::vector<bool>& in_first, int m,
                             int d_sum) {
  if (in_first.size() != z.points.size()) {
    throw std::invalid_argument("residual_identity_check: selector length mismatch");
  }
  int m_res = d_sum - z.ambient_dim - 1 - m;
  if (m < 0 || m_res < 0) {
    throw std::invalid_argument("residual_identity_check: requires 0 <= m <= d_sum - n - 1");
  }
  std::vector<bool> in_second(in_first.size());
  for (std::size_t i = 0; i < in_first.size(); ++i) in_second[i] = !in_first[i];
  PointSet z1 = subset(z, in_first);
  PointSet z2 = subset(z, in_second);

  // h0(I_{Z'}(m)) - h0(I_Z(m)) = rank_Z(m) - rank_{Z'}(m); an empty part
  // imposes no conditions.
  long long rank_full = static_cast<long long>(evaluation_matrix(z, m).rank());
  long long rank_first = z1.points.empty() ? 0 : static_cast<long long>(evaluation_matrix(z1, m).rank());
  long long lhs = rank_full - rank_first;

  long long rank_second =
      z2.points.empty() ? 0 : static_cast<long long>(evaluation_matrix(z2, m_res).rank());
  long long rhs = static_cast<long long>(z2.points.size()) - rank_second;

  return lhs == rhs;
}

}  // namespace cifano
