#pragma once

// Enumeration of primitive isotropic classes on the affine slices nu.H = k,
// and the phi-invariant built on it.
//
// For fixed H with H^2 > 0 the slice {nu : nu.H = k} is a translate of the
// rank-9 lattice H^perp, on which the intersection form is negative definite.
// The isotropy condition nu^2 = 0 becomes an ellipsoid equation in H^perp
// coordinates; its lattice points are listed by Fincke-Pohst enumeration over
// an LLL-reduced basis, all in exact rational arithmetic.

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "surface.hpp"

namespace enriques {

namespace detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer floor_rational(const Rational& r) {
  return floor_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

inline Integer round_rational(const Rational& r) { return floor_rational(r + Rational(1, 2)); }

// Returns g = gcd(a,b) >= 0 with s*a + t*b = g.
inline Integer extended_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
  Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return r0;
}

// Positive definite form on H^perp: x,y -> -x.y.
inline Integer perp_form(const NumClass& a, const NumClass& b) { return -inner(a, b); }

// Size-reduced, Lovasz-condition (3/4) basis of the lattice spanned by `basis`
// with respect to perp_form.
inline void lll_reduce(std::vector<NumClass>& basis) {
  const std::size_t n = basis.size();
  if (n < 2) return;
  RationalMatrix mu(n, std::vector<Rational>(n));
  std::vector<Rational> bstar(n);
  auto recompute = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        Rational v = Rational(perp_form(basis[i], basis[j]));
        for (std::size_t l = 0; l < j; ++l) v -= mu[j][l] * mu[i][l] * bstar[l];
        mu[i][j] = v / bstar[j];
      }
      Rational v = Rational(perp_form(basis[i], basis[i]));
      for (std::size_t l = 0; l < i; ++l) v -= mu[i][l] * mu[i][l] * bstar[l];
      bstar[i] = v;
    }
  };
  recompute();
  std::size_t k = 1;
  const Rational delta(3, 4);
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      Integer q = round_rational(mu[k][jj]);
      if (q == 0) continue;
      basis[k] -= q * basis[jj];
      for (std::size_t l = 0; l < jj; ++l) mu[k][l] -= Rational(q) * mu[jj][l];
      mu[k][jj] -= Rational(q);
    }
    if (bstar[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
      ++k;
    } else {
      std::swap(basis[k], basis[k - 1]);
      recompute();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

// Solves P z = w exactly (P symmetric positive definite).
inline std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> w) {
  const std::size_t n = w.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    std::swap(w[piv], w[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      w[r] -= f * w[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) w[i] /= a[i][i];
  return w;
}

/// The affine structure of the slices nu.H = k.
struct SliceFrame {
  NumClass h;
  Integer step;               // gcd of the functional nu -> nu.H; slices exist iff step | k
  NumClass unit_solution;     // u with u.H = step
  std::vector<NumClass> perp; // reduced basis of H^perp (rank 9)
  RationalMatrix q;           // Fincke-Pohst decomposition of the perp Gram matrix
  RationalMatrix gram;
};

inline SliceFrame make_slice_frame(const NumClass& h) {
  SliceFrame fr;
  fr.h = h;
  std::vector<NumClass> cols(kRank);
  std::vector<Integer> val(kRank);
  for (std::size_t i = 0; i < kRank; ++i) {
    cols[i] = NumClass::unit(i);
    val[i] = inner(h, cols[i]);
  }
  // Column operations bringing the functional to (step, 0, ..., 0).
  for (std::size_t j = 1; j < kRank; ++j) {
    if (val[j] == 0) continue;
    if (val[0] == 0) {
      std::swap(cols[0], cols[j]);
      std::swap(val[0], val[j]);
      continue;
    }
    Integer s, t;
    Integer g = extended_gcd(val[0], val[j], s, t);
    NumClass c0 = s * cols[0] + t * cols[j];
    NumClass cj = (-(val[j] / g)) * cols[0] + (val[0] / g) * cols[j];
    cols[0] = c0;
    cols[j] = cj;
    val[0] = g;
    val[j] = 0;
  }
  if (val[0] == 0) throw PreconditionError("slice enumeration needs a nonzero class");
  if (val[0] < 0) {
    val[0] = -val[0];
    cols[0] = -cols[0];
  }
  fr.step = val[0];
  fr.unit_solution = cols[0];
  fr.perp.assign(cols.begin() + 1, cols.end());
  lll_reduce(fr.perp);

  const std::size_t n = fr.perp.size();
  fr.gram.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) fr.gram[i][j] = Rational(perp_form(fr.perp[i], fr.perp[j]));

  // Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
  RationalMatrix q = fr.gram;
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i][i] <= 0) throw PreconditionError("H^perp is not negative definite; H^2 must be > 0");
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] = q[i][j] / q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  fr.q = std::move(q);
  return fr;
}

// Integer interval {y : (y - c)^2 <= s2}, possibly empty (lo > hi).
inline std::pair<Integer, Integer> integer_range(const Rational& c, const Rational& s2) {
  long double cd = c.convert_to<long double>();
  long double sd = std::sqrt(std::max<long double>(0, s2.convert_to<long double>()));
  Integer lo(static_cast<long long>(std::floor(cd - sd)) - 1);
  Integer hi(static_cast<long long>(std::ceil(cd + sd)) + 1);
  auto inside = [&](const Integer& y) {
    Rational d = Rational(y) - c;
    return d * d <= s2;
  };
  while (lo <= hi && !inside(lo)) ++lo;
  while (hi >= lo && !inside(hi)) --hi;
  return {lo, hi};
}

/// All isotropic nu (not necessarily primitive) with nu.H = k.
inline std::vector<NumClass> isotropic_on_slice(const SliceFrame& fr, const Integer& k) {
  std::vector<NumClass> out;
  if (k % fr.step != 0) return out;
  const std::size_t n = fr.perp.size();
  NumClass base = (k / fr.step) * fr.unit_solution;

  // nu = base + sum y_i b_i; nu^2 = base^2 + 2 w.y - y^T P y.
  std::vector<Rational> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = Rational(inner(base, fr.perp[i]));
  std::vector<Rational> z = solve(fr.gram, w);
  Rational r = Rational(square(base));
  for (std::size_t i = 0; i < n; ++i) r += w[i] * z[i];
  // Now nu^2 = r - (y - z)^T P (y - z).

  std::vector<Integer> y(n);
  std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t level,
                                                                  const Rational& budget) {
    const std::size_t i = level - 1;
    Rational shift = 0;
    for (std::size_t j = i + 1; j < n; ++j) shift += fr.q[i][j] * (Rational(y[j]) - z[j]);
    Rational centre = z[i] - shift;
    auto [lo, hi] = integer_range(centre, budget / fr.q[i][i]);
    for (Integer v = lo; v <= hi; ++v) {
      y[i] = v;
      Rational d = Rational(v) - centre;
      Rational rest = budget - fr.q[i][i] * d * d;
      if (i == 0) {
        if (rest == 0) {
          NumClass nu = base;
          for (std::size_t t = 0; t < n; ++t)
            if (y[t] != 0) nu += y[t] * fr.perp[t];
          out.push_back(std::move(nu));
        }
      } else {
        descend(i, rest);
      }
    }
  };
  if (r >= 0) descend(n, r);
  return out;
}

inline void require_big_effective(const PicClass& h) {
  if (square(h) <= 0 || !is_effective(h))
    throw PreconditionError("class must be effective with positive square");
}

}  // namespace detail

/// Primitive isotropic effective classes nu with nu.H = k, sorted.
inline std::vector<NumClass> enumerate_slice(const PicClass& h, const Integer& k) {
  detail::require_big_effective(h);
  detail::SliceFrame fr = detail::make_slice_frame(h.num);
  std::vector<NumClass> out;
  for (auto& nu : detail::isotropic_on_slice(fr, k))
    if (divisibility(nu) == 1 && inner(nu, reference_ample()) > 0) out.push_back(std::move(nu));
  std::sort(out.begin(), out.end());
  return out;
}

/// All primitive isotropic effective nu with 0 < nu.H <= kmax, ordered by
/// pairing with H and then lexicographically.
inline std::vector<NumClass> enumerate_isotropic(const PicClass& h, long long kmax) {
  detail::require_big_effective(h);
  if (kmax < 1) throw PreconditionError("kmax must be positive");
  detail::SliceFrame fr = detail::make_slice_frame(h.num);
  std::vector<NumClass> out;
  for (long long k = 1; k <= kmax; ++k) {
    std::vector<NumClass> layer;
    for (auto& nu : detail::isotropic_on_slice(fr, Integer(k)))
      if (divisibility(nu) == 1 && inner(nu, reference_ample()) > 0) layer.push_back(std::move(nu));
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

struct PhiResult {
  long long value = 0;
  PicClass witness;
};

inline PhiResult phi(const PicClass& h) {
  detail::require_big_effective(h);
  Integer n = square(h);
  long long kmax = to_ll(boost::multiprecision::sqrt(n));
  detail::SliceFrame fr = detail::make_slice_frame(h.num);
  for (long long k = 1; k <= kmax; ++k) {
    std::optional<NumClass> best;
    for (auto& nu : detail::isotropic_on_slice(fr, Integer(k))) {
      if (divisibility(nu) != 1 || inner(nu, reference_ample()) <= 0) continue;
      if (!best || nu < *best) best = std::move(nu);
    }
    if (best) return PhiResult{k, PicClass(*best, 0)};
  }
  // Unreachable for a big class on a unimodular hyperbolic lattice.
  throw Error("no isotropic class found below sqrt(H^2)");
}

}  // namespace enriques
