#pragma once

// Cohomology of line bundles on an unnodal Enriques surface and on its K3
// double cover, plus the corank rules for multiplication maps of sections.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "surface.hpp"

namespace enriques {

struct CohTriple {
  long long h0 = 0, h1 = 0, h2 = 0;
  bool exact = true;

  friend bool operator==(const CohTriple& a, const CohTriple& b) {
    return a.h0 == b.h0 && a.h1 == b.h1 && a.h2 == b.h2 && a.exact == b.exact;
  }
  friend CohTriple operator+(const CohTriple& a, const CohTriple& b) {
    return {a.h0 + b.h0, a.h1 + b.h1, a.h2 + b.h2, a.exact && b.exact};
  }
};

inline std::ostream& operator<<(std::ostream& os, const CohTriple& t) {
  return os << "(" << t.h0 << "," << t.h1 << "," << t.h2 << ")";
}

inline long long chi(const PicClass& d) { return to_ll(square(d) / 2 + 1); }

namespace detail {

inline CohTriple dual(const CohTriple& t) { return {t.h2, t.h1, t.h0, t.exact}; }

// Effective isotropic l*E0 (+K): h0 = floor(l/2)+1 untwisted, ceil(l/2) twisted.
inline CohTriple half_fiber_multiple_coh(const HalfFiberForm& f) {
  long long l = to_ll(f.multiple);
  long long h0 = f.eps == 0 ? l / 2 + 1 : (l + 1) / 2;
  return {h0, h0 - 1, 0, true};
}

}  // namespace detail

inline CohTriple coh(const PicClass& d) {
  if (d.num.is_zero()) return d.eps == 0 ? CohTriple{1, 0, 0} : CohTriple{0, 0, 1};
  Integer sq = square(d);
  if (sq < 0) return {0, to_ll(-sq / 2 - 1), 0};
  if (sq > 0) {
    long long c = to_ll(sq / 2 + 1);
    return is_effective(d) ? CohTriple{c, 0, 0} : CohTriple{0, 0, c};
  }
  if (auto f = half_fiber_form(d)) return detail::half_fiber_multiple_coh(*f);
  // Anti-effective isotropic: h^i(D) = h^{2-i}(K - D).
  auto f = half_fiber_form(PicClass::canonical() - d);
  return detail::dual(detail::half_fiber_multiple_coh(*f));
}

/// Cohomology of the pullback to the K3 cover: coh(D) + coh(D + K_S).
inline CohTriple k3_coh(const PicClass& d) { return coh(d) + coh(with_canonical(d)); }

enum class Cover { Enriques, K3 };

inline CohTriple coh_on(const PicClass& d, Cover cover) {
  return cover == Cover::K3 ? k3_coh(d) : coh(d);
}

inline std::string to_string(Cover c) { return c == Cover::K3 ? "k3" : "enriques"; }

/// Pencil test for the second factor of a multiplication map: on the K3 side
/// the pullback of a half-fiber E is an elliptic pencil; on the Enriques side
/// the pencil is |2E|.
inline bool is_pencil(const PicClass& g, Cover cover) {
  if (!is_effective(g) || square(g) != 0 || g.num.is_zero()) return false;
  auto f = half_fiber_form(g);
  if (cover == Cover::K3) return f->multiple == 1;
  return f->multiple == 2 && f->eps == 0;
}

struct CorankBound {
  long long upper = 0;
  bool exact = false;
};

/// cork(mu_{F,G}) <= h1(F - G), with equality when h1(F) = 0.
inline CorankBound mult_corank_bound(const PicClass& f, const PicClass& g, Cover cover) {
  if (!is_pencil(g, cover)) throw PreconditionError("second factor must be a base point free pencil");
  return {coh_on(f - g, cover).h1, coh_on(f, cover).h1 == 0};
}

struct ChainStep {
  PicClass part;
  PicClass difference;  // F + G_1 + ... + G_{i-1} - G_i
  long long h1 = 0;
};

struct MultCertificate {
  bool surjective = false;
  std::optional<std::size_t> failed_index;  // 1-based
  std::vector<ChainStep> steps;
};

/// Surjectivity of mu_{F, G_1+...+G_n} from the vanishings
/// h1(F + G_1 + ... + G_{i-1} - G_i) = 0 for all i.
inline MultCertificate certify_mult_surjective(const PicClass& f, std::span<const PicClass> parts,
                                               Cover cover) {
  MultCertificate cert;
  PicClass current = f;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!is_pencil(parts[i], cover))
      throw PreconditionError("chain part " + std::to_string(i + 1) + " is not a pencil");
    ChainStep step{parts[i], current - parts[i], 0};
    step.h1 = coh_on(step.difference, cover).h1;
    cert.steps.push_back(step);
    if (step.h1 != 0) {
      cert.failed_index = i + 1;
      return cert;
    }
    current = current + parts[i];
  }
  cert.surjective = true;
  return cert;
}

}  // namespace enriques
