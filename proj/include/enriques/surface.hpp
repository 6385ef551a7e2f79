#pragma once

// Divisor classes on an unnodal Enriques surface: Pic(S) = Num(S) + Z/2 K_S.
// Effectivity and nefness are decided by the numerical rules that hold in the
// absence of (-2)-curves.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "lattice.hpp"

namespace enriques {

struct PicClass {
  NumClass num;
  int eps = 0;  // coefficient of K_S, in {0,1}

  PicClass() = default;
  PicClass(NumClass n, int e = 0) : num(std::move(n)), eps(((e % 2) + 2) % 2) {}

  static PicClass canonical() { return PicClass(NumClass{}, 1); }

  bool is_zero() const { return num.is_zero() && eps == 0; }

  friend PicClass operator+(const PicClass& a, const PicClass& b) {
    return PicClass(a.num + b.num, a.eps ^ b.eps);
  }
  friend PicClass operator-(const PicClass& a) { return PicClass(-a.num, a.eps); }
  friend PicClass operator-(const PicClass& a, const PicClass& b) { return a + (-b); }
  friend PicClass operator*(long long k, const PicClass& a) {
    return PicClass(k * a.num, static_cast<int>(((k % 2) + 2) % 2) * a.eps);
  }
  friend bool operator==(const PicClass& a, const PicClass& b) {
    return a.eps == b.eps && a.num == b.num;
  }
  friend bool operator!=(const PicClass& a, const PicClass& b) { return !(a == b); }
};

inline PicClass with_canonical(const PicClass& d) { return PicClass(d.num, d.eps ^ 1); }

inline Integer inner(const PicClass& a, const PicClass& b) { return inner(a.num, b.num); }
inline Integer square(const PicClass& a) { return square(a.num); }

/// Orientation class; pairs positively with every f_i.
inline NumClass reference_ample() { return NumClass::unit(0); }

inline long long genus(const PicClass& h) {
  Integer sq = square(h);
  if (sq < 2) throw PreconditionError("genus needs H^2 >= 2");
  return to_ll(sq / 2 + 1);
}

inline bool is_effective(const PicClass& d) {
  if (d.num.is_zero()) return d.eps == 0;
  if (square(d) < 0) return false;
  return inner(d.num, reference_ample()) > 0;
}

/// On an unnodal surface every effective divisor is nef.
inline bool is_nef(const PicClass& d) { return is_effective(d); }

struct HalfFiberForm {
  Integer multiple;  // l
  NumClass primitive;  // E0
  int eps = 0;
};

/// Writes an effective isotropic class as l*E0 (+K_S).
inline std::optional<HalfFiberForm> half_fiber_form(const PicClass& d) {
  if (d.num.is_zero() || square(d) != 0 || !is_effective(d)) return std::nullopt;
  HalfFiberForm f;
  f.multiple = divisibility(d.num);
  f.primitive = d.num;
  for (std::size_t i = 0; i < kRank; ++i) f.primitive[i] /= f.multiple;
  f.eps = d.eps;
  return f;
}

inline bool is_primitive_isotropic(const NumClass& v) {
  return !v.is_zero() && square(v) == 0 && divisibility(v) == 1;
}

/// Half-fiber test: primitive, isotropic and effective.
inline bool is_half_fiber(const PicClass& f) {
  return is_primitive_isotropic(f.num) && is_effective(PicClass(f.num, 0));
}

inline std::string to_string(const PicClass& d) {
  return "pic[" + coords_text(d.num) + ";" + std::to_string(d.eps) + "]";
}

inline std::ostream& operator<<(std::ostream& os, const PicClass& d) { return os << to_string(d); }

/// Parses `pic[c0,...,c9;eps]` or `num[c0,...,c9]` (the latter with eps = 0).
inline PicClass parse_pic(std::string_view s) {
  std::size_t p = 0;
  detail::skip_ws(s, p);
  if (s.substr(p, 4) == "num[") return PicClass(parse_num(s), 0);
  detail::expect(s, p, "pic[");
  NumClass n = detail::read_coords(s, p);
  detail::expect(s, p, ";");
  detail::skip_ws(s, p);
  std::size_t at = p;
  Integer e = detail::read_integer(s, p);
  if (e != 0 && e != 1) throw ParseError("torsion bit must be 0 or 1", at);
  detail::expect(s, p, "]");
  detail::skip_ws(s, p);
  if (p != s.size()) throw ParseError("trailing characters", p);
  return PicClass(n, e == 1 ? 1 : 0);
}

}  // namespace enriques
