#pragma once

// The numerical lattice Num(S) of an Enriques surface, realized in the basis
// {Delta, f1, ..., f9} where the fi are the first nine members of an isotropic
// 10-sequence and 3*Delta = f1 + ... + f10.

#include <array>
#include <cstddef>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace enriques {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller handed an argument outside the operation's domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

inline constexpr std::size_t kRank = 10;

/// Narrow an exact integer to long long, throwing if it does not fit.
inline long long to_ll(const Integer& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw Error("integer out of 64-bit range: " + v.str());
  return v.convert_to<long long>();
}

class NumClass {
 public:
  NumClass() = default;
  explicit NumClass(const std::array<Integer, kRank>& coords) : c_(coords) {}

  static NumClass from(std::initializer_list<long long> coords) {
    if (coords.size() != kRank) throw PreconditionError("a class needs exactly 10 coordinates");
    NumClass r;
    std::size_t i = 0;
    for (long long v : coords) r.c_[i++] = v;
    return r;
  }

  static NumClass unit(std::size_t i) {
    NumClass r;
    r.c_.at(i) = 1;
    return r;
  }

  const Integer& operator[](std::size_t i) const { return c_[i]; }
  Integer& operator[](std::size_t i) { return c_[i]; }
  const std::array<Integer, kRank>& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (v != 0) return false;
    return true;
  }

  NumClass& operator+=(const NumClass& o) {
    for (std::size_t i = 0; i < kRank; ++i) c_[i] += o.c_[i];
    return *this;
  }
  NumClass& operator-=(const NumClass& o) {
    for (std::size_t i = 0; i < kRank; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  NumClass& operator*=(const Integer& k) {
    for (auto& v : c_) v *= k;
    return *this;
  }

  friend NumClass operator+(NumClass a, const NumClass& b) { return a += b; }
  friend NumClass operator-(NumClass a, const NumClass& b) { return a -= b; }
  friend NumClass operator-(NumClass a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend NumClass operator*(const Integer& k, NumClass a) { return a *= k; }
  friend NumClass operator*(long long k, NumClass a) { return a *= Integer(k); }

  friend bool operator==(const NumClass& a, const NumClass& b) { return a.c_ == b.c_; }
  friend bool operator!=(const NumClass& a, const NumClass& b) { return !(a == b); }
  // Lexicographic on coordinates.
  friend bool operator<(const NumClass& a, const NumClass& b) {
    for (std::size_t i = 0; i < kRank; ++i) {
      if (a.c_[i] < b.c_[i]) return true;
      if (b.c_[i] < a.c_[i]) return false;
    }
    return false;
  }

 private:
  std::array<Integer, kRank> c_{};
};

using Gram = std::array<std::array<int, kRank>, kRank>;

inline Gram basis_gram() {
  Gram g{};
  g[0][0] = 10;
  for (std::size_t i = 1; i < kRank; ++i) {
    g[0][i] = g[i][0] = 3;
    for (std::size_t j = 1; j < kRank; ++j) g[i][j] = (i == j) ? 0 : 1;
  }
  return g;
}

/// Intersection pairing. With s(a) the sum of the f-coordinates,
/// a.b = 10 a0 b0 + 3 (a0 s(b) + b0 s(a)) + s(a) s(b) - sum_i ai bi.
inline Integer inner(const NumClass& a, const NumClass& b) {
  Integer sa = 0, sb = 0, diag = 0;
  for (std::size_t i = 1; i < kRank; ++i) {
    sa += a[i];
    sb += b[i];
    diag += a[i] * b[i];
  }
  return 10 * a[0] * b[0] + 3 * (a[0] * sb + b[0] * sa) + sa * sb - diag;
}

inline Integer square(const NumClass& a) { return inner(a, a); }

/// f_i for i in 1..10, with f10 = 3 Delta - f1 - ... - f9.
inline NumClass isotropic_generator(int i) {
  if (i < 1 || i > 10) throw PreconditionError("isotropic generator index must be in 1..10");
  if (i < 10) return NumClass::unit(static_cast<std::size_t>(i));
  NumClass r;
  r[0] = 3;
  for (std::size_t k = 1; k < kRank; ++k) r[k] = -1;
  return r;
}

/// E_{i,j} = Delta - f_i - f_j.
inline NumClass two_isotropic_generator(int i, int j) {
  if (i == j) throw PreconditionError("E{i,j} needs distinct indices");
  return NumClass::unit(0) - isotropic_generator(i) - isotropic_generator(j);
}

inline Integer divisibility(const NumClass& a) {
  Integer g = 0;
  for (const auto& v : a.coords()) g = boost::multiprecision::gcd(g, abs(v));
  return g;
}

inline std::string coords_text(const NumClass& a) {
  std::string s;
  for (std::size_t i = 0; i < kRank; ++i) {
    if (i) s += ',';
    s += a[i].str();
  }
  return s;
}

inline std::string to_string(const NumClass& a) { return "num[" + coords_text(a) + "]"; }

inline std::ostream& operator<<(std::ostream& os, const NumClass& a) { return os << to_string(a); }

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& p) {
  while (p < s.size() && (s[p] == ' ' || s[p] == '\t' || s[p] == '\n' || s[p] == '\r')) ++p;
}

inline void expect(std::string_view s, std::size_t& p, std::string_view token) {
  skip_ws(s, p);
  if (s.substr(p, token.size()) != token)
    throw ParseError("expected '" + std::string(token) + "'", p);
  p += token.size();
}

inline Integer read_integer(std::string_view s, std::size_t& p) {
  skip_ws(s, p);
  std::size_t start = p;
  if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
  std::size_t digits = p;
  while (p < s.size() && s[p] >= '0' && s[p] <= '9') ++p;
  if (p == digits) throw ParseError("expected an integer", start);
  return Integer(std::string(s.substr(start, p - start)));
}

// Reads "c0,...,c9" starting at p.
inline NumClass read_coords(std::string_view s, std::size_t& p) {
  NumClass r;
  for (std::size_t i = 0; i < kRank; ++i) {
    if (i) expect(s, p, ",");
    r[i] = read_integer(s, p);
  }
  return r;
}

}  // namespace detail

/// Parses `num[c0,...,c9]`.
inline NumClass parse_num(std::string_view s) {
  std::size_t p = 0;
  detail::expect(s, p, "num[");
  NumClass r = detail::read_coords(s, p);
  detail::expect(s, p, "]");
  detail::skip_ws(s, p);
  if (p != s.size()) throw ParseError("trailing characters", p);
  return r;
}

}  // namespace enriques
