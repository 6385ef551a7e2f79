#pragma once

// Simple isotropic decomposition types H ~ a1 E1 + ... + an En (+ K_S):
// parsing, printing, validation against the admissible intersection shapes,
// realization in the lattice and a permutation-invariant signature.

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "surface.hpp"

namespace enriques {

/// E(i) when j == 0, otherwise E(i,j) with i < j.
struct Symbol {
  int i = 0;
  int j = 0;

  bool is_pair() const { return j != 0; }

  NumClass generator() const {
    return is_pair() ? two_isotropic_generator(i, j) : isotropic_generator(i);
  }

  std::string text() const {
    return is_pair() ? "E{" + std::to_string(i) + "," + std::to_string(j) + "}"
                     : "E" + std::to_string(i);
  }

  friend bool operator==(const Symbol& a, const Symbol& b) { return a.i == b.i && a.j == b.j; }
  friend bool operator<(const Symbol& a, const Symbol& b) {
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  }
};

struct Term {
  long long coeff = 1;
  Symbol symbol;
};

struct DecompositionType {
  std::vector<Term> terms;
  int eps = 0;

  friend bool operator==(const DecompositionType& a, const DecompositionType& b) {
    if (a.eps != b.eps || a.terms.size() != b.terms.size()) return false;
    for (std::size_t k = 0; k < a.terms.size(); ++k)
      if (a.terms[k].coeff != b.terms[k].coeff || !(a.terms[k].symbol == b.terms[k].symbol))
        return false;
    return true;
  }
};

inline std::string to_string(const DecompositionType& d) {
  std::string s;
  for (const auto& t : d.terms) {
    if (!s.empty()) s += '+';
    if (t.coeff != 1) s += std::to_string(t.coeff);
    s += t.symbol.text();
  }
  if (d.eps) s += s.empty() ? "K" : "+K";
  return s;
}

namespace detail {

class DecompositionParser {
 public:
  explicit DecompositionParser(std::string_view s) : s_(s) {}

  DecompositionType parse() {
    DecompositionType d;
    std::set<Symbol> seen;
    ws();
    if (p_ == s_.size()) throw ParseError("empty decomposition", p_);
    while (true) {
      ws();
      if (peek() == 'K') {
        ++p_;
        ws();
        if (p_ != s_.size()) throw ParseError("K must be the last summand", p_);
        if (d.terms.empty()) throw ParseError("decomposition needs at least one isotropic term", p_);
        d.eps = 1;
        break;
      }
      std::size_t at = p_;
      Term t = term();
      if (!seen.insert(t.symbol).second) throw ParseError("duplicate symbol " + t.symbol.text(), at);
      d.terms.push_back(t);
      ws();
      if (p_ == s_.size()) break;
      if (peek() != '+') throw ParseError("expected '+'", p_);
      ++p_;
    }
    if (d.terms.size() > 10) throw ParseError("more than 10 terms", 0);
    return d;
  }

 private:
  char peek() const { return p_ < s_.size() ? s_[p_] : '\0'; }

  void ws() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }

  bool digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  long long number() {
    std::size_t at = p_;
    if (!digit()) throw ParseError("expected a number", p_);
    long long v = 0;
    while (digit()) {
      v = v * 10 + (s_[p_++] - '0');
      if (v > 1'000'000'000) throw ParseError("number too large", at);
    }
    return v;
  }

  int index() {
    ws();
    std::size_t at = p_;
    long long v = number();
    if (v < 1 || v > 10) throw ParseError("index must be in 1..10", at);
    return static_cast<int>(v);
  }

  Term term() {
    Term t;
    std::size_t at = p_;
    if (digit()) {
      t.coeff = number();
      if (t.coeff == 0) throw ParseError("zero coefficient", at);
      ws();
    }
    if (peek() == '(') throw ParseError("parenthesized multiples are not supported", p_);
    if (peek() != 'E') throw ParseError("expected 'E'", p_);
    ++p_;
    ws();
    if (peek() == '{') {
      ++p_;
      int a = index();
      ws();
      if (peek() != ',') throw ParseError("expected ','", p_);
      ++p_;
      std::size_t bat = p_;
      int b = index();
      ws();
      if (peek() != '}') throw ParseError("expected '}'", p_);
      ++p_;
      if (a == b) throw ParseError("E{i,j} needs distinct indices", bat);
      t.symbol = {std::min(a, b), std::max(a, b)};
      return t;
    }
    int a = index();
    ws();
    if (peek() == ',') {
      ++p_;
      std::size_t bat = p_;
      int b = index();
      if (a == b) throw ParseError("E{i,j} needs distinct indices", bat);
      t.symbol = {std::min(a, b), std::max(a, b)};
      return t;
    }
    t.symbol = {a, 0};
    return t;
  }

  std::string_view s_;
  std::size_t p_ = 0;
};

}  // namespace detail

/// Grammar: term ('+' term)* ('+' 'K')?, term := [n]E i | [n]E{i,j} | [n]E i,j.
inline DecompositionType parse_decomposition(std::string_view text) {
  return detail::DecompositionParser(text).parse();
}

inline PicClass realize(const DecompositionType& d) {
  NumClass n;
  for (const auto& t : d.terms) n += Integer(t.coeff) * t.symbol.generator();
  return PicClass(n, d.eps);
}

/// Matrix of pairings between the symbols of d.
inline std::vector<std::vector<long long>> pairing_matrix(const DecompositionType& d) {
  const std::size_t n = d.terms.size();
  std::vector<NumClass> gens;
  for (const auto& t : d.terms) gens.push_back(t.symbol.generator());
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m[a][b] = to_ll(inner(gens[a], gens[b]));
  return m;
}

struct SimpleValidation {
  bool valid = false;
  int shape = 0;  // 1: all pairings 1; 2: one pairing 2; 3: two pairings 2 sharing a symbol
  std::string diagnosis;
};

inline SimpleValidation validate_simple(const DecompositionType& d) {
  SimpleValidation v;
  const std::size_t n = d.terms.size();
  if (n == 0) {
    v.diagnosis = "no terms";
    return v;
  }
  if (n > 10) {
    v.diagnosis = "more than 10 terms";
    return v;
  }
  for (const auto& t : d.terms)
    if (t.coeff <= 0) {
      v.diagnosis = "coefficients must be positive";
      return v;
    }
  auto m = pairing_matrix(d);
  std::vector<std::pair<std::size_t, std::size_t>> twos;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (m[a][b] == 2) {
        twos.emplace_back(a, b);
      } else if (m[a][b] != 1) {
        v.diagnosis = d.terms[a].symbol.text() + "." + d.terms[b].symbol.text() + " = " +
                      std::to_string(m[a][b]) + " is neither 1 nor 2";
        return v;
      }
    }
  if (twos.empty()) {
    if (n == 9) {
      v.diagnosis = "nine pairwise-1 symbols are not admissible (n != 9)";
      return v;
    }
    v.shape = 1;
  } else if (twos.size() == 1) {
    if (n == 10) {
      v.diagnosis = "one pairing 2 among ten symbols is not admissible (n != 10)";
      return v;
    }
    v.shape = 2;
  } else if (twos.size() == 2) {
    auto [a1, b1] = twos[0];
    auto [a2, b2] = twos[1];
    if (a1 != a2 && a1 != b2 && b1 != a2 && b1 != b2) {
      v.diagnosis = "the two pairings 2 must share a symbol";
      return v;
    }
    v.shape = 3;
  } else {
    v.diagnosis = "more than two pairings equal to 2";
    return v;
  }
  v.valid = true;
  return v;
}

/// Rows (coefficient, sorted (pairing, partner coefficient)) sorted, plus eps.
struct CanonicalSignature {
  using Row = std::pair<long long, std::vector<std::pair<long long, long long>>>;
  std::vector<Row> rows;
  int eps = 0;

  friend bool operator==(const CanonicalSignature& a, const CanonicalSignature& b) {
    return a.eps == b.eps && a.rows == b.rows;
  }
  friend bool operator<(const CanonicalSignature& a, const CanonicalSignature& b) {
    return std::tie(a.rows, a.eps) < std::tie(b.rows, b.eps);
  }

  std::string text() const {
    std::string s;
    for (const auto& [c, partners] : rows) {
      s += "(" + std::to_string(c) + ":";
      for (const auto& [p, pc] : partners) s += " " + std::to_string(p) + "/" + std::to_string(pc);
      s += ")";
    }
    return s + (eps ? "+K" : "");
  }
};

inline CanonicalSignature canonical_type(const DecompositionType& d) {
  auto v = validate_simple(d);
  if (!v.valid) throw PreconditionError("not a simple decomposition type: " + v.diagnosis);
  auto m = pairing_matrix(d);
  CanonicalSignature sig;
  sig.eps = d.eps;
  for (std::size_t a = 0; a < d.terms.size(); ++a) {
    CanonicalSignature::Row row{d.terms[a].coeff, {}};
    for (std::size_t b = 0; b < d.terms.size(); ++b)
      if (b != a) row.second.emplace_back(m[a][b], d.terms[b].coeff);
    std::sort(row.second.begin(), row.second.end());
    sig.rows.push_back(std::move(row));
  }
  std::sort(sig.rows.begin(), sig.rows.end());
  return sig;
}

inline bool same_type(const DecompositionType& a, const DecompositionType& b) {
  return canonical_type(a) == canonical_type(b);
}

}  // namespace enriques
