#pragma once

// Bounds on h1 of the twisted tangent bundle T(-H) of the K3 cover of an
// unnodal Enriques surface, and the fiber dimensions of the moduli maps that
// they determine.
//
// Two engines produce bounds:
//  * double cover of a quadric, given by two half-fibers F1, F2 with
//    F1.F2 = 1: h1 <= pullback_h1 + branch_upper, equality when pullback_h1 = 0;
//  * embedding as a complete intersection of three quadrics, given by G1, G2
//    with G1.G2 = 2: h1 <= mult_corank + 6 euler_h1 + 3 normal_h0, equality
//    when mult_corank = euler_h1 = 0, and h1 = 12 when H = G1 + G2.
// h1_tangent_k3 runs a fixed strategy over these engines for a decomposition
// type and returns a certified interval.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cohomology.hpp"
#include "components.hpp"
#include "decomposition.hpp"
#include "isotropic.hpp"

namespace enriques {

enum class BoundMethod { DoubleCover, QuadricIntersection, ClosedForm, Reference };

inline std::string to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::DoubleCover: return "double-cover";
    case BoundMethod::QuadricIntersection: return "quadric-intersection";
    case BoundMethod::ClosedForm: return "closed-form";
    case BoundMethod::Reference: return "reference";
  }
  return "?";
}

struct Certificate {
  BoundMethod method = BoundMethod::DoubleCover;
  std::string recipe;
  std::vector<std::string> auxiliary_names;
  std::vector<PicClass> auxiliary;
  // double cover
  std::optional<long long> pullback_h1;
  std::optional<long long> branch_lower, branch_upper;
  // quadric intersection
  std::optional<long long> euler_h1;
  std::optional<long long> normal_h0;
  std::optional<long long> mult_corank;  // upper bound on the corank
  std::string mult_corank_rule;
  // (3 h0(2G1+2G2-H), 3 h0(2G1+2G2-H+K)) when the coboundary is an isomorphism
  std::optional<std::pair<long long, long long>> pushforward;
  std::string note;
};

struct H1Interval {
  long long lower = 0;
  long long upper = 0;
  bool exact = false;
  Certificate certificate;
};

struct Inconclusive {
  std::string reason;
};

using H1Outcome = std::variant<H1Interval, Inconclusive>;

class InconclusiveError : public Error {
 public:
  using Error::Error;
};

inline std::string summary(const Certificate& c) {
  std::string s = to_string(c.method);
  if (!c.recipe.empty()) s += " [" + c.recipe + "]";
  if (!c.auxiliary_names.empty()) {
    s += " with ";
    for (std::size_t i = 0; i < c.auxiliary_names.size(); ++i) {
      if (i) s += ", ";
      s += c.auxiliary_names[i];
    }
  }
  auto num = [](long long v) { return std::to_string(v); };
  if (c.pullback_h1) s += "; pullback h1 = " + num(*c.pullback_h1);
  if (c.branch_lower)
    s += "; branch sections in [" + num(*c.branch_lower) + "," + num(*c.branch_upper) + "]";
  if (c.euler_h1) s += "; euler h1 = " + num(*c.euler_h1);
  if (c.normal_h0) s += "; normal h0 = " + num(*c.normal_h0);
  if (c.mult_corank) s += "; corank <= " + num(*c.mult_corank) + " (" + c.mult_corank_rule + ")";
  if (!c.note.empty()) s += "; " + c.note;
  return s;
}

// ---------------------------------------------------------------------------
// Double cover of a quadric.

namespace detail {

inline void require_double_cover_input(const PicClass& h, const PicClass& f1, const PicClass& f2) {
  if (!is_half_fiber(f1) || !is_half_fiber(f2))
    throw PreconditionError("F1 and F2 must be half-fibers");
  if (inner(f1, f2) != 1) throw PreconditionError("F1.F2 must be 1");
  if (square(h) <= 0 || !is_nef(h)) throw PreconditionError("H must be big and nef");
}

inline void require_quadric_input(const PicClass& h, const PicClass& g1, const PicClass& g2) {
  if (!is_half_fiber(g1) || !is_half_fiber(g2))
    throw PreconditionError("G1 and G2 must be primitive isotropic effective");
  if (inner(g1, g2) != 2) throw PreconditionError("G1.G2 must be 2");
  if (!is_nef(g1 + g2)) throw PreconditionError("G1 + G2 must be nef");
  if (square(h) < 4 || !is_nef(h)) throw PreconditionError("H must be big and nef with H^2 >= 4");
}

}  // namespace detail

/// Sum of h1(H - 2Fi) and h1(H - 2Fi + K) over i = 1, 2.
inline long long tangent_pullback_h1(const PicClass& h, const PicClass& f1, const PicClass& f2) {
  detail::require_double_cover_input(h, f1, f2);
  return k3_coh(h - 2 * f1).h1 + k3_coh(h - 2 * f2).h1;
}

struct BranchBounds {
  long long lower = 0;
  long long upper = 0;
  bool exact = false;
  std::string rule;
};

/// h0 of the restriction of 4F1 + 4F2 - H to the ramification curve, bounded
/// through 0 -> A -> B -> B|R -> 0 with A = 2F1 + 2F2 - H, B = 4F1 + 4F2 - H
/// on the K3 cover.
inline BranchBounds branch_restriction_bounds(const PicClass& h, const PicClass& f1,
                                              const PicClass& f2) {
  detail::require_double_cover_input(h, f1, f2);
  if (inner(f1 + f2, h) > 8) return {0, 0, true, "negative degree on the ramification curve"};
  CohTriple a = k3_coh(2 * f1 + 2 * f2 - h);
  CohTriple b = k3_coh(4 * f1 + 4 * f2 - h);
  long long base = b.h0 - a.h0;
  long long upper = base + a.h1;
  long long lower = std::max<long long>({0, base, base + a.h1 - b.h1});
  return {lower, upper, lower == upper, "restriction sequence"};
}

inline H1Interval double_cover_bound(const PicClass& h, const PicClass& f1, const PicClass& f2) {
  H1Interval r;
  long long al = tangent_pullback_h1(h, f1, f2);
  BranchBounds be = branch_restriction_bounds(h, f1, f2);
  r.upper = al + be.upper;
  r.lower = al == 0 ? be.lower : 0;
  r.exact = al == 0 && be.exact;
  r.certificate.method = BoundMethod::DoubleCover;
  r.certificate.auxiliary = {f1, f2};
  r.certificate.pullback_h1 = al;
  r.certificate.branch_lower = be.lower;
  r.certificate.branch_upper = be.upper;
  r.certificate.note = be.rule;
  return r;
}

// ---------------------------------------------------------------------------
// Complete intersection of three quadrics.

struct EmbeddingTerms {
  long long euler_h1 = 0;   // h1(H - G1 - G2) + h1(H - G1 - G2 + K)
  long long normal_h0 = 0;  // h0(2G1 + 2G2 - H) + h0(2G1 + 2G2 - H + K)
  bool hyperplane_class = false;  // H = G1 + G2 numerically
};

inline EmbeddingTerms embedding_terms(const PicClass& h, const PicClass& g1, const PicClass& g2) {
  detail::require_quadric_input(h, g1, g2);
  EmbeddingTerms t;
  PicClass rest = h - g1 - g2;
  t.hyperplane_class = rest.num.is_zero();
  t.euler_h1 = k3_coh(rest).h1;
  t.normal_h0 = k3_coh(2 * g1 + 2 * g2 - h).h0;
  return t;
}

/// What is known about the corank of mu_{G1+G2, H-G1-G2} on the K3 cover.
struct CorankEvidence {
  enum class Kind { Surjective, UpperBound, Unknown } kind = Kind::Unknown;
  long long upper = 0;
  std::string rule;

  static CorankEvidence surjective(std::string rule) {
    return {Kind::Surjective, 0, std::move(rule)};
  }
  static CorankEvidence bounded(long long u, std::string rule) {
    return {Kind::UpperBound, u, std::move(rule)};
  }
  static CorankEvidence unknown() { return {}; }
};

inline H1Outcome quadric_intersection_bound(const PicClass& h, const PicClass& g1,
                                            const PicClass& g2, const CorankEvidence& corank) {
  EmbeddingTerms t = embedding_terms(h, g1, g2);
  H1Interval r;
  r.certificate.method = BoundMethod::QuadricIntersection;
  r.certificate.auxiliary = {g1, g2};
  if (t.hyperplane_class) {
    r.lower = r.upper = 12;
    r.exact = true;
    r.certificate.note = "H = G1 + G2";
    return r;
  }
  if (corank.kind == CorankEvidence::Kind::Unknown)
    return Inconclusive{"corank of the multiplication map is not certified"};
  long long eps = corank.kind == CorankEvidence::Kind::Surjective ? 0 : corank.upper;
  r.certificate.euler_h1 = t.euler_h1;
  r.certificate.normal_h0 = t.normal_h0;
  r.certificate.mult_corank = eps;
  r.certificate.mult_corank_rule = corank.rule;
  r.upper = eps + 6 * t.euler_h1 + 3 * t.normal_h0;
  r.lower = 3 * t.normal_h0;
  r.exact = eps == 0 && t.euler_h1 == 0;
  if (r.exact) {
    PicClass a = 2 * g1 + 2 * g2 - h;
    r.certificate.pushforward =
        std::make_pair(3 * coh(a).h0, 3 * coh(with_canonical(a)).h0);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Closed forms for the two-term families.

/// Cohomology of O(a,b) on the smooth quadric surface.
inline CohTriple quadric_line_bundle_coh(long long a, long long b) {
  long long h0 = (a >= 0 && b >= 0) ? (a + 1) * (b + 1) : 0;
  long long h2 = (a <= -2 && b <= -2) ? (-1 - a) * (-1 - b) : 0;
  long long chi_ab = (a + 1) * (b + 1);
  return {h0, h0 + h2 - chi_ab, h2, true};
}

/// Corank of the coboundary in the count for H = kE1 + 2E2; a geometric
/// constant, 1 at k = 2 and 0 beyond.
inline long long coboundary_corank_k_2(long long k) { return k == 2 ? 1 : 0; }

/// h1 on the K3 cover for H = kE1 + 2E2, k >= 2.
inline long long h1_k3_family_k_2(long long k) {
  if (k < 2) throw PreconditionError("the kE1+2E2 family needs k >= 2");
  return quadric_line_bundle_coh(4 - k, 2).h0 + coboundary_corank_k_2(k);
}

/// Sections of O(g+1,1) through the branch points; a geometric constant that
/// vanishes up to g = 10 and equals 2g - 20 beyond.
inline long long branch_ideal_sections_phi_one(long long g) { return g <= 10 ? 0 : 2 * g - 20; }

/// h1 on the K3 cover for H = (g-1)E1 + E2.
inline long long h1_k3_phi_one(long long g) {
  if (g < 2) throw PreconditionError("phi = 1 needs g >= 2");
  return 20 - 2 * g + branch_ideal_sections_phi_one(g);
}

/// h1 on the K3 cover for H = kE1 + E2 + E3 through the double cover with
/// F1 = E1, F2 = E2.
inline long long h1_k3_family_k_1_1(long long k) {
  if (k < 2) throw PreconditionError("the kE1+E2+E3 family needs k >= 2");
  PicClass e1(isotropic_generator(1)), e2(isotropic_generator(2)), e3(isotropic_generator(3));
  PicClass h = k * e1 + e2 + e3;
  H1Interval r = double_cover_bound(h, e1, e2);
  if (!r.exact) throw InconclusiveError("double cover bound is not exact for this family");
  return r.lower;
}

// ---------------------------------------------------------------------------
// Strategy over a decomposition type.

namespace detail {

struct Summand {
  long long coeff = 0;
  PicClass cls;
  std::string name;
};

struct Instance {
  std::vector<Summand> terms;
  int eps = 0;
  PicClass h;
  std::vector<std::vector<long long>> pairing;

  void refresh() {
    NumClass n;
    for (const auto& t : terms) n += Integer(t.coeff) * t.cls.num;
    h = PicClass(n, eps);
    pairing.assign(terms.size(), std::vector<long long>(terms.size()));
    for (std::size_t a = 0; a < terms.size(); ++a)
      for (std::size_t b = 0; b < terms.size(); ++b)
        pairing[a][b] = to_ll(inner(terms[a].cls, terms[b].cls));
  }
};

inline Instance instance_of(const DecompositionType& d) {
  Instance inst;
  for (const auto& t : d.terms)
    inst.terms.push_back({t.coeff, PicClass(t.symbol.generator()), t.symbol.text()});
  inst.eps = d.eps;
  inst.refresh();
  return inst;
}

// Injective maps from pattern terms to instance terms that preserve pairings,
// with instance coefficients at least the pattern's (or equal, if exact).
inline std::vector<std::vector<std::size_t>> embeddings(const Instance& pattern,
                                                        const Instance& inst, bool exact) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = pattern.terms.size();
  if (exact && n != inst.terms.size()) return out;
  std::vector<std::size_t> map(n);
  std::vector<bool> used(inst.terms.size(), false);
  std::function<void(std::size_t)> go = [&](std::size_t t) {
    if (t == n) {
      out.push_back(map);
      return;
    }
    for (std::size_t c = 0; c < inst.terms.size(); ++c) {
      if (used[c]) continue;
      long long need = pattern.terms[t].coeff, have = inst.terms[c].coeff;
      if (exact ? have != need : have < need) continue;
      bool ok = true;
      for (std::size_t s = 0; s < t && ok; ++s)
        ok = pattern.pairing[s][t] == inst.pairing[map[s]][c];
      if (!ok) continue;
      used[c] = true;
      map[t] = c;
      go(t + 1);
      used[c] = false;
    }
  };
  go(0);
  return out;
}

inline Instance pattern_instance(const std::string& text) {
  return instance_of(parse_decomposition(text));
}

// m with v = m * l, if any.
inline std::optional<long long> multiple_of(const NumClass& v, const NumClass& l) {
  for (std::size_t i = 0; i < kRank; ++i) {
    if (l[i] == 0) continue;
    if (v[i] % l[i] != 0) return std::nullopt;
    Integer m = v[i] / l[i];
    if (v != m * l) return std::nullopt;
    return to_ll(m);
  }
  return std::nullopt;
}

// Search for a chain of pencils (and optionally a leading power of G1 + G2)
// certifying that mu_{G1+G2, H-G1-G2} is surjective on the K3 cover.
inline CorankEvidence certify_corank(const Instance& inst, std::size_t i1, std::size_t i2) {
  const PicClass l = inst.terms[i1].cls + inst.terms[i2].cls;
  std::vector<long long> counts;
  for (const auto& t : inst.terms) counts.push_back(t.coeff);
  --counts[i1];
  --counts[i2];
  PicClass rest = inst.h - l;

  if (auto m = multiple_of(rest.num, l.num); m && *m >= 1) {
    return CorankEvidence::surjective("projective normality: mu_{L," + std::to_string(*m) +
                                      "L} with L = " + inst.terms[i1].name + "+" +
                                      inst.terms[i2].name);
  }

  // Depth-first search over orderings of the remaining pencils.
  const Cover cover = Cover::K3;
  std::set<std::vector<long long>> dead;
  std::size_t budget = 50000;
  std::vector<std::size_t> order;
  std::function<bool(const PicClass&, std::vector<long long>&)> chain =
      [&](const PicClass& current, std::vector<long long>& left) -> bool {
    bool done = std::all_of(left.begin(), left.end(), [](long long v) { return v == 0; });
    if (done) return true;
    if (dead.count(left) || budget == 0) return false;
    --budget;
    for (std::size_t i = 0; i < left.size(); ++i) {
      if (left[i] == 0) continue;
      const PicClass& part = inst.terms[i].cls;
      if (coh_on(current - part, cover).h1 != 0) continue;
      --left[i];
      order.push_back(i);
      if (chain(current + part, left)) return true;
      order.pop_back();
      ++left[i];
    }
    dead.insert(left);
    return false;
  };

  auto describe = [&](const std::string& head) {
    std::string s;
    for (std::size_t i : order) s += (s.empty() ? "" : ", ") + inst.terms[i].name;
    return head + (s.empty() ? "none" : s);
  };

  auto replay = [&](const PicClass& start) {
    std::vector<PicClass> parts;
    for (std::size_t i : order) parts.push_back(inst.terms[i].cls);
    return certify_mult_surjective(start, parts, cover).surjective;
  };

  {
    std::vector<long long> left = counts;
    order.clear();
    if (chain(l, left) && replay(l)) return CorankEvidence::surjective(describe("pencil chain: "));
  }
  long long m = std::min(counts[i1], counts[i2]);
  if (m >= 1) {
    std::vector<long long> left = counts;
    left[i1] -= m;
    left[i2] -= m;
    PicClass start = PicClass((m + 1) * l.num, 0);
    order.clear();
    dead.clear();
    budget = 50000;
    if (chain(start, left) && replay(start))
      return CorankEvidence::surjective(describe("projective normality for " + std::to_string(m) +
                                                 "L, then pencils: "));
  }
  // A single remaining pencil still gives a bound.
  long long total = 0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] > 0) {
      total += counts[i];
      last = i;
    }
  if (total == 1) {
    CorankBound b = mult_corank_bound(l, inst.terms[last].cls, cover);
    return CorankEvidence::bounded(b.upper, "single pencil " + inst.terms[last].name);
  }
  return CorankEvidence::unknown();
}

inline std::optional<H1Interval> run_double_cover(const Instance& inst, const PicClass& f1,
                                                  const PicClass& f2, const std::string& n1,
                                                  const std::string& n2, const std::string& recipe) {
  H1Interval r = double_cover_bound(inst.h, f1, f2);
  r.certificate.auxiliary_names = {n1, n2};
  r.certificate.recipe = recipe;
  return r;
}

inline std::optional<H1Interval> run_quadric(const Instance& inst, std::size_t i1, std::size_t i2,
                                             const std::string& recipe) {
  const auto& g1 = inst.terms[i1];
  const auto& g2 = inst.terms[i2];
  CorankEvidence ev = (inst.h - g1.cls - g2.cls).num.is_zero() ? CorankEvidence::unknown()
                                                               : certify_corank(inst, i1, i2);
  H1Outcome out = quadric_intersection_bound(inst.h, g1.cls, g2.cls, ev);
  auto* r = std::get_if<H1Interval>(&out);
  if (!r) return std::nullopt;
  r->certificate.auxiliary_names = {g1.name, g2.name};
  r->certificate.recipe = recipe;
  return *r;
}

inline std::string name_of(const NumClass& v) { return to_string(v); }

// Recipes for the eight patterns whose presence forces h1 = 0.
struct VanishingPattern {
  std::string text;
  enum class Recipe { AuxiliaryPair, FirstWithEach, FirstSecond, QuadricEitherSide, Quadric } recipe;
};

inline const std::vector<VanishingPattern>& vanishing_patterns() {
  using R = VanishingPattern::Recipe;
  static const std::vector<VanishingPattern> p = {
      {"E1+E2+E3+E4+E5", R::AuxiliaryPair}, {"2E1+E2+E3+E4", R::FirstWithEach},
      {"3E1+E2+E3", R::FirstWithEach},      {"5E1+3E2", R::FirstSecond},
      {"2E1+E3+E{1,2}", R::FirstSecond},    {"E1+E2+E{1,2}", R::QuadricEitherSide},
      {"3E1+2E{1,2}", R::Quadric},          {"2E1+3E{1,2}", R::Quadric},
  };
  return p;
}

inline std::optional<H1Interval> try_vanishing_patterns(const Instance& inst) {
  using R = VanishingPattern::Recipe;
  for (const auto& pat : vanishing_patterns()) {
    Instance p = pattern_instance(pat.text);
    const std::string recipe = "contains " + pat.text;
    for (const auto& sigma : embeddings(p, inst, false)) {
      auto term = [&](std::size_t t) -> const Summand& { return inst.terms[sigma[t]]; };
      std::vector<H1Interval> tried;
      auto exact = [&](std::optional<H1Interval> r) {
        return r && r->exact ? r : std::optional<H1Interval>{};
      };
      switch (pat.recipe) {
        case R::AuxiliaryPair: {
          // Half-fibers meeting each of the five pattern classes once.
          PicClass s;
          for (std::size_t t = 0; t < 5; ++t) s = s + term(t).cls;
          std::vector<NumClass> cands;
          for (auto& nu : enumerate_slice(s, 5)) {
            bool ok = true;
            for (std::size_t t = 0; t < 5 && ok; ++t) ok = inner(nu, term(t).cls.num) == 1;
            if (ok) cands.push_back(nu);
          }
          std::size_t attempts = 0;
          for (std::size_t x = 0; x < cands.size() && attempts < 400; ++x)
            for (std::size_t y = x + 1; y < cands.size() && attempts < 400; ++y) {
              if (inner(cands[x], cands[y]) != 1) continue;
              ++attempts;
              auto r = exact(run_double_cover(inst, PicClass(cands[x]), PicClass(cands[y]),
                                              name_of(cands[x]), name_of(cands[y]), recipe));
              if (r) return r;
            }
          break;
        }
        case R::FirstWithEach:
          for (std::size_t t = 1; t < p.terms.size(); ++t)
            if (auto r = exact(run_double_cover(inst, term(0).cls, term(t).cls, term(0).name,
                                                term(t).name, recipe)))
              return r;
          break;
        case R::FirstSecond:
          if (auto r = exact(run_double_cover(inst, term(0).cls, term(1).cls, term(0).name,
                                              term(1).name, recipe)))
            return r;
          break;
        case R::QuadricEitherSide:
          if (auto r = exact(run_quadric(inst, sigma[0], sigma[2], recipe))) return r;
          if (auto r = exact(run_quadric(inst, sigma[1], sigma[2], recipe))) return r;
          break;
        case R::Quadric:
          if (auto r = exact(run_quadric(inst, sigma[0], sigma[1], recipe))) return r;
          break;
      }
    }
  }
  return std::nullopt;
}

// H = E1 + kE3 + lE12 with E1.E12 = 2 is rewritten as (k+1)E3 + F + (l-1)E12
// with F = E1 + E12 - E3, a half-fiber meeting E3 twice.
inline std::optional<Instance> rewrite_three_term(const Instance& inst) {
  if (inst.terms.size() != 3) return std::nullopt;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t c = 0; c < 3; ++c) {
      if (a == c || inst.pairing[a][c] != 2 || inst.terms[a].coeff != 1) continue;
      std::size_t b = 3 - a - c;
      if (inst.pairing[a][b] != 1 || inst.pairing[b][c] != 1) continue;
      Instance r;
      r.eps = inst.eps;
      const auto& ta = inst.terms[a];
      const auto& tb = inst.terms[b];
      const auto& tc = inst.terms[c];
      PicClass f = ta.cls + tc.cls - tb.cls;
      r.terms.push_back({tb.coeff + 1, tb.cls, tb.name});
      r.terms.push_back({1, f, ta.name + "+" + tc.name + "-" + tb.name});
      if (tc.coeff > 1) r.terms.push_back({tc.coeff - 1, tc.cls, tc.name});
      r.refresh();
      return r;
    }
  return std::nullopt;
}

struct TableRecipe {
  std::string text;
  bool quadric;  // otherwise double cover on the first two terms
};

inline const std::vector<TableRecipe>& table_recipes() {
  static const std::vector<TableRecipe> t = {
      {"4E1+4E2", false},     {"4E1+3E2", false},    {"2E1+2E2+2E3", false},
      {"3E1+3E2", false},     {"2E1+2E2+E3", false}, {"2E1+2E{1,2}", true},
      {"E1+E2+E3+E4", false}, {"2E1+E2+E3", false},  {"E1+E2+E3", false},
      {"E1+E{1,2}", true},
  };
  return t;
}

inline std::optional<H1Interval> try_table_recipes(const Instance& inst) {
  for (const auto& row : table_recipes()) {
    Instance p = pattern_instance(row.text);
    auto maps = embeddings(p, inst, true);
    if (maps.empty()) continue;
    const auto& sigma = maps.front();
    const std::string recipe = "type " + row.text;
    if (row.quadric) return run_quadric(inst, sigma[0], sigma[1], recipe);
    const auto& t0 = inst.terms[sigma[0]];
    const auto& t1 = inst.terms[sigma[1]];
    return run_double_cover(inst, t0.cls, t1.cls, t0.name, t1.name, recipe);
  }
  return std::nullopt;
}

inline std::vector<H1Interval> pair_search(const Instance& inst) {
  std::vector<H1Interval> out;
  for (std::size_t i = 0; i < inst.terms.size(); ++i)
    for (std::size_t j = i + 1; j < inst.terms.size(); ++j) {
      std::optional<H1Interval> r;
      if (inst.pairing[i][j] == 1)
        r = run_double_cover(inst, inst.terms[i].cls, inst.terms[j].cls, inst.terms[i].name,
                             inst.terms[j].name, "generator pair");
      else if (inst.pairing[i][j] == 2)
        r = run_quadric(inst, i, j, "generator pair");
      if (r) out.push_back(*r);
    }
  return out;
}

inline std::optional<H1Interval> closed_form(const Instance& inst) {
  if (inst.terms.size() != 2 || inst.pairing[0][1] != 1) return std::nullopt;
  long long a = std::min(inst.terms[0].coeff, inst.terms[1].coeff);
  long long b = std::max(inst.terms[0].coeff, inst.terms[1].coeff);
  H1Interval r;
  r.exact = true;
  r.certificate.method = BoundMethod::ClosedForm;
  if (a == 1) {
    r.lower = r.upper = h1_k3_phi_one(b + 1);
    r.certificate.recipe = "type (g-1)E1+E2, g = " + std::to_string(b + 1);
    r.certificate.note = "20 - 2g + sections of O(g+1,1) through the branch points (" +
                         std::to_string(branch_ideal_sections_phi_one(b + 1)) + ")";
  } else if (a == 2) {
    r.lower = r.upper = h1_k3_family_k_2(b);
    r.certificate.recipe = "type kE1+2E2, k = " + std::to_string(b);
    r.certificate.note = "h0(O(4-k,2)) = " + std::to_string(quadric_line_bundle_coh(4 - b, 2).h0) +
                         " plus coboundary corank " + std::to_string(coboundary_corank_k_2(b));
  } else {
    return std::nullopt;
  }
  return r;
}

}  // namespace detail

/// Strategy: vanishing patterns, then the recipes for the exceptional types,
/// then every pair of generators, then closed forms for two-term families.
/// The first exact result wins; otherwise the intervals are intersected.
inline H1Outcome h1_tangent_k3(const DecompositionType& d) {
  auto v = validate_simple(d);
  if (!v.valid) throw PreconditionError("not a simple decomposition type: " + v.diagnosis);
  detail::Instance inst = detail::instance_of(d);
  if (square(inst.h) <= 0) throw PreconditionError("decomposition type must have positive square");

  if (auto r = detail::try_vanishing_patterns(inst)) return *r;
  if (auto rw = detail::rewrite_three_term(inst)) {
    if (auto r = detail::try_vanishing_patterns(*rw)) {
      r->certificate.note += (r->certificate.note.empty() ? "" : "; ") +
                             std::string("after rewriting E1 + E{1,2} as (E1 + E{1,2} - E3) + E3");
      return *r;
    }
  }
  if (auto r = detail::try_table_recipes(inst)) return *r;

  std::vector<H1Interval> found = detail::pair_search(inst);
  for (const auto& r : found)
    if (r.exact) return r;

  std::optional<H1Interval> meet;
  for (const auto& r : found) {
    if (!meet) {
      meet = r;
      continue;
    }
    if (r.upper < meet->upper) {
      long long lo = std::max(meet->lower, r.lower);
      meet = r;
      meet->lower = lo;
    } else {
      meet->lower = std::max(meet->lower, r.lower);
    }
  }
  if (meet) meet->exact = meet->lower == meet->upper;

  if (auto cf = detail::closed_form(inst)) {
    if (meet && (cf->lower < meet->lower || cf->upper > meet->upper))
      throw Error("closed form value " + std::to_string(cf->lower) + " lies outside [" +
                  std::to_string(meet->lower) + "," + std::to_string(meet->upper) + "]");
    if (meet)
      cf->certificate.note += "; within computed bounds [" + std::to_string(meet->lower) + "," +
                              std::to_string(meet->upper) + "]";
    return *cf;
  }
  if (meet) return *meet;
  return Inconclusive{"no engine produced a bound for " + to_string(d)};
}

// ---------------------------------------------------------------------------
// Enriques side.

enum class SplitRule { Vanishing, Pushforward, SymmetricHalf, LowerBounds, Reference };

inline std::string to_string(SplitRule r) {
  switch (r) {
    case SplitRule::Vanishing: return "vanishing";
    case SplitRule::Pushforward: return "pushforward";
    case SplitRule::SymmetricHalf: return "symmetric-half";
    case SplitRule::LowerBounds: return "lower-bounds";
    case SplitRule::Reference: return "reference";
  }
  return "?";
}

struct EnriquesSplit {
  long long h1_H = 0;
  long long h1_HK = 0;
  SplitRule rule = SplitRule::Vanishing;
};

/// Dimension counts bounding the general fiber from below.
inline long long fiber_lower_bound(const ComponentRecord& c) {
  if (c.phi == 1) return std::max(0, 10 - c.g);
  if (c.phi != 2) return 0;
  if (c.g == 5) {
    if (c.label == "E_{5,2}^{(I)}") return 3;
    if (c.label == "E_{5,2}^{(II)^+}") return 6;
    if (c.label == "E_{5,2}^{(II)^-}") return 4;
  }
  return c.g >= 6 ? std::max(0, 8 - c.g) : 0;
}

inline EnriquesSplit enriques_split(const H1Interval& total, const ComponentRecord& comp) {
  if (!total.exact) throw PreconditionError("split needs an exact K3 total");
  const long long t = total.lower;
  EnriquesSplit s;
  const bool two_divisible = divisibility(realize(comp.dtype).num) % 2 == 0;
  if (t == 0) {
    s = {0, 0, SplitRule::Vanishing};
  } else if (total.certificate.pushforward) {
    s = {total.certificate.pushforward->first, total.certificate.pushforward->second,
         SplitRule::Pushforward};
  } else if (!two_divisible) {
    if (t % 2 != 0)
      throw Error("odd total " + std::to_string(t) + " on a component containing H and H+K");
    s = {t / 2, t / 2, SplitRule::SymmetricHalf};
  } else {
    auto partner = partner_component(comp);
    long long mine = fiber_lower_bound(comp);
    long long theirs = partner ? fiber_lower_bound(*partner) : 0;
    if (partner && mine + theirs == t) {
      s = {mine, theirs, SplitRule::LowerBounds};
    } else if (comp.split) {
      s = {comp.split->first, comp.split->second, SplitRule::Reference};
    } else {
      throw InconclusiveError("no rule splits the total " + std::to_string(t) + " for " +
                              comp.label);
    }
  }
  if (s.h1_H + s.h1_HK != t) throw Error("split does not add up to the K3 total");
  if (comp.split && (s.h1_H != comp.split->first || s.h1_HK != comp.split->second))
    throw Error("derived split disagrees with the reference split for " + comp.label);
  return s;
}

struct FiberDimension {
  long long value = 0;
  H1Interval total;
  EnriquesSplit split;
};

inline FiberDimension fiber_dimension(const ComponentRecord& comp) {
  H1Outcome out = h1_tangent_k3(comp.dtype);
  const H1Interval* computed = std::get_if<H1Interval>(&out);
  FiberDimension f;
  if (computed && computed->exact) {
    f.total = *computed;
  } else if (comp.h1_total) {
    long long ref = *comp.h1_total;
    if (computed && (ref < computed->lower || ref > computed->upper))
      throw Error("reference total for " + comp.label + " lies outside the computed bounds");
    f.total.lower = f.total.upper = ref;
    f.total.exact = true;
    f.total.certificate.method = BoundMethod::Reference;
    f.total.certificate.recipe = comp.label;
    if (computed)
      f.total.certificate.note = "computed bounds [" + std::to_string(computed->lower) + "," +
                                 std::to_string(computed->upper) + "] via " +
                                 summary(computed->certificate);
  } else {
    throw InconclusiveError(
        computed ? "h1 only bounded in [" + std::to_string(computed->lower) + "," +
                       std::to_string(computed->upper) + "] for " + comp.label
                 : std::get<Inconclusive>(out).reason);
  }
  f.split = enriques_split(f.total, comp);
  f.value = f.split.h1_H;
  if (f.value < fiber_lower_bound(comp))
    throw Error("fiber dimension of " + comp.label + " falls below its dimension-count bound");
  return f;
}

/// Upper bound k for k-extendability (phi >= 3); none when not extendable.
inline std::optional<long long> extendability_cap(const ComponentRecord& comp) {
  if (comp.phi < 3) throw PreconditionError("extendability caps need phi >= 3");
  long long v = fiber_dimension(comp).value;
  if (v == 0) return std::nullopt;
  return v;
}

}  // namespace enriques
