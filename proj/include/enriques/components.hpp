#pragma once

// Irreducible components of the moduli of polarized Enriques surfaces with
// given genus g and phi-invariant, each represented by a decomposition type.
//
// The fixed rows (g <= 10, and g = 13, 17) are stored in an embedded text
// table; phi = 1 and phi = 2 come in infinite families generated by rule.
// Fiber dimensions, h1 totals and splits stored here are reference values for
// verification; where the engine cannot derive a value from lattice data
// (h1_total, split) the stored value is used and the certificate says so.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "decomposition.hpp"

namespace enriques {

struct ComponentRecord {
  std::string label;
  int g = 0;
  int phi = 0;
  DecompositionType dtype;
  std::optional<long long> fiber_dim;                    // reference fiber dimension
  std::optional<long long> h1_total;                     // reference K3 total, used when not derivable
  std::optional<std::pair<long long, long long>> split;  // reference (h1(T(-H)), h1(T(-H-K)))
  std::optional<long long> cap;                          // reference extendability cap
};

class NotInDatabase : public Error {
 public:
  using Error::Error;
};

namespace detail {

// label | g | phi | type | fiber dim | h1 total | split | cap
inline constexpr std::string_view kComponentTable = R"(# enriques-components v1
E_{3,2}             |  3 | 2 | E1+E{1,2}        | 6 | - | -   | -
E_{4,2}             |  4 | 2 | E1+E2+E3         | 4 | - | -   | -
E_{5,2}^{(I)}       |  5 | 2 | 2E1+E{1,2}       | 3 | - | -   | -
E_{5,2}^{(II)^+}    |  5 | 2 | 2E1+2E2          | 6 | - | 6,4 | -
E_{5,2}^{(II)^-}    |  5 | 2 | 2E1+2E2+K        | 4 | - | 4,6 | -
E_{6,2}             |  6 | 2 | 2E1+E2+E3        | 2 | - | -   | -
E_{6,3}             |  6 | 3 | E1+E2+E{1,2}     | 0 | - | -   | -
E_{7,2}^{(I)}       |  7 | 2 | 3E1+E{1,2}       | 1 | 2 | -   | -
E_{7,2}^{(II)}      |  7 | 2 | 3E1+2E2          | 3 | - | -   | -
E_{7,3}             |  7 | 3 | E1+E2+E3+E4      | 1 | 2 | -   | 1
E_{8,2}             |  8 | 2 | 3E1+E2+E3        | 0 | - | -   | -
E_{8,3}             |  8 | 3 | 2E1+E3+E{1,2}    | 0 | - | -   | -
E_{9,2}^{(I)}       |  9 | 2 | 4E1+E{1,2}       | 0 | 0 | -   | -
E_{9,2}^{(II)^+}    |  9 | 2 | 4E1+2E2          | 2 | - | 2,1 | -
E_{9,2}^{(II)^-}    |  9 | 2 | 4E1+2E2+K        | 1 | - | 1,2 | -
E_{9,3}^{(I)}       |  9 | 3 | 2E1+E2+E{1,2}    | 0 | - | -   | -
E_{9,3}^{(II)}      |  9 | 3 | 2E1+2E2+E3       | 1 | - | -   | 1
E_{9,4}^+           |  9 | 4 | 2E1+2E{1,2}      | 3 | - | 3,0 | 3
E_{9,4}^-           |  9 | 4 | 2E1+2E{1,2}+K    | 0 | - | 0,3 | -
E_{10,2}            | 10 | 2 | 4E1+E2+E3        | 0 | - | -   | -
E_{10,3}^{(I)}      | 10 | 3 | 2E1+E2+E3+E4     | 0 | - | -   | -
E_{10,3}^{(II)}     | 10 | 3 | 3E1+3E2          | 2 | - | -   | 2
E_{10,4}            | 10 | 4 | E1+E2+2E{1,2}    | 0 | - | -   | -
E_{13,3}^{(I)}      | 13 | 3 | 3E1+E2+E3+E4     | 0 | - | -   | -
E_{13,3}^{(II)}     | 13 | 3 | 4E1+3E2          | 1 | - | -   | 1
E_{13,4}^{(I)}      | 13 | 4 | 2E1+2E2+E{1,2}   | 0 | - | -   | -
E_{13,4}^{(II)^+}   | 13 | 4 | 2E1+2E2+2E3      | 1 | 1 | 1,0 | 1
E_{13,4}^{(II)^-}   | 13 | 4 | 2E1+2E2+2E3+K    | 0 | 1 | 0,1 | -
E_{13,4}^{(III)}    | 13 | 4 | 3E1+2E{1,2}      | 0 | - | -   | -
E_{17,4}^{(I)}      | 17 | 4 | 3E1+2E2+2E3      | 0 | - | -   | -
E_{17,4}^{(II)}     | 17 | 4 | 3E1+2E2+E{1,2}   | 0 | - | -   | -
E_{17,4}^{(III)^+}  | 17 | 4 | 4E1+2E{1,2}      | 0 | - | -   | -
E_{17,4}^{(III)^-}  | 17 | 4 | 4E1+2E{1,2}+K    | 0 | - | -   | -
E_{17,4}^{(IV)^+}   | 17 | 4 | 4E1+4E2          | 1 | - | 1,0 | 1
E_{17,4}^{(IV)^-}   | 17 | 4 | 4E1+4E2+K        | 0 | - | 0,1 | -
)";

inline std::string trim(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string_view::npos) return {};
  std::size_t b = s.find_last_not_of(" \t");
  return std::string(s.substr(a, b - a + 1));
}

inline std::vector<std::string> split_fields(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t p = line.find(sep, start);
    out.push_back(trim(line.substr(start, p == std::string_view::npos ? line.npos : p - start)));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

inline std::optional<long long> optional_int(const std::string& s) {
  if (s == "-") return std::nullopt;
  return std::stoll(s);
}

inline std::vector<ComponentRecord> load_component_table() {
  std::vector<ComponentRecord> rows;
  std::istringstream in{std::string(kComponentTable)};
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    auto f = split_fields(line, '|');
    if (f.size() != 8) throw Error("malformed component row: " + line);
    ComponentRecord r;
    r.label = f[0];
    r.g = std::stoi(f[1]);
    r.phi = std::stoi(f[2]);
    r.dtype = parse_decomposition(f[3]);
    r.fiber_dim = optional_int(f[4]);
    r.h1_total = optional_int(f[5]);
    if (f[6] != "-") {
      auto s = split_fields(f[6], ',');
      r.split = std::make_pair(std::stoll(s.at(0)), std::stoll(s.at(1)));
    }
    r.cap = optional_int(f[7]);
    rows.push_back(std::move(r));
  }
  return rows;
}

inline DecompositionType dtype_of(std::initializer_list<std::pair<long long, Symbol>> terms,
                                  int eps = 0) {
  DecompositionType d;
  for (auto [c, s] : terms) d.terms.push_back({c, s});
  d.eps = eps;
  return d;
}

inline std::string family_label(int g, int phi, const std::string& suffix) {
  return "E_{" + std::to_string(g) + "," + std::to_string(phi) + "}" + suffix;
}

}  // namespace detail

/// The fixed rows of the embedded table.
inline const std::vector<ComponentRecord>& component_table() {
  static const std::vector<ComponentRecord> rows = detail::load_component_table();
  return rows;
}

/// phi = 1: H ~ (g-1)E1 + E2, with fiber dimension max(0, 10 - g).
inline std::vector<ComponentRecord> phi_one_family(int g) {
  if (g < 2) throw PreconditionError("phi = 1 needs g >= 2");
  ComponentRecord r;
  r.label = detail::family_label(g, 1, "");
  r.g = g;
  r.phi = 1;
  r.dtype = detail::dtype_of({{g - 1, Symbol{1, 0}}, {1, Symbol{2, 0}}});
  r.fiber_dim = std::max(0, 10 - g);
  return {r};
}

/// phi = 2 components by g mod 4.
inline std::vector<ComponentRecord> phi_two_family(int g) {
  if (g < 3) throw PreconditionError("phi = 2 needs g >= 3");
  const Symbol e1{1, 0}, e2{2, 0}, e3{3, 0}, e12{1, 2};
  std::vector<ComponentRecord> out;
  auto add = [&](const std::string& suffix, DecompositionType d) {
    ComponentRecord r;
    r.label = detail::family_label(g, 2, suffix);
    r.g = g;
    r.phi = 2;
    r.dtype = std::move(d);
    out.push_back(std::move(r));
  };
  if (g == 3) {
    add("", detail::dtype_of({{1, e1}, {1, e12}}));
  } else if (g % 2 == 0) {
    add("", detail::dtype_of({{(g - 2) / 2, e1}, {1, e2}, {1, e3}}));
  } else {
    long long k = (g - 1) / 2;
    add("^{(I)}", detail::dtype_of({{k, e1}, {1, e12}}));
    if (g % 4 == 3) {
      add("^{(II)}", detail::dtype_of({{k, e1}, {2, e2}}));
    } else {
      add("^{(II)^+}", detail::dtype_of({{k, e1}, {2, e2}}));
      add("^{(II)^-}", detail::dtype_of({{k, e1}, {2, e2}}, 1));
    }
  }
  // Rows of the fixed table carry reference data; families beyond g = 10
  // are generically finite and h1 vanishes on the (I) branch.
  for (auto& r : out) {
    auto it = std::find_if(component_table().begin(), component_table().end(),
                           [&](const ComponentRecord& t) { return t.label == r.label; });
    if (it != component_table().end()) {
      r = *it;
    } else {
      r.fiber_dim = 0;
      if (r.label.find("(I)") != std::string::npos && r.label.find("(II)") == std::string::npos)
        r.h1_total = 0;
    }
  }
  return out;
}

inline bool components_covered(int g, int phi) {
  if (phi == 1) return g >= 2;
  if (phi == 2) return g >= 3;
  if (g >= 2 && g <= 10) return true;
  return (g == 13 && (phi == 3 || phi == 4)) || (g == 17 && phi == 4);
}

inline std::vector<ComponentRecord> components(int g, int phi) {
  if (g < 2 || phi < 1) throw PreconditionError("need g >= 2 and phi >= 1");
  // phi^2 <= 2g - 2 leaves nothing to list otherwise.
  if (static_cast<long long>(phi) * phi > 2LL * g - 2) return {};
  if (!components_covered(g, phi))
    throw NotInDatabase("E_{" + std::to_string(g) + "," + std::to_string(phi) +
                        "} is not in the component database");
  if (phi == 1) return phi_one_family(g);
  if (phi == 2) return phi_two_family(g);
  std::vector<ComponentRecord> out;
  for (const auto& r : component_table())
    if (r.g == g && r.phi == phi) out.push_back(r);
  return out;
}

/// Component whose decomposition type matches d up to relabeling. When H is
/// not 2-divisible in Num, H and H + K_S lie in the same component, so the
/// torsion bit is ignored for the match.
inline std::optional<ComponentRecord> component_record_of(const DecompositionType& d) {
  const int g = static_cast<int>(genus(realize(d)));
  DecompositionType flipped = d;
  flipped.eps ^= 1;
  const bool same_component = divisibility(realize(d).num) % 2 != 0;
  std::vector<CanonicalSignature> sigs{canonical_type(d)};
  if (same_component) sigs.push_back(canonical_type(flipped));

  std::vector<ComponentRecord> pool;
  for (const auto& r : component_table())
    if (r.g == g) pool.push_back(r);
  for (auto& r : phi_one_family(g)) pool.push_back(std::move(r));
  if (g >= 3)
    for (auto& r : phi_two_family(g)) pool.push_back(std::move(r));
  for (const auto& sig : sigs)
    for (const auto& r : pool)
      if (canonical_type(r.dtype) == sig) return r;
  return std::nullopt;
}

inline std::optional<std::string> component_of(const DecompositionType& d) {
  if (auto r = component_record_of(d)) return r->label;
  return std::nullopt;
}

/// The component containing (S, H + K_S), if recorded.
inline std::optional<ComponentRecord> partner_component(const ComponentRecord& r) {
  DecompositionType d = r.dtype;
  d.eps ^= 1;
  return component_record_of(d);
}

}  // namespace enriques
