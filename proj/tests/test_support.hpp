#pragma once

#include <enriques/verification.hpp>

namespace enriques::testing {

inline PicClass half_fiber(int i, int eps = 0) { return PicClass(isotropic_generator(i), eps); }

inline PicClass pair_class(int i, int j, int eps = 0) {
  return PicClass(two_isotropic_generator(i, j), eps);
}

inline PicClass of(const std::string& decomposition) {
  return realize(parse_decomposition(decomposition));
}

inline ComponentRecord record(const std::string& label) {
  for (const auto& c : component_table())
    if (c.label == label) return c;
  throw Error("no record " + label);
}

// Gram form evaluated in machine integers, independent of the library's
// inner product.
inline long long gram_form(const std::array<long long, kRank>& a, const std::array<long long, kRank>& b) {
  auto g = basis_gram();
  long long s = 0;
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j) s += a[i] * g[i][j] * b[j];
  return s;
}

}  // namespace enriques::testing
