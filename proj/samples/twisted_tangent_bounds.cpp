// Bounds on h1(T(-H)) of the K3 cover for a decomposition type, and the
// resulting fiber dimension when the type is a recorded component.

#include <iostream>
#include <string>

#include <enriques/moduli.hpp>

int main(int argc, char** argv) {
  const std::string text = argc > 1 ? argv[1] : "2E1+2E{1,2}";
  try {
    enriques::DecompositionType d = enriques::parse_decomposition(text);
    enriques::H1Outcome out = enriques::h1_tangent_k3(d);
    if (auto* r = std::get_if<enriques::H1Interval>(&out)) {
      std::cout << "h1 in [" << r->lower << "," << r->upper << "]" << (r->exact ? " (exact)" : "")
                << "\n  " << enriques::summary(r->certificate) << "\n";
    } else {
      std::cout << "inconclusive: " << std::get<enriques::Inconclusive>(out).reason << "\n";
    }
    if (auto comp = enriques::component_record_of(d)) {
      enriques::FiberDimension f = enriques::fiber_dimension(*comp);
      std::cout << comp->label << ": fiber dimension " << f.value << " (split " << f.split.h1_H << ","
                << f.split.h1_HK << " by " << enriques::to_string(f.split.rule) << ")\n";
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
