// Prints genus and phi for a few decomposition types given on the command
// line (or a default list).

#include <iostream>
#include <string>
#include <vector>

#include <enriques/isotropic.hpp>
#include <enriques/decomposition.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> types(argv + 1, argv + argc);
  if (types.empty()) types = {"E1+E{1,2}", "E1+E2+E3+E4", "2E1+2E{1,2}", "4E1+3E2", "9E1+E2"};
  for (const auto& t : types) {
    try {
      enriques::PicClass h = enriques::realize(enriques::parse_decomposition(t));
      enriques::PhiResult r = enriques::phi(h);
      std::cout << t << ": g = " << enriques::genus(h) << ", phi = " << r.value
                << ", attained by " << r.witness.num << "\n";
    } catch (const std::exception& e) {
      std::cerr << t << ": " << e.what() << "\n";
      return 1;
    }
  }
  return 0;
}
