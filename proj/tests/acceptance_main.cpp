#include <iostream>

#include "ainfty/acceptance.hpp"

int main() {
  bool pass = true;
  for (const auto& r : ainfty::run_acceptance()) {
    std::cout << ainfty::format_result(r) << std::endl;
    pass = pass && r.pass;
  }
  std::cout << (pass ? "all criteria pass" : "some criteria fail") << std::endl;
  return pass ? 0 : 1;
}
