#include <iostream>

#include "mtdc/acceptance.hpp"

int main() {
  const mtdc::AcceptanceReport report = mtdc::run_acceptance("acceptance_artifacts", 1);
  mtdc::print_report(report, std::cout);
  return mtdc::acceptance_exit_code(report);
}
