#include <iostream>

#include "limw/acceptance.hpp"

int main() {
    limw::RunConfig cfg;
    auto results = limw::run_acceptance(cfg, std::cout);
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES above")
              << std::endl;
    return all ? 0 : 1;
}
