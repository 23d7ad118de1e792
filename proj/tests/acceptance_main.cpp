#include "saso/harness/selfcheck.hpp"

#include <iostream>

int main() {
    saso::harness::SelfCheckOptions options;
    const auto results = saso::harness::run_acceptance(options, std::cout);
    return saso::harness::all_passed(results) ? 0 : 1;
}
