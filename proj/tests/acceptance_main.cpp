// One line per acceptance criterion; nonzero exit if any fails.
#include "k3deg/acceptance.hpp"

#include <iostream>

int main()
{
    int failed = 0;
    for (const auto& r : k3deg::run_acceptance()) {
        std::cout << k3deg::format_result(r) << std::endl;
        failed += !r.pass;
    }
    return failed == 0 ? 0 : 1;
}
