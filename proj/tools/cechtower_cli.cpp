#include <iostream>
#include <string>
#include <vector>

#include "cechtower/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    cechtower::DispatchResult result = cechtower::dispatch_args(args);
    std::cout << result.report;
    return result.exit_code;
}
