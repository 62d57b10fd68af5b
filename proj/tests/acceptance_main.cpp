#include "confrep/suite.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
    confrep::SuiteOptions opts;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--inject-fault") == 0) opts.inject_fault = true;
    const auto results = confrep::run_suite(opts);
    std::cout << confrep::suite_text(results);
    for (const auto& r : results)
        if (!r.pass()) return 1;
    return 0;
}
