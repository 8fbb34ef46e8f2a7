// Runs the ten acceptance checks and prints one line per criterion. Exit
// status is nonzero when any criterion fails. Optional arguments select
// criteria by number.
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "stratkit/audit.hpp"

int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    if (ids.empty())
        for (int i = 1; i <= stratkit::kNumCriteria; ++i) ids.push_back(i);
    bool ok = true;
    for (int id : ids) {
        stratkit::CriterionResult r = stratkit::run_criterion(id);
        std::cout << r.line() << std::endl;
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
