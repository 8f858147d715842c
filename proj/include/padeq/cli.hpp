#ifndef PADEQ_CLI_HPP
#define PADEQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace padeq::cli
{

enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kDomainError = 3,
    kInternalError = 4,
};

// Runs one command. `args` excludes the program name, e.g.
// {"harness", "--builtin", "exp_m1", "--t", "1", "--out", "run1"}.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace padeq::cli

#endif
