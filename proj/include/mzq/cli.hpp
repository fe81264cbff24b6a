#ifndef MZQ_CLI_HPP
#define MZQ_CLI_HPP

#include <string>
#include <vector>

namespace mzq::cli {

// Exit codes: 0 success, 2 input/geometry error, 3 numerical/solver error,
// 4 oracle budget exhausted.
int run(const std::vector<std::string>& args);
int run(int argc, char** argv);

} // namespace mzq::cli

#endif
