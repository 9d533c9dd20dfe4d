#ifndef LAGROOT_CLI_HPP
#define LAGROOT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lagroot::cli {

enum ExitCode : int {
    ok = 0,
    negative = 1,  ///< not real-rooted, or a campaign found failures
    usage = 2,
    capacity = 3,
};

/// Entry point shared by the binary and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lagroot::cli

#endif
