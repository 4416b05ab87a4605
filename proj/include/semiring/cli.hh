#ifndef SEMIRING_GUARD_CLI_HH
#define SEMIRING_GUARD_CLI_HH 1

#include <iosfwd>
#include <string>
#include <vector>

namespace semiring
{
    /// Process exit codes.
    namespace exit_code
    {
        inline constexpr int ok = 0;
        inline constexpr int invalid = 1;
        inline constexpr int usage = 2;
        inline constexpr int theorem_violation = 3;
    }

    /// Runs the command line `args` (without the program name), writing reports to out and
    /// diagnostics to err. Returns the exit code.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
