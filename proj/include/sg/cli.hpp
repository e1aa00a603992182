#ifndef SG_CLI_HPP
#define SG_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "sg/intpoly.hpp"

namespace sg {

/// A parsed invocation.  Exactly one graph source is allowed (census and
/// sweep take an order instead).
struct CommandRequest {
    std::string subcommand; // spec | mates | verify-ds | census | probe | sweep | convert
    std::optional<std::string> expr;
    std::optional<std::string> graph6;
    std::optional<std::string> family; // "r,s,t"
    MatrixKind kind = MatrixKind::Adjacency;
    bool connected_only = false;
    int order = 0;
    std::string format = "table"; // table | json | dot
    double tol = 1e-9;
    bool timing = false; // keep wall-clock seconds in reports (breaks byte determinism)
    bool progress = false; // search-progress lines on standard error
};

/// Executes one request.  Exit status: 0 success, 1 domain error
/// (diagnostics on err), 2 usage error.
int run(const CommandRequest& request, std::ostream& out, std::ostream& err);

/// argv front end around run(); parses flags into a CommandRequest.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace sg

#endif
