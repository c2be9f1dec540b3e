#pragma once

#include "edd/report.hpp"

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace edd::cli {

enum class Subcommand {
    plane_curve,
    rational_curve,
    rnc,
    segre,
    segre_veronese,
    snc,
    generic,
    hypersurface,
    from_segre,
    from_milnor,
    from_csm,
    from_euler,
    sphere,
    surface_p3,
    curve,
};

/// Bad command line or argument syntax; maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CommandConfig {
    Subcommand command = Subcommand::generic;
    /// Option values exactly as given, keyed by long name without dashes.
    std::map<std::string, std::string> params;
    std::vector<std::string> divisors;
    std::string method;
    std::string coords = "general";
    bool json = false;
    bool verbose = false;
    bool assume_smooth = false;
    bool mather = false;
    unsigned smoothness_bound = 6;
};

struct CommandResult {
    EddReport report;
    /// Extra textual intermediates shown with --verbose (e.g. the pulled-back form).
    std::map<std::string, std::string> details;
};

/// Thrown by parse_command_line for --help; carries the formatted help text.
struct HelpRequested {
    std::string text;
};

/// Parses argv-style arguments (without the program name). Throws UsageError
/// or HelpRequested.
CommandConfig parse_command_line(const std::vector<std::string>& args);

CommandResult run_command(const CommandConfig& config);

/// {"edd", "method", "inputs", "intermediates", "warnings"} with every number as a decimal string.
std::string to_json(const CommandConfig& config, const CommandResult& result);
std::string to_text(const CommandConfig& config, const CommandResult& result);

/// Full front end: parse, run, print. Returns the process exit code:
/// 0 success, 1 internal error, 2 usage or parse error, 3 violated
/// mathematical precondition, 4 unsupported request.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edd::cli
