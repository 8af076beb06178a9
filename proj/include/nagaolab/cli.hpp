#ifndef NAGAOLAB_CLI_HPP_
#define NAGAOLAB_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace nagaolab::cli {

  enum ExitCode : int {
    exit_ok           = 0,
    exit_verification = 1,
    exit_usage        = 2,
    exit_out_of_scope = 3,
  };

  // Runs one command line. args[0] is the program name. "-" as the input
  // argument of nf reads the payload from in.
  int run(std::vector<std::string> const& args, std::istream& in, std::ostream& out, std::ostream& err);

  // NAGAOLAB_MAX_DEG, or 16 when unset.
  std::size_t max_degree_from_env();

}  // namespace nagaolab::cli

#endif  // NAGAOLAB_CLI_HPP_
