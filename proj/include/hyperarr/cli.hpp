#pragma once

#include <string>
#include <vector>

#include "hyperarr/arrangement.hpp"
#include "hyperarr/graph.hpp"

namespace hyperarr::cli {

enum ExitCode : int { Ok = 0, Parse = 1, Threshold = 2, Budget = 3, VerificationFailed = 4 };

struct CommandResult {
  int exit_code = Ok;
  std::string out;
  std::string err;
};

/// Runs one `arrange` invocation; args excludes the program name. Nothing is
/// written to the process streams, so repeated calls are independent.
CommandResult run_command(const std::vector<std::string>& args);

/// family := name [":" key "=" list (";" key "=" list)*], list := int ("," int)*
ArrangementFamily parse_family(const std::string& spec);

/// graph := term ("+" term)*, term := "bar(" graph ")" | name ":" params
Graph parse_graph(const std::string& spec);

std::vector<std::int64_t> parse_int_list(const std::string& text);
/// Lists separated by ';', e.g. "6,8;14".
std::vector<std::vector<std::int64_t>> parse_int_lists(const std::string& text);

}  // namespace hyperarr::cli
