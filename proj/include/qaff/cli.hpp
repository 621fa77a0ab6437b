#pragma once

// Command-line front end. Subcommands: verify, compose, decompose,
// star {diag, elem, grassmann}, pushforward, drinfeld, dual, qid.
// Exit status: 0 pass, 1 check failure, 2 usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

namespace qaff {

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qaff
