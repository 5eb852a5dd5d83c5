#pragma once
// Subcommand driver shared by the command-line tool and the tests.

#include <iosfwd>
#include <string>
#include <vector>

#include "openbook/serialize.hpp"

namespace openbook {

// args excludes the program name. Exit status: 0 pass, 1 fail verdicts,
// 2 usage or parse errors, 3 budget truncation.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace openbook
