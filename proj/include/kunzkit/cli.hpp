#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kunzkit {

// Parses and executes one command line (program name excluded).  Results go
// to `out`, diagnostics to `err`.  Returns 0 on success, 1 when a
// mathematical precondition is violated (the message names it), 2 on usage
// errors.  Output is deterministic: equal inputs produce identical bytes.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace kunzkit
