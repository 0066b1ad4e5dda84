#pragma once
// Command-line front end, callable as a library function so tests can
// drive it without spawning processes.
//
// Exit codes: 0 = all requested checks pass; 1 = checks ran but a paradox
// or genuineness claim failed; 2 = input error (bad arguments, unreadable
// or malformed documents, invalid parameters); 3 = capacity exceeded.

#include <iosfwd>

namespace ghz {

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ghz
