// Command-line front end.
//
//   ipf compose A B        ipf inverse A         ipf apply A P
//   ipf canonical A        ipf top A             ipf leq A B
//   ipf green {L|R|H|D|J} A B                    ipf lift Q
//   ipf psi A
//   ipf verify --suite S --cases N --seed K --bound B [--serial]
//
// Results are printed as one canonical JSON line (or true/false). Exit code
// 0 on success, 1 on a domain or argument error, 2 on a parse error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ipf {

enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitParse = 2 };

int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err);

}  // namespace ipf
