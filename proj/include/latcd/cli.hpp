#ifndef LATCD_CLI_HPP_
#define LATCD_CLI_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "latcd/dyadic.hpp"
#include "latcd/lattice.hpp"

namespace latcd {

  enum ExitCode : int {
    kExitOk           = 0,
    kExitVerifyFailed = 1,
    kExitUsage        = 2,
    kExitBudget       = 3,
  };

  //! Builds a lattice from a construction term:
  //!   chain:N | b4 | mk:K | nk:K | lkn:K,N | prod:T,T | gsum:T,T,...
  //!   | opx:FILE,LO,HI | mext:FILE,s1,s2,... | file:PATH | (T)
  //! Throws Grammar on malformed terms.
  [[nodiscard]] Lattice construct_from_term(std::string_view term);

  //! Hasse diagram in DOT; gluing edges are dashed, ranks follow depth.
  [[nodiscard]] std::string to_dot(Lattice const& L);

  //! "m/2^e ≈ d.ddddddddd"
  [[nodiscard]] std::string density_display(Dyadic const& d);

  //! Entry point of the command-line tool; args exclude the program name.
  int run_cli(std::vector<std::string> const& args, std::ostream& out,
              std::ostream& err);

}  // namespace latcd

#endif  // LATCD_CLI_HPP_
