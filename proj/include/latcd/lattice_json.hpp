#ifndef LATCD_LATTICE_JSON_HPP_
#define LATCD_LATTICE_JSON_HPP_

#include <string>
#include <string_view>

#include "latcd/lattice.hpp"

namespace latcd {

  //! Parses {"size": n, "covers": [[lo, hi], ...]}. Any labelling of the
  //! elements is accepted; input id i becomes origin i. Throws Parse on
  //! malformed JSON and the usual validation errors otherwise.
  [[nodiscard]] Lattice lattice_from_json(std::string_view text);
  [[nodiscard]] Lattice read_lattice_file(std::string const& path);

  //! Serializes with the internal labelling, compact, no trailing newline.
  [[nodiscard]] std::string lattice_to_json(Lattice const& L);
  void write_lattice_file(std::string const& path, Lattice const& L);

}  // namespace latcd

#endif  // LATCD_LATTICE_JSON_HPP_
