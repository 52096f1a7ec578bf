#include "latcd/lattice_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace latcd {

  using nlohmann::json;

  Lattice lattice_from_json(std::string_view text) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (json::parse_error const& e) {
      throw Error(ErrorKind::Parse, e.what());
    }
    if (!doc.is_object() || !doc.contains("size") || !doc.contains("covers")) {
      throw Error(ErrorKind::Parse, "expected an object with 'size' and 'covers'");
    }
    auto const& size = doc["size"];
    if (!size.is_number_unsigned() || size.get<std::size_t>() == 0) {
      throw Error(ErrorKind::Parse, "'size' must be a positive integer");
    }
    std::size_t const n = size.get<std::size_t>();
    auto const&       cv = doc["covers"];
    if (!cv.is_array()) {
      throw Error(ErrorKind::Parse, "'covers' must be an array");
    }
    std::vector<Edge> covers;
    for (auto const& pair : cv) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned()
          || !pair[1].is_number_unsigned()) {
        throw Error(ErrorKind::Parse, "each cover must be a pair of ids");
      }
      auto lo = pair[0].get<std::uint64_t>();
      auto hi = pair[1].get<std::uint64_t>();
      if (lo >= n || hi >= n) {
        throw Error(ErrorKind::InvalidInput, "cover [" + std::to_string(lo) + ", "
                                                 + std::to_string(hi)
                                                 + "] names an id outside [0, size)");
      }
      covers.emplace_back(static_cast<ElementId>(lo), static_cast<ElementId>(hi));
    }
    return Lattice::from_covers(n, covers);
  }

  Lattice read_lattice_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return lattice_from_json(buf.str());
  }

  std::string lattice_to_json(Lattice const& L) {
    nlohmann::ordered_json covers = nlohmann::ordered_json::array();
    for (auto const& [lo, hi] : L.covers()) {
      covers.push_back({lo, hi});
    }
    return nlohmann::ordered_json{{"size", L.size()}, {"covers", covers}}.dump();
  }

  void write_lattice_file(std::string const& path, Lattice const& L) {
    std::ofstream out(path);
    if (!out) {
      throw Error(ErrorKind::InvalidInput, "cannot write '" + path + "'");
    }
    out << lattice_to_json(L) << '\n';
  }

}  // namespace latcd
