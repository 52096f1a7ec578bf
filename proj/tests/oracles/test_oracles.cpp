#include <doctest.h>

#include <set>

#include "latcd/canonical.hpp"
#include "latcd/congruence.hpp"
#include "latcd/enumeration.hpp"
#include "oracle.hpp"

using namespace latcd;

TEST_CASE("labelled-poset oracle matches the enumeration counts") {
  std::size_t const expected[] = {0, 1, 1, 1, 2, 5, 15, 53, 222};
  for (std::size_t n = 1; n <= 8; ++n) {
    std::set<CanonicalCode> codes;
    for (auto const& m : oracle::labelled_lattices(n)) {
      codes.insert(canonical_form(oracle::to_lattice(m)));
    }
    std::set<CanonicalCode> generated;
    for (auto const& e : enumerate_all(n)) {
      generated.insert(e.code);
    }
    CAPTURE(n);
    CHECK(codes.size() == expected[n]);
    CHECK(generated == codes);
  }
}

TEST_CASE("canonical codes separate exactly the permutation-isomorphism types") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto const all   = oracle::labelled_lattices(n);
    auto const types = oracle::iso_types(all);
    std::set<CanonicalCode> codes;
    for (auto const& m : types) {
      codes.insert(canonical_form(oracle::to_lattice(m)));
    }
    CAPTURE(n);
    CHECK(codes.size() == types.size());
    CHECK(enumerate_all(n).size() == types.size());
  }
}

TEST_CASE("ideal counting agrees with partition search on every lattice up to size 7") {
  std::size_t total = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (auto const& e : enumerate_all(n)) {
      auto const m = oracle::matrix_of(e.lattice);
      CAPTURE(e.code.hex());
      CHECK(con_count(e.lattice) == oracle::congruence_count(m));
      ++total;
    }
  }
  CHECK(total == 78);
}

TEST_CASE("join and meet tables agree with bound search") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (auto const& e : enumerate_all(n)) {
      auto const& L = e.lattice;
      auto const  t = oracle::tables(oracle::matrix_of(L));
      REQUIRE(t.has_value());
      bool ok = true;
      for (ElementId x = 0; x < L.size(); ++x) {
        for (ElementId y = 0; y < L.size(); ++y) {
          ok = ok && L.join(x, y) == t->join[x][y] && L.meet(x, y) == t->meet[x][y];
        }
      }
      CHECK(ok);
    }
  }
}
