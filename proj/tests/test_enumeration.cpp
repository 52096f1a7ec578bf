#include <doctest.h>

#include <set>

#include "latcd/canonical.hpp"
#include "latcd/congruence.hpp"
#include "latcd/constructions.hpp"
#include "latcd/enumeration.hpp"
#include "latcd/structure.hpp"
#include "support.hpp"

using namespace latcd;

namespace {

  std::vector<Dyadic> densities(std::vector<ScdEntry> const& rows) {
    std::vector<Dyadic> out;
    for (auto const& r : rows) {
      out.push_back(r.density);
    }
    return out;
  }

}  // namespace

TEST_CASE("counts") {
  std::size_t const expected[] = {0, 1, 1, 1, 2, 5, 15, 53, 222, 1078, 5994};
  for (std::size_t n = 1; n <= 10; ++n) {
    CHECK(enumerate_all(n).size() == expected[n]);
  }
  auto four = enumerate_lattices(4);
  REQUIRE(four.size() == 2);
  std::set<CanonicalCode> want{canonical_form(chain(4)), canonical_form(boolean4())};
  CHECK(std::set<CanonicalCode>{four[0].code, four[1].code} == want);
  CHECK(enumerate_lattices(4, LatticeClass::Modular).size() == 2);
}

TEST_CASE("output is sorted by code and codes match the lattices") {
  for (std::size_t n = 1; n <= 8; ++n) {
    auto const& level = enumerate_all(n);
    for (std::size_t i = 0; i < level.size(); ++i) {
      CHECK(level[i].lattice.size() == n);
      CHECK(canonical_form(level[i].lattice) == level[i].code);
      if (i > 0) {
        CHECK(level[i - 1].code < level[i].code);
      }
    }
  }
}

TEST_CASE("budget and class filters") {
  CHECK(error_kind([] { return enumerate_lattices(11); }) == ErrorKind::BudgetExceeded);
  CHECK(error_kind([] { return enumerate_lattices(0); }) == ErrorKind::InvalidInput);
  CHECK(error_kind([] { return enumerate_lattices(5, LatticeClass::All, 4); })
        == ErrorKind::BudgetExceeded);
  // Five-element lattices: C_5, two glued B_4's, N_5, M_3.
  CHECK(enumerate_lattices(5, LatticeClass::Modular).size() == 4);
  CHECK(enumerate_lattices(5, LatticeClass::Distributive).size() == 3);
  CHECK(enumerate_lattices(5, LatticeClass::Semimodular).size() == 4);
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(enumerate_lattices(n, LatticeClass::Distributive).size()
          <= enumerate_lattices(n, LatticeClass::Modular).size());
    CHECK(enumerate_lattices(n, LatticeClass::Modular).size()
          <= enumerate_lattices(n, LatticeClass::Semimodular).size());
  }
  // Some semimodular lattice of size 7 is not modular.
  std::size_t sm = 0;
  for (auto const& e : enumerate_lattices(7, LatticeClass::Semimodular)) {
    sm += is_modular(e.lattice) ? 0 : 1;
  }
  CHECK(sm > 0);
  CHECK(is_variety(LatticeClass::Modular));
  CHECK_FALSE(is_variety(LatticeClass::Semimodular));
  CHECK(parse_lattice_class("distributive") == LatticeClass::Distributive);
  CHECK(error_kind([] { return parse_lattice_class("boolean"); })
        == ErrorKind::InvalidInput);
}

TEST_CASE("lnc") {
  CHECK(lnc(LatticeClass::All, 4, 1) == 8);
  for (std::size_t n = 1; n <= 7; ++n) {
    CHECK(lnc(LatticeClass::All, n, 1) == BigInt(1) << (n - 1));
  }
  CHECK(lnc(LatticeClass::Modular, 4, 2) == 4);
  CHECK(error_kind([] { return lnc(LatticeClass::All, 3, 2); }) == ErrorKind::Undefined);
  CHECK(error_kind([] { return lnc(LatticeClass::All, 12, 1); })
        == ErrorKind::BudgetExceeded);
}

TEST_CASE("the chain is the unique maximiser") {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::size_t at_max = 0;
    for (auto const& e : enumerate_all(n)) {
      if (con_count(e.lattice) == BigInt(1) << (n - 1)) {
        ++at_max;
        CHECK(is_chain(e.lattice));
      }
    }
    CHECK(at_max == 1);
  }
}

TEST_CASE("scd") {
  CHECK(densities(scd(LatticeClass::All, 4))
        == std::vector<Dyadic>{Dyadic::one(), Dyadic(1, 1)});
  auto five = scd(LatticeClass::All, 5);
  CHECK(densities(five)
        == std::vector<Dyadic>{Dyadic::one(), Dyadic(1, 1), Dyadic(5, 4), Dyadic(1, 3)});
  CHECK(five[0].witness_size == 1);
  CHECK(five[1].witness == canonical_form(boolean4()));
  CHECK(five[2].witness == canonical_form(n_k(5)));
  CHECK(five[3].witness == canonical_form(m_k(3)));

  auto seven = scd(LatticeClass::All, 7);
  bool quarter = false;
  for (auto const& r : seven) {
    if (r.density == Dyadic(1, 2)) {
      quarter = true;
      CHECK(r.witness_size == 6);
      for (auto const& e : enumerate_all(r.witness_size)) {
        if (e.code == r.witness) {
          CHECK(congruence_density(e.lattice) == r.density);
        }
      }
    }
  }
  CHECK(quarter);
}

TEST_CASE("scd slices") {
  auto semi = densities(scd_slice(LatticeClass::Semimodular, 6, Dyadic(1, 1)));
  CHECK(std::count(semi.begin(), semi.end(), Dyadic::one()) == 1);
  CHECK(std::count(semi.begin(), semi.end(), Dyadic(1, 1)) == 1);
  CHECK(densities(scd_slice(LatticeClass::All, 5, Dyadic(1, 2)))
        == std::vector<Dyadic>{Dyadic::one(), Dyadic(1, 1), Dyadic(5, 4)});
  for (std::size_t n = 4; n <= 8; ++n) {
    CHECK(densities(scd_slice(LatticeClass::All, n, Dyadic(3, 2)))
          == std::vector<Dyadic>{Dyadic::one()});
  }
  CHECK(error_kind([] { return scd_slice(LatticeClass::All, 4, Dyadic()); })
        == ErrorKind::Domain);
  CHECK(error_kind([] { return scd_slice(LatticeClass::All, 4, Dyadic(3, 1)); })
        == ErrorKind::Domain);
}

TEST_CASE("one-point extensions never raise the density") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& e : enumerate_all(n)) {
      Dyadic d = congruence_density(e.lattice);
      for (auto const& edge : e.lattice.covers()) {
        CHECK(congruence_density(one_point_extension(e.lattice, edge)) <= d);
      }
    }
  }
}

TEST_CASE("products of densities are realised by glued sums") {
  auto values = scd(LatticeClass::All, 6);
  auto find = [](CanonicalCode const& code, std::size_t n) {
    for (auto const& e : enumerate_all(n)) {
      if (e.code == code) {
        return e.lattice;
      }
    }
    FAIL("witness not found");
    return chain(1);
  };
  for (auto const& a : values) {
    for (auto const& b : values) {
      Lattice S = glued_sum(find(a.witness, a.witness_size), find(b.witness, b.witness_size));
      CHECK(congruence_density(S) == a.density * b.density);
    }
  }
}

TEST_CASE("convergence table") {
  auto rows = convergence_table(1, 16);
  REQUIRE(rows.size() == 9);
  CHECK(rows.front().k == 8);
  CHECK(rows.front().engine == Dyadic(19, 8));
  CHECK(rows.front().limit == Dyadic(1, 4));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].engine == rows[i].formula);
    if (i > 0) {
      CHECK(rows[i].engine - rows[i].limit < rows[i - 1].engine - rows[i - 1].limit);
    }
  }
  auto two = convergence_table(2, 9);
  CHECK(two.back().engine == Dyadic::pow2_neg(5) + Dyadic(3, 10));
  CHECK(two.back().engine == Dyadic(35, 10));
  CHECK(error_kind([] { return convergence_table(1, 7); }) == ErrorKind::Domain);
  CHECK(error_kind([] { return convergence_table(0, 8); }) == ErrorKind::Domain);
  CHECK(error_kind([] { return convergence_table(1, 25); })
        == ErrorKind::BudgetExceeded);
}

TEST_CASE("Ramsey numbers and the bound functions") {
  CHECK(triangle_free_colouring_exists(5));
  CHECK_FALSE(triangle_free_colouring_exists(6));
  CHECK(ramsey_r33() == 6);
  CHECK(k_of_p(Dyadic::one()) == 3);
  CHECK(f_of_p(Dyadic::one()) == 42);
  CHECK(k_of_p(Dyadic(1, 1)) == 4);
  CHECK(k_of_p(Dyadic(3, 2)) == 3);
  CHECK(k_of_p(Dyadic(5, 4)) == 4);
  CHECK(k_of_p(Dyadic(1, 10)) == 13);
  CHECK(k_of_p(Dyadic(3, 10)) == 11);
  CHECK(error_kind([] { return f_of_p(Dyadic(1, 1)); }) == ErrorKind::Unsupported);
  try {
    static_cast<void>(f_of_p(Dyadic(1, 1)));
  } catch (Error const& e) {
    CHECK(std::string(e.what()).find("R(4,4,4)") != std::string::npos);
  }
  CHECK(error_kind([] { return k_of_p(Dyadic()); }) == ErrorKind::Domain);
  CHECK(error_kind([] { return k_of_p(Dyadic(3, 0)); }) == ErrorKind::Domain);
}
