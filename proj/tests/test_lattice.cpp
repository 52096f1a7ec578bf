#include <doctest.h>

#include "latcd/canonical.hpp"
#include "latcd/constructions.hpp"
#include "latcd/lattice.hpp"
#include "support.hpp"

using namespace latcd;

namespace {

  // N_5 as 0 < a1 < a2 < 1 with b beside the chain; input ids 0,1,2,3=b,4=top.
  Lattice n5_labelled() {
    return Lattice::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
  }

}  // namespace

TEST_CASE("building from covers") {
  Lattice c2 = Lattice::from_covers(2, {{0, 1}});
  CHECK(c2.size() == 2);
  CHECK(c2.leq(0, 1));
  CHECK(is_chain(c2));

  Lattice b4 = Lattice::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(is_isomorphic(b4, boolean4()));
  CHECK(b4.covers().size() == 4);

  SUBCASE("any labelling is accepted and relabelled into a linear extension") {
    Lattice L = Lattice::from_covers(4, {{3, 1}, {3, 2}, {1, 0}, {2, 0}});
    CHECK(L.bottom() == 0);
    CHECK(L.origin(L.bottom()) == 3);
    CHECK(L.origin(L.top()) == 0);
    for (auto const& [lo, hi] : L.covers()) {
      CHECK(lo < hi);
    }
  }

  SUBCASE("errors") {
    CHECK(error_kind([] {
            return Lattice::from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
          })
          == ErrorKind::NotBounded);
    CHECK(error_kind([] { return Lattice::from_covers(2, {{0, 1}, {1, 0}}); })
          == ErrorKind::Cycle);
    CHECK(error_kind([] { return Lattice::from_covers(1, {{0, 0}}); })
          == ErrorKind::Cycle);
    CHECK(error_kind([] { return Lattice::from_covers(3, {{0, 1}, {1, 2}, {0, 2}}); })
          == ErrorKind::NotReduced);
    CHECK(error_kind([] { return Lattice::from_covers(2, {{0, 5}}); })
          == ErrorKind::InvalidInput);
    CHECK(error_kind([] { return Lattice::from_covers(0, {}); })
          == ErrorKind::InvalidInput);
  }

  SUBCASE("a bounded poset that is not a lattice reports a witness pair") {
    // 0 < a, b < c, d < 1 with a, b both below c and d.
    try {
      static_cast<void>(Lattice::from_covers(
          6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}}));
      FAIL("expected NotALattice");
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::NotALattice);
      REQUIRE(e.witness().has_value());
      CHECK(*e.witness() == Error::Witness{1, 2});
    }
  }
}

TEST_CASE("join and meet") {
  Lattice b4 = boolean4();
  CHECK(b4.join(1, 2) == b4.top());
  CHECK(b4.meet(1, 2) == b4.bottom());

  Lattice c4 = chain(4);
  for (ElementId x = 0; x < 4; ++x) {
    for (ElementId y = 0; y < 4; ++y) {
      CHECK(c4.join(x, y) == std::max(x, y));
      CHECK(c4.meet(x, y) == std::min(x, y));
    }
  }

  Lattice   n5  = n5_labelled();
  ElementId a1  = n5.find_origin(1);
  ElementId a2  = n5.find_origin(2);
  ElementId b   = n5.find_origin(3);
  CHECK(n5.join(a1, b) == n5.top());
  CHECK(n5.meet(a2, b) == n5.bottom());
}

TEST_CASE("element profile") {
  auto p = profile(boolean4());
  CHECK(p.jir == std::vector<ElementId>{1, 2});
  CHECK(p.mir == std::vector<ElementId>{1, 2});
  CHECK(p.jr == std::vector<ElementId>{3});
  CHECK(p.mr == std::vector<ElementId>{0});
  CHECK(p.nar == std::vector<ElementId>{0, 3});

  auto c = profile(chain(5));
  CHECK(c.jir == std::vector<ElementId>{1, 2, 3, 4});
  CHECK(c.mir == std::vector<ElementId>{0, 1, 2, 3});
  CHECK(c.jr.empty());
  CHECK(c.mr.empty());
  CHECK(c.nar.size() == 5);

  Lattice n5 = n5_labelled();
  auto    q  = profile(n5);
  CHECK(q.jir.size() == 3);
  CHECK(q.jr == std::vector<ElementId>{n5.top()});
  CHECK(q.mr == std::vector<ElementId>{n5.bottom()});
  CHECK(q.nar == std::vector<ElementId>{n5.bottom(), n5.top()});
  CHECK(n5.size() == 1 + q.jir.size() + q.jr.size());
}

TEST_CASE("class predicates") {
  Lattice n5 = n_k(5);
  Lattice m3 = m_k(3);
  CHECK_FALSE(is_modular(n5));
  CHECK_FALSE(is_semimodular(n5));
  CHECK(is_modular(m3));
  CHECK(is_semimodular(m3));
  CHECK_FALSE(is_distributive(m3));
  CHECK(is_distributive(boolean4()));
  CHECK(is_distributive(chain(6)));
  CHECK(is_chain(chain(1)));
  CHECK_FALSE(is_chain(boolean4()));
  CHECK(is_distributive(glued_sum(boolean4(), chain(2))));
}

TEST_CASE("dual") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(is_isomorphic(dual(chain(n)), chain(n)));
  }
  CHECK(is_isomorphic(dual(boolean4()), boolean4()));
  CHECK(is_isomorphic(dual(n_k(5)), n_k(5)));
  Lattice L = glued_sum(chain(3), boolean4());
  CHECK_FALSE(is_isomorphic(dual(L), L));
  CHECK(is_isomorphic(dual(L), glued_sum(boolean4(), chain(3))));
  Lattice d = dual(L);
  CHECK(d.origin(0) == L.top());
}

TEST_CASE("intervals and sublattices") {
  Lattice n8 = n_k(8);
  CHECK(is_isomorphic(interval(n8, 0, 2), chain(3)));
  CHECK(is_isomorphic(interval(n8, n8.bottom(), n8.top()), n8));
  CHECK(is_isomorphic(interval(boolean4(), 0, 1), chain(2)));
  CHECK(error_kind([&] { return interval(n8, 1, 6); }) == ErrorKind::NotComparable);

  Lattice b4 = boolean4();
  Bitset  s(4);
  s.set(0);
  s.set(1);
  s.set(2);
  CHECK_FALSE(is_sublattice(b4, s));
  CHECK(error_kind([&] { return sublattice(b4, s); }) == ErrorKind::NotASublattice);
  s.set(3);
  s.reset(2);
  CHECK(is_sublattice(b4, s));
  Lattice sub = sublattice(b4, s);
  CHECK(sub.size() == 3);
  CHECK(sub.origin(1) == 1);
}

TEST_CASE("transposed intervals") {
  Lattice b4 = boolean4();
  CHECK(transposed(b4, {0, 1}, {2, 3}));
  CHECK(transposed(b4, {2, 3}, {0, 1}));
  CHECK(transposed(b4, {0, 1}, {0, 1}));
  CHECK_FALSE(transposed(b4, {0, 1}, {1, 3}));
  Lattice c3 = chain(3);
  CHECK_FALSE(transposed(c3, {0, 1}, {1, 2}));
  CHECK(error_kind([&] { return transposed(b4, {1, 2}, {0, 3}); })
        == ErrorKind::NotComparable);
}

TEST_CASE("depths and relabel") {
  auto d = depths(n_k(6));
  CHECK(d.front() == 0);
  CHECK(d.back() == 4);
  Lattice L = n_k(7);
  CHECK(is_isomorphic(relabel(L, {6, 5, 4, 3, 2, 1, 0}), L));
  CHECK(error_kind([&] { return relabel(L, {0, 0, 1, 2, 3, 4, 5}); })
        == ErrorKind::InvalidInput);
}
