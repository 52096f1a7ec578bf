#include <doctest.h>

#include "latcd/canonical.hpp"
#include "latcd/congruence.hpp"
#include "latcd/constructions.hpp"
#include "latcd/structure.hpp"
#include "support.hpp"

using namespace latcd;

TEST_CASE("chains and products") {
  CHECK(chain(1).size() == 1);
  CHECK(error_kind([] { return chain(0); }) == ErrorKind::Domain);
  CHECK(is_isomorphic(direct_product(chain(2), chain(2)), boolean4()));
  for (std::size_t n = 1; n <= 10; ++n) {
    CHECK(con_count(chain(n)) == BigInt(1) << (n - 1));
  }
  Lattice p = direct_product(chain(3), chain(2));
  CHECK(p.size() == 6);
  CHECK(is_distributive(p));
  // (1, 1) has origin 1 * 2 + 1
  CHECK(p.origin(p.join(p.find_origin(2), p.find_origin(1))) == 3);
}

TEST_CASE("glued sums") {
  CHECK(is_isomorphic(glued_sum(chain(2), chain(2)), chain(3)));
  CHECK(congruence_density(glued_sum(boolean4(), boolean4())) == Dyadic(1, 2));
  CHECK(congruence_density(glued_sum(n_k(8), boolean4())) == Dyadic(19, 8));
  CHECK(error_kind([] { return glued_sum_all({}); }) == ErrorKind::InvalidInput);
  Lattice g = glued_sum_all({chain(2), boolean4(), chain(2)});
  CHECK(g.size() == 6);
  CHECK(gluing_edges(g).size() == 2);
}

TEST_CASE("M_k") {
  CHECK(m_k(3).size() == 5);
  CHECK(is_modular(m_k(3)));
  CHECK(con_count(m_k(3)) == 2);
  for (std::size_t k = 3; k <= 5; ++k) {
    CHECK(congruence_density(m_k(k)) == Dyadic::pow2_neg(k));
  }
  CHECK(error_kind([] { return m_k(2); }) == ErrorKind::Domain);
}

TEST_CASE("N_k and its congruences") {
  Lattice n5 = n_k(5);
  CHECK(n5.size() == 5);
  CHECK_FALSE(is_modular(n5));
  CHECK(is_isomorphic(n5, one_point_extension(boolean4(), {0, 1})));
  for (std::size_t k = 5; k <= 12; ++k) {
    CHECK(con_count(n_k(k)) == (BigInt(1) << (k - 4)) + 3);
  }
  CHECK(error_kind([] { return n_k(4); }) == ErrorKind::Domain);
  CHECK(error_kind([] { return n_k_theta(8, 0); }) == ErrorKind::Domain);
  CHECK(error_kind([] { return n_k_theta(8, 5); }) == ErrorKind::Domain);

  for (std::size_t k = 5; k <= 10; ++k) {
    Lattice    N    = n_k(k);
    Congruence meet = Congruence::total(k);
    for (std::size_t i = 1; i + 1 <= k - 3; ++i) {
      auto th = n_k_theta(k, i);
      CHECK(is_congruence(N, th.block_of));
      CHECK(is_isomorphic(quotient(N, th), n5));
      meet = intersect(meet, th);
    }
    CHECK(meet == Congruence::identity(k));
  }
}

TEST_CASE("L_{k,n}") {
  CHECK(congruence_density(l_k_n(8, 1)) == Dyadic(19, 8));
  CHECK(l_k_n(8, 1).size() == 11);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t k = 5; k <= 12; ++k) {
      Dyadic expected = Dyadic::pow2_neg(n + 3) + Dyadic(3, n + k - 1);
      CHECK(congruence_density(l_k_n(k, n)) == expected);
    }
  }
  Dyadic prev = Dyadic::one();
  for (std::size_t k = 5; k <= 20; ++k) {
    Dyadic d = congruence_density(l_k_n(k, 1));
    CHECK(d < prev);
    CHECK(d > Dyadic::pow2_neg(4));
    prev = d;
  }
  CHECK(prev - Dyadic::pow2_neg(4) == Dyadic(3, 20));
}

TEST_CASE("one-point extensions") {
  Lattice b4 = boolean4();
  for (auto const& e : b4.covers()) {
    Lattice L = one_point_extension(b4, e);
    CHECK(is_isomorphic(L, n_k(5)));
    CHECK(congruence_density(L) == Dyadic(5, 4));
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    CHECK(is_isomorphic(one_point_extension(chain(n), {0, 1}), chain(n + 1)));
  }
  auto [L, x] = one_point_extension_with_id(b4, {1, 3});
  CHECK(L.origin(x) == 4);
  CHECK(L.lower_covers(x).size() == 1);
  CHECK(L.upper_covers(x).size() == 1);
  CHECK(error_kind([&] { return one_point_extension(b4, {0, 3}); })
        == ErrorKind::NotAnEdge);
}

TEST_CASE("multi-point extensions") {
  Lattice const   b4 = boolean4();
  EdgeEnumeration pi = b4.covers();
  CHECK(is_isomorphic(multi_point_extension(b4, pi, {0, 0, 0, 0}), b4));
  for (std::size_t k = 5; k <= 10; ++k) {
    CHECK(is_isomorphic(multi_point_extension(b4, pi, {k - 4, 0, 0, 0}), n_k(k)));
  }
  Lattice m = multi_point_extension(b4, pi, {1, 0, 2, 0});
  CHECK(m.size() == 7);
  // old elements keep their origin labels
  for (ElementId x = 0; x < 4; ++x) {
    CHECK(m.find_origin(x) < m.size());
  }

  CHECK(error_kind([&] { return multi_point_extension(b4, pi, {0, 0}); })
        == ErrorKind::LengthMismatch);
  CHECK(error_kind([&] {
          return multi_point_extension(b4, {{0, 1}, {0, 2}, {1, 3}}, {0, 0, 0});
        })
        == ErrorKind::LengthMismatch);
  CHECK(error_kind([&] {
          return multi_point_extension(b4, {{0, 1}, {0, 2}, {1, 3}, {0, 3}},
                                       {0, 0, 0, 0});
        })
        == ErrorKind::NotAnEdge);

  SUBCASE("order of pi does not change the result up to isomorphism") {
    EdgeEnumeration rev(pi.rbegin(), pi.rend());
    ExtensionVector s{2, 0, 1, 3};
    ExtensionVector s_rev(s.rbegin(), s.rend());
    CHECK(is_isomorphic(multi_point_extension(b4, pi, s),
                        multi_point_extension(b4, rev, s_rev)));
  }

  SUBCASE("r <= s gives a dismantlable extension") {
    std::vector<ExtensionVector> vecs;
    for (std::size_t a = 0; a <= 2; ++a) {
      for (std::size_t b = 0; b <= 1; ++b) {
        for (std::size_t c = 0; c <= 1; ++c) {
          vecs.push_back({a, b, c, 0});
        }
      }
    }
    for (auto const& r : vecs) {
      for (auto const& s : vecs) {
        if (!componentwise_leq(r, s)) {
          continue;
        }
        Lattice big = multi_point_extension(b4, pi, s);
        // The elements of MExt(B_4, pi, r) inside MExt(B_4, pi, s): old
        // elements plus the first r_i points inserted on edge i.
        Bitset      sub(big.size());
        std::size_t label = 4;
        for (ElementId x = 0; x < 4; ++x) {
          sub.set(big.find_origin(x));
        }
        for (std::size_t i = 0; i < 4; ++i) {
          for (std::size_t j = 0; j < s[i]; ++j, ++label) {
            if (j < r[i]) {
              sub.set(big.find_origin(static_cast<ElementId>(label)));
            }
          }
        }
        CHECK(is_isomorphic(sublattice(big, sub), multi_point_extension(b4, pi, r)));
        CHECK(is_dismantlable_extension(big, sub));
      }
    }
  }
}

TEST_CASE("componentwise order") {
  CHECK(componentwise_leq({1, 2}, {1, 3}));
  CHECK_FALSE(componentwise_leq({2, 1}, {1, 3}));
  CHECK(error_kind([] { return componentwise_leq({1}, {1, 2}); })
        == ErrorKind::ArityMismatch);
}
