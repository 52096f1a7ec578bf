#include "latcd/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "latcd/canonical.hpp"
#include "latcd/congruence.hpp"
#include "latcd/constructions.hpp"
#include "latcd/enumeration.hpp"
#include "latcd/structure.hpp"

namespace latcd {

  namespace {

    class Checker {
     public:
      Checker(std::string suite, std::string name, std::size_t max_size) {
        result_.suite    = std::move(suite);
        result_.name     = std::move(name);
        result_.max_size = max_size;
      }

      void expect(bool ok, CanonicalCode const& code, std::string_view clause) {
        expect(ok, code.hex(), clause);
      }

      void expect(bool ok, std::string_view subject, std::string_view clause) {
        ++result_.cases;
        if (!ok && result_.passed) {
          result_.passed = false;
          result_.detail = std::string(subject) + ": " + std::string(clause);
        }
      }

      CheckResult finish() { return std::move(result_); }

     private:
      CheckResult result_;
    };

    struct Context {
      VerifyOptions const&      options;
      std::vector<CheckResult>& out;
      std::string               suite;

      std::size_t bound(std::size_t fallback, bool slow_sensitive = false) const {
        if (options.max_size) {
          return *options.max_size;
        }
        return fallback + (slow_sensitive && options.slow ? 1 : 0);
      }

      // Runs `body` on every lattice of size <= max_size.
      void each(std::string name, std::size_t max_size,
                std::function<void(Checker&, Lattice const&, CanonicalCode const&)> body) {
        Checker c(suite, std::move(name), max_size);
        for_each_lattice(max_size, LatticeClass::All,
                         [&](Lattice const& L, CanonicalCode const& code) {
                           body(c, L, code);
                         },
                         std::max(max_size, kDefaultBudget));
        out.push_back(c.finish());
      }

      void single(std::string name, std::function<void(Checker&)> body) {
        Checker c(suite, std::move(name), 0);
        body(c);
        out.push_back(c.finish());
      }
    };

    Lattice const& lattice_by_code(CanonicalCode const& code, std::size_t n) {
      auto const& level = enumerate_all(n, std::max(n, kDefaultBudget));
      auto        it    = std::lower_bound(
          level.begin(), level.end(), code,
          [](Enumerated const& e, CanonicalCode const& c) { return e.code < c; });
      if (it == level.end() || it->code != code) {
        throw Error(ErrorKind::Internal, "witness " + code.hex() + " not enumerated");
      }
      return it->lattice;
    }

    ////////////////////////////////////////////////////////////////////////
    // core-ops
    ////////////////////////////////////////////////////////////////////////

    void core_ops(Context& ctx) {
      ctx.each("order-axioms", ctx.bound(7), [](Checker& c, Lattice const& L,
                                                CanonicalCode const& code) {
        bool ok = true;
        for (ElementId x = 0; x < L.size(); ++x) {
          for (ElementId y = 0; y < L.size(); ++y) {
            ok = ok && !(x != y && L.leq(x, y) && L.leq(y, x));
            ok = ok && L.join(x, L.meet(x, y)) == x && L.meet(x, L.join(x, y)) == x;
          }
        }
        c.expect(ok, code, "antisymmetry or absorption");
      });

      ctx.each("irreducible-count", ctx.bound(7), [](Checker& c, Lattice const& L,
                                                     CanonicalCode const& code) {
        auto p = profile(L);
        c.expect(L.size() == 1 + p.jir.size() + p.jr.size()
                     && L.size() == 1 + p.mir.size() + p.mr.size(),
                 code, "|L| = 1 + |Jir L| + |Jr L| and dually");
      });

      ctx.each("class-inclusions", ctx.bound(8), [](Checker& c, Lattice const& L,
                                                    CanonicalCode const& code) {
        bool d = is_distributive(L), m = is_modular(L), s = is_semimodular(L);
        c.expect((!d || m) && (!m || s), code,
                 "distributive => modular => semimodular");
      });

      ctx.each("dual-involution", ctx.bound(7), [](Checker& c, Lattice const& L,
                                                   CanonicalCode const& code) {
        c.expect(canonical_form(dual(dual(L))) == code, code, "dual(dual L) = L");
      });

      std::mt19937 rng(20240601);
      ctx.each("relabel-invariance", ctx.bound(7), [&](Checker& c, Lattice const& L,
                                                       CanonicalCode const& code) {
        std::vector<ElementId> perm(L.size());
        std::iota(perm.begin(), perm.end(), 0);
        bool ok = true;
        for (int round = 0; round < 100 && ok; ++round) {
          std::shuffle(perm.begin(), perm.end(), rng);
          ok = canonical_form(relabel(L, perm)) == code;
        }
        c.expect(ok, code, "canonical form changed under relabelling");
      });

      ctx.each("con-count-oracle", std::min(ctx.bound(7), kBruteforceMaxSize),
               [](Checker& c, Lattice const& L, CanonicalCode const& code) {
                 c.expect(con_count(L) == all_congruences_bruteforce(L).size(), code,
                          "ideal count differs from partition search");
               });

      ctx.each("congruence-lattice", ctx.bound(7), [](Checker& c, Lattice const& L,
                                                      CanonicalCode const& code) {
        Lattice C = congruence_lattice(L);
        c.expect(C.size() == con_count(L) && is_distributive(C), code,
                 "Con L has |Con L| elements and is distributive");
      });

      ctx.each("transposed-prime-intervals", ctx.bound(7),
               [](Checker& c, Lattice const& L, CanonicalCode const& code) {
                 auto const&             edges = L.covers();
                 std::vector<Congruence> cons;
                 for (auto const& [a, b] : edges) {
                   cons.push_back(principal_congruence(L, a, b));
                 }
                 bool ok = true;
                 for (std::size_t i = 0; i < edges.size(); ++i) {
                   for (std::size_t j = 0; j < edges.size(); ++j) {
                     if (i != j && transposed(L, edges[i], edges[j])) {
                       ok = ok && cons[i] == cons[j];
                     }
                   }
                 }
                 c.expect(ok, code, "transposed prime intervals give different con");
               });
    }

    ////////////////////////////////////////////////////////////////////////
    // density-laws
    ////////////////////////////////////////////////////////////////////////

    void density_laws(Context& ctx) {
      std::size_t const pair_bound = ctx.bound(6);
      ctx.single("glued-sum-product", [&](Checker& c) {
        std::vector<std::pair<Lattice, Dyadic>> all;
        for_each_lattice(pair_bound, LatticeClass::All,
                         [&](Lattice const& L, CanonicalCode const&) {
                           all.emplace_back(L, congruence_density(L));
                         },
                         std::max(pair_bound, kDefaultBudget));
        for (auto const& [K, dk] : all) {
          for (auto const& [M, dm] : all) {
            Lattice S = glued_sum(K, M);
            c.expect(congruence_density(S) == dk * dm, canonical_form(S).hex(),
                     "cd(K + M) = cd K * cd M");
          }
        }
      });
      ctx.out.back().max_size = pair_bound;

      ctx.each("one-point-monotone", ctx.bound(6), [](Checker& c, Lattice const& L,
                                                      CanonicalCode const& code) {
        Dyadic const d = congruence_density(L);
        for (auto const& e : L.covers()) {
          c.expect(congruence_density(one_point_extension(L, e)) <= d, code,
                   "a one-point extension increased cd");
        }
      });

      ctx.each("core-invariance", ctx.bound(7, true), [](Checker& c, Lattice const& L,
                                                         CanonicalCode const& code) {
        c.expect(congruence_density(core(L)) == congruence_density(L), code,
                 "cd(Core L) = cd L");
      });

      ctx.each("core-order-independence", ctx.bound(7, true),
               [](Checker& c, Lattice const& L, CanonicalCode const& code) {
                 c.expect(is_isomorphic(core(L, CollapseOrder::Smallest),
                                        core(L, CollapseOrder::Largest)),
                          code, "collapse order changed the core");
               });

      ctx.each("collapse-invariance", ctx.bound(7, true),
               [](Checker& c, Lattice const& L, CanonicalCode const& code) {
                 Dyadic const d = congruence_density(L);
                 for (auto const& e : gluing_edges(L)) {
                   c.expect(congruence_density(collapse_gluing_edge(L, e)) == d, code,
                            "collapsing a gluing edge changed cd");
                 }
               });

      std::size_t const monoid_bound = ctx.bound(6);
      ctx.single("monoid-closure", [&](Checker& c) {
        auto const values = scd(LatticeClass::All, monoid_bound,
                                std::max(monoid_bound, kDefaultBudget));
        for (auto const& a : values) {
          for (auto const& b : values) {
            Lattice S = glued_sum(lattice_by_code(a.witness, a.witness_size),
                                  lattice_by_code(b.witness, b.witness_size));
            c.expect(congruence_density(S) == a.density * b.density,
                     canonical_form(S).hex(),
                     "glued sum of witnesses does not realise the product");
          }
        }
      });
      ctx.out.back().max_size = monoid_bound;
    }

    ////////////////////////////////////////////////////////////////////////
    // skeleton
    ////////////////////////////////////////////////////////////////////////

    void skeleton_suite(Context& ctx) {
      ctx.each("skeleton-closure", ctx.bound(8), [](Checker& c, Lattice const& L,
                                                    CanonicalCode const& code) {
        Bitset s = skeleton(L).elements;
        c.expect(s.none() || is_sublattice(L, s), code,
                 "Skel L is not closed under join and meet");
      });

      ctx.each("skeleton-rno-bound", ctx.bound(8), [](Checker& c, Lattice const& L,
                                                      CanonicalCode const& code) {
        c.expect(skeleton(L).size() <= reducibility_number(L), code,
                 "|Skel L| <= rno L");
      });

      ctx.each("chain-decomposition", ctx.bound(8), [](Checker& c, Lattice const& L,
                                                       CanonicalCode const& code) {
        if (!has_reducible_bounds(L)) {
          return;
        }
        bool ok = true;
        try {
          auto   dec = skeleton_coordinates(L);
          Bitset covered(L.size());
          for (auto const& [lo, hi] : dec.pi) {
            covered |= L.up_set(dec.embedding[lo]) & L.down_set(dec.embedding[hi]);
          }
          ok = covered.count() == L.size();
        } catch (Error const&) {
          ok = false;
        }
        c.expect(ok, code, "L is the union of chain intervals over skeleton edges");
      });

      ctx.each("mext-roundtrip", ctx.bound(7), [](Checker& c, Lattice const& L,
                                                  CanonicalCode const& code) {
        if (!has_reducible_bounds(L)) {
          return;
        }
        auto dec = skeleton_coordinates(L);
        c.expect(canonical_form(multi_point_extension(dec.skeleton, dec.pi, dec.s))
                     == code,
                 code, "MExt(Skel L, pi, s) is not isomorphic to L");
      });

      ctx.each("projections", ctx.bound(7), [](Checker& c, Lattice const& L,
                                               CanonicalCode const& code) {
        if (!has_reducible_bounds(L)) {
          return;
        }
        Bitset const s  = skeleton(L).elements;
        bool         ok = true;
        for (ElementId x = 0; x < L.size(); ++x) {
          auto [lo, hi] = projections(L, x);
          ok = ok && s.test(lo) && s.test(hi) && L.leq(lo, x) && L.leq(x, hi)
               && (s.test(x) == (lo == hi));
        }
        c.expect(ok, code, "dne x <= x <= upe x in Skel L, equal iff x in Skel L");
      });

      ctx.each("truncation-density", ctx.bound(8), [](Checker& c, Lattice const& L,
                                                      CanonicalCode const& code) {
        if (skeleton(L).empty()) {
          return;
        }
        Lattice K = truncate_to_skeleton_span(L);
        c.expect(has_reducible_bounds(K)
                     && congruence_density(K) == congruence_density(L),
                 code, "truncation keeps cd and has reducible bounds");
      });

      Dyadic const three_quarters = Dyadic::parse("3/4");
      std::size_t const f = f_of_p(three_quarters);
      ctx.each("skeleton-size-bound", ctx.bound(9), [&](Checker& c, Lattice const& L,
                                                        CanonicalCode const& code) {
        if (congruence_density(L) >= three_quarters) {
          c.expect(skeleton(L).size() <= f, code, "cd >= 3/4 but |Skel L| > f(p)");
        }
      });

      Dyadic const eighth = Dyadic::pow2_neg(3);
      ctx.each("m3-configuration-bound", ctx.bound(8),
               [&](Checker& c, Lattice const& L, CanonicalCode const& code) {
                 if (has_mk_configuration(L, 3) || has_dual_mk_configuration(L, 3)) {
                   c.expect(congruence_density(L) <= eighth, code,
                            "M_3 configuration present but cd > 1/8");
                 }
               });

      ctx.each("cover-count-bound", ctx.bound(8), [&](Checker& c, Lattice const& L,
                                                      CanonicalCode const& code) {
        if (max_cover_count(L) >= ramsey_r33()) {
          c.expect(congruence_density(L) <= eighth, code,
                   "an element with >= R(3,3) covers but cd > 1/8");
        }
      });
    }

    ////////////////////////////////////////////////////////////////////////
    // semimodular
    ////////////////////////////////////////////////////////////////////////

    void semimodular_suite(Context& ctx) {
      std::size_t const n = ctx.bound(9);
      Checker           c(ctx.suite, "semimodular-core-identity", n);
      for_each_lattice(
          n, LatticeClass::Semimodular,
          [&](Lattice const& L, CanonicalCode const& code) {
            if (!has_reducible_bounds(L)) {
              return;
            }
            Lattice S = *skeleton(L).lattice;
            c.expect(canonical_form(core(L)) == canonical_form(core(S)), code,
                     "Core L differs from Core(Skel L)");
          },
          std::max(n, kDefaultBudget));
      ctx.out.push_back(c.finish());

      if (n < 9) {
        return;
      }
      for (auto const* p : {"1/2", "1/4"}) {
        Dyadic const pd = Dyadic::parse(p);
        auto         a  = scd_slice(LatticeClass::Semimodular, n - 1, pd, n);
        auto         b  = scd_slice(LatticeClass::Semimodular, n, pd, n);
        auto values = [](std::vector<ScdEntry> const& v) {
          std::vector<Dyadic> out;
          for (auto const& e : v) {
            out.push_back(e.density);
          }
          return out;
        };
        Checker probe(ctx.suite, std::string("slice-stability-p=") + p, n);
        CheckResult r  = probe.finish();
        r.informational = true;
        r.cases         = 1;
        r.detail = values(a) == values(b)
                       ? "identical at sizes " + std::to_string(n - 1) + " and "
                             + std::to_string(n)
                       : "differs between sizes " + std::to_string(n - 1) + " and "
                             + std::to_string(n);
        ctx.out.push_back(std::move(r));
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // formulas
    ////////////////////////////////////////////////////////////////////////

    void formulas(Context& ctx) {
      ctx.single("chains", [](Checker& c) {
        for (std::size_t n = 1; n <= 10; ++n) {
          Lattice C = chain(n);
          c.expect(con_count(C) == BigInt(1) << (n - 1)
                       && congruence_density(C) == Dyadic::one(),
                   "chain:" + std::to_string(n), "|Con C_n| = 2^(n-1), cd = 1");
        }
      });

      ctx.single("b4", [](Checker& c) {
        Lattice B = boolean4();
        c.expect(con_count(B) == 4 && congruence_density(B) == Dyadic::parse("1/2"),
                 "b4", "|Con B_4| = 4, cd = 1/2");
      });

      ctx.single("nk-family", [](Checker& c) {
        for (std::size_t k = 5; k <= 12; ++k) {
          Lattice N = n_k(k);
          BigInt  expected = (BigInt(1) << (k - 4)) + 3;
          // (8 + 3 * 2^(7-k)) / 64 = (2^(k-4) + 3) / 2^(k-1)
          c.expect(con_count(N) == expected
                       && congruence_density(N) == Dyadic(expected, k - 1),
                   "nk:" + std::to_string(k), "|Con N_k| = 2^(k-4) + 3");
        }
      });

      ctx.single("lkn-family", [](Checker& c) {
        for (std::size_t n = 1; n <= 4; ++n) {
          Dyadic const limit = Dyadic::pow2_neg(n + 3);
          Dyadic       prev_gap;
          for (std::size_t k = 5; k <= 12; ++k) {
            Dyadic const d   = congruence_density(l_k_n(k, n));
            Dyadic const gap = d - limit;
            std::string  who = "lkn:" + std::to_string(k) + "," + std::to_string(n);
            c.expect(d == l_k_n_density_formula(k, n), who,
                     "cd(L_{k,n}) = 2^-(n+3) + 3/2^(n+k-1)");
            if (k > 5) {
              c.expect(gap < prev_gap, who, "distance to the limit must shrink");
            }
            prev_gap = gap;
          }
        }
      });

      ctx.single("nk-subdirect", [](Checker& c) {
        Lattice const N5 = n_k(5);
        for (std::size_t k = 5; k <= 10; ++k) {
          Lattice const N = n_k(k);
          std::size_t const t = k - 3;
          Congruence meet = Congruence::total(k);
          bool       ok   = true;
          for (std::size_t i = 1; i < t; ++i) {
            Congruence th = n_k_theta(k, i);
            ok            = ok && is_congruence(N, th.block_of)
                 && is_isomorphic(quotient(N, th), N5);
            meet = intersect(meet, th);
          }
          ok = ok && meet == Congruence::identity(k);
          c.expect(ok, "nk:" + std::to_string(k),
                   "Θ_i meet to Δ and each N_k/Θ_i is N_5");
        }
      });

      ctx.single("mk-density", [](Checker& c) {
        for (std::size_t k = 3; k <= 5; ++k) {
          c.expect(congruence_density(m_k(k)) == Dyadic::pow2_neg(k),
                   "mk:" + std::to_string(k), "cd(M_k) = 2^-k");
        }
      });

      ctx.single("ramsey", [](Checker& c) {
        c.expect(ramsey_r33() == 6, "R(3,3)", "R(3,3) = 6");
        // Every m/2^e in (1/2, 1] with e <= 10.
        for (std::uint64_t e = 0; e <= 10; ++e) {
          for (std::uint64_t m = 1; m <= (1ull << e); m += 2) {
            Dyadic p(m, e);
            if (p * Dyadic(2, 0) > Dyadic::one()) {
              c.expect(k_of_p(p) == 3 && f_of_p(p) == 42, p.str(), "f(p) = 42");
            }
          }
        }
      });

      ctx.single("k-of-p", [](Checker& c) {
        for (std::uint64_t e = 0; e <= 12; ++e) {
          for (std::uint64_t m = 1; m <= (1ull << e); m += 2) {
            Dyadic      p(m, e);
            // 1/p >= 2^j  iff  2^(e-j) >= m
            std::size_t j = 0;
            while (j < e && (1ull << (e - j - 1)) >= m) {
              ++j;
            }
            c.expect(k_of_p(p) == j + 3, p.str(), "k(p) = floor(log2(1/p)) + 3");
          }
        }
      });

      ctx.single("lnc-values", [](Checker& c) {
        for (std::size_t n = 1; n <= 7; ++n) {
          c.expect(lnc(LatticeClass::All, n, 1) == BigInt(1) << (n - 1),
                   "size " + std::to_string(n), "lnc(All, n, 1) = 2^(n-1)");
        }
        c.expect(lnc(LatticeClass::Modular, 4, 2) == 4, "modular 4", "lnc = 4");
      });

      ctx.single("scd-five", [](Checker& c) {
        std::vector<Dyadic> got;
        for (auto const& e : scd(LatticeClass::All, 5)) {
          got.push_back(e.density);
        }
        std::vector<Dyadic> want{Dyadic::one(), Dyadic::parse("1/2"),
                                 Dyadic::parse("5/16"), Dyadic::parse("1/8")};
        c.expect(got == want, "scd(All, 5)", "{1, 1/2, 5/16, 1/8}");
      });
    }

    using SuiteFn = void (*)(Context&);

    struct Suite {
      std::string_view name;
      SuiteFn          run;
    };

    constexpr Suite kSuites[] = {
        {"core-ops", core_ops},         {"density-laws", density_laws},
        {"skeleton", skeleton_suite},   {"semimodular", semimodular_suite},
        {"formulas", formulas},
    };

  }  // namespace

  bool VerifyReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(),
                       [](auto const& c) { return c.informational || c.passed; });
  }

  std::vector<std::string_view> suite_names() {
    std::vector<std::string_view> out;
    for (auto const& s : kSuites) {
      out.push_back(s.name);
    }
    return out;
  }

  VerifyReport run_verify(std::string_view suite, VerifyOptions const& options) {
    VerifyReport report;
    bool         found = false;
    for (auto const& s : kSuites) {
      if (suite == "all" || suite == s.name) {
        Context ctx{options, report.checks, std::string(s.name)};
        s.run(ctx);
        found = true;
      }
    }
    if (!found) {
      throw Error(ErrorKind::InvalidInput, "unknown suite '" + std::string(suite) + "'");
    }
    return report;
  }

}  // namespace latcd
