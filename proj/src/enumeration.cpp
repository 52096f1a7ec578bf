#include "latcd/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <unordered_set>

#include "latcd/congruence.hpp"
#include "latcd/constructions.hpp"

namespace latcd {

  namespace {

    // Every lattice of size >= 3 is some smaller lattice K plus a coatom c.
    // c's strict down-set D ⊆ K \ {1} is a nonempty down-set whose joins
    // stay in D unless they reach 1.
    std::vector<Enumerated> grow(std::vector<Enumerated> const& parents) {
      std::unordered_set<CanonicalCode, CanonicalCodeHash> seen;
      std::vector<Enumerated>                              out;
      for (auto const& parent : parents) {
        Lattice const&    K   = parent.lattice;
        std::size_t const m   = K.size();
        auto const        top = K.top();
        std::vector<std::uint32_t> below(m - 1, 0);
        for (ElementId x = 0; x < top; ++x) {
          K.down_set(x).for_each([&](std::size_t y) { below[x] |= 1u << y; });
        }
        for (std::uint32_t D = 1; D < (1u << (m - 1)); D += 2) {
          bool ok = true;
          for (ElementId x = 0; x < top && ok; ++x) {
            if ((D >> x & 1u) == 0) {
              continue;
            }
            ok = (below[x] & ~D) == 0;
            for (ElementId y = x + 1; y < top && ok; ++y) {
              if (D >> y & 1u) {
                ElementId j = K.join(x, y);
                ok          = j == top || (D >> j & 1u);
              }
            }
          }
          if (!ok) {
            continue;
          }
          auto const        c = static_cast<ElementId>(m);
          std::vector<Edge> covers;
          for (auto const& e : K.covers()) {
            if (!(e.second == top && (D >> e.first & 1u))) {
              covers.push_back(e);
            }
          }
          for (ElementId x = 0; x < top; ++x) {
            if (D >> x & 1u) {
              bool maximal = true;
              for (ElementId y : K.upper_covers(x)) {
                maximal = maximal && (D >> y & 1u) == 0;
              }
              if (maximal) {
                covers.emplace_back(x, c);
              }
            }
          }
          covers.emplace_back(c, top);
          Lattice       L    = Lattice::from_covers(m + 1, covers);
          CanonicalCode code = canonical_form(L);
          if (seen.insert(code).second) {
            out.push_back({std::move(L), std::move(code)});
          }
        }
      }
      std::sort(out.begin(), out.end(),
                [](auto const& a, auto const& b) { return a.code < b.code; });
      return out;
    }

    void check_budget(std::size_t n, std::size_t budget) {
      if (n == 0) {
        throw Error(ErrorKind::InvalidInput, "lattice size must be positive");
      }
      if (n > budget) {
        throw Error(ErrorKind::BudgetExceeded,
                    "size " + std::to_string(n) + " exceeds the budget of "
                        + std::to_string(budget));
      }
    }

  }  // namespace

  std::string_view to_string(LatticeClass cls) noexcept {
    switch (cls) {
      case LatticeClass::All: return "all";
      case LatticeClass::Modular: return "modular";
      case LatticeClass::Semimodular: return "semimodular";
      case LatticeClass::Distributive: return "distributive";
    }
    return "all";
  }

  LatticeClass parse_lattice_class(std::string_view name) {
    for (auto cls : {LatticeClass::All, LatticeClass::Modular,
                     LatticeClass::Semimodular, LatticeClass::Distributive}) {
      if (name == to_string(cls)) {
        return cls;
      }
    }
    throw Error(ErrorKind::InvalidInput,
                "unknown lattice class '" + std::string(name) + "'");
  }

  bool is_variety(LatticeClass cls) noexcept {
    return cls != LatticeClass::Semimodular;
  }

  bool belongs(Lattice const& L, LatticeClass cls) {
    switch (cls) {
      case LatticeClass::All: return true;
      case LatticeClass::Modular: return is_modular(L);
      case LatticeClass::Semimodular: return is_semimodular(L);
      case LatticeClass::Distributive: return is_distributive(L);
    }
    return false;
  }

  std::vector<Enumerated> const& enumerate_all(std::size_t n, std::size_t budget) {
    check_budget(n, budget);
    static std::mutex                                    mutex;
    static std::map<std::size_t, std::vector<Enumerated>> levels;
    std::lock_guard                                      lock(mutex);
    if (levels.empty()) {
      for (std::size_t k = 1; k <= 2; ++k) {
        Lattice C = chain(k);
        auto    code = canonical_form(C);
        levels[k].push_back({std::move(C), std::move(code)});
      }
    }
    for (std::size_t k = levels.rbegin()->first + 1; k <= n; ++k) {
      levels[k] = grow(levels[k - 1]);
    }
    return levels.at(n);
  }

  std::vector<Enumerated> enumerate_lattices(std::size_t n, LatticeClass cls,
                                             std::size_t budget) {
    std::vector<Enumerated> out;
    for (auto const& e : enumerate_all(n, budget)) {
      if (belongs(e.lattice, cls)) {
        out.push_back(e);
      }
    }
    return out;
  }

  DensityRecord density_record(Lattice const& L, CanonicalCode const& code) {
    DensityRecord r;
    r.code         = code;
    r.size         = L.size();
    r.con_count    = con_count(L);
    r.density      = Dyadic(r.con_count, L.size() - 1);
    r.modular      = is_modular(L);
    r.semimodular  = is_semimodular(L);
    r.distributive = is_distributive(L);
    return r;
  }

  DensityRecord density_record(Lattice const& L) {
    return density_record(L, canonical_form(L));
  }

  std::vector<DensityRecord> density_records(std::size_t n, LatticeClass cls,
                                             std::size_t budget) {
    std::vector<DensityRecord> out;
    for (auto const& e : enumerate_all(n, budget)) {
      if (belongs(e.lattice, cls)) {
        out.push_back(density_record(e.lattice, e.code));
      }
    }
    return out;
  }

  BigInt lnc(LatticeClass cls, std::size_t n, std::size_t k, std::size_t budget) {
    if (k == 0) {
      throw Error(ErrorKind::Domain, "k must be positive");
    }
    std::vector<BigInt> values;
    for (auto const& e : enumerate_all(n, budget)) {
      if (belongs(e.lattice, cls)) {
        values.push_back(con_count(e.lattice));
      }
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.size() < k) {
      throw Error(ErrorKind::Undefined,
                  "only " + std::to_string(values.size())
                      + " distinct congruence counts among " + std::to_string(n)
                      + "-element " + std::string(to_string(cls)) + " lattices");
    }
    return values[k - 1];
  }

  std::vector<ScdEntry> scd(LatticeClass cls, std::size_t max_size,
                            std::size_t budget) {
    check_budget(max_size, budget);
    std::map<Dyadic, ScdEntry, std::greater<>> seen;
    for_each_lattice(
        max_size, cls,
        [&](Lattice const& L, CanonicalCode const& code) {
          Dyadic d = congruence_density(L);
          seen.try_emplace(d, ScdEntry{d, code, L.size()});
        },
        budget);
    std::vector<ScdEntry> out;
    for (auto& [d, entry] : seen) {
      out.push_back(std::move(entry));
    }
    return out;
  }

  std::vector<ScdEntry> scd_slice(LatticeClass cls, std::size_t max_size,
                                  Dyadic const& p, std::size_t budget) {
    if (p.is_zero() || p > Dyadic::one()) {
      throw Error(ErrorKind::Domain, "p must lie in (0, 1]");
    }
    auto all = scd(cls, max_size, budget);
    std::erase_if(all, [&](ScdEntry const& e) { return e.density < p; });
    return all;
  }

  Dyadic l_k_n_density_formula(std::size_t k, std::size_t n) {
    return Dyadic::pow2_neg(n + 3) + Dyadic(3, n + k - 1);
  }

  std::vector<ConvergenceRow> convergence_table(std::size_t n, std::size_t k_max) {
    if (n == 0 || k_max < 8) {
      throw Error(ErrorKind::Domain, "needs n >= 1 and k_max >= 8");
    }
    if (k_max > kConvergenceMaxK || n > 16) {
      throw Error(ErrorKind::BudgetExceeded,
                  "convergence table is limited to k_max <= 24 and n <= 16");
    }
    std::vector<ConvergenceRow> rows;
    for (std::size_t k = 8; k <= k_max; ++k) {
      rows.push_back({k, congruence_density(l_k_n(k, n)),
                      l_k_n_density_formula(k, n), Dyadic::pow2_neg(n + 3)});
    }
    return rows;
  }

}  // namespace latcd
