#include "latcd/constructions.hpp"

#include <algorithm>
#include <string>

namespace latcd {

  bool componentwise_leq(ExtensionVector const& r, ExtensionVector const& s) {
    if (r.size() != s.size()) {
      throw Error(ErrorKind::ArityMismatch, "vectors of different lengths");
    }
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] > s[i]) {
        return false;
      }
    }
    return true;
  }

  Lattice chain(std::size_t n) {
    if (n == 0) {
      throw Error(ErrorKind::Domain, "chain length must be positive");
    }
    std::vector<Edge> covers;
    for (ElementId i = 0; i + 1 < n; ++i) {
      covers.emplace_back(i, i + 1);
    }
    return Lattice::from_covers(n, covers);
  }

  Lattice direct_product(Lattice const& K, Lattice const& M) {
    auto const        k = static_cast<ElementId>(K.size());
    auto const        m = static_cast<ElementId>(M.size());
    std::vector<Edge> covers;
    for (auto const& [lo, hi] : K.covers()) {
      for (ElementId y = 0; y < m; ++y) {
        covers.emplace_back(lo * m + y, hi * m + y);
      }
    }
    for (ElementId x = 0; x < k; ++x) {
      for (auto const& [lo, hi] : M.covers()) {
        covers.emplace_back(x * m + lo, x * m + hi);
      }
    }
    return Lattice::from_covers(static_cast<std::size_t>(k) * m, covers);
  }

  Lattice boolean4() {
    return direct_product(chain(2), chain(2));
  }

  Lattice glued_sum(Lattice const& K, Lattice const& M) {
    auto const        shift = static_cast<ElementId>(K.size() - 1);
    std::vector<Edge> covers = K.covers();
    for (auto const& [lo, hi] : M.covers()) {
      covers.emplace_back(lo + shift, hi + shift);
    }
    return Lattice::from_covers(K.size() + M.size() - 1, covers);
  }

  Lattice glued_sum_all(std::vector<Lattice> const& parts) {
    if (parts.empty()) {
      throw Error(ErrorKind::InvalidInput, "glued sum of no lattices");
    }
    Lattice acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
      acc = glued_sum(acc, parts[i]);
    }
    return acc;
  }

  Lattice m_k(std::size_t k) {
    if (k < 3) {
      throw Error(ErrorKind::Domain, "M_k needs k >= 3, got " + std::to_string(k));
    }
    auto const        top = static_cast<ElementId>(k + 1);
    std::vector<Edge> covers;
    for (ElementId a = 1; a <= k; ++a) {
      covers.emplace_back(0, a);
      covers.emplace_back(a, top);
    }
    return Lattice::from_covers(k + 2, covers);
  }

  Lattice n_k(std::size_t k) {
    if (k < 5) {
      throw Error(ErrorKind::Domain, "N_k needs k >= 5, got " + std::to_string(k));
    }
    auto const        t   = static_cast<ElementId>(k - 3);
    ElementId const   b   = t + 1;
    ElementId const   top = t + 2;
    std::vector<Edge> covers;
    covers.emplace_back(0, 1);
    for (ElementId i = 1; i < t; ++i) {
      covers.emplace_back(i, i + 1);
    }
    covers.emplace_back(t, top);
    covers.emplace_back(0, b);
    covers.emplace_back(b, top);
    return Lattice::from_covers(k, covers);
  }

  Congruence n_k_theta(std::size_t k, std::size_t i) {
    if (k < 5) {
      throw Error(ErrorKind::Domain, "N_k needs k >= 5, got " + std::to_string(k));
    }
    std::size_t const t = k - 3;
    if (i < 1 || i + 1 > t) {
      throw Error(ErrorKind::Domain,
                  "Θ_i needs 1 <= i <= " + std::to_string(t - 1));
    }
    std::vector<std::uint32_t> labels(k);
    for (std::size_t x = 0; x < k; ++x) {
      labels[x] = static_cast<std::uint32_t>(x);
    }
    for (std::size_t a = 1; a <= t; ++a) {
      labels[a] = a <= i ? 1 : static_cast<std::uint32_t>(i + 1);
    }
    return Congruence::from_labels(labels);
  }

  Lattice l_k_n(std::size_t k, std::size_t n) {
    if (k < 5 || n < 1) {
      throw Error(ErrorKind::Domain, "L_{k,n} needs k >= 5 and n >= 1");
    }
    std::vector<Lattice> parts{n_k(k)};
    Lattice const        b4 = boolean4();
    for (std::size_t i = 0; i < n; ++i) {
      parts.push_back(b4);
    }
    return glued_sum_all(parts);
  }

  OnePointExtension one_point_extension_with_id(Lattice const& L, Edge edge) {
    auto [u, v] = edge;
    if (u >= L.size() || v >= L.size() || !L.is_edge(u, v)) {
      throw Error(ErrorKind::NotAnEdge, "(" + std::to_string(u) + ", "
                                            + std::to_string(v) + ") is not an edge");
    }
    auto const        x = static_cast<ElementId>(L.size());
    std::vector<Edge> covers;
    covers.reserve(L.covers().size() + 1);
    for (auto const& e : L.covers()) {
      if (e != edge) {
        covers.push_back(e);
      }
    }
    covers.emplace_back(u, x);
    covers.emplace_back(x, v);
    Lattice result = Lattice::from_covers(L.size() + 1, covers);
    ElementId id   = result.find_origin(x);
    return {std::move(result), id};
  }

  Lattice one_point_extension(Lattice const& L, Edge edge) {
    return one_point_extension_with_id(L, edge).lattice;
  }

  Lattice multi_point_extension(Lattice const& L, EdgeEnumeration const& pi,
                                ExtensionVector const& s) {
    if (pi.size() != s.size()) {
      throw Error(ErrorKind::LengthMismatch,
                  "edge enumeration has " + std::to_string(pi.size())
                      + " entries but the extension vector has "
                      + std::to_string(s.size()));
    }
    if (pi.size() != L.covers().size()) {
      throw Error(ErrorKind::LengthMismatch,
                  "edge enumeration has " + std::to_string(pi.size())
                      + " entries but the lattice has "
                      + std::to_string(L.covers().size()) + " edges");
    }
    auto sorted = pi;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != L.covers()) {
      throw Error(ErrorKind::NotAnEdge,
                  "edge enumeration is not a permutation of the edge set");
    }

    Lattice                cur = L;
    std::vector<ElementId> label(L.size());  // label of each current element
    std::vector<ElementId> where(L.size());  // current id of each old element
    for (ElementId x = 0; x < L.size(); ++x) {
      label[x] = where[x] = x;
    }
    auto next_label = static_cast<ElementId>(L.size());

    for (std::size_t i = 0; i < pi.size(); ++i) {
      auto const [u, v] = pi[i];
      ElementId  w      = where[u];
      for (std::size_t j = 0; j < s[i]; ++j) {
        auto [next, inserted] = one_point_extension_with_id(cur, {w, where[v]});
        std::vector<ElementId> relabelled(next.size());
        for (ElementId y = 0; y < next.size(); ++y) {
          ElementId o   = next.origin(y);
          relabelled[y] = o == cur.size() ? next_label : label[o];
          if (relabelled[y] < L.size()) {
            where[relabelled[y]] = y;
          }
        }
        label = std::move(relabelled);
        ++next_label;
        w   = inserted;
        cur = std::move(next);
      }
    }
    return Lattice::from_covers(cur.size(), cur.covers(), label);
  }

}  // namespace latcd
