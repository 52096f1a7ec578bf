#include "latcd/canonical.hpp"

#include <algorithm>
#include <array>

namespace latcd {

  std::string CanonicalCode::hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string           out;
    out.reserve(bytes_.size() * 2);
    for (auto b : bytes_) {
      out.push_back(digits[b >> 4]);
      out.push_back(digits[b & 15]);
    }
    return out;
  }

  CanonicalCode CanonicalCode::from_hex(std::string_view hex) {
    auto nibble = [](char c) -> int {
      if (c >= '0' && c <= '9') {
        return c - '0';
      }
      if (c >= 'a' && c <= 'f') {
        return c - 'a' + 10;
      }
      return -1;
    };
    if (hex.size() % 2 != 0) {
      throw Error(ErrorKind::Parse, "odd-length canonical code");
    }
    std::vector<std::uint8_t> bytes;
    for (std::size_t i = 0; i < hex.size(); i += 2) {
      int hi = nibble(hex[i]);
      int lo = nibble(hex[i + 1]);
      if (hi < 0 || lo < 0) {
        throw Error(ErrorKind::Parse, "canonical code is not lowercase hex");
      }
      bytes.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
    }
    return CanonicalCode(std::move(bytes));
  }

  std::size_t CanonicalCodeHash::operator()(CanonicalCode const& c) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto b : c.bytes()) {
      h = (h ^ b) * 1099511628211ULL;
    }
    return h;
  }

  namespace {

    using Colors = std::vector<std::uint32_t>;

    template <typename Sig>
    Colors rank(std::vector<Sig> const& sig) {
      std::vector<Sig> sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      Colors out(sig.size());
      for (std::size_t x = 0; x < sig.size(); ++x) {
        out[x] = static_cast<std::uint32_t>(
            std::lower_bound(sorted.begin(), sorted.end(), sig[x]) - sorted.begin());
      }
      return out;
    }

    std::size_t distinct(Colors const& c) {
      return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
    }

    // Depth is the leading key, so colours ascend along every cover.
    Colors refined_colors(Lattice const& L) {
      std::size_t const n     = L.size();
      auto const        depth = depths(L);
      std::vector<std::size_t> height(n, 0);
      for (std::size_t x = n; x-- > 0;) {
        for (ElementId hi : L.upper_covers(static_cast<ElementId>(x))) {
          height[x] = std::max(height[x], height[hi] + 1);
        }
      }
      using Init = std::array<std::size_t, 5>;
      std::vector<Init> init(n);
      for (ElementId x = 0; x < n; ++x) {
        init[x] = {depth[x], height[x], L.lower_covers(x).size(),
                   L.upper_covers(x).size(),
                   L.up_set(x).count() * (n + 1) + L.down_set(x).count()};
      }
      Colors color = rank(init);
      while (true) {
        std::vector<std::vector<std::uint32_t>> sig(n);
        for (ElementId x = 0; x < n; ++x) {
          auto& s = sig[x];
          s.push_back(color[x]);
          std::vector<std::uint32_t> lo;
          std::vector<std::uint32_t> hi;
          for (auto y : L.lower_covers(x)) {
            lo.push_back(color[y]);
          }
          for (auto y : L.upper_covers(x)) {
            hi.push_back(color[y]);
          }
          std::sort(lo.begin(), lo.end());
          std::sort(hi.begin(), hi.end());
          s.push_back(static_cast<std::uint32_t>(lo.size()));
          s.insert(s.end(), lo.begin(), lo.end());
          s.insert(s.end(), hi.begin(), hi.end());
        }
        Colors next = rank(sig);
        if (distinct(next) == distinct(color)) {
          return next;
        }
        color = std::move(next);
      }
    }

    // -1, 0, 1 comparing bit strings of equal length, position 0 first.
    int compare_columns(Bitset const& a, Bitset const& b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        bool x = a.test(i);
        bool y = b.test(i);
        if (x != y) {
          return x ? 1 : -1;
        }
      }
      return 0;
    }

    class Search {
     public:
      explicit Search(Lattice const& L) : L_(L), n_(L.size()) {
        Colors color = refined_colors(L);
        std::vector<ElementId> by_color(n_);
        for (std::size_t x = 0; x < n_; ++x) {
          by_color[x] = static_cast<ElementId>(x);
        }
        std::stable_sort(by_color.begin(), by_color.end(),
                         [&color](ElementId a, ElementId b) {
                           return color[a] < color[b];
                         });
        for (std::size_t i = 0; i < n_; ++i) {
          if (i == 0 || color[by_color[i]] != color[by_color[i - 1]]) {
            cells_.emplace_back();
          }
          cells_.back().push_back(by_color[i]);
          cell_at_.push_back(cells_.size() - 1);
        }

        // Twins have identical strict up- and down-sets; swapping two of them
        // is an automorphism, so only one needs exploring.
        twin_.assign(n_, 0);
        std::vector<std::pair<Bitset, Bitset>> keys;
        for (ElementId x = 0; x < n_; ++x) {
          Bitset up   = L.up_set(x);
          Bitset down = L.down_set(x);
          up.reset(x);
          down.reset(x);
          auto key = std::make_pair(std::move(up), std::move(down));
          auto it  = std::find(keys.begin(), keys.end(), key);
          twin_[x] = static_cast<std::uint32_t>(it - keys.begin());
          if (it == keys.end()) {
            keys.push_back(std::move(key));
          }
        }

        placed_.assign(n_, false);
        less_.assign(n_ + 1, false);
      }

      std::vector<ElementId> run() {
        dfs(0);
        return best_order_;
      }

     private:
      Bitset column(ElementId c, std::size_t j) const {
        Bitset col(j);
        for (std::size_t i = 0; i < j; ++i) {
          if (L_.leq(order_[i], c)) {
            col.set(i);
          }
        }
        return col;
      }

      void dfs(std::size_t j) {
        if (j == n_) {
          if (!has_best_ || less_[j]) {
            has_best_   = true;
            best_order_ = order_;
            best_cols_  = cols_;
            std::fill(less_.begin(), less_.end(), false);
          }
          return;
        }
        std::vector<ElementId> cand;
        std::vector<Bitset>    cols;
        for (ElementId c : cells_[cell_at_[j]]) {
          if (!placed_[c]) {
            cand.push_back(c);
            cols.push_back(column(c, j));
          }
        }
        std::size_t m = 0;
        for (std::size_t k = 1; k < cand.size(); ++k) {
          if (compare_columns(cols[k], cols[m]) < 0) {
            m = k;
          }
        }
        std::vector<std::uint32_t> tried;
        for (std::size_t k = 0; k < cand.size(); ++k) {
          if (compare_columns(cols[k], cols[m]) != 0) {
            continue;
          }
          if (std::find(tried.begin(), tried.end(), twin_[cand[k]]) != tried.end()) {
            continue;
          }
          tried.push_back(twin_[cand[k]]);
          if (!has_best_ || less_[j]) {
            less_[j + 1] = true;
          } else {
            int cmp = compare_columns(cols[m], best_cols_[j]);
            if (cmp > 0) {
              return;
            }
            less_[j + 1] = cmp < 0;
          }
          placed_[cand[k]] = true;
          order_.push_back(cand[k]);
          cols_.push_back(cols[k]);
          dfs(j + 1);
          cols_.pop_back();
          order_.pop_back();
          placed_[cand[k]] = false;
        }
      }

      Lattice const&                      L_;
      std::size_t                         n_;
      std::vector<std::vector<ElementId>> cells_;
      std::vector<std::size_t>            cell_at_;
      std::vector<std::uint32_t>          twin_;
      std::vector<bool>                   placed_;
      std::vector<bool>                   less_;
      std::vector<ElementId>              order_;
      std::vector<Bitset>                 cols_;
      bool                                has_best_ = false;
      std::vector<ElementId>              best_order_;
      std::vector<Bitset>                 best_cols_;
    };

  }  // namespace

  std::vector<ElementId> canonical_labeling(Lattice const& L) {
    auto                   order = Search(L).run();
    std::vector<ElementId> position(L.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      position[order[i]] = static_cast<ElementId>(i);
    }
    return position;
  }

  CanonicalCode canonical_form(Lattice const& L) {
    std::size_t const n   = L.size();
    auto const        pos = canonical_labeling(L);
    std::vector<ElementId> order(n);
    for (ElementId x = 0; x < n; ++x) {
      order[pos[x]] = x;
    }
    std::vector<std::uint8_t> bytes{static_cast<std::uint8_t>(n >> 8),
                                    static_cast<std::uint8_t>(n & 0xff)};
    std::uint8_t acc  = 0;
    int          used = 0;
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        acc = static_cast<std::uint8_t>(acc << 1 | (L.leq(order[i], order[j]) ? 1 : 0));
        if (++used == 8) {
          bytes.push_back(acc);
          acc  = 0;
          used = 0;
        }
      }
    }
    if (used != 0) {
      bytes.push_back(static_cast<std::uint8_t>(acc << (8 - used)));
    }
    return CanonicalCode(std::move(bytes));
  }

  bool is_isomorphic(Lattice const& L, Lattice const& K) {
    return L.size() == K.size() && L.covers().size() == K.covers().size()
           && canonical_form(L) == canonical_form(K);
  }

}  // namespace latcd
