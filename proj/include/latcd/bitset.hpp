#ifndef LATCD_BITSET_HPP_
#define LATCD_BITSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace latcd {

  //! Fixed-width dynamic bitset backed by 64-bit words. Used for order rows,
  //! element subsets and memo keys.
  class Bitset {
   public:
    using word_type = std::uint64_t;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    [[nodiscard]] std::size_t size() const noexcept { return n_; }

    [[nodiscard]] bool test(std::size_t i) const noexcept {
      return (w_[i >> 6] >> (i & 63)) & 1U;
    }
    void set(std::size_t i) noexcept { w_[i >> 6] |= word_type{1} << (i & 63); }
    void reset(std::size_t i) noexcept {
      w_[i >> 6] &= ~(word_type{1} << (i & 63));
    }
    void set_all() noexcept {
      for (auto& w : w_) {
        w = ~word_type{0};
      }
      trim();
    }
    void clear() noexcept {
      for (auto& w : w_) {
        w = 0;
      }
    }

    [[nodiscard]] std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : w_) {
        c += static_cast<std::size_t>(std::popcount(w));
      }
      return c;
    }
    [[nodiscard]] bool any() const noexcept {
      for (auto w : w_) {
        if (w != 0) {
          return true;
        }
      }
      return false;
    }
    [[nodiscard]] bool none() const noexcept { return !any(); }

    //! Index of the first set bit at or after `from`, or npos.
    [[nodiscard]] std::size_t next(std::size_t from = 0) const noexcept {
      if (from >= n_) {
        return npos;
      }
      std::size_t wi = from >> 6;
      word_type   w  = w_[wi] & (~word_type{0} << (from & 63));
      while (true) {
        if (w != 0) {
          return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
        }
        if (++wi == w_.size()) {
          return npos;
        }
        w = w_[wi];
      }
    }
    [[nodiscard]] std::size_t first() const noexcept { return next(0); }

    //! Index of the last set bit, or npos.
    [[nodiscard]] std::size_t last() const noexcept {
      for (std::size_t wi = w_.size(); wi-- > 0;) {
        if (w_[wi] != 0) {
          return (wi << 6) + 63
                 - static_cast<std::size_t>(std::countl_zero(w_[wi]));
        }
      }
      return npos;
    }

    template <typename F>
    void for_each(F&& f) const {
      for (std::size_t wi = 0; wi < w_.size(); ++wi) {
        word_type w = w_[wi];
        while (w != 0) {
          f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
          w &= w - 1;
        }
      }
    }

    [[nodiscard]] bool is_subset_of(Bitset const& other) const noexcept {
      for (std::size_t i = 0; i < w_.size(); ++i) {
        if ((w_[i] & ~other.w_[i]) != 0) {
          return false;
        }
      }
      return true;
    }
    [[nodiscard]] bool intersects(Bitset const& other) const noexcept {
      for (std::size_t i = 0; i < w_.size(); ++i) {
        if ((w_[i] & other.w_[i]) != 0) {
          return true;
        }
      }
      return false;
    }

    Bitset& operator&=(Bitset const& o) noexcept {
      for (std::size_t i = 0; i < w_.size(); ++i) {
        w_[i] &= o.w_[i];
      }
      return *this;
    }
    Bitset& operator|=(Bitset const& o) noexcept {
      for (std::size_t i = 0; i < w_.size(); ++i) {
        w_[i] |= o.w_[i];
      }
      return *this;
    }
    //! Set difference.
    Bitset& operator-=(Bitset const& o) noexcept {
      for (std::size_t i = 0; i < w_.size(); ++i) {
        w_[i] &= ~o.w_[i];
      }
      return *this;
    }
    friend Bitset operator&(Bitset a, Bitset const& b) noexcept {
      return a &= b;
    }
    friend Bitset operator|(Bitset a, Bitset const& b) noexcept {
      return a |= b;
    }
    friend Bitset operator-(Bitset a, Bitset const& b) noexcept {
      return a -= b;
    }

    friend bool operator==(Bitset const&, Bitset const&) = default;

    [[nodiscard]] std::size_t hash() const noexcept {
      std::size_t h = n_;
      for (auto w : w_) {
        h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6)
             + (h >> 2);
      }
      return h;
    }

    [[nodiscard]] std::vector<std::size_t> to_vector() const {
      std::vector<std::size_t> out;
      out.reserve(count());
      for_each([&out](std::size_t i) { out.push_back(i); });
      return out;
    }

   private:
    void trim() noexcept {
      if ((n_ & 63) != 0 && !w_.empty()) {
        w_.back() &= (word_type{1} << (n_ & 63)) - 1;
      }
    }

    std::size_t            n_ = 0;
    std::vector<word_type> w_;
  };

  struct BitsetHash {
    std::size_t operator()(Bitset const& b) const noexcept {
      return b.hash();
    }
  };

}  // namespace latcd

#endif  // LATCD_BITSET_HPP_
