#ifndef LATCD_DYADIC_HPP_
#define LATCD_DYADIC_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace latcd {

  using BigInt = boost::multiprecision::cpp_int;

  //! Exact nonnegative dyadic rational mantissa / 2^exp.
  //!
  //! Always normalized: the mantissa is odd, or the value is zero with
  //! exp == 0. Equality and ordering are therefore structural.
  class Dyadic {
   public:
    Dyadic() = default;
    Dyadic(BigInt mantissa, std::uint64_t exp);

    static Dyadic one() { return Dyadic(1, 0); }
    //! 2^-e
    static Dyadic pow2_neg(std::uint64_t e) { return Dyadic(1, e); }
    //! Accepts "m/2^e", "m/d" with d a power of two, or an integer.
    static Dyadic parse(std::string_view text);

    [[nodiscard]] BigInt const&  mantissa() const noexcept { return m_; }
    [[nodiscard]] std::uint64_t  exp() const noexcept { return e_; }
    [[nodiscard]] bool           is_zero() const noexcept { return m_ == 0; }

    //! "m/2^e", e.g. "19/2^8".
    [[nodiscard]] std::string str() const;
    [[nodiscard]] long double approx() const;
    //! Decimal approximation with `digits` significant digits.
    [[nodiscard]] std::string decimal(int digits = 10) const;

    friend Dyadic operator*(Dyadic const& a, Dyadic const& b);
    friend Dyadic operator+(Dyadic const& a, Dyadic const& b);
    //! Throws Domain if the result would be negative.
    friend Dyadic operator-(Dyadic const& a, Dyadic const& b);

    friend std::strong_ordering operator<=>(Dyadic const& a, Dyadic const& b);
    friend bool operator==(Dyadic const& a, Dyadic const& b) noexcept {
      return a.e_ == b.e_ && a.m_ == b.m_;
    }

   private:
    void normalize();

    BigInt        m_ = 0;
    std::uint64_t e_ = 0;
  };

  [[nodiscard]] inline Dyadic dyadic_mul(Dyadic const& a, Dyadic const& b) {
    return a * b;
  }
  [[nodiscard]] inline std::strong_ordering dyadic_cmp(Dyadic const& a,
                                                       Dyadic const& b) {
    return a <=> b;
  }

}  // namespace latcd

#endif  // LATCD_DYADIC_HPP_
