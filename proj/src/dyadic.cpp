#include "latcd/dyadic.hpp"

#include <cctype>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "latcd/error.hpp"

namespace latcd {

  namespace {
    // Left-aligns a pair of dyadics onto the larger exponent.
    std::pair<BigInt, BigInt> align(Dyadic const& a, Dyadic const& b,
                                    std::uint64_t& e) {
      e = std::max(a.exp(), b.exp());
      BigInt x = a.mantissa() << static_cast<unsigned>(e - a.exp());
      BigInt y = b.mantissa() << static_cast<unsigned>(e - b.exp());
      return {std::move(x), std::move(y)};
    }

    BigInt parse_uint(std::string_view s, std::string_view whole) {
      if (s.empty()) {
        throw Error(ErrorKind::Parse, "bad dyadic '" + std::string(whole) + "'");
      }
      BigInt v = 0;
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw Error(ErrorKind::Parse, "bad dyadic '" + std::string(whole) + "'");
        }
        v = v * 10 + (c - '0');
      }
      return v;
    }
  }  // namespace

  Dyadic::Dyadic(BigInt mantissa, std::uint64_t exp)
      : m_(std::move(mantissa)), e_(exp) {
    if (m_ < 0) {
      throw Error(ErrorKind::Domain, "dyadic mantissa must be nonnegative");
    }
    normalize();
  }

  void Dyadic::normalize() {
    if (m_ == 0) {
      e_ = 0;
      return;
    }
    auto const tz = static_cast<std::uint64_t>(boost::multiprecision::lsb(m_));
    auto const shift = std::min(tz, e_);
    m_ >>= static_cast<unsigned>(shift);
    e_ -= shift;
  }

  Dyadic Dyadic::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Dyadic(parse_uint(text, text), 0);
    }
    BigInt           num = parse_uint(text.substr(0, slash), text);
    std::string_view den = text.substr(slash + 1);
    if (den.starts_with("2^")) {
      BigInt e = parse_uint(den.substr(2), text);
      if (e > 1'000'000) {
        throw Error(ErrorKind::Parse, "exponent too large in '" + std::string(text) + "'");
      }
      return Dyadic(std::move(num), e.convert_to<std::uint64_t>());
    }
    BigInt d = parse_uint(den, text);
    if (d == 0 || (d & (d - 1)) != 0) {
      throw Error(ErrorKind::Parse,
                  "denominator of '" + std::string(text) + "' is not a power of two");
    }
    return Dyadic(std::move(num), boost::multiprecision::msb(d));
  }

  std::string Dyadic::str() const {
    return m_.str() + "/2^" + std::to_string(e_);
  }

  long double Dyadic::approx() const {
    return std::ldexp(m_.convert_to<long double>(), -static_cast<int>(e_));
  }

  std::string Dyadic::decimal(int digits) const {
    std::ostringstream os;
    os << std::setprecision(digits) << approx();
    return os.str();
  }

  Dyadic operator*(Dyadic const& a, Dyadic const& b) {
    return Dyadic(a.m_ * b.m_, a.e_ + b.e_);
  }

  Dyadic operator+(Dyadic const& a, Dyadic const& b) {
    std::uint64_t e;
    auto [x, y] = align(a, b, e);
    return Dyadic(x + y, e);
  }

  Dyadic operator-(Dyadic const& a, Dyadic const& b) {
    std::uint64_t e;
    auto [x, y] = align(a, b, e);
    if (x < y) {
      throw Error(ErrorKind::Domain, "negative dyadic difference");
    }
    return Dyadic(x - y, e);
  }

  std::strong_ordering operator<=>(Dyadic const& a, Dyadic const& b) {
    std::uint64_t e;
    auto [x, y] = align(a, b, e);
    if (x < y) {
      return std::strong_ordering::less;
    }
    if (y < x) {
      return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

}  // namespace latcd
