#pragma once

#include <cstdint>
#include <ostream>

namespace chiro {

// Sign of a real quantity: -1, 0 or +1. Closed under product and negation.
struct Sign {
  std::int8_t value = 0;

  constexpr Sign() = default;
  constexpr explicit Sign(int v) : value(static_cast<std::int8_t>(v)) {}

  static constexpr Sign negative() { return Sign(-1); }
  static constexpr Sign zero() { return Sign(0); }
  static constexpr Sign positive() { return Sign(+1); }

  constexpr bool is_zero() const { return value == 0; }
  constexpr int to_int() const { return value; }

  constexpr bool operator==(const Sign&) const = default;

  constexpr friend Sign operator*(Sign a, Sign b) {
    return Sign(a.value * b.value);
  }
  constexpr friend Sign operator-(Sign a) { return Sign(-a.value); }
};

inline std::ostream& operator<<(std::ostream& os, Sign s) {
  return os << static_cast<int>(s.value);
}

}  // namespace chiro
