#pragma once

#include <bit>
#include <cstdint>

namespace espn {

// IEEE 754 binary16 <-> binary32 conversion. Encoding rounds to nearest
// even; NaNs stay NaN, overflow saturates to infinity, subnormals handled.

inline std::uint16_t float_to_half(float f) {
  const std::uint32_t x = std::bit_cast<std::uint32_t>(f);
  const std::uint32_t sign = (x >> 16) & 0x8000u;
  const std::uint32_t abs = x & 0x7fffffffu;

  if (abs >= 0x7f800000u) {  // inf / NaN
    std::uint32_t mant = (abs > 0x7f800000u) ? 0x0200u : 0u;  // quiet the NaN
    return static_cast<std::uint16_t>(sign | 0x7c00u | mant |
                                      ((abs >> 13) & 0x03ffu));
  }
  if (abs >= 0x477ff000u) {  // rounds to >= 2^16: overflow to inf
    return static_cast<std::uint16_t>(sign | 0x7c00u);
  }
  if (abs < 0x38800000u) {  // subnormal half (or zero)
    if (abs < 0x33000000u) {  // below half of the smallest subnormal
      return static_cast<std::uint16_t>(sign);
    }
    const std::uint32_t shift = 126u - (abs >> 23);  // 1..24
    std::uint32_t mant = (abs & 0x007fffffu) | 0x00800000u;
    const std::uint32_t lost = mant & ((1u << (shift + 13)) - 1u);
    const std::uint32_t half_ulp = 1u << (shift + 12);
    mant >>= shift + 13;
    if (lost > half_ulp || (lost == half_ulp && (mant & 1u))) {
      ++mant;
    }
    return static_cast<std::uint16_t>(sign | mant);
  }
  // Normal range.
  std::uint32_t h = ((abs >> 23) - 112u) << 10 | ((abs >> 13) & 0x03ffu);
  const std::uint32_t lost = abs & 0x1fffu;
  if (lost > 0x1000u || (lost == 0x1000u && (h & 1u))) {
    ++h;  // may carry into the exponent, which is exactly what we want
  }
  return static_cast<std::uint16_t>(sign | h);
}

inline float half_to_float(std::uint16_t h) {
  const std::uint32_t sign = static_cast<std::uint32_t>(h & 0x8000u) << 16;
  const std::uint32_t exp = (h >> 10) & 0x1fu;
  const std::uint32_t mant = h & 0x03ffu;

  std::uint32_t bits;
  if (exp == 0) {
    if (mant == 0) {
      bits = sign;  // signed zero
    } else {
      // Subnormal: normalize the mantissa.
      int e = -1;
      std::uint32_t m = mant;
      do {
        ++e;
        m <<= 1;
      } while ((m & 0x0400u) == 0);
      bits = sign | (static_cast<std::uint32_t>(113 - e) << 23) |
             ((m & 0x03ffu) << 13);
    }
  } else if (exp == 0x1fu) {
    bits = sign | 0x7f800000u | (mant << 13);  // inf / NaN
  } else {
    bits = sign | ((exp + 112u) << 23) | (mant << 13);
  }
  return std::bit_cast<float>(bits);
}

/// fp32 -> fp16 -> fp32, the value a width-2 store reproduces.
inline float half_round_trip(float f) { return half_to_float(float_to_half(f)); }

}  // namespace espn
