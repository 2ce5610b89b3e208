#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rikit {

// Signed arbitrary-precision integer, sign-magnitude with base-10^9 limbs.
// Supports exactly what the object language needs: add, sub, mul, compare,
// and decimal round-trips. Zero has an empty limb vector and positive sign.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT(google-explicit-constructor)

  static BigInt parse(std::string_view text);  // throws std::invalid_argument

  std::string str() const;

  bool is_zero() const { return limbs_.empty(); }
  bool negative() const { return neg_; }

  // Returns the value if it fits in long long, otherwise nullptr-like false pair.
  bool fits_i64() const;
  long long to_i64() const;  // precondition: fits_i64()

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  BigInt operator-() const;

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator<(const BigInt& a, const BigInt& b);
  friend bool operator<=(const BigInt& a, const BigInt& b);

 private:
  static constexpr std::uint32_t kBase = 1000000000u;

  bool neg_ = false;
  std::vector<std::uint32_t> limbs_;  // little-endian, no leading zeros

  void trim();
  static int cmp_mag(const BigInt& a, const BigInt& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // precondition: |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
};

}  // namespace rikit
