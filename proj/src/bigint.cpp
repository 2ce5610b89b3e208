#include "rikit/bigint.hpp"

#include <stdexcept>

namespace rikit {

BigInt::BigInt(long long v) {
  if (v < 0) {
    neg_ = true;
  }
  // Avoid overflow on LLONG_MIN by peeling limbs from the signed value.
  unsigned long long mag =
      v < 0 ? (~static_cast<unsigned long long>(v)) + 1ull : static_cast<unsigned long long>(v);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag % kBase));
    mag /= kBase;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) neg_ = false;
}

BigInt BigInt::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  BigInt out;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    out.neg_ = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw std::invalid_argument("integer literal without digits");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad digit in integer literal");
  }
  // Consume 9 decimal digits per limb, from the least significant end.
  std::size_t len = text.size() - pos;
  out.limbs_.reserve(len / 9 + 1);
  std::size_t end = text.size();
  while (end > pos) {
    std::size_t start = end >= pos + 9 ? end - 9 : pos;
    std::uint32_t limb = 0;
    for (std::size_t i = start; i < end; ++i) limb = limb * 10 + static_cast<std::uint32_t>(text[i] - '0');
    out.limbs_.push_back(limb);
    end = start;
  }
  out.trim();
  return out;
}

std::string BigInt::str() const {
  if (limbs_.empty()) return "0";
  std::string out = neg_ ? "-" : "";
  out += std::to_string(limbs_.back());
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string chunk = std::to_string(limbs_[i]);
    out.append(9 - chunk.size(), '0');
    out += chunk;
  }
  return out;
}

bool BigInt::fits_i64() const {
  // 2^63 - 1 = 9223372036854775807 needs three limbs.
  if (limbs_.size() > 3) return false;
  unsigned long long acc = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (acc > (~0ull) / kBase) return false;
    acc = acc * kBase + limbs_[i];
  }
  unsigned long long limit = neg_ ? 9223372036854775808ull : 9223372036854775807ull;
  return acc <= limit;
}

long long BigInt::to_i64() const {
  unsigned long long acc = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) acc = acc * kBase + limbs_[i];
  if (neg_) return static_cast<long long>(~acc + 1ull);
  return static_cast<long long>(acc);
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  std::vector<std::uint32_t> out;
  out.reserve(big.size() + 1);
  std::uint32_t carry = 0;
  for (std::size_t i = 0; i < big.size(); ++i) {
    std::uint32_t sum = big[i] + carry;
    if (i < small.size()) sum += small[i];
    if (sum >= kBase) {
      sum -= kBase;
      carry = 1;
    } else {
      carry = 0;
    }
    out.push_back(sum);
  }
  if (carry) out.push_back(carry);
  return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (cur < 0) {
      cur += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<std::uint32_t>(cur));
  }
  return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  BigInt out;
  if (a.neg_ == b.neg_) {
    out.neg_ = a.neg_;
    out.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
  } else {
    int c = BigInt::cmp_mag(a, b);
    if (c == 0) return BigInt();
    const BigInt& big = c > 0 ? a : b;
    const BigInt& small = c > 0 ? b : a;
    out.neg_ = big.neg_;
    out.limbs_ = BigInt::sub_mag(big.limbs_, small.limbs_);
  }
  out.trim();
  return out;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  if (!out.is_zero()) out.neg_ = !out.neg_;
  return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return BigInt();
  BigInt out;
  out.neg_ = a.neg_ != b.neg_;
  out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      std::uint64_t cur = out.limbs_[i + j] +
                          static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur % BigInt::kBase);
      carry = cur / BigInt::kBase;
    }
    std::size_t k = i + b.limbs_.size();
    while (carry != 0) {
      std::uint64_t cur = out.limbs_[k] + carry;
      out.limbs_[k] = static_cast<std::uint32_t>(cur % BigInt::kBase);
      carry = cur / BigInt::kBase;
      ++k;
    }
  }
  out.trim();
  return out;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.neg_ != b.neg_) return a.neg_;
  int c = BigInt::cmp_mag(a, b);
  return a.neg_ ? c > 0 : c < 0;
}

bool operator<=(const BigInt& a, const BigInt& b) { return a < b || a == b; }

}  // namespace rikit
