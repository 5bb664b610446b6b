#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>

#include "sbbc/types.hpp"

namespace sbbc {

// Exact 128-bit unsigned counter with checked arithmetic. Real-world balanced
// biclique counts reach the hundreds of trillions, so 64 bits is too tight for
// comfort; overflow past 128 bits is a hard error, never a silent wrap.
class BigCount {
 public:
  constexpr BigCount() : v_(0) {}
  constexpr explicit BigCount(uint64_t v) : v_(v) {}

  static constexpr BigCount max() {
    BigCount c;
    c.v_ = ~static_cast<unsigned __int128>(0);
    return c;
  }

  BigCount& operator+=(const BigCount& o) {
    unsigned __int128 s = v_ + o.v_;
    if (s < v_) throw CountOverflowError("count exceeds 128-bit capacity");
    v_ = s;
    return *this;
  }

  friend BigCount operator+(BigCount a, const BigCount& b) {
    a += b;
    return a;
  }

  BigCount& checked_mul(uint64_t k) {
    if (k != 0 && v_ > max().v_ / k) throw CountOverflowError("count exceeds 128-bit capacity");
    v_ *= k;
    return *this;
  }

  // Exact division; caller guarantees divisibility (binomial recurrence).
  BigCount& div_exact(uint64_t k) {
    v_ /= k;
    return *this;
  }

  friend auto operator<=>(const BigCount&, const BigCount&) = default;

  bool fits_u64() const { return v_ <= ~uint64_t{0}; }
  uint64_t as_u64() const { return static_cast<uint64_t>(v_); }

  std::string to_string() const {
    if (v_ == 0) return "0";
    unsigned __int128 x = v_;
    std::string out;
    while (x > 0) {
      out.push_back(static_cast<char>('0' + static_cast<unsigned>(x % 10)));
      x /= 10;
    }
    return {out.rbegin(), out.rend()};
  }

 private:
  unsigned __int128 v_;
};

// C(n, k) with checked 128-bit arithmetic. Reducing each step's factor pair
// by its gcd keeps every intermediate equal to a smaller binomial, so the
// computation overflows only when the result itself does.
inline BigCount binomial(uint64_t n, uint64_t k) {
  if (k > n) return BigCount(0);
  if (k > n - k) k = n - k;
  BigCount c(1);
  for (uint64_t i = 1; i <= k; ++i) {
    uint64_t num = n - k + i, den = i;
    uint64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
    c.div_exact(den);  // exact: den is coprime to num, so it divides c
    c.checked_mul(num);
  }
  return c;
}

// Per-run memo over the (n, k) pairs actually seen. Not thread-safe by design:
// each counting lane owns its own cache.
class BinomialCache {
 public:
  const BigCount& operator()(uint64_t n, uint64_t k) {
    uint64_t key = (n << 16) | (k & 0xffff);
    if (n < (uint64_t{1} << 48) && k < (uint64_t{1} << 16)) {
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
      return memo_.emplace(key, binomial(n, k)).first->second;
    }
    scratch_ = binomial(n, k);
    return scratch_;
  }

 private:
  std::unordered_map<uint64_t, BigCount> memo_;
  BigCount scratch_;
};

}  // namespace sbbc
