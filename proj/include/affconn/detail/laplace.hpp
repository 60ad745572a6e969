#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace affconn::detail {

// Laplace expansion along successive rows, memoized on the set of columns
// still available: the minor for rows [r, n) only depends on that set.
// O(2^n * n) ring operations; intended for n <= 12.
template <class T, class Entry>
T laplace_det(std::size_t n, Entry entry, const T& zero, const T& one) {
  if (n == 0) return one;
  std::vector<std::optional<T>> memo(std::size_t{1} << n);
  auto rec = [&](auto&& self, std::uint32_t mask) -> T {
    if (mask == 0) return one;
    auto& slot = memo[mask];
    if (slot) return *slot;
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
    T acc = zero;
    // Sign of column c is (-1)^(number of available columns before c).
    std::size_t position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      const T& a = entry(row, c);
      if (!(a == zero)) {
        T term = a * self(self, mask & ~(1u << c));
        if (position % 2 == 0) {
          acc = acc + term;
        } else {
          acc = acc - term;
        }
      }
      ++position;
    }
    slot = acc;
    return acc;
  };
  return rec(rec, static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1));
}

}  // namespace affconn::detail
