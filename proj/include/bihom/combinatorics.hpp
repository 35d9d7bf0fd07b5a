#pragma once

#include <cstddef>
#include <vector>

namespace bihom::detail {

std::size_t binom(std::size_t n, std::size_t k);

// Sign of the permutation sorting idx ascending, or 0 if idx has repeats.
// idx is left sorted.
int sort_with_sign(std::vector<std::size_t>& idx);

// Lexicographic rank of a strictly increasing k-tuple drawn from {0..n-1}.
std::size_t increasing_rank(const std::vector<std::size_t>& t, std::size_t n);

// Visit every strictly increasing k-tuple from {0..n-1} in lexicographic
// order.  fn(const std::vector<std::size_t>&).
template <typename F>
void for_each_increasing(std::size_t n, std::size_t k, F&& fn) {
  if (k > n) return;
  std::vector<std::size_t> t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  if (k == 0) {
    fn(const_cast<const std::vector<std::size_t>&>(t));
    return;
  }
  while (true) {
    fn(const_cast<const std::vector<std::size_t>&>(t));
    // Advance to the next increasing tuple; t[i] may grow up to i + n - k.
    std::size_t i = k - 1;
    while (t[i] == i + n - k) {
      if (i == 0) return;
      --i;
    }
    ++t[i];
    for (std::size_t j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
}

// Visit every k-tuple from {0..n-1} (odometer order).
template <typename F>
void for_each_tuple(std::size_t n, std::size_t k, F&& fn) {
  if (k == 0) {
    fn(std::vector<std::size_t>{});
    return;
  }
  if (n == 0) return;
  std::vector<std::size_t> t(k, 0);
  while (true) {
    fn(const_cast<const std::vector<std::size_t>&>(t));
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++t[i] < n) break;
      t[i] = 0;
      if (i == 0) return;
    }
  }
}

// Visit every (a,b)-unshuffle of positions {0..a+b-1}: the partitions into an
// increasing block of size a and its increasing complement, with the sign of
// the concatenated arrangement.  fn(first, second, sign).
template <typename F>
void for_each_shuffle(std::size_t a, std::size_t b, F&& fn) {
  const std::size_t n = a + b;
  for_each_increasing(n, a, [&](const std::vector<std::size_t>& first) {
    std::vector<std::size_t> second;
    second.reserve(b);
    std::size_t fi = 0;
    for (std::size_t p = 0; p < n; ++p) {
      if (fi < first.size() && first[fi] == p) {
        ++fi;
      } else {
        second.push_back(p);
      }
    }
    // Inversions of (first, second): first[i] has first[i]-i complement
    // elements in front of it that end up behind it.
    std::size_t inv = 0;
    for (std::size_t i = 0; i < first.size(); ++i) inv += first[i] - i;
    fn(first, second, (inv % 2 == 0) ? 1 : -1);
  });
}

}  // namespace bihom::detail
