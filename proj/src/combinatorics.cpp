#include "bihom/combinatorics.hpp"

namespace bihom::detail {

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::size_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    out = out * (n - i) / (i + 1);
  }
  return out;
}

int sort_with_sign(std::vector<std::size_t>& idx) {
  int sign = 1;
  // Insertion sort, counting swaps; fine for the tiny tuples used here.
  for (std::size_t i = 1; i < idx.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && idx[j - 1] > idx[j]) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
      --j;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (idx[i - 1] == idx[i]) return 0;
  }
  return sign;
}

std::size_t increasing_rank(const std::vector<std::size_t>& t, std::size_t n) {
  // Lexicographic rank: count increasing tuples preceding t.
  const std::size_t k = t.size();
  std::size_t rank = 0;
  std::size_t prev = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = prev; c < t[i]; ++c) {
      rank += binom(n - c - 1, k - i - 1);
    }
    prev = t[i] + 1;
  }
  return rank;
}

}  // namespace bihom::detail
