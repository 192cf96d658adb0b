#include "spivey/combinatorics.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace spivey {

namespace {

void extend_compositions(unsigned remaining, unsigned slots, unsigned min_part, Composition& prefix,
                         std::vector<Composition>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  // Leave at least min_part for each of the later slots.
  const unsigned reserve = (slots - 1) * min_part;
  if (remaining < reserve + min_part) return;
  for (unsigned part = min_part; part + reserve <= remaining; ++part) {
    prefix.push_back(part);
    extend_compositions(remaining - part, slots - 1, min_part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions(unsigned n, unsigned k) {
  std::vector<Composition> out;
  Composition prefix;
  prefix.reserve(k);
  extend_compositions(n, k, 1, prefix, out);
  return out;
}

std::vector<Composition> weak_compositions(unsigned n, unsigned k) {
  std::vector<Composition> out;
  Composition prefix;
  prefix.reserve(k);
  extend_compositions(n, k, 0, prefix, out);
  return out;
}

Integer binomial(long n, unsigned long k) {
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), Integer(n).get_mpz_t(), k);
  return out;
}

Integer multinomial(unsigned n, std::span<const unsigned> parts) {
  const unsigned long total = std::accumulate(parts.begin(), parts.end(), 0UL);
  if (total != n) {
    throw std::invalid_argument("multinomial parts sum to " + std::to_string(total) + ", expected " +
                                std::to_string(n));
  }
  Integer out = factorial(n);
  for (unsigned p : parts) out /= factorial(p);
  return out;
}

Integer stirling2_classical(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<Integer> row(k + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = std::min(i, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

std::vector<Integer> set_partition_block_counts(unsigned n) {
  std::vector<Integer> counts(n + 1, 0);
  if (n == 0) {
    counts[0] = 1;
    return counts;
  }
  // a[i] is the block of element i; a[0] = 0 and a[i] <= 1 + max(a[0..i-1]).
  std::vector<unsigned> a(n, 0);
  std::vector<unsigned> prefix_max(n, 0);
  while (true) {
    ++counts[prefix_max[n - 1] + 1];
    std::size_t i = n - 1;
    while (i > 0 && a[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[j - 1];
    }
  }
  return counts;
}

}  // namespace spivey
