#pragma once

// Test-only oracles. Nothing here calls into the code paths it is used to
// check: partitions are enumerated as explicit block lists, moments come
// from closed forms or plain recurrences.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "spivey/mpoly.hpp"
#include "spivey/rational.hpp"

namespace spivey::oracle {

/// Number of set partitions of {0..n-1} into exactly k blocks, by building
/// every partition block by block.
inline std::vector<std::vector<long>> partition_counts_by_blocks(unsigned max_n) {
  std::vector<std::vector<long>> table(max_n + 1, std::vector<long>(max_n + 1, 0));
  for (unsigned n = 0; n <= max_n; ++n) {
    std::vector<std::vector<unsigned>> blocks;
    auto place = [&](auto&& self, unsigned element) -> void {
      if (element == n) {
        ++table[n][blocks.size()];
        return;
      }
      // Indexed: deeper calls may grow `blocks` and move its storage.
      for (std::size_t b = 0, count = blocks.size(); b < count; ++b) {
        blocks[b].push_back(element);
        self(self, element + 1);
        blocks[b].pop_back();
      }
      blocks.push_back({element});
      self(self, element + 1);
      blocks.pop_back();
    };
    place(place, 0);
  }
  return table;
}

inline long bell_number_by_blocks(unsigned n) {
  const auto table = partition_counts_by_blocks(n);
  long sum = 0;
  for (long c : table[n]) sum += c;
  return sum;
}

/// Poisson raw moments from E[Y^{m+1}] = rate * sum_k C(m,k) E[Y^k].
inline std::vector<Rational> poisson_moments_by_recurrence(const Rational& rate, unsigned max_m) {
  std::vector<Rational> mu{Rational(1)};
  for (unsigned m = 0; m < max_m; ++m) {
    Rational sum = 0;
    Integer c = 1;
    for (unsigned k = 0; k <= m; ++k) {
      sum += Rational(c) * mu[k];
      c = c * (m - k) / (k + 1);
    }
    mu.push_back(rate * sum);
  }
  return mu;
}

/// Geometric({1,2,...}, p) raw moments E[Y^m] = A_m(q) / p^m with Eulerian
/// polynomial A_m(q) = sum_k A(m,k) q^k, A(m,k) = sum_i (-1)^i C(m+1,i) (k+1-i)^m.
inline Rational geometric_moment_by_eulerian(const Rational& p, unsigned m) {
  if (m == 0) return 1;
  const Rational q = 1 - p;
  Rational a_of_q = 0;
  for (unsigned k = 0; k < m; ++k) {
    Integer eulerian = 0;
    for (unsigned i = 0; i <= k + 1; ++i) {
      Integer c;
      mpz_bin_uiui(c.get_mpz_t(), m + 1, i);
      Integer term;
      mpz_pow_ui(term.get_mpz_t(), Integer(k + 1 - i).get_mpz_t(), m);
      eulerian += (i % 2 == 0 ? 1 : -1) * c * term;
    }
    a_of_q += Rational(eulerian) * pow(q, k);
  }
  return a_of_q / pow(p, m);
}

/// Small random polynomial in {lambda, y, x} with coefficients in [-3, 3]
/// and denominators in [1, 4].
inline MPoly random_poly(std::mt19937& rng, unsigned max_terms = 4, unsigned max_degree = 3) {
  std::uniform_int_distribution<int> terms(0, static_cast<int>(max_terms));
  std::uniform_int_distribution<int> degree(0, static_cast<int>(max_degree));
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  MPoly out;
  const int count = terms(rng);
  for (int i = 0; i < count; ++i) {
    Exponents e{};
    for (auto& v : e) v = static_cast<std::uint32_t>(degree(rng));
    Rational c(num(rng), den(rng));
    c.canonicalize();
    out += MPoly::monomial(c, e);
  }
  return out;
}

}  // namespace spivey::oracle
