#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spivey/rational.hpp"

namespace spivey {

using Composition = std::vector<unsigned>;

/// Compositions of n into exactly k positive parts, lexicographic order.
/// compositions(0, 0) is {()}; compositions(n, 0) is empty for n > 0.
std::vector<Composition> compositions(unsigned n, unsigned k);

/// Weak compositions of n into k nonnegative parts, lexicographic order.
std::vector<Composition> weak_compositions(unsigned n, unsigned k);

/// Generalized binomial coefficient; n may be negative.
Integer binomial(long n, unsigned long k);

/// n! / (parts_1! ... parts_k!). Throws std::invalid_argument when the
/// parts do not sum to n.
Integer multinomial(unsigned n, std::span<const unsigned> parts);

/// Classical Stirling numbers of the second kind by the triangle recurrence
/// S(n,k) = k S(n-1,k) + S(n-1,k-1).
Integer stirling2_classical(unsigned n, unsigned k);

/// Block counts of every set partition of {0..n-1}, enumerated as
/// restricted growth strings. Entry k of the result is the number of
/// partitions into exactly k blocks.
std::vector<Integer> set_partition_block_counts(unsigned n);

}  // namespace spivey
