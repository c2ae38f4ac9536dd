#pragma once

#include <cstdint>
#include <random>

#include "ordpat/pattern.hpp"

namespace ordpat {

/// Uniform graph with exactly m edges. Deterministic for a fixed seed.
/// Throws InvalidArgument if m > n(n-1)/2.
OrderedGraph generate_gnm(std::size_t n, std::size_t m, std::uint64_t seed);

/// Each pair is an edge independently with probability p.
OrderedGraph generate_gnp(std::size_t n, double p, std::uint64_t seed);

/// Graph on n vertices whose edge set is the bit pattern `mask` over the
/// pairs (1,2), (1,3), ..., (n-1,n) in lexicographic order. n <= 11.
OrderedGraph graph_from_mask(std::size_t n, std::uint64_t mask);

/// Every pair independently mandatory / forbidden / undecided with the given
/// weights.
Pattern random_pattern(int k, std::mt19937_64& rng, double p_mandatory, double p_forbidden);

}  // namespace ordpat
