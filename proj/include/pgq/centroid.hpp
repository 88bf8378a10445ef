#pragma once

#include <cstdint>

#include "pgq/algebra.hpp"
#include "pgq/linalg.hpp"

namespace pgq {

struct CommutingReport {
  Subspace space = Subspace::zero(16);
  std::size_t dim = 0;
  bool pattern_ok = false;
};

// Maps f with f(x) x = x f(x) for all x, compiled to the polarized bilinear
// constraints f(e_i)e_j + f(e_j)e_i = e_i f(e_j) + e_j f(e_i) on basis pairs.
// pattern_ok: free first row, one scalar on the rest of the diagonal, zeros
// elsewhere.
CommutingReport commuting_space(const StructureTensor& sc);

// Maps g with g(xy) = g(x)y = x g(y), from both constraint families on all
// basis pairs.
Subspace centroid(const StructureTensor& sc);

// Maps g with g(x)y = x g(y) on all basis pairs.
Subspace quasi_centroid(const StructureTensor& sc);

// Randomized check that f o d is a derivation and [f, d] lies in the centroid
// for f in the centroid span and d in the derivation span.
bool verify_gamma_der_lemma(const StructureTensor& sc, std::uint32_t trials, std::uint64_t seed);
bool verify_gamma_der_lemma(const Params& p, std::uint32_t trials, std::uint64_t seed);

// True iff every basis matrix has zeros below row 0 off the diagonal and one
// shared scalar at (1,1), (2,2), (3,3).
bool matches_commuting_pattern(const Matrix& m);

}  // namespace pgq
