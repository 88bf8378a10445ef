#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pgq/algebra.hpp"
#include "pgq/linalg.hpp"

namespace pgq {

// Seed-deterministic sampling for the randomized verifiers and tests.
// Draws use raw engine output with modular reduction, so a given seed yields
// the same stream on every platform.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t pick(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(std::int64_t max_abs_num, std::int64_t max_den) {
    return Rational(pick(-max_abs_num, max_abs_num), pick(1, max_den));
  }

  Rational nonzero_rational(std::int64_t max_abs_num, std::int64_t max_den) {
    std::int64_t num = pick(1, max_abs_num);
    if (pick(0, 1) == 1) num = -num;
    return Rational(num, pick(1, max_den));
  }

  Element element(std::int64_t lo, std::int64_t hi) {
    Element e;
    for (std::size_t i = 0; i < 4; ++i) e[i] = Rational(pick(lo, hi));
    return e;
  }

  Matrix matrix(std::size_t rows, std::size_t cols, std::int64_t lo, std::int64_t hi) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(pick(lo, hi));
    return m;
  }

  // Integer-coefficient combination of basis matrices.
  Matrix combination(const std::vector<Matrix>& basis, std::int64_t lo, std::int64_t hi) {
    Matrix out(basis.empty() ? 4 : basis[0].rows(), basis.empty() ? 4 : basis[0].cols());
    for (const Matrix& b : basis) {
      Rational coeff(pick(lo, hi));
      if (!coeff.is_zero()) out = out + b.scaled(coeff);
    }
    return out;
  }

private:
  std::mt19937_64 rng_;
};

}  // namespace pgq
