#include "pgq/centroid.hpp"

#include "pgq/derivations.hpp"
#include "pgq/sampling.hpp"

namespace pgq {

bool matches_commuting_pattern(const Matrix& m) {
  for (std::size_t r = 1; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (r != c && !m(r, c).is_zero()) return false;
  return m(1, 1) == m(2, 2) && m(2, 2) == m(3, 3);
}

CommutingReport commuting_space(const StructureTensor& sc) {
  RrefBuilder b(16);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j)
      for (std::size_t m = 0; m < 4; ++m) {
        Vec row(16);
        for (std::size_t p = 0; p < 4; ++p) {
          row[4 * p + i] += sc.c[p][j][m] - sc.c[j][p][m];
          row[4 * p + j] += sc.c[p][i][m] - sc.c[i][p][m];
        }
        b.add_row(std::move(row));
      }
  CommutingReport report;
  report.space = Subspace::span(16, b.kernel_basis());
  report.dim = report.space.dim();
  report.pattern_ok = true;
  for (const Matrix& m : subspace_maps(report.space))
    report.pattern_ok = report.pattern_ok && matches_commuting_pattern(m);
  return report;
}

Subspace centroid(const StructureTensor& sc) {
  RrefBuilder b(16);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t m = 0; m < 4; ++m) {
        Vec left(16), right(16);
        for (std::size_t n = 0; n < 4; ++n) {
          left[4 * m + n] += sc.c[i][j][n];   // g(e_i e_j) coordinate m
          right[4 * m + n] += sc.c[i][j][n];
          left[4 * n + i] -= sc.c[n][j][m];   // g(e_i) e_j
          right[4 * n + j] -= sc.c[i][n][m];  // e_i g(e_j)
        }
        b.add_row(std::move(left));
        b.add_row(std::move(right));
      }
  return Subspace::span(16, b.kernel_basis());
}

Subspace quasi_centroid(const StructureTensor& sc) {
  RrefBuilder b(16);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t m = 0; m < 4; ++m) {
        Vec row(16);
        for (std::size_t n = 0; n < 4; ++n) {
          row[4 * n + i] += sc.c[n][j][m];
          row[4 * n + j] -= sc.c[i][n][m];
        }
        b.add_row(std::move(row));
      }
  return Subspace::span(16, b.kernel_basis());
}

bool verify_gamma_der_lemma(const Params& p, std::uint32_t trials, std::uint64_t seed) {
  return verify_gamma_der_lemma(make_3pgq(p), trials, seed);
}

bool verify_gamma_der_lemma(const StructureTensor& sc, std::uint32_t trials, std::uint64_t seed) {
  Subspace cent = centroid(sc);
  std::vector<Matrix> cent_basis = subspace_maps(cent);
  std::vector<Matrix> der_basis = subspace_maps(derivation_space(sc));
  Sampler sampler(seed);
  for (std::uint32_t t = 0; t < trials; ++t) {
    Matrix f = sampler.combination(cent_basis, -2, 2);
    Matrix d = sampler.combination(der_basis, -2, 2);
    if (!is_derivation(sc, f * d)) return false;
    if (!cent.contains(flatten_map(f * d - d * f))) return false;
  }
  return true;
}

}  // namespace pgq
