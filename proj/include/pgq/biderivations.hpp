#pragma once

#include <array>
#include <utility>
#include <vector>

#include "pgq/algebra.hpp"
#include "pgq/linalg.hpp"

namespace pgq {

// Bilinear map d(e_i, e_j) = sum_k t[i][j][k] e_k; flattens i-major, then j,
// then k to a 64-vector.
struct BilinearTensor {
  std::array<std::array<std::array<Rational, 4>, 4>, 4> t{};

  Element value(std::size_t i, std::size_t j) const { return Element(t[i][j][0], t[i][j][1], t[i][j][2], t[i][j][3]); }
  Element apply(const Element& x, const Element& y) const;  // bilinear extension

  friend bool operator==(const BilinearTensor&, const BilinearTensor&) = default;
};

Vec flatten_tensor(const BilinearTensor& d);
BilinearTensor unflatten_tensor(const Vec& v);

Matrix left_slice(const BilinearTensor& d, std::size_t i);   // y -> d(e_i, y)
Matrix right_slice(const BilinearTensor& d, std::size_t j);  // x -> d(x, e_j)

// Both Leibniz identities, d(xy,z) = x d(y,z) + d(x,z) y and
// d(x,yz) = y d(x,z) + d(x,y) z, on all 64 basis triples.
bool is_biderivation(const StructureTensor& sc, const BilinearTensor& d);

// Nullspace of the combined 512-row constraint system over the 64 tensor entries.
Subspace biderivation_space(const StructureTensor& sc);

// (symmetric part, skew part) via the projections d(x,y) +- d(y,x).
std::pair<Subspace, Subspace> split_symmetric_skew(const Subspace& s);

enum class Symmetry { symmetric, skew, mixed };
Symmetry tensor_symmetry(const BilinearTensor& d);
const char* symmetry_name(Symmetry s);

// Tensor of (x, y) -> wedge(x, y). Requires l1 != 0.
BilinearTensor wedge_tensor(const Params& p);

struct BiderivationReport {
  std::size_t dim = 0;
  bool generator_matches_wedge = false;
};

// biderivation_space has dim 1 and its generator is a scalar multiple of the
// wedge tensor. Requires l3 != 0 and l1 l2 != 0.
BiderivationReport verify_biderivation_theorem(const Params& p);

struct SkewReport {
  std::size_t skew_dim = 0;
  bool family_matches = false;
};

// At l3 = 0 (l1 l2 != 0): the skew part has dim 2 and equals the span of the
// two determinant families with first rows (0, (l2/l1) e2, e3) and (0, -e3, e2).
SkewReport verify_skew_lambda3_zero(const Params& p);

// The two generators of that skew family.
std::pair<BilinearTensor, BilinearTensor> skew_family_lambda3_zero(const Params& p);

struct SymmetricReport {
  Subspace space = Subspace::zero(64);
  bool pattern_ok = false;
};

// The 6-parameter slice-matrix family (a1, b1, c1, d1, c2, d2) the symmetric
// l3 = 0 biderivations fall into. Requires l1 l2 != 0.
Subspace symmetric_pattern_family(const Params& p);

// At l3 = 0 (l1 l2 != 0): the symmetric part of the biderivation space,
// checked against the 6-parameter slice-matrix pattern.
SymmetricReport symmetric_family_lambda3_zero(const Params& p);

}  // namespace pgq
