#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pgq/algebra.hpp"
#include "pgq/linalg.hpp"

namespace pgq {

// 4x4 maps act on coordinate columns; they flatten row-major to 16-vectors
// for subspace arithmetic.
Vec flatten_map(const Matrix& m);
Matrix unflatten_map(const Vec& v);
std::vector<Matrix> subspace_maps(const Subspace& s);

Element apply_map(const Matrix& m, const Element& x);

// Leibniz identity d(xy) = d(x)y + x d(y) on all 16 basis pairs.
bool is_derivation(const StructureTensor& sc, const Matrix& d);

// Nullspace of the 64-constraint Leibniz system over the 16 map entries.
Subspace derivation_space(const StructureTensor& sc);

// y -> wedge(x, y); depends only on the vector part of x. Requires l1 != 0.
Matrix ad_wedge(const Params& p, const Element& x);

// Solves ad_wedge(z) = d for the vector part z; nullopt when d is not of that form.
std::optional<Element> wedge_preimage(const Params& p, const Matrix& d);

// span{ad_wedge(e1), ad_wedge(e2), ad_wedge(e3)} equals derivation_space.
// Requires l1 l2 != 0 and l3 != 0.
bool verify_ad_basis(const Params& p);

// {d(v) : d in Der} as a subspace of Q^4.
Subspace image_subspace(const StructureTensor& sc, const Element& v);

// Maps u with u(v) in image_subspace(v) for every probe v, as flattened 16-vectors.
Subspace local_probe_space(const StructureTensor& sc, const std::vector<Element>& probes);

// e0, e1, e2, e3 and the three pairwise sums e1+e2, e1+e3, e2+e3.
std::vector<Element> standard_probes();

struct LocalReport {
  std::size_t probe_dim = 0;
  std::size_t der_dim = 0;
  bool equal = false;
};

// Probe space with standard_probes() against the derivation space.
// Requires l3 != 0 and l1 l2 != 0.
LocalReport verify_local_theorem(const Params& p);

// Finite list of (point, value) pairs with pairwise distinct points.
class ValueAssignment {
public:
  void add(Element point, Element value);
  const std::vector<std::pair<Element, Element>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

private:
  std::vector<std::pair<Element, Element>> entries_;
};

// A derivation d with d(x) = vx and d(y) = vy, when the 8-equation system over
// the derivation-space coordinates is consistent.
std::optional<Matrix> two_local_witness(const StructureTensor& sc, const Element& x, const Element& y,
                                        const Element& vx, const Element& vy);
std::optional<Matrix> two_local_witness(const std::vector<Matrix>& der_basis, const Element& x, const Element& y,
                                        const Element& vx, const Element& vy);

// One derivation matching every (point, value) entry; the zero map for an
// empty assignment; nullopt when no derivation fits.
std::optional<Matrix> global_witness(const StructureTensor& sc, const ValueAssignment& assign);
std::optional<Matrix> global_witness(const std::vector<Matrix>& der_basis, const ValueAssignment& assign);

struct TwoLocalReport {
  std::uint32_t trials = 0;
  std::uint32_t pairwise_ok = 0;
  std::uint32_t global_ok = 0;
  bool implication_held = false;
  std::uint64_t seed = 0;
};

// Randomized check: over seeded assignments on sample sets containing
// {e1,e2,e3}, whenever every pair of sample points admits a common derivation
// witness, a single global witness exists. Requires l3 != 0 and l1 l2 != 0.
TwoLocalReport verify_two_local_theorem(const Params& p, std::uint32_t trials, std::uint64_t seed);

// Matrix shape of a derivation for l1 l2 != 0: zero row 0, column 0 and (1,1)
// entry, ratio-locked off-diagonal pairs, equal (2,2) and (3,3) entries.
// With require_zero_diagonal also (2,2) = (3,3) = 0 (the l1 l3 != 0 case).
bool matches_derivation_pattern(const Params& p, const Matrix& d, bool require_zero_diagonal);

}  // namespace pgq
