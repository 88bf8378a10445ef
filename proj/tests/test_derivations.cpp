#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgq/derivations.hpp"
#include "pgq/sampling.hpp"
#include "test_util.hpp"

using namespace pgq;
using namespace testutil;

namespace {

// The closed-form derivation matrix with parameters (a, b, c) and zero diagonal.
Matrix closed_form_derivation(const Params& p, const Rational& a, const Rational& b, const Rational& c) {
  Matrix d(4, 4);
  d(1, 2) = -(p.l3 / p.l2) * a;
  d(1, 3) = -(p.l3 / p.l1) * b;
  d(2, 1) = a;
  d(2, 3) = -(p.l2 / p.l1) * c;
  d(3, 1) = b;
  d(3, 2) = c;
  return d;
}

}  // namespace

TEST_CASE("leibniz check on known maps") {
  StructureTensor sc = make_3pgq({1, 1, 1});
  CHECK(is_derivation(sc, Matrix(4, 4)));
  CHECK(is_derivation(sc, closed_form_derivation({1, 1, 1}, 1, 0, 0)));
  CHECK_FALSE(is_derivation(sc, Matrix::identity(4)));  // fails already on e0*e0
}

TEST_CASE("derivation space at unit parameters has dim 3 and the closed form") {
  Params p{1, 1, 1};
  Subspace der = derivation_space(make_3pgq(p));
  CHECK(der.dim() == 3);
  for (const Matrix& d : subspace_maps(der)) {
    CHECK(matches_derivation_pattern(p, d, true));
    CHECK(is_derivation(make_3pgq(p), d));
  }
  CHECK(der.contains(flatten_map(closed_form_derivation(p, 1, 0, 0))));
  CHECK(der.contains(flatten_map(closed_form_derivation(p, Rational(2, 3), -5, Rational(7, 2)))));
}

TEST_CASE("derivation space at l3 = 0 gains the shared diagonal direction") {
  Params p{1, 1, 0};
  Subspace der = derivation_space(make_3pgq(p));
  CHECK(der.dim() == 4);
  Matrix diag(4, 4);
  diag(2, 2) = 1;
  diag(3, 3) = 1;
  CHECK(der.contains(flatten_map(diag)));
  for (const Matrix& d : subspace_maps(der)) CHECK(matches_derivation_pattern(p, d, false));
}

TEST_CASE("ad_wedge matrices on basis elements") {
  Params p{1, 1, 1};
  Matrix ad1 = ad_wedge(p, e(1));
  CHECK(ad1(3, 2) == Rational(1));
  CHECK(ad1(2, 3) == Rational(-1));
  Matrix expected(4, 4);
  expected(3, 2) = 1;
  expected(2, 3) = -1;
  CHECK(ad1 == expected);

  CHECK(ad_wedge(p, e(0)).is_zero());
  CHECK(ad_wedge(p, elem(7, 0, 0, 0)).is_zero());  // only the vector part matters
}

TEST_CASE("ad_wedge always produces derivations when defined") {
  Sampler s(59);
  for (int trial = 0; trial < 20; ++trial) {
    Params p{s.nonzero_rational(5, 3), s.rational(5, 3), s.rational(5, 3)};
    StructureTensor sc = make_3pgq(p);
    Element x = random_element(s);
    CHECK(is_derivation(sc, ad_wedge(p, x)));
  }
  CHECK_THROWS_AS(ad_wedge({0, 1, 1}, e(1)), std::domain_error);
}

TEST_CASE("every derivation is a wedge multiplication when l3 != 0") {
  for (const Params& p : {Params{1, 1, 1}, Params{2, 3, 5}, Params{1, 1, -1}}) {
    for (const Matrix& d : subspace_maps(derivation_space(make_3pgq(p)))) {
      auto z = wedge_preimage(p, d);
      REQUIRE(z.has_value());
      CHECK(ad_wedge(p, *z) == d);
    }
  }
}

TEST_CASE("ad_wedge basis spans the derivation space") {
  CHECK(verify_ad_basis({1, 1, 1}));
  CHECK(verify_ad_basis({2, 3, 5}));
  CHECK_THROWS_AS(verify_ad_basis({1, 1, 0}), std::domain_error);
  CHECK_THROWS_AS(verify_ad_basis({0, 1, 1}), std::domain_error);
}

TEST_CASE("image subspaces of points") {
  StructureTensor sc = make_3pgq({1, 1, 1});
  CHECK(image_subspace(sc, e(0)).dim() == 0);
  CHECK(image_subspace(sc, elem(0, 0, 0, 0)).dim() == 0);

  Subspace im1 = image_subspace(sc, e(1));
  CHECK(im1 == Subspace::span(4, {e(2).to_vec(), e(3).to_vec()}));
}

TEST_CASE("probe space from e0 alone is the 12-dim annihilator") {
  for (const Params& p : {Params{1, 1, 1}, Params{2, 3, 0}}) {
    CHECK(local_probe_space(make_3pgq(p), {e(0)}).dim() == 12);
  }
  CHECK_THROWS_AS(local_probe_space(make_3pgq({1, 1, 1}), {}), std::invalid_argument);
}

TEST_CASE("the seven probes pin down the derivation space when l3 != 0") {
  for (const Params& p : {Params{1, 1, 1}, Params{1, 1, -1}, Params{3, -2, 7}}) {
    LocalReport r = verify_local_theorem(p);
    CHECK(r.equal);
    CHECK(r.probe_dim == 3);
    CHECK(r.der_dim == 3);
  }
}

TEST_CASE("at l3 = 0 the probe space strictly contains the derivation space") {
  StructureTensor sc = make_3pgq({1, 1, 0});
  Subspace der = derivation_space(sc);
  Subspace probe = local_probe_space(sc, standard_probes());
  CHECK(probe.contains(der));
  CHECK(probe.dim() == 6);
  CHECK(der.dim() == 4);
  CHECK(probe != der);
  CHECK_THROWS_AS(verify_local_theorem({1, 1, 0}), std::domain_error);
  CHECK_THROWS_AS(verify_local_theorem({0, 1, 1}), std::domain_error);
}

TEST_CASE("probe monotonicity: more probes never enlarge the space") {
  Sampler s(61);
  StructureTensor sc = make_3pgq({2, 3, 5});
  Subspace der = derivation_space(sc);
  std::vector<Element> probes = {e(0)};
  Subspace prev = local_probe_space(sc, probes);
  for (int step = 0; step < 5; ++step) {
    probes.push_back(random_element(s));
    Subspace next = local_probe_space(sc, probes);
    CHECK(prev.contains(next));
    CHECK(next.contains(der));
    prev = next;
  }
}

TEST_CASE("two-point witnesses") {
  StructureTensor sc = make_3pgq({1, 1, 1});

  // the (x, e0) pair is feasible exactly when vx lies in the image of x
  auto w = two_local_witness(sc, e(0), e(2), elem(0, 0, 0, 0), e(3));
  REQUIRE(w.has_value());
  CHECK(apply_map(*w, e(2)) == e(3));

  auto w2 = two_local_witness(sc, e(1), e(2), e(2), -e(1));
  REQUIRE(w2.has_value());
  CHECK(apply_map(*w2, e(1)) == e(2));
  CHECK(apply_map(*w2, e(2)) == -e(1));
  CHECK(is_derivation(sc, *w2));

  CHECK_FALSE(two_local_witness(sc, e(0), e(2), e(1), elem(0, 0, 0, 0)).has_value());
}

TEST_CASE("witness against e0 exists iff the value is in the image of the point") {
  Sampler s(67);
  StructureTensor sc = make_3pgq({1, 1, 1});
  std::vector<Matrix> der_basis = subspace_maps(derivation_space(sc));
  for (int trial = 0; trial < 25; ++trial) {
    Element x = random_element(s);
    Element vx = random_element(s);
    bool witnessed = two_local_witness(sc, x, e(0), vx, elem(0, 0, 0, 0)).has_value();
    CHECK(witnessed == image_subspace(sc, x).contains(vx.to_vec()));
  }
}

TEST_CASE("global witness recovers a sampled derivation") {
  Sampler s(71);
  StructureTensor sc = make_3pgq({2, 3, 5});
  std::vector<Matrix> der_basis = subspace_maps(derivation_space(sc));

  CHECK(global_witness(sc, ValueAssignment{}).value().is_zero());

  for (int trial = 0; trial < 10; ++trial) {
    Matrix d = s.combination(der_basis, -2, 2);
    ValueAssignment assign;
    std::vector<Element> pts;
    while (pts.size() < 6) {
      Element c = random_element(s);
      bool dup = false;
      for (const Element& q : pts) dup = dup || q == c;
      if (dup) continue;
      pts.push_back(c);
      assign.add(c, apply_map(d, c));
    }
    auto w = global_witness(sc, assign);
    REQUIRE(w.has_value());
    for (const Element& pt : pts) CHECK(apply_map(*w, pt) == apply_map(d, pt));
  }
}

TEST_CASE("global witness rejects a perturbed assignment") {
  // values of one derivation on e1 and e2 pin it down completely, so any
  // off-by-e1 value at e3 is infeasible
  StructureTensor sc = make_3pgq({1, 1, 1});
  Sampler s(73);
  Matrix d = s.combination(subspace_maps(derivation_space(sc)), -2, 2);
  ValueAssignment assign;
  assign.add(e(1), apply_map(d, e(1)));
  assign.add(e(2), apply_map(d, e(2)));
  assign.add(e(3), apply_map(d, e(3)) + e(1));
  CHECK_FALSE(global_witness(sc, assign).has_value());
}

TEST_CASE("duplicate points are rejected by assignments") {
  ValueAssignment assign;
  assign.add(e(1), e(2));
  CHECK_THROWS_AS(assign.add(e(1), e(3)), std::invalid_argument);
}

TEST_CASE("two-local randomized implication holds") {
  TwoLocalReport r = verify_two_local_theorem({1, 1, 1}, 100, 0);
  CHECK(r.trials == 100);
  CHECK(r.implication_held);
  CHECK(r.global_ok == r.pairwise_ok);
  CHECK(r.pairwise_ok >= 34);  // at least the single-derivation trials
  CHECK(r.seed == 0);

  CHECK_THROWS_AS(verify_two_local_theorem({1, 1, 0}, 10, 0), std::domain_error);
}

TEST_CASE("assignments sampled from one derivation are pairwise and globally witnessed") {
  Sampler s(103);
  StructureTensor sc = make_3pgq({1, 1, 1});
  std::vector<Matrix> der_basis = subspace_maps(derivation_space(sc));
  Matrix d = s.combination(der_basis, -2, 2);
  std::vector<Element> pts = {e(1), e(2), e(3), elem(1, -2, 0, 1)};
  ValueAssignment assign;
  for (const Element& pt : pts) assign.add(pt, apply_map(d, pt));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      CHECK(two_local_witness(der_basis, pts[i], pts[j], apply_map(d, pts[i]), apply_map(d, pts[j])).has_value());
  CHECK(global_witness(der_basis, assign).has_value());
}

TEST_CASE("a value outside the image of its point blocks every pair through it") {
  StructureTensor sc = make_3pgq({1, 1, 1});
  // derivations send e1 into span{e2, e3}, so a value with an e1 component
  // cannot be witnessed against any second point
  Element bad = e(1) + e(2);
  CHECK_FALSE(image_subspace(sc, e(1)).contains(bad.to_vec()));
  CHECK_FALSE(two_local_witness(sc, e(1), e(2), bad, elem(0, 0, 0, 0)).has_value());
  CHECK_FALSE(two_local_witness(sc, e(1), e(3), bad, e(1)).has_value());
}

TEST_CASE("derivations form a lie algebra and kill the identity") {
  for (const Params& p : {Params{1, 1, 1}, Params{2, 3, 5}, Params{1, 1, 0}}) {
    StructureTensor sc = make_3pgq(p);
    Subspace der = derivation_space(sc);
    std::vector<Matrix> basis = subspace_maps(der);
    for (const Matrix& d : basis) {
      CHECK(apply_map(d, e(0)).is_zero());
      for (std::size_t i = 1; i <= 3; ++i) CHECK(apply_map(d, e(i))[0].is_zero());
      for (const Matrix& d2 : basis) {
        Matrix bracket = d * d2 - d2 * d;
        CHECK(is_derivation(sc, bracket));
        CHECK(der.contains(flatten_map(bracket)));
      }
    }
  }
}
