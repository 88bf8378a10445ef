#include "pgq/derivations.hpp"

#include <stdexcept>

#include "pgq/sampling.hpp"

namespace pgq {

Vec flatten_map(const Matrix& m) {
  Vec v;
  v.reserve(16);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) v.push_back(m(r, c));
  return v;
}

Matrix unflatten_map(const Vec& v) {
  if (v.size() != 16) throw std::invalid_argument("unflatten_map: need 16 entries");
  Matrix m(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = v[4 * r + c];
  return m;
}

std::vector<Matrix> subspace_maps(const Subspace& s) {
  std::vector<Matrix> maps;
  maps.reserve(s.dim());
  for (const Vec& v : s.basis()) maps.push_back(unflatten_map(v));
  return maps;
}

Element apply_map(const Matrix& m, const Element& x) { return Element::from_vec(m.apply(x.to_vec())); }

bool is_derivation(const StructureTensor& sc, const Matrix& d) {
  for (std::size_t i = 0; i < 4; ++i) {
    Element dei = apply_map(d, Element::basis(i));
    for (std::size_t j = 0; j < 4; ++j) {
      Element lhs = apply_map(d, sc.product(i, j));
      Element rhs = multiply(sc, dei, Element::basis(j)) + multiply(sc, Element::basis(i), apply_map(d, Element::basis(j)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

Subspace derivation_space(const StructureTensor& sc) {
  // Unknowns d_pq, flat index 4p+q. For the pair (e_i, e_j) and output
  // coordinate m:  sum_k c[i][j][k] d_mk - d_ki c[k][j][m] - d_kj c[i][k][m] = 0.
  RrefBuilder b(16);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t m = 0; m < 4; ++m) {
        Vec row(16);
        for (std::size_t k = 0; k < 4; ++k) {
          row[4 * m + k] += sc.c[i][j][k];
          row[4 * k + i] -= sc.c[k][j][m];
          row[4 * k + j] -= sc.c[i][k][m];
        }
        b.add_row(std::move(row));
      }
  return Subspace::span(16, b.kernel_basis());
}

Matrix ad_wedge(const Params& p, const Element& x) {
  Matrix m(4, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    Element col = wedge(p, x, Element::basis(j));
    for (std::size_t r = 0; r < 4; ++r) m(r, j) = col[r];
  }
  return m;
}

std::optional<Element> wedge_preimage(const Params& p, const Matrix& d) {
  // 16 equations ad_wedge(z)(r,c) = d(r,c), linear in the three vector
  // coordinates of z.
  Matrix sys(16, 3);
  Vec rhs(16);
  std::vector<Matrix> gens;
  for (std::size_t i = 1; i <= 3; ++i) gens.push_back(ad_wedge(p, Element::basis(i)));
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      for (std::size_t g = 0; g < 3; ++g) sys(4 * r + c, g) = gens[g](r, c);
      rhs[4 * r + c] = d(r, c);
    }
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  return Element(0, (*sol)[0], (*sol)[1], (*sol)[2]);
}

bool verify_ad_basis(const Params& p) {
  if ((p.l1 * p.l2).is_zero()) throw std::domain_error("verify_ad_basis requires l1 l2 != 0");
  if (p.l3.is_zero()) throw std::domain_error("verify_ad_basis requires l3 != 0");
  std::vector<Vec> gens;
  for (std::size_t i = 1; i <= 3; ++i) gens.push_back(flatten_map(ad_wedge(p, Element::basis(i))));
  Subspace ad_span = Subspace::span(16, gens);
  return ad_span == derivation_space(make_3pgq(p));
}

namespace {

Subspace image_of(const std::vector<Matrix>& der_basis, const Element& v) {
  std::vector<Vec> images;
  images.reserve(der_basis.size());
  for (const Matrix& d : der_basis) images.push_back(d.apply(v.to_vec()));
  return Subspace::span(4, images);
}

}  // namespace

Subspace image_subspace(const StructureTensor& sc, const Element& v) {
  return image_of(subspace_maps(derivation_space(sc)), v);
}

Subspace local_probe_space(const StructureTensor& sc, const std::vector<Element>& probes) {
  if (probes.empty()) throw std::invalid_argument("local_probe_space: probes must be nonempty");
  std::vector<Matrix> der_basis = subspace_maps(derivation_space(sc));
  RrefBuilder b(16);
  for (const Element& v : probes) {
    Subspace image = image_of(der_basis, v);
    // u(v) must lie in the image: one linear condition per annihilator vector.
    Matrix image_rows(image.dim(), 4);
    for (std::size_t r = 0; r < image.dim(); ++r) image_rows.set_row(r, image.basis()[r]);
    Subspace annihilator = nullspace(image_rows);
    for (const Vec& u : annihilator.basis()) {
      Vec row(16);
      for (std::size_t p = 0; p < 4; ++p) {
        if (u[p].is_zero()) continue;
        for (std::size_t q = 0; q < 4; ++q)
          if (!v[q].is_zero()) row[4 * p + q] = u[p] * v[q];
      }
      b.add_row(std::move(row));
    }
  }
  return Subspace::span(16, b.kernel_basis());
}

std::vector<Element> standard_probes() {
  std::vector<Element> probes;
  for (std::size_t i = 0; i < 4; ++i) probes.push_back(Element::basis(i));
  probes.push_back(Element::basis(1) + Element::basis(2));
  probes.push_back(Element::basis(1) + Element::basis(3));
  probes.push_back(Element::basis(2) + Element::basis(3));
  return probes;
}

LocalReport verify_local_theorem(const Params& p) {
  if (p.l3.is_zero()) throw std::domain_error("verify_local_theorem requires l3 != 0");
  if ((p.l1 * p.l2).is_zero()) throw std::domain_error("verify_local_theorem requires l1 l2 != 0");
  StructureTensor sc = make_3pgq(p);
  Subspace der = derivation_space(sc);
  Subspace probe = local_probe_space(sc, standard_probes());
  return LocalReport{probe.dim(), der.dim(), probe == der};
}

void ValueAssignment::add(Element point, Element value) {
  for (const auto& [pt, _] : entries_)
    if (pt == point) throw std::invalid_argument("ValueAssignment: duplicate point");
  entries_.emplace_back(std::move(point), std::move(value));
}

namespace {

// Solve sum_a t_a (B_a p_k) = v_k over the basis coordinates t.
std::optional<Matrix> witness_from_constraints(const std::vector<Matrix>& der_basis,
                                               const std::vector<std::pair<Element, Element>>& entries) {
  std::size_t r = der_basis.size();
  Matrix sys(4 * entries.size(), r);
  Vec rhs(4 * entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    for (std::size_t a = 0; a < r; ++a) {
      Vec img = der_basis[a].apply(entries[k].first.to_vec());
      for (std::size_t m = 0; m < 4; ++m) sys(4 * k + m, a) = img[m];
    }
    for (std::size_t m = 0; m < 4; ++m) rhs[4 * k + m] = entries[k].second[m];
  }
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  Matrix d(4, 4);
  for (std::size_t a = 0; a < r; ++a)
    if (!(*sol)[a].is_zero()) d = d + der_basis[a].scaled((*sol)[a]);
  return d;
}

}  // namespace

std::optional<Matrix> two_local_witness(const std::vector<Matrix>& der_basis, const Element& x, const Element& y,
                                        const Element& vx, const Element& vy) {
  return witness_from_constraints(der_basis, {{x, vx}, {y, vy}});
}

std::optional<Matrix> two_local_witness(const StructureTensor& sc, const Element& x, const Element& y,
                                        const Element& vx, const Element& vy) {
  return two_local_witness(subspace_maps(derivation_space(sc)), x, y, vx, vy);
}

std::optional<Matrix> global_witness(const std::vector<Matrix>& der_basis, const ValueAssignment& assign) {
  if (assign.empty()) return Matrix(4, 4);
  return witness_from_constraints(der_basis, assign.entries());
}

std::optional<Matrix> global_witness(const StructureTensor& sc, const ValueAssignment& assign) {
  return global_witness(subspace_maps(derivation_space(sc)), assign);
}

TwoLocalReport verify_two_local_theorem(const Params& p, std::uint32_t trials, std::uint64_t seed) {
  if (p.l3.is_zero()) throw std::domain_error("verify_two_local_theorem requires l3 != 0");
  if ((p.l1 * p.l2).is_zero()) throw std::domain_error("verify_two_local_theorem requires l1 l2 != 0");

  StructureTensor sc = make_3pgq(p);
  std::vector<Matrix> der_basis = subspace_maps(derivation_space(sc));
  Sampler sampler(seed);

  TwoLocalReport report;
  report.trials = trials;
  report.seed = seed;
  bool held = true;

  for (std::uint32_t t = 0; t < trials; ++t) {
    std::vector<Element> points = {Element::basis(1), Element::basis(2), Element::basis(3)};
    while (points.size() < 5) {
      Element candidate = sampler.element(-2, 2);
      bool dup = false;
      for (const Element& q : points) dup = dup || q == candidate;
      if (!dup) points.push_back(candidate);
    }

    // Trial modes: values from one derivation, from per-point derivations,
    // or per-point with one perturbed value.
    std::vector<Element> values;
    int mode = static_cast<int>(t % 3);
    Matrix shared = sampler.combination(der_basis, -2, 2);
    for (const Element& pt : points) {
      Matrix d = (mode == 0) ? shared : sampler.combination(der_basis, -2, 2);
      values.push_back(apply_map(d, pt));
    }
    if (mode == 2) {
      std::size_t k = static_cast<std::size_t>(sampler.pick(0, static_cast<std::int64_t>(points.size()) - 1));
      values[k] = values[k] + Element::basis(static_cast<std::size_t>(sampler.pick(1, 3)));
    }

    bool all_pairs = true;
    for (std::size_t i = 0; i < points.size() && all_pairs; ++i)
      for (std::size_t j = i + 1; j < points.size() && all_pairs; ++j)
        all_pairs = two_local_witness(der_basis, points[i], points[j], values[i], values[j]).has_value();

    if (!all_pairs) continue;
    report.pairwise_ok++;
    ValueAssignment assign;
    for (std::size_t i = 0; i < points.size(); ++i) assign.add(points[i], values[i]);
    if (global_witness(der_basis, assign).has_value())
      report.global_ok++;
    else
      held = false;
  }

  report.implication_held = held;
  return report;
}

bool matches_derivation_pattern(const Params& p, const Matrix& d, bool require_zero_diagonal) {
  if (p.l1.is_zero() || p.l2.is_zero()) throw std::domain_error("derivation pattern requires l1 l2 != 0");
  for (std::size_t i = 0; i < 4; ++i)
    if (!d(0, i).is_zero() || !d(i, 0).is_zero()) return false;
  if (!d(1, 1).is_zero()) return false;
  if (d(1, 2) != -(p.l3 / p.l2) * d(2, 1)) return false;
  if (d(1, 3) != -(p.l3 / p.l1) * d(3, 1)) return false;
  if (d(2, 3) != -(p.l2 / p.l1) * d(3, 2)) return false;
  if (d(2, 2) != d(3, 3)) return false;
  if (require_zero_diagonal && !d(2, 2).is_zero()) return false;
  return true;
}

}  // namespace pgq
