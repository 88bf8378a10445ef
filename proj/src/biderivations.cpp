#include "pgq/biderivations.hpp"

#include <stdexcept>

namespace pgq {

Element BilinearTensor::apply(const Element& x, const Element& y) const {
  Element out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (y[j].is_zero()) continue;
      Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < 4; ++k)
        if (!t[i][j][k].is_zero()) out[k] += xy * t[i][j][k];
    }
  }
  return out;
}

Vec flatten_tensor(const BilinearTensor& d) {
  Vec v;
  v.reserve(64);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) v.push_back(d.t[i][j][k]);
  return v;
}

BilinearTensor unflatten_tensor(const Vec& v) {
  if (v.size() != 64) throw std::invalid_argument("unflatten_tensor: need 64 entries");
  BilinearTensor d;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) d.t[i][j][k] = v[16 * i + 4 * j + k];
  return d;
}

Matrix left_slice(const BilinearTensor& d, std::size_t i) {
  Matrix m(4, 4);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t k = 0; k < 4; ++k) m(k, j) = d.t[i][j][k];
  return m;
}

Matrix right_slice(const BilinearTensor& d, std::size_t j) {
  Matrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) m(k, i) = d.t[i][j][k];
  return m;
}

bool is_biderivation(const StructureTensor& sc, const BilinearTensor& d) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) {
        Element lhs1, lhs2;
        for (std::size_t n = 0; n < 4; ++n) {
          if (!sc.c[i][j][n].is_zero()) lhs1 = lhs1 + sc.c[i][j][n] * d.value(n, k);
          if (!sc.c[j][k][n].is_zero()) lhs2 = lhs2 + sc.c[j][k][n] * d.value(i, n);
        }
        Element rhs1 = multiply(sc, Element::basis(i), d.value(j, k)) + multiply(sc, d.value(i, k), Element::basis(j));
        Element rhs2 = multiply(sc, Element::basis(j), d.value(i, k)) + multiply(sc, d.value(i, j), Element::basis(k));
        if (lhs1 != rhs1 || lhs2 != rhs2) return false;
      }
  return true;
}

Subspace biderivation_space(const StructureTensor& sc) {
  // Unknowns t_pqr at flat index 16p + 4q + r; for each triple (i,j,k) and
  // output coordinate m, both Leibniz identities contribute one row.
  RrefBuilder b(64);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t m = 0; m < 4; ++m) {
          Vec row1(64), row2(64);
          for (std::size_t n = 0; n < 4; ++n) {
            row1[16 * n + 4 * k + m] += sc.c[i][j][n];
            row1[16 * j + 4 * k + n] -= sc.c[i][n][m];
            row1[16 * i + 4 * k + n] -= sc.c[n][j][m];

            row2[16 * i + 4 * n + m] += sc.c[j][k][n];
            row2[16 * i + 4 * k + n] -= sc.c[j][n][m];
            row2[16 * i + 4 * j + n] -= sc.c[n][k][m];
          }
          b.add_row(std::move(row1));
          b.add_row(std::move(row2));
        }
  return Subspace::span(64, b.kernel_basis());
}

std::pair<Subspace, Subspace> split_symmetric_skew(const Subspace& s) {
  if (s.ambient_dim() != 64) throw std::invalid_argument("split_symmetric_skew: expect 64-dim ambient space");
  std::vector<Vec> sym, skew;
  for (const Vec& v : s.basis()) {
    BilinearTensor d = unflatten_tensor(v);
    BilinearTensor plus, minus;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) {
          plus.t[i][j][k] = d.t[i][j][k] + d.t[j][i][k];
          minus.t[i][j][k] = d.t[i][j][k] - d.t[j][i][k];
        }
    sym.push_back(flatten_tensor(plus));
    skew.push_back(flatten_tensor(minus));
  }
  return {Subspace::span(64, sym), Subspace::span(64, skew)};
}

Symmetry tensor_symmetry(const BilinearTensor& d) {
  bool sym = true, skew = true;
  for (std::size_t i = 0; i < 4 && (sym || skew); ++i)
    for (std::size_t j = 0; j < 4 && (sym || skew); ++j)
      for (std::size_t k = 0; k < 4; ++k) {
        if (d.t[i][j][k] != d.t[j][i][k]) sym = false;
        if (d.t[i][j][k] != -d.t[j][i][k]) skew = false;
      }
  if (sym) return Symmetry::symmetric;
  if (skew) return Symmetry::skew;
  return Symmetry::mixed;
}

const char* symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::symmetric: return "symmetric";
    case Symmetry::skew: return "skew";
    default: return "mixed";
  }
}

BilinearTensor wedge_tensor(const Params& p) {
  if (p.l1.is_zero()) throw std::domain_error("normalized wedge undefined: l1 = 0");
  BilinearTensor d;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Element w = wedge(p, Element::basis(i), Element::basis(j));
      for (std::size_t k = 0; k < 4; ++k) d.t[i][j][k] = w[k];
    }
  return d;
}

BiderivationReport verify_biderivation_theorem(const Params& p) {
  if (p.l3.is_zero()) throw std::domain_error("verify_biderivation_theorem requires l3 != 0");
  if ((p.l1 * p.l2).is_zero()) throw std::domain_error("verify_biderivation_theorem requires l1 l2 != 0");
  Subspace bd = biderivation_space(make_3pgq(p));
  BiderivationReport report;
  report.dim = bd.dim();
  report.generator_matches_wedge =
      bd.dim() == 1 && bd == Subspace::span(64, {flatten_tensor(wedge_tensor(p))});
  return report;
}

namespace {

// det with rows (r1 r2 r3), (x1 x2 x3), (y1 y2 y3) evaluated on basis pairs.
BilinearTensor determinant_family(const Element& r1, const Element& r2, const Element& r3) {
  BilinearTensor d;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Element x = Element::basis(i), y = Element::basis(j);
      Element w = (x[2] * y[3] - x[3] * y[2]) * r1 + (x[3] * y[1] - x[1] * y[3]) * r2 + (x[1] * y[2] - x[2] * y[1]) * r3;
      for (std::size_t k = 0; k < 4; ++k) d.t[i][j][k] = w[k];
    }
  return d;
}

}  // namespace

std::pair<BilinearTensor, BilinearTensor> skew_family_lambda3_zero(const Params& p) {
  if ((p.l1 * p.l2).is_zero()) throw std::domain_error("skew family requires l1 l2 != 0");
  Rational ratio = p.l2 / p.l1;
  BilinearTensor a = determinant_family(Element(), ratio * Element::basis(2), Element::basis(3));
  BilinearTensor b = determinant_family(Element(), -Element::basis(3), Element::basis(2));
  return {a, b};
}

SkewReport verify_skew_lambda3_zero(const Params& p) {
  if (!p.l3.is_zero()) throw std::domain_error("verify_skew_lambda3_zero requires l3 = 0");
  if ((p.l1 * p.l2).is_zero()) throw std::domain_error("verify_skew_lambda3_zero requires l1 l2 != 0");
  Subspace skewspace = split_symmetric_skew(biderivation_space(make_3pgq(p))).second;
  auto [fa, fb] = skew_family_lambda3_zero(p);
  Subspace family = Subspace::span(64, {flatten_tensor(fa), flatten_tensor(fb)});
  SkewReport report;
  report.skew_dim = skewspace.dim();
  report.family_matches = skewspace.dim() == 2 && skewspace == family;
  return report;
}

Subspace symmetric_pattern_family(const Params& p) {
  if ((p.l1 * p.l2).is_zero()) throw std::domain_error("symmetric pattern family requires l1 l2 != 0");

  // Slice-matrix pattern with parameters (a1, b1, c1, d1, c2, d2): the slice
  // at e1 carries (a1 b1 c1 d1), the e2 slice (d1 c1 d2 c2), and the e3 slice
  // is the e1/e2 data scaled by -l2/l1; the e0 slice vanishes.
  Rational r = -(p.l2 / p.l1);
  auto family_member = [&](long a1, long b1, long c1, long d1, long c2, long d2) {
    Matrix d_e1(4, 4), d_e2(4, 4), d_e3(4, 4);
    d_e1(2, 1) = a1; d_e1(2, 2) = d1; d_e1(2, 3) = r * Rational(c1);
    d_e1(3, 1) = b1; d_e1(3, 2) = c1; d_e1(3, 3) = d1;
    d_e2(2, 1) = d1; d_e2(2, 2) = d2; d_e2(2, 3) = r * Rational(c2);
    d_e2(3, 1) = c1; d_e2(3, 2) = c2; d_e2(3, 3) = d2;
    d_e3(2, 1) = r * Rational(c1); d_e3(2, 2) = r * Rational(c2); d_e3(2, 3) = r * Rational(d2);
    d_e3(3, 1) = d1; d_e3(3, 2) = d2; d_e3(3, 3) = r * Rational(c2);
    BilinearTensor t;
    std::array<Matrix, 4> slices = {Matrix(4, 4), d_e1, d_e2, d_e3};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) t.t[i][j][k] = slices[i](k, j);
    return flatten_tensor(t);
  };

  return Subspace::span(64, {
      family_member(1, 0, 0, 0, 0, 0), family_member(0, 1, 0, 0, 0, 0), family_member(0, 0, 1, 0, 0, 0),
      family_member(0, 0, 0, 1, 0, 0), family_member(0, 0, 0, 0, 1, 0), family_member(0, 0, 0, 0, 0, 1)});
}

SymmetricReport symmetric_family_lambda3_zero(const Params& p) {
  if (!p.l3.is_zero()) throw std::domain_error("symmetric_family_lambda3_zero requires l3 = 0");
  if ((p.l1 * p.l2).is_zero()) throw std::domain_error("symmetric_family_lambda3_zero requires l1 l2 != 0");

  Subspace sym = split_symmetric_skew(biderivation_space(make_3pgq(p))).first;

  SymmetricReport report;
  report.space = sym;
  report.pattern_ok = symmetric_pattern_family(p).contains(sym);
  return report;
}

}  // namespace pgq
