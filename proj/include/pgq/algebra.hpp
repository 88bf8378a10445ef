#pragma once

#include <array>
#include <optional>
#include <string>

#include "pgq/linalg.hpp"
#include "pgq/rational.hpp"

namespace pgq {

// The parameter triple (l1, l2, l3) selecting an algebra in the family.
struct Params {
  Rational l1, l2, l3;
  friend bool operator==(const Params&, const Params&) = default;
};

// A 4-coordinate element x0 e0 + x1 e1 + x2 e2 + x3 e3.
struct Element {
  std::array<Rational, 4> c{};

  Element() = default;
  Element(Rational x0, Rational x1, Rational x2, Rational x3) : c{std::move(x0), std::move(x1), std::move(x2), std::move(x3)} {}

  static Element basis(std::size_t i) {
    Element e;
    e.c[i] = 1;
    return e;
  }

  Rational& operator[](std::size_t i) { return c[i]; }
  const Rational& operator[](std::size_t i) const { return c[i]; }

  Element scalar_part() const { return Element(c[0], 0, 0, 0); }
  Element vector_part() const { return Element(0, c[1], c[2], c[3]); }
  bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero(); }

  Vec to_vec() const { return Vec(c.begin(), c.end()); }
  static Element from_vec(const Vec& v);

  std::string str() const;  // linear combination in e0..e3, e.g. "2/3 e1 - e3"

  friend Element operator+(const Element& a, const Element& b) {
    return Element(a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]);
  }
  friend Element operator-(const Element& a, const Element& b) {
    return Element(a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]);
  }
  friend Element operator*(const Rational& s, const Element& a) {
    return Element(s * a.c[0], s * a.c[1], s * a.c[2], s * a.c[3]);
  }
  friend Element operator-(const Element& a) { return Rational(-1) * a; }
  friend bool operator==(const Element&, const Element&) = default;
};

// Structure constants c[i][j][k] of a 4-dimensional algebra, e_i e_j = sum_k c[i][j][k] e_k.
// `params` is set when the table came from make_3pgq (or an input file carrying the triple).
struct StructureTensor {
  std::optional<Params> params;
  std::array<std::array<std::array<Rational, 4>, 4>, 4> c{};

  Element product(std::size_t i, std::size_t j) const {
    return Element(c[i][j][0], c[i][j][1], c[i][j][2], c[i][j][3]);
  }
};

// Builds the table  e1^2 = -l1 l2,  e2^2 = -l1 l3,  e3^2 = -l2 l3,
// e1 e2 = l1 e3 = -e2 e1,  e2 e3 = l3 e1 = -e3 e2,  e3 e1 = l2 e2 = -e1 e3,
// with e0 a two-sided identity.
StructureTensor make_3pgq(const Params& p);

// Bilinear extension of the table: contraction sum_{i,j} x_i y_j c[i][j][k].
Element multiply(const StructureTensor& sc, const Element& x, const Element& y);

// f(x, y) = l1 l2 x1 y1 + l1 l3 x2 y2 + l2 l3 x3 y3; depends only on vector parts.
Rational bilinear_f(const Params& p, const Element& x, const Element& y);

// Determinant with first row (l3 e1, l2 e2, l1 e3), then the vector parts of x and y.
Element cross(const Params& p, const Element& x, const Element& y);

// cross scaled by 1/l1 (first row (l3/l1) e1, (l2/l1) e2, e3). Requires l1 != 0.
Element wedge(const Params& p, const Element& x, const Element& y);

// All z with z x = x z for every x, from commutator constraints on basis pairs.
Subspace center(const StructureTensor& sc);

bool e0_is_identity(const StructureTensor& sc);
bool basis_products_associative(const StructureTensor& sc);  // (e_i e_j) e_k = e_i (e_j e_k), all 64 triples

}  // namespace pgq
