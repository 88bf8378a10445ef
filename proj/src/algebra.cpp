#include "pgq/algebra.hpp"

#include <stdexcept>

namespace pgq {

Element Element::from_vec(const Vec& v) {
  if (v.size() != 4) throw std::invalid_argument("Element::from_vec: need 4 coordinates");
  return Element(v[0], v[1], v[2], v[3]);
}

std::string Element::str() const {
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    const Rational& x = c[i];
    if (x.is_zero()) continue;
    std::string coeff = x.str();
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff = coeff.substr(1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + " ";
      out += "e" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

StructureTensor make_3pgq(const Params& p) {
  StructureTensor sc;
  sc.params = p;
  auto set = [&sc](std::size_t i, std::size_t j, const Element& v) {
    for (std::size_t k = 0; k < 4; ++k) sc.c[i][j][k] = v[k];
  };
  const Rational& l1 = p.l1;
  const Rational& l2 = p.l2;
  const Rational& l3 = p.l3;

  for (std::size_t j = 0; j < 4; ++j) {
    set(0, j, Element::basis(j));
    set(j, 0, Element::basis(j));
  }
  set(1, 1, Element(-(l1 * l2), 0, 0, 0));
  set(2, 2, Element(-(l1 * l3), 0, 0, 0));
  set(3, 3, Element(-(l2 * l3), 0, 0, 0));
  set(1, 2, Element(0, 0, 0, l1));
  set(2, 1, Element(0, 0, 0, -l1));
  set(2, 3, Element(0, l3, 0, 0));
  set(3, 2, Element(0, -l3, 0, 0));
  set(3, 1, Element(0, 0, l2, 0));
  set(1, 3, Element(0, 0, -l2, 0));
  return sc;
}

Element multiply(const StructureTensor& sc, const Element& x, const Element& y) {
  Element out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (y[j].is_zero()) continue;
      Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < 4; ++k) {
        const Rational& coeff = sc.c[i][j][k];
        if (!coeff.is_zero()) out[k] += xy * coeff;
      }
    }
  }
  return out;
}

Rational bilinear_f(const Params& p, const Element& x, const Element& y) {
  return p.l1 * p.l2 * x[1] * y[1] + p.l1 * p.l3 * x[2] * y[2] + p.l2 * p.l3 * x[3] * y[3];
}

Element cross(const Params& p, const Element& x, const Element& y) {
  Rational m1 = x[2] * y[3] - x[3] * y[2];
  Rational m2 = x[1] * y[3] - x[3] * y[1];
  Rational m3 = x[1] * y[2] - x[2] * y[1];
  return Element(0, p.l3 * m1, -(p.l2 * m2), p.l1 * m3);
}

Element wedge(const Params& p, const Element& x, const Element& y) {
  if (p.l1.is_zero()) throw std::domain_error("normalized wedge undefined: l1 = 0");
  Rational inv = p.l1.inverse();
  return inv * cross(p, x, y);
}

Subspace center(const StructureTensor& sc) {
  // z e_i - e_i z = 0 for each basis e_i; unknowns are the coordinates of z.
  Matrix m(16, 4);
  std::size_t r = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k, ++r)
      for (std::size_t j = 0; j < 4; ++j) m(r, j) = sc.c[j][i][k] - sc.c[i][j][k];
  return nullspace(m);
}

bool e0_is_identity(const StructureTensor& sc) {
  for (std::size_t j = 0; j < 4; ++j)
    if (sc.product(0, j) != Element::basis(j) || sc.product(j, 0) != Element::basis(j)) return false;
  return true;
}

bool basis_products_associative(const StructureTensor& sc) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) {
        Element left = multiply(sc, sc.product(i, j), Element::basis(k));
        Element right = multiply(sc, Element::basis(i), sc.product(j, k));
        if (left != right) return false;
      }
  return true;
}

}  // namespace pgq
