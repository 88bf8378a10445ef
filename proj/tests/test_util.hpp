#pragma once

#include <vector>

#include "pgq/algebra.hpp"
#include "pgq/linalg.hpp"
#include "pgq/rational.hpp"
#include "pgq/sampling.hpp"

namespace testutil {

inline pgq::Rational q(long num, long den = 1) { return pgq::Rational(num, den); }

inline pgq::Vec vec(std::initializer_list<long> xs) {
  pgq::Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline pgq::Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size(), c = rows.begin()->size();
  pgq::Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long x : row) m(i, j++) = pgq::Rational(x);
    ++i;
  }
  return m;
}

inline pgq::Element elem(long a, long b, long c, long d) {
  return pgq::Element(pgq::Rational(a), pgq::Rational(b), pgq::Rational(c), pgq::Rational(d));
}

inline pgq::Element e(std::size_t i) { return pgq::Element::basis(i); }

inline pgq::Matrix random_matrix(pgq::Sampler& s, std::size_t rows, std::size_t cols) {
  return s.matrix(rows, cols, -5, 5);
}

inline pgq::Element random_element(pgq::Sampler& s) { return s.element(-4, 4); }

}  // namespace testutil
