#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

#include "gluecoeff/partitions.hpp"
#include "gluecoeff/trees.hpp"

namespace Eigen {
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpq_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};
}  // namespace Eigen

namespace gluecoeff {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using IntegerMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

// Fraction-free elimination; exact for any integral-domain scalar.
template <typename Scalar>
Scalar bareiss_determinant(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  Scalar sign = 1, prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = v / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// Clears denominators row by row, then runs integer Bareiss.
Rational determinant(const RationalMatrix& m);

struct WindingAssignment {
  OrientedWeightedTree tree;
  std::array<int, 3> triple{};
  int center = -1;
  std::vector<Mult> eta;  // by edge id
};

WindingAssignment special_windings(const Theta& t, const OrientedWeightedTree& tree, std::array<int, 3> triple);
bool vertex_balance_check(const WindingAssignment& w);
Rational rotation_rate(const WindingAssignment& w, int v, int i, int j);

Mult cz_index(const OrbitKind& kind, Mult m);
Mult branched_cover_index(const OrbitKind& kind, Mult genus, const MultList& a, const MultList& b);

// Everything matrix_A derives from a family, kept for inspection.
struct CokernelSystem {
  OrientedWeightedTree tree;
  std::vector<int> ends;     // eps_1 .. eps_N as leaf labels
  std::vector<int> columns;  // v_1 .. v_{N-2}
  std::vector<int> dominant; // d(k) for k = 1 .. N-2
  RationalMatrix A;
};

CokernelSystem cokernel_system(const Theta& t, const EndSetFamily& e, const EndData& s);
RationalMatrix matrix_A(const Theta& t, const EndSetFamily& e, const EndData& s);
bool det_identity_check(const Theta& t, const EndSetFamily& e, const EndData& s);
BigInt f_via_determinants(const Theta& t, const MultList& a, const MultList& b);

}  // namespace gluecoeff
