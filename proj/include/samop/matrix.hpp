#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "samop/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<samop::GaussianRational> {
  typedef samop::GaussianRational Real;
  typedef samop::GaussianRational NonInteger;
  typedef samop::GaussianRational Nested;
  typedef samop::GaussianRational Literal;
  enum {
    IsComplex = 0,  // we carry our own conjugation; Eigen never needs it here
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64,
  };
  static inline Real epsilon() { return samop::GaussianRational(0); }
  static inline Real dummy_precision() { return samop::GaussianRational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace samop {

using DenseMat = Eigen::Matrix<GaussianRational, Eigen::Dynamic, Eigen::Dynamic>;
using SpMat = Eigen::SparseMatrix<GaussianRational>;
using Triplet = Eigen::Triplet<GaussianRational>;

// Exact rank by Gaussian elimination over the Gaussian-rational field.
// Division is exact and zero-testing is exact, so there is no pivot
// tolerance anywhere.
long exact_rank(const DenseMat& m);
long exact_rank(const SpMat& m);

// M^k for k >= 0 (k = 0 gives the identity).
SpMat sparse_pow(const SpMat& m, long long k);
DenseMat dense_pow(const DenseMat& m, long long k);

// Conjugate transpose re-indexed by basis reversal: J · conj(Mᵀ) · J. Maps an
// upper-triangular matrix to an upper-triangular one, unitarily equivalent to
// the adjoint.
DenseMat adjoint_retriangularized(const DenseMat& m);

bool is_upper_triangular(const DenseMat& m);
bool strictly_upper(const DenseMat& m);
bool is_diagonal(const DenseMat& m);

}  // namespace samop
