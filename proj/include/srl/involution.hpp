#pragma once

#include <utility>

#include "srl/matrix.hpp"

namespace srl {

// Entrywise involution combined with transposition: (A~)_{ij} = conj(A_{ji}).
Mat conj_transpose(const Mat& a);

// Evaluates M*A <= B  =>  conj(B)*M <= conj(A) for one triple. Holds for
// every triple over an anti-involutive semiring; exposed as an oracle for
// property tests.
bool check_cycling(const Mat& m, const Mat& a, const Mat& b);

// Largest element of row(A) dominated by x, namely conj(A*conj(x))*A.
// Equality with x decides membership. residuation_witness returns the
// multiplier u = conj(A*conj(x)) with u*A = closure.
Mat residuation_closure(const Mat& a, const Mat& x);
Mat residuation_witness(const Mat& a, const Mat& x);

// Column-side duals: largest element of col(A) dominated by y is
// A*conj(conj(y)*A); the witness v = conj(conj(y)*A) satisfies A*v = closure.
Mat residuation_closure_col(const Mat& a, const Mat& y);
Mat residuation_witness_col(const Mat& a, const Mat& y);

// The mutually inverse antitone maps between row(A) and col(A):
// phi(x) = A*conj(x), psi(y) = conj(y)*A.
class DualityMaps {
 public:
  explicit DualityMaps(Mat a);

  Mat phi(const Mat& x) const;  // row vector (1xn) -> column vector (mx1)
  Mat psi(const Mat& y) const;  // column vector (mx1) -> row vector (1xn)
  const Mat& matrix() const { return a_; }

 private:
  Mat a_;
};

// For x outside row(A): a pair (v, v') of column vectors with A*v = A*v'
// and x*v != x*v'. Both identities are re-verified before returning.
// Precondition error if x is a member.
std::pair<Mat, Mat> non_membership_witness(const Mat& a, const Mat& x);

}  // namespace srl
