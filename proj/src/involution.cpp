#include "srl/involution.hpp"

#include "srl/errors.hpp"

namespace srl {

namespace {

void require_anti_involutive(const Mat& a) {
  if (!a.semiring()->anti_involutive())
    throw unsupported_error("operation requires an anti-involutive semiring");
}

void require_row_vector(const Mat& a, const Mat& x) {
  if (x.rows() != 1 || x.cols() != a.cols())
    throw shape_error("expected a row vector of length " + std::to_string(a.cols()));
  if (!(*a.semiring() == *x.semiring()))
    throw domain_error("vector and matrix belong to different semirings");
}

void require_col_vector(const Mat& a, const Mat& y) {
  if (y.cols() != 1 || y.rows() != a.rows())
    throw shape_error("expected a column vector of length " + std::to_string(a.rows()));
  if (!(*a.semiring() == *y.semiring()))
    throw domain_error("vector and matrix belong to different semirings");
}

}  // namespace

Mat conj_transpose(const Mat& a) {
  require_anti_involutive(a);
  const Semiring& s = *a.semiring();
  std::vector<Elem> e(a.entries().size());
  for (std::uint32_t i = 0; i < a.rows(); ++i)
    for (std::uint32_t j = 0; j < a.cols(); ++j)
      e[std::size_t(j) * a.rows() + i] = s.conj(a(i, j));
  return Mat(a.semiring(), a.cols(), a.rows(), std::move(e));
}

bool check_cycling(const Mat& m, const Mat& a, const Mat& b) {
  require_anti_involutive(a);
  if (m.cols() != a.rows() || b.rows() != m.rows() || b.cols() != a.cols())
    throw shape_error("cycling check needs M (pxm), A (mxn), B (pxn)");
  if (!mat_leq(mat_mul(m, a), b)) return true;  // antecedent fails
  return mat_leq(mat_mul(conj_transpose(b), m), conj_transpose(a));
}

Mat residuation_witness(const Mat& a, const Mat& x) {
  require_anti_involutive(a);
  require_row_vector(a, x);
  return conj_transpose(mat_mul(a, conj_transpose(x)));
}

Mat residuation_closure(const Mat& a, const Mat& x) {
  return mat_mul(residuation_witness(a, x), a);
}

Mat residuation_witness_col(const Mat& a, const Mat& y) {
  require_anti_involutive(a);
  require_col_vector(a, y);
  return conj_transpose(mat_mul(conj_transpose(y), a));
}

Mat residuation_closure_col(const Mat& a, const Mat& y) {
  return mat_mul(a, residuation_witness_col(a, y));
}

DualityMaps::DualityMaps(Mat a) : a_(std::move(a)) { require_anti_involutive(a_); }

Mat DualityMaps::phi(const Mat& x) const {
  require_row_vector(a_, x);
  return mat_mul(a_, conj_transpose(x));
}

Mat DualityMaps::psi(const Mat& y) const {
  require_col_vector(a_, y);
  return mat_mul(conj_transpose(y), a_);
}

std::pair<Mat, Mat> non_membership_witness(const Mat& a, const Mat& x) {
  const Mat closure = residuation_closure(a, x);
  if (closure == x)
    throw argument_error("no witness exists for members of the row space");
  Mat v = conj_transpose(x);
  Mat v2 = conj_transpose(closure);
  if (!(mat_mul(a, v) == mat_mul(a, v2)) || mat_mul(x, v) == mat_mul(x, v2))
    throw internal_error("separating pair failed re-verification");
  return {std::move(v), std::move(v2)};
}

}  // namespace srl
