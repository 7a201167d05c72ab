#include "srl/errors.hpp"
#include "srl/fin.hpp"
#include "srl/involution.hpp"
#include "srl/matrix.hpp"

namespace srl {

std::optional<Mat> span_membership(const Span& span, const Mat& x, const Limits& lim) {
  const SemiringHandle& sh = span.gen.semiring();
  if (!(*sh == *x.semiring()))
    throw domain_error("vector and generator belong to different semirings");
  const Mat& A = span.gen;
  if (span.side == Side::row) {
    if (x.rows() != 1 || x.cols() != A.cols())
      throw shape_error("expected a row vector of length " + std::to_string(A.cols()));
  } else {
    if (x.cols() != 1 || x.rows() != A.rows())
      throw shape_error("expected a column vector of length " + std::to_string(A.rows()));
  }

  if (sh->anti_involutive()) {
    if (span.side == Side::row) {
      Mat u = residuation_witness(A, x);
      if (mat_mul(u, A) == x) return u;
      return std::nullopt;
    }
    Mat v = residuation_witness_col(A, x);
    if (mat_mul(A, v) == x) return v;
    return std::nullopt;
  }

  if (!sh->finite())
    throw unsupported_error("span membership requires a finite or anti-involutive semiring");

  const fin::View v = fin::view(*sh);
  const fin::IMat Ai = fin::to_imat(A);
  const fin::IdxVec target = fin::to_imat(x).a;
  const std::uint32_t mult_len = span.side == Side::row ? Ai.m : Ai.n;
  const std::uint64_t count = fin::pow_checked(v.size, mult_len, lim.span_multipliers);
  fin::IdxVec u;
  for (std::uint64_t r = 0; r < count; ++r) {
    fin::unrank(r, v.size, mult_len, u);
    const fin::IdxVec image =
        span.side == Side::row ? fin::row_times(v, u, Ai) : fin::times_col(v, Ai, u);
    if (image == target) {
      std::vector<Elem> e;
      e.reserve(mult_len);
      for (auto d : u) e.push_back(sh->element(d));
      return span.side == Side::row ? Mat(sh, 1, mult_len, std::move(e))
                                    : Mat(sh, mult_len, 1, std::move(e));
    }
  }
  return std::nullopt;
}

}  // namespace srl
