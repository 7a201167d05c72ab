#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "srl/limits.hpp"
#include "srl/semiring.hpp"

namespace srl {

enum class Side { row, col };

// Rectangular matrix over a semiring. Vectors are 1xN / Nx1 matrices.
class Mat {
 public:
  Mat(SemiringHandle s, std::uint32_t m, std::uint32_t n, std::vector<Elem> entries);
  static Mat filled(SemiringHandle s, std::uint32_t m, std::uint32_t n, const Elem& value);

  std::uint32_t rows() const { return m_; }
  std::uint32_t cols() const { return n_; }
  const SemiringHandle& semiring() const { return s_; }

  const Elem& operator()(std::uint32_t i, std::uint32_t j) const { return e_[std::size_t(i) * n_ + j]; }
  Elem& operator()(std::uint32_t i, std::uint32_t j) { return e_[std::size_t(i) * n_ + j]; }
  const std::vector<Elem>& entries() const { return e_; }

  Mat row(std::uint32_t i) const;
  Mat col(std::uint32_t j) const;
  Mat transpose() const;  // entry transpose, no involution

  bool operator==(const Mat& other) const;

 private:
  SemiringHandle s_;
  std::uint32_t m_, n_;
  std::vector<Elem> e_;
};

Mat mat_add(const Mat& a, const Mat& b);
Mat mat_mul(const Mat& a, const Mat& b);
// Entrywise induced order; idempotent kinds only.
bool mat_leq(const Mat& a, const Mat& b);
// Stack b below a (same semiring and column count).
Mat stack_rows(const Mat& a, const Mat& b);

bool canonical_less(const Mat& a, const Mat& b);

// A finitely generated row or column space, named by its generator.
struct Span {
  Side side;
  Mat gen;
};

// All elements of the span, duplicates removed, canonical order.
// Finite semirings only.
std::vector<Mat> enumerate_span(const Span& span, const Limits& lim = {});

// Membership with a multiplier witness: u with u*A = x (row side) or
// v with A*v = x (col side). Finite kinds search multipliers; the
// anti-involutive kinds decide by residuation closure.
std::optional<Mat> span_membership(const Span& span, const Mat& x, const Limits& lim = {});

// Text format: "m n" header line, then m lines of n lexemes.
Mat read_matrix(std::istream& in, SemiringHandle s);
void write_matrix(std::ostream& out, const Mat& a);
std::string format_matrix(const Mat& a);

// Whitespace-separated lexemes; k values become 1xk (row) or kx1 (col).
Mat parse_vector(SemiringHandle s, std::string_view text, Side side);
// Whitespace-separated lexemes in row-major order.
Mat make_mat(SemiringHandle s, std::uint32_t m, std::uint32_t n, std::string_view lexemes);

Mat random_matrix(SemiringHandle s, std::uint32_t m, std::uint32_t n, std::mt19937_64& rng);

}  // namespace srl
