#pragma once

// Index-space helpers for enumeration over finite semirings. Elements
// are represented by their canonical index; vectors over S by digit
// strings ranked in little-endian mixed radix.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "srl/limits.hpp"
#include "srl/matrix.hpp"
#include "srl/semiring.hpp"

namespace srl::fin {

using Idx = std::uint16_t;
using IdxVec = std::vector<Idx>;

struct View {
  std::uint32_t size = 0;
  const FiniteTables* t = nullptr;

  Idx plus(Idx a, Idx b) const { return t->plus(a, b); }
  Idx times(Idx a, Idx b) const { return t->times(a, b); }
};

View view(const Semiring& s);

// base^exp, or budget_error if it exceeds cap (or overflows).
std::uint64_t pow_checked(std::uint64_t base, std::uint32_t exp, std::uint64_t cap);

void unrank(std::uint64_t r, std::uint32_t base, std::uint32_t len, IdxVec& out);
std::uint64_t rank(std::uint32_t base, const IdxVec& digits);

struct IMat {
  std::uint32_t m = 0, n = 0;
  IdxVec a;

  Idx at(std::uint32_t i, std::uint32_t j) const { return a[std::size_t(i) * n + j]; }
  Idx& at(std::uint32_t i, std::uint32_t j) { return a[std::size_t(i) * n + j]; }
};

IMat to_imat(const Mat& m);
Mat from_imat(const SemiringHandle& s, const IMat& m);

// u (1xm) * A (mxn) -> 1xn
IdxVec row_times(const View& v, const IdxVec& u, const IMat& A);
// A (mxn) * w (nx1) -> mx1
IdxVec times_col(const View& v, const IMat& A, const IdxVec& w);
IMat mul(const View& v, const IMat& A, const IMat& B);
IdxVec vec_add(const View& v, const IdxVec& x, const IdxVec& y);
IdxVec vec_scale_right(const View& v, const IdxVec& x, Idx a);  // entries x_i * a
IdxVec vec_scale_left(const View& v, Idx a, const IdxVec& x);   // entries a * x_i

// Sorted ranks of {u*A} (row side) or {A*w} (col side). When witness is
// non-null it receives, per span element, the first multiplier rank that
// produces it (multipliers scanned in rank order).
std::vector<std::uint64_t> row_space(const View& v, const IMat& A, std::uint64_t cap,
                                     std::unordered_map<std::uint64_t, std::uint64_t>* witness = nullptr);
std::vector<std::uint64_t> col_space(const View& v, const IMat& A, std::uint64_t cap,
                                     std::unordered_map<std::uint64_t, std::uint64_t>* witness = nullptr);

bool sorted_contains(const std::vector<std::uint64_t>& sorted, std::uint64_t value);
bool subset(const std::vector<std::uint64_t>& sub, const std::vector<std::uint64_t>& super);

}  // namespace srl::fin
