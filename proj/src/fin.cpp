#include "srl/fin.hpp"

#include <algorithm>

#include "srl/errors.hpp"

namespace srl::fin {

View view(const Semiring& s) {
  const FiniteTables& t = s.tables();
  return View{t.size, &t};
}

std::uint64_t pow_checked(std::uint64_t base, std::uint32_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base)
      throw budget_error("enumeration of size " + std::to_string(base) + "^" +
                         std::to_string(exp) + " exceeds budget " + std::to_string(cap));
    r *= base;
  }
  if (r > cap)
    throw budget_error("enumeration of size " + std::to_string(r) + " exceeds budget " +
                       std::to_string(cap));
  return r;
}

void unrank(std::uint64_t r, std::uint32_t base, std::uint32_t len, IdxVec& out) {
  out.resize(len);
  for (std::uint32_t i = 0; i < len; ++i) {
    out[i] = Idx(r % base);
    r /= base;
  }
}

std::uint64_t rank(std::uint32_t base, const IdxVec& digits) {
  std::uint64_t r = 0;
  for (std::size_t i = digits.size(); i-- > 0;) r = r * base + digits[i];
  return r;
}

IMat to_imat(const Mat& m) {
  const Semiring& s = *m.semiring();
  IMat out;
  out.m = m.rows();
  out.n = m.cols();
  out.a.resize(std::size_t(out.m) * out.n);
  for (std::uint32_t i = 0; i < out.m; ++i)
    for (std::uint32_t j = 0; j < out.n; ++j) out.at(i, j) = Idx(s.index_of(m(i, j)));
  return out;
}

Mat from_imat(const SemiringHandle& s, const IMat& m) {
  std::vector<Elem> e;
  e.reserve(m.a.size());
  for (auto idx : m.a) e.push_back(s->element(idx));
  return Mat(s, m.m, m.n, std::move(e));
}

IdxVec row_times(const View& v, const IdxVec& u, const IMat& A) {
  IdxVec out(A.n);
  for (std::uint32_t j = 0; j < A.n; ++j) {
    Idx acc = v.times(u[0], A.at(0, j));
    for (std::uint32_t k = 1; k < A.m; ++k) acc = v.plus(acc, v.times(u[k], A.at(k, j)));
    out[j] = acc;
  }
  return out;
}

IdxVec times_col(const View& v, const IMat& A, const IdxVec& w) {
  IdxVec out(A.m);
  for (std::uint32_t i = 0; i < A.m; ++i) {
    Idx acc = v.times(A.at(i, 0), w[0]);
    for (std::uint32_t k = 1; k < A.n; ++k) acc = v.plus(acc, v.times(A.at(i, k), w[k]));
    out[i] = acc;
  }
  return out;
}

IMat mul(const View& v, const IMat& A, const IMat& B) {
  IMat out;
  out.m = A.m;
  out.n = B.n;
  out.a.resize(std::size_t(out.m) * out.n);
  for (std::uint32_t i = 0; i < A.m; ++i)
    for (std::uint32_t j = 0; j < B.n; ++j) {
      Idx acc = v.times(A.at(i, 0), B.at(0, j));
      for (std::uint32_t k = 1; k < A.n; ++k) acc = v.plus(acc, v.times(A.at(i, k), B.at(k, j)));
      out.at(i, j) = acc;
    }
  return out;
}

IdxVec vec_add(const View& v, const IdxVec& x, const IdxVec& y) {
  IdxVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = v.plus(x[i], y[i]);
  return out;
}

IdxVec vec_scale_right(const View& v, const IdxVec& x, Idx a) {
  IdxVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = v.times(x[i], a);
  return out;
}

IdxVec vec_scale_left(const View& v, Idx a, const IdxVec& x) {
  IdxVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = v.times(a, x[i]);
  return out;
}

namespace {

std::vector<std::uint64_t> space_impl(const View& v, const IMat& A, bool row_side,
                                      std::uint64_t cap,
                                      std::unordered_map<std::uint64_t, std::uint64_t>* witness) {
  const std::uint32_t mult_len = row_side ? A.m : A.n;
  const std::uint64_t count = pow_checked(v.size, mult_len, cap);
  std::vector<std::uint64_t> out;
  std::unordered_map<std::uint64_t, std::uint64_t> seen;
  IdxVec u;
  for (std::uint64_t r = 0; r < count; ++r) {
    unrank(r, v.size, mult_len, u);
    const IdxVec image = row_side ? row_times(v, u, A) : times_col(v, A, u);
    const std::uint64_t key = rank(v.size, image);
    if (seen.emplace(key, r).second) out.push_back(key);
  }
  std::sort(out.begin(), out.end());
  if (witness) *witness = std::move(seen);
  return out;
}

}  // namespace

std::vector<std::uint64_t> row_space(const View& v, const IMat& A, std::uint64_t cap,
                                     std::unordered_map<std::uint64_t, std::uint64_t>* witness) {
  return space_impl(v, A, true, cap, witness);
}

std::vector<std::uint64_t> col_space(const View& v, const IMat& A, std::uint64_t cap,
                                     std::unordered_map<std::uint64_t, std::uint64_t>* witness) {
  return space_impl(v, A, false, cap, witness);
}

bool sorted_contains(const std::vector<std::uint64_t>& sorted, std::uint64_t value) {
  return std::binary_search(sorted.begin(), sorted.end(), value);
}

bool subset(const std::vector<std::uint64_t>& sub, const std::vector<std::uint64_t>& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace srl::fin
