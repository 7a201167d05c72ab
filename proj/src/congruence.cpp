#include "srl/congruence.hpp"

#include <map>

#include "srl/errors.hpp"
#include "srl/fin.hpp"

namespace srl {

std::vector<Elem> VectorCongruence::vector_at(std::uint64_t rank) const {
  fin::IdxVec digits;
  fin::unrank(rank, std::uint32_t(semiring->size()), length, digits);
  std::vector<Elem> out;
  out.reserve(length);
  for (auto d : digits) out.push_back(semiring->element(d));
  return out;
}

Mat VectorCongruence::vector_mat(std::uint64_t rank) const {
  auto e = vector_at(rank);
  return side == CongruenceSide::right ? Mat(semiring, length, 1, std::move(e))
                                       : Mat(semiring, 1, length, std::move(e));
}

VectorCongruence kernel_of_span(const Span& span, const Limits& lim) {
  const SemiringHandle& sh = span.gen.semiring();
  if (!sh->finite()) throw unsupported_error("kernel congruences require a finite semiring");
  const fin::View v = fin::view(*sh);
  const fin::IMat A = fin::to_imat(span.gen);

  VectorCongruence k;
  k.semiring = sh;
  k.side = span.side == Side::row ? CongruenceSide::right : CongruenceSide::left;
  k.length = span.side == Side::row ? A.n : A.m;
  const std::uint64_t count = fin::pow_checked(v.size, k.length, lim.vector_space);
  k.block_of.resize(count);

  std::map<fin::IdxVec, std::uint32_t> image_block;
  fin::IdxVec vec;
  for (std::uint64_t r = 0; r < count; ++r) {
    fin::unrank(r, v.size, k.length, vec);
    const fin::IdxVec image =
        span.side == Side::row ? fin::times_col(v, A, vec) : fin::row_times(v, vec, A);
    auto [it, fresh] = image_block.emplace(image, std::uint32_t(k.blocks.size()));
    if (fresh) k.blocks.emplace_back();
    k.blocks[it->second].push_back(r);
    k.block_of[r] = it->second;
  }
  return k;
}

VectorCongruence discrete_congruence(SemiringHandle s, std::uint32_t length, CongruenceSide side,
                                     const Limits& lim) {
  if (!s->finite()) throw unsupported_error("congruences require a finite semiring");
  const std::uint64_t count = fin::pow_checked(std::uint64_t(s->size()), length, lim.vector_space);
  VectorCongruence k;
  k.semiring = std::move(s);
  k.length = length;
  k.side = side;
  k.blocks.reserve(count);
  k.block_of.resize(count);
  for (std::uint64_t r = 0; r < count; ++r) {
    k.block_of[r] = std::uint32_t(r);
    k.blocks.push_back({r});
  }
  return k;
}

bool congruence_leq(const VectorCongruence& k1, const VectorCongruence& k2) {
  if (!(*k1.semiring == *k2.semiring) || k1.length != k2.length || k1.side != k2.side)
    throw argument_error("congruence comparison requires matching semiring, length and side");
  for (const auto& block : k1.blocks) {
    const std::uint32_t target = k2.block_of[block.front()];
    for (auto r : block)
      if (k2.block_of[r] != target) return false;
  }
  return true;
}

bool check_inclusion_reversing(const Mat& a, const Mat& b, const Limits& lim) {
  if (!(*a.semiring() == *b.semiring()))
    throw domain_error("matrices belong to different semirings");
  if (a.cols() != b.cols()) throw argument_error("matrices must have equal column counts");
  const fin::View v = fin::view(*a.semiring());
  const auto rows_a = fin::row_space(v, fin::to_imat(a), lim.span_multipliers);
  const auto rows_b = fin::row_space(v, fin::to_imat(b), lim.span_multipliers);
  if (!fin::subset(rows_a, rows_b)) return true;  // antecedent fails
  const auto ker_a = kernel_of_span({Side::row, a}, lim);
  const auto ker_b = kernel_of_span({Side::row, b}, lim);
  return congruence_leq(ker_b, ker_a);
}

bool is_module_congruence(const VectorCongruence& k) {
  const Semiring& s = *k.semiring;
  const fin::View v = fin::view(s);
  const std::uint64_t count = k.block_of.size();

  // Partition sanity: blocks disjoint and covering.
  std::vector<char> seen(count, 0);
  for (std::size_t b = 0; b < k.blocks.size(); ++b) {
    if (k.blocks[b].empty()) return false;
    for (auto r : k.blocks[b]) {
      if (r >= count || seen[r] || k.block_of[r] != b) return false;
      seen[r] = 1;
    }
  }
  for (auto c : seen)
    if (!c) return false;

  fin::IdxVec rep, other, w;
  for (const auto& block : k.blocks) {
    fin::unrank(block.front(), v.size, k.length, rep);
    for (std::size_t i = 1; i < block.size(); ++i) {
      fin::unrank(block[i], v.size, k.length, other);
      for (std::uint64_t wr = 0; wr < count; ++wr) {
        fin::unrank(wr, v.size, k.length, w);
        const auto lhs = fin::rank(v.size, fin::vec_add(v, rep, w));
        const auto rhs = fin::rank(v.size, fin::vec_add(v, other, w));
        if (k.block_of[lhs] != k.block_of[rhs]) return false;
      }
      for (std::uint32_t a = 0; a < v.size; ++a) {
        const auto lhs = k.side == CongruenceSide::right
                             ? fin::rank(v.size, fin::vec_scale_right(v, rep, fin::Idx(a)))
                             : fin::rank(v.size, fin::vec_scale_left(v, fin::Idx(a), rep));
        const auto rhs = k.side == CongruenceSide::right
                             ? fin::rank(v.size, fin::vec_scale_right(v, other, fin::Idx(a)))
                             : fin::rank(v.size, fin::vec_scale_left(v, fin::Idx(a), other));
        if (k.block_of[lhs] != k.block_of[rhs]) return false;
      }
    }
  }
  return true;
}

}  // namespace srl
