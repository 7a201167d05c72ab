#pragma once

#include <cstdint>
#include <vector>

#include "srl/limits.hpp"
#include "srl/matrix.hpp"

namespace srl {

// A right congruence partitions column vectors S^{len x 1} and is
// compatible with addition and the right scalar action; a left congruence
// partitions row vectors S^{1 x len} dually.
enum class CongruenceSide { right, left };

struct VectorCongruence {
  SemiringHandle semiring;
  std::uint32_t length = 0;
  CongruenceSide side = CongruenceSide::right;
  // Vector ranks (little-endian, base |S|). Blocks are sorted internally
  // and ordered by smallest member; together they cover all |S|^length ranks.
  std::vector<std::vector<std::uint64_t>> blocks;
  std::vector<std::uint32_t> block_of;  // indexed by vector rank

  std::size_t block_count() const { return blocks.size(); }
  std::vector<Elem> vector_at(std::uint64_t rank) const;
  Mat vector_mat(std::uint64_t rank) const;  // kx1 for right side, 1xk for left
};

// Kernel of a row space as a right congruence on column vectors (v ~ v'
// iff A*v = A*v'), or of a column space as a left congruence on row
// vectors. The block count equals the size of the opposite space.
VectorCongruence kernel_of_span(const Span& span, const Limits& lim = {});

// The identity relation; least element for congruence_leq.
VectorCongruence discrete_congruence(SemiringHandle s, std::uint32_t length, CongruenceSide side,
                                     const Limits& lim = {});

// K1 <= K2 as relations: every K1 block lies inside a K2 block.
bool congruence_leq(const VectorCongruence& k1, const VectorCongruence& k2);

// row(A) subset of row(B) implies ker row(B) subset of ker row(A); this
// evaluates the implication for one pair (an always-true oracle).
bool check_inclusion_reversing(const Mat& a, const Mat& b, const Limits& lim = {});

// Exhaustive compatibility check of the partition with vector addition
// and the scalar action on the declared side.
bool is_module_congruence(const VectorCongruence& k);

}  // namespace srl
