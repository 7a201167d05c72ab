#include "srl/exactness.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "srl/errors.hpp"
#include "srl/fin.hpp"

namespace srl {

std::string property_name(Property p) {
  switch (p) {
    case Property::E1: return "E1";
    case Property::E2: return "E2";
    case Property::F1: return "F1";
    case Property::F2: return "F2";
    case Property::G1: return "G1";
    case Property::G2: return "G2";
    case Property::H1: return "H1";
    case Property::H2: return "H2";
  }
  throw internal_error("unreachable property_name");
}

Property parse_property(std::string_view name) {
  std::string lower(name);
  for (char& c : lower) c = char(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "e1") return Property::E1;
  if (lower == "e2") return Property::E2;
  if (lower == "f1") return Property::F1;
  if (lower == "f2") return Property::F2;
  if (lower == "g1") return Property::G1;
  if (lower == "g2") return Property::G2;
  if (lower == "h1") return Property::H1;
  if (lower == "h2") return Property::H2;
  throw argument_error("unknown exactness property '" + std::string(name) + "'");
}

namespace {

using fin::Idx;
using fin::IdxVec;
using fin::IMat;
using fin::View;

Idx dot(const View& v, const IdxVec& x, const IdxVec& y) {
  Idx acc = v.times(x[0], y[0]);
  for (std::size_t k = 1; k < x.size(); ++k) acc = v.plus(acc, v.times(x[k], y[k]));
  return acc;
}

void require_finite(const Mat& a) {
  if (!a.semiring()->finite())
    throw unsupported_error("exactness checks require a finite semiring");
}

// Kernel of row(A) as block ids over column-vector ranks (or of col(A)
// over row-vector ranks when row_side is false).
std::vector<std::uint32_t> kernel_blocks(const View& v, const IMat& A, bool row_side,
                                         std::uint64_t count) {
  const std::uint32_t len = row_side ? A.n : A.m;
  std::vector<std::uint32_t> block_of(count);
  std::map<IdxVec, std::uint32_t> image_block;
  IdxVec vec;
  for (std::uint64_t r = 0; r < count; ++r) {
    fin::unrank(r, v.size, len, vec);
    const IdxVec image = row_side ? fin::times_col(v, A, vec) : fin::row_times(v, vec, A);
    auto [it, fresh] = image_block.emplace(image, std::uint32_t(image_block.size()));
    block_of[r] = it->second;
  }
  return block_of;
}

Mat vec_to_mat(const SemiringHandle& s, const View& v, std::uint64_t rank, std::uint32_t len,
               bool row_vector) {
  IdxVec digits;
  fin::unrank(rank, v.size, len, digits);
  std::vector<Elem> e;
  e.reserve(len);
  for (auto d : digits) e.push_back(s->element(d));
  return row_vector ? Mat(s, 1, len, std::move(e)) : Mat(s, len, 1, std::move(e));
}

ExactnessVerdict check_E_impl(const Mat& a, bool row_side, const Limits& lim) {
  require_finite(a);
  const SemiringHandle& sh = a.semiring();
  const View v = fin::view(*sh);
  const IMat A = fin::to_imat(a);

  // Candidate vectors live on the same side as the span.
  const std::uint32_t cand_len = row_side ? A.n : A.m;
  const std::uint64_t cand_count = fin::pow_checked(v.size, cand_len, lim.vector_space);
  // Kernel pairs live on the opposite side.
  const std::uint64_t pair_count = fin::pow_checked(v.size, cand_len, lim.vector_space);

  const auto span_ranks = row_side ? fin::row_space(v, A, lim.span_multipliers)
                                   : fin::col_space(v, A, lim.span_multipliers);
  const auto block_of = kernel_blocks(v, A, row_side, pair_count);
  const std::uint32_t block_count = block_of.empty() ? 0 : *std::max_element(block_of.begin(), block_of.end()) + 1;

  ExactnessVerdict verdict;
  verdict.property = row_side ? Property::E1 : Property::E2;
  verdict.scope = {a.rows(), a.cols(), cand_count, "kernel-block separation", 0};

  std::vector<IdxVec> vecs(pair_count);
  for (std::uint64_t r = 0; r < pair_count; ++r) fin::unrank(r, v.size, cand_len, vecs[r]);

  IdxVec x;
  std::vector<std::int32_t> block_value(block_count);
  for (std::uint64_t xr = 0; xr < cand_count; ++xr) {
    if (fin::sorted_contains(span_ranks, xr)) continue;
    fin::unrank(xr, v.size, cand_len, x);
    std::fill(block_value.begin(), block_value.end(), -1);
    bool separated = false;
    for (std::uint64_t r = 0; r < pair_count && !separated; ++r) {
      const Idx val = dot(v, x, vecs[r]);
      std::int32_t& slot = block_value[block_of[r]];
      if (slot < 0)
        slot = val;
      else if (slot != val)
        separated = true;
    }
    if (!separated) {
      verdict.holds = false;
      Counterexample ce;
      ce.vector = vec_to_mat(sh, v, xr, cand_len, row_side);
      ce.note = "outside the span yet constant on every kernel block";
      verdict.counterexample = std::move(ce);
      return verdict;
    }
  }
  return verdict;
}

}  // namespace

ExactnessVerdict check_E1(const Mat& a, const Limits& lim) { return check_E_impl(a, true, lim); }

ExactnessVerdict check_E2(const Mat& a, const Limits& lim) { return check_E_impl(a, false, lim); }

namespace {

// Precomputed row-side data for F1 checks against many B.
struct F1Context {
  SemiringHandle sh;
  View v;
  IMat A;
  std::uint64_t vec_count = 0;                  // |S|^n
  std::vector<IdxVec> vecs;                     // all column vectors
  std::vector<std::vector<std::uint64_t>> ker;  // kernel blocks of row(A)
  std::vector<std::uint64_t> row_ranks;         // row(A) as sorted ranks
};

F1Context make_f1_context(const Mat& a, const Limits& lim) {
  require_finite(a);
  F1Context ctx;
  ctx.sh = a.semiring();
  ctx.v = fin::view(*ctx.sh);
  ctx.A = fin::to_imat(a);
  ctx.vec_count = fin::pow_checked(ctx.v.size, ctx.A.n, lim.vector_space);
  ctx.vecs.resize(ctx.vec_count);
  const auto block_of = kernel_blocks(ctx.v, ctx.A, true, ctx.vec_count);
  const std::uint32_t blocks = block_of.empty() ? 0 : *std::max_element(block_of.begin(), block_of.end()) + 1;
  ctx.ker.resize(blocks);
  for (std::uint64_t r = 0; r < ctx.vec_count; ++r) {
    fin::unrank(r, ctx.v.size, ctx.A.n, ctx.vecs[r]);
    ctx.ker[block_of[r]].push_back(r);
  }
  ctx.row_ranks = fin::row_space(ctx.v, ctx.A, lim.span_multipliers);
  return ctx;
}

// ker row(A) subset of ker row(B) implies row(B) subset of row(A).
bool f1_pair(const F1Context& ctx, const IMat& B) {
  IdxVec first_image;
  for (const auto& block : ctx.ker) {
    if (block.size() < 2) continue;
    first_image = fin::times_col(ctx.v, B, ctx.vecs[block.front()]);
    for (std::size_t i = 1; i < block.size(); ++i)
      if (fin::times_col(ctx.v, B, ctx.vecs[block[i]]) != first_image) return true;  // vacuous
  }
  // Antecedent holds; rows of B must all lie in row(A).
  IdxVec row(B.n);
  for (std::uint32_t i = 0; i < B.m; ++i) {
    for (std::uint32_t j = 0; j < B.n; ++j) row[j] = B.at(i, j);
    if (!fin::sorted_contains(ctx.row_ranks, fin::rank(ctx.v.size, row))) return false;
  }
  return true;
}

}  // namespace

bool check_F1_pair(const Mat& a, const Mat& b, const Limits& lim) {
  if (!(*a.semiring() == *b.semiring()))
    throw domain_error("matrices belong to different semirings");
  if (a.cols() != b.cols()) throw argument_error("matrices must have equal column counts");
  const F1Context ctx = make_f1_context(a, lim);
  return f1_pair(ctx, fin::to_imat(b));
}

ExactnessVerdict check_F1(const Mat& a, std::uint32_t row_bound, const Limits& lim) {
  if (row_bound == 0) throw argument_error("F1 row bound must be positive");
  const F1Context ctx = make_f1_context(a, lim);

  ExactnessVerdict verdict;
  verdict.property = Property::F1;
  verdict.scope = {a.rows(), a.cols(), 0, "exhaustive B enumeration", row_bound};

  IMat B;
  for (std::uint32_t p = 1; p <= row_bound; ++p) {
    const std::uint64_t count = fin::pow_checked(ctx.v.size, p * ctx.A.n, lim.matrix_search);
    B.m = p;
    B.n = ctx.A.n;
    for (std::uint64_t r = 0; r < count; ++r) {
      fin::unrank(r, ctx.v.size, p * ctx.A.n, B.a);
      ++verdict.scope.candidates;
      if (!f1_pair(ctx, B)) {
        verdict.holds = false;
        Counterexample ce;
        ce.matrix = fin::from_imat(ctx.sh, B);
        ce.note = "kernel inclusion holds but the row space is not contained";
        verdict.counterexample = std::move(ce);
        return verdict;
      }
    }
  }
  return verdict;
}

ExactnessVerdict check_G1(const Mat& a, const Limits& lim) {
  require_finite(a);
  const SemiringHandle& sh = a.semiring();
  const View v = fin::view(*sh);
  const IMat A = fin::to_imat(a);
  const std::uint64_t count = fin::pow_checked(v.size, A.n, lim.vector_space);

  const auto row_ranks = fin::row_space(v, A, lim.span_multipliers);
  const auto block_of = kernel_blocks(v, A, true, count);
  const std::uint32_t blocks = block_of.empty() ? 0 : *std::max_element(block_of.begin(), block_of.end()) + 1;

  std::vector<IdxVec> vecs(count);
  for (std::uint64_t r = 0; r < count; ++r) fin::unrank(r, v.size, A.n, vecs[r]);

  ExactnessVerdict verdict;
  verdict.property = Property::G1;
  verdict.scope = {a.rows(), a.cols(), count, "generator-determined functionals", 0};

  // A candidate w defines the right-linear functional A*v -> w*v exactly
  // when w*v is constant on kernel blocks; the functional is realised by
  // a row-space member iff w itself lies in row(A).
  IdxVec w;
  std::vector<std::int32_t> block_value(blocks);
  for (std::uint64_t wr = 0; wr < count; ++wr) {
    fin::unrank(wr, v.size, A.n, w);
    std::fill(block_value.begin(), block_value.end(), -1);
    bool well_defined = true;
    for (std::uint64_t r = 0; r < count && well_defined; ++r) {
      const Idx val = dot(v, w, vecs[r]);
      std::int32_t& slot = block_value[block_of[r]];
      if (slot < 0)
        slot = val;
      else if (slot != val)
        well_defined = false;
    }
    if (well_defined && !fin::sorted_contains(row_ranks, wr)) {
      verdict.holds = false;
      Counterexample ce;
      ce.vector = vec_to_mat(sh, v, wr, A.n, true);
      ce.note = "right-linear functional on col(A) with no realiser in row(A)";
      verdict.counterexample = std::move(ce);
      return verdict;
    }
  }
  return verdict;
}

ExactnessVerdict check_H1(const Mat& a, const Limits& lim) {
  require_finite(a);
  const SemiringHandle& sh = a.semiring();
  const View v = fin::view(*sh);
  const IMat A = fin::to_imat(a);

  // Full module of column vectors of length m.
  const std::uint64_t module_count = fin::pow_checked(v.size, A.m, lim.vector_space);
  // Total functions S^{m x 1} -> S; the doubly exponential part.
  const std::uint64_t total_functions =
      fin::pow_checked(v.size, std::uint32_t(module_count), lim.function_space);

  std::vector<IdxVec> module_vecs(module_count);
  for (std::uint64_t r = 0; r < module_count; ++r) fin::unrank(r, v.size, A.m, module_vecs[r]);

  // col(A) inside the module.
  const std::uint64_t v_count = fin::pow_checked(v.size, A.n, lim.vector_space);
  std::vector<std::uint64_t> col_ranks;
  {
    std::set<std::uint64_t> seen;
    IdxVec w;
    for (std::uint64_t r = 0; r < v_count; ++r) {
      fin::unrank(r, v.size, A.n, w);
      seen.insert(fin::rank(v.size, fin::times_col(v, A, w)));
    }
    col_ranks.assign(seen.begin(), seen.end());
  }
  std::unordered_map<std::uint64_t, std::uint32_t> col_pos;
  for (std::uint32_t i = 0; i < col_ranks.size(); ++i) col_pos.emplace(col_ranks[i], i);
  const std::uint32_t c = std::uint32_t(col_ranks.size());

  const std::uint64_t col_functions = fin::pow_checked(v.size, c, lim.function_space);

  auto linear_on = [&](const IdxVec& values, const std::vector<std::uint64_t>& domain_ranks,
                       auto&& position_of) {
    for (std::size_t yi = 0; yi < domain_ranks.size(); ++yi) {
      const IdxVec& y = module_vecs[domain_ranks[yi]];
      for (std::size_t zi = 0; zi < domain_ranks.size(); ++zi) {
        const IdxVec& z = module_vecs[domain_ranks[zi]];
        for (std::uint32_t sa = 0; sa < v.size; ++sa)
          for (std::uint32_t sb = 0; sb < v.size; ++sb) {
            const IdxVec comb = fin::vec_add(v, fin::vec_scale_right(v, y, Idx(sa)),
                                             fin::vec_scale_right(v, z, Idx(sb)));
            const auto pos = position_of(fin::rank(v.size, comb));
            const Idx want =
                v.plus(v.times(values[yi], Idx(sa)), v.times(values[zi], Idx(sb)));
            if (values[pos] != want) return false;
          }
      }
    }
    return true;
  };

  // Right-linear functionals on col(A).
  std::vector<IdxVec> col_linear;
  {
    IdxVec values;
    for (std::uint64_t fr = 0; fr < col_functions; ++fr) {
      fin::unrank(fr, v.size, c, values);
      if (linear_on(values, col_ranks, [&](std::uint64_t rank) {
            auto it = col_pos.find(rank);
            if (it == col_pos.end()) throw internal_error("column space not closed");
            return it->second;
          }))
        col_linear.push_back(values);
    }
  }

  // Restrictions of right-linear total functionals.
  std::set<IdxVec> restrictions;
  {
    std::vector<std::uint64_t> all_ranks(module_count);
    for (std::uint64_t r = 0; r < module_count; ++r) all_ranks[r] = r;
    IdxVec values;
    for (std::uint64_t fr = 0; fr < total_functions; ++fr) {
      fin::unrank(fr, v.size, std::uint32_t(module_count), values);
      if (!linear_on(values, all_ranks, [](std::uint64_t rank) { return rank; })) continue;
      IdxVec restricted(c);
      for (std::uint32_t i = 0; i < c; ++i) restricted[i] = values[col_ranks[i]];
      restrictions.insert(std::move(restricted));
    }
  }

  ExactnessVerdict verdict;
  verdict.property = Property::H1;
  verdict.scope = {a.rows(), a.cols(), total_functions, "total-function enumeration", 0};
  for (const auto& phi : col_linear) {
    if (restrictions.count(phi)) continue;
    verdict.holds = false;
    Counterexample ce;
    std::string desc;
    for (std::uint32_t i = 0; i < c; ++i) {
      if (i) desc += ", ";
      desc += "col#" + std::to_string(i) + "->" + sh->format(sh->element(phi[i]));
    }
    ce.note = "functional {" + desc + "} admits no right-linear extension";
    verdict.counterexample = std::move(ce);
    return verdict;
  }
  return verdict;
}

ExactnessReport exactness_report(const SemiringHandle& s, std::uint32_t max_m, std::uint32_t max_n,
                                 const std::vector<Property>& props, std::uint32_t f1_row_bound,
                                 const Limits& lim) {
  if (!s->finite()) throw unsupported_error("exactness reports require a finite semiring");
  if (max_m == 0 || max_n == 0) throw argument_error("matrix bounds must be positive");

  ExactnessReport report;
  report.semiring = s->spec_string();
  report.max_m = max_m;
  report.max_n = max_n;
  report.f1_row_bound = f1_row_bound;
  for (Property p : props) {
    if (p != Property::E1 && p != Property::E2 && p != Property::F1 && p != Property::G1 &&
        p != Property::H1)
      throw argument_error("exactness report supports properties e1, e2, f1, g1, h1");
    PropertySummary sum;
    sum.property = p;
    report.properties.push_back(std::move(sum));
  }

  const fin::View v = fin::view(*s);
  for (std::uint32_t m = 1; m <= max_m; ++m)
    for (std::uint32_t n = 1; n <= max_n; ++n) {
      const std::uint64_t count = fin::pow_checked(v.size, m * n, lim.matrix_search);
      fin::IMat A;
      A.m = m;
      A.n = n;
      for (std::uint64_t r = 0; r < count; ++r) {
        fin::unrank(r, v.size, m * n, A.a);
        const Mat a = fin::from_imat(s, A);
        std::vector<std::pair<Property, bool>> instance_verdicts;
        for (auto& sum : report.properties) {
          ExactnessVerdict verdict;
          try {
            switch (sum.property) {
              case Property::E1: verdict = check_E1(a, lim); break;
              case Property::E2: verdict = check_E2(a, lim); break;
              case Property::F1: verdict = check_F1(a, f1_row_bound, lim); break;
              case Property::G1: verdict = check_G1(a, lim); break;
              case Property::H1: verdict = check_H1(a, lim); break;
              default: throw internal_error("unreachable property");
            }
          } catch (const budget_error&) {
            ++sum.skipped;
            continue;
          }
          ++sum.matrices_checked;
          instance_verdicts.emplace_back(sum.property, verdict.holds);
          if (!verdict.holds && sum.holds_for_all) {
            sum.holds_for_all = false;
            sum.first_failing_matrix = a;
            sum.counterexample = verdict.counterexample;
          }
        }
        if (instance_verdicts.size() >= 2) {
          ++report.agreement_instances;
          for (std::size_t i = 1; i < instance_verdicts.size(); ++i)
            if (instance_verdicts[i].second != instance_verdicts[0].second)
              report.agreement_ok = false;
        }
      }
    }
  return report;
}

}  // namespace srl
