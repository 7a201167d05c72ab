#include "srl/matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "srl/errors.hpp"
#include "srl/fin.hpp"

namespace srl {

namespace {

void require_same_semiring(const Mat& a, const Mat& b) {
  if (!(*a.semiring() == *b.semiring()))
    throw domain_error("matrices belong to different semirings");
}

}  // namespace

Mat::Mat(SemiringHandle s, std::uint32_t m, std::uint32_t n, std::vector<Elem> entries)
    : s_(std::move(s)), m_(m), n_(n), e_(std::move(entries)) {
  if (m_ == 0 || n_ == 0) throw argument_error("matrix dimensions must be positive");
  if (e_.size() != std::size_t(m_) * n_)
    throw shape_error("matrix entry count does not match shape");
  for (const auto& e : e_) s_->require(e);
}

Mat Mat::filled(SemiringHandle s, std::uint32_t m, std::uint32_t n, const Elem& value) {
  std::vector<Elem> e(std::size_t(m) * n, value);
  return Mat(std::move(s), m, n, std::move(e));
}

Mat Mat::row(std::uint32_t i) const {
  std::vector<Elem> e(e_.begin() + std::size_t(i) * n_, e_.begin() + std::size_t(i + 1) * n_);
  return Mat(s_, 1, n_, std::move(e));
}

Mat Mat::col(std::uint32_t j) const {
  std::vector<Elem> e;
  e.reserve(m_);
  for (std::uint32_t i = 0; i < m_; ++i) e.push_back((*this)(i, j));
  return Mat(s_, m_, 1, std::move(e));
}

Mat Mat::transpose() const {
  std::vector<Elem> e(e_.size());
  for (std::uint32_t i = 0; i < m_; ++i)
    for (std::uint32_t j = 0; j < n_; ++j) e[std::size_t(j) * m_ + i] = (*this)(i, j);
  return Mat(s_, n_, m_, std::move(e));
}

bool Mat::operator==(const Mat& other) const {
  return *s_ == *other.s_ && m_ == other.m_ && n_ == other.n_ && e_ == other.e_;
}

Mat mat_add(const Mat& a, const Mat& b) {
  require_same_semiring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw shape_error("matrix addition requires equal shapes");
  const Semiring& s = *a.semiring();
  std::vector<Elem> e;
  e.reserve(a.entries().size());
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    e.push_back(s.add(a.entries()[i], b.entries()[i]));
  return Mat(a.semiring(), a.rows(), a.cols(), std::move(e));
}

Mat mat_mul(const Mat& a, const Mat& b) {
  require_same_semiring(a, b);
  if (a.cols() != b.rows())
    throw shape_error("matrix product shape mismatch: " + std::to_string(a.cols()) + " vs " +
                      std::to_string(b.rows()));
  const Semiring& s = *a.semiring();
  std::vector<Elem> e;
  e.reserve(std::size_t(a.rows()) * b.cols());
  for (std::uint32_t i = 0; i < a.rows(); ++i)
    for (std::uint32_t j = 0; j < b.cols(); ++j) {
      Elem acc = s.mul(a(i, 0), b(0, j));
      for (std::uint32_t k = 1; k < a.cols(); ++k)
        acc = s.add(acc, s.mul(a(i, k), b(k, j)));
      e.push_back(std::move(acc));
    }
  return Mat(a.semiring(), a.rows(), b.cols(), std::move(e));
}

bool mat_leq(const Mat& a, const Mat& b) {
  require_same_semiring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw shape_error("entrywise order requires equal shapes");
  const Semiring& s = *a.semiring();
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    if (!s.leq(a.entries()[i], b.entries()[i])) return false;
  return true;
}

Mat stack_rows(const Mat& a, const Mat& b) {
  require_same_semiring(a, b);
  if (a.cols() != b.cols()) throw shape_error("stacking requires equal column counts");
  std::vector<Elem> e = a.entries();
  e.insert(e.end(), b.entries().begin(), b.entries().end());
  return Mat(a.semiring(), a.rows() + b.rows(), a.cols(), std::move(e));
}

bool canonical_less(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  const Semiring& s = *a.semiring();
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    if (s.less(a.entries()[i], b.entries()[i])) return true;
    if (s.less(b.entries()[i], a.entries()[i])) return false;
  }
  return false;
}

std::vector<Mat> enumerate_span(const Span& span, const Limits& lim) {
  const SemiringHandle& sh = span.gen.semiring();
  if (!sh->finite())
    throw unsupported_error("span enumeration requires a finite semiring");
  const fin::View v = fin::view(*sh);
  const fin::IMat A = fin::to_imat(span.gen);
  const auto ranks = span.side == Side::row ? fin::row_space(v, A, lim.span_multipliers)
                                            : fin::col_space(v, A, lim.span_multipliers);
  const std::uint32_t len = span.side == Side::row ? A.n : A.m;
  std::vector<Mat> out;
  out.reserve(ranks.size());
  fin::IdxVec digits;
  for (auto r : ranks) {
    fin::unrank(r, v.size, len, digits);
    std::vector<Elem> e;
    e.reserve(len);
    for (auto d : digits) e.push_back(sh->element(d));
    out.push_back(span.side == Side::row ? Mat(sh, 1, len, std::move(e))
                                         : Mat(sh, len, 1, std::move(e)));
  }
  return out;
}

Mat read_matrix(std::istream& in, SemiringHandle s) {
  std::string line;
  std::size_t ln = 0;
  auto next_line = [&]() -> std::string* {
    while (std::getline(in, line)) {
      ++ln;
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) return &line;
    }
    return nullptr;
  };
  if (!next_line()) throw parse_error("missing matrix header line 'm n'", 1, 1);
  std::uint32_t m = 0, n = 0;
  {
    std::istringstream hs(line);
    if (!(hs >> m >> n) || m == 0 || n == 0)
      throw parse_error("matrix header must be two positive integers", ln, 1);
    std::string extra;
    if (hs >> extra) throw parse_error("unexpected token '" + extra + "' after header", ln, 1);
  }
  std::vector<Elem> entries;
  entries.reserve(std::size_t(m) * n);
  for (std::uint32_t i = 0; i < m; ++i) {
    if (!next_line())
      throw parse_error("matrix truncated: expected " + std::to_string(m) + " rows", ln + 1, 1);
    std::istringstream rs(line);
    std::string lexeme;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (!(rs >> lexeme))
        throw parse_error("row has fewer than " + std::to_string(n) + " entries", ln, j + 1);
      try {
        entries.push_back(s->parse(lexeme));
      } catch (const argument_error& e) {
        throw parse_error(e.what(), ln, j + 1);
      }
    }
    std::string extra;
    if (rs >> extra)
      throw parse_error("row has more than " + std::to_string(n) + " entries", ln, n + 1);
  }
  return Mat(std::move(s), m, n, std::move(entries));
}

void write_matrix(std::ostream& out, const Mat& a) {
  out << a.rows() << " " << a.cols() << "\n";
  const Semiring& s = *a.semiring();
  for (std::uint32_t i = 0; i < a.rows(); ++i) {
    for (std::uint32_t j = 0; j < a.cols(); ++j) {
      if (j) out << " ";
      out << s.format(a(i, j));
    }
    out << "\n";
  }
}

std::string format_matrix(const Mat& a) {
  std::ostringstream os;
  write_matrix(os, a);
  return os.str();
}

Mat parse_vector(SemiringHandle s, std::string_view text, Side side) {
  std::istringstream in{std::string(text)};
  std::string lexeme;
  std::vector<Elem> entries;
  while (in >> lexeme) entries.push_back(s->parse(lexeme));
  if (entries.empty()) throw argument_error("empty vector");
  const auto k = std::uint32_t(entries.size());
  return side == Side::row ? Mat(std::move(s), 1, k, std::move(entries))
                           : Mat(std::move(s), k, 1, std::move(entries));
}

Mat make_mat(SemiringHandle s, std::uint32_t m, std::uint32_t n, std::string_view lexemes) {
  std::istringstream in{std::string(lexemes)};
  std::string lexeme;
  std::vector<Elem> entries;
  while (in >> lexeme) entries.push_back(s->parse(lexeme));
  if (entries.size() != std::size_t(m) * n)
    throw shape_error("make_mat: expected " + std::to_string(std::size_t(m) * n) + " lexemes, got " +
                      std::to_string(entries.size()));
  return Mat(std::move(s), m, n, std::move(entries));
}

Mat random_matrix(SemiringHandle s, std::uint32_t m, std::uint32_t n, std::mt19937_64& rng) {
  std::vector<Elem> e;
  e.reserve(std::size_t(m) * n);
  for (std::size_t i = 0; i < std::size_t(m) * n; ++i) e.push_back(random_element(*s, rng));
  return Mat(std::move(s), m, n, std::move(e));
}

}  // namespace srl
