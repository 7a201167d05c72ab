#include "srl/semiring.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace srl {

namespace {

constexpr std::size_t kMaxTableSize = 1024;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return std::uint64_t((static_cast<unsigned __int128>(a) * b) % n);
}

bool is_rat(const Elem& a) { return std::holds_alternative<Rat>(a); }
bool is_inf(const Elem& a) { return std::holds_alternative<Inf>(a); }

const Rat& as_rat(const Elem& a) { return std::get<Rat>(a); }

}  // namespace

std::uint64_t Semiring::modulus() const {
  if (kind_ != Kind::zmod) throw unsupported_error("modulus() requires a zmod semiring");
  return n_;
}

bool Semiring::finite() const {
  return kind_ == Kind::boolean || kind_ == Kind::zmod || kind_ == Kind::table;
}

std::size_t Semiring::size() const {
  switch (kind_) {
    case Kind::boolean: return 2;
    case Kind::zmod: return n_;
    case Kind::table: return tspec_.names.size();
    default: throw unsupported_error("size() requires a finite semiring: " + spec_);
  }
}

bool Semiring::contains(const Elem& a) const {
  switch (kind_) {
    case Kind::boolean:
      return std::holds_alternative<bool>(a);
    case Kind::zmod:
      return std::holds_alternative<std::uint64_t>(a) && std::get<std::uint64_t>(a) < n_;
    case Kind::table:
      return std::holds_alternative<std::uint64_t>(a) &&
             std::get<std::uint64_t>(a) < tspec_.names.size();
    case Kind::tropical:
    case Kind::gmax:
      return is_rat(a);
    case Kind::tropical_complete:
      return is_rat(a) || is_inf(a);
  }
  return false;
}

void Semiring::require(const Elem& a) const {
  if (!contains(a)) throw domain_error("element does not belong to semiring " + spec_);
}

Elem Semiring::add(const Elem& a, const Elem& b) const {
  require(a);
  require(b);
  switch (kind_) {
    case Kind::boolean:
      return Elem(std::get<bool>(a) || std::get<bool>(b));
    case Kind::zmod:
      return Elem((std::get<std::uint64_t>(a) + std::get<std::uint64_t>(b)) % n_);
    case Kind::table: {
      const auto i = std::get<std::uint64_t>(a);
      const auto j = std::get<std::uint64_t>(b);
      return Elem(std::uint64_t(tspec_.add[i * tspec_.names.size() + j]));
    }
    case Kind::tropical:
    case Kind::gmax:
      return as_rat(a) < as_rat(b) ? b : a;
    case Kind::tropical_complete:
      return less(a, b) ? b : a;  // max in the extended order
  }
  throw internal_error("unreachable add");
}

Elem Semiring::mul(const Elem& a, const Elem& b) const {
  require(a);
  require(b);
  switch (kind_) {
    case Kind::boolean:
      return Elem(std::get<bool>(a) && std::get<bool>(b));
    case Kind::zmod:
      return Elem(mul_mod(std::get<std::uint64_t>(a), std::get<std::uint64_t>(b), n_));
    case Kind::table: {
      const auto i = std::get<std::uint64_t>(a);
      const auto j = std::get<std::uint64_t>(b);
      return Elem(std::uint64_t(tspec_.mul[i * tspec_.names.size() + j]));
    }
    case Kind::tropical:
    case Kind::gmax:
      return Elem(Rat(as_rat(a) + as_rat(b)));
    case Kind::tropical_complete: {
      // -inf absorbs everything; +inf absorbs everything except -inf.
      if ((is_inf(a) && std::get<Inf>(a) == Inf::neg) || (is_inf(b) && std::get<Inf>(b) == Inf::neg))
        return Elem(Inf::neg);
      if (is_inf(a) || is_inf(b)) return Elem(Inf::pos);
      return Elem(Rat(as_rat(a) + as_rat(b)));
    }
  }
  throw internal_error("unreachable mul");
}

bool Semiring::leq(const Elem& a, const Elem& b) const {
  if (!idempotent_) throw unsupported_error("induced order requires an idempotent semiring");
  return add(a, b) == b;
}

bool Semiring::less(const Elem& a, const Elem& b) const {
  require(a);
  require(b);
  switch (kind_) {
    case Kind::boolean:
      return !std::get<bool>(a) && std::get<bool>(b);
    case Kind::zmod:
    case Kind::table:
      return std::get<std::uint64_t>(a) < std::get<std::uint64_t>(b);
    case Kind::tropical:
    case Kind::gmax:
      return as_rat(a) < as_rat(b);
    case Kind::tropical_complete: {
      if (is_inf(a)) {
        if (std::get<Inf>(a) == Inf::neg) return !(is_inf(b) && std::get<Inf>(b) == Inf::neg);
        return false;  // +inf is greatest
      }
      if (is_inf(b)) return std::get<Inf>(b) == Inf::pos;
      return as_rat(a) < as_rat(b);
    }
  }
  throw internal_error("unreachable less");
}

std::pair<Elem, Elem> Semiring::local_identities(const std::vector<Elem>& L) const {
  if (L.empty()) throw argument_error("local identities require a non-empty subset");
  for (const auto& a : L) require(a);
  if (has_globals_) return {zero(), one()};
  // (Q, max, +): 1_L is the group identity, 0_L = min L - max L.
  const Elem* lo = &L.front();
  const Elem* hi = &L.front();
  for (const auto& a : L) {
    if (less(a, *lo)) lo = &a;
    if (less(*hi, a)) hi = &a;
  }
  return {Elem(Rat(as_rat(*lo) - as_rat(*hi))), Elem(Rat(0))};
}

std::vector<Elem> Semiring::enumerate() const {
  if (!finite()) throw unsupported_error("cannot enumerate infinite semiring " + spec_);
  std::vector<Elem> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(element(i));
  return out;
}

Elem Semiring::element(std::size_t index) const {
  if (!finite()) throw unsupported_error("element() requires a finite semiring");
  if (index >= size()) throw argument_error("element index out of range");
  if (kind_ == Kind::boolean) return Elem(index != 0);
  return Elem(std::uint64_t(index));
}

std::size_t Semiring::index_of(const Elem& a) const {
  require(a);
  if (!finite()) throw unsupported_error("index_of() requires a finite semiring");
  if (kind_ == Kind::boolean) return std::get<bool>(a) ? 1 : 0;
  return std::size_t(std::get<std::uint64_t>(a));
}

Elem Semiring::zero() const {
  switch (kind_) {
    case Kind::boolean: return Elem(false);
    case Kind::zmod: return Elem(std::uint64_t(0));
    case Kind::table: return Elem(std::uint64_t(tspec_.zero));
    case Kind::tropical_complete: return Elem(Inf::neg);
    default: throw unsupported_error("no global zero in " + spec_);
  }
}

Elem Semiring::one() const {
  switch (kind_) {
    case Kind::boolean: return Elem(true);
    case Kind::zmod: return Elem(std::uint64_t(1 % n_));
    case Kind::table: return Elem(std::uint64_t(tspec_.one));
    case Kind::tropical_complete: return Elem(Rat(0));
    default: throw unsupported_error("no global one in " + spec_);
  }
}

Elem Semiring::conj(const Elem& a) const {
  if (!anti_involutive_) throw unsupported_error("semiring " + spec_ + " has no involution");
  require(a);
  switch (kind_) {
    case Kind::boolean:
      return Elem(!std::get<bool>(a));
    case Kind::tropical:
    case Kind::gmax:
      return Elem(Rat(-as_rat(a)));
    case Kind::tropical_complete:
      if (is_inf(a)) return Elem(std::get<Inf>(a) == Inf::neg ? Inf::pos : Inf::neg);
      return Elem(Rat(-as_rat(a)));
    case Kind::table:
      return Elem(std::uint64_t(tspec_.involution[std::get<std::uint64_t>(a)]));
    default:
      throw internal_error("unreachable conj");
  }
}

std::string Semiring::format(const Elem& a) const {
  require(a);
  switch (kind_) {
    case Kind::boolean:
      return std::get<bool>(a) ? "T" : "F";
    case Kind::zmod:
      return std::to_string(std::get<std::uint64_t>(a));
    case Kind::table:
      return tspec_.names[std::get<std::uint64_t>(a)];
    case Kind::tropical:
    case Kind::gmax:
      return format_rational(as_rat(a));
    case Kind::tropical_complete:
      if (is_inf(a)) return std::get<Inf>(a) == Inf::neg ? "-inf" : "inf";
      return format_rational(as_rat(a));
  }
  throw internal_error("unreachable format");
}

Elem Semiring::parse(std::string_view lexeme) const {
  switch (kind_) {
    case Kind::boolean:
      if (lexeme == "T") return Elem(true);
      if (lexeme == "F") return Elem(false);
      throw argument_error("bad boolean lexeme '" + std::string(lexeme) + "' (want T or F)");
    case Kind::zmod: {
      for (char c : lexeme)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw argument_error("bad residue lexeme '" + std::string(lexeme) + "'");
      if (lexeme.empty()) throw argument_error("empty residue lexeme");
      std::uint64_t v = 0;
      for (char c : lexeme) {
        v = v * 10 + std::uint64_t(c - '0');
        if (v >= (std::uint64_t(1) << 62)) throw argument_error("residue lexeme too large");
      }
      return Elem(v % n_);
    }
    case Kind::table: {
      for (std::size_t i = 0; i < tspec_.names.size(); ++i)
        if (tspec_.names[i] == lexeme) return Elem(std::uint64_t(i));
      throw argument_error("unknown table element '" + std::string(lexeme) + "'");
    }
    case Kind::tropical:
    case Kind::gmax:
      return Elem(parse_rational(lexeme));
    case Kind::tropical_complete:
      if (lexeme == "-inf") return Elem(Inf::neg);
      if (lexeme == "inf" || lexeme == "+inf") return Elem(Inf::pos);
      return Elem(parse_rational(lexeme));
  }
  throw internal_error("unreachable parse");
}

const FiniteTables& Semiring::tables() const {
  if (!finite()) throw unsupported_error("operation tables require a finite semiring");
  if (tables_.size == 0)
    throw budget_error("operation tables unavailable for |S| > " + std::to_string(kMaxTableSize));
  return tables_;
}

const TableSpec& Semiring::table_spec() const {
  if (kind_ != Kind::table) throw unsupported_error("table_spec() requires a table semiring");
  return tspec_;
}

bool Semiring::operator==(const Semiring& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::zmod: return n_ == other.n_;
    case Kind::table:
      return tspec_.names == other.tspec_.names && tspec_.add == other.tspec_.add &&
             tspec_.mul == other.tspec_.mul && tspec_.zero == other.tspec_.zero &&
             tspec_.one == other.tspec_.one && tspec_.involution == other.tspec_.involution;
    default: return true;
  }
}

SemiringHandle Semiring::boolean() {
  auto s = std::shared_ptr<Semiring>(new Semiring());
  s->kind_ = Kind::boolean;
  s->spec_ = "boolean";
  s->commutative_ = true;
  s->idempotent_ = true;
  s->has_globals_ = true;
  s->anti_involutive_ = true;
  s->tables_.size = 2;
  s->tables_.add = {0, 1, 1, 1};
  s->tables_.mul = {0, 0, 0, 1};
  return s;
}

SemiringHandle Semiring::zmod(std::uint64_t n) {
  if (n == 0) throw argument_error("zmod modulus must be positive");
  auto s = std::shared_ptr<Semiring>(new Semiring());
  s->kind_ = Kind::zmod;
  s->n_ = n;
  s->spec_ = "zmod " + std::to_string(n);
  s->commutative_ = true;
  s->idempotent_ = (n == 1);
  s->has_globals_ = true;
  s->anti_involutive_ = false;
  if (n <= kMaxTableSize) {
    s->tables_.size = std::uint32_t(n);
    s->tables_.add.resize(n * n);
    s->tables_.mul.resize(n * n);
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = 0; j < n; ++j) {
        s->tables_.add[i * n + j] = std::uint16_t((i + j) % n);
        s->tables_.mul[i * n + j] = std::uint16_t(mul_mod(i, j, n));
      }
  }
  return s;
}

SemiringHandle Semiring::tropical() {
  auto s = std::shared_ptr<Semiring>(new Semiring());
  s->kind_ = Kind::tropical;
  s->spec_ = "tropical";
  s->commutative_ = true;
  s->idempotent_ = true;
  s->has_globals_ = false;
  s->anti_involutive_ = true;
  return s;
}

SemiringHandle Semiring::tropical_complete() {
  auto s = std::shared_ptr<Semiring>(new Semiring());
  s->kind_ = Kind::tropical_complete;
  s->spec_ = "tropical-complete";
  s->commutative_ = true;
  s->idempotent_ = true;
  s->has_globals_ = true;
  s->anti_involutive_ = true;
  return s;
}

SemiringHandle Semiring::gmax() {
  auto s = std::shared_ptr<Semiring>(new Semiring());
  s->kind_ = Kind::gmax;
  s->spec_ = "gmax";
  s->commutative_ = true;
  s->idempotent_ = true;
  s->has_globals_ = false;
  s->anti_involutive_ = true;
  return s;
}

SemiringHandle Semiring::table(TableSpec spec) {
  const std::size_t k = spec.names.size();
  if (k == 0) throw argument_error("table semiring needs at least one element");
  if (k > kMaxTableSize) throw argument_error("table semiring too large");
  if (spec.add.size() != k * k || spec.mul.size() != k * k)
    throw argument_error("table semiring: operation tables must be size*size");
  for (auto v : spec.add)
    if (v >= k) throw argument_error("table semiring: addition entry out of range");
  for (auto v : spec.mul)
    if (v >= k) throw argument_error("table semiring: multiplication entry out of range");
  if (spec.zero >= k || spec.one >= k)
    throw argument_error("table semiring: zero/one out of range");
  if (!spec.involution.empty()) {
    if (spec.involution.size() != k)
      throw argument_error("table semiring: involution must map every element");
    for (auto v : spec.involution)
      if (v >= k) throw argument_error("table semiring: involution entry out of range");
  }
  {
    std::set<std::string> uniq(spec.names.begin(), spec.names.end());
    if (uniq.size() != k) throw argument_error("table semiring: duplicate element names");
  }
  if (spec.label.empty()) spec.label = "table";

  auto s = std::shared_ptr<Semiring>(new Semiring());
  s->kind_ = Kind::table;
  s->spec_ = spec.label;
  s->has_globals_ = true;
  s->anti_involutive_ = !spec.involution.empty();
  s->commutative_ = true;
  s->idempotent_ = true;
  for (std::size_t i = 0; i < k && (s->commutative_ || s->idempotent_); ++i) {
    if (spec.add[i * k + i] != i) s->idempotent_ = false;
    for (std::size_t j = 0; j < k; ++j)
      if (spec.mul[i * k + j] != spec.mul[j * k + i]) {
        s->commutative_ = false;
        break;
      }
  }
  s->tables_.size = std::uint32_t(k);
  s->tables_.add = spec.add;
  s->tables_.mul = spec.mul;
  s->tspec_ = std::move(spec);
  return s;
}

SemiringHandle Semiring::parse_spec(std::string_view spec, const std::string& base_dir) {
  std::istringstream in{std::string(spec)};
  std::string word;
  if (!(in >> word)) throw argument_error("empty semiring spec");
  if (word == "boolean") return boolean();
  if (word == "tropical") return tropical();
  if (word == "tropical-complete") return tropical_complete();
  if (word == "gmax") return gmax();
  if (word == "zmod") {
    std::uint64_t n = 0;
    if (!(in >> n) || n == 0)
      throw argument_error("zmod spec needs a positive modulus, got '" + std::string(spec) + "'");
    return zmod(n);
  }
  if (word == "table") {
    std::string path;
    if (!(in >> path)) throw argument_error("table spec needs a file path");
    std::string full = path;
    if (!base_dir.empty() && !path.empty() && path[0] != '/') full = base_dir + "/" + path;
    std::ifstream f(full);
    if (!f) throw argument_error("cannot open table file '" + full + "'");
    auto ts = load_table_file(f, "table " + path);
    return table(std::move(ts));
  }
  throw argument_error("unknown semiring spec '" + std::string(spec) + "'");
}

TableSpec Semiring::load_table_file(std::istream& in, const std::string& label) {
  std::vector<std::vector<std::string>> rows;  // tokenized non-empty lines
  std::vector<std::size_t> line_no;
  std::string line;
  std::size_t ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    rows.push_back(std::move(toks));
    line_no.push_back(ln);
  }
  if (rows.empty()) throw parse_error("empty table file", 1, 1);

  TableSpec spec;
  spec.label = label;
  spec.names = rows[0];
  const std::size_t k = spec.names.size();
  std::unordered_map<std::string, std::uint16_t> idx;
  for (std::size_t i = 0; i < k; ++i) {
    if (!idx.emplace(spec.names[i], std::uint16_t(i)).second)
      throw parse_error("duplicate element name '" + spec.names[i] + "'", line_no[0], i + 1);
  }
  const std::size_t need = 1 + 2 * k + 2;
  if (rows.size() < need)
    throw parse_error("table file truncated: expected " + std::to_string(need) + " content lines",
                      line_no.back(), 1);

  auto read_block = [&](std::size_t first_row, std::vector<std::uint16_t>& out, const char* what) {
    out.resize(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& r = rows[first_row + i];
      if (r.size() != k)
        throw parse_error(std::string(what) + " table row has " + std::to_string(r.size()) +
                              " entries, expected " + std::to_string(k),
                          line_no[first_row + i], 1);
      for (std::size_t j = 0; j < k; ++j) {
        auto it = idx.find(r[j]);
        if (it == idx.end())
          throw parse_error("unknown element '" + r[j] + "' in " + what + " table",
                            line_no[first_row + i], j + 1);
        out[i * k + j] = it->second;
      }
    }
  };
  read_block(1, spec.add, "addition");
  read_block(1 + k, spec.mul, "multiplication");

  for (std::size_t r = 1 + 2 * k; r < rows.size(); ++r) {
    const auto& toks = rows[r];
    if (toks.size() != 2 || (toks[0] != "zero" && toks[0] != "one"))
      throw parse_error("expected 'zero <name>' or 'one <name>'", line_no[r], 1);
    auto it = idx.find(toks[1]);
    if (it == idx.end())
      throw parse_error("unknown element '" + toks[1] + "'", line_no[r], 2);
    (toks[0] == "zero" ? spec.zero : spec.one) = it->second;
  }
  return spec;
}

namespace {

void check_triple(const Semiring& s, const Elem& a, const Elem& b, const Elem& c,
                  ValidationReport& rep) {
  auto fail = [&](const char* law, std::initializer_list<const Elem*> w) {
    LawViolation v;
    v.law = law;
    for (const Elem* e : w) v.witness.push_back(s.format(*e));
    rep.violations.push_back(std::move(v));
    rep.ok = false;
  };
  if (s.add(s.add(a, b), c) != s.add(a, s.add(b, c))) fail("add-associative", {&a, &b, &c});
  if (s.add(a, b) != s.add(b, a)) fail("add-commutative", {&a, &b});
  if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c))) fail("mul-associative", {&a, &b, &c});
  if (s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c)))
    fail("left-distributive", {&a, &b, &c});
  if (s.mul(s.add(a, b), c) != s.add(s.mul(a, c), s.mul(b, c)))
    fail("right-distributive", {&a, &b, &c});
  if (s.idempotent() && s.add(a, a) != a) fail("idempotent-addition", {&a});
  rep.checks += 6;
}

void check_local(const Semiring& s, const std::vector<Elem>& L, ValidationReport& rep) {
  const auto [z, o] = s.local_identities(L);
  for (const auto& a : L)
    for (const auto& b : L) {
      bool ok = s.add(a, s.mul(z, b)) == a && s.mul(o, a) == a && s.add(a, s.mul(b, z)) == a &&
                s.mul(a, o) == a;
      ++rep.checks;
      if (!ok) {
        rep.ok = false;
        rep.violations.push_back(
            {"local-identities", {s.format(a), s.format(b), s.format(z), s.format(o)}});
        return;
      }
    }
}

}  // namespace

ValidationReport Semiring::validate(const ValidationOptions& opts) const {
  ValidationReport rep;
  constexpr std::size_t kMaxViolations = 16;
  if (finite()) {
    rep.exhaustive = true;
    const auto elems = enumerate();
    const std::size_t k = elems.size();
    for (std::size_t i = 0; i < k && rep.violations.size() < kMaxViolations; ++i)
      for (std::size_t j = 0; j < k && rep.violations.size() < kMaxViolations; ++j)
        for (std::size_t l = 0; l < k && rep.violations.size() < kMaxViolations; ++l)
          check_triple(*this, elems[i], elems[j], elems[l], rep);
    // All non-empty subsets of size <= max_local_subset.
    const std::size_t cap = std::min<std::size_t>(opts.max_local_subset, 3);
    for (std::size_t i = 0; i < k && rep.violations.size() < kMaxViolations; ++i) {
      check_local(*this, {elems[i]}, rep);
      if (cap < 2) continue;
      for (std::size_t j = i + 1; j < k && rep.violations.size() < kMaxViolations; ++j) {
        check_local(*this, {elems[i], elems[j]}, rep);
        if (cap < 3) continue;
        for (std::size_t l = j + 1; l < k && rep.violations.size() < kMaxViolations; ++l)
          check_local(*this, {elems[i], elems[j], elems[l]}, rep);
      }
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    for (std::uint64_t t = 0; t < opts.samples && rep.violations.size() < kMaxViolations; ++t) {
      const Elem a = random_element(*this, rng);
      const Elem b = random_element(*this, rng);
      const Elem c = random_element(*this, rng);
      check_triple(*this, a, b, c, rep);
      std::vector<Elem> L{a};
      if (t % 3 != 0) L.push_back(b);
      if (t % 3 == 2) L.push_back(c);
      check_local(*this, L, rep);
    }
  }
  return rep;
}

Elem random_element(const Semiring& s, std::mt19937_64& rng) {
  switch (s.kind()) {
    case Kind::boolean:
    case Kind::zmod:
    case Kind::table: {
      std::uniform_int_distribution<std::size_t> d(0, s.size() - 1);
      return s.element(d(rng));
    }
    case Kind::tropical:
    case Kind::gmax: {
      std::uniform_int_distribution<int> num(-20, 20);
      std::uniform_int_distribution<int> den(1, 10);
      return Elem(Rat(num(rng), den(rng)));
    }
    case Kind::tropical_complete: {
      std::uniform_int_distribution<int> pick(0, 7);
      const int p = pick(rng);
      if (p == 0) return Elem(Inf::neg);
      if (p == 1) return Elem(Inf::pos);
      std::uniform_int_distribution<int> num(-20, 20);
      std::uniform_int_distribution<int> den(1, 10);
      return Elem(Rat(num(rng), den(rng)));
    }
  }
  throw internal_error("unreachable random_element");
}

}  // namespace srl
