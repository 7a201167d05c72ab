#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "srl/errors.hpp"
#include "srl/numeric.hpp"

namespace srl {

enum class Kind {
  boolean,
  zmod,
  table,
  tropical,            // (Q, max, +)
  tropical_complete,   // Q with -inf/+inf adjoined
  gmax,                // (Q, max, +) presented as an ordered group
};

enum class Inf { neg, pos };

// A scalar. Which alternative is meaningful depends on the owning
// semiring: bool for boolean, an index/residue for table and zmod kinds,
// Rat for the tropical kinds, Inf only for tropical_complete.
using Elem = std::variant<bool, std::uint64_t, Rat, Inf>;

class Semiring;
using SemiringHandle = std::shared_ptr<const Semiring>;

// Descriptor for a finite semiring given by explicit operation tables.
// Tables are size*size, row-major; construction checks shapes and name
// uniqueness but not the semiring axioms (validate() does that).
struct TableSpec {
  std::string label;  // used in reports; defaults to "table"
  std::vector<std::string> names;
  std::vector<std::uint16_t> add;
  std::vector<std::uint16_t> mul;
  std::uint16_t zero = 0;
  std::uint16_t one = 0;
  // Optional involutive anti-isomorphism, as an index map. Empty = none.
  std::vector<std::uint16_t> involution;
};

// Operation tables for finite kinds, used by the enumeration-heavy
// algorithms. Entries are element indices in canonical order.
struct FiniteTables {
  std::uint32_t size = 0;
  std::vector<std::uint16_t> add;
  std::vector<std::uint16_t> mul;

  std::uint16_t plus(std::uint16_t a, std::uint16_t b) const { return add[std::size_t(a) * size + b]; }
  std::uint16_t times(std::uint16_t a, std::uint16_t b) const { return mul[std::size_t(a) * size + b]; }
};

struct ValidationOptions {
  std::uint64_t samples = 1000;  // triples per law for infinite kinds
  std::uint64_t seed = 0;
  std::size_t max_local_subset = 3;
};

struct LawViolation {
  std::string law;
  std::vector<std::string> witness;  // formatted elements
};

struct ValidationReport {
  bool ok = true;
  bool exhaustive = false;
  std::uint64_t checks = 0;
  std::vector<LawViolation> violations;
};

class Semiring {
 public:
  Kind kind() const { return kind_; }
  // The one-line spec string this semiring parses from / prints as.
  const std::string& spec_string() const { return spec_; }

  std::uint64_t modulus() const;  // zmod only

  bool commutative() const { return commutative_; }
  bool idempotent() const { return idempotent_; }
  bool has_globals() const { return has_globals_; }
  bool anti_involutive() const { return anti_involutive_; }

  bool finite() const;
  std::size_t size() const;  // finite kinds only

  bool contains(const Elem& a) const;
  void require(const Elem& a) const;  // domain_error if not contained

  Elem add(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;

  // a <= b in the induced order a + b = b. Idempotent kinds only.
  bool leq(const Elem& a, const Elem& b) const;
  // Canonical (enumeration/report) order.
  bool less(const Elem& a, const Elem& b) const;

  // (0_L, 1_L) for a non-empty L. Kinds with global identities always
  // return the globals.
  std::pair<Elem, Elem> local_identities(const std::vector<Elem>& L) const;

  std::vector<Elem> enumerate() const;  // finite kinds only
  Elem element(std::size_t index) const;
  std::size_t index_of(const Elem& a) const;

  Elem zero() const;  // kinds with global identities only
  Elem one() const;

  Elem conj(const Elem& a) const;  // anti-involutive kinds only

  std::string format(const Elem& a) const;
  Elem parse(std::string_view lexeme) const;

  const FiniteTables& tables() const;  // finite kinds of size <= 1024
  const TableSpec& table_spec() const;  // table kind only

  ValidationReport validate(const ValidationOptions& opts = {}) const;

  bool operator==(const Semiring& other) const;

  static SemiringHandle boolean();
  static SemiringHandle zmod(std::uint64_t n);
  static SemiringHandle tropical();
  static SemiringHandle tropical_complete();
  static SemiringHandle gmax();
  static SemiringHandle table(TableSpec spec);

  // One-line format: boolean | zmod n | tropical | tropical-complete |
  // gmax | table <path>. Table paths are resolved against base_dir.
  static SemiringHandle parse_spec(std::string_view spec, const std::string& base_dir = "");

  static TableSpec load_table_file(std::istream& in, const std::string& label = "table");

 private:
  Semiring() = default;

  Kind kind_ = Kind::boolean;
  std::string spec_;
  std::uint64_t n_ = 0;  // zmod modulus
  TableSpec tspec_;      // table kind
  FiniteTables tables_;  // finite kinds, size <= 1024
  bool commutative_ = true;
  bool idempotent_ = false;
  bool has_globals_ = true;
  bool anti_involutive_ = false;
};

// Uniform draw for finite kinds; small random rationals (and occasional
// infinities) for the tropical kinds.
Elem random_element(const Semiring& s, std::mt19937_64& rng);

}  // namespace srl
