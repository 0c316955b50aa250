#pragma once

// Integer partitions, Young-diagram hooks, beta-sets and e-cores.
//
// All cell indices in this interface are 1-based: (i, j) is the cell in row i
// and column j of the Young diagram, and (1,1) is the top-left corner.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gblock {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A weakly decreasing sequence of positive integers. Immutable once built.
class Partition {
 public:
  using Part = std::int32_t;

  Partition() = default;
  // Validates; throws std::invalid_argument on non-positive or increasing parts.
  explicit Partition(std::vector<Part> parts);
  Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}

  // Sorts and drops zeros before validating. Negative parts still throw.
  static Partition from_unsorted(std::vector<Part> parts);

  std::span<const Part> parts() const { return parts_; }
  const std::vector<Part>& vec() const { return parts_; }
  int size() const { return n_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  // lambda_i with lambda_i = 0 beyond the last part; i is 1-based.
  Part operator[](std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

  bool contains_cell(std::size_t i, std::size_t j) const {
    return i >= 1 && j >= 1 && static_cast<std::size_t>((*this)[i]) >= j;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic on parts (then size); reverse of the canonical order.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<Part> parts_;
  int n_ = 0;
};

// Canonical (enumeration) order: reverse-lexicographic, so (n) comes before (1^n).
struct CanonicalLess {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

struct Hook {
  std::size_t row = 0;
  std::size_t col = 0;
  int arm = 0;
  int leg = 0;
  int length = 0;
};

struct HookRemoval {
  Partition result;
  int leg = 0;
  friend bool operator==(const HookRemoval&, const HookRemoval&) = default;
};

// A finite set of distinct non-negative bead positions, stored descending.
class BetaSet {
 public:
  BetaSet() = default;
  // Throws std::invalid_argument on negative or repeated beads.
  explicit BetaSet(std::vector<std::int64_t> beads);

  std::span<const std::int64_t> beads() const { return beads_; }
  std::size_t bead_count() const { return beads_.size(); }
  bool contains(std::int64_t x) const;

  friend bool operator==(const BetaSet&, const BetaSet&) = default;

 private:
  std::vector<std::int64_t> beads_;
};

// ---- Text form -------------------------------------------------------------

// Grammar: "-" | item ("," item)*, item := INT | INT "^" INT. Whitespace is
// ignored; parts may be given in any order and are sorted.
Partition parse_partition(std::string_view text);
// Descending parts, exponent notation for runs of three or more, "-" for ().
std::string render(const Partition& p);
// Parenthesised human form, e.g. "(2,2,2,1)" or "()".
std::string render_tuple(const Partition& p);

// ---- Diagram geometry ------------------------------------------------------

Partition conjugate(const Partition& p);
Hook hook_at(const Partition& p, std::size_t i, std::size_t j);
int hook_length(const Partition& p, std::size_t i, std::size_t j);
// Every hook of p, row by row.
std::vector<Hook> all_hooks(const Partition& p);
// (h_{1,1}, ..., h_{k,k}) for the largest k with (k,k) a cell.
std::vector<int> diagonal_hooks(const Partition& p);

// Removes the rim hook attached to cell (i,j) by walking the rim from (i, p_i)
// down to (p'_j, j). Returns the remaining partition and the leg length.
HookRemoval remove_hook(const Partition& p, std::size_t i, std::size_t j);
// Every way of removing one rim hook of length L.
std::vector<HookRemoval> remove_hooks_of_length(const Partition& p, int length);
// Every way of adding one rim hook of length L, via bead moves on a beta-set.
// Results are distinct and in canonical order.
std::vector<HookRemoval> add_hooks_of_length(const Partition& p, int length);

// ---- Beta-sets and cores ---------------------------------------------------

BetaSet beta_set(const Partition& p, std::size_t bead_count);
Partition partition_from_beta_set(const BetaSet& x);

// e_core uses the abacus: beads on each runner slide to the lowest free
// positions. e = 1 is accepted and always yields ().
Partition e_core(const Partition& p, int e);
int e_weight(const Partition& p, int e);
bool is_e_core(const Partition& p, int e);
bool is_e_class_regular(const Partition& p, int e);

// ---- Enumeration and order -------------------------------------------------

// All partitions of n in canonical (reverse-lexicographic) order.
std::vector<Partition> partitions_of(int n);
// Calls visit for each partition of n in canonical order without materialising.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);
std::uint64_t partition_count(int n);

// a <= b in the dominance order. Throws std::invalid_argument when |a| != |b|.
bool dominance_leq(const Partition& a, const Partition& b);

}  // namespace gblock
