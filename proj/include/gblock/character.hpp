#pragma once

// Irreducible characters of symmetric groups, evaluated exactly with the
// Murnaghan-Nakayama rule, and the signed hook-addition virtual characters
// built on top of them.

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "gblock/checked.hpp"
#include "gblock/partition.hpp"

namespace gblock {

// A partition read as a conjugacy-class label: the cycle lengths of a
// permutation. Kept distinct from Partition so character and class arguments
// cannot be swapped silently.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(Partition cycles) : cycles_(std::move(cycles)) {}

  const Partition& partition() const { return cycles_; }
  int size() const { return cycles_.size(); }
  bool has_part(int length) const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;

 private:
  Partition cycles_;
};

enum class PartOrder { Descending, Ascending };

struct EngineOptions {
  bool use_cache = true;
  // Which class part the recursion strips first.
  PartOrder order = PartOrder::Descending;
  // character_table refuses n above this.
  int max_table_n = 20;
};

// Row-major table: characters are rows, classes are columns, both in
// canonical partition order.
struct CharacterTable {
  int n = 0;
  std::vector<Partition> characters;
  std::vector<Partition> classes;
  std::vector<Int> values;

  Int at(std::size_t row, std::size_t col) const { return values[row * classes.size() + col]; }
};

// Evaluates chi^nu_lambda. The memo is keyed by (nu, remaining class parts)
// and shared by every query on the engine; it only grows. Safe to call from
// several threads at once.
class CharacterEngine {
 public:
  explicit CharacterEngine(EngineOptions options = {});

  const EngineOptions& options() const { return options_; }

  // Throws std::invalid_argument when |nu| != |lambda|, OverflowError if a
  // value leaves the 64-bit range.
  Int value(const Partition& nu, const CycleType& lambda);

  // Full table of S_n. Memoized per n when the cache is enabled.
  std::shared_ptr<const CharacterTable> table(int n);

  std::size_t cache_entries() const;
  void clear_cache();

 private:
  static constexpr std::size_t kShards = 32;
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<std::string, Int> memo;
  };

  Int evaluate(const Partition& nu, const std::vector<Partition::Part>& remaining);
  std::shared_ptr<const CharacterTable> build_table(int n);

  EngineOptions options_;
  std::array<Shard, kShards> shards_;
  std::mutex tables_mutex_;
  std::map<int, std::shared_ptr<const CharacterTable>> tables_;
};

std::shared_ptr<const CharacterTable> character_table(CharacterEngine& engine, int n);

// Degree by the hook length formula, n! / prod(hooks), computed through prime
// exponents so the factorial itself never has to fit.
Int char_degree(const Partition& nu);

// z_lambda = prod_i i^{m_i} m_i!.
Wide centralizer_order(const CycleType& lambda);

// Sparse integer combination of irreducible characters of S_level.
class VirtualChar {
 public:
  using Coeffs = std::map<Partition, Int, CanonicalLess>;

  explicit VirtualChar(int level) : level_(level) {}

  int level() const { return level_; }
  const Coeffs& coeffs() const { return coeffs_; }
  Int coeff(const Partition& nu) const;
  // Adds delta to the coefficient of nu, dropping it if it reaches zero.
  void add(const Partition& nu, Int delta);

  Int evaluate(CharacterEngine& engine, const CycleType& lambda) const;

 private:
  int level_;
  Coeffs coeffs_;
};

// Coefficient (-1)^leg on each partition reachable from phi by adding one rim
// hook of length L. Requires |phi| + L == n.
VirtualChar chi_bar_coeffs(const Partition& phi, int length, int n);
Int chi_bar_value(CharacterEngine& engine, const Partition& phi, int length, const CycleType& lambda);

}  // namespace gblock
