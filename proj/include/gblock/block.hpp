#pragma once

// Generalized e-blocks of symmetric groups and the count of block characters
// that do not vanish on a given class.

#include <optional>
#include <stdexcept>
#include <vector>

#include "gblock/character.hpp"
#include "gblock/partition.hpp"

namespace gblock {

class InvalidBlock : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// (e, core, weight): every partition of |core| + weight*e whose e-core is core.
// For e = 1 the core must be () and the block is all partitions of n.
class BlockId {
 public:
  // Throws InvalidBlock if core is not an e-core, e < 1, weight < 0 or n = 0.
  BlockId(int e, Partition core, int weight);

  int e() const { return e_; }
  const Partition& core() const { return core_; }
  int weight() const { return weight_; }
  int n() const { return n_; }

  friend bool operator==(const BlockId&, const BlockId&) = default;

 private:
  int e_;
  Partition core_;
  int weight_;
  int n_;
};

// Sort key for reports: (e, n, core in canonical order).
bool block_order(const BlockId& a, const BlockId& b);

struct CountReport {
  BlockId block;
  CycleType class_label;
  int count = 0;
  // Non-vanishing block characters, canonical order.
  std::vector<Partition> witnesses;
};

struct MinOverRegular {
  std::optional<int> min;
  std::optional<CycleType> argmin;
  std::vector<CycleType> zeros;
};

// Filters partitions_of(n) through e_core.
std::vector<Partition> block_partitions(const BlockId& b);
// Independent route for cross-checks: grows the core by adding e-hooks weight
// times on the abacus, collecting distinct results.
std::vector<Partition> block_partitions_by_hook_addition(const BlockId& b);

// All e-cores of size m, canonical order.
std::vector<Partition> e_cores_of_size(int m, int e);
// Every block of S_n for this e, in report order.
std::vector<BlockId> blocks_of(int n, int e);

CountReport c_mu(CharacterEngine& engine, const BlockId& b, const CycleType& lambda);

// For core (): (we-1, 1). Otherwise (we + h_11, h_22, ..., h_kk) built from the
// diagonal hooks of the core. Requires e >= 2.
Partition extremal_lambda(const BlockId& b);

// Exhaustive over every e-class-regular class of S_n.
MinOverRegular min_c_over_regular(CharacterEngine& engine, const BlockId& b);

// Among block members beta with d_{phi,beta} chi^beta_lambda != 0 and sign
// opposite to d_{phi,psi} chi^psi_lambda, the canonically first one. Throws
// std::logic_error when no such beta exists.
Partition opposite_sign_partner(CharacterEngine& engine, const Partition& psi, const Partition& phi, const BlockId& b,
                                const CycleType& lambda);

}  // namespace gblock
