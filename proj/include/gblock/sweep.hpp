#pragma once

// Exhaustive verification sweeps over blocks and classes. Every sweep returns
// a SweepReport whose rows are sorted deterministically, independent of the
// number of worker threads.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "gblock/block.hpp"
#include "gblock/character.hpp"
#include "json.hpp"

namespace gblock {

using Json = nlohmann::ordered_json;

struct Claim {
  std::string name;
  // Exploratory claims are reported but never fail the sweep.
  bool asserted = true;
  std::size_t checked = 0;
  std::size_t failures = 0;

  bool holds() const { return failures == 0; }
};

struct SweepReport {
  std::string name;
  Json params = Json::object();
  std::vector<Json> rows;
  std::vector<Claim> claims;
  std::vector<std::string> counterexamples;

  // True iff every asserted claim holds.
  bool pass() const;
  // "pass", "fail", or "reported" when nothing is asserted.
  std::string verdict() const;
  const Claim* claim(const std::string& name) const;
};

// Runs body(i) for i in [0, count) on up to jobs threads. Rethrows the first
// exception raised by any worker.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

// Every block (e in e_values, 1 <= n <= n_max): the minimum nonzero count over
// e-class-regular classes equals w+1, and the extremal class attains it.
SweepReport verify_theorem1(CharacterEngine& engine, const std::vector<int>& e_values, int n_max, int jobs = 1);

// Every block and e-class-regular class: the count is 0 or at least w+1.
SweepReport verify_dichotomy(CharacterEngine& engine, const std::vector<int>& e_values, int n_max, int jobs = 1);

// Same dichotomy on classes that are not e-class-regular. Exploratory only.
SweepReport verify_remark1(CharacterEngine& engine, const std::vector<int>& e_values, int n_max, int jobs = 1);

// Sign product over the four hook removals linking two distinct partitions of
// m <= m_max to two distinct common hook-removal results.
SweepReport lemma1_sweep(int m_max, int jobs = 1);

// e = 1: c((n-1,1)) = n-1 for 3 <= n <= n_max, and c(lambda) > n - sqrt(2n) + 1
// for every lambda of n <= bound_n_max (defaults to n_max). Whether the
// minimum over classes is n-1 is reported only.
SweepReport verify_remark2(CharacterEngine& engine, int n_max, int bound_n_max = -1, int jobs = 1);

// chi-bar for a hook length L vanishes on every class of n <= n_max without a
// part equal to L.
SweepReport verify_chibar(CharacterEngine& engine, int n_max, int jobs = 1);

// (a) non-vanishing set of (n-1,1); (b) the first-row/first-column
// extensions of a nonempty core never vanish on the extremal class; (c) every
// non-vanishing block character dominates the extremal class through its
// diagonal hooks.
SweepReport nonvanishing_row_structure_check(CharacterEngine& engine, const std::vector<int>& e_values, int n_max,
                                             int jobs = 1);

// For every block member psi and every e-divisible hook removal phi, on every
// e-class-regular class where chi^psi does not vanish: a partner exists, is in
// the block, differs from psi, and distinct phi give distinct partners.
SweepReport verify_partners(CharacterEngine& engine, const std::vector<int>& e_values, int n_max, int jobs = 1);

Json to_json(const SweepReport& report, bool with_meta);
std::string to_text(const SweepReport& report);

}  // namespace gblock
