#include <algorithm>
#include <random>

#include "doctest.h"
#include "gblock/partition.hpp"
#include "oracles.hpp"

using namespace gblock;

namespace {

std::vector<int> sorted_hook_lengths(const Partition& p) {
  std::vector<int> out;
  for (const auto& h : all_hooks(p)) out.push_back(h.length);
  std::sort(out.begin(), out.end());
  return out;
}

Partition random_partition(std::mt19937& rng, int n) {
  std::vector<Partition::Part> parts;
  while (n > 0) {
    int part = std::uniform_int_distribution<int>(1, n)(rng);
    parts.push_back(part);
    n -= part;
  }
  return Partition::from_unsorted(parts);
}

}  // namespace

TEST_CASE("parse_partition reads the literal grammar") {
  CHECK(parse_partition("10,2,1,1,1") == Partition{10, 2, 1, 1, 1});
  CHECK(parse_partition("2^3,1") == Partition{2, 2, 2, 1});
  CHECK(parse_partition("-") == Partition{});
  CHECK(parse_partition(" 10 , 2 , 1^3 ") == Partition{10, 2, 1, 1, 1});
  CHECK(parse_partition("1,3,2") == Partition{3, 2, 1});

  CHECK_THROWS_AS(parse_partition(""), ParseError);
  CHECK_THROWS_AS(parse_partition("3,,1"), ParseError);
  CHECK_THROWS_AS(parse_partition("3,0"), ParseError);
  CHECK_THROWS_AS(parse_partition("3,-1"), ParseError);
  CHECK_THROWS_AS(parse_partition("2^0"), ParseError);
  CHECK_THROWS_AS(parse_partition("2^"), ParseError);
  CHECK_THROWS_AS(parse_partition("a"), ParseError);
  CHECK_THROWS_AS(parse_partition("1^99999999999"), ParseError);
}

TEST_CASE("render is canonical and re-parses") {
  CHECK(render(Partition{2, 2, 2, 1}) == "2^3,1");
  CHECK(render(Partition{2, 2, 1}) == "2,2,1");
  CHECK(render(Partition{1, 1, 1, 1}) == "1^4");
  CHECK(render(Partition{}) == "-");
  CHECK(render_tuple(Partition{3, 1}) == "(3,1)");
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) REQUIRE(parse_partition(render(p)) == p);
}

TEST_CASE("Partition rejects invalid part sequences") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition{3, 1}.size() == 4);
  CHECK(Partition{}.size() == 0);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{2, 2}) == Partition{2, 2});
  for (int n = 0; n <= 10; ++n)
    for (const auto& p : partitions_of(n)) REQUIRE(conjugate(conjugate(p)) == p);
}

TEST_CASE("hook lengths") {
  // (b,2,1^c) with b=4, c=2: h_11 = b+c+1.
  CHECK(hook_length(Partition{4, 2, 1, 1}, 1, 1) == 7);
  CHECK(hook_length(Partition{1}, 1, 1) == 1);
  CHECK(sorted_hook_lengths(Partition{6, 4, 2}) == std::vector<int>{1, 1, 1, 2, 2, 2, 4, 4, 5, 5, 7, 8});
  CHECK_THROWS_AS(hook_length(Partition{2, 1}, 2, 2), std::out_of_range);
  CHECK_THROWS_AS(hook_length(Partition{2, 1}, 0, 1), std::out_of_range);

  for (int n = 1; n <= 10; ++n)
    for (const auto& p : partitions_of(n)) {
      const Partition pc = conjugate(p);
      for (const auto& h : all_hooks(p)) {
        REQUIRE(h.length == h.arm + h.leg + 1);
        REQUIRE(h.length == oracle::hook_length(p, static_cast<int>(h.row), static_cast<int>(h.col)));
        REQUIRE(h.length == hook_length(pc, h.col, h.row));
      }
    }
}

TEST_CASE("diagonal hooks") {
  CHECK(diagonal_hooks(Partition{2, 1}) == std::vector<int>{3});
  CHECK(diagonal_hooks(Partition{}).empty());
  CHECK(diagonal_hooks(Partition{2, 2}) == std::vector<int>{3, 1});
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) {
      auto d = diagonal_hooks(p);
      REQUIRE(std::adjacent_find(d.begin(), d.end(), std::less_equal<>()) == d.end());
      REQUIRE(std::accumulate(d.begin(), d.end(), 0) == n);
    }
}

TEST_CASE("remove_hook") {
  CHECK(remove_hook(Partition{2, 2}, 1, 1) == HookRemoval{Partition{1}, 1});
  CHECK(remove_hook(Partition{5}, 1, 1) == HookRemoval{Partition{}, 0});
  // The (1,2)-hook of (3,1) is the horizontal domino in row 1.
  CHECK(remove_hook(Partition{3, 1}, 1, 2) == HookRemoval{Partition{1, 1}, 0});
  CHECK_THROWS_AS(remove_hook(Partition{3, 1}, 2, 2), std::out_of_range);

  for (int n = 1; n <= 10; ++n)
    for (const auto& p : partitions_of(n))
      for (const auto& h : all_hooks(p)) {
        auto r = remove_hook(p, h.row, h.col);
        REQUIRE(r.result.size() == n - h.length);
        auto rim = oracle::remove_rim_hook(p, static_cast<int>(h.row), static_cast<int>(h.col));
        REQUIRE(r.result == rim.result);
        REQUIRE(r.leg == rim.leg);
        auto beads = oracle::beta_remove(p, h.row, h.length);
        REQUIRE(beads.has_value());
        REQUIRE(r.result == beads->result);
        REQUIRE(r.leg == beads->leg);
      }
}

TEST_CASE("add_hooks_of_length") {
  CHECK(add_hooks_of_length(Partition{}, 2) ==
        std::vector<HookRemoval>{{Partition{2}, 0}, {Partition{1, 1}, 1}});
  CHECK(add_hooks_of_length(Partition{}, 1) == std::vector<HookRemoval>{{Partition{1}, 0}});
  CHECK(add_hooks_of_length(Partition{2, 1}, 4) == std::vector<HookRemoval>{{Partition{6, 1}, 0},
                                                                            {Partition{4, 3}, 1},
                                                                            {Partition{2, 2, 2, 1}, 2},
                                                                            {Partition{2, 1, 1, 1, 1, 1}, 3}});
  CHECK_THROWS_AS(add_hooks_of_length(Partition{1}, 0), std::invalid_argument);

  // Addition and removal are inverse relations with matching legs.
  for (int m = 0; m <= 7; ++m)
    for (const auto& q : partitions_of(m))
      for (int length = 1; length <= 5; ++length) {
        auto added = add_hooks_of_length(q, length);
        std::vector<HookRemoval> expected;
        for (const auto& big : partitions_of(m + length))
          for (const auto& r : remove_hooks_of_length(big, length))
            if (r.result == q) expected.push_back({big, r.leg});
        std::sort(expected.begin(), expected.end(),
                  [](const HookRemoval& a, const HookRemoval& b) { return CanonicalLess{}(a.result, b.result); });
        REQUIRE(added == expected);
      }
}

TEST_CASE("beta sets") {
  CHECK(beta_set(Partition{3, 1}, 2) == BetaSet({4, 1}));
  CHECK(beta_set(Partition{}, 3) == BetaSet({2, 1, 0}));
  CHECK(beta_set(Partition{2, 1}, 3) == BetaSet({4, 2, 0}));
  CHECK_THROWS_AS(beta_set(Partition{2, 1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(BetaSet({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(BetaSet({-1}), std::invalid_argument);

  CHECK(partition_from_beta_set(BetaSet({4, 1})) == Partition{3, 1});
  CHECK(partition_from_beta_set(BetaSet({2, 1, 0})) == Partition{});
  CHECK(partition_from_beta_set(BetaSet({8, 2, 0})) == Partition{6, 1});

  for (int n = 0; n <= 8; ++n)
    for (const auto& p : partitions_of(n))
      for (std::size_t b = p.length(); b <= p.length() + 4; ++b) {
        auto x = beta_set(p, b);
        REQUIRE(x.bead_count() == b);
        REQUIRE(partition_from_beta_set(x) == p);
      }
}

TEST_CASE("e-cores and weights") {
  CHECK(e_core(Partition{3, 1}, 2) == Partition{});
  CHECK(e_core(Partition{6, 4, 2}, 3) == Partition{6, 4, 2});
  CHECK(e_core(Partition{6, 1}, 4) == Partition{2, 1});
  CHECK(e_core(Partition{4, 2, 1}, 1) == Partition{});
  CHECK(e_weight(Partition{3, 1}, 2) == 2);
  CHECK(e_weight(Partition{6, 1}, 4) == 1);
  CHECK(e_weight(Partition{4, 2, 1}, 1) == 7);
  CHECK(e_core(Partition{10, 2, 1, 1, 1}, 3) == Partition{4, 2});
  CHECK_THROWS_AS(e_core(Partition{1}, 0), std::invalid_argument);

  CHECK(is_e_core(Partition{2, 1}, 4));
  CHECK_FALSE(is_e_core(Partition{5}, 5));
  CHECK(is_e_core(Partition{6, 4, 2}, 3));
  CHECK_THROWS_AS(is_e_core(Partition{1}, 1), std::invalid_argument);

  for (int n = 0; n <= 12; ++n)
    for (const auto& p : partitions_of(n))
      for (int e = 2; e <= 6; ++e) {
        const Partition core = e_core(p, e);
        REQUIRE(n == core.size() + e * e_weight(p, e));
        REQUIRE(is_e_core(core, e));
        REQUIRE(e_core(core, e) == core);
        if (n <= 10) {
          REQUIRE(core == oracle::greedy_core(p, e));
          REQUIRE(core == oracle::greedy_core(p, e, true));
          REQUIRE(is_e_core(p, e) == (e_weight(p, e) == 0));
          REQUIRE(is_e_core(p, e) == (core == p));
        }
      }
}

TEST_CASE("e-class regularity") {
  CHECK(is_e_class_regular(Partition{10, 2, 1, 1, 1}, 3));
  CHECK_FALSE(is_e_class_regular(Partition{3, 2}, 3));
  CHECK(is_e_class_regular(Partition{}, 4));
  CHECK_THROWS_AS(is_e_class_regular(Partition{1}, 1), std::invalid_argument);
}

TEST_CASE("partitions_of enumerates in reverse-lexicographic order") {
  CHECK(partitions_of(4) ==
        std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
  CHECK(partitions_of(10).size() == 42);
  CHECK_THROWS_AS(partitions_of(-1), std::invalid_argument);
  for (int n = 0; n <= 30; ++n) REQUIRE(partition_count(n) == oracle::partition_count(n));
  for (int n = 1; n <= 18; ++n) {
    auto ps = partitions_of(n);
    REQUIRE(ps.size() == oracle::partition_count(n));
    REQUIRE(std::is_sorted(ps.begin(), ps.end(), CanonicalLess{}));
    REQUIRE(std::adjacent_find(ps.begin(), ps.end()) == ps.end());
    for (const auto& p : ps) REQUIRE(p.size() == n);
  }
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq(Partition{3, 1}, Partition{4}));
  CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
  CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
  CHECK_THROWS_AS(dominance_leq(Partition{3}, Partition{2}), std::invalid_argument);
  for (int n = 0; n <= 8; ++n)
    for (const auto& a : partitions_of(n)) {
      REQUIRE(dominance_leq(a, a));
      // Conjugation reverses dominance.
      for (const auto& b : partitions_of(n))
        REQUIRE(dominance_leq(a, b) == dominance_leq(conjugate(b), conjugate(a)));
    }
}

TEST_CASE("random larger partitions keep the structural identities") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(15, 40)(rng);
    const Partition p = random_partition(rng, n);
    REQUIRE(conjugate(conjugate(p)) == p);
    REQUIRE(parse_partition(render(p)) == p);
    REQUIRE(partition_from_beta_set(beta_set(p, p.length() + 3)) == p);
    auto d = diagonal_hooks(p);
    REQUIRE(std::accumulate(d.begin(), d.end(), 0) == n);
    for (int e = 2; e <= 7; ++e) REQUIRE(n == e_core(p, e).size() + e * e_weight(p, e));
  }
}
