#include "gblock/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace gblock {

namespace {

// Keeps parse_partition from expanding "1^2000000000" into memory.
constexpr std::int64_t kMaxParsedSize = 1'000'000;

std::vector<int> column_lengths(const Partition& p) {
  std::vector<int> cols(p.empty() ? 0 : static_cast<std::size_t>(p[1]), 0);
  for (auto part : p.parts())
    for (int c = 0; c < part; ++c) ++cols[static_cast<std::size_t>(c)];
  return cols;
}

void require_cell(const Partition& p, std::size_t i, std::size_t j) {
  if (!p.contains_cell(i, j))
    throw std::out_of_range("cell (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not in the diagram of " + render_tuple(p));
}

std::int64_t parse_int(std::string_view tok, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("malformed partition literal '" + std::string(whole) + "'");
  return v;
}

}  // namespace

// ---- Partition ---------------------------------------------------------------

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    total += parts_[i];
  }
  if (total > std::numeric_limits<int>::max()) throw std::invalid_argument("partition too large");
  n_ = static_cast<int>(total);
}

Partition Partition::from_unsorted(std::vector<Part> parts) {
  for (auto x : parts)
    if (x < 0) throw std::invalid_argument("partition parts must be non-negative");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto x : p.parts()) {
    h ^= static_cast<std::size_t>(x);
    h *= 0x100000001b3ull;
  }
  return h;
}

// ---- BetaSet -----------------------------------------------------------------

BetaSet::BetaSet(std::vector<std::int64_t> beads) : beads_(std::move(beads)) {
  std::sort(beads_.begin(), beads_.end(), std::greater<>());
  if (!beads_.empty() && beads_.back() < 0) throw std::invalid_argument("beads must be non-negative");
  if (std::adjacent_find(beads_.begin(), beads_.end()) != beads_.end())
    throw std::invalid_argument("beads must be distinct");
}

bool BetaSet::contains(std::int64_t x) const {
  return std::binary_search(beads_.begin(), beads_.end(), x, std::greater<>());
}

// ---- Text form -----------------------------------------------------------------

Partition parse_partition(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact == "-") return {};
  if (compact.empty()) throw ParseError("empty partition literal (use '-' for the empty partition)");

  std::vector<Partition::Part> parts;
  std::int64_t total = 0;
  std::string_view rest = compact;
  while (true) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    auto caret = item.find('^');
    std::int64_t value = parse_int(item.substr(0, caret), text);
    std::int64_t count = 1;
    if (caret != std::string_view::npos) count = parse_int(item.substr(caret + 1), text);
    if (value <= 0) throw ParseError("partition parts must be positive in '" + std::string(text) + "'");
    if (count <= 0) throw ParseError("exponents must be positive in '" + std::string(text) + "'");
    if (value > kMaxParsedSize || count > kMaxParsedSize || (total += value * count) > kMaxParsedSize)
      throw ParseError("partition literal too large: '" + std::string(text) + "'");
    parts.insert(parts.end(), static_cast<std::size_t>(count), static_cast<Partition::Part>(value));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return Partition::from_unsorted(std::move(parts));
}

std::string render(const Partition& p) {
  if (p.empty()) return "-";
  std::string out;
  auto parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t run = 1;
    while (i + run < parts.size() && parts[i + run] == parts[i]) ++run;
    if (!out.empty()) out += ',';
    if (run >= 3) {
      out += std::to_string(parts[i]) + '^' + std::to_string(run);
    } else {
      out += std::to_string(parts[i]);
      if (run == 2) out += ',' + std::to_string(parts[i]);
    }
    i += run;
  }
  return out;
}

std::string render_tuple(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out + ")";
}

// ---- Diagram geometry ------------------------------------------------------------

Partition conjugate(const Partition& p) {
  auto cols = column_lengths(p);
  return Partition(std::vector<Partition::Part>(cols.begin(), cols.end()));
}

Hook hook_at(const Partition& p, std::size_t i, std::size_t j) {
  require_cell(p, i, j);
  std::size_t col_len = i;
  while (p.contains_cell(col_len + 1, j)) ++col_len;
  Hook h;
  h.row = i;
  h.col = j;
  h.arm = p[i] - static_cast<int>(j);
  h.leg = static_cast<int>(col_len - i);
  h.length = h.arm + h.leg + 1;
  return h;
}

int hook_length(const Partition& p, std::size_t i, std::size_t j) { return hook_at(p, i, j).length; }

std::vector<Hook> all_hooks(const Partition& p) {
  auto cols = column_lengths(p);
  std::vector<Hook> hooks;
  hooks.reserve(static_cast<std::size_t>(p.size()));
  for (std::size_t i = 1; i <= p.length(); ++i) {
    for (std::size_t j = 1; j <= static_cast<std::size_t>(p[i]); ++j) {
      Hook h{i, j, p[i] - static_cast<int>(j), cols[j - 1] - static_cast<int>(i), 0};
      h.length = h.arm + h.leg + 1;
      hooks.push_back(h);
    }
  }
  return hooks;
}

std::vector<int> diagonal_hooks(const Partition& p) {
  std::vector<int> out;
  for (std::size_t k = 1; p.contains_cell(k, k); ++k) out.push_back(hook_length(p, k, k));
  return out;
}

HookRemoval remove_hook(const Partition& p, std::size_t i, std::size_t j) {
  Hook h = hook_at(p, i, j);
  std::size_t last = i + static_cast<std::size_t>(h.leg);
  std::vector<Partition::Part> parts(p.parts().begin(), p.parts().end());
  // Row r keeps the cells left of column max(j, p_{r+1}).
  for (std::size_t r = i; r <= last; ++r)
    parts[r - 1] = std::max<Partition::Part>(static_cast<Partition::Part>(j), p[r + 1]) - 1;
  std::erase(parts, 0);
  return {Partition(std::move(parts)), h.leg};
}

std::vector<HookRemoval> remove_hooks_of_length(const Partition& p, int length) {
  std::vector<HookRemoval> out;
  for (const auto& h : all_hooks(p))
    if (h.length == length) out.push_back(remove_hook(p, h.row, h.col));
  return out;
}

std::vector<HookRemoval> add_hooks_of_length(const Partition& p, int length) {
  if (length < 1) throw std::invalid_argument("hook length must be positive");
  BetaSet x = beta_set(p, p.length() + static_cast<std::size_t>(length));
  std::vector<HookRemoval> out;
  auto beads = x.beads();
  for (std::size_t k = 0; k < beads.size(); ++k) {
    std::int64_t target = beads[k] + length;
    if (x.contains(target)) continue;
    std::vector<std::int64_t> moved(beads.begin(), beads.end());
    moved[k] = target;
    // Leg = beads strictly between the old and new positions; they sit before k.
    int leg = 0;
    for (std::size_t t = 0; t < k; ++t)
      if (beads[t] < target) ++leg;
    out.push_back({partition_from_beta_set(BetaSet(std::move(moved))), leg});
  }
  std::sort(out.begin(), out.end(),
            [](const HookRemoval& a, const HookRemoval& b) { return CanonicalLess{}(a.result, b.result); });
  return out;
}

// ---- Beta-sets and cores -----------------------------------------------------------

BetaSet beta_set(const Partition& p, std::size_t bead_count) {
  if (bead_count < p.length())
    throw std::invalid_argument("bead count " + std::to_string(bead_count) + " is smaller than the number of parts of " +
                                render_tuple(p));
  std::vector<std::int64_t> beads(bead_count);
  for (std::size_t i = 1; i <= bead_count; ++i)
    beads[i - 1] = static_cast<std::int64_t>(p[i]) + static_cast<std::int64_t>(bead_count - i);
  return BetaSet(std::move(beads));
}

Partition partition_from_beta_set(const BetaSet& x) {
  auto beads = x.beads();
  const std::size_t m = beads.size();
  std::vector<Partition::Part> parts;
  for (std::size_t i = 0; i < m; ++i) {
    std::int64_t part = beads[i] - static_cast<std::int64_t>(m - 1 - i);
    if (part <= 0) break;
    parts.push_back(static_cast<Partition::Part>(part));
  }
  return Partition(std::move(parts));
}

Partition e_core(const Partition& p, int e) {
  if (e < 1) throw std::invalid_argument("e must be at least 1");
  if (e == 1) return {};
  BetaSet x = beta_set(p, p.length());
  std::vector<std::int64_t> per_runner(static_cast<std::size_t>(e), 0);
  for (auto b : x.beads()) ++per_runner[static_cast<std::size_t>(b % e)];
  std::vector<std::int64_t> beads;
  for (int r = 0; r < e; ++r)
    for (std::int64_t k = 0; k < per_runner[static_cast<std::size_t>(r)]; ++k) beads.push_back(r + k * e);
  return partition_from_beta_set(BetaSet(std::move(beads)));
}

int e_weight(const Partition& p, int e) { return (p.size() - e_core(p, e).size()) / e; }

bool is_e_core(const Partition& p, int e) {
  if (e < 2) throw std::invalid_argument("is_e_core requires e >= 2");
  auto hooks = all_hooks(p);
  return std::none_of(hooks.begin(), hooks.end(), [e](const Hook& h) { return h.length % e == 0; });
}

bool is_e_class_regular(const Partition& p, int e) {
  if (e < 2) throw std::invalid_argument("is_e_class_regular requires e >= 2");
  return std::none_of(p.parts().begin(), p.parts().end(), [e](auto part) { return part % e == 0; });
}

// ---- Enumeration and order -----------------------------------------------------------

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n == 0) {
    visit(Partition{});
    return;
  }
  // Reverse-lexicographic successor: find the rightmost part > 1, decrement
  // it, and refill the tail greedily with that value.
  std::vector<Partition::Part> a{static_cast<Partition::Part>(n)};
  while (true) {
    visit(Partition(a));
    std::size_t ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) return;
    Partition::Part v = --a.back();
    auto rem = static_cast<Partition::Part>(ones + 1);
    while (rem > 0) {
      a.push_back(std::min(v, rem));
      rem -= a.back();
    }
  }
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::uint64_t partition_count(int n) {
  if (n < 0) return 0;
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
  return ways[static_cast<std::size_t>(n)];
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dominance order compares partitions of the same size (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  std::int64_t sa = 0, sb = 0;
  for (std::size_t i = 1; i <= std::max(a.length(), b.length()); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

}  // namespace gblock
