#include "gblock/block.hpp"

#include <algorithm>
#include <set>

namespace gblock {

BlockId::BlockId(int e, Partition core, int weight) : e_(e), core_(std::move(core)), weight_(weight), n_(0) {
  if (e_ < 1) throw InvalidBlock("e must be at least 1");
  if (weight_ < 0) throw InvalidBlock("weight must be non-negative");
  if (e_ == 1 && !core_.empty()) throw InvalidBlock("for e = 1 the core must be empty");
  if (e_ >= 2 && !is_e_core(core_, e_))
    throw InvalidBlock(render_tuple(core_) + " is not a " + std::to_string(e_) + "-core");
  n_ = core_.size() + weight_ * e_;
  if (n_ < 1) throw InvalidBlock("the block of S_0 is excluded (n must be at least 1)");
}

bool block_order(const BlockId& a, const BlockId& b) {
  if (a.e() != b.e()) return a.e() < b.e();
  if (a.n() != b.n()) return a.n() < b.n();
  return CanonicalLess{}(a.core(), b.core());
}

std::vector<Partition> block_partitions(const BlockId& b) {
  std::vector<Partition> out;
  for_each_partition(b.n(), [&](const Partition& nu) {
    if (e_core(nu, b.e()) == b.core()) out.push_back(nu);
  });
  return out;
}

std::vector<Partition> block_partitions_by_hook_addition(const BlockId& b) {
  std::set<Partition, CanonicalLess> layer{b.core()};
  for (int step = 0; step < b.weight(); ++step) {
    std::set<Partition, CanonicalLess> next;
    for (const auto& p : layer)
      for (auto& added : add_hooks_of_length(p, b.e())) next.insert(std::move(added.result));
    layer = std::move(next);
  }
  return {layer.begin(), layer.end()};
}

std::vector<Partition> e_cores_of_size(int m, int e) {
  std::vector<Partition> out;
  for_each_partition(m, [&](const Partition& p) {
    if (e == 1 ? p.empty() : is_e_core(p, e)) out.push_back(p);
  });
  return out;
}

std::vector<BlockId> blocks_of(int n, int e) {
  std::vector<BlockId> out;
  for (int w = 0; w * e <= n; ++w)
    for (auto& core : e_cores_of_size(n - w * e, e)) out.emplace_back(e, std::move(core), w);
  std::sort(out.begin(), out.end(), block_order);
  return out;
}

CountReport c_mu(CharacterEngine& engine, const BlockId& b, const CycleType& lambda) {
  if (lambda.size() != b.n())
    throw std::invalid_argument("class " + render_tuple(lambda.partition()) + " is not a class of S_" +
                                std::to_string(b.n()));
  CountReport report{b, lambda, 0, {}};
  for (auto& nu : block_partitions(b))
    if (engine.value(nu, lambda) != 0) report.witnesses.push_back(std::move(nu));
  report.count = static_cast<int>(report.witnesses.size());
  return report;
}

Partition extremal_lambda(const BlockId& b) {
  if (b.e() < 2) throw InvalidBlock("the extremal class needs e >= 2");
  const int we = b.weight() * b.e();
  if (b.core().empty()) {
    if (b.weight() == 0) throw InvalidBlock("the empty core needs weight >= 1");
    // (we-1, 1) with we >= 2, so it is a partition.
    return Partition::from_unsorted({we - 1, 1});
  }
  auto hooks = diagonal_hooks(b.core());
  hooks.front() += we;
  return Partition(std::vector<Partition::Part>(hooks.begin(), hooks.end()));
}

MinOverRegular min_c_over_regular(CharacterEngine& engine, const BlockId& b) {
  if (b.e() < 2) throw InvalidBlock("e-class regularity needs e >= 2");
  MinOverRegular result;
  const auto members = block_partitions(b);
  for_each_partition(b.n(), [&](const Partition& p) {
    if (!is_e_class_regular(p, b.e())) return;
    CycleType lambda(p);
    int count = 0;
    for (const auto& nu : members)
      if (engine.value(nu, lambda) != 0) ++count;
    if (count == 0) {
      result.zeros.push_back(lambda);
    } else if (!result.min || count < *result.min) {
      result.min = count;
      result.argmin = lambda;
    }
  });
  return result;
}

Partition opposite_sign_partner(CharacterEngine& engine, const Partition& psi, const Partition& phi, const BlockId& b,
                                const CycleType& lambda) {
  const int length = psi.size() - phi.size();
  if (psi.size() != b.n() || e_core(psi, b.e()) != b.core())
    throw std::invalid_argument(render_tuple(psi) + " is not in the block");
  if (length <= 0 || length % b.e() != 0)
    throw std::invalid_argument("|psi| - |phi| must be a positive multiple of e");
  const VirtualChar chi_bar = chi_bar_coeffs(phi, length, b.n());
  const Int reference = checked::mul(chi_bar.coeff(psi), engine.value(psi, lambda));
  if (reference == 0)
    throw std::invalid_argument(render_tuple(phi) + " is not reached from " + render_tuple(psi) +
                                " by a hook removal, or chi^psi vanishes on the class");
  // Coefficients are stored in canonical order, so the first hit is the tie-break.
  for (const auto& [beta, d] : chi_bar.coeffs()) {
    if (e_core(beta, b.e()) != b.core()) continue;
    const Int term = checked::mul(d, engine.value(beta, lambda));
    if (term != 0 && (term > 0) != (reference > 0)) return beta;
  }
  throw std::logic_error("no opposite-sign partner for psi=" + render_tuple(psi) + ", phi=" + render_tuple(phi) +
                         " on class " + render_tuple(lambda.partition()));
}

}  // namespace gblock
