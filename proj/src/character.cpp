#include "gblock/character.hpp"

#include <algorithm>
#include <functional>

namespace gblock {

namespace {

std::string memo_key(const Partition& nu, const std::vector<Partition::Part>& remaining) {
  // remaining is always descending, so both recursion orders share entries.
  std::string key;
  key.reserve((nu.length() + remaining.size() + 1) * sizeof(Partition::Part));
  auto append = [&key](Partition::Part x) { key.append(reinterpret_cast<const char*>(&x), sizeof x); };
  for (auto x : nu.parts()) append(x);
  append(0);
  for (auto x : remaining) append(x);
  return key;
}

std::vector<int> primes_up_to(int n) {
  std::vector<bool> composite(static_cast<std::size_t>(std::max(n, 1)) + 1, false);
  std::vector<int> primes;
  for (int p = 2; p <= n; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    primes.push_back(p);
    for (long long q = static_cast<long long>(p) * p; q <= n; q += p) composite[static_cast<std::size_t>(q)] = true;
  }
  return primes;
}

}  // namespace

bool CycleType::has_part(int length) const {
  auto parts = cycles_.parts();
  return std::find(parts.begin(), parts.end(), length) != parts.end();
}

CharacterEngine::CharacterEngine(EngineOptions options) : options_(options) {}

Int CharacterEngine::value(const Partition& nu, const CycleType& lambda) {
  if (nu.size() != lambda.size())
    throw std::invalid_argument("character " + render_tuple(nu) + " and class " + render_tuple(lambda.partition()) +
                                " have different sizes");
  std::vector<Partition::Part> remaining(lambda.partition().parts().begin(), lambda.partition().parts().end());
  return evaluate(nu, remaining);
}

Int CharacterEngine::evaluate(const Partition& nu, const std::vector<Partition::Part>& remaining) {
  if (remaining.empty()) return 1;  // chi^()_() on S_0

  std::string key;
  Shard* shard = nullptr;
  if (options_.use_cache) {
    key = memo_key(nu, remaining);
    shard = &shards_[std::hash<std::string>{}(key) % kShards];
    std::lock_guard lock(shard->mutex);
    if (auto it = shard->memo.find(key); it != shard->memo.end()) return it->second;
  }

  // remaining is kept in descending order; strip from the front or the back.
  const bool descending = options_.order == PartOrder::Descending;
  const Partition::Part part = descending ? remaining.front() : remaining.back();
  std::vector<Partition::Part> rest(remaining);
  if (descending)
    rest.erase(rest.begin());
  else
    rest.pop_back();

  Int total = 0;
  for (const auto& removal : remove_hooks_of_length(nu, part)) {
    Int term = evaluate(removal.result, rest);
    total = (removal.leg % 2 == 0) ? checked::add(total, term) : checked::sub(total, term);
  }

  if (shard) {
    std::lock_guard lock(shard->mutex);
    shard->memo.emplace(std::move(key), total);
  }
  return total;
}

std::size_t CharacterEngine::cache_entries() const {
  std::size_t total = 0;
  for (const auto& shard : shards_) {
    std::lock_guard lock(shard.mutex);
    total += shard.memo.size();
  }
  return total;
}

void CharacterEngine::clear_cache() {
  for (auto& shard : shards_) {
    std::lock_guard lock(shard.mutex);
    shard.memo.clear();
  }
  std::lock_guard lock(tables_mutex_);
  tables_.clear();
}

std::shared_ptr<const CharacterTable> CharacterEngine::table(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n > options_.max_table_n)
    throw std::length_error("character table of S_" + std::to_string(n) + " exceeds the size bound " +
                            std::to_string(options_.max_table_n));
  if (!options_.use_cache) return build_table(n);
  {
    std::lock_guard lock(tables_mutex_);
    if (auto it = tables_.find(n); it != tables_.end()) return it->second;
  }
  auto built = build_table(n);
  std::lock_guard lock(tables_mutex_);
  return tables_.emplace(n, std::move(built)).first->second;
}

std::shared_ptr<const CharacterTable> CharacterEngine::build_table(int n) {
  auto t = std::make_shared<CharacterTable>();
  t->n = n;
  t->characters = partitions_of(n);
  t->classes = t->characters;
  t->values.reserve(t->characters.size() * t->classes.size());
  for (const auto& nu : t->characters)
    for (const auto& lambda : t->classes) t->values.push_back(value(nu, CycleType(lambda)));
  return t;
}

std::shared_ptr<const CharacterTable> character_table(CharacterEngine& engine, int n) { return engine.table(n); }

Int char_degree(const Partition& nu) {
  const int n = nu.size();
  auto primes = primes_up_to(n);
  std::vector<long long> exponent(primes.size(), 0);
  // Legendre: exponent of p in n! is sum floor(n / p^k).
  for (std::size_t k = 0; k < primes.size(); ++k)
    for (long long q = primes[k]; q <= n; q *= primes[k]) exponent[k] += n / q;
  for (const auto& h : all_hooks(nu)) {
    int len = h.length;
    for (std::size_t k = 0; k < primes.size() && len > 1; ++k)
      while (len % primes[k] == 0) {
        len /= primes[k];
        --exponent[k];
      }
  }
  Int degree = 1;
  for (std::size_t k = 0; k < primes.size(); ++k)
    for (long long e = 0; e < exponent[k]; ++e) degree = checked::mul<Int>(degree, primes[k]);
  return degree;
}

Wide centralizer_order(const CycleType& lambda) {
  Wide z = 1;
  auto parts = lambda.partition().parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t run = 1;
    while (i + run < parts.size() && parts[i + run] == parts[i]) ++run;
    for (std::size_t m = 1; m <= run; ++m) {
      z = checked::mul<Wide>(z, parts[i]);
      z = checked::mul<Wide>(z, static_cast<Wide>(m));
    }
    i += run;
  }
  return z;
}

Int VirtualChar::coeff(const Partition& nu) const {
  auto it = coeffs_.find(nu);
  return it == coeffs_.end() ? 0 : it->second;
}

void VirtualChar::add(const Partition& nu, Int delta) {
  if (nu.size() != level_)
    throw std::invalid_argument(render_tuple(nu) + " is not a partition of " + std::to_string(level_));
  Int updated = checked::add(coeff(nu), delta);
  if (updated == 0)
    coeffs_.erase(nu);
  else
    coeffs_[nu] = updated;
}

Int VirtualChar::evaluate(CharacterEngine& engine, const CycleType& lambda) const {
  Int total = 0;
  for (const auto& [nu, c] : coeffs_) total = checked::add(total, checked::mul(c, engine.value(nu, lambda)));
  return total;
}

VirtualChar chi_bar_coeffs(const Partition& phi, int length, int n) {
  if (length < 1) throw std::invalid_argument("hook length must be positive");
  if (phi.size() + length != n)
    throw std::invalid_argument("|phi| + L = " + std::to_string(phi.size() + length) + " differs from n = " +
                                std::to_string(n));
  VirtualChar chi(n);
  for (const auto& [beta, leg] : add_hooks_of_length(phi, length)) chi.add(beta, leg % 2 == 0 ? 1 : -1);
  return chi;
}

Int chi_bar_value(CharacterEngine& engine, const Partition& phi, int length, const CycleType& lambda) {
  return chi_bar_coeffs(phi, length, lambda.size()).evaluate(engine, lambda);
}

}  // namespace gblock
