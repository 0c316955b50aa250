#include "gblock/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace gblock {

namespace {

// Output of one independent task; merged in task order.
struct Partial {
  std::vector<Json> rows;
  std::vector<Claim> claims;
  std::vector<std::string> counterexamples;

  void tally(std::size_t claim, bool ok, const std::string& what = {}) {
    ++claims[claim].checked;
    if (ok) return;
    ++claims[claim].failures;
    if (claims[claim].asserted && !what.empty()) counterexamples.push_back(claims[claim].name + ": " + what);
  }
};

SweepReport run_tasks(std::string name, Json params, const std::vector<Claim>& claims, std::size_t tasks, int jobs,
                      const std::function<void(std::size_t, Partial&)>& task) {
  std::vector<Partial> partials(tasks, Partial{{}, claims, {}});
  parallel_for(tasks, jobs, [&](std::size_t i) { task(i, partials[i]); });

  SweepReport report;
  report.name = std::move(name);
  report.params = std::move(params);
  report.claims = claims;
  for (auto& part : partials) {
    for (auto& row : part.rows) report.rows.push_back(std::move(row));
    for (std::size_t c = 0; c < claims.size(); ++c) {
      report.claims[c].checked += part.claims[c].checked;
      report.claims[c].failures += part.claims[c].failures;
    }
    for (auto& ce : part.counterexamples) report.counterexamples.push_back(std::move(ce));
  }
  return report;
}

std::vector<BlockId> sweep_blocks(const std::vector<int>& e_values, int n_max, bool nonempty_core_only = false) {
  std::vector<BlockId> blocks;
  for (int e : e_values) {
    if (e < 2) throw std::invalid_argument("block sweeps need e >= 2");
    for (int n = 1; n <= n_max; ++n)
      for (auto& b : blocks_of(n, e))
        if (!nonempty_core_only || !b.core().empty()) blocks.push_back(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end(), block_order);
  return blocks;
}

Json block_params(const std::vector<int>& e_values, int n_max) {
  Json p;
  p["e"] = e_values;
  p["n_max"] = n_max;
  return p;
}

Json block_row(const BlockId& b) {
  Json row;
  row["e"] = b.e();
  row["n"] = b.n();
  row["core"] = render(b.core());
  row["w"] = b.weight();
  return row;
}

std::string describe(const BlockId& b) {
  return "e=" + std::to_string(b.e()) + " core=" + render(b.core()) + " w=" + std::to_string(b.weight());
}

// Count for each class of S_n accepted by keep, in canonical class order.
std::vector<std::pair<CycleType, int>> class_counts(CharacterEngine& engine, const BlockId& b,
                                                    const std::function<bool(const Partition&)>& keep) {
  const auto members = block_partitions(b);
  std::vector<std::pair<CycleType, int>> out;
  for_each_partition(b.n(), [&](const Partition& p) {
    if (!keep(p)) return;
    CycleType lambda(p);
    int count = 0;
    for (const auto& nu : members)
      if (engine.value(nu, lambda) != 0) ++count;
    out.emplace_back(lambda, count);
  });
  return out;
}

SweepReport dichotomy_sweep(CharacterEngine& engine, const std::vector<int>& e_values, int n_max, int jobs,
                            bool regular_classes) {
  const auto blocks = sweep_blocks(e_values, n_max);
  const std::vector<Claim> claims{
      {regular_classes ? "count_is_zero_or_at_least_w_plus_1" : "nonregular_count_is_zero_or_at_least_w_plus_1",
       regular_classes}};
  return run_tasks(regular_classes ? "dichotomy" : "remark1", block_params(e_values, n_max), claims, blocks.size(),
                   jobs, [&](std::size_t i, Partial& out) {
                     const BlockId& b = blocks[i];
                     auto counts = class_counts(engine, b, [&](const Partition& p) {
                       return is_e_class_regular(p, b.e()) == regular_classes;
                     });
                     Json row = block_row(b);
                     std::optional<int> min_nonzero;
                     Json violations = Json::array();
                     Json counts_json = Json::object();
                     std::size_t zeros = 0;
                     for (const auto& [lambda, c] : counts) {
                       const bool ok = c == 0 || c >= b.weight() + 1;
                       out.tally(0, ok, describe(b) + " class=" + render(lambda.partition()) + " c=" + std::to_string(c));
                       if (!ok) violations.push_back(render(lambda.partition()));
                       if (c == 0) ++zeros;
                       if (c > 0 && (!min_nonzero || c < *min_nonzero)) min_nonzero = c;
                       if (!regular_classes) counts_json[render(lambda.partition())] = c;
                     }
                     row["classes"] = counts.size();
                     row["zero_classes"] = zeros;
                     row["min_nonzero"] = min_nonzero ? Json(*min_nonzero) : Json(nullptr);
                     if (!regular_classes) row["counts"] = std::move(counts_json);
                     row["violations"] = std::move(violations);
                     out.rows.push_back(std::move(row));
                   });
}

// One hook removal out of a fixed delta.
struct Removal {
  Partition gamma;
  int leg;
};

std::string to_iso8601_utc() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string cell_text(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_array()) {
    if (v.empty()) return "{}";
    std::string s;
    for (const auto& item : v) {
      if (!s.empty()) s += ' ';
      s += cell_text(item);
    }
    return s;
  }
  if (v.is_object()) {
    std::string s;
    for (const auto& [k, item] : v.items()) {
      if (!s.empty()) s += ' ';
      s += k + ":" + cell_text(item);
    }
    return s.empty() ? "{}" : s;
  }
  return v.dump();
}

}  // namespace

bool SweepReport::pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return !c.asserted || c.holds(); });
}

std::string SweepReport::verdict() const {
  bool any_asserted = std::any_of(claims.begin(), claims.end(), [](const Claim& c) { return c.asserted; });
  if (!any_asserted) return "reported";
  return pass() ? "pass" : "fail";
}

const Claim* SweepReport::claim(const std::string& wanted) const {
  for (const auto& c : claims)
    if (c.name == wanted) return &c;
  return nullptr;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

SweepReport verify_theorem1(CharacterEngine& engine, const std::vector<int>& e_values, int n_max, int jobs) {
  const auto blocks = sweep_blocks(e_values, n_max);
  const std::vector<Claim> claims{{"min_nonzero_regular_count_equals_w_plus_1"},
                                  {"extremal_class_is_regular_with_count_w_plus_1"}};
  return run_tasks("theorem1", block_params(e_values, n_max), claims, blocks.size(), jobs,
                   [&](std::size_t i, Partial& out) {
                     const BlockId& b = blocks[i];
                     const int expected = b.weight() + 1;
                     auto m = min_c_over_regular(engine, b);
                     if (m.min)
                       out.tally(0, *m.min == expected,
                                 describe(b) + " min=" + std::to_string(*m.min) + " at " +
                                     render(m.argmin->partition()));

                     const Partition lambda = extremal_lambda(b);
                     const bool regular = is_e_class_regular(lambda, b.e());
                     const int extremal_count = c_mu(engine, b, CycleType(lambda)).count;
                     out.tally(1, regular && extremal_count == expected,
                               describe(b) + " extremal=" + render(lambda) + " c=" + std::to_string(extremal_count));

                     Json row = block_row(b);
                     row["block_size"] = block_partitions(b).size();
                     row["expected"] = expected;
                     row["min"] = m.min ? Json(*m.min) : Json(nullptr);
                     row["argmin"] = m.argmin ? Json(render(m.argmin->partition())) : Json(nullptr);
                     Json zeros = Json::array();
                     for (const auto& z : m.zeros) zeros.push_back(render(z.partition()));
                     row["zeros"] = std::move(zeros);
                     row["extremal"] = render(lambda);
                     row["extremal_count"] = extremal_count;
                     row["ok"] = (!m.min || *m.min == expected) && regular && extremal_count == expected;
                     out.rows.push_back(std::move(row));
                   });
}

SweepReport verify_dichotomy(CharacterEngine& engine, const std::vector<int>& e_values, int n_max, int jobs) {
  return dichotomy_sweep(engine, e_values, n_max, jobs, true);
}

SweepReport verify_remark1(CharacterEngine& engine, const std::vector<int>& e_values, int n_max, int jobs) {
  return dichotomy_sweep(engine, e_values, n_max, jobs, false);
}

SweepReport lemma1_sweep(int m_max, int jobs) {
  Json params;
  params["m_max"] = m_max;
  const std::vector<Claim> claims{{"leg_sign_product_is_minus_1"}};
  const std::size_t tasks = m_max >= 1 ? static_cast<std::size_t>(m_max) : 0;
  return run_tasks("lemma1", std::move(params), claims, tasks, jobs, [&](std::size_t i, Partial& out) {
    const int m = static_cast<int>(i) + 1;
    const auto deltas = partitions_of(m);
    std::vector<std::vector<Removal>> removals(deltas.size());
    for (std::size_t d = 0; d < deltas.size(); ++d)
      for (const auto& h : all_hooks(deltas[d])) {
        auto r = remove_hook(deltas[d], h.row, h.col);
        removals[d].push_back({std::move(r.result), r.leg});
      }

    std::size_t configurations = 0;
    // Same-size deltas can never be obtained from one another by a hook removal.
    for (std::size_t d1 = 0; d1 < deltas.size(); ++d1)
      for (std::size_t d2 = d1 + 1; d2 < deltas.size(); ++d2)
        for (const auto& g1 : removals[d1])
          for (const auto& g1b : removals[d2]) {
            if (g1.gamma != g1b.gamma) continue;
            for (const auto& g2 : removals[d1])
              for (const auto& g2b : removals[d2]) {
                if (g2.gamma != g2b.gamma || !CanonicalLess{}(g1.gamma, g2.gamma)) continue;
                ++configurations;
                const int legs = g1.leg + g1b.leg + g2.leg + g2b.leg;
                out.tally(0, legs % 2 == 1,
                          "delta=" + render(deltas[d1]) + "|" + render(deltas[d2]) + " gamma=" + render(g1.gamma) +
                              "|" + render(g2.gamma) + " legs=" + std::to_string(legs));
              }
          }
    Json row;
    row["m"] = m;
    row["partitions"] = deltas.size();
    row["configurations"] = configurations;
    out.rows.push_back(std::move(row));
  });
}

SweepReport verify_remark2(CharacterEngine& engine, int n_max, int bound_n_max, int jobs) {
  if (bound_n_max < 0) bound_n_max = n_max;
  Json params;
  params["e"] = 1;
  params["n_max"] = n_max;
  params["bound_n_max"] = bound_n_max;
  const std::vector<Claim> claims{{"hook_class_count_is_n_minus_1"},
                                  {"count_exceeds_n_minus_sqrt_2n_plus_1"},
                                  {"min_count_at_least_n_minus_1", false},
                                  {"min_count_equals_n_minus_1", false}};
  const int top = std::max(n_max, bound_n_max);
  const std::size_t tasks = top >= 1 ? static_cast<std::size_t>(top) : 0;
  return run_tasks("remark2", std::move(params), claims, tasks, jobs, [&](std::size_t i, Partial& out) {
    const int n = static_cast<int>(i) + 1;
    const auto table = engine.table(n);
    std::vector<int> counts(table->classes.size(), 0);
    for (std::size_t r = 0; r < table->characters.size(); ++r)
      for (std::size_t c = 0; c < table->classes.size(); ++c)
        if (table->at(r, c) != 0) ++counts[c];

    Json row;
    row["n"] = n;
    row["hook_class_count"] = nullptr;
    if (n >= 3 && n <= n_max) {
      const auto hook_class = Partition{n - 1, 1};
      auto col = std::find(table->classes.begin(), table->classes.end(), hook_class) - table->classes.begin();
      const int c = counts[static_cast<std::size_t>(col)];
      row["hook_class_count"] = c;
      out.tally(0, c == n - 1, "n=" + std::to_string(n) + " c=" + std::to_string(c));
    }

    // c > n + 1 - sqrt(2n)  <=>  n + 1 - c <= 0  or  (n + 1 - c)^2 < 2n.
    bool bound_ok = true;
    if (n <= bound_n_max) {
      for (std::size_t c = 0; c < counts.size(); ++c) {
        const long long gap = static_cast<long long>(n) + 1 - counts[c];
        const bool ok = gap <= 0 || gap * gap < 2LL * n;
        bound_ok = bound_ok && ok;
        out.tally(1, ok, "n=" + std::to_string(n) + " class=" + render(table->classes[c]) +
                             " c=" + std::to_string(counts[c]));
      }
    }
    auto min_it = std::min_element(counts.begin(), counts.end());
    const int min_c = *min_it;
    if (n >= 3) {
      out.tally(2, min_c >= n - 1);
      out.tally(3, min_c == n - 1);
    }
    row["bound_ok"] = n <= bound_n_max ? Json(bound_ok) : Json(nullptr);
    row["min_count"] = min_c;
    row["argmin"] = render(table->classes[static_cast<std::size_t>(min_it - counts.begin())]);
    row["min_at_least_n_minus_1"] = min_c >= n - 1;
    out.rows.push_back(std::move(row));
  });
}

SweepReport verify_chibar(CharacterEngine& engine, int n_max, int jobs) {
  Json params;
  params["n_max"] = n_max;
  const std::vector<Claim> claims{{"chi_bar_vanishes_without_part_L"}};
  const std::size_t tasks = n_max >= 1 ? static_cast<std::size_t>(n_max) : 0;
  return run_tasks("chibar", std::move(params), claims, tasks, jobs, [&](std::size_t i, Partial& out) {
    const int n = static_cast<int>(i) + 1;
    const auto classes = partitions_of(n);
    std::size_t checks = 0, nonzero_with_part = 0;
    for (int length = 1; length <= n; ++length)
      for (const auto& phi : partitions_of(n - length)) {
        const VirtualChar chi = chi_bar_coeffs(phi, length, n);
        for (const auto& p : classes) {
          CycleType lambda(p);
          const Int v = chi.evaluate(engine, lambda);
          if (lambda.has_part(length)) {
            if (v != 0) ++nonzero_with_part;
            continue;
          }
          ++checks;
          out.tally(0, v == 0,
                    "phi=" + render(phi) + " L=" + std::to_string(length) + " class=" + render(p) +
                        " value=" + std::to_string(v));
        }
      }
    Json row;
    row["n"] = n;
    row["checks"] = checks;
    row["nonzero_on_classes_with_part_L"] = nonzero_with_part;
    out.rows.push_back(std::move(row));
  });
}

SweepReport nonvanishing_row_structure_check(CharacterEngine& engine, const std::vector<int>& e_values, int n_max,
                                             int jobs) {
  const auto blocks = sweep_blocks(e_values, n_max, true);
  const std::size_t hook_tasks = n_max >= 2 ? static_cast<std::size_t>(n_max - 1) : 0;
  const std::vector<Claim> claims{{"hook_class_nonvanishing_set"},
                                  {"first_row_column_extensions_nonvanishing"},
                                  {"nonvanishing_members_dominate_extremal_class"}};
  return run_tasks(
      "rowstructure", block_params(e_values, n_max), claims, hook_tasks + blocks.size(), jobs,
      [&](std::size_t i, Partial& out) {
        if (i < hook_tasks) {
          const int n = static_cast<int>(i) + 2;
          const CycleType lambda(Partition{n - 1, 1});
          std::set<Partition, CanonicalLess> expected{Partition{n}, Partition(std::vector<Partition::Part>(n, 1))};
          for (int a = 2; a <= n - 2; ++a) {
            std::vector<Partition::Part> parts{a, 2};
            parts.insert(parts.end(), static_cast<std::size_t>(n - a - 2), 1);
            expected.insert(Partition::from_unsorted(std::move(parts)));
          }
          std::set<Partition, CanonicalLess> actual;
          for_each_partition(n, [&](const Partition& nu) {
            if (engine.value(nu, lambda) != 0) actual.insert(nu);
          });
          out.tally(0, actual == expected, "n=" + std::to_string(n));
          Json row;
          row["part"] = "a";
          row["n"] = n;
          row["class"] = render(lambda.partition());
          Json set = Json::array();
          for (const auto& nu : actual) set.push_back(render(nu));
          row["nonvanishing"] = std::move(set);
          row["ok"] = actual == expected;
          out.rows.push_back(std::move(row));
          return;
        }

        const BlockId& b = blocks[i - hook_tasks];
        const Partition lambda_p = extremal_lambda(b);
        const CycleType lambda(lambda_p);
        const int we = b.weight() * b.e();
        std::size_t extension_failures = 0;
        for (int d = 0; d <= we; ++d) {
          std::vector<Partition::Part> parts(b.core().parts().begin(), b.core().parts().end());
          parts.front() += d;
          parts.insert(parts.end(), static_cast<std::size_t>(we - d), 1);
          Partition psi(std::move(parts));
          const bool ok = engine.value(psi, lambda) != 0;
          if (!ok) ++extension_failures;
          out.tally(1, ok, describe(b) + " psi=" + render(psi));
        }
        std::size_t dominance_failures = 0;
        for (const auto& nu : block_partitions(b)) {
          if (engine.value(nu, lambda) == 0) continue;
          auto hooks = diagonal_hooks(nu);
          const bool ok = dominance_leq(lambda_p, Partition(std::vector<Partition::Part>(hooks.begin(), hooks.end())));
          if (!ok) ++dominance_failures;
          out.tally(2, ok, describe(b) + " nu=" + render(nu));
        }
        Json row = block_row(b);
        row["part"] = "b,c";
        row["class"] = render(lambda_p);
        row["extension_failures"] = extension_failures;
        row["dominance_failures"] = dominance_failures;
        row["ok"] = extension_failures == 0 && dominance_failures == 0;
        out.rows.push_back(std::move(row));
      });
}

SweepReport verify_partners(CharacterEngine& engine, const std::vector<int>& e_values, int n_max, int jobs) {
  const auto blocks = sweep_blocks(e_values, n_max);
  const std::vector<Claim> claims{{"partner_exists_in_block_with_opposite_sign"},
                                  {"partner_differs_from_psi"},
                                  {"distinct_removals_give_distinct_partners"}};
  return run_tasks("partners", block_params(e_values, n_max), claims, blocks.size(), jobs,
                   [&](std::size_t i, Partial& out) {
                     const BlockId& b = blocks[i];
                     const auto members = block_partitions(b);
                     std::size_t cases = 0;
                     for_each_partition(b.n(), [&](const Partition& p) {
                       if (!is_e_class_regular(p, b.e())) return;
                       const CycleType lambda(p);
                       for (const auto& psi : members) {
                         if (engine.value(psi, lambda) == 0) continue;
                         std::vector<Partition> partners;
                         for (const auto& h : all_hooks(psi)) {
                           if (h.length % b.e() != 0) continue;
                           const Partition phi = remove_hook(psi, h.row, h.col).result;
                           const std::string what = describe(b) + " psi=" + render(psi) + " phi=" + render(phi) +
                                                    " class=" + render(p);
                           ++cases;
                           try {
                             Partition beta = opposite_sign_partner(engine, psi, phi, b, lambda);
                             const Int d = chi_bar_coeffs(phi, h.length, b.n()).coeff(beta);
                             const Int ref = checked::mul(chi_bar_coeffs(phi, h.length, b.n()).coeff(psi),
                                                          engine.value(psi, lambda));
                             const Int term = checked::mul(d, engine.value(beta, lambda));
                             out.tally(0, e_core(beta, b.e()) == b.core() && term != 0 && (term > 0) != (ref > 0),
                                       what);
                             out.tally(1, beta != psi, what);
                             partners.push_back(std::move(beta));
                           } catch (const std::logic_error&) {
                             out.tally(0, false, what + " (no partner)");
                           }
                         }
                         std::vector<Partition> sorted(partners);
                         std::sort(sorted.begin(), sorted.end());
                         out.tally(2, std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                                   describe(b) + " psi=" + render(psi) + " class=" + render(p));
                       }
                     });
                     Json row = block_row(b);
                     row["cases"] = cases;
                     out.rows.push_back(std::move(row));
                   });
}

Json to_json(const SweepReport& report, bool with_meta) {
  Json out;
  out["sweep"] = report.name;
  out["params"] = report.params;
  out["verdict"] = report.verdict();
  Json claims = Json::array();
  for (const auto& c : report.claims) {
    Json j;
    j["name"] = c.name;
    j["asserted"] = c.asserted;
    j["checked"] = c.checked;
    j["failures"] = c.failures;
    j["holds"] = c.holds();
    claims.push_back(std::move(j));
  }
  out["claims"] = std::move(claims);
  out["rows"] = report.rows;
  out["counterexamples"] = report.counterexamples;
  if (with_meta) out["meta"] = Json{{"generated_at", to_iso8601_utc()}};
  return out;
}

std::string to_text(const SweepReport& report) {
  std::vector<std::string> columns;
  for (const auto& row : report.rows)
    for (const auto& [key, _] : row.items())
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);

  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
  for (const auto& row : report.rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      line.push_back(row.contains(columns[c]) ? cell_text(row[columns[c]]) : "");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }

  std::ostringstream os;
  os << "sweep: " << report.name << "  params: " << report.params.dump() << '\n';
  auto emit = [&](const std::vector<std::string>& line) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) text += "  ";
      text += line[c];
      if (c + 1 < line.size()) text.append(width[c] - line[c].size(), ' ');
    }
    os << text << '\n';
  };
  if (!columns.empty()) {
    emit(columns);
    for (const auto& line : cells) emit(line);
  }
  for (const auto& c : report.claims)
    os << (c.asserted ? (c.holds() ? "PASS " : "FAIL ") : "INFO ") << c.name << "  checked=" << c.checked
       << " failures=" << c.failures << '\n';
  for (const auto& ce : report.counterexamples) os << "counterexample: " << ce << '\n';
  os << "verdict: " << report.verdict() << '\n';
  return os.str();
}

}  // namespace gblock
