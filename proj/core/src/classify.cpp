#include "oneq/classify.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "linear_system.hpp"
#include "oneq/catalog.hpp"
#include "oneq/errors.hpp"
#include "oneq/witness.hpp"

namespace oneq {

std::string to_string(Decision d) {
  return d == Decision::one_query ? "one-query" : "not-one-query";
}

namespace {

// Subsets of {1..n} of size d as masks, via Gosper's hack.
void append_monomials(int n, int d, std::vector<std::uint64_t>& out) {
  if (d == 0) {
    out.push_back(0);
    return;
  }
  if (d > n) return;
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t m = (std::uint64_t{1} << d) - 1;
  while (m < limit) {
    out.push_back(m);
    const std::uint64_t low = m & (~m + 1);
    const std::uint64_t ripple = m + low;
    m = ripple | (((m ^ ripple) >> 2) / low);
  }
}

bool agrees_with_degree(const PartialBooleanFunction& f, const std::vector<std::uint64_t>& monomials) {
  detail::IntegerRows rows;
  rows.reserve(f.domain_size());
  for (const auto& [x, v] : f.entries()) {
    std::vector<std::int64_t> row;
    row.reserve(monomials.size() + 1);
    for (auto t : monomials) row.push_back((x.value() & t) == t ? 1 : 0);
    row.push_back(v ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return detail::consistent(rows);
}

}  // namespace

std::optional<int> min_degree(const PartialBooleanFunction& f, int cap) {
  cap = std::clamp(cap, 0, f.arity());
  std::vector<std::uint64_t> monomials;
  for (int d = 0; d <= cap; ++d) {
    append_monomials(f.arity(), d, monomials);
    if (agrees_with_degree(f, monomials)) return d;
  }
  return std::nullopt;
}

Classification is_one_query(const PartialBooleanFunction& f, const ClassifyOptions& options) {
  Classification out;
  out.degree = min_degree(f, 2);
  out.rejected_by_degree = !out.degree.has_value();
  if (out.rejected_by_degree && f.arity() > 2 && options.full_degree_cap > 2) {
    out.degree = min_degree(f, std::min(f.arity(), options.full_degree_cap));
  }
  if (f.is_constant()) out.notes.push_back("degenerate: constant");
  if (options.canonicalize && f.arity() <= CanonicalOptions{}.max_arity) {
    out.canonical = canonical_form(f);
  }

  if (out.rejected_by_degree && !options.explain) {
    out.notes.push_back("rejected by degree filter");
    return out;
  }

  const auto outcome = solve_feasibility(build_constraints(f));
  if (!outcome.feasible()) {
    out.infeasibility = outcome.infeasibility();
    return out;
  }
  const auto& c = outcome.certificate();
  if (!verify_certificate(f, c)) throw std::logic_error("solver certificate fails verification");
  const auto witness = build_gram_witness(f, c);
  for (const auto& [x, v] : f.entries()) {
    if (evaluate_g(witness, x) != (v ? 1 : 0)) {
      throw std::logic_error("Gram witness disagrees with f at " + x.to_string());
    }
  }
  if (out.rejected_by_degree) out.notes.push_back("feasible although degree exceeds 2");
  out.decision = Decision::one_query;
  out.certificate = c;
  return out;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("ONEQ_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct ScanRecord {
  std::optional<PartialBooleanFunction> function;
  Classification classification;
  std::vector<std::uint8_t> canonical_key;
  std::vector<std::uint8_t> canonical_key_plain;
  bool filter_exception = false;
};

template <typename Decode>
std::vector<ScanRecord> classify_range(std::uint64_t count, Decode decode, bool dedup,
                                       unsigned threads) {
  std::vector<ScanRecord> records(count);
  const auto work = [&](std::uint64_t begin, std::uint64_t end) {
    ClassifyOptions opts;
    opts.canonicalize = dedup;
    opts.explain = false;
    for (std::uint64_t i = begin; i < end; ++i) {
      auto f = decode(i);
      if (!f) continue;
      auto& rec = records[i];
      rec.classification = is_one_query(*f, opts);
      if (rec.classification.rejected_by_degree) {
        rec.filter_exception = solve_feasibility(build_constraints(*f)).feasible();
      }
      if (dedup) {
        rec.canonical_key = table_of(*rec.classification.canonical);
        rec.canonical_key_plain = table_of(canonical_form(*f, {.output_negation = false}));
      }
      rec.function = std::move(f);
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::uint64_t>(count, 1))));
  if (threads == 1) {
    work(0, count);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = t * chunk;
      const std::uint64_t end = std::min(count, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  }
  return records;
}

SearchSummary summarize(int n, bool total_only, bool dedup, std::vector<ScanRecord>& records) {
  SearchSummary s;
  s.n = n;
  s.total_only = total_only;
  s.dedup = dedup;
  std::map<std::vector<std::uint8_t>, std::size_t> class_index;
  std::map<std::vector<std::uint8_t>, Decision> plain_classes;

  for (auto& rec : records) {
    if (!rec.function) continue;
    const auto& c = rec.classification;
    ++s.examined;
    const bool yes = c.decision == Decision::one_query;
    if (yes) ++s.one_query_functions;
    if (c.rejected_by_degree) ++s.rejected_by_degree;
    if (rec.filter_exception) ++s.degree_filter_exceptions;

    if (!dedup) {
      if (yes) {
        s.representatives.push_back({*rec.function, 1, c.decision, c.certificate, c.degree});
      }
      continue;
    }
    auto [it, fresh] = class_index.emplace(rec.canonical_key, s.representatives.size());
    if (fresh) {
      s.representatives.push_back({*c.canonical, 0, c.decision, std::nullopt, c.degree});
    }
    auto& rep = s.representatives[it->second];
    if (rep.decision != c.decision) {
      throw std::logic_error("one-query decision differs inside an isomorphism class");
    }
    ++rep.members;
    if (!rep.certificate && *rec.function == rep.function) rep.certificate = c.certificate;
    plain_classes.emplace(rec.canonical_key_plain, c.decision);
  }

  if (dedup) {
    // Certificates for the canonical representative itself, in class order.
    for (auto& rep : s.representatives) {
      if (rep.decision == Decision::one_query && !rep.certificate) {
        rep.certificate = solve_feasibility(build_constraints(rep.function)).certificate();
      }
    }
    std::sort(s.representatives.begin(), s.representatives.end(),
              [](const auto& a, const auto& b) { return table_of(a.function) < table_of(b.function); });
    s.classes = s.representatives.size();
    s.one_query_classes = static_cast<std::size_t>(std::count_if(
        s.representatives.begin(), s.representatives.end(),
        [](const auto& r) { return r.decision == Decision::one_query; }));
    s.classes_without_negation = plain_classes.size();
    s.one_query_classes_without_negation = static_cast<std::size_t>(
        std::count_if(plain_classes.begin(), plain_classes.end(),
                      [](const auto& kv) { return kv.second == Decision::one_query; }));
  }
  return s;
}

}  // namespace

std::vector<std::vector<bool>> total_one_query_characterization(int n) {
  const std::size_t size = std::size_t{1} << n;
  std::set<std::vector<bool>> tables;
  const auto var = [&](std::size_t x, int i) { return ((x >> (n - i)) & 1u) != 0; };
  for (bool neg : {false, true}) {
    tables.insert(std::vector<bool>(size, neg));
    for (int i = 1; i <= n; ++i) {
      std::vector<bool> t(size);
      for (std::size_t x = 0; x < size; ++x) t[x] = var(x, i) != neg;
      tables.insert(t);
      for (int j = i + 1; j <= n; ++j) {
        for (std::size_t x = 0; x < size; ++x) t[x] = (var(x, i) != var(x, j)) != neg;
        tables.insert(t);
      }
    }
  }
  return {tables.begin(), tables.end()};
}

SearchSummary scan_total(int n, const ScanOptions& options) {
  if (n < 1 || n > 4) throw BudgetExceeded("scan_total supports 1 <= n <= 4");
  const std::size_t size = std::size_t{1} << n;
  const std::uint64_t count = std::uint64_t{1} << size;
  const auto decode = [&](std::uint64_t code) -> std::optional<PartialBooleanFunction> {
    std::vector<PartialBooleanFunction::Entry> entries;
    for (std::size_t x = 0; x < size; ++x) entries.emplace_back(BitString(n, x), ((code >> x) & 1u) != 0);
    return PartialBooleanFunction(n, std::move(entries));
  };
  const unsigned threads = options.threads ? options.threads : default_thread_count();
  auto records = classify_range(count, decode, options.dedup, threads);

  std::set<std::vector<bool>> found;
  for (const auto& rec : records) {
    if (rec.classification.decision != Decision::one_query) continue;
    std::vector<bool> t(size);
    for (const auto& [x, v] : rec.function->entries()) t[x.value()] = v;
    found.insert(std::move(t));
  }
  const auto expected = total_one_query_characterization(n);
  auto summary = summarize(n, true, options.dedup, records);
  summary.characterization_holds =
      std::equal(found.begin(), found.end(), expected.begin(), expected.end());
  return summary;
}

SearchSummary scan_partial(int n, const ScanOptions& options) {
  if (n < 1 || n > 3) throw BudgetExceeded("exhaustive partial scan supports 1 <= n <= 3");
  const std::size_t size = std::size_t{1} << n;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < size; ++i) count *= 3;
  const auto decode = [&](std::uint64_t code) -> std::optional<PartialBooleanFunction> {
    std::vector<PartialBooleanFunction::Entry> entries;
    for (std::size_t x = 0; x < size; ++x, code /= 3) {
      const auto digit = code % 3;
      if (digit != 0) entries.emplace_back(BitString(n, x), digit == 2);
    }
    if (entries.empty()) return std::nullopt;
    return PartialBooleanFunction(n, std::move(entries));
  };
  const unsigned threads = options.threads ? options.threads : default_thread_count();
  auto records = classify_range(count, decode, options.dedup, threads);
  return summarize(n, false, options.dedup, records);
}

bool has_extreme_isomorph(const PartialBooleanFunction& f) {
  const int n = f.arity();
  bool found = false;
  for_each_isomorph(f, [&](const Isomorphism&, const PartialBooleanFunction& image) {
    const auto ones = image.inputs_with(true);
    found = std::all_of(ones.begin(), ones.end(), [&](const BitString& x) {
      const int w = hamming_weight(x);
      return w == 0 || w == n;
    });
    return !found;
  });
  return found;
}

bool one_query_without_extreme_isomorph(const PartialBooleanFunction& f) {
  return is_one_query(f).decision == Decision::one_query && !has_extreme_isomorph(f);
}

bool rediscover_f4() { return one_query_without_extreme_isomorph(make_f4().function); }

}  // namespace oneq
