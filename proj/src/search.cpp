#include "rbmono/search.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rbmono/errors.hpp"

namespace rbmono {

namespace {

constexpr std::uint64_t kCandidateCap = 100'000'000;

// Per-entry choices, shared by all table positions: 0 pins the shift to 0,
// every other alphabet value combines with each shift. Sorting the alphabet
// makes the enumeration order independent of how it was written down.
std::vector<std::pair<Rational, Exp>> entry_options(const SearchParams& p) {
  std::vector<Rational> alphabet = p.alphabet;
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()),
                 alphabet.end());
  std::vector<std::pair<Rational, Exp>> options;
  for (const Rational& a : alphabet) {
    if (a.is_zero()) {
      options.emplace_back(a, 0);
    } else {
      for (Exp t = 0; t <= p.theta_bound; ++t) options.emplace_back(a, t);
    }
  }
  return options;
}

std::uint64_t candidate_count_or_throw(std::uint64_t options, Exp entries) {
  std::uint64_t total = 1;
  for (Exp i = 0; i <= entries; ++i) {
    if (options != 0 && total > kCandidateCap / options)
      throw SearchSpaceTooLarge(std::to_string(options) + " choices over " +
                                std::to_string(entries + 1) + " entries");
    total *= options;
  }
  return total;
}

}  // namespace

std::uint64_t search_candidate_count(const SearchParams& params) {
  const auto options = entry_options(params);
  if (options.empty()) return 0;
  return candidate_count_or_throw(options.size(), params.n_table);
}

std::vector<Survivor> search_exhaustive(const SearchParams& params,
                                        ExecPolicy exec) {
  const auto options = entry_options(params);
  std::vector<Survivor> survivors;
  if (options.empty()) return survivors;
  const std::uint64_t total =
      candidate_count_or_throw(options.size(), params.n_table);
  const std::uint64_t radix = options.size();
  const Exp entries = params.n_table + 1;

  const auto evaluate =
      [&](std::uint64_t candidate) -> std::optional<Survivor> {
    std::vector<Rational> beta(entries);
    std::vector<Exp> theta(entries);
    std::uint64_t rest = candidate;
    // Entry 0 is the most significant digit, so ascending candidate ids
    // enumerate tables in lexicographic order.
    for (Exp pos = entries; pos-- > 0;) {
      const auto& [b, t] = options[rest % radix];
      rest /= radix;
      beta[pos] = b;
      theta[pos] = t;
    }
    MonomialOperator op =
        MonomialOperator::from_table(std::move(beta), std::move(theta));
    // Every pair whose reachable exponents fit in the table is part of the
    // filter; check_degree can only extend the range beyond the table.
    const Exp filter_degree = std::max(params.check_degree, params.n_table);
    const RBReport rb =
        check_rb(op, params.lambda, filter_degree, ExecPolicy::serial,
                 RangePolicy::skip_out_of_range);
    if (!rb.pass()) return std::nullopt;
    ClassificationResult cls =
        params.lambda.is_zero()
            ? classify_weight0(op, params.n_table)
            : classify_nonzero(op, params.lambda, params.n_table);
    const TableRepr& table = *op.as_table();
    return Survivor{table.beta, table.theta, std::move(cls)};
  };

#ifdef _OPENMP
  if (exec == ExecPolicy::parallel) {
    std::vector<std::vector<std::pair<std::uint64_t, Survivor>>> found;
#pragma omp parallel
    {
#pragma omp single
      found.resize(static_cast<std::size_t>(omp_get_num_threads()));
      auto& local = found[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 1024)
      for (long long i = 0; i < static_cast<long long>(total); ++i) {
        if (auto s = evaluate(static_cast<std::uint64_t>(i)))
          local.emplace_back(static_cast<std::uint64_t>(i), std::move(*s));
      }
    }
    std::vector<std::pair<std::uint64_t, Survivor>> merged;
    for (auto& bucket : found)
      for (auto& item : bucket) merged.push_back(std::move(item));
    std::sort(merged.begin(), merged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    survivors.reserve(merged.size());
    for (auto& [idx, s] : merged) survivors.push_back(std::move(s));
    return survivors;
  }
#else
  (void)exec;
#endif

  for (std::uint64_t i = 0; i < total; ++i)
    if (auto s = evaluate(i)) survivors.push_back(std::move(*s));
  return survivors;
}

}  // namespace rbmono
