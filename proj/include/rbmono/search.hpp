#pragma once

#include <vector>

#include "rbmono/classify.hpp"

namespace rbmono {

struct SearchParams {
  Rational lambda;
  Exp n_table = 0;     // tables cover exponents 0..n_table
  Exp theta_bound = 0;  // shifts range over 0..theta_bound
  std::vector<Rational> alphabet;  // candidate beta values
  Exp check_degree = 0;            // pair bound for the instance filter
};

struct Survivor {
  std::vector<Rational> beta;
  std::vector<Exp> theta;
  ClassificationResult classification;
};

// Enumerates every table with beta entries from the alphabet and shifts in
// [0, theta_bound] (beta(n) = 0 forces theta(n) = 0), keeps the tables whose
// Rota-Baxter instances hold for every pair with reachable exponents inside
// the table (check_degree extends the pair range past the table when
// larger), and labels each survivor with its classification. Survivors come
// back in canonical (lexicographic) order regardless of the execution
// policy. Guard: more than 10^8 candidates throws SearchSpaceTooLarge.
std::vector<Survivor> search_exhaustive(
    const SearchParams& params, ExecPolicy exec = ExecPolicy::parallel);

// Number of candidate tables the enumeration would visit.
std::uint64_t search_candidate_count(const SearchParams& params);

}  // namespace rbmono
