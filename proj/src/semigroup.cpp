#include "rbmono/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "rbmono/errors.hpp"

namespace rbmono {

Exp gcd_of_set(const std::vector<Exp>& values) {
  if (values.empty()) throw EmptySet();
  Exp g = 0;
  for (Exp v : values) g = std::gcd(g, v);
  if (g == 0) throw Error("gcd of an all-zero set is undefined");
  return g;
}

SemigroupView semigroup_closure(const std::vector<Exp>& generators,
                                Exp bound) {
  std::vector<Exp> gens;
  for (Exp g : generators)
    if (g > 0) gens.push_back(g);
  if (gens.empty()) throw EmptyGenerators();
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  SemigroupView view;
  view.generators = gens;
  view.bound = bound;
  view.gcd = gens[0];
  for (Exp g : gens) view.gcd = std::gcd(view.gcd, g);

  // Work in the normalized semigroup generated by gens/gcd; its gcd is 1,
  // so its complement is finite.
  const Exp d = view.gcd;
  const Exp nbound = bound / d;
  std::vector<char> member(nbound + 1, 0);
  member[0] = 1;  // identity adjoined
  for (Exp x = 0; x <= nbound; ++x) {
    if (!member[x]) continue;
    for (Exp g : gens) {
      const Exp y = x + g / d;
      if (y <= nbound) member[y] = 1;
    }
  }

  for (Exp x = 0; x <= nbound; ++x)
    if (member[x] && x * d <= bound) view.elements.push_back(x * d);

  // A run of min-generator consecutive members certifies everything beyond.
  const Exp min_gen = gens[0] / d;
  Exp run = 0;
  std::optional<Exp> run_end;
  for (Exp x = 0; x <= nbound; ++x) {
    run = member[x] ? run + 1 : 0;
    if (run >= min_gen) {
      run_end = x;
      break;
    }
  }
  if (run_end) {
    view.certified = true;
    const Exp run_start = *run_end + 1 - min_gen;
    for (Exp x = 0; x < run_start; ++x)
      if (!member[x]) view.gaps.push_back(x);
    if (view.gaps.empty()) {
      view.conductor = 0;
    } else {
      view.frobenius = view.gaps.back();
      view.conductor = view.gaps.back() + 1;
    }
  } else {
    for (Exp x = 0; x <= nbound; ++x)
      if (!member[x]) view.gaps.push_back(x);
  }
  return view;
}

SupportDecomposition decompose_support(const MonomialOperator& op,
                                       Exp n_bound) {
  std::vector<Exp> support;
  std::vector<Exp> shift_values;  // theta over the theta-support
  for (Exp n = 0; n <= n_bound; ++n) {
    if (!op.beta(n).is_zero()) support.push_back(n);
    const Exp t = op.theta(n);
    if (t != 0) shift_values.push_back(t);
  }
  if (support.empty()) throw ZeroOperator();
  if (shift_values.empty())
    throw InsufficientData(
        "no nonzero theta value observed up to n=" + std::to_string(n_bound) +
        "; the shift gcd cannot be inferred");

  SupportDecomposition dec;
  dec.d = gcd_of_set(shift_values);
  dec.verified_up_to = n_bound;

  std::vector<char> residue_hit(dec.d, 0);
  for (Exp n : support) residue_hit[n % dec.d] = 1;
  for (Exp r = 0; r < dec.d; ++r)
    if (residue_hit[r]) dec.residues.push_back(r);

  // The inferred d only stands if membership in the support depends on the
  // residue alone, over the whole sampled range.
  std::size_t si = 0;
  for (Exp n = 0; n <= n_bound; ++n) {
    const bool in_support = si < support.size() && support[si] == n;
    if (in_support) ++si;
    if (in_support != static_cast<bool>(residue_hit[n % dec.d]))
      throw InconsistentDecomposition(n);
  }
  return dec;
}

}  // namespace rbmono
