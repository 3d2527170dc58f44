#include "springer/billey.hpp"

#include <cassert>
#include <stdexcept>

namespace springer {

namespace {

struct SubwordSearch {
  const Permutation& v;
  int target_len;
  const std::vector<int>& letters;
  const std::vector<LinForm>& betas;
  MultiPoly result;
  std::vector<int> picked;

  // Plain pruned backtracking: with n <= 9 and words of length <= n(n-1)/2
  // the prefix-Bruhat and remaining-length prunes keep this comfortably
  // small; no memoization needed.
  void run(size_t pos, const Permutation& p) {
    if ((int)picked.size() == target_len) {
      // Every pick kept p <= v and lengths match, so p == v here.
      assert(p == v);
      MultiPoly term = MultiPoly::constant(result.n(), Rat(1));
      for (int j : picked) term = term.times(betas[j]);
      result = result + term;
      return;
    }
    if ((int)(letters.size() - pos) < target_len - (int)picked.size()) return;
    run(pos + 1, p);  // skip
    const int i = letters[pos];
    if (p(i) < p(i + 1)) {  // length goes up, keeping the subword reduced
      const Permutation q = p * Permutation::transposition(p.n(), i);
      if (bruhat_leq(q, v)) {
        picked.push_back((int)pos);
        run(pos + 1, q);
        picked.pop_back();
      }
    }
  }
};

}  // namespace

MultiPoly schubert_restrict(const Permutation& v, const Permutation& w) {
  return schubert_restrict(v, w, reduced_word(w));
}

MultiPoly schubert_restrict(const Permutation& v, const Permutation& w,
                            const std::vector<int>& letters) {
  if (v.n() != w.n())
    throw std::invalid_argument("schubert_restrict: size mismatch");
  const int n = v.n();
  if ((int)letters.size() != w.length() ||
      Permutation::from_letters(n, letters) != w)
    throw std::invalid_argument("schubert_restrict: not a reduced word of w");
  std::vector<LinForm> betas;
  betas.reserve(letters.size());
  Permutation prefix = Permutation::identity(n);
  for (int i : letters) {
    betas.push_back(LinForm::simple_root(n, i).applied(prefix));
    prefix = prefix * Permutation::transposition(n, i);
  }
  SubwordSearch search{v, v.length(), letters, betas, MultiPoly(n), {}};
  search.run(0, Permutation::identity(n));
  return search.result;
}

UniPoly project_s1(const MultiPoly& P, const WeightAssignment& wts) {
  if (P.n() != wts.n)
    throw std::invalid_argument("project_s1: size mismatch");
  UniPoly out;
  for (const auto& [expo, coeff] : P.terms()) {
    Rat c = coeff;
    int deg = 0;
    for (int i = 0; i < P.n(); ++i) {
      for (int e = 0; e < expo[i]; ++e) c *= wts.weights[i];
      deg += expo[i];
    }
    out = out + UniPoly::monomial(c, deg);
  }
  return out;
}

UniPoly springer_schubert(const Permutation& v, const Permutation& w,
                          const WeightAssignment& wts) {
  return project_s1(schubert_restrict(v, w), wts);
}

}  // namespace springer
