#pragma once

// Independent product of split-basis words, expanding the LEFT factor's
// permutation letter by letter (the library kernel expands the right one).
// Used to cross-check word_product: both must agree exactly.

#include <map>
#include <vector>

#include "yhdn/algebra.hpp"
#include "yhdn/laurent.hpp"
#include "yhdn/perm.hpp"
#include "yhdn/rational.hpp"

namespace yhdn::testing {

inline std::map<BasisWord, Laurent> left_word_product(int d, int n,
                                                      const BasisWord& a,
                                                      const BasisWord& b) {
  const auto mod_d = [d](int v) { return ((v % d) + d) % d; };

  // (t^k g_w)(t^l g_v) = t^{k + w.l} (g_w g_v); the outer framing commutes
  // with everything and is added at the end
  std::vector<int> outer = a.framing;
  for (int j = 0; j < n; ++j)
    outer[static_cast<size_t>(a.perm(j))] =
        mod_d(outer[static_cast<size_t>(a.perm(j))] +
              b.framing[static_cast<size_t>(j)]);

  const Laurent split = (Laurent::q_power(1) - Laurent::q_power(-1))
                            .scaled(Cyclotomic(Rational(1, d)));

  // peel letters of w from the right end; each one multiplies the partial
  // product from the left, sliding through any framing created so far
  std::map<BasisWord, Laurent> state;
  state.emplace(BasisWord(std::vector<int>(static_cast<size_t>(n), 0), b.perm),
                Laurent(1));
  const std::vector<int> letters = a.perm.reduced_word();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const int i = *it;
    const Perm s = Perm::adjacent_transposition(n, i);
    std::map<BasisWord, Laurent> next;
    for (const auto& [word, c] : state) {
      std::vector<int> f = word.framing;  // g_s t^f = t^{s.f} g_s
      std::swap(f[static_cast<size_t>(i)], f[static_cast<size_t>(i + 1)]);
      const Perm& u = word.perm;
      const Perm su = s.after(u);
      next[BasisWord(f, su)] += c;
      // position of value i after position of value i+1 means length drops:
      // g_s g_u = g_{su} + (q - q^{-1}) e_i g_u
      const Perm uinv = u.inverse();
      if (uinv(i) > uinv(i + 1)) {
        const Laurent ec = c * split;
        for (int r = 0; r < d; ++r) {
          std::vector<int> ef = f;
          ef[static_cast<size_t>(i)] = mod_d(ef[static_cast<size_t>(i)] + r);
          ef[static_cast<size_t>(i + 1)] =
              mod_d(ef[static_cast<size_t>(i + 1)] - r);
          next[BasisWord(std::move(ef), u)] += ec;
        }
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    state = std::move(next);
  }

  std::map<BasisWord, Laurent> out;
  for (const auto& [word, c] : state) {
    std::vector<int> f = word.framing;
    for (int j = 0; j < n; ++j)
      f[static_cast<size_t>(j)] =
          mod_d(f[static_cast<size_t>(j)] + outer[static_cast<size_t>(j)]);
    out[BasisWord(std::move(f), word.perm)] += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace yhdn::testing
