#pragma once

#include <random>
#include <string>
#include <vector>

#include "bsc/formula.hpp"

namespace gen {

// All formulas over atoms with at most max_conn connectives from sig, ordered
// by connective count.
inline std::vector<bsc::Formula> enumerate(const bsc::Signature& sig,
                                           const std::vector<std::string>& atoms, int max_conn) {
  std::vector<std::vector<bsc::Formula>> by_size(max_conn + 1);
  for (const auto& a : atoms) by_size[0].push_back(bsc::Formula::atom(a));
  auto conns = sig.connectives();
  for (int n = 1; n <= max_conn; ++n) {
    for (auto c : conns) {
      if (bsc::arity(c) == 1) {
        for (const auto& f : by_size[n - 1]) by_size[n].push_back(bsc::Formula::unary(c, f));
      } else {
        for (int i = 0; i <= n - 1; ++i)
          for (const auto& f : by_size[i])
            for (const auto& g : by_size[n - 1 - i]) by_size[n].push_back(bsc::Formula::binary(c, f, g));
      }
    }
  }
  std::vector<bsc::Formula> out;
  for (auto& v : by_size) out.insert(out.end(), v.begin(), v.end());
  return out;
}

// Random formula with exactly n connectives.
inline bsc::Formula random_formula(std::mt19937_64& rng, const bsc::Signature& sig,
                                   const std::vector<std::string>& atoms, int n) {
  if (n == 0) return bsc::Formula::atom(atoms[rng() % atoms.size()]);
  auto conns = sig.connectives();
  auto c = conns[rng() % conns.size()];
  if (bsc::arity(c) == 1) return bsc::Formula::unary(c, random_formula(rng, sig, atoms, n - 1));
  int left = static_cast<int>(rng() % n);
  return bsc::Formula::binary(c, random_formula(rng, sig, atoms, left),
                              random_formula(rng, sig, atoms, n - 1 - left));
}

}  // namespace gen
