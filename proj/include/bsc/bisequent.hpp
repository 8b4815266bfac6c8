#pragma once

#include <array>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bsc/formula.hpp"
#include "bsc/schema.hpp"

namespace bsc {

class LogicDef;

struct Sequent {
  std::vector<Formula> antecedent;
  std::vector<Formula> succedent;
};

// G => D | P => S. Slots are multisets; equality ignores order.
struct Bisequent {
  std::array<std::vector<Formula>, 4> slots;

  Bisequent() = default;
  Bisequent(std::vector<Formula> g, std::vector<Formula> d, std::vector<Formula> p,
            std::vector<Formula> s)
      : slots{std::move(g), std::move(d), std::move(p), std::move(s)} {}

  std::vector<Formula>& operator[](Slot s) { return slots[static_cast<int>(s)]; }
  const std::vector<Formula>& operator[](Slot s) const { return slots[static_cast<int>(s)]; }

  Sequent first() const { return {slots[0], slots[1]}; }
  Sequent second() const { return {slots[2], slots[3]}; }

  std::size_t size() const;
  friend bool operator==(const Bisequent& a, const Bisequent& b);
};

Bisequent parse_bisequent(std::string_view text, const Signature& sig);
std::string render(const Bisequent& b);

// Each slot sorted by the structural formula order.
Bisequent canonical(Bisequent b);
// Slot-wise multiset union.
Bisequent join(const Bisequent& a, const Bisequent& b);

std::set<std::string> atoms(const Bisequent& b);

bool is_atomic(const Bisequent& b);
bool is_axiomatic(const LogicDef& logic, const Bisequent& b);
// Only the identity clauses G∩D, G∩S, P∩S.
bool has_identity_clash(const Bisequent& b);

}  // namespace bsc
