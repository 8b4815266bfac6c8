#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bsc/formula.hpp"

namespace bsc {

// The four formula positions of G => D | P => S.
enum class Slot : std::uint8_t { Ant1 = 0, Suc1 = 1, Ant2 = 2, Suc2 = 3 };
inline constexpr std::array<Slot, 4> kSlots{Slot::Ant1, Slot::Suc1, Slot::Ant2, Slot::Suc2};

std::string_view slot_name(Slot s);
std::optional<Slot> slot_from_name(std::string_view name);

struct Placement {
  Slot slot;
  int arg_index;  // 0 = first immediate subformula, 1 = second
  bool operator==(const Placement&) const = default;
};

struct PremissSchema {
  std::vector<Placement> placements;
  bool operator==(const PremissSchema&) const = default;
};

struct RuleSchema {
  std::string name;
  Connective connective = Connective::Neg;
  int arity = 1;
  Slot principal_slot = Slot::Ant1;
  std::vector<PremissSchema> premisses;
};

// Any bisequent with a connective-rooted formula in slot is axiomatic.
struct AxiomSchema {
  Connective connective;
  Slot slot;
  bool operator==(const AxiomSchema&) const = default;
};

std::string describe(const RuleSchema& r);

}  // namespace bsc
