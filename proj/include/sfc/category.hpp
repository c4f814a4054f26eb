#pragma once

// In-memory form of a category data file: one of fusion data, superfusion
// data, or a finite group with cocycles, plus free-form string metadata.

#include <map>
#include <optional>
#include <string>

#include "sfc/cocycles.hpp"
#include "sfc/fusion.hpp"
#include "sfc/superfusion.hpp"

namespace sfc {

enum class Kind { fusion, superfusion, group_cocycles };

std::string to_string(Kind k);
std::optional<Kind> parse_kind(const std::string& s);

struct GroupCocycleData {
  GroupTable group;
  std::optional<TwoCocycleZ2> omega;
  /// F~ of a 3-supercocycle; requires omega.
  std::optional<ThreeCocycle> supercocycle;
  std::optional<ThreeCocycle> cocycle;

  friend bool operator==(const GroupCocycleData&, const GroupCocycleData&) = default;
};

struct CategoryFile {
  Kind kind = Kind::fusion;
  /// Set for Kind::fusion.
  std::optional<FusionData> fusion;
  /// Set for Kind::superfusion.
  std::optional<SuperFusionData> super;
  /// 6j table (fermionic for superfusion data); absent means no table.
  std::optional<SixJTable> sixj;
  /// Set for Kind::group_cocycles.
  std::optional<GroupCocycleData> group;
  std::map<std::string, std::string> metadata;

  /// Labels and multiplicities of the fusion or superfusion payload.
  const FusionData& rules() const;

  friend bool operator==(const CategoryFile&, const CategoryFile&) = default;
};

}  // namespace sfc
