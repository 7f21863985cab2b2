#pragma once

#include <functional>
#include <vector>

#include "ineq/catalog.hpp"

namespace ineq {
namespace detail {

// Internal registry row: metadata plus the factories that bind parameters
// into executable descriptors.
struct EntryDef {
  CatalogEntryInfo info;
  // Validates a complete (defaults-merged) parameter map.
  std::function<void(const ParamMap&)> validate;
  // Draws suite parameters for a side; null means "use default_params".
  std::function<ParamMap(Rng&, Side)> sample_params;
  // Builds the descriptor for a side. Only called with Side::Complement when
  // info.has_complement.
  std::function<InequalityDescriptor(const ParamMap&, Side)> build;
};

const std::vector<EntryDef>& entry_registry();
const EntryDef& find_entry(const std::string& name);  // throws UnknownNameError

}  // namespace detail
}  // namespace ineq
