#pragma once

#include <functional>
#include <vector>

#include "qmock/report.hpp"

namespace qmock {

// Ordered list of the exact q-series identity ids, as run by `identity all`.
const std::vector<std::string>& catalog_ids();

// Verify one catalog identity up to the given order. Unknown ids reject.
// DUALITY_K2/K4/K6 are included; plain "DUALITY" verifies a given k via
// verify_duality below.
IdentityReport verify_identity(const std::string& id, const Rat& order);

IdentityReport verify_duality(int k, const Rat& order);

// Every catalog identity in order.
std::vector<IdentityReport> verify_all(const Rat& order);

} // namespace qmock
