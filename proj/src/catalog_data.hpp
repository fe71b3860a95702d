#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hcx::detail {

/// (id, declarative text) in canonical catalog order.
const std::vector<std::pair<std::string, std::string>>& catalog_sources();

} // namespace hcx::detail
