#include "fge/errors.hpp"

#include <fmt/format.h>

namespace fge::detail {

void throw_domain(const std::string& quantity, double value, const std::string& requirement) {
  throw DomainError(fmt::format("{} = {:.17g} is out of domain: {}", quantity, value, requirement));
}

}  // namespace fge::detail
