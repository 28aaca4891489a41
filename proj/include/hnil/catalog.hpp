#pragma once

#include "hnil/errors.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hnil {

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::string text;
};

class UnknownExampleError : public Error {
 public:
  using Error::Error;
};

const std::vector<CatalogEntry>& catalog();
std::vector<std::string> example_names();

/// Model text of a builtin example; throws UnknownExampleError listing the
/// valid names.
std::string builtin_example(std::string_view name);

}  // namespace hnil
