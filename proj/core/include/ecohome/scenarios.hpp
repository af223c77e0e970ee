#pragma once

// Study scenarios: a line-oriented `id<TAB>prompt` file. Blank lines and
// lines starting with `#` are ignored.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ecohome {

struct Scenario {
  std::string id;
  std::string prompt;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

class ScenarioFormatError : public std::runtime_error {
 public:
  ScenarioFormatError(const std::string& source, std::size_t line, const std::string& message);
};

std::vector<Scenario> parse_scenarios(std::string_view text, const std::string& source_name = "<input>");
std::vector<Scenario> load_scenarios(const std::filesystem::path& path);

}  // namespace ecohome
