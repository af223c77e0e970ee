#include "ecohome/scenarios.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ecohome {

ScenarioFormatError::ScenarioFormatError(const std::string& source, std::size_t line,
                                         const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message) {}

std::vector<Scenario> parse_scenarios(std::string_view text, const std::string& source_name) {
  std::vector<Scenario> scenarios;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos || line.front() == '#') continue;

    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw ScenarioFormatError(source_name, line_no, "missing TAB after id");
    Scenario s{std::string(line.substr(0, tab)), std::string(line.substr(tab + 1))};
    if (s.id.empty()) throw ScenarioFormatError(source_name, line_no, "empty scenario id");
    if (s.prompt.empty()) throw ScenarioFormatError(source_name, line_no, "empty scenario prompt");
    if (std::any_of(scenarios.begin(), scenarios.end(), [&](const Scenario& o) { return o.id == s.id; })) {
      throw ScenarioFormatError(source_name, line_no, "duplicate scenario id '" + s.id + "'");
    }
    scenarios.push_back(std::move(s));
  }
  return scenarios;
}

std::vector<Scenario> load_scenarios(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open scenario file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenarios(buffer.str(), path.string());
}

}  // namespace ecohome
