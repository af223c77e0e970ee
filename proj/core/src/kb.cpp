#include "ecohome/kb.hpp"

#include <fstream>
#include <sstream>

namespace ecohome {

namespace {

constexpr std::array<std::string_view, 4> kFacetNames = {"area", "stage", "type", "ghg"};

constexpr std::array<std::string_view, 6> kFieldNames = {
    "area", "stage", "type", "ghg", "theAdvice", "rationale"};

bool is_control(unsigned char c) { return c < 0x20 || c == 0x7f; }

bool is_blank(std::string_view s) {
  return s.find_first_not_of(' ') == std::string_view::npos;
}

std::string format_parse_error(const ParseError& e) {
  std::ostringstream out;
  out << "line " << e.line << ", column " << e.column << ": " << e.message;
  return out.str();
}

}  // namespace

std::string_view facet_name(FacetKey key) noexcept { return kFacetNames[facet_index(key)]; }

std::optional<FacetKey> parse_facet(std::string_view name) noexcept {
  for (FacetKey key : kDrillDownOrder) {
    if (kFacetNames[facet_index(key)] == name) return key;
  }
  return std::nullopt;
}

const std::string& AdviceFact::facet(FacetKey key) const noexcept {
  switch (key) {
    case FacetKey::Area: return area;
    case FacetKey::Stage: return stage;
    case FacetKey::Type: return facet_type;
    case FacetKey::Ghg: break;
  }
  return ghg;
}

std::optional<std::string> validate_fact(const AdviceFact& fact) {
  const std::array<const std::string*, 6> fields = {
      &fact.area, &fact.stage, &fact.facet_type, &fact.ghg, &fact.advice_text, &fact.rationale};
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const std::string& value = *fields[i];
    for (unsigned char c : value) {
      if (is_control(c)) {
        return std::string(kFieldNames[i]) + " contains a control character";
      }
    }
    if (is_blank(value)) return std::string(kFieldNames[i]) + " is empty";
  }
  return std::nullopt;
}

KnowledgeBase::KnowledgeBase(std::vector<AdviceFact> facts, std::string source_name)
    : facts_(std::move(facts)), source_name_(std::move(source_name)) {
  for (std::size_t i = 0; i < facts_.size(); ++i) {
    if (auto problem = validate_fact(facts_[i])) {
      throw std::invalid_argument("fact " + std::to_string(i + 1) + ": " + *problem);
    }
  }
}

KbParseException::KbParseException(ParseError error)
    : std::runtime_error(format_parse_error(error)), error_(std::move(error)) {}

KnowledgeBase load_kb_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open knowledge base '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("error reading knowledge base '" + path.string() + "'");
  return parse_kb(buffer.str(), path.string());
}

std::string quote_kb_value(std::string_view value) {
  std::string out;
  out.reserve(value.size() + 2);
  out.push_back('\'');
  for (char c : value) {
    if (c == '\'') out.push_back('\'');
    out.push_back(c);
  }
  out.push_back('\'');
  return out;
}

std::string serialize_kb(const KnowledgeBase& kb) {
  std::string out;
  for (const AdviceFact& f : kb.facts()) {
    out += "advice(area(" + quote_kb_value(f.area) + "),\n";
    out += "    stage(" + quote_kb_value(f.stage) + "),\n";
    out += "    type(" + quote_kb_value(f.facet_type) + "),\n";
    out += "    ghg(" + quote_kb_value(f.ghg) + "),\n";
    out += "    theAdvice(" + quote_kb_value(f.advice_text) + "),\n";
    out += "    rationale(" + quote_kb_value(f.rationale) + ")).\n";
  }
  return out;
}

}  // namespace ecohome
