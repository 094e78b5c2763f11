#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "admintm/profile.hpp"

namespace admintm::cli {

// Terminal questionnaire: one question per prompt, re-asks on invalid
// answers, ends with a confirmation screen. Prompts go to `prompt`.
class Wizard {
 public:
  Wizard(std::istream& in, std::ostream& prompt, bool color = false) : in_(in), prompt_(prompt), color_(color) {}

  // nullopt when input ends before the profile is confirmed.
  std::optional<SoftwareProfile> run();

 private:
  std::optional<std::string> read_line();
  std::optional<Answer> ask(const ProfileQuestion& question, std::size_t number, std::size_t total);
  std::optional<std::string> ask_name();
  std::optional<bool> confirm(const Answers& answers);

  std::string bold(const std::string& text) const;

  std::istream& in_;
  std::ostream& prompt_;
  bool color_;
};

// Parses one typed answer. Choices accept an option name or its 1-based
// number; multi-choices a comma or space separated list of those; flags
// y/yes/n/no (empty selects the default). Returns an error message on
// failure.
struct ParsedAnswer {
  std::optional<Answer> answer;
  std::string error;
};
ParsedAnswer parse_answer(const ProfileQuestion& question, const std::string& line);

}  // namespace admintm::cli
