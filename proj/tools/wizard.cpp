#include "wizard.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "admintm/error.hpp"

namespace admintm::cli {

namespace {

std::string trim(const std::string& s) {
  auto begin = std::find_if_not(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
  auto end = std::find_if_not(s.rbegin(), s.rend(), [](unsigned char c) { return std::isspace(c); }).base();
  return begin < end ? std::string(begin, end) : std::string();
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::optional<std::string> resolve_option(const ProfileQuestion& q, const std::string& token) {
  const std::string t = lower(trim(token));
  if (!t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); })) {
    std::size_t n = std::stoul(t);
    if (n >= 1 && n <= q.options.size()) return q.options[n - 1];
    return std::nullopt;
  }
  auto it = std::find(q.options.begin(), q.options.end(), t);
  if (it == q.options.end()) return std::nullopt;
  return *it;
}

std::string show(const Answer& a) {
  if (const auto* b = std::get_if<bool>(&a)) return *b ? "yes" : "no";
  if (const auto* s = std::get_if<std::string>(&a)) return *s;
  std::string out;
  for (const auto& item : std::get<std::vector<std::string>>(a)) {
    if (!out.empty()) out += ", ";
    out += item;
  }
  return out;
}

}  // namespace

ParsedAnswer parse_answer(const ProfileQuestion& q, const std::string& line) {
  const std::string text = lower(trim(line));
  switch (q.answer_kind) {
    case AnswerKind::Flag:
      if (text.empty() && q.default_flag) return {*q.default_flag, {}};
      if (text == "y" || text == "yes") return {true, {}};
      if (text == "n" || text == "no") return {false, {}};
      return {std::nullopt, "please answer yes or no"};
    case AnswerKind::Choice: {
      if (auto option = resolve_option(q, text)) return {*option, {}};
      return {std::nullopt, "please pick one of the listed options (name or number)"};
    }
    case AnswerKind::MultiChoice: {
      std::string normalised = text;
      std::replace(normalised.begin(), normalised.end(), ',', ' ');
      std::istringstream tokens(normalised);
      std::vector<std::string> picked;
      std::string token;
      while (tokens >> token) {
        auto option = resolve_option(q, token);
        if (!option) return {std::nullopt, "'" + token + "' is not one of the listed options"};
        if (std::find(picked.begin(), picked.end(), *option) == picked.end()) picked.push_back(*option);
      }
      if (picked.empty()) return {std::nullopt, "pick at least one option"};
      return {picked, {}};
    }
  }
  return {std::nullopt, "unsupported question"};
}

std::string Wizard::bold(const std::string& text) const {
  return color_ ? "\x1b[1m" + text + "\x1b[0m" : text;
}

std::optional<std::string> Wizard::read_line() {
  std::string line;
  if (!std::getline(in_, line)) return std::nullopt;
  return line;
}

std::optional<std::string> Wizard::ask_name() {
  prompt_ << bold("Name of the AI-based software") << ": " << std::flush;
  auto line = read_line();
  if (!line) return std::nullopt;
  return trim(*line);
}

std::optional<Answer> Wizard::ask(const ProfileQuestion& q, std::size_t number, std::size_t total) {
  for (;;) {
    prompt_ << "\n[" << number << "/" << total << "] " << bold(q.prompt) << "\n";
    if (q.answer_kind == AnswerKind::Flag) {
      prompt_ << (q.default_flag.value_or(false) ? "[Y/n]" : "[y/N]") << ": " << std::flush;
    } else {
      for (std::size_t i = 0; i < q.options.size(); ++i) prompt_ << "  " << (i + 1) << ") " << q.options[i] << "\n";
      prompt_ << (q.answer_kind == AnswerKind::MultiChoice ? "choices (comma separated)" : "choice") << ": "
              << std::flush;
    }
    auto line = read_line();
    if (!line) return std::nullopt;
    ParsedAnswer parsed = parse_answer(q, *line);
    if (parsed.answer) return parsed.answer;
    prompt_ << "  ! " << parsed.error << "\n";
  }
}

std::optional<bool> Wizard::confirm(const Answers& answers) {
  prompt_ << "\n" << bold("Review your answers") << "\n";
  for (const auto& [key, value] : answers) prompt_ << "  " << key << ": " << show(value) << "\n";
  for (;;) {
    prompt_ << "Proceed with these answers? [y/n]: " << std::flush;
    auto line = read_line();
    if (!line) return std::nullopt;
    const std::string t = lower(trim(*line));
    if (t == "y" || t == "yes") return true;
    if (t == "n" || t == "no") return false;
  }
}

std::optional<SoftwareProfile> Wizard::run() {
  const auto& questions = question_set();
  for (;;) {
    Answers answers;
    auto name = ask_name();
    if (!name) return std::nullopt;
    answers.emplace(std::string(kProfileNameKey), *name);
    for (std::size_t i = 0; i < questions.size(); ++i) {
      auto answer = ask(questions[i], i + 1, questions.size());
      if (!answer) return std::nullopt;
      answers.emplace(questions[i].key, std::move(*answer));
    }

    SoftwareProfile profile;
    try {
      profile = build_profile(answers);
    } catch (const Error& e) {
      prompt_ << "\n  ! " << e.what() << "\n  Starting over.\n\n";
      continue;
    }
    auto ok = confirm(answers);
    if (!ok) return std::nullopt;
    if (*ok) return profile;
    prompt_ << "\nStarting over.\n\n";
  }
}

}  // namespace admintm::cli
