#include "admintm/report.hpp"

#include <sstream>

#include "admintm/error.hpp"
#include "admintm/io_schema.hpp"

namespace admintm {

namespace {

std::string cell(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '|') out += '\\';
    if (c == '\n') {
      out += ' ';
      continue;
    }
    out += c;
  }
  return out;
}

template <typename Range, typename Fn>
std::string join(const Range& items, Fn&& fn) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ", ";
    out += fn(item);
  }
  return out;
}

std::string_view section_title(Category c) {
  switch (c) {
    case Category::Data: return "Dataset";
    case Category::Model: return "Model";
    case Category::Input: return "Input";
  }
  return "?";
}

std::string_view stride_title(Stride s) {
  switch (s) {
    case Stride::Spoofing: return "Spoofing";
    case Stride::Tampering: return "Tampering";
    case Stride::Repudiation: return "Repudiation";
    case Stride::InformationDisclosure: return "Information Disclosure";
    case Stride::DenialOfService: return "Denial of Service";
    case Stride::ElevationOfPrivilege: return "Elevation of Privilege";
  }
  return "?";
}

std::string display_name(const ThreatModelResult& r, std::size_t index) {
  return r.profile.name.empty() ? "result " + std::to_string(index + 1) : r.profile.name;
}

class MarkdownWriter {
 public:
  MarkdownWriter(const ThreatModelResult& result, const ReportOptions& options)
      : result_(result), options_(options) {}

  std::string write() {
    const auto& tax = taxonomy();
    out_ << "# Threat model: " << cell(display_name(result_, 0)) << "\n\n";
    out_ << "- Taxonomy: " << result_.taxonomy_version << "\n";
    out_ << "- Findings: " << result_.findings.size() << " (" << result_.count(Status::Applicable)
         << " applicable, " << result_.count(Status::AcceptedRisk) << " accepted risk, "
         << result_.count(Status::NotApplicable) << " not applicable)\n";

    if (options_.group_by == GroupBy::Category) {
      for (const AttackClass* cat : tax.categories()) {
        section(section_title(cat->category), [&](const ThreatFinding& f) {
          const AttackClass* cls = tax.find(f.attack);
          return cls != nullptr && cls->category == cat->category;
        });
      }
    } else {
      for (Stride s : enum_values<Stride>()) {
        section(stride_title(s), [&](const ThreatFinding& f) { return f.stride.contains(s); });
      }
    }
    return out_.str();
  }

 private:
  template <typename Pred>
  void section(std::string_view title, Pred&& belongs) {
    out_ << "\n## " << title << "\n\n";
    std::size_t rows = 0;
    for (const ThreatFinding& f : result_.findings) {
      if (!belongs(f)) continue;
      if (!options_.include_not_applicable && f.status() == Status::NotApplicable) continue;
      if (rows++ == 0) {
        out_ << "| Attack | Title | Status | Reason | STRIDE | Attachments | Rationale |\n";
        out_ << "|---|---|---|---|---|---|---|\n";
      }
      row(f);
    }
    if (rows == 0) out_ << "_No findings._\n";
  }

  void row(const ThreatFinding& f) {
    const AttackClass* cls = taxonomy().find(f.attack);
    std::string rationale = f.applicability.rationale;
    if (!f.variants.empty()) {
      rationale += " Variants: " + join(f.variants, [](const std::string& v) { return v; }) + ".";
    }
    out_ << "| " << cell(f.attack.value) << " | " << cell(cls != nullptr ? cls->title : "") << " | "
         << enum_name(f.status()) << " | " << enum_name(f.applicability.reason_code) << " | "
         << join(f.stride, [](Stride s) { return std::string(enum_name(s)); }) << " | "
         << cell(join(f.attachments,
                      [&](const NodeId& id) {
                        const Node* n = result_.graph.find(id);
                        return n != nullptr ? n->label : id.value;
                      }))
         << " | " << cell(rationale) << " |\n";
  }

  const ThreatModelResult& result_;
  const ReportOptions& options_;
  std::ostringstream out_;
};

std::string summary(const ThreatModelResult& r) {
  std::ostringstream out;
  out << "profile: " << r.profile.name << "\n";
  out << "taxonomy: " << r.taxonomy_version << "\n";
  out << "findings: " << r.findings.size() << "\n";
  for (Status s : enum_values<Status>()) out << enum_name(s) << ": " << r.count(s) << "\n";
  out << "stride (applicable + accepted_risk):\n";
  for (Stride s : enum_values<Stride>()) {
    std::size_t n = 0;
    for (const ThreatFinding& f : r.findings) {
      if (f.status() != Status::NotApplicable && f.stride.contains(s)) ++n;
    }
    out << "  " << enum_name(s) << ": " << n << "\n";
  }
  return out.str();
}

}  // namespace

std::string render(const ThreatModelResult& result, const ReportOptions& options) {
  switch (options.format) {
    case ReportFormat::Markdown:
      return MarkdownWriter(result, options).write();
    case ReportFormat::Json:
      return serialize(Document::of(result));
    case ReportFormat::Summary:
      return summary(result);
  }
  return {};
}

std::string compare(std::span<const ThreatModelResult> results) {
  if (results.size() < 2) {
    throw Error(ErrorCode::MinimumTwo, "compare needs at least two results, got " + std::to_string(results.size()));
  }
  for (const ThreatModelResult& r : results) {
    if (r.taxonomy_version != results.front().taxonomy_version) {
      throw Error(ErrorCode::TaxonomyVersionMismatch, "cannot compare taxonomy versions '" +
                                                          results.front().taxonomy_version + "' and '" +
                                                          r.taxonomy_version + "'");
    }
  }

  std::ostringstream out;
  out << "# Threat comparison\n\n";
  out << "| Attack |";
  for (std::size_t i = 0; i < results.size(); ++i) out << " " << cell(display_name(results[i], i)) << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < results.size(); ++i) out << "---|";
  out << "\n";
  for (const ThreatFinding& f : results.front().findings) {
    out << "| " << cell(f.attack.value) << " |";
    for (const ThreatModelResult& r : results) {
      const ThreatFinding* match = r.find(f.attack);
      out << " " << (match != nullptr ? enum_name(match->status()) : std::string_view("-")) << " |";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace admintm
