#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "admintm/engine.hpp"
#include "admintm/enum_names.hpp"
#include "admintm/process_model.hpp"
#include "admintm/profile.hpp"

namespace admintm {

inline constexpr std::string_view kFormatVersion = "admin-tm/1";

enum class DocumentKind { Profile, GraphOverlay, Result };

template <>
struct EnumNames<DocumentKind> {
  static constexpr std::array<std::pair<DocumentKind, std::string_view>, 3> entries{{
      {DocumentKind::Profile, "profile"},
      {DocumentKind::GraphOverlay, "graph_overlay"},
      {DocumentKind::Result, "result"},
  }};
};

// User-authored graph customisations, applied after the profile-derived ones.
struct GraphOverlay {
  std::vector<GraphEdit> edits;

  bool operator==(const GraphOverlay&) const = default;
};

struct Document {
  std::string format_version{kFormatVersion};
  DocumentKind kind = DocumentKind::Profile;
  std::variant<SoftwareProfile, GraphOverlay, ThreatModelResult> body;
  // Set by parse() on result documents produced under another taxonomy
  // version. Never serialized.
  bool stale_taxonomy = false;

  static Document of(SoftwareProfile profile);
  static Document of(GraphOverlay overlay);
  static Document of(ThreatModelResult result);

  const SoftwareProfile& profile() const { return std::get<SoftwareProfile>(body); }
  const GraphOverlay& overlay() const { return std::get<GraphOverlay>(body); }
  const ThreatModelResult& result() const { return std::get<ThreatModelResult>(body); }

  bool operator==(const Document&) const = default;
};

// Strict parse of a UTF-8 JSON document. Unknown fields, unknown enum values
// and wrong JSON types are errors. Throws admintm::Error with SyntaxError
// (message carries line and column), UnknownField, MissingField,
// TypeMismatch, MalformedValue, BadEnumValue, VersionMismatch, KindMismatch,
// or the profile's InvariantViolation.
Document parse(std::string_view text, DocumentKind expected_kind);

// Canonical form: schema key order, two-space indent, trailing newline.
std::string serialize(const Document& doc);

// Read-only export of the taxonomy for documentation tooling.
std::string serialize_taxonomy(const ThreatTaxonomy& tax);

}  // namespace admintm
