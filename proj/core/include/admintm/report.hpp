#pragma once

#include <span>
#include <string>

#include "admintm/engine.hpp"
#include "admintm/enum_names.hpp"

namespace admintm {

enum class ReportFormat { Markdown, Json, Summary };
enum class GroupBy { Category, Stride };

template <>
struct EnumNames<ReportFormat> {
  static constexpr std::array<std::pair<ReportFormat, std::string_view>, 3> entries{{
      {ReportFormat::Markdown, "markdown"},
      {ReportFormat::Json, "json"},
      {ReportFormat::Summary, "summary"},
  }};
};
template <>
struct EnumNames<GroupBy> {
  static constexpr std::array<std::pair<GroupBy, std::string_view>, 2> entries{{
      {GroupBy::Category, "category"},
      {GroupBy::Stride, "stride"},
  }};
};

struct ReportOptions {
  ReportFormat format = ReportFormat::Markdown;
  bool include_not_applicable = true;
  GroupBy group_by = GroupBy::Category;
};

// Deterministic rendering; equal inputs give byte-identical text.
//   markdown: one section per category (Dataset, Model, Input) or per STRIDE
//             category, a pipe-table row per finding
//   json:     the canonical result document
//   summary:  counts per status and per STRIDE category
std::string render(const ThreatModelResult& result, const ReportOptions& options = {});

// Side-by-side status table, one column per result. Throws MinimumTwo for
// fewer than two results and TaxonomyVersionMismatch when versions differ.
std::string compare(std::span<const ThreatModelResult> results);

}  // namespace admintm
