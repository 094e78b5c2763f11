#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "admintm/enum_names.hpp"
#include "admintm/process_model.hpp"
#include "admintm/profile.hpp"
#include "admintm/taxonomy.hpp"

namespace admintm {

enum class Status { Applicable, NotApplicable, AcceptedRisk };

template <>
struct EnumNames<Status> {
  static constexpr std::array<std::pair<Status, std::string_view>, 3> entries{{
      {Status::Applicable, "applicable"},
      {Status::NotApplicable, "not_applicable"},
      {Status::AcceptedRisk, "accepted_risk"},
  }};
};

enum class ReasonCode {
  DataPublic,
  PrivateData,
  QueryablePrivateData,
  NoQuerySurface,
  UntrustedDataSource,
  RepositoryCompromisePossible,
  TrustedDataSource,
  PipelineAccessConceivable,
  PipelineAccessExcluded,
  ModelOpenSource,
  ProprietaryQueryableModel,
  PromptInput,
  NoPromptInput,
  PubliclyExposed,
  RestrictedClients,
  NotPubliclyExposed,
  ModalityMatch,
  ModalityAbsent,
  PhysicalCapture,
  NoPhysicalCapture,
  UntrustedTransport,
  TrustedTransport,
  LocalOnlyTransport,
};

template <>
struct EnumNames<ReasonCode> {
  static constexpr std::array<std::pair<ReasonCode, std::string_view>, 23> entries{{
      {ReasonCode::DataPublic, "data_public"},
      {ReasonCode::PrivateData, "private_data"},
      {ReasonCode::QueryablePrivateData, "queryable_private_data"},
      {ReasonCode::NoQuerySurface, "no_query_surface"},
      {ReasonCode::UntrustedDataSource, "untrusted_data_source"},
      {ReasonCode::RepositoryCompromisePossible, "repository_compromise_possible"},
      {ReasonCode::TrustedDataSource, "trusted_data_source"},
      {ReasonCode::PipelineAccessConceivable, "pipeline_access_conceivable"},
      {ReasonCode::PipelineAccessExcluded, "pipeline_access_excluded"},
      {ReasonCode::ModelOpenSource, "model_open_source"},
      {ReasonCode::ProprietaryQueryableModel, "proprietary_queryable_model"},
      {ReasonCode::PromptInput, "prompt_input"},
      {ReasonCode::NoPromptInput, "no_prompt_input"},
      {ReasonCode::PubliclyExposed, "publicly_exposed"},
      {ReasonCode::RestrictedClients, "restricted_clients"},
      {ReasonCode::NotPubliclyExposed, "not_publicly_exposed"},
      {ReasonCode::ModalityMatch, "modality_match"},
      {ReasonCode::ModalityAbsent, "modality_absent"},
      {ReasonCode::PhysicalCapture, "physical_capture"},
      {ReasonCode::NoPhysicalCapture, "no_physical_capture"},
      {ReasonCode::UntrustedTransport, "untrusted_transport"},
      {ReasonCode::TrustedTransport, "trusted_transport"},
      {ReasonCode::LocalOnlyTransport, "local_only_transport"},
  }};
};

// Status each reason code implies; a finding whose code disagrees is corrupt.
Status implied_status(ReasonCode code);

struct Applicability {
  Status status = Status::NotApplicable;
  ReasonCode reason_code = ReasonCode::DataPublic;
  std::string rationale;

  bool operator==(const Applicability&) const = default;
};

struct ThreatFinding {
  AttackId attack;
  Applicability applicability;
  StrideSet stride;
  std::vector<NodeId> attachments;  // graph node order; empty iff not applicable
  std::vector<std::string> variants;

  Status status() const { return applicability.status; }
  bool operator==(const ThreatFinding&) const = default;
};

struct ThreatModelResult {
  SoftwareProfile profile;
  ProcessGraph graph;  // customised, wildcards expanded
  std::vector<ThreatFinding> findings;  // one per taxonomy leaf, taxonomy order
  std::string taxonomy_version;
  std::string tool_version;
  std::optional<std::string> created_at;  // ISO-8601 UTC; absent when reproducible

  std::size_t count(Status status) const;
  const ThreatFinding* find(const AttackId& attack) const;
  bool operator==(const ThreatModelResult&) const = default;
};

// Evaluates the fixed rule table for one leaf. Throws UnknownAttack for ids
// that are not leaves.
Applicability applicability(const AttackId& attack, const SoftwareProfile& profile);

// The attack's attachment selector restricted to nodes of `graph`, in graph
// node order.
std::vector<NodeId> attach(const AttackId& attack, const ProcessGraph& graph);

// One finding per taxonomy leaf. Throws Error(InvalidGraph) if the graph
// fails validate() and InvariantViolation for an invalid profile. Wildcards
// are expanded first; created_at is left empty.
ThreatModelResult enumerate_threats(const ProcessGraph& graph, const SoftwareProfile& profile);

// Full pipeline: template graph, profile-derived edits, overlay edits,
// wildcard expansion, enumeration.
ThreatModelResult model_threats(const SoftwareProfile& profile, std::span<const GraphEdit> overlay = {});

ProcessGraph customised_graph(const SoftwareProfile& profile, std::span<const GraphEdit> overlay = {});

std::string utc_timestamp_now();

}  // namespace admintm
