#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "admintm/enum_names.hpp"
#include "admintm/process_model.hpp"

namespace admintm {

enum class DataVisibility { Public, Private };
enum class DataSourceTrust { FullyTrusted, PartiallyTrusted, Untrusted };
enum class ModelOpenness { OpenSource, Proprietary };
enum class QueryAccess { Public, Restricted, None };
enum class DeploymentExposure { PublicInternet, RestrictedClients, Offline };
enum class InputModality {
  Image,
  Video,
  NaturalLanguageText,
  PromptInterface,
  Audio,
  TimeSeries,
  Tabular,
  NetworkTelemetry,
};
enum class TransportSecurity { UntrustedNetwork, TrustedProvider, LocalOnly };

template <>
struct EnumNames<DataVisibility> {
  static constexpr std::array<std::pair<DataVisibility, std::string_view>, 2> entries{{
      {DataVisibility::Public, "public"},
      {DataVisibility::Private, "private"},
  }};
};
template <>
struct EnumNames<DataSourceTrust> {
  static constexpr std::array<std::pair<DataSourceTrust, std::string_view>, 3> entries{{
      {DataSourceTrust::FullyTrusted, "fully_trusted"},
      {DataSourceTrust::PartiallyTrusted, "partially_trusted"},
      {DataSourceTrust::Untrusted, "untrusted"},
  }};
};
template <>
struct EnumNames<ModelOpenness> {
  static constexpr std::array<std::pair<ModelOpenness, std::string_view>, 2> entries{{
      {ModelOpenness::OpenSource, "open_source"},
      {ModelOpenness::Proprietary, "proprietary"},
  }};
};
template <>
struct EnumNames<QueryAccess> {
  static constexpr std::array<std::pair<QueryAccess, std::string_view>, 3> entries{{
      {QueryAccess::Public, "public"},
      {QueryAccess::Restricted, "restricted"},
      {QueryAccess::None, "none"},
  }};
};
template <>
struct EnumNames<DeploymentExposure> {
  static constexpr std::array<std::pair<DeploymentExposure, std::string_view>, 3> entries{{
      {DeploymentExposure::PublicInternet, "public_internet"},
      {DeploymentExposure::RestrictedClients, "restricted_clients"},
      {DeploymentExposure::Offline, "offline"},
  }};
};
template <>
struct EnumNames<InputModality> {
  static constexpr std::array<std::pair<InputModality, std::string_view>, 8> entries{{
      {InputModality::Image, "image"},
      {InputModality::Video, "video"},
      {InputModality::NaturalLanguageText, "natural_language_text"},
      {InputModality::PromptInterface, "prompt_interface"},
      {InputModality::Audio, "audio"},
      {InputModality::TimeSeries, "time_series"},
      {InputModality::Tabular, "tabular"},
      {InputModality::NetworkTelemetry, "network_telemetry"},
  }};
};
template <>
struct EnumNames<TransportSecurity> {
  static constexpr std::array<std::pair<TransportSecurity, std::string_view>, 3> entries{{
      {TransportSecurity::UntrustedNetwork, "untrusted_network"},
      {TransportSecurity::TrustedProvider, "trusted_provider"},
      {TransportSecurity::LocalOnly, "local_only"},
  }};
};

// Answers to the applicability questionnaire for one AI-based product.
struct SoftwareProfile {
  std::string name;
  DataVisibility data_visibility = DataVisibility::Private;
  DataSourceTrust data_source_trust = DataSourceTrust::Untrusted;
  bool repository_integrity_assured = false;
  ModelOpenness model_openness = ModelOpenness::Proprietary;
  QueryAccess model_query_access = QueryAccess::Public;
  DeploymentExposure deployment_exposure = DeploymentExposure::PublicInternet;
  std::set<InputModality> input_modalities;
  bool captures_physical_environment = true;
  TransportSecurity transport_security = TransportSecurity::UntrustedNetwork;
  bool dev_pipeline_compromise_conceivable = true;
  bool uses_feature_engineering = true;
  bool uses_labelling = true;
  bool monitors_model_in_deployment = true;
  bool has_decision_making_stage = true;

  bool has_modality(InputModality m) const { return input_modalities.contains(m); }
  bool operator==(const SoftwareProfile&) const = default;
};

enum class AnswerKind { Choice, MultiChoice, Flag };

template <>
struct EnumNames<AnswerKind> {
  static constexpr std::array<std::pair<AnswerKind, std::string_view>, 3> entries{{
      {AnswerKind::Choice, "choice"},
      {AnswerKind::MultiChoice, "multi_choice"},
      {AnswerKind::Flag, "flag"},
  }};
};

struct ProfileQuestion {
  std::string key;
  std::string prompt;
  AnswerKind answer_kind = AnswerKind::Choice;
  std::vector<std::string> options;  // {"yes", "no"} for flags
  std::optional<bool> default_flag;  // flags only
};

// One question per profile field except `name`, in field order.
const std::vector<ProfileQuestion>& question_set();

// A single answer: choice text, list of choices, or a flag.
using Answer = std::variant<std::string, std::vector<std::string>, bool>;
using Answers = std::map<std::string, Answer, std::less<>>;

inline constexpr std::string_view kProfileNameKey = "name";

// Builds and checks a profile. Unanswered flags take their defaults; other
// unanswered questions are MissingAnswer. Also throws UnknownKey,
// BadEnumValue (bad option or answer shape) and InvariantViolation.
SoftwareProfile build_profile(const Answers& answers);

// Inverse of build_profile: one answer per question plus the name.
Answers to_answers(const SoftwareProfile& profile);

// Throws InvariantViolation on the first broken invariant.
void check_invariants(const SoftwareProfile& profile);

// Structural customisations implied by the four usage flags, in fixed order.
std::vector<GraphEdit> derive_graph_edits(const SoftwareProfile& profile);

}  // namespace admintm
