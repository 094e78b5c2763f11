#include "admintm/engine.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>

#include "admintm/error.hpp"
#include "admintm/version.hpp"

namespace admintm {

namespace {

Applicability verdict(Status status, ReasonCode code, std::string rationale) {
  return Applicability{status, code, std::move(rationale)};
}

Applicability applicable(ReasonCode code, std::string rationale) {
  return verdict(Status::Applicable, code, std::move(rationale));
}

Applicability not_applicable(ReasonCode code, std::string rationale) {
  return verdict(Status::NotApplicable, code, std::move(rationale));
}

// Shared by property exfiltration and datapoint verification: both need
// private data and a way to interact with the model.
Applicability queryable_private_data(const SoftwareProfile& p) {
  if (p.data_visibility == DataVisibility::Public) {
    return not_applicable(ReasonCode::DataPublic, "Training data is already public; nothing confidential to infer.");
  }
  if (p.model_query_access == QueryAccess::None) {
    return not_applicable(ReasonCode::NoQuerySurface, "Nobody can query the model, so its training data cannot be "
                                                      "probed through it.");
  }
  return applicable(ReasonCode::QueryablePrivateData,
                    "Training data is private and the model answers queries that can leak facts about it.");
}

Applicability model_theft(const SoftwareProfile& p) {
  if (p.model_openness == ModelOpenness::OpenSource) {
    return not_applicable(ReasonCode::ModelOpenSource, "The model is open source; there is nothing proprietary to "
                                                       "recover.");
  }
  if (p.model_query_access == QueryAccess::None) {
    return not_applicable(ReasonCode::NoQuerySurface, "The proprietary model cannot be queried.");
  }
  return applicable(ReasonCode::ProprietaryQueryableModel,
                    "A proprietary model can be queried, exposing its input/output behaviour.");
}

Applicability denial_of_service(const SoftwareProfile& p) {
  switch (p.deployment_exposure) {
    case DeploymentExposure::PublicInternet:
      return applicable(ReasonCode::PubliclyExposed, "The service is reachable from the public internet.");
    case DeploymentExposure::RestrictedClients:
      return not_applicable(ReasonCode::RestrictedClients, "Only known clients can reach the service.");
    case DeploymentExposure::Offline:
      return not_applicable(ReasonCode::NotPubliclyExposed, "The software runs offline with no network exposure.");
  }
  throw Error(ErrorCode::InvariantViolation, "bad deployment_exposure");
}

Applicability modality(bool present, std::string_view what) {
  if (present) return applicable(ReasonCode::ModalityMatch, "The model accepts " + std::string(what) + " input.");
  return not_applicable(ReasonCode::ModalityAbsent, "The model takes no " + std::string(what) + " input.");
}

using Rule = Applicability (*)(const SoftwareProfile&);

struct RuleEntry {
  std::string_view attack;
  Rule rule;
};

// R1..R14, one per leaf, in taxonomy order.
constexpr RuleEntry kRules[] = {
    {"data.exfiltration.property", [](const SoftwareProfile& p) { return queryable_private_data(p); }},
    {"data.exfiltration.dataset_theft",
     [](const SoftwareProfile& p) {
       if (p.data_visibility == DataVisibility::Public) {
         return not_applicable(ReasonCode::DataPublic, "The datasets are public; there is nothing to steal.");
       }
       return applicable(ReasonCode::PrivateData, "Private datasets are stored and processed where they could be "
                                                  "stolen.");
     }},
    {"data.exfiltration.datapoint_verification", [](const SoftwareProfile& p) { return queryable_private_data(p); }},
    {"data.poisoning",
     [](const SoftwareProfile& p) {
       if (p.data_source_trust == DataSourceTrust::FullyTrusted && p.repository_integrity_assured) {
         return not_applicable(ReasonCode::TrustedDataSource,
                               "Data comes from fully trusted sources into repositories with assured integrity.");
       }
       if (p.data_source_trust == DataSourceTrust::FullyTrusted) {
         return applicable(ReasonCode::RepositoryCompromisePossible,
                           "Sources are trusted but the data repositories could be compromised.");
       }
       return applicable(ReasonCode::UntrustedDataSource,
                         "Training data comes from sources that are not fully trusted.");
     }},
    {"model.poisoning",
     [](const SoftwareProfile& p) {
       if (p.dev_pipeline_compromise_conceivable) {
         return applicable(ReasonCode::PipelineAccessConceivable,
                           "An adversary could reach part of the development pipeline.");
       }
       return not_applicable(ReasonCode::PipelineAccessExcluded,
                             "Access to the development pipeline by an adversary is ruled out.");
     }},
    {"model.policy_exfiltration", [](const SoftwareProfile& p) { return model_theft(p); }},
    {"model.extraction", [](const SoftwareProfile& p) { return model_theft(p); }},
    {"input.prompt_injection",
     [](const SoftwareProfile& p) {
       if (p.has_modality(InputModality::PromptInterface)) {
         return applicable(ReasonCode::PromptInput, "The model takes free-form prompts as input.");
       }
       return not_applicable(ReasonCode::NoPromptInput, "The model does not take a prompt as input.");
     }},
    {"input.dos.flooding", [](const SoftwareProfile& p) { return denial_of_service(p); }},
    {"input.dos.manipulated_inputs", [](const SoftwareProfile& p) { return denial_of_service(p); }},
    {"input.evasion.natural_language",
     [](const SoftwareProfile& p) {
       return modality(p.has_modality(InputModality::NaturalLanguageText), "natural-language text");
     }},
    {"input.evasion.image_video",
     [](const SoftwareProfile& p) {
       return modality(p.has_modality(InputModality::Image) || p.has_modality(InputModality::Video),
                       "image or video");
     }},
    {"input.evasion.real_world",
     [](const SoftwareProfile& p) {
       if (p.captures_physical_environment) {
         return applicable(ReasonCode::PhysicalCapture, "Inputs are captured from a physical environment an "
                                                        "adversary can modify.");
       }
       return not_applicable(ReasonCode::NoPhysicalCapture, "Inputs are not captured from the physical world.");
     }},
    {"input.mitm",
     [](const SoftwareProfile& p) {
       switch (p.transport_security) {
         case TransportSecurity::UntrustedNetwork:
           return applicable(ReasonCode::UntrustedTransport,
                             "Inputs and outputs cross networks that could be intercepted.");
         case TransportSecurity::TrustedProvider:
           return verdict(Status::AcceptedRisk, ReasonCode::TrustedTransport,
                          "Interception is possible but the provider's transport security is trusted; risk "
                          "accepted.");
         case TransportSecurity::LocalOnly:
           break;
       }
       return not_applicable(ReasonCode::LocalOnlyTransport, "Inputs and outputs never leave the local machine.");
     }},
};

const RuleEntry& rule_for(const AttackId& attack) {
  for (const RuleEntry& entry : kRules) {
    if (entry.attack == attack.value) return entry;
  }
  throw Error(ErrorCode::UnknownAttack, "'" + attack.value + "' is not an attack leaf");
}

std::vector<std::string> poisoning_variants(const SoftwareProfile& p) {
  std::vector<std::string> out{"addition"};
  if (!p.repository_integrity_assured) {
    out.emplace_back("modification");
    out.emplace_back("deletion");
  }
  return out;
}

}  // namespace

Status implied_status(ReasonCode code) {
  switch (code) {
    case ReasonCode::PrivateData:
    case ReasonCode::QueryablePrivateData:
    case ReasonCode::UntrustedDataSource:
    case ReasonCode::RepositoryCompromisePossible:
    case ReasonCode::PipelineAccessConceivable:
    case ReasonCode::ProprietaryQueryableModel:
    case ReasonCode::PromptInput:
    case ReasonCode::PubliclyExposed:
    case ReasonCode::ModalityMatch:
    case ReasonCode::PhysicalCapture:
    case ReasonCode::UntrustedTransport:
      return Status::Applicable;
    case ReasonCode::TrustedTransport:
      return Status::AcceptedRisk;
    default:
      return Status::NotApplicable;
  }
}

std::size_t ThreatModelResult::count(Status status) const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(), [&](const ThreatFinding& f) { return f.status() == status; }));
}

const ThreatFinding* ThreatModelResult::find(const AttackId& attack) const {
  auto it = std::find_if(findings.begin(), findings.end(), [&](const ThreatFinding& f) { return f.attack == attack; });
  return it == findings.end() ? nullptr : &*it;
}

Applicability applicability(const AttackId& attack, const SoftwareProfile& profile) {
  return rule_for(attack).rule(profile);
}

std::vector<NodeId> attach(const AttackId& attack, const ProcessGraph& graph) {
  const AttackClass& cls = taxonomy().lookup(attack);
  if (!cls.is_leaf()) throw Error(ErrorCode::UnknownAttack, "'" + attack.value + "' is not an attack leaf");
  std::vector<NodeId> out;
  for (const Node& n : graph.nodes()) {
    const auto& sel = cls.attachment_selector;
    if (std::find(sel.begin(), sel.end(), n.id) != sel.end()) out.push_back(n.id);
  }
  return out;
}

ThreatModelResult enumerate_threats(const ProcessGraph& graph, const SoftwareProfile& profile) {
  check_invariants(profile);
  ValidationResult check = validate(graph);
  if (!check.ok()) {
    std::string message = "process graph is invalid:";
    for (const Violation& v : check.violations) message += "\n  " + v.message;
    throw Error(ErrorCode::InvalidGraph, message);
  }

  const ThreatTaxonomy& tax = taxonomy();
  ThreatModelResult result;
  result.profile = profile;
  result.graph = expand_wildcards(graph);
  result.taxonomy_version = tax.version();
  result.tool_version = kToolVersion;

  for (const AttackClass* leaf : tax.leaves()) {
    ThreatFinding f;
    f.attack = leaf->id;
    f.applicability = applicability(leaf->id, profile);
    f.stride = tax.stride_for(leaf->id);
    if (f.status() != Status::NotApplicable) {
      f.attachments = attach(leaf->id, result.graph);
      // An overlay may strip every selected node; the deployed software
      // always remains and is where the threat materialises.
      if (f.attachments.empty()) f.attachments.emplace_back(node_ids::software_deployment);
      if (leaf->id.value == "data.poisoning") f.variants = poisoning_variants(profile);
    }
    result.findings.push_back(std::move(f));
  }
  return result;
}

ProcessGraph customised_graph(const SoftwareProfile& profile, std::span<const GraphEdit> overlay) {
  ProcessGraph graph = default_graph();
  const auto derived = derive_graph_edits(profile);
  graph = apply_edits(graph, derived);
  graph = apply_edits(graph, overlay);
  return expand_wildcards(graph);
}

ThreatModelResult model_threats(const SoftwareProfile& profile, std::span<const GraphEdit> overlay) {
  return enumerate_threats(customised_graph(profile, overlay), profile);
}

std::string utc_timestamp_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

}  // namespace admintm
