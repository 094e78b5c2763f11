#pragma once

// Flat truth table for the applicability rules over the six enumerated
// profile fields, each restricted to two representative values. Rows are
// written out by hand per leaf from the rule table, independent of the
// engine's code path.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "admintm/engine.hpp"
#include "admintm/profile.hpp"

namespace admintm::testing {

// Bit layout of a truth-table row.
struct Row {
  bool data_private;        // data_visibility: public(0) / private(1)
  bool source_untrusted;    // data_source_trust: fully_trusted(0) / untrusted(1)
  bool model_proprietary;   // model_openness: open_source(0) / proprietary(1)
  bool query_none;          // model_query_access: public(0) / none(1)
  bool restricted;          // deployment_exposure: public_internet(0) / restricted_clients(1)
  bool trusted_provider;    // transport_security: untrusted_network(0) / trusted_provider(1)
};

inline Row row_of(unsigned bits) {
  return Row{(bits & 1u) != 0, (bits & 2u) != 0, (bits & 4u) != 0,
             (bits & 8u) != 0, (bits & 16u) != 0, (bits & 32u) != 0};
}

// Remaining fields fixed: repository_integrity_assured=yes (so poisoning
// hinges on source trust), modalities={image}, physical capture=no,
// pipeline compromise conceivable=yes, all structural flags yes.
inline SoftwareProfile profile_of(const Row& r) {
  SoftwareProfile p;
  p.name = "truth-table";
  p.data_visibility = r.data_private ? DataVisibility::Private : DataVisibility::Public;
  p.data_source_trust = r.source_untrusted ? DataSourceTrust::Untrusted : DataSourceTrust::FullyTrusted;
  p.repository_integrity_assured = true;
  p.model_openness = r.model_proprietary ? ModelOpenness::Proprietary : ModelOpenness::OpenSource;
  p.model_query_access = r.query_none ? QueryAccess::None : QueryAccess::Public;
  p.deployment_exposure = r.restricted ? DeploymentExposure::RestrictedClients : DeploymentExposure::PublicInternet;
  p.input_modalities = {InputModality::Image};
  p.captures_physical_environment = false;
  p.transport_security = r.trusted_provider ? TransportSecurity::TrustedProvider : TransportSecurity::UntrustedNetwork;
  p.dev_pipeline_compromise_conceivable = true;
  return p;
}

constexpr char A = 'A';  // applicable
constexpr char N = 'N';  // not applicable
constexpr char R = 'R';  // accepted risk

// Expected status letter for each of the 14 leaves, in taxonomy order.
inline std::array<char, 14> expected_row(const Row& r) {
  const char exfil_query = (r.data_private && !r.query_none) ? A : N;
  const char theft = r.data_private ? A : N;
  const char poison = r.source_untrusted ? A : N;
  const char steal_model = (r.model_proprietary && !r.query_none) ? A : N;
  const char dos = r.restricted ? N : A;
  const char mitm = r.trusted_provider ? R : A;
  return {exfil_query, theft, exfil_query, poison, A, steal_model, steal_model,
          N,           dos,   dos,         N,      A, N,           mitm};
}

inline char letter(Status s) {
  switch (s) {
    case Status::Applicable: return A;
    case Status::NotApplicable: return N;
    case Status::AcceptedRisk: return R;
  }
  return '?';
}

}  // namespace admintm::testing
