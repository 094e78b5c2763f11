#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "admintm/enum_names.hpp"

namespace admintm {

// Identifier of a node in a process graph. Well-formed ids match
// [a-z][a-z0-9_]*; the single character "*" is reserved for wildcard edge
// targets. Construction does not validate; validate() does.
struct NodeId {
  std::string value;

  NodeId() = default;
  explicit NodeId(std::string v) : value(std::move(v)) {}
  explicit NodeId(std::string_view v) : value(v) {}
  explicit NodeId(const char* v) : value(v) {}

  bool is_wildcard() const { return value == "*"; }
  bool is_well_formed() const;

  auto operator<=>(const NodeId&) const = default;
};

inline const NodeId kWildcardTarget{"*"};

enum class NodeKind { Process, Artifact, Decision };
enum class Phase { DataProcessing, ModelDevelopment, Deployment };
enum class Guard { Yes, No };
enum class WildcardPolicy { DevelopmentProcessesOnly };

template <>
struct EnumNames<NodeKind> {
  static constexpr std::array<std::pair<NodeKind, std::string_view>, 3> entries{{
      {NodeKind::Process, "process"},
      {NodeKind::Artifact, "artifact"},
      {NodeKind::Decision, "decision"},
  }};
};
template <>
struct EnumNames<Phase> {
  static constexpr std::array<std::pair<Phase, std::string_view>, 3> entries{{
      {Phase::DataProcessing, "data_processing"},
      {Phase::ModelDevelopment, "model_development"},
      {Phase::Deployment, "deployment"},
  }};
};
template <>
struct EnumNames<Guard> {
  static constexpr std::array<std::pair<Guard, std::string_view>, 2> entries{{
      {Guard::Yes, "yes"},
      {Guard::No, "no"},
  }};
};
template <>
struct EnumNames<WildcardPolicy> {
  static constexpr std::array<std::pair<WildcardPolicy, std::string_view>, 1> entries{{
      {WildcardPolicy::DevelopmentProcessesOnly, "development_processes_only"},
  }};
};

struct Node {
  NodeId id;
  NodeKind kind = NodeKind::Artifact;
  std::string label;
  Phase phase = Phase::DataProcessing;
  // Ordering position; present for processes only.
  std::optional<int> canonical_index;

  bool operator==(const Node&) const = default;
};

struct Edge {
  NodeId source;
  NodeId target;  // kWildcardTarget for "any previous process"
  std::optional<Guard> guard;  // only on edges leaving a decision

  bool is_wildcard() const { return target.is_wildcard(); }
  bool operator==(const Edge&) const = default;
};

std::string describe(const Edge& edge);

// Immutable directed graph of processes, artifacts and decisions. Node and
// edge order is preserved and is part of the value (it drives report and
// document ordering).
class ProcessGraph {
 public:
  ProcessGraph() = default;
  ProcessGraph(std::vector<Node> nodes, std::vector<Edge> edges,
               WildcardPolicy policy = WildcardPolicy::DevelopmentProcessesOnly)
      : nodes_(std::move(nodes)), edges_(std::move(edges)), policy_(policy) {}

  std::span<const Node> nodes() const { return nodes_; }
  std::span<const Edge> edges() const { return edges_; }
  WildcardPolicy wildcard_policy() const { return policy_; }

  const Node* find(const NodeId& id) const;
  bool contains(const NodeId& id) const { return find(id) != nullptr; }
  bool contains_edge(const Edge& edge) const;

  std::size_t count(NodeKind kind) const;
  std::size_t wildcard_edge_count() const;

  // Process nodes ordered by canonical index.
  std::vector<const Node*> processes() const;

  bool operator==(const ProcessGraph&) const = default;

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  WildcardPolicy policy_ = WildcardPolicy::DevelopmentProcessesOnly;
};

// Stable ids of the template graph.
namespace node_ids {
inline constexpr std::string_view requirement_engineering = "requirement_engineering";
inline constexpr std::string_view data_preparation = "data_preparation";
inline constexpr std::string_view feature_engineering_labelling = "feature_engineering_labelling";
inline constexpr std::string_view model_training = "model_training";
inline constexpr std::string_view model_evaluation_during_development = "model_evaluation_during_development";
inline constexpr std::string_view hyperparameter_tuning = "hyperparameter_tuning";
inline constexpr std::string_view model_evaluation_after_development = "model_evaluation_after_development";
inline constexpr std::string_view software_deployment = "software_deployment";
inline constexpr std::string_view decision_making = "decision_making";
inline constexpr std::string_view model_evaluation_during_deployment = "model_evaluation_during_deployment";

inline constexpr std::string_view performance_adequate = "d1";
inline constexpr std::string_view model_adequate = "d2";
inline constexpr std::string_view deployed_model_adequate = "d3";

inline constexpr std::string_view system_domain_info = "a_system_domain_info";
inline constexpr std::string_view stakeholder_requirements = "a_stakeholder_requirements";
inline constexpr std::string_view regulations = "a_regulations";
inline constexpr std::string_view requirements_spec = "a_requirements_spec";
inline constexpr std::string_view raw_dataset = "a_raw_dataset";
inline constexpr std::string_view clean_dataset = "a_clean_dataset";
inline constexpr std::string_view features = "a_features";
inline constexpr std::string_view labels = "a_labels";
inline constexpr std::string_view training_dataset = "a_training_dataset";
inline constexpr std::string_view validation_dataset = "a_validation_dataset";
inline constexpr std::string_view testing_dataset = "a_testing_dataset";
inline constexpr std::string_view algorithm = "a_algorithm";
inline constexpr std::string_view trained_model = "a_trained_model";
inline constexpr std::string_view optimized_model = "a_optimized_model";
inline constexpr std::string_view production_data = "a_production_data";
inline constexpr std::string_view prediction = "a_prediction";
inline constexpr std::string_view decision = "a_decision";
}  // namespace node_ids

// The ten-process template: 10 processes, 3 decisions, 17 artifacts and 38
// edges, three of which point at "*".
ProcessGraph default_graph();

enum class EditKind { RemoveProcess, RemoveArtifact, AddNode, AddEdge, RemoveEdge };
enum class RemovalMode { Splice, Prune };

template <>
struct EnumNames<EditKind> {
  static constexpr std::array<std::pair<EditKind, std::string_view>, 5> entries{{
      {EditKind::RemoveProcess, "remove_process"},
      {EditKind::RemoveArtifact, "remove_artifact"},
      {EditKind::AddNode, "add_node"},
      {EditKind::AddEdge, "add_edge"},
      {EditKind::RemoveEdge, "remove_edge"},
  }};
};
template <>
struct EnumNames<RemovalMode> {
  static constexpr std::array<std::pair<RemovalMode, std::string_view>, 2> entries{{
      {RemovalMode::Splice, "splice"},
      {RemovalMode::Prune, "prune"},
  }};
};

struct GraphEdit {
  EditKind kind = EditKind::RemoveProcess;
  std::variant<NodeId, Node, Edge> payload;
  RemovalMode mode = RemovalMode::Splice;  // remove_process only

  static GraphEdit remove_process(NodeId id, RemovalMode mode = RemovalMode::Splice);
  static GraphEdit remove_artifact(NodeId id);
  static GraphEdit add_node(Node node);
  static GraphEdit add_edge(Edge edge);
  static GraphEdit remove_edge(Edge edge);

  // Checks that the payload alternative matches `kind`.
  bool is_well_formed() const;

  bool operator==(const GraphEdit&) const = default;
};

std::string describe(const GraphEdit& edit);

// Returns a new graph with `edit` applied. Throws admintm::Error with
// UnknownNode, UnknownEdge, DuplicateNode, WouldDisconnectDeployment or
// InvalidEdit.
//
// Process removal: splice re-sources the removed process's outputs to the
// nearest upstream process; prune drops them. In both modes, decisions left
// without any input are removed with their outgoing edges, and artifacts
// that lose their last edge are removed.
ProcessGraph apply_edit(const ProcessGraph& graph, const GraphEdit& edit);
ProcessGraph apply_edits(const ProcessGraph& graph, std::span<const GraphEdit> edits);

// Nearest process reached by walking edges backwards from `id`, breadth
// first; ties at equal depth go to the highest canonical index. With
// include_self a process returns itself.
const Node* nearest_process_ancestor(const ProcessGraph& graph, const NodeId& id, bool include_self);

// Replaces every "*" edge with one edge per eligible process: canonical index
// below the wildcard source's nearest process ancestor, and (under
// development_processes_only) not in the deployment phase. Idempotent.
ProcessGraph expand_wildcards(const ProcessGraph& graph);

enum class ViolationKind {
  MalformedId,
  DuplicateId,
  DanglingEdge,
  SelfLoop,
  DuplicateEdge,
  MissingGuard,
  GuardOnNonDecisionEdge,
  UnlabelledDecision,
  CanonicalIndex,
  ProcessOrder,
  WouldDisconnectDeployment,
};

template <>
struct EnumNames<ViolationKind> {
  static constexpr std::array<std::pair<ViolationKind, std::string_view>, 11> entries{{
      {ViolationKind::MalformedId, "malformed_id"},
      {ViolationKind::DuplicateId, "duplicate_id"},
      {ViolationKind::DanglingEdge, "dangling_edge"},
      {ViolationKind::SelfLoop, "self_loop"},
      {ViolationKind::DuplicateEdge, "duplicate_edge"},
      {ViolationKind::MissingGuard, "missing_guard"},
      {ViolationKind::GuardOnNonDecisionEdge, "guard_on_non_decision_edge"},
      {ViolationKind::UnlabelledDecision, "unlabelled_decision"},
      {ViolationKind::CanonicalIndex, "canonical_index"},
      {ViolationKind::ProcessOrder, "process_order"},
      {ViolationKind::WouldDisconnectDeployment, "would_disconnect_deployment"},
  }};
};

struct Violation {
  ViolationKind kind;
  std::string message;

  bool operator==(const Violation&) const = default;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t count(ViolationKind kind) const;
};

// Reports every invariant violation; never throws.
ValidationResult validate(const ProcessGraph& graph);

}  // namespace admintm
