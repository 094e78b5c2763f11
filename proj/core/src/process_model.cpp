#include "admintm/process_model.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "admintm/error.hpp"

namespace admintm {

namespace {

Node process(std::string_view id, std::string label, Phase phase, int index) {
  return Node{NodeId(id), NodeKind::Process, std::move(label), phase, index};
}

Node decision(std::string_view id, std::string label, Phase phase) {
  return Node{NodeId(id), NodeKind::Decision, std::move(label), phase, std::nullopt};
}

Node artifact(std::string_view id, std::string label, Phase phase) {
  return Node{NodeId(id), NodeKind::Artifact, std::move(label), phase, std::nullopt};
}

Edge edge(std::string_view from, std::string_view to) {
  return Edge{NodeId(from), NodeId(to), std::nullopt};
}

Edge guarded(std::string_view from, Guard guard, std::string_view to) {
  return Edge{NodeId(from), NodeId(to), guard};
}

bool is_development_phase(Phase phase) {
  return phase == Phase::DataProcessing || phase == Phase::ModelDevelopment;
}

bool touches(const Edge& e, const NodeId& id) {
  return e.source == id || e.target == id;
}

// Removes decisions without inputs (and their outgoing edges) until none
// remain, then artifacts from `candidates` that have no edges left.
void cascade(std::vector<Node>& nodes, std::vector<Edge>& edges, std::set<NodeId> candidates) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = nodes.begin(); it != nodes.end(); ++it) {
      if (it->kind != NodeKind::Decision) continue;
      const NodeId id = it->id;
      bool has_input = std::any_of(edges.begin(), edges.end(),
                                   [&](const Edge& e) { return e.target == id; });
      if (has_input) continue;
      for (const Edge& e : edges) {
        if (e.source == id && !e.is_wildcard()) candidates.insert(e.target);
      }
      std::erase_if(edges, [&](const Edge& e) { return touches(e, id); });
      nodes.erase(it);
      changed = true;
      break;
    }
  }
  std::erase_if(nodes, [&](const Node& n) {
    if (n.kind != NodeKind::Artifact || !candidates.contains(n.id)) return false;
    return std::none_of(edges.begin(), edges.end(), [&](const Edge& e) { return touches(e, n.id); });
  });
}

const Node& require_node(const ProcessGraph& graph, const NodeId& id) {
  const Node* node = graph.find(id);
  if (node == nullptr) throw Error(ErrorCode::UnknownNode, "unknown node '" + id.value + "'");
  return *node;
}

bool processes_ordered(const ProcessGraph& graph) {
  auto procs = graph.processes();
  for (std::size_t i = 1; i < procs.size(); ++i) {
    if (*procs[i]->canonical_index == *procs[i - 1]->canonical_index) return false;
    if (procs[i]->phase < procs[i - 1]->phase) return false;
  }
  return true;
}

ProcessGraph remove_process(const ProcessGraph& graph, const NodeId& id, RemovalMode mode) {
  const Node& node = require_node(graph, id);
  if (node.kind != NodeKind::Process) {
    throw Error(ErrorCode::InvalidEdit, "remove_process: '" + id.value + "' is not a process");
  }
  if (id.value == node_ids::software_deployment) {
    throw Error(ErrorCode::WouldDisconnectDeployment,
                "remove_process: '" + id.value + "' cannot be removed; every attack presumes a deployed model");
  }

  const Node* upstream =
      mode == RemovalMode::Splice ? nearest_process_ancestor(graph, id, false) : nullptr;

  // Re-sourced edges stay where the originals were.
  std::set<NodeId> candidates;
  std::vector<Edge> ordered;
  ordered.reserve(graph.edges().size());
  for (const Edge& e : graph.edges()) {
    if (!touches(e, id)) {
      if (std::find(ordered.begin(), ordered.end(), e) == ordered.end()) ordered.push_back(e);
      continue;
    }
    if (e.target == id) {
      candidates.insert(e.source);
      continue;
    }
    Edge moved{upstream != nullptr ? upstream->id : NodeId(), e.target, std::nullopt};
    if (upstream == nullptr || moved.target == upstream->id) {
      if (!e.is_wildcard()) candidates.insert(e.target);
      continue;
    }
    if (std::find(ordered.begin(), ordered.end(), moved) == ordered.end()) ordered.push_back(std::move(moved));
  }

  std::vector<Node> nodes;
  for (const Node& n : graph.nodes()) {
    if (n.id != id) nodes.push_back(n);
  }
  cascade(nodes, ordered, std::move(candidates));
  return ProcessGraph(std::move(nodes), std::move(ordered), graph.wildcard_policy());
}

ProcessGraph remove_artifact(const ProcessGraph& graph, const NodeId& id) {
  const Node& node = require_node(graph, id);
  if (node.kind != NodeKind::Artifact) {
    throw Error(ErrorCode::InvalidEdit, "remove_artifact: '" + id.value + "' is not an artifact");
  }
  std::vector<Node> nodes;
  for (const Node& n : graph.nodes()) {
    if (n.id != id) nodes.push_back(n);
  }
  std::vector<Edge> edges;
  for (const Edge& e : graph.edges()) {
    if (!touches(e, id)) edges.push_back(e);
  }
  cascade(nodes, edges, {});
  return ProcessGraph(std::move(nodes), std::move(edges), graph.wildcard_policy());
}

ProcessGraph add_node(const ProcessGraph& graph, const Node& node) {
  if (graph.contains(node.id)) {
    throw Error(ErrorCode::DuplicateNode, "add_node: '" + node.id.value + "' already exists");
  }
  if (!node.id.is_well_formed()) {
    throw Error(ErrorCode::InvalidEdit, "add_node: malformed id '" + node.id.value + "'");
  }
  if ((node.kind == NodeKind::Process) != node.canonical_index.has_value()) {
    throw Error(ErrorCode::InvalidEdit,
                "add_node: '" + node.id.value + "' canonical_index is required for processes and only for processes");
  }
  if (node.kind == NodeKind::Decision && (node.label.empty() || node.label.back() != '?')) {
    throw Error(ErrorCode::InvalidEdit, "add_node: decision '" + node.id.value + "' needs a question label");
  }
  std::vector<Node> nodes(graph.nodes().begin(), graph.nodes().end());
  nodes.push_back(node);
  ProcessGraph out(std::move(nodes), std::vector<Edge>(graph.edges().begin(), graph.edges().end()),
                   graph.wildcard_policy());
  if (node.kind == NodeKind::Process && !processes_ordered(out)) {
    throw Error(ErrorCode::InvalidEdit, "add_node: canonical_index " +
                                            std::to_string(*node.canonical_index) +
                                            " of '" + node.id.value + "' breaks process ordering");
  }
  return out;
}

ProcessGraph add_edge(const ProcessGraph& graph, const Edge& e) {
  const Node& source = require_node(graph, e.source);
  if (!e.is_wildcard()) require_node(graph, e.target);
  if (e.source == e.target) throw Error(ErrorCode::InvalidEdit, "add_edge: self-loop " + describe(e));
  if ((source.kind == NodeKind::Decision) != e.guard.has_value()) {
    throw Error(ErrorCode::InvalidEdit, "add_edge: guard must be present exactly on decision edges: " + describe(e));
  }
  if (graph.contains_edge(e)) throw Error(ErrorCode::InvalidEdit, "add_edge: duplicate edge " + describe(e));
  std::vector<Edge> edges(graph.edges().begin(), graph.edges().end());
  edges.push_back(e);
  return ProcessGraph(std::vector<Node>(graph.nodes().begin(), graph.nodes().end()), std::move(edges),
                      graph.wildcard_policy());
}

ProcessGraph remove_edge(const ProcessGraph& graph, const Edge& e) {
  if (!graph.contains_edge(e)) throw Error(ErrorCode::UnknownEdge, "remove_edge: no edge " + describe(e));
  std::vector<Edge> edges;
  for (const Edge& existing : graph.edges()) {
    if (existing != e) edges.push_back(existing);
  }
  return ProcessGraph(std::vector<Node>(graph.nodes().begin(), graph.nodes().end()), std::move(edges),
                      graph.wildcard_policy());
}

}  // namespace

bool NodeId::is_well_formed() const {
  if (value.empty() || value[0] < 'a' || value[0] > 'z') return false;
  return std::all_of(value.begin(), value.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

std::string describe(const Edge& edge) {
  std::string out = edge.source.value;
  if (edge.guard) out += " -[" + std::string(enum_name(*edge.guard)) + "]";
  out += " -> " + edge.target.value;
  return out;
}

const Node* ProcessGraph::find(const NodeId& id) const {
  auto it = std::find_if(nodes_.begin(), nodes_.end(), [&](const Node& n) { return n.id == id; });
  return it == nodes_.end() ? nullptr : &*it;
}

bool ProcessGraph::contains_edge(const Edge& edge) const {
  return std::find(edges_.begin(), edges_.end(), edge) != edges_.end();
}

std::size_t ProcessGraph::count(NodeKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [&](const Node& n) { return n.kind == kind; }));
}

std::size_t ProcessGraph::wildcard_edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_wildcard(); }));
}

std::vector<const Node*> ProcessGraph::processes() const {
  std::vector<const Node*> out;
  for (const Node& n : nodes_) {
    if (n.kind == NodeKind::Process && n.canonical_index) out.push_back(&n);
  }
  std::stable_sort(out.begin(), out.end(), [](const Node* a, const Node* b) {
    return *a->canonical_index < *b->canonical_index;
  });
  return out;
}

ProcessGraph default_graph() {
  namespace id = node_ids;
  constexpr auto dp = Phase::DataProcessing;
  constexpr auto md = Phase::ModelDevelopment;
  constexpr auto dep = Phase::Deployment;

  std::vector<Node> nodes{
      process(id::requirement_engineering, "Requirement Engineering", dp, 1),
      process(id::data_preparation, "Data Preparation", dp, 2),
      process(id::feature_engineering_labelling, "Feature Engineering & Labelling", dp, 3),
      process(id::model_training, "Model Training", md, 4),
      process(id::model_evaluation_during_development, "Model Evaluation during Development", md, 5),
      process(id::hyperparameter_tuning, "Hyperparameter Tuning", md, 6),
      process(id::model_evaluation_after_development, "Model Evaluation after Development", md, 7),
      process(id::software_deployment, "Software Deployment", dep, 8),
      process(id::decision_making, "Decision Making", dep, 9),
      process(id::model_evaluation_during_deployment, "Model Evaluation during Deployment", dep, 10),

      decision(id::performance_adequate, "Is the Performance Adequate?", md),
      decision(id::model_adequate, "Is the Model Adequate?", md),
      decision(id::deployed_model_adequate, "Is the Deployed Model Adequate?", dep),

      artifact(id::system_domain_info, "System/Domain Information", dp),
      artifact(id::stakeholder_requirements, "Stakeholder/Organisational Requirements", dp),
      artifact(id::regulations, "Regulations", dp),
      artifact(id::requirements_spec, "Requirements & Specification", dp),
      artifact(id::raw_dataset, "Raw Dataset", dp),
      artifact(id::clean_dataset, "Clean Dataset", dp),
      artifact(id::features, "Features", dp),
      artifact(id::labels, "Labels", dp),
      artifact(id::training_dataset, "Training Dataset", dp),
      artifact(id::validation_dataset, "Validation Dataset", dp),
      artifact(id::testing_dataset, "Testing Dataset", dp),
      artifact(id::algorithm, "Algorithm", md),
      artifact(id::trained_model, "Trained Model", md),
      artifact(id::optimized_model, "Optimised Trained Model", md),
      artifact(id::production_data, "Production Data", dep),
      artifact(id::prediction, "Classification/Prediction", dep),
      artifact(id::decision, "Decision", dep),
  };

  const std::string_view any = "*";
  std::vector<Edge> edges{
      edge(id::system_domain_info, id::requirement_engineering),                 // E01
      edge(id::stakeholder_requirements, id::requirement_engineering),           // E02
      edge(id::regulations, id::requirement_engineering),                        // E03
      edge(id::requirement_engineering, id::requirements_spec),                  // E04
      edge(id::requirements_spec, id::data_preparation),                         // E05
      edge(id::raw_dataset, id::data_preparation),                               // E06
      edge(id::data_preparation, id::clean_dataset),                             // E07
      edge(id::clean_dataset, id::feature_engineering_labelling),                // E08
      edge(id::feature_engineering_labelling, id::features),                     // E09
      edge(id::feature_engineering_labelling, id::labels),                       // E10
      edge(id::feature_engineering_labelling, id::training_dataset),             // E11
      edge(id::feature_engineering_labelling, id::validation_dataset),           // E12
      edge(id::feature_engineering_labelling, id::testing_dataset),              // E13
      edge(id::training_dataset, id::model_training),                            // E14
      edge(id::features, id::model_training),                                    // E15
      edge(id::labels, id::model_training),                                      // E16
      edge(id::algorithm, id::model_training),                                   // E17
      edge(id::model_training, id::trained_model),                               // E18
      edge(id::trained_model, id::model_evaluation_during_development),          // E19
      edge(id::validation_dataset, id::model_evaluation_during_development),     // E20
      edge(id::model_evaluation_during_development, id::performance_adequate),   // E21
      guarded(id::performance_adequate, Guard::No, id::hyperparameter_tuning),   // E22
      guarded(id::performance_adequate, Guard::Yes, id::model_evaluation_after_development),  // E23
      edge(id::hyperparameter_tuning, id::optimized_model),                      // E24
      edge(id::hyperparameter_tuning, any),                                      // E25
      edge(id::optimized_model, id::model_evaluation_after_development),         // E26
      edge(id::testing_dataset, id::model_evaluation_after_development),         // E27
      edge(id::model_evaluation_after_development, id::model_adequate),          // E28
      guarded(id::model_adequate, Guard::Yes, id::software_deployment),          // E29
      guarded(id::model_adequate, Guard::No, any),                               // E30
      edge(id::production_data, id::software_deployment),                        // E31
      edge(id::software_deployment, id::prediction),                             // E32
      edge(id::prediction, id::decision_making),                                 // E33
      edge(id::decision_making, id::decision),                                   // E34
      edge(id::prediction, id::model_evaluation_during_deployment),              // E35
      edge(id::model_evaluation_during_deployment, id::deployed_model_adequate), // E36
      guarded(id::deployed_model_adequate, Guard::Yes, id::software_deployment), // E37
      guarded(id::deployed_model_adequate, Guard::No, any),                      // E38
  };
  return ProcessGraph(std::move(nodes), std::move(edges));
}

GraphEdit GraphEdit::remove_process(NodeId id, RemovalMode mode) {
  return GraphEdit{EditKind::RemoveProcess, std::move(id), mode};
}
GraphEdit GraphEdit::remove_artifact(NodeId id) {
  return GraphEdit{EditKind::RemoveArtifact, std::move(id), RemovalMode::Splice};
}
GraphEdit GraphEdit::add_node(Node node) {
  return GraphEdit{EditKind::AddNode, std::move(node), RemovalMode::Splice};
}
GraphEdit GraphEdit::add_edge(Edge edge) {
  return GraphEdit{EditKind::AddEdge, std::move(edge), RemovalMode::Splice};
}
GraphEdit GraphEdit::remove_edge(Edge edge) {
  return GraphEdit{EditKind::RemoveEdge, std::move(edge), RemovalMode::Splice};
}

bool GraphEdit::is_well_formed() const {
  switch (kind) {
    case EditKind::RemoveProcess:
    case EditKind::RemoveArtifact:
      return std::holds_alternative<NodeId>(payload);
    case EditKind::AddNode:
      return std::holds_alternative<Node>(payload);
    case EditKind::AddEdge:
    case EditKind::RemoveEdge:
      return std::holds_alternative<Edge>(payload);
  }
  return false;
}

std::string describe(const GraphEdit& edit) {
  std::string out(enum_name(edit.kind));
  if (const auto* id = std::get_if<NodeId>(&edit.payload)) {
    out += "(" + id->value;
    if (edit.kind == EditKind::RemoveProcess) out += ", " + std::string(enum_name(edit.mode));
    out += ")";
  } else if (const auto* node = std::get_if<Node>(&edit.payload)) {
    out += "(" + node->id.value + ")";
  } else if (const auto* e = std::get_if<Edge>(&edit.payload)) {
    out += "(" + describe(*e) + ")";
  }
  return out;
}

ProcessGraph apply_edit(const ProcessGraph& graph, const GraphEdit& edit) {
  if (!edit.is_well_formed()) {
    throw Error(ErrorCode::InvalidEdit, "edit payload does not match kind: " + describe(edit));
  }
  switch (edit.kind) {
    case EditKind::RemoveProcess:
      return remove_process(graph, std::get<NodeId>(edit.payload), edit.mode);
    case EditKind::RemoveArtifact:
      return remove_artifact(graph, std::get<NodeId>(edit.payload));
    case EditKind::AddNode:
      return add_node(graph, std::get<Node>(edit.payload));
    case EditKind::AddEdge:
      return add_edge(graph, std::get<Edge>(edit.payload));
    case EditKind::RemoveEdge:
      return remove_edge(graph, std::get<Edge>(edit.payload));
  }
  throw Error(ErrorCode::InvalidEdit, "unsupported edit kind");
}

ProcessGraph apply_edits(const ProcessGraph& graph, std::span<const GraphEdit> edits) {
  ProcessGraph out = graph;
  for (const GraphEdit& edit : edits) out = apply_edit(out, edit);
  return out;
}

const Node* nearest_process_ancestor(const ProcessGraph& graph, const NodeId& id, bool include_self) {
  const Node* start = graph.find(id);
  if (start == nullptr) return nullptr;
  if (include_self && start->kind == NodeKind::Process) return start;

  std::set<NodeId> seen{id};
  std::vector<NodeId> frontier{id};
  while (!frontier.empty()) {
    std::vector<NodeId> next;
    const Node* best = nullptr;
    for (const NodeId& current : frontier) {
      for (const Edge& e : graph.edges()) {
        if (e.target != current || seen.contains(e.source)) continue;
        const Node* src = graph.find(e.source);
        if (src == nullptr) continue;
        seen.insert(e.source);
        next.push_back(e.source);
        if (src->kind == NodeKind::Process && src->canonical_index &&
            (best == nullptr || *src->canonical_index > *best->canonical_index)) {
          best = src;
        }
      }
    }
    if (best != nullptr) return best;
    frontier = std::move(next);
  }
  return nullptr;
}

ProcessGraph expand_wildcards(const ProcessGraph& graph) {
  if (graph.wildcard_edge_count() == 0) return graph;

  std::vector<Edge> concrete;
  for (const Edge& e : graph.edges()) {
    if (!e.is_wildcard()) concrete.push_back(e);
  }
  const auto procs = graph.processes();

  std::vector<Edge> out;
  out.reserve(graph.edges().size() + procs.size() * graph.wildcard_edge_count());
  for (const Edge& e : graph.edges()) {
    if (!e.is_wildcard()) {
      out.push_back(e);
      continue;
    }
    const Node* anchor = nearest_process_ancestor(graph, e.source, true);
    if (anchor == nullptr) continue;
    for (const Node* p : procs) {
      if (*p->canonical_index >= *anchor->canonical_index) break;
      if (graph.wildcard_policy() == WildcardPolicy::DevelopmentProcessesOnly &&
          !is_development_phase(p->phase)) {
        continue;
      }
      Edge expanded{e.source, p->id, e.guard};
      if (expanded.target == expanded.source) continue;
      if (std::find(concrete.begin(), concrete.end(), expanded) != concrete.end()) continue;
      if (std::find(out.begin(), out.end(), expanded) != out.end()) continue;
      out.push_back(std::move(expanded));
    }
  }
  return ProcessGraph(std::vector<Node>(graph.nodes().begin(), graph.nodes().end()), std::move(out),
                      graph.wildcard_policy());
}

std::size_t ValidationResult::count(ViolationKind kind) const {
  return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                [&](const Violation& v) { return v.kind == kind; }));
}

ValidationResult validate(const ProcessGraph& graph) {
  ValidationResult result;
  auto report = [&](ViolationKind kind, std::string message) {
    result.violations.push_back(Violation{kind, std::move(message)});
  };

  std::set<NodeId> ids;
  for (const Node& n : graph.nodes()) {
    if (!n.id.is_well_formed()) report(ViolationKind::MalformedId, "malformed node id '" + n.id.value + "'");
    if (!ids.insert(n.id).second) report(ViolationKind::DuplicateId, "duplicate node id '" + n.id.value + "'");
    if (n.kind == NodeKind::Process && !n.canonical_index) {
      report(ViolationKind::CanonicalIndex, "process '" + n.id.value + "' has no canonical_index");
    }
    if (n.kind != NodeKind::Process && n.canonical_index) {
      report(ViolationKind::CanonicalIndex, "non-process '" + n.id.value + "' carries a canonical_index");
    }
    if (n.kind == NodeKind::Decision && (n.label.empty() || n.label.back() != '?')) {
      report(ViolationKind::UnlabelledDecision, "decision '" + n.id.value + "' has no question label");
    }
  }

  const auto procs = graph.processes();
  for (std::size_t i = 1; i < procs.size(); ++i) {
    const Node& prev = *procs[i - 1];
    const Node& cur = *procs[i];
    if (*cur.canonical_index == *prev.canonical_index) {
      report(ViolationKind::ProcessOrder, "processes '" + prev.id.value + "' and '" + cur.id.value +
                                              "' share canonical_index " + std::to_string(*cur.canonical_index));
    } else if (cur.phase < prev.phase) {
      report(ViolationKind::ProcessOrder, "process '" + cur.id.value + "' (" + std::string(enum_name(cur.phase)) +
                                              ") is ordered after '" + prev.id.value + "' (" +
                                              std::string(enum_name(prev.phase)) + ")");
    }
  }

  std::vector<const Edge*> seen_edges;
  for (const Edge& e : graph.edges()) {
    const Node* src = graph.find(e.source);
    if (src == nullptr) {
      report(ViolationKind::DanglingEdge, "edge " + describe(e) + " has unknown source '" + e.source.value + "'");
    }
    if (!e.is_wildcard() && !graph.contains(e.target)) {
      report(ViolationKind::DanglingEdge, "edge " + describe(e) + " has unknown target '" + e.target.value + "'");
    }
    if (e.source == e.target) report(ViolationKind::SelfLoop, "self-loop " + describe(e));
    if (src != nullptr) {
      if (src->kind == NodeKind::Decision && !e.guard) {
        report(ViolationKind::MissingGuard, "decision edge " + describe(e) + " has no yes/no guard");
      }
      if (src->kind != NodeKind::Decision && e.guard) {
        report(ViolationKind::GuardOnNonDecisionEdge, "edge " + describe(e) + " is guarded but its source is not a decision");
      }
    }
    if (std::any_of(seen_edges.begin(), seen_edges.end(), [&](const Edge* s) { return *s == e; })) {
      report(ViolationKind::DuplicateEdge, "duplicate edge " + describe(e));
    }
    seen_edges.push_back(&e);
  }

  const Node* deployment = graph.find(NodeId(node_ids::software_deployment));
  if (deployment == nullptr || deployment->kind != NodeKind::Process) {
    report(ViolationKind::WouldDisconnectDeployment,
           "graph has no '" + std::string(node_ids::software_deployment) + "' process");
  }
  return result;
}

}  // namespace admintm
