#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "admintm/error.hpp"
#include "admintm/process_model.hpp"
#include "canonical_edges.hpp"
#include "ids.hpp"
#include "wildcard_oracle.hpp"

namespace admintm {
namespace {

using testing::edge_string;
using testing::kCanonicalEdges;
namespace ids = testing::ids;

std::set<std::string> targets_of(const ProcessGraph& g, const NodeId& source) {
  std::set<std::string> out;
  for (const Edge& e : g.edges()) {
    if (e.source == source) out.insert(e.target.value);
  }
  return out;
}

std::set<std::string> node_set(const ProcessGraph& g) {
  std::set<std::string> out;
  for (const Node& n : g.nodes()) out.insert(n.id.value);
  return out;
}

TEST(DefaultGraph, NodeCounts) {
  const ProcessGraph g = default_graph();
  EXPECT_EQ(g.count(NodeKind::Process), 10u);
  EXPECT_EQ(g.count(NodeKind::Decision), 3u);
  EXPECT_EQ(g.count(NodeKind::Artifact), 17u);
  EXPECT_EQ(g.nodes().size(), 30u);
}

TEST(DefaultGraph, EdgesMatchCanonicalListInOrder) {
  const ProcessGraph g = default_graph();
  ASSERT_EQ(g.edges().size(), kCanonicalEdges.size());
  for (std::size_t i = 0; i < kCanonicalEdges.size(); ++i) {
    EXPECT_EQ(edge_string(g.edges()[i]), kCanonicalEdges[i]) << "E" << (i + 1);
  }
  EXPECT_EQ(g.wildcard_edge_count(), 3u);
}

TEST(DefaultGraph, ProcessesInCanonicalOrderAndPhase) {
  const ProcessGraph g = default_graph();
  const auto procs = g.processes();
  ASSERT_EQ(procs.size(), 10u);
  for (std::size_t i = 0; i < procs.size(); ++i) {
    EXPECT_EQ(*procs[i]->canonical_index, static_cast<int>(i + 1));
    const Phase expected = i < 3 ? Phase::DataProcessing : i < 7 ? Phase::ModelDevelopment : Phase::Deployment;
    EXPECT_EQ(procs[i]->phase, expected) << procs[i]->id.value;
  }
  EXPECT_EQ(g.find(ids::d2)->label, "Is the Model Adequate?");
}

TEST(DefaultGraph, IsValid) { EXPECT_TRUE(validate(default_graph()).ok()); }

TEST(ExpandWildcards, DefaultGraphGives53Edges) {
  const ProcessGraph g = expand_wildcards(default_graph());
  EXPECT_EQ(g.edges().size(), 53u);
  EXPECT_EQ(g.wildcard_edge_count(), 0u);
}

TEST(ExpandWildcards, HyperparameterTuningLoopsBackToEarlierProcesses) {
  const ProcessGraph g = expand_wildcards(default_graph());
  EXPECT_EQ(targets_of(g, ids::hyperparameter_tuning),
            (std::set<std::string>{"a_optimized_model", "requirement_engineering", "data_preparation",
                                   "feature_engineering_labelling", "model_training",
                                   "model_evaluation_during_development"}));
}

TEST(ExpandWildcards, DecisionsAnchorOnPrecedingProcess) {
  const ProcessGraph g = expand_wildcards(default_graph());
  // d2 -> P8 plus P1..P6; d3 -> P8 plus P1..P7
  EXPECT_EQ(targets_of(g, ids::d2).size(), 7u);
  EXPECT_EQ(targets_of(g, ids::d3).size(), 8u);
  EXPECT_FALSE(targets_of(g, ids::d3).contains("decision_making"));
}

TEST(ExpandWildcards, Idempotent) {
  const ProcessGraph once = expand_wildcards(default_graph());
  EXPECT_EQ(expand_wildcards(once), once);
}

TEST(ExpandWildcards, MatchesBruteForceOracle) {
  const ProcessGraph g = default_graph();
  const ProcessGraph expanded = expand_wildcards(g);
  EXPECT_EQ(testing::edge_keys(expanded), testing::oracle_expand(g));
}

TEST(NearestProcessAncestor, Decisions) {
  const ProcessGraph g = default_graph();
  EXPECT_EQ(nearest_process_ancestor(g, ids::d1, false)->id, ids::model_evaluation_during_development);
  EXPECT_EQ(nearest_process_ancestor(g, ids::d3, false)->id, ids::model_evaluation_during_deployment);
  EXPECT_EQ(nearest_process_ancestor(g, ids::hyperparameter_tuning, true)->id, ids::hyperparameter_tuning);
}

TEST(RemoveProcess, SpliceFeatureEngineeringReconnectsPredecessor) {
  ProcessGraph g = apply_edit(default_graph(), GraphEdit::remove_process(ids::feature_engineering_labelling));
  g = apply_edit(g, GraphEdit::remove_artifact(ids::a_features));
  g = apply_edit(g, GraphEdit::remove_artifact(ids::a_labels));
  EXPECT_EQ(g.find(ids::feature_engineering_labelling), nullptr);
  EXPECT_EQ(targets_of(g, ids::data_preparation),
            (std::set<std::string>{"a_clean_dataset", "a_training_dataset", "a_validation_dataset",
                                   "a_testing_dataset"}));
  EXPECT_TRUE(validate(g).ok());
}

TEST(RemoveProcess, PruneEvaluationDuringDeploymentDropsDecisionAndEdges) {
  const ProcessGraph before = default_graph();
  const ProcessGraph g =
      apply_edit(before, GraphEdit::remove_process(ids::model_evaluation_during_deployment, RemovalMode::Prune));
  EXPECT_EQ(g.find(ids::model_evaluation_during_deployment), nullptr);
  EXPECT_EQ(g.find(ids::d3), nullptr);
  EXPECT_EQ(g.edges().size(), 34u);
  for (std::size_t i = 34; i < 38; ++i) EXPECT_FALSE(g.contains_edge(before.edges()[i])) << "E" << (i + 1);
  EXPECT_TRUE(validate(g).ok());
}

TEST(RemoveProcess, SoftwareDeploymentIsIrremovable) {
  try {
    apply_edit(default_graph(), GraphEdit::remove_process(ids::software_deployment));
    FAIL() << "expected WouldDisconnectDeployment";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WouldDisconnectDeployment);
  }
}

TEST(Edits, ErrorsCarryCodes) {
  const ProcessGraph g = default_graph();
  auto code_of = [&](const GraphEdit& edit) {
    try {
      apply_edit(g, edit);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  EXPECT_EQ(code_of(GraphEdit::remove_process(NodeId("no_such_process"))), ErrorCode::UnknownNode);
  EXPECT_EQ(code_of(GraphEdit::remove_process(ids::a_features)), ErrorCode::InvalidEdit);
  EXPECT_EQ(code_of(GraphEdit::remove_artifact(ids::model_training)), ErrorCode::InvalidEdit);
  EXPECT_EQ(code_of(GraphEdit::add_node(*g.find(ids::a_labels))), ErrorCode::DuplicateNode);
  EXPECT_EQ(code_of(GraphEdit::add_edge(g.edges().front())), ErrorCode::InvalidEdit);
  EXPECT_EQ(code_of(GraphEdit::add_edge(Edge{ids::model_training, ids::model_training, {}})), ErrorCode::InvalidEdit);
  EXPECT_EQ(code_of(GraphEdit::add_edge(Edge{ids::d1, ids::model_training, {}})), ErrorCode::InvalidEdit);
  EXPECT_EQ(code_of(GraphEdit::remove_edge(Edge{ids::a_labels, ids::software_deployment, {}})),
            ErrorCode::UnknownEdge);
}

TEST(Edits, NeverMutateInput) {
  const ProcessGraph g = default_graph();
  const ProcessGraph copy = g;
  (void)apply_edit(g, GraphEdit::remove_process(ids::hyperparameter_tuning, RemovalMode::Prune));
  (void)apply_edit(g, GraphEdit::remove_artifact(ids::a_algorithm));
  try {
    (void)apply_edit(g, GraphEdit::remove_process(ids::software_deployment));
  } catch (const Error&) {
  }
  EXPECT_EQ(g, copy);
}

TEST(Edits, AddThenRemoveEdgeIsIdentity) {
  const ProcessGraph g = default_graph();
  const Edge extra{ids::a_regulations, ids::model_training, {}};
  const ProcessGraph round = apply_edit(apply_edit(g, GraphEdit::add_edge(extra)), GraphEdit::remove_edge(extra));
  EXPECT_EQ(round, g);
}

TEST(Edits, AddProcessKeepsOrderCheck) {
  const ProcessGraph g = default_graph();
  const Node late{NodeId("retraining"), NodeKind::Process, "Retraining", Phase::Deployment, 11};
  const ProcessGraph added = apply_edit(g, GraphEdit::add_node(late));
  EXPECT_EQ(added.count(NodeKind::Process), 11u);
  EXPECT_EQ(added.processes().back()->id, late.id);
  EXPECT_TRUE(validate(added).ok());
}

TEST(Validate, ReportsDanglingEdge) {
  // The graph constructor does not validate, so a dangling edge can be built directly.
  const ProcessGraph base = default_graph();
  std::vector<Edge> edges(base.edges().begin(), base.edges().end());
  edges.push_back(Edge{NodeId("ghost"), ids::model_training, {}});
  const ProcessGraph g(std::vector<Node>(base.nodes().begin(), base.nodes().end()), edges);
  const ValidationResult r = validate(g);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(std::any_of(r.violations.begin(), r.violations.end(),
                          [](const Violation& v) { return v.kind == ViolationKind::DanglingEdge; }));
}

TEST(Validate, MissingSoftwareDeployment) {
  const ProcessGraph base = default_graph();
  std::vector<Node> nodes;
  for (const Node& n : base.nodes()) {
    if (n.id != ids::software_deployment) nodes.push_back(n);
  }
  std::vector<Edge> edges;
  for (const Edge& e : base.edges()) {
    if (e.source != ids::software_deployment && e.target != ids::software_deployment) edges.push_back(e);
  }
  const ValidationResult r = validate(ProcessGraph(nodes, edges));
  EXPECT_TRUE(std::any_of(r.violations.begin(), r.violations.end(), [](const Violation& v) {
    return v.kind == ViolationKind::WouldDisconnectDeployment;
  }));
}

TEST(NodeId, WellFormedness) {
  EXPECT_TRUE(NodeId("a_raw_dataset").is_well_formed());
  EXPECT_FALSE(NodeId("Raw").is_well_formed());
  EXPECT_FALSE(NodeId("1abc").is_well_formed());
  EXPECT_TRUE(kWildcardTarget.is_wildcard());
}

}  // namespace
}  // namespace admintm
