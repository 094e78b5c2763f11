#include "admintm/profile.hpp"

#include <algorithm>

#include "admintm/error.hpp"

namespace admintm {

namespace {

template <typename E>
std::vector<std::string> options_of() {
  std::vector<std::string> out;
  for (const auto& [value, name] : EnumNames<E>::entries) out.emplace_back(name);
  return out;
}

template <typename E>
ProfileQuestion choice(std::string key, std::string prompt) {
  return ProfileQuestion{std::move(key), std::move(prompt), AnswerKind::Choice, options_of<E>(), std::nullopt};
}

ProfileQuestion flag(std::string key, std::string prompt, bool default_value) {
  return ProfileQuestion{std::move(key), std::move(prompt), AnswerKind::Flag, {"yes", "no"}, default_value};
}

std::vector<ProfileQuestion> build_questions() {
  return {
      choice<DataVisibility>("data_visibility", "Is the training data publicly available or private?"),
      choice<DataSourceTrust>("data_source_trust", "How far do you trust the sources the training data comes from?"),
      flag("repository_integrity_assured",
           "Is the integrity of the data repositories assured (nobody can add, alter or delete records)?", false),
      choice<ModelOpenness>("model_openness", "Is the model (code, weights, hyperparameters) open source or proprietary?"),
      choice<QueryAccess>("model_query_access", "Who can send queries to the deployed model?"),
      choice<DeploymentExposure>("deployment_exposure", "Where is the deployed software reachable from?"),
      ProfileQuestion{"input_modalities",
                      "Which kinds of input does the deployed model accept? (one or more)",
                      AnswerKind::MultiChoice, options_of<InputModality>(), std::nullopt},
      flag("captures_physical_environment",
           "Does the software capture its inputs from the physical world (cameras, microphones, sensors)?", true),
      choice<TransportSecurity>("transport_security", "How do inputs and outputs travel to and from the model?"),
      flag("dev_pipeline_compromise_conceivable",
           "Could an adversary plausibly gain access to some part of the development pipeline?", true),
      flag("uses_feature_engineering", "Does development include a feature engineering step?", true),
      flag("uses_labelling", "Does development include data labelling?", true),
      flag("monitors_model_in_deployment", "Is the model evaluated or monitored while deployed?", true),
      flag("has_decision_making_stage", "Are the model's predictions fed into a downstream decision-making process?",
           true),
  };
}

std::string answer_shape(const Answer& a) {
  if (std::holds_alternative<bool>(a)) return "a flag";
  if (std::holds_alternative<std::string>(a)) return "a single choice";
  return "a list of choices";
}

class AnswerReader {
 public:
  explicit AnswerReader(const Answers& answers) : answers_(answers) {}

  const Answer* find(std::string_view key) const {
    auto it = answers_.find(key);
    return it == answers_.end() ? nullptr : &it->second;
  }

  const Answer& require(const ProfileQuestion& q) const {
    const Answer* a = find(q.key);
    if (a == nullptr) throw Error(ErrorCode::MissingAnswer, "no answer for '" + q.key + "'");
    return *a;
  }

  template <typename E>
  E choice(const ProfileQuestion& q) const {
    const Answer& a = require(q);
    const auto* text = std::get_if<std::string>(&a);
    if (text == nullptr) {
      throw Error(ErrorCode::BadEnumValue, "'" + q.key + "' expects a single choice, got " + answer_shape(a));
    }
    return parse<E>(q.key, *text);
  }

  std::set<InputModality> modalities(const ProfileQuestion& q) const {
    const Answer& a = require(q);
    const auto* list = std::get_if<std::vector<std::string>>(&a);
    if (list == nullptr) {
      throw Error(ErrorCode::BadEnumValue, "'" + q.key + "' expects a list of choices, got " + answer_shape(a));
    }
    std::set<InputModality> out;
    for (const auto& item : *list) out.insert(parse<InputModality>(q.key, item));
    return out;
  }

  bool flag(const ProfileQuestion& q) const {
    const Answer* a = find(q.key);
    if (a == nullptr) return q.default_flag.value_or(false);
    const auto* b = std::get_if<bool>(a);
    if (b == nullptr) throw Error(ErrorCode::BadEnumValue, "'" + q.key + "' expects a flag, got " + answer_shape(*a));
    return *b;
  }

 private:
  template <typename E>
  static E parse(const std::string& key, const std::string& text) {
    auto v = enum_from_name<E>(text);
    if (!v) {
      std::string allowed;
      for (const auto& [value, name] : EnumNames<E>::entries) {
        if (!allowed.empty()) allowed += ", ";
        allowed += name;
      }
      throw Error(ErrorCode::BadEnumValue, "'" + key + "': '" + text + "' is not one of {" + allowed + "}");
    }
    return *v;
  }

  const Answers& answers_;
};

}  // namespace

const std::vector<ProfileQuestion>& question_set() {
  static const std::vector<ProfileQuestion> questions = build_questions();
  return questions;
}

void check_invariants(const SoftwareProfile& p) {
  if (p.input_modalities.empty()) {
    throw Error(ErrorCode::InvariantViolation, "input_modalities must name at least one input kind");
  }
  if (p.deployment_exposure == DeploymentExposure::Offline && p.transport_security != TransportSecurity::LocalOnly) {
    throw Error(ErrorCode::InvariantViolation,
                "deployment_exposure=offline requires transport_security=local_only, got " +
                    std::string(enum_name(p.transport_security)));
  }
}

SoftwareProfile build_profile(const Answers& answers) {
  const auto& qs = question_set();
  for (const auto& [key, value] : answers) {
    if (key == kProfileNameKey) continue;
    bool known = std::any_of(qs.begin(), qs.end(), [&](const ProfileQuestion& q) { return q.key == key; });
    if (!known) throw Error(ErrorCode::UnknownKey, "unknown profile key '" + key + "'");
  }

  AnswerReader in(answers);
  SoftwareProfile p;
  if (const Answer* name = in.find(kProfileNameKey)) {
    const auto* text = std::get_if<std::string>(name);
    if (text == nullptr) throw Error(ErrorCode::BadEnumValue, "'name' must be text");
    p.name = *text;
  }
  p.data_visibility = in.choice<DataVisibility>(qs[0]);
  p.data_source_trust = in.choice<DataSourceTrust>(qs[1]);
  p.repository_integrity_assured = in.flag(qs[2]);
  p.model_openness = in.choice<ModelOpenness>(qs[3]);
  p.model_query_access = in.choice<QueryAccess>(qs[4]);
  p.deployment_exposure = in.choice<DeploymentExposure>(qs[5]);
  p.input_modalities = in.modalities(qs[6]);
  p.captures_physical_environment = in.flag(qs[7]);
  p.transport_security = in.choice<TransportSecurity>(qs[8]);
  p.dev_pipeline_compromise_conceivable = in.flag(qs[9]);
  p.uses_feature_engineering = in.flag(qs[10]);
  p.uses_labelling = in.flag(qs[11]);
  p.monitors_model_in_deployment = in.flag(qs[12]);
  p.has_decision_making_stage = in.flag(qs[13]);
  check_invariants(p);
  return p;
}

Answers to_answers(const SoftwareProfile& p) {
  std::vector<std::string> modalities;
  for (InputModality m : p.input_modalities) modalities.emplace_back(enum_name(m));
  return Answers{
      {"name", p.name},
      {"data_visibility", std::string(enum_name(p.data_visibility))},
      {"data_source_trust", std::string(enum_name(p.data_source_trust))},
      {"repository_integrity_assured", p.repository_integrity_assured},
      {"model_openness", std::string(enum_name(p.model_openness))},
      {"model_query_access", std::string(enum_name(p.model_query_access))},
      {"deployment_exposure", std::string(enum_name(p.deployment_exposure))},
      {"input_modalities", std::move(modalities)},
      {"captures_physical_environment", p.captures_physical_environment},
      {"transport_security", std::string(enum_name(p.transport_security))},
      {"dev_pipeline_compromise_conceivable", p.dev_pipeline_compromise_conceivable},
      {"uses_feature_engineering", p.uses_feature_engineering},
      {"uses_labelling", p.uses_labelling},
      {"monitors_model_in_deployment", p.monitors_model_in_deployment},
      {"has_decision_making_stage", p.has_decision_making_stage},
  };
}

std::vector<GraphEdit> derive_graph_edits(const SoftwareProfile& p) {
  namespace id = node_ids;
  std::vector<GraphEdit> edits;
  if (!p.uses_feature_engineering && !p.uses_labelling) {
    edits.push_back(GraphEdit::remove_process(NodeId(id::feature_engineering_labelling), RemovalMode::Splice));
    edits.push_back(GraphEdit::remove_artifact(NodeId(id::features)));
    edits.push_back(GraphEdit::remove_artifact(NodeId(id::labels)));
  } else if (!p.uses_feature_engineering) {
    edits.push_back(GraphEdit::remove_artifact(NodeId(id::features)));
  } else if (!p.uses_labelling) {
    edits.push_back(GraphEdit::remove_artifact(NodeId(id::labels)));
  }
  if (!p.monitors_model_in_deployment) {
    edits.push_back(GraphEdit::remove_process(NodeId(id::model_evaluation_during_deployment), RemovalMode::Prune));
  }
  if (!p.has_decision_making_stage) {
    // The decision artifact goes first: pruning the process would otherwise
    // leave it orphaned and remove it implicitly.
    edits.push_back(GraphEdit::remove_artifact(NodeId(id::decision)));
    edits.push_back(GraphEdit::remove_process(NodeId(id::decision_making), RemovalMode::Prune));
  }
  return edits;
}

}  // namespace admintm
