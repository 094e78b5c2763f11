#include "admintm/io_schema.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "admintm/error.hpp"

namespace admintm {

namespace {

using json = nlohmann::json;
using ordered = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Reading

std::string type_name(const json& j) { return j.type_name(); }

class Field {
 public:
  Field(const json& value, std::string path) : value_(value), path_(std::move(path)) {}

  const json& raw() const { return value_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void mismatch(std::string_view expected) const {
    throw Error(ErrorCode::TypeMismatch,
                path_ + ": expected " + std::string(expected) + ", got " + type_name(value_));
  }

  std::string text() const {
    if (!value_.is_string()) mismatch("a string");
    return value_.get<std::string>();
  }

  bool flag() const {
    if (!value_.is_boolean()) mismatch("a boolean");
    return value_.get<bool>();
  }

  int integer() const {
    if (!value_.is_number_integer()) mismatch("an integer");
    return value_.get<int>();
  }

  template <typename E>
  E choice() const {
    const std::string s = text();
    if (auto v = enum_from_name<E>(s)) return *v;
    std::string allowed;
    for (const auto& [value, name] : EnumNames<E>::entries) {
      if (!allowed.empty()) allowed += ", ";
      allowed += name;
    }
    throw Error(ErrorCode::BadEnumValue, path_ + ": '" + s + "' is not one of {" + allowed + "}");
  }

  NodeId node_id(bool allow_wildcard = false) const {
    NodeId id(text());
    if (!(id.is_well_formed() || (allow_wildcard && id.is_wildcard()))) {
      throw Error(ErrorCode::MalformedValue, path_ + ": '" + id.value + "' is not a valid node id");
    }
    return id;
  }

  std::vector<Field> items() const {
    if (!value_.is_array()) mismatch("an array");
    std::vector<Field> out;
    for (std::size_t i = 0; i < value_.size(); ++i) {
      out.emplace_back(value_[i], path_ + "[" + std::to_string(i) + "]");
    }
    return out;
  }

 private:
  const json& value_;
  std::string path_;
};

// A JSON object whose keys must all come from `allowed`.
class Object {
 public:
  Object(const Field& field, std::initializer_list<std::string_view> allowed) : path_(field.path()) {
    if (!field.raw().is_object()) field.mismatch("an object");
    object_ = &field.raw();
    for (const auto& [key, value] : object_->items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        throw Error(ErrorCode::UnknownField, prefix() + "unknown field '" + key + "'");
      }
    }
  }

  bool has(std::string_view key) const { return object_->contains(key); }

  Field at(std::string_view key) const {
    auto it = object_->find(key);
    if (it == object_->end()) {
      throw Error(ErrorCode::MissingField, prefix() + "missing field '" + std::string(key) + "'");
    }
    return Field(*it, child(key));
  }

  std::optional<Field> maybe(std::string_view key) const {
    auto it = object_->find(key);
    if (it == object_->end()) return std::nullopt;
    return Field(*it, child(key));
  }

 private:
  std::string prefix() const { return path_.empty() ? "" : path_ + ": "; }
  std::string child(std::string_view key) const {
    return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
  }

  const json* object_ = nullptr;
  std::string path_;
};

SoftwareProfile read_profile(const Field& field) {
  std::initializer_list<std::string_view> keys{"name",
                                               "data_visibility",
                                               "data_source_trust",
                                               "repository_integrity_assured",
                                               "model_openness",
                                               "model_query_access",
                                               "deployment_exposure",
                                               "input_modalities",
                                               "captures_physical_environment",
                                               "transport_security",
                                               "dev_pipeline_compromise_conceivable",
                                               "uses_feature_engineering",
                                               "uses_labelling",
                                               "monitors_model_in_deployment",
                                               "has_decision_making_stage"};
  Object obj(field, keys);

  Answers answers;
  if (auto name = obj.maybe("name")) answers.emplace("name", name->text());
  for (const ProfileQuestion& q : question_set()) {
    auto value = obj.maybe(q.key);
    if (!value) {
      if (q.answer_kind != AnswerKind::Flag) {
        throw Error(ErrorCode::MissingField,
                    (field.path().empty() ? "" : field.path() + ": ") + "missing field '" + q.key + "'");
      }
      continue;
    }
    switch (q.answer_kind) {
      case AnswerKind::Flag:
        answers.emplace(q.key, value->flag());
        break;
      case AnswerKind::Choice:
        answers.emplace(q.key, value->text());
        break;
      case AnswerKind::MultiChoice: {
        std::vector<std::string> list;
        for (const Field& item : value->items()) list.push_back(item.text());
        answers.emplace(q.key, std::move(list));
        break;
      }
    }
  }
  try {
    return build_profile(answers);
  } catch (const Error& e) {
    if (field.path().empty()) throw;
    throw Error(e.code(), field.path() + ": " + e.what());
  }
}

Node read_node(const Field& field) {
  Object obj(field, {"id", "kind", "label", "phase", "canonical_index"});
  Node n;
  n.id = obj.at("id").node_id();
  n.kind = obj.at("kind").choice<NodeKind>();
  n.label = obj.at("label").text();
  n.phase = obj.at("phase").choice<Phase>();
  if (auto idx = obj.maybe("canonical_index")) n.canonical_index = idx->integer();
  return n;
}

Edge read_edge(const Field& field) {
  Object obj(field, {"source", "target", "guard"});
  Edge e;
  e.source = obj.at("source").node_id();
  e.target = obj.at("target").node_id(true);
  if (auto guard = obj.maybe("guard")) e.guard = guard->choice<Guard>();
  return e;
}

GraphEdit read_edit(const Field& field) {
  if (!field.raw().is_object()) field.mismatch("an object");
  Object probe(field, {"op", "id", "mode", "node", "edge"});
  const EditKind kind = probe.at("op").choice<EditKind>();
  switch (kind) {
    case EditKind::RemoveProcess: {
      Object obj(field, {"op", "id", "mode"});
      RemovalMode mode = RemovalMode::Splice;
      if (auto m = obj.maybe("mode")) mode = m->choice<RemovalMode>();
      return GraphEdit::remove_process(obj.at("id").node_id(), mode);
    }
    case EditKind::RemoveArtifact: {
      Object obj(field, {"op", "id"});
      return GraphEdit::remove_artifact(obj.at("id").node_id());
    }
    case EditKind::AddNode: {
      Object obj(field, {"op", "node"});
      return GraphEdit::add_node(read_node(obj.at("node")));
    }
    case EditKind::AddEdge: {
      Object obj(field, {"op", "edge"});
      return GraphEdit::add_edge(read_edge(obj.at("edge")));
    }
    case EditKind::RemoveEdge: {
      Object obj(field, {"op", "edge"});
      return GraphEdit::remove_edge(read_edge(obj.at("edge")));
    }
  }
  throw Error(ErrorCode::BadEnumValue, field.path() + ": unsupported op");
}

GraphOverlay read_overlay(const Field& field) {
  Object obj(field, {"edits"});
  GraphOverlay overlay;
  for (const Field& item : obj.at("edits").items()) overlay.edits.push_back(read_edit(item));
  return overlay;
}

ProcessGraph read_graph(const Field& field) {
  Object obj(field, {"wildcard_policy", "nodes", "edges"});
  const auto policy = obj.at("wildcard_policy").choice<WildcardPolicy>();
  std::vector<Node> nodes;
  for (const Field& item : obj.at("nodes").items()) nodes.push_back(read_node(item));
  std::vector<Edge> edges;
  for (const Field& item : obj.at("edges").items()) edges.push_back(read_edge(item));
  return ProcessGraph(std::move(nodes), std::move(edges), policy);
}

ThreatFinding read_finding(const Field& field) {
  Object obj(field, {"attack", "status", "reason_code", "rationale", "stride", "attachments", "variants"});
  ThreatFinding f;
  f.attack = AttackId(obj.at("attack").text());
  f.applicability.status = obj.at("status").choice<Status>();
  f.applicability.reason_code = obj.at("reason_code").choice<ReasonCode>();
  f.applicability.rationale = obj.at("rationale").text();
  if (implied_status(f.applicability.reason_code) != f.applicability.status) {
    throw Error(ErrorCode::InvariantViolation,
                field.path() + ": reason_code '" + std::string(enum_name(f.applicability.reason_code)) +
                    "' contradicts status '" + std::string(enum_name(f.applicability.status)) + "'");
  }
  for (const Field& s : obj.at("stride").items()) f.stride.insert(s.choice<Stride>());
  for (const Field& a : obj.at("attachments").items()) f.attachments.push_back(a.node_id());
  for (const Field& v : obj.at("variants").items()) f.variants.push_back(v.text());
  return f;
}

ThreatModelResult read_result(const Field& field) {
  Object obj(field, {"taxonomy_version", "tool_version", "created_at", "profile", "graph", "findings"});
  ThreatModelResult r;
  r.taxonomy_version = obj.at("taxonomy_version").text();
  r.tool_version = obj.at("tool_version").text();
  if (auto created = obj.maybe("created_at")) r.created_at = created->text();
  r.profile = read_profile(obj.at("profile"));
  r.graph = read_graph(obj.at("graph"));
  for (const Field& item : obj.at("findings").items()) r.findings.push_back(read_finding(item));
  return r;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::string parse_error_detail(const std::string& what) {
  // nlohmann messages look like "[json.exception.parse_error.101] parse
  // error at line 3, column 1: <detail>".
  auto column = what.find("column");
  auto colon = what.find(": ", column == std::string::npos ? 0 : column);
  return colon == std::string::npos ? what : what.substr(colon + 2);
}

json parse_json(std::string_view text) {
  std::vector<std::set<std::string>> open_objects;
  json::parser_callback_t track_keys = [&](int /*depth*/, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
        open_objects.emplace_back();
        break;
      case json::parse_event_t::object_end:
        if (!open_objects.empty()) open_objects.pop_back();
        break;
      case json::parse_event_t::key:
        if (!open_objects.empty() && !open_objects.back().insert(parsed.get<std::string>()).second) {
          throw Error(ErrorCode::SyntaxError, "duplicate key '" + parsed.get<std::string>() + "'");
        }
        break;
      default:
        break;
    }
    return true;
  };
  try {
    return json::parse(text.begin(), text.end(), track_keys);
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte);
    throw Error(ErrorCode::SyntaxError, "syntax error at line " + std::to_string(line) + ", column " +
                                            std::to_string(column) + ": " + parse_error_detail(e.what()));
  }
}

// ---------------------------------------------------------------------------
// Writing

template <typename E>
std::string name_of(E value) {
  return std::string(enum_name(value));
}

ordered write_profile(const SoftwareProfile& p) {
  ordered modalities = ordered::array();
  for (InputModality m : p.input_modalities) modalities.push_back(name_of(m));
  ordered out;
  out["name"] = p.name;
  out["data_visibility"] = name_of(p.data_visibility);
  out["data_source_trust"] = name_of(p.data_source_trust);
  out["repository_integrity_assured"] = p.repository_integrity_assured;
  out["model_openness"] = name_of(p.model_openness);
  out["model_query_access"] = name_of(p.model_query_access);
  out["deployment_exposure"] = name_of(p.deployment_exposure);
  out["input_modalities"] = std::move(modalities);
  out["captures_physical_environment"] = p.captures_physical_environment;
  out["transport_security"] = name_of(p.transport_security);
  out["dev_pipeline_compromise_conceivable"] = p.dev_pipeline_compromise_conceivable;
  out["uses_feature_engineering"] = p.uses_feature_engineering;
  out["uses_labelling"] = p.uses_labelling;
  out["monitors_model_in_deployment"] = p.monitors_model_in_deployment;
  out["has_decision_making_stage"] = p.has_decision_making_stage;
  return out;
}

ordered write_node(const Node& n) {
  ordered out;
  out["id"] = n.id.value;
  out["kind"] = name_of(n.kind);
  out["label"] = n.label;
  out["phase"] = name_of(n.phase);
  if (n.canonical_index) out["canonical_index"] = *n.canonical_index;
  return out;
}

ordered write_edge(const Edge& e) {
  ordered out;
  out["source"] = e.source.value;
  out["target"] = e.target.value;
  if (e.guard) out["guard"] = name_of(*e.guard);
  return out;
}

ordered write_edit(const GraphEdit& edit) {
  ordered out;
  out["op"] = name_of(edit.kind);
  switch (edit.kind) {
    case EditKind::RemoveProcess:
      out["id"] = std::get<NodeId>(edit.payload).value;
      out["mode"] = name_of(edit.mode);
      break;
    case EditKind::RemoveArtifact:
      out["id"] = std::get<NodeId>(edit.payload).value;
      break;
    case EditKind::AddNode:
      out["node"] = write_node(std::get<Node>(edit.payload));
      break;
    case EditKind::AddEdge:
    case EditKind::RemoveEdge:
      out["edge"] = write_edge(std::get<Edge>(edit.payload));
      break;
  }
  return out;
}

ordered write_graph(const ProcessGraph& g) {
  ordered nodes = ordered::array();
  for (const Node& n : g.nodes()) nodes.push_back(write_node(n));
  ordered edges = ordered::array();
  for (const Edge& e : g.edges()) edges.push_back(write_edge(e));
  ordered out;
  out["wildcard_policy"] = name_of(g.wildcard_policy());
  out["nodes"] = std::move(nodes);
  out["edges"] = std::move(edges);
  return out;
}

ordered write_finding(const ThreatFinding& f) {
  ordered stride = ordered::array();
  for (Stride s : f.stride) stride.push_back(name_of(s));
  ordered attachments = ordered::array();
  for (const NodeId& id : f.attachments) attachments.push_back(id.value);
  ordered out;
  out["attack"] = f.attack.value;
  out["status"] = name_of(f.applicability.status);
  out["reason_code"] = name_of(f.applicability.reason_code);
  out["rationale"] = f.applicability.rationale;
  out["stride"] = std::move(stride);
  out["attachments"] = std::move(attachments);
  out["variants"] = f.variants;
  return out;
}

ordered write_result(const ThreatModelResult& r) {
  ordered findings = ordered::array();
  for (const ThreatFinding& f : r.findings) findings.push_back(write_finding(f));
  ordered out;
  out["taxonomy_version"] = r.taxonomy_version;
  out["tool_version"] = r.tool_version;
  if (r.created_at) out["created_at"] = *r.created_at;
  out["profile"] = write_profile(r.profile);
  out["graph"] = write_graph(r.graph);
  out["findings"] = std::move(findings);
  return out;
}

std::string dump(const ordered& doc) {
  return doc.dump(2, ' ', false, ordered::error_handler_t::strict) + "\n";
}

}  // namespace

Document Document::of(SoftwareProfile profile) {
  return Document{std::string(kFormatVersion), DocumentKind::Profile, std::move(profile), false};
}

Document Document::of(GraphOverlay overlay) {
  return Document{std::string(kFormatVersion), DocumentKind::GraphOverlay, std::move(overlay), false};
}

Document Document::of(ThreatModelResult result) {
  return Document{std::string(kFormatVersion), DocumentKind::Result, std::move(result), false};
}

Document parse(std::string_view text, DocumentKind expected_kind) {
  const json root = parse_json(text);
  const Field top(root, "");
  if (!root.is_object()) top.mismatch("a top-level object");

  Object header(top, {"format_version", "kind", "body"});
  const std::string version = header.at("format_version").text();
  if (version != kFormatVersion) {
    throw Error(ErrorCode::VersionMismatch, "unsupported format_version '" + version + "' (expected '" +
                                                std::string(kFormatVersion) + "')");
  }
  const DocumentKind kind = header.at("kind").choice<DocumentKind>();
  if (kind != expected_kind) {
    throw Error(ErrorCode::KindMismatch, "expected a '" + name_of(expected_kind) + "' document, got '" +
                                             name_of(kind) + "'");
  }

  const Field body = header.at("body");
  Document doc;
  doc.format_version = version;
  doc.kind = kind;
  switch (kind) {
    case DocumentKind::Profile:
      doc.body = read_profile(body);
      break;
    case DocumentKind::GraphOverlay:
      doc.body = read_overlay(body);
      break;
    case DocumentKind::Result: {
      ThreatModelResult r = read_result(body);
      doc.stale_taxonomy = r.taxonomy_version != taxonomy().version();
      if (!doc.stale_taxonomy) {
        for (const ThreatFinding& f : r.findings) {
          const AttackClass* cls = taxonomy().find(f.attack);
          if (cls == nullptr || !cls->is_leaf()) {
            throw Error(ErrorCode::UnknownAttack, "body.findings: '" + f.attack.value + "' is not an attack leaf");
          }
        }
      }
      doc.body = std::move(r);
      break;
    }
  }
  return doc;
}

std::string serialize(const Document& doc) {
  ordered out;
  out["format_version"] = doc.format_version;
  out["kind"] = name_of(doc.kind);
  switch (doc.kind) {
    case DocumentKind::Profile:
      out["body"] = write_profile(doc.profile());
      break;
    case DocumentKind::GraphOverlay: {
      ordered edits = ordered::array();
      for (const GraphEdit& e : doc.overlay().edits) edits.push_back(write_edit(e));
      out["body"]["edits"] = std::move(edits);
      break;
    }
    case DocumentKind::Result:
      out["body"] = write_result(doc.result());
      break;
  }
  return dump(out);
}

std::string serialize_taxonomy(const ThreatTaxonomy& tax) {
  ordered nodes = ordered::array();
  for (const AttackClass& c : tax.nodes()) {
    ordered stride = ordered::array();
    for (Stride s : c.stride) stride.push_back(name_of(s));
    ordered selector = ordered::array();
    for (const NodeId& id : c.attachment_selector) selector.push_back(id.value);
    ordered children = ordered::array();
    for (const AttackId& child : c.children) children.push_back(child.value);
    ordered node;
    node["id"] = c.id.value;
    node["title"] = c.title;
    node["category"] = name_of(c.category);
    node["description"] = c.description;
    node["variants"] = c.variants;
    node["stride"] = std::move(stride);
    node["attachment_selector"] = std::move(selector);
    node["children"] = std::move(children);
    nodes.push_back(std::move(node));
  }
  ordered out;
  out["format_version"] = std::string(kFormatVersion);
  out["kind"] = "taxonomy";
  out["body"]["version"] = tax.version();
  out["body"]["nodes"] = std::move(nodes);
  return dump(out);
}

}  // namespace admintm
