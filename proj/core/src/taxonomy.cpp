#include "admintm/taxonomy.hpp"

#include <algorithm>

#include "admintm/error.hpp"

namespace admintm {

namespace {

namespace id = node_ids;

std::vector<NodeId> select(std::initializer_list<std::string_view> ids) {
  std::vector<NodeId> out;
  for (auto v : ids) out.emplace_back(v);
  return out;
}

AttackClass category(std::string_view path, std::string title, Category cat, std::string description,
                     std::initializer_list<std::string_view> children) {
  AttackClass c;
  c.id = AttackId(path);
  c.title = std::move(title);
  c.category = cat;
  c.description = std::move(description);
  for (auto child : children) c.children.emplace_back(child);
  return c;
}

AttackClass group(std::string_view path, std::string title, Category cat, std::string description, StrideSet stride,
                  std::initializer_list<std::string_view> children) {
  AttackClass c = category(path, std::move(title), cat, std::move(description), children);
  c.stride = std::move(stride);
  return c;
}

AttackClass leaf(std::string_view path, std::string title, Category cat, std::string description, StrideSet stride,
                 std::vector<NodeId> selector, std::vector<std::string> variants = {}) {
  AttackClass c;
  c.id = AttackId(path);
  c.title = std::move(title);
  c.category = cat;
  c.description = std::move(description);
  c.stride = std::move(stride);
  c.attachment_selector = std::move(selector);
  c.variants = std::move(variants);
  return c;
}

const StrideSet kInfoDisclosure{Stride::InformationDisclosure};
const StrideSet kSpoofTamper{Stride::Spoofing, Stride::Tampering};
const StrideSet kSpoofRepudiate{Stride::Spoofing, Stride::Repudiation};
const StrideSet kDenial{Stride::DenialOfService};

ThreatTaxonomy build() {
  constexpr auto D = Category::Data;
  constexpr auto M = Category::Model;
  constexpr auto I = Category::Input;

  std::vector<AttackClass> nodes{
      category("data", "Attacks on Data", D,
               "The adversary targets the datasets: stealing private data through or around the model, or "
               "corrupting the data used to build it.",
               {"data.exfiltration", "data.poisoning"}),
      group("data.exfiltration", "Data Exfiltration", D,
            "Recovery of private information about the training data.", kInfoDisclosure,
            {"data.exfiltration.property", "data.exfiltration.dataset_theft",
             "data.exfiltration.datapoint_verification"}),
      leaf("data.exfiltration.property", "Property Exfiltration", D,
           "Inferring statistical properties of the training dataset by interacting with the deployed model.",
           kInfoDisclosure, select({id::training_dataset, id::software_deployment})),
      leaf("data.exfiltration.dataset_theft", "Dataset Theft", D,
           "Stealing a dataset wholesale from where it is stored or processed.", kInfoDisclosure,
           select({id::raw_dataset, id::training_dataset, id::validation_dataset, id::testing_dataset})),
      leaf("data.exfiltration.datapoint_verification", "Datapoint Verification", D,
           "Membership checking: querying the model to decide whether a given record was part of its "
           "training dataset.",
           kInfoDisclosure, select({id::training_dataset, id::software_deployment})),
      leaf("data.poisoning", "Data Poisoning", D,
           "Corrupting training or validation data by adding, modifying or deleting datapoints so the model "
           "degrades or misclassifies chosen inputs.",
           kSpoofTamper,
           select({id::data_preparation, id::feature_engineering_labelling, id::raw_dataset, id::clean_dataset,
                   id::training_dataset, id::validation_dataset}),
           {"addition", "modification", "deletion", "targeted", "untargeted", "via_environment", "via_inputs"}),

      category("model", "Attacks on Model", M,
               "The adversary targets the model itself: altering its logic or recovering it.",
               {"model.poisoning", "model.policy_exfiltration", "model.extraction"}),
      leaf("model.poisoning", "Model Poisoning / Logic Corruption", M,
           "Altering the training code, algorithm, gradients or rules so the model loses accuracy or acts "
           "maliciously.",
           kSpoofTamper,
           select({id::model_training, id::hyperparameter_tuning, id::algorithm, id::trained_model})),
      leaf("model.policy_exfiltration", "Policy Exfiltration", M,
           "Learning the decision policy the model enforces from the input/output behaviour of repeated "
           "queries.",
           kInfoDisclosure, select({id::software_deployment})),
      leaf("model.extraction", "Model Extraction", M,
           "Model stealing: reconstructing parameters or hyperparameters from known inputs and observed "
           "outputs.",
           kInfoDisclosure, select({id::software_deployment, id::trained_model, id::optimized_model})),

      category("input", "Attacks on Input", I,
               "The adversary feeds malicious content to the deployed model or interferes with its traffic.",
               {"input.prompt_injection", "input.dos", "input.evasion", "input.mitm"}),
      leaf("input.prompt_injection", "Prompt Injection", I,
           "Crafted natural-language prompts that bypass filters or obtain privileges the system should not "
           "grant.",
           {Stride::ElevationOfPrivilege}, select({id::production_data, id::software_deployment})),
      group("input.dos", "Denial of Service", I, "Making the deployed model unavailable or unreliable.", kDenial,
            {"input.dos.flooding", "input.dos.manipulated_inputs"}),
      leaf("input.dos.flooding", "Request Flooding", I,
           "Saturating the model with illegitimate requests so legitimate users are not served.", kDenial,
           select({id::software_deployment})),
      leaf("input.dos.manipulated_inputs", "Manipulated-Input Flooding", I,
           "Flooding the model with deliberately crafted inputs that trigger misclassifications or errors.",
           kDenial, select({id::software_deployment})),
      group("input.evasion", "Evasion", I,
            "Inputs shaped to avoid correct classification; techniques depend on the input modality.",
            kSpoofRepudiate,
            {"input.evasion.natural_language", "input.evasion.image_video", "input.evasion.real_world"}),
      leaf("input.evasion.natural_language", "Natural-Language Evasion", I,
           "Text inputs crafted to slip past a language model, e.g. spam written to avoid a filter.",
           kSpoofRepudiate, select({id::production_data, id::software_deployment})),
      leaf("input.evasion.image_video", "Image/Video Evasion", I,
           "Perturbed images or video frames that the model misclassifies.", kSpoofRepudiate,
           select({id::production_data, id::software_deployment})),
      leaf("input.evasion.real_world", "Real-World Evasion", I,
           "Physical changes to the environment the software captures, made to defeat the model.",
           kSpoofRepudiate, select({id::production_data, id::software_deployment})),
      leaf("input.mitm", "Man in the Middle", I,
           "Interception or alteration of the deployed model's inputs or outputs in transit.",
           {Stride::Tampering}, select({id::production_data, id::prediction, id::decision_making})),
  };
  return ThreatTaxonomy(std::string(kTaxonomyVersion), std::move(nodes));
}

}  // namespace

std::vector<std::string_view> AttackId::segments() const {
  std::vector<std::string_view> out;
  std::string_view rest = value;
  while (!rest.empty()) {
    auto dot = rest.find('.');
    out.push_back(rest.substr(0, dot));
    if (dot == std::string_view::npos) break;
    rest.remove_prefix(dot + 1);
  }
  return out;
}

AttackId AttackId::parent() const {
  auto dot = value.rfind('.');
  return dot == std::string::npos ? AttackId() : AttackId(value.substr(0, dot));
}

ThreatTaxonomy::ThreatTaxonomy(std::string version, std::vector<AttackClass> nodes)
    : version_(std::move(version)), nodes_(std::move(nodes)) {}

std::vector<const AttackClass*> ThreatTaxonomy::leaves() const {
  std::vector<const AttackClass*> out;
  for (const auto& n : nodes_) {
    if (n.is_leaf()) out.push_back(&n);
  }
  return out;
}

std::vector<const AttackClass*> ThreatTaxonomy::categories() const {
  std::vector<const AttackClass*> out;
  for (const auto& n : nodes_) {
    if (n.is_category()) out.push_back(&n);
  }
  return out;
}

std::vector<const AttackClass*> ThreatTaxonomy::mid_level_classes() const {
  std::vector<const AttackClass*> out;
  for (const auto& n : nodes_) {
    if (n.is_mid_level()) out.push_back(&n);
  }
  return out;
}

const AttackClass* ThreatTaxonomy::find(const AttackId& id) const {
  auto it = std::find_if(nodes_.begin(), nodes_.end(), [&](const AttackClass& c) { return c.id == id; });
  return it == nodes_.end() ? nullptr : &*it;
}

const AttackClass& ThreatTaxonomy::lookup(const AttackId& id) const {
  const AttackClass* c = find(id);
  if (c == nullptr) throw Error(ErrorCode::UnknownAttack, "unknown attack '" + id.value + "'");
  return *c;
}

const AttackClass& ThreatTaxonomy::mid_level_of(const AttackId& id) const {
  const AttackClass& c = lookup(id);
  if (c.is_category()) {
    throw Error(ErrorCode::UnknownAttack, "'" + id.value + "' is a category, not an attack class");
  }
  return c.is_mid_level() ? c : lookup(c.id.parent());
}

StrideSet ThreatTaxonomy::stride_for(const AttackId& id) const {
  const AttackClass& c = lookup(id);
  if (!c.is_category()) return mid_level_of(id).stride;
  StrideSet out;
  for (const AttackId& child : c.children) {
    const auto& s = lookup(child).stride;
    out.insert(s.begin(), s.end());
  }
  return out;
}

const ThreatTaxonomy& taxonomy() {
  static const ThreatTaxonomy instance = build();
  return instance;
}

const AttackClass& lookup(const AttackId& id) { return taxonomy().lookup(id); }

StrideSet stride_for(const AttackId& id) { return taxonomy().stride_for(id); }

}  // namespace admintm
