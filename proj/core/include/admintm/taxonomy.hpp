#pragma once

#include <compare>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "admintm/enum_names.hpp"
#include "admintm/process_model.hpp"

namespace admintm {

enum class Category { Data, Model, Input };

enum class Stride {
  Spoofing,
  Tampering,
  Repudiation,
  InformationDisclosure,
  DenialOfService,
  ElevationOfPrivilege,
};

template <>
struct EnumNames<Category> {
  static constexpr std::array<std::pair<Category, std::string_view>, 3> entries{{
      {Category::Data, "data"},
      {Category::Model, "model"},
      {Category::Input, "input"},
  }};
};
template <>
struct EnumNames<Stride> {
  static constexpr std::array<std::pair<Stride, std::string_view>, 6> entries{{
      {Stride::Spoofing, "Spoofing"},
      {Stride::Tampering, "Tampering"},
      {Stride::Repudiation, "Repudiation"},
      {Stride::InformationDisclosure, "InformationDisclosure"},
      {Stride::DenialOfService, "DenialOfService"},
      {Stride::ElevationOfPrivilege, "ElevationOfPrivilege"},
  }};
};

using StrideSet = std::set<Stride>;

// Dotted path through the taxonomy tree, e.g. "data.exfiltration.dataset_theft".
struct AttackId {
  std::string value;

  AttackId() = default;
  explicit AttackId(std::string v) : value(std::move(v)) {}
  explicit AttackId(std::string_view v) : value(v) {}
  explicit AttackId(const char* v) : value(v) {}

  std::vector<std::string_view> segments() const;
  std::size_t depth() const { return segments().size(); }
  // "" for a category.
  AttackId parent() const;

  auto operator<=>(const AttackId&) const = default;
};

// One node of the taxonomy tree: a category (depth 1), a mid-level attack
// class (depth 2), or a sub-type (depth 3). Nodes without children are the
// leaves that threat findings are reported against.
struct AttackClass {
  AttackId id;
  std::string title;
  Category category = Category::Data;
  std::string description;
  std::vector<std::string> variants;
  StrideSet stride;  // empty on categories
  std::vector<NodeId> attachment_selector;  // leaves only
  std::vector<AttackId> children;

  bool is_leaf() const { return children.empty(); }
  bool is_category() const { return id.depth() == 1; }
  bool is_mid_level() const { return id.depth() == 2; }
};

class ThreatTaxonomy {
 public:
  ThreatTaxonomy(std::string version, std::vector<AttackClass> nodes);

  const std::string& version() const { return version_; }

  // Pre-order: category, its classes, their sub-types.
  std::span<const AttackClass> nodes() const { return nodes_; }
  // Leaves in fixed taxonomy order; findings follow this order.
  std::vector<const AttackClass*> leaves() const;
  std::vector<const AttackClass*> categories() const;
  std::vector<const AttackClass*> mid_level_classes() const;

  const AttackClass* find(const AttackId& id) const;
  // Throws Error(UnknownAttack).
  const AttackClass& lookup(const AttackId& id) const;
  // Mid-level ancestor of a leaf or sub-type (itself when mid-level).
  const AttackClass& mid_level_of(const AttackId& id) const;
  // Categories return the union over their classes.
  StrideSet stride_for(const AttackId& id) const;

 private:
  std::string version_;
  std::vector<AttackClass> nodes_;
};

inline constexpr std::string_view kTaxonomyVersion = "admin-v1";

// Built-in knowledge base: 3 categories, 9 mid-level classes, 14 leaves.
const ThreatTaxonomy& taxonomy();

const AttackClass& lookup(const AttackId& id);
StrideSet stride_for(const AttackId& id);

}  // namespace admintm
