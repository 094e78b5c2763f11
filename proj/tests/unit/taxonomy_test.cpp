#include <gtest/gtest.h>

#include <set>
#include <utility>

#include "admintm/error.hpp"
#include "admintm/taxonomy.hpp"

namespace admintm {
namespace {

using S = Stride;

TEST(Taxonomy, FourteenLeavesInFixedOrder) {
  const std::vector<std::string> expected{
      "data.exfiltration.property",      "data.exfiltration.dataset_theft",
      "data.exfiltration.datapoint_verification",
      "data.poisoning",                  "model.poisoning",
      "model.policy_exfiltration",       "model.extraction",
      "input.prompt_injection",          "input.dos.flooding",
      "input.dos.manipulated_inputs",    "input.evasion.natural_language",
      "input.evasion.image_video",       "input.evasion.real_world",
      "input.mitm"};
  std::vector<std::string> actual;
  for (const AttackClass* leaf : taxonomy().leaves()) actual.push_back(leaf->id.value);
  EXPECT_EQ(actual, expected);
  EXPECT_EQ(taxonomy().version(), kTaxonomyVersion);
}

TEST(Taxonomy, ThreeCategories) {
  const auto cats = taxonomy().categories();
  ASSERT_EQ(cats.size(), 3u);
  EXPECT_EQ(cats[0]->id.value, "data");
  EXPECT_EQ(cats[1]->id.value, "model");
  EXPECT_EQ(cats[2]->id.value, "input");
}

// One pair per (class, category) in the STRIDE mapping.
TEST(Stride, TwelveMidLevelPairs) {
  std::set<std::pair<std::string, S>> pairs;
  for (const AttackClass* mid : taxonomy().mid_level_classes()) {
    for (S s : stride_for(mid->id)) pairs.emplace(mid->id.value, s);
  }
  const std::set<std::pair<std::string, S>> expected{
      {"input.evasion", S::Spoofing},
      {"input.evasion", S::Repudiation},
      {"data.poisoning", S::Spoofing},
      {"data.poisoning", S::Tampering},
      {"model.poisoning", S::Spoofing},
      {"model.poisoning", S::Tampering},
      {"input.mitm", S::Tampering},
      {"data.exfiltration", S::InformationDisclosure},
      {"model.policy_exfiltration", S::InformationDisclosure},
      {"model.extraction", S::InformationDisclosure},
      {"input.dos", S::DenialOfService},
      {"input.prompt_injection", S::ElevationOfPrivilege},
  };
  EXPECT_EQ(pairs, expected);
}

TEST(Stride, LeavesInheritFromMidLevel) {
  for (const AttackClass* leaf : taxonomy().leaves()) {
    EXPECT_FALSE(leaf->stride.empty()) << leaf->id.value;
    EXPECT_FALSE(leaf->attachment_selector.empty()) << leaf->id.value;
    EXPECT_EQ(stride_for(leaf->id), stride_for(taxonomy().mid_level_of(leaf->id).id)) << leaf->id.value;
  }
}

TEST(Stride, CategoryIsUnionOfChildren) {
  EXPECT_EQ(stride_for(AttackId("model")),
            (StrideSet{S::Spoofing, S::Tampering, S::InformationDisclosure}));
}

TEST(Lookup, UnknownAttackThrows) {
  try {
    lookup(AttackId("input.teleportation"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownAttack);
  }
}

TEST(Lookup, PoisoningVariants) {
  const AttackClass& p = lookup(AttackId("data.poisoning"));
  EXPECT_TRUE(p.is_leaf());
  EXPECT_TRUE(p.is_mid_level());
  EXPECT_EQ(p.category, Category::Data);
  ASSERT_GE(p.variants.size(), 3u);
  EXPECT_EQ(p.variants[0], "addition");
  EXPECT_EQ(p.variants[1], "modification");
  EXPECT_EQ(p.variants[2], "deletion");
}

TEST(AttackIdTest, Segments) {
  const AttackId id("input.dos.flooding");
  EXPECT_EQ(id.depth(), 3u);
  EXPECT_EQ(id.parent().value, "input.dos");
  EXPECT_EQ(taxonomy().mid_level_of(id).id.value, "input.dos");
}

}  // namespace
}  // namespace admintm
