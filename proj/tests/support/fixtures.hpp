#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "admintm/engine.hpp"
#include "admintm/io_schema.hpp"

namespace admintm::testing {

inline std::filesystem::path fixture_dir() { return ADMINTM_FIXTURE_DIR; }

inline std::filesystem::path fixture(const std::string& name) { return fixture_dir() / name; }

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline SoftwareProfile load_profile(const std::string& name) {
  return parse(read_text(fixture(name)), DocumentKind::Profile).profile();
}

inline GraphOverlay load_overlay(const std::string& name) {
  return parse(read_text(fixture(name)), DocumentKind::GraphOverlay).overlay();
}

inline ThreatModelResult cs1_result() { return model_threats(load_profile("cs1.profile.json")); }

inline ThreatModelResult cs2_result() {
  return model_threats(load_profile("cs2.profile.json"), load_overlay("cs2.overlay.json").edits);
}

}  // namespace admintm::testing
