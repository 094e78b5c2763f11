#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>

namespace admintm {

// Each closed enumeration specializes this with its wire spellings, in
// declaration order. Wire spellings are the document and report vocabulary.
template <typename E>
struct EnumNames;

template <typename E>
constexpr std::string_view enum_name(E value) {
  for (const auto& [v, name] : EnumNames<E>::entries) {
    if (v == value) return name;
  }
  return "?";
}

template <typename E>
constexpr std::optional<E> enum_from_name(std::string_view name) {
  for (const auto& [v, n] : EnumNames<E>::entries) {
    if (n == name) return v;
  }
  return std::nullopt;
}

template <typename E>
constexpr auto enum_values() {
  std::array<E, EnumNames<E>::entries.size()> out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = EnumNames<E>::entries[i].first;
  return out;
}

}  // namespace admintm
