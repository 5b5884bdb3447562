#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pinilot/group.hpp"

// Line-oriented group files:
//
//   # comment
//   name S3
//   degree 3
//   gen (1 2 3)
//   gen (1 2)
//
// Points are 1-indexed; `gen ()` is the identity.
namespace pinilot {

struct GroupSpecFile {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::string> generators;
};

// Throws ParseError with a "line N:" prefix.
GroupSpecFile parse_group_spec(std::string_view text);
// Disjoint cycles, 1-indexed. Throws ParseError.
Perm parse_cycles(std::string_view text, std::size_t degree);
GroupPtr build_from_spec(const GroupSpecFile &spec, const BuildOptions &options = {});
GroupPtr parse_group_file(std::string_view text, const BuildOptions &options = {});
GroupPtr load_group_file(const std::filesystem::path &path, const BuildOptions &options = {});

std::string export_group_file(const FiniteGroup &g);

} // namespace pinilot
