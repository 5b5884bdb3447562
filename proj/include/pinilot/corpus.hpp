#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pinilot/group.hpp"

namespace pinilot {

// Named constructors. Points are 0-indexed internally.
GroupPtr cyclic_group(std::size_t n, const BuildOptions &options = {});
// Order 2n, n >= 3, acting on n points.
GroupPtr dihedral_group(std::size_t n, const BuildOptions &options = {});
// Q_{4n}, n >= 2, regular action on 4n points.
GroupPtr dicyclic_group(std::size_t n, const BuildOptions &options = {});
GroupPtr elementary_abelian_group(std::size_t p, std::size_t k,
                                  const BuildOptions &options = {});
GroupPtr symmetric_group(std::size_t n, const BuildOptions &options = {});
GroupPtr alternating_group(std::size_t n, const BuildOptions &options = {});
GroupPtr sl2_3(const BuildOptions &options = {});
GroupPtr gl2_3(const BuildOptions &options = {});
GroupPtr psl2_7(const BuildOptions &options = {});

// Integer matrix acting on exponent vectors of C_n^k: row i is the image of
// the i-th basis generator.
using IntMatrix = std::vector<std::vector<long>>;

// C_n^k x| H with one matrix per generator of H.
GroupPtr matrix_semidirect(std::size_t n, std::size_t k, const GroupPtr &h,
                           const std::vector<IntMatrix> &images,
                           const BuildOptions &options = {});

// The order-75 group <a,b> x| <x> with a^x = ab, b^x = a^2 b^3.
GroupPtr order75_group(const BuildOptions &options = {});
// A5 x C5.
GroupPtr a5_times_c5(const BuildOptions &options = {});

struct CorpusEntry {
  std::string name;
  std::size_t order;
};

// Names and orders of the built-in corpus, sorted by (order, name).
std::vector<CorpusEntry> builtin_catalog();
// Built-in groups of order <= max_order, sorted by (order, name).
std::vector<GroupPtr> builtin_corpus(std::size_t max_order = kDefaultMaxOrder);
// Throws GroupError when the name is not in the catalog.
GroupPtr builtin_group(const std::string &name,
                       std::size_t max_order = kMaxOrderLimit);

// Every *.grp file in dir, in file-name order. Groups above max_order are
// dropped. Throws ParseError on malformed files or duplicate names.
std::vector<GroupPtr> load_corpus_dir(const std::filesystem::path &dir,
                                      std::size_t max_order = kDefaultMaxOrder);

// Appends extra to base; throws ParseError on a duplicate name.
void merge_corpus(std::vector<GroupPtr> &base, const std::vector<GroupPtr> &extra);

} // namespace pinilot
