#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "indpoly/graph.hpp"

namespace indpoly {

// Deterministic tree corpus generation. Labelings are canonical:
//   path             0..n-1 along the path
//   star             center 0, leaves 1..n-1
//   caterpillar      spine 0..spine-1, then the legs of spine vertex i are
//                    spine + i*legs .. spine + (i+1)*legs - 1
//   complete binary  heap order (children of i are 2i+1 and 2i+2)
//   spider           center 0, leg i is the chain 1 + i*len .. 1 + (i+1)*len - 1

Tree gen_path(std::size_t n);
Tree gen_star(std::size_t leaves);
Tree gen_caterpillar(std::size_t spine, std::size_t legs_per_vertex);
Tree gen_complete_binary(std::size_t depth);
Tree gen_spider(std::size_t legs, std::size_t leg_length);

// Uniformly random labeled tree, decoded from a random length-(n-2) sequence.
// The source is std::mt19937_64 seeded with `seed`; symbols are drawn by
// power-of-two-mask rejection, so the same (n, seed) yields the identical
// tree on every platform.
Tree gen_random_tree(std::size_t n, std::uint64_t seed);

// Every labeled tree on n vertices exactly once (n^(n-2) of them for n >= 3,
// one for n in {1, 2}). Capped at n <= 8.
void enumerate_all_trees(std::size_t n, const std::function<void(const Tree&)>& fn);

inline constexpr std::size_t kEnumerateMaxVertices = 8;

enum class TreeFamily { Path, Star, Caterpillar, CompleteBinary, Spider, Random };

std::string_view family_name(TreeFamily family);
std::optional<TreeFamily> parse_family(std::string_view name);

// One corpus instance, as described by CLI flags.
struct TreeFamilySpec {
  TreeFamily family = TreeFamily::Path;
  std::size_t n = 1;           // total vertices (path, star, random)
  std::size_t spine = 1;       // caterpillar
  std::size_t legs = 1;        // caterpillar (per spine vertex), spider (count)
  std::size_t depth = 0;       // complete binary
  std::size_t leg_length = 1;  // spider
  std::uint64_t seed = 0;      // random
};

Tree build_tree(const TreeFamilySpec& spec);

}  // namespace indpoly
