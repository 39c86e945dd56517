#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ggd/ggd_format.hpp"

namespace ggd {

/// C3G, C6G, L3P, P2, P3, P6.
std::vector<std::string> fixture_names();
/// Throws Error for an unknown name.
GgdModel fixture(std::string_view name);

/// Pair groupoid on objects "0".."n-1" with morphisms "(i,j)"; no star edges.
GgdModel pair_groupoid(int n);
/// Z/n as a one-object groupoid on "o" with morphisms "0".."n-1", carrying
/// its group-groupoid structure; no star edges.
GgdModel cyclic_group(int n);

struct Mutation {
  std::string description;
  GgdModel model;
};

/// `count` single-entry rewires: a compose entry g∘h = k becomes g∘h = k'
/// with k' the next morphism of the same hom-set (or the next morphism
/// overall). For group-groupoids half of them rewire the morphism product.
std::vector<Mutation> mutations(const GgdModel& m, std::size_t count = 6);

}  // namespace ggd
