#include "stonework/roughset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace stonework {

ApproximationSpace::ApproximationSpace(std::vector<std::string> universe,
                                       const std::vector<std::vector<std::string>>& blocks) {
  if (static_cast<int>(universe.size()) > kMaxUniverse)
    throw TooLarge("universe exceeds " + std::to_string(kMaxUniverse) + " points");
  universe_ = std::move(universe);

  std::map<std::string, int> index;
  for (int i = 0; i < size(); ++i) {
    if (!index.emplace(universe_[i], i).second)
      throw InvalidInput("duplicate point name '" + universe_[i] + "'");
  }

  PointSet covered = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw InvalidInput("empty block in partition");
    PointSet mask = 0;
    for (const auto& name : block) {
      auto it = index.find(name);
      if (it == index.end()) throw InvalidInput("unknown point name '" + name + "' in block");
      PointSet bit = PointSet{1} << it->second;
      if (covered & bit) throw InvalidInput("point '" + name + "' appears in two blocks");
      covered |= bit;
      mask |= bit;
    }
    blocks_.push_back(mask);
  }
  if (covered != full()) throw InvalidInput("blocks do not cover the universe");
  std::sort(blocks_.begin(), blocks_.end());
}

ApproximationSpace ApproximationSpace::from_pairs(
    std::vector<std::string> universe,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(universe.size()); ++i) index.emplace(universe[i], i);

  // Union-find over point indices.
  std::vector<int> parent(universe.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& [x, y] : pairs) {
    auto ix = index.find(x);
    auto iy = index.find(y);
    if (ix == index.end()) throw InvalidInput("unknown point name '" + x + "'");
    if (iy == index.end()) throw InvalidInput("unknown point name '" + y + "'");
    parent[find(ix->second)] = find(iy->second);
  }

  std::map<int, std::vector<std::string>> groups;
  for (int i = 0; i < static_cast<int>(universe.size()); ++i)
    groups[find(i)].push_back(universe[i]);
  std::vector<std::vector<std::string>> blocks;
  for (auto& [root, members] : groups) blocks.push_back(std::move(members));
  return ApproximationSpace(std::move(universe), blocks);
}

int ApproximationSpace::point_index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (universe_[i] == name) return i;
  throw PointNotInUniverse("point '" + name + "' is not in the universe");
}

PointSet ApproximationSpace::block_of(int point) const {
  if (point < 0 || point >= size()) throw PointNotInUniverse("point index out of range");
  PointSet bit = PointSet{1} << point;
  for (PointSet b : blocks_)
    if (b & bit) return b;
  return bit;  // unreachable for a valid partition
}

std::string ApproximationSpace::set_name(PointSet s) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (s & (PointSet{1} << i)) {
      if (!first) out += ',';
      out += universe_[i];
      first = false;
    }
  }
  out += '}';
  return out;
}

RoughPair approximate(const ApproximationSpace& space, PointSet subset) {
  if (subset & ~space.full()) throw NotASubset("subset has points outside the universe");
  RoughPair result;
  for (PointSet b : space.blocks()) {
    if ((b & subset) == b) result.lower |= b;
    if (b & subset) result.upper |= b;
  }
  return result;
}

std::vector<RoughPair> rough_sets(const ApproximationSpace& space) {
  std::set<RoughPair> seen;
  PointSet full = space.full();
  for (PointSet a = 0;; ++a) {
    seen.insert(approximate(space, a));
    if (a == full) break;
  }
  std::vector<RoughPair> result(seen.begin(), seen.end());

  // The characterization enumerates three states per block, which stays
  // cheap for the block counts this type admits; cross-check when it does.
  if (space.blocks().size() <= 12) {
    auto characterized = rough_sets_characterized(space);
    if (characterized != result)
      throw Error("rough set enumeration disagrees with its characterization");
  }
  return result;
}

std::vector<RoughPair> rough_sets_characterized(const ApproximationSpace& space) {
  std::vector<RoughPair> result;
  const auto& blocks = space.blocks();
  const int b = static_cast<int>(blocks.size());
  std::vector<int> state(b, 0);  // 0 = outside, 1 = upper only, 2 = both
  while (true) {
    bool ok = true;
    RoughPair p;
    for (int i = 0; i < b; ++i) {
      if (state[i] == 1 && std::popcount(blocks[i]) == 1) {
        ok = false;
        break;
      }
      if (state[i] >= 1) p.upper |= blocks[i];
      if (state[i] == 2) p.lower |= blocks[i];
    }
    if (ok) result.push_back(p);

    int i = b - 1;
    while (i >= 0 && state[i] == 2) state[i--] = 0;
    if (i < 0) break;
    ++state[i];
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<RoughPair> generalized_rough_sets(const ApproximationSpace& space) {
  const auto& blocks = space.blocks();
  const int b = static_cast<int>(blocks.size());
  if (b > kMaxGeneralizedBlocks)
    throw TooLarge("more than " + std::to_string(kMaxGeneralizedBlocks) + " blocks");

  std::vector<RoughPair> result;
  std::vector<int> state(b, 0);
  while (true) {
    RoughPair p;
    for (int i = 0; i < b; ++i) {
      if (state[i] >= 1) p.upper |= blocks[i];
      if (state[i] == 2) p.lower |= blocks[i];
    }
    result.push_back(p);

    int i = b - 1;
    while (i >= 0 && state[i] == 2) state[i--] = 0;
    if (i < 0) break;
    ++state[i];
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::string rough_pair_name(const ApproximationSpace& space, const RoughPair& p) {
  return "(" + space.set_name(p.lower) + "," + space.set_name(p.upper) + ")";
}

}  // namespace stonework
