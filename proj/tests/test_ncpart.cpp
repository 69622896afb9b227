#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cfree/ncpart.hpp"

using cfree::BlockLabel;
using cfree::NCPartition;
using cfree::SetPartition;

namespace {

SetPartition sp(int n, std::vector<std::vector<int>> blocks) {
  return SetPartition::from_blocks(n, std::move(blocks));
}

// Independent brute force: all set partitions of {1..n} via restricted
// growth strings.
std::vector<SetPartition> all_set_partitions(int n) {
  std::vector<SetPartition> out;
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == n) {
      std::vector<std::vector<int>> blocks(static_cast<std::size_t>(used));
      for (int p = 0; p < n; ++p) blocks[static_cast<std::size_t>(assign[static_cast<std::size_t>(p)])].push_back(p + 1);
      out.push_back(sp(n, std::move(blocks)));
      return;
    }
    for (int b = 0; b <= used; ++b) {
      assign[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(used, b + 1));
    }
  };
  if (n == 0) {
    out.push_back(SetPartition{0, {}});
  } else {
    rec(rec, 0, 0);
  }
  return out;
}

}  // namespace

TEST_CASE("canonical form and validation") {
  const auto p = sp(4, {{3, 2}, {4, 1}});
  CHECK(p.blocks == std::vector<std::vector<int>>{{1, 4}, {2, 3}});
  CHECK_THROWS_AS(sp(3, {{1, 2}}), std::invalid_argument);          // not covering
  CHECK_THROWS_AS(sp(3, {{1, 2}, {2, 3}}), std::invalid_argument);  // overlap
  CHECK_THROWS_AS(sp(3, {{1, 2, 3}, {}}), std::invalid_argument);   // empty block
  CHECK_THROWS_AS(sp(2, {{1, 2, 3}}), std::invalid_argument);       // out of range
}

TEST_CASE("is_noncrossing on the canonical examples") {
  CHECK_FALSE(cfree::is_noncrossing(sp(4, {{1, 3}, {2, 4}})));
  CHECK(cfree::is_noncrossing(sp(4, {{1, 4}, {2, 3}})));
  CHECK(cfree::is_noncrossing(sp(3, {{1}, {2, 3}})));
  CHECK(cfree::is_noncrossing(sp(6, {{1, 6}, {2, 3}, {4, 5}})));
  CHECK_FALSE(cfree::is_noncrossing(sp(6, {{1, 4}, {2, 5}, {3, 6}})));
}

TEST_CASE("classify_blocks labels") {
  const auto nested = cfree::classify_blocks(sp(4, {{1, 4}, {2, 3}}));
  CHECK(nested.labels == std::vector<BlockLabel>{BlockLabel::Outer, BlockLabel::Inner});

  const auto sideBySide = cfree::classify_blocks(sp(4, {{1, 2}, {3, 4}}));
  CHECK(sideBySide.labels == std::vector<BlockLabel>{BlockLabel::Outer, BlockLabel::Outer});

  const auto deeper = cfree::classify_blocks(sp(5, {{1, 5}, {2, 3}, {4}}));
  CHECK(deeper.labels ==
        std::vector<BlockLabel>{BlockLabel::Outer, BlockLabel::Inner, BlockLabel::Inner});

  CHECK_THROWS_AS(cfree::classify_blocks(sp(4, {{1, 3}, {2, 4}})), std::invalid_argument);
}

TEST_CASE("classification is idempotent on canonical forms") {
  for (const auto& p : cfree::enumerate_nc(6)) {
    const auto again = cfree::classify_blocks(p.partition);
    CHECK(again.partition == p.partition);
    CHECK(again.labels == p.labels);
  }
}

TEST_CASE("enumeration counts match the Catalan recurrence") {
  for (int n = 0; n <= 10; ++n) {
    CHECK(static_cast<std::int64_t>(cfree::enumerate_nc(n).size()) == cfree::catalan_number(n));
  }
  CHECK(cfree::catalan_number(14) == 2674440);
}

TEST_CASE("n=1 and n=4 enumerations") {
  const auto single = cfree::enumerate_nc(1);
  REQUIRE(single.size() == 1);
  CHECK(single[0].partition == sp(1, {{1}}));
  CHECK(single[0].labels == std::vector<BlockLabel>{BlockLabel::Outer});

  const auto four = cfree::enumerate_nc(4);
  CHECK(four.size() == 14);
  const auto crossing = sp(4, {{1, 3}, {2, 4}});
  for (const auto& p : four) CHECK(p.partition != crossing);
}

TEST_CASE("enumeration equals brute-force filtering") {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::vector<std::vector<int>>> brute;
    for (const auto& p : all_set_partitions(n)) {
      if (cfree::is_noncrossing(p)) brute.insert(p.blocks);
    }
    std::set<std::vector<std::vector<int>>> enumerated;
    for (const auto& p : cfree::enumerate_nc(n)) enumerated.insert(p.partition.blocks);
    CHECK(brute == enumerated);
  }
}

TEST_CASE("deterministic lexicographic order and outer boundary blocks") {
  for (int n = 1; n <= 7; ++n) {
    const auto list = cfree::enumerate_nc(n);
    CHECK(std::is_sorted(list.begin(), list.end(), [](const NCPartition& a, const NCPartition& b) {
      return a.partition < b.partition;
    }));
    CHECK(list == cfree::enumerate_nc(n));
    for (const auto& p : list) {
      for (std::size_t b = 0; b < p.partition.blocks.size(); ++b) {
        const auto& block = p.partition.blocks[b];
        if (std::find(block.begin(), block.end(), 1) != block.end() ||
            std::find(block.begin(), block.end(), n) != block.end()) {
          CHECK(p.labels[b] == BlockLabel::Outer);
        }
      }
    }
  }
}

TEST_CASE("labels agree with classify_blocks for every enumerated partition") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : cfree::enumerate_nc(n)) {
      CHECK(cfree::classify_blocks(p.partition).labels == p.labels);
    }
  }
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(cfree::enumerate_nc(15), std::invalid_argument);
  CHECK_THROWS_AS(cfree::enumerate_nc(-1), std::invalid_argument);
  CHECK_NOTHROW(cfree::enumerate_nc(9, 9));
  CHECK_THROWS_AS(cfree::enumerate_nc(10, 9), std::invalid_argument);
}

TEST_CASE("is_noncrossing agrees with the quadruple-scan oracle") {
  // Direct reading of the definition: some a < b < c < d with a, c in one
  // block and b, d in another.
  auto crosses_by_quadruples = [](const SetPartition& p) {
    std::vector<int> block_of(static_cast<std::size_t>(p.n) + 1, -1);
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
      for (int x : p.blocks[b]) block_of[static_cast<std::size_t>(x)] = static_cast<int>(b);
    }
    for (int a = 1; a <= p.n; ++a) {
      for (int b = a + 1; b <= p.n; ++b) {
        for (int c = b + 1; c <= p.n; ++c) {
          for (int d = c + 1; d <= p.n; ++d) {
            if (block_of[static_cast<std::size_t>(a)] == block_of[static_cast<std::size_t>(c)] &&
                block_of[static_cast<std::size_t>(b)] == block_of[static_cast<std::size_t>(d)] &&
                block_of[static_cast<std::size_t>(a)] != block_of[static_cast<std::size_t>(b)]) {
              return true;
            }
          }
        }
      }
    }
    return false;
  };
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : all_set_partitions(n)) {
      CHECK(cfree::is_noncrossing(p) == !crosses_by_quadruples(p));
    }
  }
}
