#include "cfree/ncpart.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfree {

SetPartition SetPartition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
  if (n < 0) throw std::invalid_argument("partition ground-set size must be >= 0");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  int count = 0;
  for (auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("partition contains an empty block");
    std::sort(block.begin(), block.end());
    for (int x : block) {
      if (x < 1 || x > n) throw std::invalid_argument("partition element out of range");
      if (seen[static_cast<std::size_t>(x)]) throw std::invalid_argument("partition blocks are not disjoint");
      seen[static_cast<std::size_t>(x)] = 1;
      ++count;
    }
  }
  if (count != n) throw std::invalid_argument("partition blocks do not cover {1..n}");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return SetPartition{n, std::move(blocks)};
}

bool SetPartition::operator<(const SetPartition& other) const {
  if (n != other.n) return n < other.n;
  return blocks < other.blocks;
}

bool is_noncrossing(const SetPartition& p) {
  // Scan 1..n keeping the stack of open blocks. An element joining its
  // block must find it on top after popping only finished blocks.
  std::vector<int> block_of(static_cast<std::size_t>(p.n) + 1, -1);
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    for (int x : p.blocks[b]) block_of[static_cast<std::size_t>(x)] = static_cast<int>(b);
  }
  std::vector<int> stack;
  for (int i = 1; i <= p.n; ++i) {
    const int b = block_of[static_cast<std::size_t>(i)];
    if (p.blocks[static_cast<std::size_t>(b)].front() == i) {
      stack.push_back(b);
    } else {
      while (!stack.empty() && stack.back() != b) {
        const auto& top = p.blocks[static_cast<std::size_t>(stack.back())];
        if (top.back() > i) return false;  // open block straddles i: crossing
        stack.pop_back();
      }
      if (stack.empty()) return false;
    }
    if (p.blocks[static_cast<std::size_t>(b)].back() == i) stack.pop_back();
  }
  return true;
}

NCPartition classify_blocks(const SetPartition& p) {
  if (!is_noncrossing(p)) {
    throw std::invalid_argument("classify_blocks requires a non-crossing partition");
  }
  std::vector<BlockLabel> labels(p.blocks.size(), BlockLabel::Outer);
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    for (std::size_t j = 0; j < p.blocks.size(); ++j) {
      if (i == j) continue;
      if (p.blocks[j].front() < p.blocks[i].front() && p.blocks[j].back() > p.blocks[i].back()) {
        labels[i] = BlockLabel::Inner;
        break;
      }
    }
  }
  return NCPartition{p, std::move(labels)};
}

std::int64_t catalan_number(int n) {
  if (n < 0) throw std::invalid_argument("catalan_number needs n >= 0");
  std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int i = 0; i < m; ++i) c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
  }
  return c[static_cast<std::size_t>(n)];
}

namespace {

// Backtracking over elements 1..n. Element i either opens a new block or
// joins an open block; a join finishes every block opened above the
// target, and those are exactly the inner blocks.
struct NcEnumerator {
  int n;
  std::vector<std::vector<int>> blocks;   // creation order == canonical order
  std::vector<BlockLabel> labels;
  std::vector<int> open;                  // stack of open block indices
  const std::function<void(const std::vector<std::vector<int>>&, const std::vector<BlockLabel>&)>& visit;

  void run(int i) {
    if (i > n) {
      visit(blocks, labels);
      return;
    }
    // Open a new block at i.
    blocks.push_back({i});
    labels.push_back(BlockLabel::Outer);
    open.push_back(static_cast<int>(blocks.size()) - 1);
    run(i + 1);
    open.pop_back();
    blocks.pop_back();
    labels.pop_back();

    // Join an open block, closing everything above it.
    const std::size_t depth = open.size();
    for (std::size_t t = depth; t-- > 0;) {
      std::vector<int> closed(open.begin() + static_cast<std::ptrdiff_t>(t) + 1, open.end());
      for (int b : closed) labels[static_cast<std::size_t>(b)] = BlockLabel::Inner;
      open.resize(t + 1);
      blocks[static_cast<std::size_t>(open[t])].push_back(i);
      run(i + 1);
      blocks[static_cast<std::size_t>(open[t])].pop_back();
      for (int b : closed) labels[static_cast<std::size_t>(b)] = BlockLabel::Outer;
      open.insert(open.end(), closed.begin(), closed.end());
    }
  }
};

}  // namespace

void for_each_noncrossing(
    int n,
    const std::function<void(const std::vector<std::vector<int>>&, const std::vector<BlockLabel>&)>& visit,
    int max_size) {
  if (n < 0 || n > max_size) {
    throw std::invalid_argument("non-crossing enumeration size out of range");
  }
  if (n == 0) {
    static const std::vector<std::vector<int>> kNoBlocks;
    static const std::vector<BlockLabel> kNoLabels;
    visit(kNoBlocks, kNoLabels);
    return;
  }
  NcEnumerator e{n, {}, {}, {}, visit};
  e.run(1);
}

std::vector<NCPartition> enumerate_nc(int n, int max_size) {
  std::vector<NCPartition> out;
  for_each_noncrossing(
      n,
      [&](const std::vector<std::vector<int>>& blocks, const std::vector<BlockLabel>& labels) {
        out.push_back(NCPartition{SetPartition{n, blocks}, labels});
      },
      max_size);
  std::sort(out.begin(), out.end(), [](const NCPartition& a, const NCPartition& b) {
    return a.partition < b.partition;
  });
  return out;
}

}  // namespace cfree
