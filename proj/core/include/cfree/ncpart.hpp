#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace cfree {

/// Set partition of {1..n} in canonical form: blocks ordered by minimum
/// element, elements ascending inside each block.
struct SetPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  /// Canonicalizes and validates (union {1..n}, disjoint, non-empty).
  /// Throws std::invalid_argument on a malformed partition.
  static SetPartition from_blocks(int n, std::vector<std::vector<int>> blocks);

  bool operator==(const SetPartition& other) const = default;
  /// Lexicographic on the canonical block list; the enumeration order.
  bool operator<(const SetPartition& other) const;
};

enum class BlockLabel : std::uint8_t { Outer, Inner };

/// Non-crossing partition with per-block inner/outer labels, aligned with
/// the canonical block order. A block is Inner exactly when some other
/// block has elements strictly on both sides of it.
struct NCPartition {
  SetPartition partition;
  std::vector<BlockLabel> labels;

  bool operator==(const NCPartition& other) const = default;
};

/// True iff no a<b<c<d exists with a,c in one block and b,d in another.
bool is_noncrossing(const SetPartition& p);

/// Labels every block Inner/Outer. Throws std::invalid_argument when p
/// crosses.
NCPartition classify_blocks(const SetPartition& p);

/// Guard against Catalan blow-up: C_14 = 2,674,440.
inline constexpr int kMaxPartitionSize = 14;

/// Catalan number C_n by the standard recurrence (n <= 30 or so fits in
/// 64 bits; callers here stay well below).
std::int64_t catalan_number(int n);

/// All non-crossing partitions of {1..n}, each exactly once, labeled, in
/// lexicographic order on the canonical form. n = 0 yields the single
/// empty partition. Throws std::invalid_argument when n < 0 or
/// n > max_size.
std::vector<NCPartition> enumerate_nc(int n, int max_size = kMaxPartitionSize);

/// Visitor-style enumeration without materializing the list. The callback
/// receives canonical blocks and labels valid only for the duration of the
/// call. Visit order is deterministic but not the lexicographic one.
void for_each_noncrossing(
    int n,
    const std::function<void(const std::vector<std::vector<int>>& blocks,
                             const std::vector<BlockLabel>& labels)>& visit,
    int max_size = kMaxPartitionSize);

}  // namespace cfree
