#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace grtor {

/// Maximum bipartite matching (Hopcroft-Karp) on left vertices 0..L-1 and
/// right vertices 0..R-1.
class BipartiteMatcher {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BipartiteMatcher(std::size_t left, std::size_t right);

  void add_edge(std::size_t l, std::size_t r);

  /// Grows the current matching to maximum size and returns that size.
  std::size_t maximize();
  /// One augmenting-path search from an unmatched vertex. Matched vertices
  /// stay matched, so calling these in a chosen order gives a matching that
  /// covers a greedy prefix of that order.
  bool augment_from_left(std::size_t l);
  bool augment_from_right(std::size_t r);

  std::size_t size() const noexcept { return size_; }
  std::size_t mate_of_left(std::size_t l) const noexcept { return mate_left_[l]; }
  std::size_t mate_of_right(std::size_t r) const noexcept { return mate_right_[r]; }

 private:
  bool bfs();
  bool dfs(std::size_t l);
  bool try_left(std::size_t l, std::vector<char>& seen_right);
  bool try_right(std::size_t r, std::vector<char>& seen_left);

  std::vector<std::vector<std::size_t>> adj_left_;
  std::vector<std::vector<std::size_t>> adj_right_;
  std::vector<std::size_t> mate_left_;
  std::vector<std::size_t> mate_right_;
  std::vector<std::size_t> layer_;
  std::size_t size_ = 0;
};

}  // namespace grtor
