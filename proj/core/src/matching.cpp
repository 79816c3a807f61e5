#include "grtor/matching.hpp"

#include <limits>
#include <queue>

#include "grtor/error.hpp"

namespace grtor {

namespace {
constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
}

BipartiteMatcher::BipartiteMatcher(std::size_t left, std::size_t right)
    : adj_left_(left), adj_right_(right), mate_left_(left, npos), mate_right_(right, npos), layer_(left, kInf) {}

void BipartiteMatcher::add_edge(std::size_t l, std::size_t r) {
  if (l >= adj_left_.size() || r >= adj_right_.size()) throw UsageError("matching edge out of range");
  adj_left_[l].push_back(r);
  adj_right_[r].push_back(l);
}

bool BipartiteMatcher::bfs() {
  std::queue<std::size_t> q;
  for (std::size_t l = 0; l < adj_left_.size(); ++l) {
    if (mate_left_[l] == npos) {
      layer_[l] = 0;
      q.push(l);
    } else {
      layer_[l] = kInf;
    }
  }
  bool found = false;
  while (!q.empty()) {
    std::size_t l = q.front();
    q.pop();
    for (std::size_t r : adj_left_[l]) {
      std::size_t next = mate_right_[r];
      if (next == npos) {
        found = true;
      } else if (layer_[next] == kInf) {
        layer_[next] = layer_[l] + 1;
        q.push(next);
      }
    }
  }
  return found;
}

bool BipartiteMatcher::dfs(std::size_t l) {
  for (std::size_t r : adj_left_[l]) {
    std::size_t next = mate_right_[r];
    if (next == npos || (layer_[next] == layer_[l] + 1 && dfs(next))) {
      mate_left_[l] = r;
      mate_right_[r] = l;
      return true;
    }
  }
  layer_[l] = kInf;
  return false;
}

std::size_t BipartiteMatcher::maximize() {
  while (bfs()) {
    for (std::size_t l = 0; l < adj_left_.size(); ++l) {
      if (mate_left_[l] == npos && dfs(l)) ++size_;
    }
  }
  return size_;
}

bool BipartiteMatcher::try_left(std::size_t l, std::vector<char>& seen_right) {
  for (std::size_t r : adj_left_[l]) {
    if (seen_right[r]) continue;
    seen_right[r] = 1;
    if (mate_right_[r] == npos || try_left(mate_right_[r], seen_right)) {
      mate_left_[l] = r;
      mate_right_[r] = l;
      return true;
    }
  }
  return false;
}

bool BipartiteMatcher::try_right(std::size_t r, std::vector<char>& seen_left) {
  for (std::size_t l : adj_right_[r]) {
    if (seen_left[l]) continue;
    seen_left[l] = 1;
    if (mate_left_[l] == npos || try_right(mate_left_[l], seen_left)) {
      mate_left_[l] = r;
      mate_right_[r] = l;
      return true;
    }
  }
  return false;
}

bool BipartiteMatcher::augment_from_left(std::size_t l) {
  if (mate_left_[l] != npos) return false;
  std::vector<char> seen(adj_right_.size(), 0);
  if (!try_left(l, seen)) return false;
  ++size_;
  return true;
}

bool BipartiteMatcher::augment_from_right(std::size_t r) {
  if (mate_right_[r] != npos) return false;
  std::vector<char> seen(adj_left_.size(), 0);
  if (!try_right(r, seen)) return false;
  ++size_;
  return true;
}

}  // namespace grtor
