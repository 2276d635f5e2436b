// Copyright 2026 The batchgreedy Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BATCHGREEDY_INDEX_SET_H_
#define BATCHGREEDY_INDEX_SET_H_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace batchgreedy {

// Strictly increasing list of indices into a ground set {0, ..., m-1}.
class IndexSet {
 public:
  IndexSet() = default;
  // Sorts and removes duplicates; negative entries are rejected.
  explicit IndexSet(std::vector<int> indices);
  IndexSet(std::initializer_list<int> indices);

  static IndexSet Range(int m);
  static IndexSet FromMask(std::uint64_t mask);

  int size() const { return static_cast<int>(indices_.size()); }
  bool empty() const { return indices_.empty(); }
  int operator[](int i) const { return indices_[i]; }
  const std::vector<int>& indices() const { return indices_; }
  std::vector<int>::const_iterator begin() const { return indices_.begin(); }
  std::vector<int>::const_iterator end() const { return indices_.end(); }

  bool Contains(int v) const;
  bool IsSubsetOf(const IndexSet& other) const;
  bool Intersects(const IndexSet& other) const;
  // Largest index plus one, or 0 when empty.
  int Bound() const { return indices_.empty() ? 0 : indices_.back() + 1; }

  IndexSet Union(const IndexSet& other) const;
  IndexSet Minus(const IndexSet& other) const;
  IndexSet Intersect(const IndexSet& other) const;
  IndexSet Complement(int m) const;
  IndexSet With(int v) const;

  // Requires Bound() <= 64.
  std::uint64_t Mask() const;

  std::string ToString() const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.indices_ == b.indices_;
  }
  friend bool operator<(const IndexSet& a, const IndexSet& b) {
    return a.indices_ < b.indices_;
  }

 private:
  std::vector<int> indices_;
};

// Throws IndexOutOfRange if any index of s is >= m.
void CheckWithin(const IndexSet& s, int m);

struct GroundSet {
  int m = 1;
  explicit GroundSet(int size);
  IndexSet All() const { return IndexSet::Range(m); }
};

}  // namespace batchgreedy

#endif  // BATCHGREEDY_INDEX_SET_H_
