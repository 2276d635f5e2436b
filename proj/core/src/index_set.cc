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

#include "batchgreedy/index_set.h"

#include <algorithm>
#include <bit>
#include <iterator>
#include <sstream>

#include "batchgreedy/error.h"

namespace batchgreedy {

IndexSet::IndexSet(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (!indices_.empty() && indices_.front() < 0) {
    throw Error(ErrorCode::kIndexOutOfRange, "negative index in IndexSet");
  }
}

IndexSet::IndexSet(std::initializer_list<int> indices)
    : IndexSet(std::vector<int>(indices)) {}

IndexSet IndexSet::Range(int m) {
  IndexSet s;
  s.indices_.resize(std::max(m, 0));
  for (int i = 0; i < m; ++i) s.indices_[i] = i;
  return s;
}

IndexSet IndexSet::FromMask(std::uint64_t mask) {
  IndexSet s;
  s.indices_.reserve(std::popcount(mask));
  while (mask != 0) {
    s.indices_.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

bool IndexSet::Contains(int v) const {
  return std::binary_search(indices_.begin(), indices_.end(), v);
}

bool IndexSet::IsSubsetOf(const IndexSet& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(),
                       indices_.begin(), indices_.end());
}

bool IndexSet::Intersects(const IndexSet& other) const {
  auto a = indices_.begin();
  auto b = other.indices_.begin();
  while (a != indices_.end() && b != other.indices_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

IndexSet IndexSet::Union(const IndexSet& other) const {
  IndexSet out;
  out.indices_.reserve(indices_.size() + other.indices_.size());
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                 other.indices_.end(), std::back_inserter(out.indices_));
  return out;
}

IndexSet IndexSet::Minus(const IndexSet& other) const {
  IndexSet out;
  std::set_difference(indices_.begin(), indices_.end(), other.indices_.begin(),
                      other.indices_.end(), std::back_inserter(out.indices_));
  return out;
}

IndexSet IndexSet::Intersect(const IndexSet& other) const {
  IndexSet out;
  std::set_intersection(indices_.begin(), indices_.end(),
                        other.indices_.begin(), other.indices_.end(),
                        std::back_inserter(out.indices_));
  return out;
}

IndexSet IndexSet::Complement(int m) const { return Range(m).Minus(*this); }

IndexSet IndexSet::With(int v) const {
  IndexSet out = *this;
  auto it = std::lower_bound(out.indices_.begin(), out.indices_.end(), v);
  if (it == out.indices_.end() || *it != v) out.indices_.insert(it, v);
  return out;
}

std::uint64_t IndexSet::Mask() const {
  if (Bound() > 64) {
    throw Error(ErrorCode::kTooLarge, "IndexSet mask needs indices < 64");
  }
  std::uint64_t mask = 0;
  for (int v : indices_) mask |= std::uint64_t{1} << v;
  return mask;
}

std::string IndexSet::ToString() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) os << ',';
    os << indices_[i];
  }
  os << '}';
  return os.str();
}

void CheckWithin(const IndexSet& s, int m) {
  if (s.Bound() > m) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "index " + std::to_string(s.Bound() - 1) +
                    " outside ground set of size " + std::to_string(m));
  }
}

GroundSet::GroundSet(int size) : m(size) {
  if (size < 1) throw Error(ErrorCode::kInvalidArgument, "ground set needs m >= 1");
}

}  // namespace batchgreedy
