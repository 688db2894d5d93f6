// Copyright 2026 The dynmatch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DYNMATCH_INDEXED_SET_H_
#define DYNMATCH_INDEXED_SET_H_

#include <cassert>
#include <cstddef>
#include <functional>
#include <unordered_map>
#include <vector>

namespace dynmatch {

// Hash set with a dense array view: O(1) expected insert/erase/contains,
// O(1) access by position and O(size) iteration. Erase swaps the last element
// into the vacated slot, so positions are not stable across erasures.
template <typename T, typename Hash = std::hash<T>>
class IndexedSet {
 public:
  using const_iterator = typename std::vector<T>::const_iterator;

  bool Insert(const T& value) {
    auto [it, inserted] = index_.try_emplace(value, items_.size());
    if (!inserted) return false;
    items_.push_back(value);
    return true;
  }

  bool Erase(const T& value) {
    auto it = index_.find(value);
    if (it == index_.end()) return false;
    const std::size_t pos = it->second;
    index_.erase(it);
    if (pos + 1 != items_.size()) {
      items_[pos] = items_.back();
      index_[items_[pos]] = pos;
    }
    items_.pop_back();
    return true;
  }

  bool Contains(const T& value) const { return index_.count(value) != 0; }

  const T& operator[](std::size_t pos) const {
    assert(pos < items_.size());
    return items_[pos];
  }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  void clear() {
    items_.clear();
    index_.clear();
  }

  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }

  const std::vector<T>& items() const { return items_; }

 private:
  std::vector<T> items_;
  std::unordered_map<T, std::size_t, Hash> index_;
};

}  // namespace dynmatch

#endif  // DYNMATCH_INDEXED_SET_H_
