// Copyright 2026 The gjcluster Authors
//
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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gj/error.hpp"

namespace gj {

/// Index of a symbolic variable in a VarTable. The index, not the name,
/// determines the term order, so registration order is part of a
/// computation's determinism contract.
struct VarId {
  std::int32_t index = -1;

  bool operator==(const VarId& o) const { return index == o.index; }
  bool operator!=(const VarId& o) const { return index != o.index; }
  bool operator<(const VarId& o) const { return index < o.index; }
};

/// Per-computation variable registry. Names and indices are a bijection;
/// indices are assigned in first-seen order.
class VarTable {
 public:
  VarId intern(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return VarId{it->second};
    std::int32_t idx = static_cast<std::int32_t>(names_.size());
    names_.push_back(name);
    index_.emplace(name, idx);
    return VarId{idx};
  }

  std::optional<VarId> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return VarId{it->second};
  }

  const std::string& name(VarId v) const {
    if (v.index < 0 || v.index >= static_cast<std::int32_t>(names_.size()))
      throw Error("UnknownVariable", "variable index out of range");
    return names_[static_cast<std::size_t>(v.index)];
  }

  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::int32_t> index_;
};

}  // namespace gj
