// Copyright 2026 The Discordium Authors
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

#include <string>
#include <vector>

#include "discordium/errors.hpp"

namespace discordium {

// Ordered list of labeled tensor factors. Composite indices are mixed-radix
// with the FIRST part as the most significant digit, so for parts (S, A)
// the basis state index is i = s * dim(A) + a.
class SubsystemLayout {
 public:
  struct Part {
    std::string label;
    int dim = 0;

    bool operator==(const Part& o) const {
      return label == o.label && dim == o.dim;
    }
  };

  SubsystemLayout() = default;

  explicit SubsystemLayout(std::vector<Part> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InvalidLayout("layout needs at least one part");
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i].label.empty())
        throw InvalidLayout("empty subsystem label");
      if (parts_[i].dim < 2)
        throw InvalidLayout("subsystem '" + parts_[i].label +
                            "' must have dimension >= 2");
      for (size_t j = 0; j < i; ++j)
        if (parts_[j].label == parts_[i].label)
          throw LabelCollision("duplicate subsystem label '" +
                               parts_[i].label + "'");
    }
  }

  const std::vector<Part>& parts() const noexcept { return parts_; }
  size_t size() const noexcept { return parts_.size(); }

  int total_dimension() const {
    int d = 1;
    for (const auto& p : parts_) d *= p.dim;
    return d;
  }

  bool has(const std::string& label) const {
    for (const auto& p : parts_)
      if (p.label == label) return true;
    return false;
  }

  size_t position_of(const std::string& label) const {
    for (size_t i = 0; i < parts_.size(); ++i)
      if (parts_[i].label == label) return i;
    throw UnknownLabel("no subsystem labeled '" + label + "'");
  }

  int dim_of(const std::string& label) const {
    return parts_[position_of(label)].dim;
  }

  // Product of dimensions strictly after position `pos` (the place value of
  // that digit in the composite index).
  int stride_of(size_t pos) const {
    int s = 1;
    for (size_t i = pos + 1; i < parts_.size(); ++i) s *= parts_[i].dim;
    return s;
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    out.reserve(parts_.size());
    for (const auto& p : parts_) out.push_back(p.label);
    return out;
  }

  // Layout of everything except `label`, order preserved.
  SubsystemLayout without(const std::string& label) const {
    const size_t pos = position_of(label);
    if (parts_.size() < 2)
      throw InvalidLayout("cannot remove the only subsystem");
    std::vector<Part> rest;
    rest.reserve(parts_.size() - 1);
    for (size_t i = 0; i < parts_.size(); ++i)
      if (i != pos) rest.push_back(parts_[i]);
    return SubsystemLayout(std::move(rest));
  }

  bool operator==(const SubsystemLayout& o) const { return parts_ == o.parts_; }
  bool operator!=(const SubsystemLayout& o) const { return !(*this == o); }

 private:
  std::vector<Part> parts_;
};

inline SubsystemLayout make_layout(
    std::initializer_list<SubsystemLayout::Part> parts) {
  return SubsystemLayout(std::vector<SubsystemLayout::Part>(parts));
}

}  // namespace discordium
