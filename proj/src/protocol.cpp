// Copyright 2026 The starpc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "starpc/protocol.hpp"

#include "starpc/error.hpp"

namespace starpc {

MaskSet MakeMasks(const LinearCode& retrieval, const QuerySpace& space,
                  Rng& rng) {
  const Field& f = retrieval.field();
  std::vector<std::vector<Symbol>> messages(space.dimension());
  for (auto& u : messages) {
    u.resize(retrieval.dimension());
    for (auto& s : u) s = static_cast<Symbol>(UniformBelow(rng, f.order()));
  }
  return MasksFromMessages(retrieval, space, std::move(messages));
}

MaskSet MasksFromMessages(const LinearCode& retrieval, const QuerySpace& space,
                          std::vector<std::vector<Symbol>> messages) {
  Require(retrieval.field() == space.coefficient_field(),
          Errc::kOwnerMismatch,
          "retrieval code and query space use different base fields");
  Require(messages.size() == space.dimension(), Errc::kInvalidArgument,
          "need one message per query-space basis element");
  MaskSet out;
  out.codewords.reserve(messages.size());
  for (const auto& u : messages) out.codewords.push_back(retrieval.encode(u));
  out.messages = std::move(messages);

  const std::size_t n = retrieval.length();
  out.masks.reserve(n);
  std::vector<Symbol> coords(space.dimension());
  for (std::size_t server = 0; server < n; ++server) {
    for (std::size_t q = 0; q < coords.size(); ++q) {
      coords[q] = out.codewords[q][server];
    }
    out.masks.push_back(space.combine(coords));
  }
  return out;
}

std::vector<Polynomial> BuildQueries(const MaskSet& masks,
                                     std::span<const Slot> slots,
                                     std::span<const Polynomial> functions) {
  std::vector<Polynomial> queries = masks.masks;
  std::vector<bool> used(queries.size(), false);
  for (const Slot& s : slots) {
    Require(s.server < queries.size(), Errc::kInvalidArgument,
            "slot server index out of range");
    Require(s.function < functions.size(), Errc::kInvalidArgument,
            "slot function index out of range");
    Require(!used[s.server], Errc::kInvalidArgument,
            "server assigned twice in one iteration");
    used[s.server] = true;
    queries[s.server] = queries[s.server] + functions[s.function];
  }
  return queries;
}

std::string SchemeName(SchemeKind kind) {
  return kind == SchemeKind::kReplicated ? "replicated" : "systematic";
}

Rational SessionTranscript::rate() const {
  Require(servers > 0 && !iterations.empty(), Errc::kInvalidArgument,
          "rate of an empty session");
  return Rational(data_columns * block_length) /
         Rational(servers * iterations.size());
}

}  // namespace starpc
