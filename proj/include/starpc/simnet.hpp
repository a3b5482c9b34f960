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

// In-process server fleet. Servers hold one column of Y = X * G_C and answer
// polynomial queries; they keep no state between queries.

#ifndef STARPC_SIMNET_HPP_
#define STARPC_SIMNET_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starpc/code.hpp"
#include "starpc/field.hpp"
#include "starpc/matrix.hpp"
#include "starpc/polynomial.hpp"
#include "starpc/wire.hpp"

namespace starpc {

struct ServerState {
  std::size_t index = 0;
  std::vector<Symbol> share;  // y_n, M extension-field symbols
};

// Y = X * G_C with G_C embedded into X's field; server n gets column n.
// x is M x K.
std::vector<ServerState> EncodeStorage(const Matrix& x, const LinearCode& c);

Symbol ServeQuery(const Field& ext, const ServerState& server,
                  const Polynomial& query);

struct QueryMessage {
  std::size_t server = 0;
  Polynomial query;
};

struct ResponseMessage {
  std::size_t server = 0;
  Symbol value = 0;
};

// {"server": n, "query": [...]} and {"server": n, "value": "..."}.
Json QueryToJson(const QueryMessage& q);
QueryMessage QueryFromJson(const Json& j, const Field& coeffs,
                           std::size_t arity);
Json ResponseToJson(const Field& ext, const ResponseMessage& r);
ResponseMessage ResponseFromJson(const Json& j, const Field& ext);

class Server {
 public:
  Server(Field ext, Field coeffs, ServerState state);

  const ServerState& state() const noexcept { return state_; }

  ResponseMessage Handle(const QueryMessage& q) const;
  // Same exchange through the JSON wire format.
  std::string HandleWire(std::string_view request) const;

 private:
  Field ext_;
  Field coeffs_;
  ServerState state_;
};

enum class Transport { kDirect, kWire };

class Fleet {
 public:
  Fleet(Field ext, Field coeffs, std::vector<ServerState> states,
        Transport transport = Transport::kDirect);

  std::size_t size() const noexcept { return servers_.size(); }
  const Server& server(std::size_t n) const { return servers_.at(n); }

  // One query per server; responses are position-indexed.
  std::vector<Symbol> Exchange(std::span<const Polynomial> queries) const;

 private:
  Field ext_;
  Field coeffs_;
  std::vector<Server> servers_;
  Transport transport_;
};

}  // namespace starpc

#endif  // STARPC_SIMNET_HPP_
