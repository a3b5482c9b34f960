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

#include "starpc/simnet.hpp"

#include "starpc/error.hpp"

namespace starpc {

std::vector<ServerState> EncodeStorage(const Matrix& x, const LinearCode& c) {
  Require(x.cols() == c.dimension(), Errc::kInvalidArgument,
          "data has " + std::to_string(x.cols()) + " columns, code dimension is " +
              std::to_string(c.dimension()));
  const Matrix g = c.field() == x.field() ? c.generator()
                                          : c.generator().embed(x.field());
  const Matrix y = x * g;
  std::vector<ServerState> out(c.length());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n].index = n;
    out[n].share = y.column(n);
  }
  return out;
}

Symbol ServeQuery(const Field& ext, const ServerState& server,
                  const Polynomial& query) {
  return query.evaluate(ext, server.share);
}

Json QueryToJson(const QueryMessage& q) {
  return {{"server", q.server}, {"query", PolynomialToJson(q.query)}};
}

QueryMessage QueryFromJson(const Json& j, const Field& coeffs,
                           std::size_t arity) {
  Require(j.is_object() && j.contains("server") && j.contains("query"),
          Errc::kParse, "query message needs 'server' and 'query'");
  return {j.at("server").get<std::size_t>(),
          PolynomialFromJson(j.at("query"), coeffs, arity)};
}

Json ResponseToJson(const Field& ext, const ResponseMessage& r) {
  return {{"server", r.server}, {"value", ext.format(r.value)}};
}

ResponseMessage ResponseFromJson(const Json& j, const Field& ext) {
  Require(j.is_object() && j.contains("server") && j.contains("value"),
          Errc::kParse, "response message needs 'server' and 'value'");
  return {j.at("server").get<std::size_t>(),
          ext.parse(j.at("value").get<std::string>())};
}

Server::Server(Field ext, Field coeffs, ServerState state)
    : ext_(std::move(ext)), coeffs_(std::move(coeffs)), state_(std::move(state)) {}

ResponseMessage Server::Handle(const QueryMessage& q) const {
  Require(q.server == state_.index, Errc::kInvalidArgument,
          "query addressed to server " + std::to_string(q.server) +
              " delivered to server " + std::to_string(state_.index));
  return {state_.index, ServeQuery(ext_, state_, q.query)};
}

std::string Server::HandleWire(std::string_view request) const {
  Json j;
  try {
    j = Json::parse(request);
  } catch (const Json::exception& e) {
    Fail(Errc::kParse, std::string("malformed query message: ") + e.what());
  }
  const auto q = QueryFromJson(j, coeffs_, state_.share.size());
  return ResponseToJson(ext_, Handle(q)).dump();
}

Fleet::Fleet(Field ext, Field coeffs, std::vector<ServerState> states,
             Transport transport)
    : ext_(std::move(ext)), coeffs_(std::move(coeffs)), transport_(transport) {
  servers_.reserve(states.size());
  for (auto& s : states) servers_.emplace_back(ext_, coeffs_, std::move(s));
}

std::vector<Symbol> Fleet::Exchange(std::span<const Polynomial> queries) const {
  Require(queries.size() == servers_.size(), Errc::kInvalidArgument,
          "need exactly one query per server");
  std::vector<Symbol> responses(servers_.size());
  for (std::size_t n = 0; n < servers_.size(); ++n) {
    QueryMessage q{n, queries[n]};
    if (transport_ == Transport::kDirect) {
      responses[n] = servers_[n].Handle(q).value;
    } else {
      const std::string reply = servers_[n].HandleWire(QueryToJson(q).dump());
      const auto r = ResponseFromJson(Json::parse(reply), ext_);
      Require(r.server == n, Errc::kCorruptedResponse,
              "response from unexpected server");
      responses[n] = r.value;
    }
  }
  return responses;
}

}  // namespace starpc
