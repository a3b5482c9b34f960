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

#include "starpc/replicated.hpp"

#include <string>

#include "starpc/error.hpp"
#include "starpc/random.hpp"

namespace starpc {

void ReplicatedConfig::Validate() const {
  const std::size_t n = servers();
  const std::size_t t = collusion();
  Require(t >= 1 && t < n, Errc::kConfiguration,
          "need 1 <= T < N, got T=" + std::to_string(t) +
              " N=" + std::to_string(n));
  Require(retrieval.field() == space.coefficient_field(), Errc::kConfiguration,
          "retrieval code and query space use different base fields");
  Require(ext.characteristic() == retrieval.field().characteristic() &&
              ext.degree() % retrieval.field().degree() == 0,
          Errc::kConfiguration,
          ext.name() + " does not extend " + retrieval.field().name());
  Require(retrieval.is_mds(), Errc::kConfiguration,
          "retrieval code is not MDS");
  Require(block_length > 0 && block_length % batch() == 0,
          Errc::kConfiguration,
          "N-T=" + std::to_string(batch()) + " does not divide B=" +
              std::to_string(block_length));
}

std::vector<Slot> ReplicatedSlots(std::size_t batch, std::size_t offset) {
  std::vector<Slot> slots(batch);
  for (std::size_t n = 0; n < batch; ++n) slots[n] = {n, offset + n};
  return slots;
}

std::vector<Polynomial> BuildReplicatedQueries(
    const MaskSet& masks, std::span<const Polynomial> batch) {
  const std::size_t n = masks.masks.size();
  const std::size_t t = masks.messages.empty() ? 0 : masks.messages[0].size();
  Require(batch.size() + t == n, Errc::kInvalidArgument,
          "batch has " + std::to_string(batch.size()) + " functions, need " +
              std::to_string(n - t));
  const auto slots = ReplicatedSlots(batch.size(), 0);
  return BuildQueries(masks, slots, batch);
}

std::vector<Symbol> DecodeReplicated(const Field& ext,
                                     std::span<const Symbol> responses,
                                     const Matrix& parity_check) {
  Require(responses.size() == parity_check.rows(), Errc::kInvalidArgument,
          "response length does not match the parity check");
  const Matrix h =
      parity_check.field() == ext ? parity_check : parity_check.embed(ext);
  return RowTimes(responses, h);
}

ReplicatedResult RunReplicated(const ReplicatedConfig& config,
                               std::span<const Polynomial> functions,
                               const Matrix& x, std::uint64_t seed) {
  config.Validate();
  Require(functions.size() == config.block_length, Errc::kInvalidArgument,
          "expected B=" + std::to_string(config.block_length) + " functions");
  Require(x.field() == config.ext && x.rows() == config.space.arity() &&
              x.cols() == 1,
          Errc::kInvalidArgument, "data must be an M x 1 matrix over " +
                                      config.ext.name());
  for (const auto& phi : functions) config.space.coordinates(phi);

  const std::size_t n = config.servers();
  const std::size_t batch = config.batch();
  const Field& base = config.retrieval.field();
  const Matrix h = SystematicParityCheck(config.retrieval).embed(config.ext);
  Fleet fleet(config.ext, base,
              EncodeStorage(x, RepetitionCode(n, base)), config.transport);

  ReplicatedResult out;
  SessionTranscript& tr = out.transcript;
  tr.scheme = SchemeKind::kReplicated;
  tr.seed = seed;
  tr.servers = n;
  tr.data_columns = 1;
  tr.block_length = config.block_length;
  tr.query_dimension = config.space.dimension();
  out.values.reserve(config.block_length);

  for (std::size_t s = 0; s < config.iterations(); ++s) {
    Rng rng = Substream(seed, Stream::kIteration, s);
    MaskSet masks = MakeMasks(config.retrieval, config.space, rng);
    IterationRecord rec;
    rec.index = s;
    rec.slots = ReplicatedSlots(batch, s * batch);
    rec.queries = BuildQueries(masks, rec.slots, functions);
    rec.responses = fleet.Exchange(rec.queries);
    rec.decoded = DecodeReplicated(config.ext, rec.responses, h);
    rec.codewords = std::move(masks.codewords);
    out.values.insert(out.values.end(), rec.decoded.begin(), rec.decoded.end());

    tr.accounting.iterations += 1;
    tr.accounting.uploaded_base_symbols += rec.queries.size() * tr.query_dimension;
    tr.accounting.downloaded_ext_symbols += rec.responses.size();
    tr.iterations.push_back(std::move(rec));
  }
  return out;
}

}  // namespace starpc
