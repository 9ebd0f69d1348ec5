// Copyright 2026 The wsbmf Authors.
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

#ifndef WSBMF_CORE_HPP
#define WSBMF_CORE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace wsbmf {

inline constexpr const char* kVersion = "0.1.0";

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Base class for all library errors; subclasses map to CLI exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad or inconsistent input data (files, graphs, constraint sets).
struct InputError : Error {
    using Error::Error;
};

// Malformed text input; carries a 1-based line number when known.
struct ParseError : InputError {
    ParseError(const std::string& msg, std::size_t line = 0)
        : InputError(line ? "line " + std::to_string(line) + ": " + msg : msg), line_number(line) {}
    std::size_t line_number;
};

// Numerical failure inside the solver (all restarts exhausted, NaNs, ...).
struct SolverError : Error {
    using Error::Error;
};

// A factor column lost all mass; the restart must be reseeded or dropped.
struct DegenerateColumnError : SolverError {
    explicit DegenerateColumnError(Index column)
        : SolverError("factor column " + std::to_string(column) + " is identically zero"), column(column) {}
    Index column;
};

// A membership row became all-zero before the final row normalization.
struct ZeroRowError : SolverError {
    explicit ZeroRowError(Index row)
        : SolverError("membership row " + std::to_string(row) + " is identically zero"), row(row) {}
    Index row;
};

// splitmix64; used to derive independent sub-seeds from a master seed so
// that adding restarts or grid points never reshuffles earlier streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream + 0x100000001b3ull));
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return mix_seed(mix_seed(seed, a), b);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix_seed(mix_seed(seed, a, b), c);
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(splitmix64(seed)); }

// FNV-1a over raw bytes; used for input provenance hashes in run manifests.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace wsbmf

#endif  // WSBMF_CORE_HPP
