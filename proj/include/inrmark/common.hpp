#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace inrmark {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid configuration (bad dimensions, bad hyperparameters, schema violations).
struct ConfigError : Error {
    using Error::Error;
};

/// Caller violated an API contract (shape mismatch, length mismatch).
struct ContractError : Error {
    using Error::Error;
};

/// Argument outside the operation's domain (out-of-range index, empty pool).
struct DomainError : Error {
    using Error::Error;
};

/// Filesystem / codec failures.
struct IoError : Error {
    using Error::Error;
};

/// Optimization diverged (non-finite loss). Message carries the step index.
struct TrainingError : Error {
    using Error::Error;
};

using Rng = std::mt19937_64;

/// splitmix64 finalizer; used to decorrelate derived seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// FNV-1a over a byte string.
inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Derive a per-stage seed from the root seed. All stage randomness flows
/// from exactly one of these streams.
inline std::uint64_t derive_seed(std::uint64_t root, const std::string& label) {
    return mix64(root ^ fnv1a64(label));
}

inline Rng make_rng(std::uint64_t root, const std::string& label) {
    return Rng(derive_seed(root, label));
}

}  // namespace inrmark
