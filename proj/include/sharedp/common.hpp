#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sharedp {

using VertexId = std::uint32_t;

// Split-space vertex id: raw < n is the plain/out-copy of vertex raw,
// raw >= n is the in-copy of vertex raw - n.
using SplitVertexId = std::uint32_t;

// Bad input (files, CLI arguments, mismatched widths). The CLI maps these
// to exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoadError : UsageError {
    using UsageError::UsageError;
};

// A broken internal invariant: indicates an engine bug, not bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

inline SplitVertexId in_copy(VertexId v, std::uint32_t n) { return v + n; }

inline bool is_in_copy(SplitVertexId x, std::uint32_t n) { return x >= n; }

inline VertexId proj(SplitVertexId x, std::uint32_t n) { return x < n ? x : x - n; }

}  // namespace sharedp
