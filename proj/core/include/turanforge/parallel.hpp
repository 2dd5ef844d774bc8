#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace turanforge {

/// `requested` if positive, else $TURANFORGE_THREADS if set and positive, else 1.
unsigned resolve_threads(int requested = 0);

/// Calls body(i) for i in [0, n) on up to `threads` workers. Callers write
/// results into per-index slots, so the outcome never depends on scheduling.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

/// Smallest i in [0, n) with pred(i), evaluated in parallel. Work on indices
/// above the best hit so far is skipped.
std::optional<std::size_t> parallel_find_first(std::size_t n, unsigned threads,
                                               const std::function<bool(std::size_t)>& pred);

} // namespace turanforge
