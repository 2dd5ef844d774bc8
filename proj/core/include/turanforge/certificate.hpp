#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>

namespace turanforge {

/// Outcome of a property check (quasirandomness, ee-density).
enum class Verdict { Certified, Refuted, PassedBudget };

enum class Method { Exhaustive, Spectral, Sampling, LocalSearch };

/// Outcome of a witness search (cliques, supports, transversals, embeddings).
/// Absent means the search space was exhausted; BudgetExhausted means it was not.
enum class SearchStatus { Found, Absent, BudgetExhausted };

inline constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

template <class Witness>
struct SearchResult {
  SearchStatus status = SearchStatus::Absent;
  std::optional<Witness> witness;
  std::uint64_t nodes = 0;

  bool found() const noexcept { return status == SearchStatus::Found; }
};

constexpr std::string_view name(Verdict v) noexcept {
  switch (v) {
  case Verdict::Certified: return "CERTIFIED";
  case Verdict::Refuted: return "REFUTED";
  case Verdict::PassedBudget: return "PASSED_BUDGET";
  }
  return "?";
}

constexpr std::string_view name(Method m) noexcept {
  switch (m) {
  case Method::Exhaustive: return "EXHAUSTIVE";
  case Method::Spectral: return "SPECTRAL";
  case Method::Sampling: return "SAMPLING";
  case Method::LocalSearch: return "LOCAL_SEARCH";
  }
  return "?";
}

/// Search outcomes use the verdict vocabulary in reports: a found witness is
/// "FOUND", exhaustive absence "REFUTED", an exhausted budget "PASSED_BUDGET".
constexpr std::string_view name(SearchStatus s) noexcept {
  switch (s) {
  case SearchStatus::Found: return "FOUND";
  case SearchStatus::Absent: return "REFUTED";
  case SearchStatus::BudgetExhausted: return "PASSED_BUDGET";
  }
  return "?";
}

} // namespace turanforge
