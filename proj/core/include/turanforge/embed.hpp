#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turanforge/certificate.hpp"
#include "turanforge/rational.hpp"
#include "turanforge/reduced.hpp"

namespace turanforge {

/// The ten named vertices of a K5 support on J = Z/5Z, labels 1..5.
/// Consecutive pairs {i, i+1} take the blue role, diagonals {i, i+2} the red role.
struct EmbeddingWitness {
  /// labels[p - 1] is the index of I playing label p.
  std::array<int, 5> labels{};
  /// Colour playing the blue role; Red after the beta <= rho swap.
  Colour blue_role = Colour::Blue;
  /// Vertex chosen in each class of J^(2).
  Transversal transversal;

  /// Index pair of I behind the label pair (p, q), 1 <= p, q <= 5.
  ClassKey key(int p, int q) const { return ClassKey::of(labels[static_cast<std::size_t>(p - 1)], labels[static_cast<std::size_t>(q - 1)]); }
  int vertex(int p, int q) const;
  CliqueSupport support() const;
};

/// Selection statistics of the successful path (or the last attempt).
struct EmbedTrace {
  std::uint64_t subsets_tried = 0;
  std::uint64_t labellings_tried = 0;
  std::uint64_t backtracks = 0;
  std::uint64_t nodes = 0;
  Rational beta{0};
  Rational rho{0};
  /// max - min of the blue ratios over J^(2).
  Rational spread{0};
  /// All blue ratios of J fall in one interval of length 2 xi.
  bool aligned = false;
  /// 1/3 + eps <= beta - xi.
  bool margin_holds = false;
  bool swapped = false;
  /// |N_{B15 x B45}(r14)|, |N_{R13}(r14, b34)|, |N_{B23}(r24, b34)|,
  /// |N_{B23}(b12, r13) cap N_{B23}(r24, b34)|.
  std::size_t r14_score = 0;
  std::size_t b34_score = 0;
  std::size_t r24_score = 0;
  std::size_t pair_score = 0;
  std::size_t g1 = 0;
  std::size_t g2 = 0;
  std::size_t candidates = 0;
};

enum class EmbedStatus { Found, Absent, BudgetExhausted, HypothesisFailed };
std::string_view name(EmbedStatus s) noexcept;

/// Maximizer: candidates at each step are tried best score first, ties by class order.
/// ClassOrder: plain class order at every step (same search space).
enum class Selection { Maximizer, ClassOrder };

struct EmbedOptions {
  Rational eps{1, 10};
  /// Defaults to min(eps/4, 1/24).
  std::optional<Rational> xi;
  std::uint64_t budget = 10'000'000;
  /// Refuse to search when tau2 < 1/3 + eps.
  bool check_hypothesis = true;
  Selection selection = Selection::Maximizer;
};

struct EmbedResult {
  EmbedStatus status = EmbedStatus::Absent;
  std::optional<EmbeddingWitness> witness;
  EmbedTrace trace;
  Rational tau2{0};
  Rational xi{0};
};

/// Constructive bicoloured K5 embedding. Throws PreconditionError if phi is not
/// a valid bicolouring, ArgumentError if |I| < 5 or eps <= 0.
EmbedResult embed_k5_bicoloured(const ReducedHypergraph& a, const Bicolouring& phi, const EmbedOptions& options = {});

/// All ten aligned triples are edges and the colours follow the pentagon pattern.
bool validate_embedding(const ReducedHypergraph& a, const Bicolouring& phi, const EmbeddingWitness& w);

struct BruteForceOptions {
  /// Refuse when some 5-subset has a product of class sizes above this.
  double cap = 1e12;
};

/// Exhaustive K5-support search over all 5-subsets and vertex choices. With phi,
/// only the twelve pentagon colour patterns are tried (colour of every class pinned).
SearchResult<CliqueSupport> brute_force_k5_support(const ReducedHypergraph& a, const Bicolouring* phi = nullptr,
                                                   const BruteForceOptions& options = {});

/// The twelve 5-cycles of K5 on positions 0..4, each as the order (v1, ..., v5).
const std::vector<std::array<int, 5>>& pentagons();

} // namespace turanforge
