#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "turanforge/bitset.hpp"
#include "turanforge/certificate.hpp"
#include "turanforge/hypergraph.hpp"
#include "turanforge/rational.hpp"

namespace turanforge {

/// |2 e(X) - d |X|^2|, exact. Half of it is the quantity |e(X) - d|X|^2/2|
/// bounded by delta |V|^2 in the quasirandomness condition.
Rational subset_deviation(const Graph& g, const Rational& d, BitView x);

struct QuasirandomOptions {
  Method method = Method::Sampling;
  /// SAMPLING: number of random subsets before greedy ascent.
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0;
};

struct SubsetCertificate {
  Verdict verdict = Verdict::PassedBudget;
  Method method = Method::Sampling;
  /// Subset with the largest deviation seen (sorted). Always set when REFUTED.
  std::optional<std::vector<int>> witness;
  /// Largest |e(X) - d|X|^2/2| seen; exact. Unused by SPECTRAL.
  Rational deviation{0};
  /// delta |V|^2.
  Rational threshold{0};
  /// SPECTRAL: ||A - dJ||_2 |V| / 2, an upper bound on every deviation.
  std::optional<double> spectral_bound;
  std::uint64_t evaluated = 0;
};

/// (delta, d)-quasirandomness of one graph.
/// EXHAUSTIVE enumerates all 2^n subsets (n <= 20, else CapabilityError).
/// SPECTRAL certifies when ||A - dJ|| |V| / 2 <= delta |V|^2 and otherwise passes.
/// SAMPLING evaluates V, then random subsets, then greedy single-vertex ascent; it never certifies.
SubsetCertificate certify_quasirandom(const Graph& g, const Rational& d, const Rational& delta,
                                      const QuasirandomOptions& options);

/// One certificate per vertex link; SAMPLING seeds are derive_seed(seed, x).
std::vector<SubsetCertificate> certify_link_quasirandom(const Hypergraph3& h, const Rational& d,
                                                        const Rational& delta, const QuasirandomOptions& options,
                                                        unsigned threads = 1);

/// Ordered pairs (x, y) in V x V, diagonal allowed.
class PairSet {
public:
  PairSet() = default;
  explicit PairSet(int n);
  static PairSet full(int n);
  /// A x B.
  static PairSet product(int n, BitView a, BitView b);

  int order() const noexcept { return n_; }
  bool contains(int x, int y) const;
  void insert(int x, int y);
  void erase(int x, int y);
  void set(int x, int y, bool present) { present ? insert(x, y) : erase(x, y); }
  std::size_t size() const noexcept { return size_; }

  /// {y : (x, y) in P}
  BitView out(int x) const noexcept { return fwd_.row(static_cast<std::size_t>(x)); }
  /// {x : (x, y) in P}
  BitView in(int y) const noexcept { return rev_.row(static_cast<std::size_t>(y)); }
  std::vector<std::pair<int, int>> pairs() const;

  friend bool operator==(const PairSet& a, const PairSet& b) noexcept { return a.n_ == b.n_ && a.fwd_ == b.fwd_; }

private:
  int n_ = 0;
  std::size_t size_ = 0;
  BitMatrix fwd_;
  BitMatrix rev_;
};

/// All: every aligned pair ((x,y),(y,z)) counts in K_ee. Distinct: only those
/// with x, y, z pairwise distinct.
enum class Coordinates { All, Distinct };

std::int64_t e_ee(const Hypergraph3& h, const PairSet& p, const PairSet& q);
std::int64_t k_ee(const PairSet& p, const PairSet& q, Coordinates mode = Coordinates::All);

struct EeOptions {
  std::uint64_t budget = 10'000;
  std::uint64_t seed = 0;
  Coordinates coordinates = Coordinates::All;
};

struct EeCertificate {
  Verdict verdict = Verdict::PassedBudget;
  Method method = Method::LocalSearch;
  /// Candidate with the largest lower deviation seen; always set when REFUTED.
  std::optional<std::pair<PairSet, PairSet>> witness;
  std::int64_t e = 0;
  std::int64_t k = 0;
  /// max over candidates of (d k_ee - e_ee) / |V|^3 and (e_ee - d k_ee) / |V|^3.
  Rational lower_deviation{0};
  Rational upper_deviation{0};
  std::uint64_t candidates = 0;
};

/// Searches structured pair sets for e_ee(P,Q) < d k_ee(P,Q) - eta |V|^3.
/// REFUTED with a re-checkable witness, else PASSED_BUDGET; never CERTIFIED.
EeCertificate ee_density_adversary(const Hypergraph3& h, const Rational& d, const Rational& eta,
                                   const EeOptions& options = {});

} // namespace turanforge
