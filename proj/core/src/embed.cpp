#include "turanforge/embed.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "turanforge/errors.hpp"

namespace turanforge {

std::string_view name(EmbedStatus s) noexcept {
  switch (s) {
  case EmbedStatus::Found: return "FOUND";
  case EmbedStatus::Absent: return "REFUTED";
  case EmbedStatus::BudgetExhausted: return "PASSED_BUDGET";
  case EmbedStatus::HypothesisFailed: return "HYPOTHESIS_FAILED";
  }
  return "?";
}

int EmbeddingWitness::vertex(int p, int q) const {
  const ClassKey k = key(p, q);
  return transversal.at(k.lo, k.hi);
}

CliqueSupport EmbeddingWitness::support() const {
  CliqueSupport s;
  s.indices.assign(labels.begin(), labels.end());
  std::sort(s.indices.begin(), s.indices.end());
  s.transversal = transversal;
  return s;
}

const std::vector<std::array<int, 5>>& pentagons() {
  static const std::vector<std::array<int, 5>> all = [] {
    std::vector<std::array<int, 5>> out;
    std::array<int, 4> rest{1, 2, 3, 4};
    do {
      // Fix v1 = 0 and drop reflections.
      if (rest[0] < rest[3]) out.push_back({0, rest[0], rest[1], rest[2], rest[3]});
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
  }();
  return all;
}

namespace {

bool consecutive(int p, int q) {
  const int d = (q - p + 5) % 5;
  return d == 1 || d == 4;
}

// One labelled attempt: labels 1..5 bound to indices, with a colour in the blue role.
class LabelledSearch {
public:
  LabelledSearch(const ReducedHypergraph& a, const Bicolouring& phi, const std::array<int, 5>& labels, Colour blue,
                 const EmbedOptions& opt, EmbedTrace& trace, bool& exhausted)
      : a_(a), labels_(labels), blue_(blue), opt_(opt), trace_(trace), exhausted_(exhausted) {
    for (int p = 1; p <= 5; ++p)
      for (int q = p + 1; q <= 5; ++q) {
        const ClassKey k = key(p, q);
        members_[k] = phi.members(k, consecutive(p, q) ? blue : opposite(blue));
      }
  }

  std::optional<EmbeddingWitness> run() {
    if (!step_r14()) return std::nullopt;
    EmbeddingWitness w;
    w.labels = labels_;
    w.blue_role = blue_;
    for (const auto& [k, v] : chosen_) w.transversal.set(k.lo, k.hi, v);
    return w;
  }

private:
  ClassKey key(int p, int q) const {
    return ClassKey::of(labels_[static_cast<std::size_t>(p - 1)], labels_[static_cast<std::size_t>(q - 1)]);
  }
  // Colour-role members of the class behind label pair pq (blue role on consecutive pairs).
  const Bitset& set(int pq) const { return members_.at(key(pq / 10, pq % 10)); }
  BitView nb(int pq1, int x, int pq2, int y) const {
    return a_.neighbours({key(pq1 / 10, pq1 % 10), x}, {key(pq2 / 10, pq2 % 10), y});
  }
  void choose(int pq, std::size_t v) { chosen_[key(pq / 10, pq % 10)] = static_cast<int>(v); }

  bool tick() {
    if (trace_.nodes >= opt_.budget) {
      exhausted_ = true;
      return false;
    }
    ++trace_.nodes;
    return true;
  }

  // Candidates of `pool` best score first (ties by class order), or plain class order.
  std::vector<std::pair<std::size_t, std::size_t>> ranked(const Bitset& pool,
                                                          const std::function<std::size_t(std::size_t)>& score) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    pool.for_each([&](std::size_t v) { out.emplace_back(score(v), v); });
    if (opt_.selection == Selection::Maximizer)
      std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    return out;
  }

  // Iterates candidates; `next` returns true on success. Counts abandoned choices.
  template <class List, class Next>
  bool branch(const List& list, Next&& next) {
    for (const auto& item : list) {
      if (!tick()) return false;
      if (next(item)) return true;
      if (exhausted_) return false;
      ++trace_.backtracks;
    }
    return false;
  }

  // (1) r14 maximizing |N_{B15 x B45}(r14)|.
  bool step_r14() {
    const Bitset& b15 = set(15);
    const Bitset& b45 = set(45);
    const auto list = ranked(set(14), [&](std::size_t r) {
      std::size_t s = 0;
      b15.for_each([&](std::size_t b) { s += intersect_count(nb(14, static_cast<int>(r), 15, static_cast<int>(b)), b45); });
      return s;
    });
    return branch(list, [&](const auto& item) {
      trace_.r14_score = item.first;
      r14_ = item.second;
      choose(14, r14_);
      return step_b34();
    });
  }

  // (2a) b34 maximizing |N_{R13}(r14, b34)|.
  bool step_b34() {
    const Bitset& r13 = set(13);
    const auto list = ranked(set(34), [&](std::size_t b) {
      return intersect_count(nb(14, static_cast<int>(r14_), 34, static_cast<int>(b)), r13);
    });
    return branch(list, [&](const auto& item) {
      if (item.first == 0) return false;
      trace_.b34_score = item.first;
      b34_ = item.second;
      choose(34, b34_);
      cand13_ = nb(14, static_cast<int>(r14_), 34, static_cast<int>(b34_)) & r13;
      return step_r24();
    });
  }

  // (2b) r24 maximizing |N_{B23}(r24, b34)|.
  bool step_r24() {
    const Bitset& b23 = set(23);
    const Bitset& b12 = set(12);
    const auto list = ranked(set(24), [&](std::size_t r) {
      return intersect_count(nb(24, static_cast<int>(r), 34, static_cast<int>(b34_)), b23);
    });
    return branch(list, [&](const auto& item) {
      if (item.first == 0) return false;
      trace_.r24_score = item.first;
      r24_ = item.second;
      choose(24, r24_);
      base23_ = nb(24, static_cast<int>(r24_), 34, static_cast<int>(b34_)) & b23;
      cand12_ = nb(14, static_cast<int>(r14_), 24, static_cast<int>(r24_)) & b12;
      if (cand12_.none()) return false;
      return step_pair();
    });
  }

  // (2c) (b12, r13) in N_{B12}(r14, r24) x N_{R13}(r14, b34) maximizing
  // |N_{B23}(b12, r13) cap N_{B23}(r24, b34)|.
  bool step_pair() {
    std::vector<std::pair<std::size_t, std::size_t>> list; // (score, b12 * s13 + r13)
    const std::size_t s13 = cand13_.size();
    cand12_.for_each([&](std::size_t b) {
      cand13_.for_each([&](std::size_t r) {
        const std::size_t s = intersect_count(nb(12, static_cast<int>(b), 13, static_cast<int>(r)), base23_);
        // b23 must lie in this intersection, so a zero score can never complete.
        if (s > 0) list.emplace_back(s, b * s13 + r);
      });
    });
    if (opt_.selection == Selection::Maximizer)
      std::stable_sort(list.begin(), list.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    return branch(list, [&](const auto& item) {
      trace_.pair_score = item.first;
      b12_ = item.second / s13;
      r13_ = item.second % s13;
      choose(12, b12_);
      choose(13, r13_);
      return step_fan();
    });
  }

  // (3) (b15, b45) in G1 cap G2 cap N_{B15 x B45}(r14), then r25, r35; (4) b23.
  bool step_fan() {
    const Bitset& b15 = set(15);
    const Bitset& b45 = set(45);
    const Bitset& r25 = set(25);
    const Bitset& r35 = set(35);
    const Bitset& b23 = set(23);
    const Bitset pair23 = nb(12, static_cast<int>(b12_), 13, static_cast<int>(r13_)) & base23_;
    struct Cand {
      std::size_t b15, b45;
      Bitset s25, s35;
    };
    std::vector<Cand> triple;
    trace_.g1 = trace_.g2 = 0;
    b15.for_each([&](std::size_t x) {
      const BitView n14 = nb(14, static_cast<int>(r14_), 15, static_cast<int>(x));
      const BitView n25a = nb(12, static_cast<int>(b12_), 15, static_cast<int>(x));
      const BitView n35a = nb(13, static_cast<int>(r13_), 15, static_cast<int>(x));
      b45.for_each([&](std::size_t y) {
        Bitset s25 = n25a & nb(24, static_cast<int>(r24_), 45, static_cast<int>(y));
        s25 &= r25;
        Bitset s35 = n35a & nb(34, static_cast<int>(b34_), 45, static_cast<int>(y));
        s35 &= r35;
        const bool g1 = s25.any(), g2 = s35.any();
        trace_.g1 += g1;
        trace_.g2 += g2;
        if (g1 && g2 && n14.test(y)) triple.push_back({x, y, std::move(s25), std::move(s35)});
      });
    });
    trace_.candidates = triple.size();
    return branch(triple, [&](const Cand& c) {
      choose(15, c.b15);
      choose(45, c.b45);
      std::vector<std::size_t> r25s, r35s;
      c.s25.for_each([&](std::size_t v) { r25s.push_back(v); });
      c.s35.for_each([&](std::size_t v) { r35s.push_back(v); });
      return branch(r25s, [&](std::size_t u) {
        choose(25, u);
        return branch(r35s, [&](std::size_t v) {
          choose(35, v);
          Bitset last = pair23 & nb(25, static_cast<int>(u), 35, static_cast<int>(v));
          last &= b23;
          if (last.none()) return false;
          if (!tick()) return false;
          choose(23, last.first());
          return true;
        });
      });
    });
  }

  const ReducedHypergraph& a_;
  std::array<int, 5> labels_;
  Colour blue_;
  const EmbedOptions& opt_;
  EmbedTrace& trace_;
  bool& exhausted_;
  std::map<ClassKey, Bitset> members_;
  std::map<ClassKey, int> chosen_;
  std::size_t r14_ = 0, b34_ = 0, r24_ = 0, b12_ = 0, r13_ = 0;
  Bitset cand13_, cand12_, base23_;
};

struct Subset {
  std::array<int, 5> indices;
  Rational spread;
  Rational beta;
};

} // namespace

EmbedResult embed_k5_bicoloured(const ReducedHypergraph& a, const Bicolouring& phi, const EmbedOptions& options) {
  if (options.eps <= 0) throw ArgumentError("eps must be positive");
  if (a.index_count() < 5) throw ArgumentError("embedding K5 needs at least 5 indices");
  if (!validate_bicolouring(a, phi)) throw PreconditionError("phi is not a valid bicolouring of A");
  EmbedResult result;
  result.xi = options.xi ? *options.xi : std::min(options.eps / 4, Rational(1, 24));
  if (result.xi <= 0) throw ArgumentError("xi must be positive");
  result.tau2 = tau2(a, phi);
  if (options.check_hypothesis && result.tau2 < Rational(1, 3) + options.eps) {
    result.status = EmbedStatus::HypothesisFailed;
    return result;
  }

  // Every 5-subset, most aligned blue ratios first.
  const auto& idx = a.indices();
  const int m = a.index_count();
  std::vector<Subset> subsets;
  for (int p0 = 0; p0 < m; ++p0)
    for (int p1 = p0 + 1; p1 < m; ++p1)
      for (int p2 = p1 + 1; p2 < m; ++p2)
        for (int p3 = p2 + 1; p3 < m; ++p3)
          for (int p4 = p3 + 1; p4 < m; ++p4) {
            Subset s{{idx[static_cast<std::size_t>(p0)], idx[static_cast<std::size_t>(p1)], idx[static_cast<std::size_t>(p2)],
                      idx[static_cast<std::size_t>(p3)], idx[static_cast<std::size_t>(p4)]},
                     0,
                     0};
            Rational lo(1), hi(0), sum(0);
            for (int x = 0; x < 5; ++x)
              for (int y = x + 1; y < 5; ++y) {
                const ClassKey k{s.indices[static_cast<std::size_t>(x)], s.indices[static_cast<std::size_t>(y)]};
                const Rational b(static_cast<std::int64_t>(phi.members(k, Colour::Blue).count()), a.class_size(k));
                lo = std::min(lo, b);
                hi = std::max(hi, b);
                sum += b;
              }
            s.spread = hi - lo;
            s.beta = sum / 10;
            subsets.push_back(s);
          }
  std::stable_sort(subsets.begin(), subsets.end(), [](const Subset& x, const Subset& y) { return x.spread < y.spread; });

  EmbedTrace& trace = result.trace;
  bool exhausted = false;
  for (const Subset& s : subsets) {
    ++trace.subsets_tried;
    // beta <= rho: the less frequent colour takes the blue role.
    const Colour normal = s.beta <= Rational(1, 2) ? Colour::Blue : Colour::Red;
    for (const Colour blue : {normal, opposite(normal)}) {
      trace.swapped = blue == Colour::Red;
      trace.beta = blue == Colour::Blue ? s.beta : 1 - s.beta;
      trace.rho = 1 - trace.beta;
      trace.spread = s.spread;
      trace.margin_holds = Rational(1, 3) + options.eps <= trace.beta - result.xi;
      {
        const Rational width = 2 * result.xi;
        std::optional<std::int64_t> bucket;
        trace.aligned = true;
        for (int x = 0; x < 5; ++x)
          for (int y = x + 1; y < 5; ++y) {
            const ClassKey k{s.indices[static_cast<std::size_t>(x)], s.indices[static_cast<std::size_t>(y)]};
            const Rational b(static_cast<std::int64_t>(phi.members(k, blue).count()), a.class_size(k));
            const Rational q = b / width;
            const std::int64_t f = q.numerator() / q.denominator();
            if (bucket && *bucket != f) trace.aligned = false;
            bucket = f;
          }
      }
      for (const auto& pent : pentagons()) {
        ++trace.labellings_tried;
        std::array<int, 5> labels{};
        for (int p = 0; p < 5; ++p)
          labels[static_cast<std::size_t>(p)] = s.indices[static_cast<std::size_t>(pent[static_cast<std::size_t>(p)])];
        LabelledSearch search(a, phi, labels, blue, options, trace, exhausted);
        if (auto w = search.run()) {
          if (!validate_embedding(a, phi, *w)) throw std::logic_error("embedding witness failed re-validation");
          result.status = EmbedStatus::Found;
          result.witness = std::move(w);
          return result;
        }
        if (exhausted) {
          result.status = EmbedStatus::BudgetExhausted;
          return result;
        }
        ++trace.backtracks;
      }
    }
  }
  result.status = EmbedStatus::Absent;
  return result;
}

bool validate_embedding(const ReducedHypergraph& a, const Bicolouring& phi, const EmbeddingWitness& w) {
  std::vector<int> sorted(w.labels.begin(), w.labels.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int x : sorted)
    if (!a.has_index(x)) return false;
  for (int p = 1; p <= 5; ++p)
    for (int q = p + 1; q <= 5; ++q) {
      const ClassKey k = w.key(p, q);
      if (!w.transversal.contains(k.lo, k.hi)) return false;
      const int v = w.vertex(p, q);
      if (v < 0 || v >= a.class_size(k)) return false;
      const Colour want = consecutive(p, q) ? w.blue_role : opposite(w.blue_role);
      if (phi.at(k, v) != want) return false;
    }
  return is_clique_support(a, w.support());
}

SearchResult<CliqueSupport> brute_force_k5_support(const ReducedHypergraph& a, const Bicolouring* phi,
                                                   const BruteForceOptions& options) {
  const int m = a.index_count();
  if (m < 5) throw ArgumentError("brute-force K5 support needs at least 5 indices");
  const auto& idx = a.indices();
  std::vector<std::array<int, 5>> subsets;
  for (int p0 = 0; p0 < m; ++p0)
    for (int p1 = p0 + 1; p1 < m; ++p1)
      for (int p2 = p1 + 1; p2 < m; ++p2)
        for (int p3 = p2 + 1; p3 < m; ++p3)
          for (int p4 = p3 + 1; p4 < m; ++p4) {
            std::array<int, 5> s{idx[static_cast<std::size_t>(p0)], idx[static_cast<std::size_t>(p1)],
                                 idx[static_cast<std::size_t>(p2)], idx[static_cast<std::size_t>(p3)],
                                 idx[static_cast<std::size_t>(p4)]};
            double product = 1;
            for (int x = 0; x < 5; ++x)
              for (int y = x + 1; y < 5; ++y) product *= a.class_size(s[static_cast<std::size_t>(x)], s[static_cast<std::size_t>(y)]);
            if (product > options.cap)
              throw CapabilityError("brute-force K5 support: product of class sizes " + std::to_string(product) +
                                    " exceeds the cap");
            subsets.push_back(s);
          }

  // Pairs (x, y) of J positions ordered by y, then x, so every triple w < x < y
  // is complete once (x, y) is chosen.
  std::vector<std::pair<int, int>> order;
  for (int y = 1; y < 5; ++y)
    for (int x = 0; x < y; ++x) order.emplace_back(x, y);

  SearchResult<CliqueSupport> result;
  for (const auto& s : subsets) {
    std::vector<std::vector<std::optional<Colour>>> patterns;
    if (phi) {
      for (const auto& pent : pentagons()) {
        std::vector<std::optional<Colour>> pat(order.size());
        std::array<int, 5> where{};
        for (int p = 0; p < 5; ++p) where[static_cast<std::size_t>(pent[static_cast<std::size_t>(p)])] = p;
        for (std::size_t t = 0; t < order.size(); ++t)
          pat[t] = consecutive(where[static_cast<std::size_t>(order[t].first)], where[static_cast<std::size_t>(order[t].second)])
                       ? Colour::Blue
                       : Colour::Red;
        patterns.push_back(std::move(pat));
      }
    } else {
      patterns.emplace_back(order.size());
    }
    for (const auto& pat : patterns) {
      std::array<std::array<int, 5>, 5> q{};
      const auto key = [&](int x, int y) { return ClassKey::of(s[static_cast<std::size_t>(x)], s[static_cast<std::size_t>(y)]); };
      const std::function<bool(std::size_t)> assign = [&](std::size_t t) -> bool {
        if (t == order.size()) return true;
        const auto [x, y] = order[t];
        const ClassKey k = key(x, y);
        Bitset cand = pat[t] ? phi->members(k, *pat[t]) : Bitset::full(static_cast<std::size_t>(a.class_size(k)));
        for (int w = 0; w < x && cand.any(); ++w)
          cand &= a.neighbours({key(w, x), q[static_cast<std::size_t>(w)][static_cast<std::size_t>(x)]},
                               {key(w, y), q[static_cast<std::size_t>(w)][static_cast<std::size_t>(y)]});
        for (std::size_t v = cand.first(); v < cand.size(); v = cand.next(v + 1)) {
          ++result.nodes;
          q[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = static_cast<int>(v);
          if (assign(t + 1)) return true;
        }
        return false;
      };
      if (assign(0)) {
        CliqueSupport w;
        w.indices.assign(s.begin(), s.end());
        for (const auto& [x, y] : order) {
          const ClassKey k = key(x, y);
          w.transversal.set(k.lo, k.hi, q[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
        }
        if (!is_clique_support(a, w)) throw std::logic_error("brute-force witness failed re-validation");
        result.status = SearchStatus::Found;
        result.witness = std::move(w);
        return result;
      }
    }
  }
  result.status = SearchStatus::Absent;
  return result;
}

} // namespace turanforge
