#include <vector>

#include "hyperlag/errors.hpp"
#include "hyperlag/rational.hpp"
#include "hyperlag/verifier.hpp"

namespace hyperlag {

namespace {

// [tmax]^{(r)} in colex order (a linear extension of the domination order)
// with, for each set, the indices of its lower covers A - e_k.
struct DominationPoset {
  std::vector<Edge> sets;
  std::vector<std::vector<std::size_t>> covers;

  DominationPoset(int r, int tmax) {
    const auto n = binomial_u64(tmax, r);
    sets.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) sets.push_back(colex_unrank(ColexIndex{k}, r));
    covers.resize(sets.size());
    for (std::size_t p = 0; p < sets.size(); ++p) {
      const Edge& a = sets[p];
      for (std::size_t k = 0; k < a.size(); ++k) {
        const Vertex lowest = k == 0 ? 1 : a[k - 1] + 1;
        if (a[k] - 1 < lowest) continue;
        Edge b = a;
        --b[k];
        covers[p].push_back(static_cast<std::size_t>(colex_rank(b).rank));
      }
    }
  }
};

class DownsetWalk {
 public:
  DownsetWalk(const DominationPoset& poset, std::uint64_t m, int r, bool pair_covering_only,
              const std::function<bool(const Hypergraph&)>& visit)
      : poset_(poset), m_(m), r_(r), covering_only_(pair_covering_only), visit_(visit),
        included_(poset.sets.size(), 0) {}

  void run() {
    if (m_ <= poset_.sets.size()) walk(0, 0);
  }

 private:
  // returns false once the visitor asked to stop
  bool walk(std::size_t p, std::uint64_t count) {
    if (count == m_) return emit();
    const std::size_t n = poset_.sets.size();
    if (p == n || n - p < m_ - count) return true;
    bool addable = true;
    for (std::size_t c : poset_.covers[p])
      if (!included_[c]) {
        addable = false;
        break;
      }
    if (addable) {
      included_[p] = 1;
      chosen_.push_back(p);
      bool go = walk(p + 1, count + 1);
      chosen_.pop_back();
      included_[p] = 0;
      if (!go) return false;
    }
    return walk(p + 1, count);
  }

  bool emit() {
    std::vector<Edge> edges;
    edges.reserve(chosen_.size());
    for (std::size_t p : chosen_) edges.push_back(poset_.sets[p]);
    Hypergraph h(r_, std::move(edges));
    if (covering_only_ && !covers_pairs(h).covers) return true;
    return visit_(h);
  }

  const DominationPoset& poset_;
  std::uint64_t m_;
  int r_;
  bool covering_only_;
  const std::function<bool(const Hypergraph&)>& visit_;
  std::vector<char> included_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

void for_each_left_compressed(std::uint64_t m, int r, int tmax,
                              const std::function<bool(const Hypergraph&)>& visit, bool pair_covering_only) {
  if (r < 1) throw ArgumentError("uniformity must be at least 1");
  if (m == 0 || tmax < r) return;
  DominationPoset poset(r, tmax);
  DownsetWalk(poset, m, r, pair_covering_only, visit).run();
}

std::vector<Hypergraph> enumerate_left_compressed(std::uint64_t m, int r, int tmax, bool pair_covering_only) {
  std::vector<Hypergraph> out;
  for_each_left_compressed(
      m, r, tmax,
      [&](const Hypergraph& h) {
        out.push_back(h);
        return true;
      },
      pair_covering_only);
  return out;
}

std::uint64_t count_left_compressed(std::uint64_t m, int r, int tmax, std::uint64_t cap, bool pair_covering_only) {
  std::uint64_t count = 0;
  for_each_left_compressed(
      m, r, tmax,
      [&](const Hypergraph&) {
        ++count;
        return count <= cap;
      },
      pair_covering_only);
  return count;
}

}  // namespace hyperlag
