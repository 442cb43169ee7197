#include "gfree/embed.hpp"

#include <algorithm>
#include <string>

#include "gfree/error.hpp"

namespace gfree {

namespace {

constexpr std::size_t kBallHostLimit = 2048;
constexpr std::size_t kBallRadiusLimit = 8;

void require_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.order() > cap) {
    fail(ErrorKind::Capacity, std::string(what) + " has " + std::to_string(g.order()) +
                                  " vertices; cap is " + std::to_string(cap));
  }
}

// Backtracking matcher over bitset candidate domains.
//
// Pattern vertices are visited in a connected order; the candidate set for
// the k-th vertex is the intersection of
//   - host vertices passing the degree filter,
//   - N(image) of each earlier pattern neighbor,
//   - complement of N(image) of each earlier pattern non-neighbor,
//   - the radius-d ball around earlier images at pattern distance d >= 2,
// minus the images already used.
class Matcher {
 public:
  Matcher(const Graph& pattern, const Graph& host, bool bijective)
      : p_(pattern), h_(host), stride_(host.stride()) {
    np_ = p_.order();
    build_order();
    build_degree_filter(bijective);
    build_constraints();
    image_.assign(np_, 0);
    used_.assign(stride_, 0);
    level_.assign(np_, std::vector<std::uint64_t>(stride_, 0));
  }

  template <typename Visit>
  std::size_t run(Visit&& visit) {
    found_ = 0;
    stop_ = false;
    if (np_ == 0) {
      ++found_;
      Embedding empty;
      visit(empty);
      return found_;
    }
    if (np_ > h_.order()) return 0;
    descend(0, visit);
    return found_;
  }

 private:
  struct Step {
    Vertex vertex = 0;
    std::vector<std::size_t> adjacent;      // earlier steps adjacent in pattern
    std::vector<std::size_t> nonadjacent;   // earlier steps not adjacent
    std::vector<std::pair<std::size_t, std::size_t>> within;  // (step, radius)
  };

  void build_order() {
    std::vector<bool> placed(np_, false);
    std::vector<std::size_t> links(np_, 0);
    for (std::size_t k = 0; k < np_; ++k) {
      std::size_t best = np_;
      for (Vertex a = 0; a < np_; ++a) {
        if (placed[a]) continue;
        if (best == np_) {
          best = a;
          continue;
        }
        auto key = [&](Vertex x) { return std::make_pair(links[x], p_.degree(x)); };
        if (key(a) > key(static_cast<Vertex>(best))) best = a;
      }
      placed[best] = true;
      Step s;
      s.vertex = static_cast<Vertex>(best);
      steps_.push_back(s);
      for (Vertex y : p_.neighbors(static_cast<Vertex>(best))) ++links[y];
    }
  }

  void build_degree_filter(bool bijective) {
    // Signature for the bijective case: degree plus sorted neighbor degrees.
    auto signature = [](const Graph& g, Vertex v) {
      std::vector<std::size_t> sig{g.degree(v)};
      for (Vertex y : g.neighbors(v)) sig.push_back(g.degree(y));
      std::sort(sig.begin() + 1, sig.end());
      return sig;
    };
    degree_ok_.assign(np_, std::vector<std::uint64_t>(stride_, 0));
    for (std::size_t k = 0; k < np_; ++k) {
      Vertex a = steps_[k].vertex;
      auto psig = bijective ? signature(p_, a) : std::vector<std::size_t>{};
      for (Vertex c = 0; c < h_.order(); ++c) {
        bool ok = bijective ? signature(h_, c) == psig : h_.degree(c) >= p_.degree(a);
        if (ok) degree_ok_[k][c >> 6] |= std::uint64_t{1} << (c & 63);
      }
    }
  }

  void build_constraints() {
    std::vector<std::vector<int>> pdist;
    pdist.reserve(np_);
    for (Vertex a = 0; a < np_; ++a) pdist.push_back(bfs_distances(p_, a));

    std::size_t radius = 0;
    for (std::size_t k = 0; k < np_; ++k) {
      Vertex a = steps_[k].vertex;
      for (std::size_t j = 0; j < k; ++j) {
        Vertex b = steps_[j].vertex;
        if (p_.adjacent(a, b)) {
          steps_[k].adjacent.push_back(j);
        } else {
          steps_[k].nonadjacent.push_back(j);
          int d = pdist[a][b];
          if (d >= 2 && static_cast<std::size_t>(d) <= kBallRadiusLimit) {
            steps_[k].within.emplace_back(j, static_cast<std::size_t>(d));
            radius = std::max(radius, static_cast<std::size_t>(d));
          }
        }
      }
    }
    if (h_.order() > kBallHostLimit || radius == 0) {
      for (auto& s : steps_) s.within.clear();
      return;
    }
    // balls_[r][v]: host vertices within distance r of v, r = 0..radius.
    const std::size_t nh = h_.order();
    balls_.assign(radius + 1, std::vector<std::uint64_t>(nh * stride_, 0));
    for (Vertex v = 0; v < nh; ++v) {
      auto dist = bfs_distances(h_, v);
      for (Vertex x = 0; x < nh; ++x) {
        if (dist[x] == kUnreachable || static_cast<std::size_t>(dist[x]) > radius) continue;
        for (std::size_t r = static_cast<std::size_t>(dist[x]); r <= radius; ++r) {
          balls_[r][v * stride_ + (x >> 6)] |= std::uint64_t{1} << (x & 63);
        }
      }
    }
  }

  template <typename Visit>
  void descend(std::size_t k, Visit& visit) {
    const Step& step = steps_[k];
    auto& cand = level_[k];
    std::copy(degree_ok_[k].begin(), degree_ok_[k].end(), cand.begin());
    for (std::size_t w = 0; w < stride_; ++w) cand[w] &= ~used_[w];
    for (std::size_t j : step.adjacent) {
      auto r = h_.row(image_[j]);
      for (std::size_t w = 0; w < stride_; ++w) cand[w] &= r[w];
    }
    for (std::size_t j : step.nonadjacent) {
      auto r = h_.row(image_[j]);
      for (std::size_t w = 0; w < stride_; ++w) cand[w] &= ~r[w];
    }
    for (auto [j, radius] : step.within) {
      const std::uint64_t* ball = balls_[radius].data() + image_[j] * stride_;
      for (std::size_t w = 0; w < stride_; ++w) cand[w] &= ball[w];
    }

    for (std::size_t w = 0; w < stride_; ++w) {
      std::uint64_t bits = cand[w];
      while (bits != 0) {
        auto c = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        image_[k] = c;
        if (k + 1 == np_) {
          ++found_;
          if (!emit(visit)) {
            stop_ = true;
            return;
          }
          continue;
        }
        used_[w] |= std::uint64_t{1} << (c & 63);
        descend(k + 1, visit);
        used_[w] &= ~(std::uint64_t{1} << (c & 63));
        if (stop_) return;
      }
    }
  }

  template <typename Visit>
  bool emit(Visit& visit) {
    Embedding map(np_);
    for (std::size_t k = 0; k < np_; ++k) map[steps_[k].vertex] = image_[k];
    return visit(map);
  }

  const Graph& p_;
  const Graph& h_;
  std::size_t stride_;
  std::size_t np_ = 0;
  std::vector<Step> steps_;
  std::vector<std::vector<std::uint64_t>> degree_ok_;
  std::vector<std::vector<std::uint64_t>> balls_;
  std::vector<Vertex> image_;
  std::vector<std::uint64_t> used_;
  std::vector<std::vector<std::uint64_t>> level_;
  std::size_t found_ = 0;
  bool stop_ = false;
};

bool same_degree_sequence(const Graph& g, const Graph& h) {
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
  for (Vertex v = 0; v < g.order(); ++v) a.push_back(g.degree(v));
  for (Vertex v = 0; v < h.order(); ++v) b.push_back(h.degree(v));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool oracle_extend(const Graph& p, const Graph& h, Embedding& map, std::vector<bool>& used, Vertex a) {
  if (a == p.order()) return true;
  for (Vertex c = 0; c < h.order(); ++c) {
    if (used[c]) continue;
    bool consistent = true;
    for (Vertex b = 0; b < a && consistent; ++b) {
      consistent = p.adjacent(a, b) == h.adjacent(c, map[b]);
    }
    if (!consistent) continue;
    map[a] = c;
    used[c] = true;
    if (oracle_extend(p, h, map, used, a + 1)) return true;
    used[c] = false;
  }
  return false;
}

}  // namespace

std::optional<Embedding> find_induced(const Graph& pattern, const Graph& host) {
  require_cap(pattern, kPatternCap, "pattern");
  std::optional<Embedding> result;
  Matcher(pattern, host, false).run([&](const Embedding& m) {
    result = m;
    return false;
  });
  return result;
}

bool is_free(const Graph& host, const Graph& pattern) {
  return !find_induced(pattern, host).has_value();
}

std::size_t for_each_induced(const Graph& pattern, const Graph& host,
                             const std::function<bool(const Embedding&)>& visit) {
  require_cap(pattern, kPatternCap, "pattern");
  return Matcher(pattern, host, false).run(visit);
}

std::optional<Embedding> find_isomorphism(const Graph& g, const Graph& h) {
  require_cap(g, kIsomorphismCap, "graph");
  require_cap(h, kIsomorphismCap, "graph");
  if (g.order() != h.order() || g.size() != h.size() || !same_degree_sequence(g, h)) {
    return std::nullopt;
  }
  std::optional<Embedding> result;
  Matcher(g, h, true).run([&](const Embedding& m) {
    result = m;
    return false;
  });
  return result;
}

bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

std::optional<Embedding> oracle_find_induced(const Graph& pattern, const Graph& host) {
  require_cap(pattern, kOraclePatternCap, "oracle pattern");
  require_cap(host, kOracleHostCap, "oracle host");
  Embedding map(pattern.order());
  std::vector<bool> used(host.order(), false);
  if (oracle_extend(pattern, host, map, used, 0)) return map;
  return std::nullopt;
}

bool verify_embedding(const Graph& pattern, const Graph& host, const Embedding& map) {
  if (map.size() != pattern.order()) return false;
  std::vector<bool> used(host.order(), false);
  for (Vertex c : map) {
    if (c >= host.order() || used[c]) return false;
    used[c] = true;
  }
  for (Vertex a = 0; a < pattern.order(); ++a) {
    for (Vertex b = a + 1; b < pattern.order(); ++b) {
      if (pattern.adjacent(a, b) != host.adjacent(map[a], map[b])) return false;
    }
  }
  return true;
}

}  // namespace gfree
