#include "gfree/families.hpp"

#include <array>
#include <charconv>
#include <unordered_map>

#include "gfree/error.hpp"

namespace gfree {

namespace {

class Builder {
 public:
  Vertex add(std::string name) {
    auto id = static_cast<Vertex>(names_.size());
    index_.emplace(name, id);
    names_.push_back(std::move(name));
    return id;
  }
  void edge(const std::string& a, const std::string& b) {
    edges_.emplace_back(index_.at(a), index_.at(b));
  }
  LabeledGraph finish() && { return {Graph::build(names_.size(), edges_), std::move(names_)}; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Edge> edges_;
};

std::string sup(const char* base, int i, const std::string& sub) {
  return std::string(base) + "^(" + std::to_string(i) + ")_" + sub;
}
std::string sup(const char* base, int i, int j) { return sup(base, i, std::to_string(j)); }

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::Construction, what);
}

// Structural guard run on every construction; a failure means the generator
// itself is wrong.
void validate(const FamilyGraph& f, bool min_degree_three) {
  const Graph& g = f.graph();
  auto st = stats(g);
  std::string tag = family_name(f.family) + ":" + std::to_string(f.param);
  require(st.connected, tag + " is disconnected");
  require(is_c3c4_free(g), tag + " contains C3 or C4");
  if (min_degree_three) require(st.min_degree >= 3, tag + " has a vertex of degree < 3");
}

constexpr std::array<std::pair<const char*, const char*>, 20> kAPrime{{
    {"u_1", "v_1,1"},   {"u_1", "v_1,2"},   {"v_1,1", "w_1,1"}, {"v_1,1", "w_1,2"},
    {"v_1,2", "w_1,3"}, {"v_1,2", "w_1,4"}, {"w_1,1", "w_2,1"}, {"w_1,1", "w_1,3"},
    {"w_1,2", "w_1,4"}, {"w_1,2", "w_2,3"}, {"w_1,3", "w_2,2"}, {"w_1,4", "w_2,4"},
    {"u_2", "v_2,1"},   {"u_2", "v_2,2"},   {"v_2,1", "w_2,1"}, {"v_2,1", "w_2,2"},
    {"v_2,2", "w_2,3"}, {"v_2,2", "w_2,4"}, {"w_2,1", "w_2,3"}, {"w_2,2", "w_2,4"},
}};

// "v_1,2" -> "v^(i)_1,2"
std::string copy_name(std::string_view local, int i) {
  std::string base(local.substr(0, 1));
  return sup(base.c_str(), i, std::string(local.substr(2)));
}

}  // namespace

std::span<const std::pair<const char*, const char*>> a_prime_edges() { return kAPrime; }

std::string family_name(Family f) {
  switch (f) {
    case Family::H1: return "h1";
    case Family::H2: return "h2";
    case Family::H3: return "h3";
    case Family::H4: return "h4";
    case Family::GP: return "gp";
  }
  return "?";
}

FamilyGraph h1(int s) {
  require(s >= 1, "h1 needs s >= 1");
  Builder b;
  for (int i = 1; i <= s; ++i) {
    for (int j = 1; j <= 6; ++j) b.add(sup("u", i, j));
  }
  for (int h = 1; h <= 3; ++h) b.add("v_" + std::to_string(h));
  for (int i = 1; i <= s; ++i) {
    for (int j = 1; j <= 6; ++j) {
      b.edge(sup("u", i, j), sup("u", i, j % 6 + 1));
      b.edge(sup("u", i, j), "v_" + std::to_string((j - 1) % 3 + 1));
    }
  }
  FamilyGraph f{Family::H1, s, std::move(b).finish()};
  validate(f, s >= 2);
  return f;
}

FamilyGraph h2(int s) {
  require(s >= 1, "h2 needs s >= 1");
  Builder b;
  for (int i = 1; i <= s; ++i) {
    for (const char* base : {"u", "v", "w"}) {
      for (int j = 1; j <= 5; ++j) b.add(sup(base, i, j));
    }
  }
  b.add("z");
  for (int i = 1; i <= s; ++i) {
    for (int j = 1; j <= 5; ++j) {
      int next = j % 5 + 1;
      b.edge(sup("u", i, j), sup("u", i, next));
      b.edge(sup("v", i, j), sup("v", i, next));
      b.edge(sup("u", i, j), sup("w", i, j));
      b.edge(sup("v", i, j), sup("w", i, j));
      b.edge("z", sup("w", i, j));
    }
  }
  FamilyGraph f{Family::H2, s, std::move(b).finish()};
  validate(f, true);
  return f;
}

FamilyGraph h3(int s) {
  require(s >= 4, "h3 needs s >= 4");
  Builder b;
  for (int i = 1; i <= s; ++i) {
    b.add(sup("u", i, 1));
    b.add(sup("u", i, 2));
    for (int j = 1; j <= 2; ++j) {
      for (int h = 1; h <= 2; ++h) b.add(sup("v", i, std::to_string(j) + "," + std::to_string(h)));
    }
    for (int j = 1; j <= 2; ++j) {
      for (int h = 1; h <= 4; ++h) b.add(sup("w", i, std::to_string(j) + "," + std::to_string(h)));
    }
  }
  for (int i = 1; i <= s; ++i) {
    for (auto [a, c] : kAPrime) b.edge(copy_name(a, i), copy_name(c, i));
    b.edge(sup("u", i, 2), sup("u", i % s + 1, 1));
  }
  FamilyGraph f{Family::H3, s, std::move(b).finish()};
  validate(f, true);
  require(stats(f.graph()).max_degree == 3, "h3 is not 3-regular");
  return f;
}

FamilyGraph h4(int s) {
  require(s >= 1, "h4 needs s >= 1");
  Builder b;
  for (int i = 1; i <= s; ++i) {
    for (int j = 1; j <= 6; ++j) b.add(sup("~u", i, j));
    for (int h = 1; h <= 3; ++h) b.add(sup("v", i, h));
  }
  b.add("z");
  for (int i = 1; i <= s; ++i) {
    for (int j = 1; j <= 6; ++j) {
      b.edge(sup("~u", i, j), sup("~u", i, j % 6 + 1));
      b.edge(sup("~u", i, j), sup("v", i, (j - 1) % 3 + 1));
    }
    for (int h = 1; h <= 3; ++h) b.edge("z", sup("v", i, h));
  }
  FamilyGraph f{Family::H4, s, std::move(b).finish()};
  validate(f, true);
  return f;
}

FamilyGraph gp(int n) {
  require(n >= 5 && n % 2 == 1, "gp needs odd n >= 5, got " + std::to_string(n));
  Builder b;
  for (int i = 0; i < n; ++i) b.add("u_" + std::to_string(i));
  for (int i = 0; i < n; ++i) b.add("v_" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    auto ui = "u_" + std::to_string(i);
    auto vi = "v_" + std::to_string(i);
    b.edge(ui, "u_" + std::to_string((i + 1) % n));
    b.edge(vi, "v_" + std::to_string((i + 2) % n));
    b.edge(ui, vi);
  }
  FamilyGraph f{Family::GP, n, std::move(b).finish()};
  validate(f, true);
  require(stats(f.graph()).max_degree == 3, "gp is not 3-regular");
  return f;
}

FamilyGraph make_family(std::string_view spec) {
  auto colon = spec.find(':');
  auto bad = [&]() { fail(ErrorKind::Usage, "bad family '" + std::string(spec) + "'"); };
  if (colon == std::string_view::npos) bad();
  auto head = spec.substr(0, colon);
  auto tail = spec.substr(colon + 1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), value);
  if (tail.empty() || ec != std::errc() || ptr != tail.data() + tail.size()) bad();
  if (head == "h1") return h1(value);
  if (head == "h2") return h2(value);
  if (head == "h3") return h3(value);
  if (head == "h4") return h4(value);
  if (head == "gp") return gp(value);
  bad();
  return {};
}

}  // namespace gfree
