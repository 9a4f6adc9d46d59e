#include <algorithm>
#include <map>
#include <numeric>

#include "cocat/error.hpp"
#include "cocat/io.hpp"
#include "cocat/monoid.hpp"
#include "doctest.h"

using namespace cocat;

namespace {

// Every word over `branches` copies of `a` with at most max_len letters, unit letters included.
std::vector<Word> all_words(const FinMonoid& a, std::size_t branches, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t from = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t to = out.size();
    for (std::size_t k = from; k < to; ++k) {
      for (std::size_t b = 0; b < branches; ++b) {
        for (std::size_t x = 0; x < a.size(); ++x) {
          Word w = out[k];
          w.push_back({b, x});
          out.push_back(w);
        }
      }
    }
    from = to;
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

Word concat(Word u, const Word& v) {
  u.insert(u.end(), v.begin(), v.end());
  return u;
}

}  // namespace

TEST_CASE("catalog monoids satisfy the monoid laws") {
  for (const auto& [name, m] : monoid_catalog()) {
    CAPTURE(name);
    CHECK_NOTHROW(m.validate());
  }
  CHECK(cyclic_monoid(4).size() == 4);
  CHECK(truncated_free_monoid(3).mul(2, 2) == 3);
  CHECK(klein_monoid().mul(1, 2) == 3);
  CHECK(idempotent_monoid().mul(1, 1) == 1);
  CHECK(monoid_catalog().front().second.trivial());
}

TEST_CASE("invalid tables are rejected") {
  FinMonoid m = cyclic_monoid(3);
  m.table[1][1] = 1;
  CHECK_THROWS_AS(m.validate(), Error);
  FinMonoid n = cyclic_monoid(2);
  n.unit = 1;
  CHECK_THROWS_AS(n.validate(), Error);
}

TEST_CASE("normal forms") {
  const auto z3 = cyclic_monoid(3);
  const auto z2 = cyclic_monoid(2);
  CHECK(normal_form(z3, {{0, 1}, {0, 1}}) == Word{{0, 2}});
  CHECK(normal_form(z2, {{0, 1}, {0, 1}}).empty());
  Word alternating{{0, 1}, {1, 1}, {0, 1}};
  CHECK(normal_form(z2, alternating) == alternating);
  // Cancellation cascades across the middle.
  CHECK(normal_form(z2, {{0, 1}, {1, 1}, {1, 1}, {0, 1}}).empty());
  CHECK(normal_form(z3, {{1, 0}, {0, 2}}) == Word{{0, 2}});

  auto bases = std::make_shared<const FinMonoid>(z3);
  CoproductWord w{{bases, std::make_shared<const FinMonoid>(z2)}, {{0, 1}, {0, 1}, {1, 1}, {1, 1}}};
  CHECK(normal_form(w).letters == Word{{0, 2}});
}

TEST_CASE("normal form is idempotent and length non-increasing") {
  const auto z3 = cyclic_monoid(3);
  for (const auto& w : all_words(z3, 2, 4)) {
    auto n = normal_form(z3, w);
    CHECK(normal_form(z3, n) == n);
    CHECK(n.size() <= w.size());
    CHECK(is_normal(z3, n));
  }
}

TEST_CASE("normal forms decide equality in Z2+Z2") {
  // Congruence closure of the defining moves: drop a unit letter, merge two
  // adjacent letters of one branch.  Moves shorten words, so the closure on
  // words of length <= 5 is closed under them.
  const auto z2 = cyclic_monoid(2);
  const auto words = all_words(z2, 2, 5);
  std::map<Word, std::size_t> index;
  for (std::size_t k = 0; k < words.size(); ++k) index[words[k]] = k;
  UnionFind classes(words.size());
  for (std::size_t k = 0; k < words.size(); ++k) {
    const auto& w = words[k];
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].element == z2.unit) {
        Word shorter = w;
        shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(i));
        classes.unite(k, index.at(shorter));
      }
      if (i + 1 < w.size() && w[i].branch == w[i + 1].branch) {
        Word merged = w;
        merged[i].element = z2.mul(w[i].element, w[i + 1].element);
        merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        classes.unite(k, index.at(merged));
      }
    }
  }
  std::size_t mismatches = 0;
  for (std::size_t a = 0; a < words.size(); a += 7) {
    for (std::size_t b = 0; b < words.size(); ++b) {
      bool same_class = classes.find(a) == classes.find(b);
      bool same_form = normal_form(z2, words[a]) == normal_form(z2, words[b]);
      if (same_class != same_form) ++mismatches;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("retractions") {
  const auto z3 = cyclic_monoid(3);
  CHECK(eval_retraction(z3, {}, 0) == z3.unit);
  CHECK(eval_retraction(z3, {{0, 1}, {1, 2}, {0, 1}}, 0) == 2);
  CHECK(eval_retraction(z3, {{1, 2}}, 0) == z3.unit);
  auto z = std::make_shared<const FinMonoid>(z3);
  CHECK(eval_retraction(CoproductWord{{z, z}, {{0, 1}, {1, 1}}}, 1) == 1);
  try {
    eval_retraction(CoproductWord{{z, std::make_shared<const FinMonoid>(cyclic_monoid(2))}, {}}, 0);
    FAIL("expected MixedMonoids");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MixedMonoids);
  }
}

TEST_CASE("retractions are homomorphisms") {
  const auto z3 = cyclic_monoid(3);
  const auto words = all_words(z3, 2, 3);
  for (std::size_t keep : {0, 1}) {
    for (std::size_t a = 0; a < words.size(); a += 3) {
      for (std::size_t b = 0; b < words.size(); b += 5) {
        CHECK(eval_retraction(z3, concat(words[a], words[b]), keep) ==
              z3.mul(eval_retraction(z3, words[a], keep), eval_retraction(z3, words[b], keep)));
      }
    }
  }
}

TEST_CASE("counit-preserving images of non-units have length at least two") {
  for (const auto& [name, m] : monoid_catalog()) {
    CAPTURE(name);
    for (std::size_t x = 0; x < m.size(); ++x) {
      if (x == m.unit) continue;
      auto ws = counit_candidates(m, x, 5);
      CHECK_FALSE(ws.empty());
      for (const auto& w : ws) CHECK(w.size() >= 2);
    }
    auto r = search_comultiplication(m, 4);
    CHECK(r.stats.short_candidates == 0);
  }
}

TEST_CASE("the interchange composite juxtaposes the inner images") {
  const auto z3 = cyclic_monoid(3);
  std::vector<Word> inner(z3.size());
  inner[1] = counit_candidates(z3, 1, 4).back();
  inner[2] = counit_candidates(z3, 2, 4).front();
  for (const auto& outer : all_words(z3, 2, 3)) {
    if (!is_normal(z3, outer)) continue;
    for (bool horizontal : {true, false}) {
      Word expected;
      for (const auto& l : outer) {
        for (const auto& i : inner[l.element]) {
          std::size_t column = horizontal ? l.branch : i.branch;
          std::size_t row = horizontal ? i.branch : l.branch;
          expected.push_back({2 * column + row, i.element});
        }
      }
      CHECK(interchange_side(z3, outer, horizontal, inner) == expected);
    }
  }
}

TEST_CASE("no comultiplication on a nontrivial catalog monoid") {
  for (const auto& [name, m] : monoid_catalog()) {
    CAPTURE(name);
    auto r = search_comultiplication(m, 6);
    if (m.trivial()) {
      CHECK(r.verdict == ComultiplicationVerdict::UniqueTrivial);
    } else {
      CHECK(r.verdict == ComultiplicationVerdict::None);
      CHECK(r.stats.consistent_pairs == 0);
      CHECK(r.witness.find("fails interchange") != std::string::npos);
    }
  }
}

TEST_CASE("serial and parallel obstruction searches agree") {
  for (const auto& m : {cyclic_monoid(3), klein_monoid()}) {
    auto a = search_comultiplication(m, 5, true);
    auto b = search_comultiplication(m, 5, false);
    CHECK(a.verdict == b.verdict);
    CHECK(a.witness == b.witness);
    CHECK(a.stats.pairs == b.stats.pairs);
  }
}

TEST_CASE("endo 2-cells of a diagonal are identities") {
  for (const auto& [name, m] : monoid_catalog()) {
    CAPTURE(name);
    auto r = search_endo_2cell(m, 6);
    CHECK(r.verdict == EndoVerdict::OnlyTrivial);
    CHECK(r.stats.candidates == 0);
  }
}

TEST_CASE("search guards") {
  try {
    search_comultiplication(cyclic_monoid(2), 9);
    FAIL("expected SearchSpaceTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SearchSpaceTooLarge);
  }
  CHECK_THROWS_AS(search_endo_2cell(cyclic_monoid(2), 9), Error);
}

TEST_CASE("monoid files") {
  auto z4 = cyclic_monoid(4);
  CHECK(monoid_from_json(monoid_to_json(z4)) == z4);
  auto j = monoid_to_json(idempotent_monoid());
  CHECK(j["unit"] == "e");
  CHECK(j["table"][1][1] == "x");
  j["table"][1][1] = "y";
  CHECK_THROWS_AS(monoid_from_json(j), Error);
  Json by_index = {{"elements", {"e", "g"}}, {"unit", 0}, {"table", {{0, 1}, {1, 0}}}};
  CHECK(monoid_from_json(by_index) == cyclic_monoid(2));
}

TEST_CASE("verdict names") {
  CHECK(to_string(ComultiplicationVerdict::UniqueTrivial) == "unique-trivial");
  CHECK(to_string(ComultiplicationVerdict::None) == "none");
  CHECK(to_string(EndoVerdict::OnlyTrivial) == "only-trivial");
}
