#include <random>

#include "doctest.h"
#include "oracles/brute_partitions.hpp"
#include "qts/partition.hpp"

using namespace qts;

namespace {

std::vector<std::vector<int>> parts_of(const std::vector<Partition>& ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) out.push_back(p.parts());
  return out;
}

}  // namespace

TEST_CASE("statistics") {
  CHECK(Partition{3, 1, 0}.weight() == 4);
  CHECK(Partition{0, 0}.weight() == 0);
  CHECK(Partition{2, 2, 2}.weight() == 6);
  CHECK(Partition{3, 1}.n_stat() == 1);
  CHECK(Partition{3, 1}.n_stat_conj() == 3);
  for (int k = 0; k < 6; ++k) CHECK(Partition{k}.n_stat() == 0);
  CHECK(Partition{2, 2}.n_stat() == 2);
  CHECK(Partition{2, 2}.n_stat_conj() == 2);
}

TEST_CASE("conjugate") {
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  CHECK(Partition{0, 0}.conjugate() == Partition{0});
  CHECK(Partition{3, 2, 1}.conjugate().conjugate().padded(3) == Partition{3, 2, 1});
}

TEST_CASE("construction and parsing") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(std::vector<int>{}), std::invalid_argument);
  CHECK(Partition::parse("[2,1,0]") == Partition{2, 1, 0});
  CHECK(Partition::parse("(2, 1)") == Partition{2, 1});
  CHECK(Partition::parse("3") == Partition{3});
  CHECK_THROWS_AS(Partition::parse("[2,a]"), std::invalid_argument);
  CHECK(Partition{2, 1, 0}.str() == "[2,1,0]");
  CHECK(Partition{2, 1} != Partition{2, 1, 0});
}

TEST_CASE("containment and strips") {
  CHECK(contains(Partition{2, 1}, Partition{1, 1}));
  CHECK(!contains(Partition{3, 1}, Partition{2, 2}));
  CHECK(contains(Partition{3, 1}, Partition{3, 1}));
  CHECK_THROWS_AS(contains(Partition{2, 1}, Partition{1}), AmbientMismatch);
  CHECK(is_horizontal_strip(Partition{2, 1}, Partition{1, 1}));
  CHECK(is_horizontal_strip(Partition{2, 2}, Partition{2, 0}));
  CHECK(is_horizontal_strip(Partition{3, 3}, Partition{3, 1}));
  CHECK(!is_horizontal_strip(Partition{3, 3}, Partition{1, 1}));
  CHECK(is_horizontal_strip(Partition{4, 2, 1}, Partition{4, 2, 1}));
  CHECK_THROWS_AS(is_horizontal_strip(Partition{2}, Partition{1, 0}), AmbientMismatch);
}

TEST_CASE("enumerations") {
  auto sub = subpartitions(Partition{2, 1});
  CHECK(sub.size() == 5);
  CHECK(parts_of(sub) == std::vector<std::vector<int>>{{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}});
  CHECK(subpartitions(Partition{0, 0, 0}) == std::vector<Partition>{Partition{0, 0, 0}});
  for (int k = 0; k < 6; ++k) CHECK(subpartitions(Partition{k}).size() == static_cast<std::size_t>(k + 1));

  auto pred = horizontal_strip_predecessors(Partition{2, 1});
  CHECK(parts_of(pred) == std::vector<std::vector<int>>{{1, 0}, {1, 1}, {2, 0}, {2, 1}});
  CHECK(horizontal_strip_predecessors(Partition{0, 0}) == std::vector<Partition>{Partition{0, 0}});
  for (int k = 0; k < 5; ++k) {
    auto row = horizontal_strip_predecessors(Partition{k});
    REQUIRE(row.size() == static_cast<std::size_t>(k + 1));
    for (int j = 0; j <= k; ++j) CHECK(row[static_cast<std::size_t>(j)] == Partition{j});
  }
  CHECK(staircase(4) == std::vector<int>{3, 2, 1, 0});
  CHECK(staircase(1) == std::vector<int>{0});
}

TEST_CASE("enumerations agree with brute-force grid filtering") {
  for (int n = 1; n <= 3; ++n) {
    for (const Partition& lambda : partitions_in_box(n, 4)) {
      auto sub = subpartitions(lambda);
      CHECK(std::is_sorted(sub.begin(), sub.end()));
      auto expect = oracle::grid_filter(n, 4, [&](const std::vector<int>& v) {
        for (int i = 0; i < n; ++i) if (v[i] > lambda[i]) return false;
        return true;
      });
      auto sp = parts_of(sub);
      CHECK(std::set<std::vector<int>>(sp.begin(), sp.end()) == expect);
      CHECK(sub.size() == expect.size());

      auto pred = horizontal_strip_predecessors(lambda);
      CHECK(std::is_sorted(pred.begin(), pred.end()));
      auto expect_pred = oracle::grid_filter(n, 4, [&](const std::vector<int>& v) {
        for (int i = 0; i < n; ++i) {
          if (v[i] > lambda[i]) return false;
          if (i + 1 < n && v[i] < lambda[i + 1]) return false;
        }
        return true;
      });
      auto pp = parts_of(pred);
      CHECK(std::set<std::vector<int>>(pp.begin(), pp.end()) == expect_pred);
      CHECK(pred.size() == expect_pred.size());
    }
  }
}

TEST_CASE("property: order and statistics") {
  std::mt19937 rng(5);
  std::vector<Partition> box = partitions_in_box(3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
  for (int i = 0; i < 300; ++i) {
    const Partition &a = box[pick(rng)], &b = box[pick(rng)], &c = box[pick(rng)];
    CHECK(contains(a, a));
    if (contains(a, b) && contains(b, a)) CHECK(a == b);
    if (contains(a, b) && contains(b, c)) CHECK(contains(a, c));
    if (is_horizontal_strip(a, b)) CHECK(contains(a, b));
    CHECK(a.conjugate().weight() == a.weight());
    CHECK(a.n_stat() == a.conjugate().n_stat_conj());
  }
}
