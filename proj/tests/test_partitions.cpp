#include "doctest.h"

#include <map>

#include "gvkit/partitions.hpp"

using gvkit::HookMultiset;
using gvkit::Integer;
using gvkit::Partition;
using gvkit::Rational;

TEST_CASE("partition counts match the enumeration") {
  const long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int d = 0; d <= 10; ++d) {
    CAPTURE(d);
    CHECK(gvkit::partitions_of(d).size() == static_cast<std::size_t>(expected[d]));
    CHECK(gvkit::partition_count(d) == Integer(expected[d]));
  }
  CHECK(gvkit::partition_count(20) == Integer(627));
  CHECK(gvkit::partition_count(30) == Integer(5604));
  CHECK(gvkit::partition_count(100) == Integer("190569292"));
}

TEST_CASE("enumeration order is reverse lexicographic") {
  auto ps = gvkit::partitions_of(4);
  REQUIRE(ps.size() == 5);
  CHECK(ps.front().parts == std::vector<int>{4});
  CHECK(ps[1].parts == std::vector<int>{3, 1});
  CHECK(ps[2].parts == std::vector<int>{2, 2});
  CHECK(ps[3].parts == std::vector<int>{2, 1, 1});
  CHECK(ps.back().parts == std::vector<int>{1, 1, 1, 1});

  auto empty = gvkit::partitions_of(0);
  REQUIRE(empty.size() == 1);
  CHECK(empty.front().empty());
}

TEST_CASE("for_each_partition visits the same sequence") {
  std::vector<Partition> seen;
  gvkit::for_each_partition(6, [&](const Partition& p) { seen.push_back(p); });
  CHECK(seen == gvkit::partitions_of(6));
}

TEST_CASE("conjugation") {
  Partition p{{3, 1}};
  CHECK(p.conjugate().parts == std::vector<int>{2, 1, 1});
  CHECK(p.conjugate().conjugate() == p);
  Partition hook{{2, 1}};
  CHECK(hook.conjugate() == hook);  // self-conjugate
  for (const Partition& q : gvkit::partitions_of(7)) {
    CHECK(q.conjugate().size() == q.size());
    CHECK(q.conjugate().conjugate() == q);
  }
}

TEST_CASE("hook lengths of small diagrams") {
  // single row: hooks d, d-1, ..., 1
  CHECK(gvkit::hooklengths(Partition{{5}}).hooks ==
        std::vector<int>{5, 4, 3, 2, 1});
  // the hook shape (2,1): corner 3, then two 1s
  CHECK(gvkit::hooklengths(Partition{{2, 1}}).hooks ==
        std::vector<int>{3, 1, 1});
  // square (2,2): hooks 3,2,2,1
  CHECK(gvkit::hooklengths(Partition{{2, 2}}).hooks ==
        std::vector<int>{3, 2, 2, 1});
  CHECK(gvkit::hooklengths(Partition{}).hooks.empty());
}

TEST_CASE("hook multiset is conjugation invariant") {
  for (int d = 1; d <= 8; ++d)
    for (const Partition& p : gvkit::partitions_of(d)) {
      HookMultiset h = gvkit::hooklengths(p);
      CHECK(h.size() == d);
      CHECK(h == gvkit::hooklengths(p.conjugate()));
    }
}

TEST_CASE("hook length formula sums to d!") {
  // sum over partitions of (d! / prod hooks)^2 = d!, since d!/prod hooks
  // is the number of standard Young tableaux
  for (int d = 1; d <= 8; ++d) {
    CAPTURE(d);
    Rational dfact(1);
    for (int i = 2; i <= d; ++i) dfact *= Rational(i);
    Rational sum(0);
    for (const Partition& p : gvkit::partitions_of(d)) {
      Rational hooks(1);
      for (int h : gvkit::hooklengths(p).hooks) hooks *= Rational(h);
      Rational f = dfact / hooks;
      CHECK(f.is_integer());
      sum += f * f;
    }
    CHECK(sum == dfact);
  }
}
