#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "zariski/abelian.hpp"
#include "zariski/enumeration.hpp"
#include "zariski/random.hpp"

using namespace zariski;

TEST_CASE("canonical exponents") {
  AbelianGroup z2 = AbelianGroup::free_abelian(2);
  CHECK(z2.mul(z2.parse_element("e0^2"), z2.parse_element("e0^-2")).is_identity());
  CHECK(z2.format_element(z2.inv(z2.parse_element("e1^3"))) == "e1^-3");
  CHECK(z2.format_element(z2.parse_element("e1 e0")) == "e0 e1");

  AbelianGroup m6({6});
  CHECK(m6.format_element(m6.parse_element("e0^5 e0^3")) == "e0^2");
  CHECK(m6.format_element(m6.inv(m6.parse_element("e0^2"))) == "e0^4");
  CHECK(m6.parse_element("e0^6").is_identity());
  CHECK(m6.format_element(m6.parse_element("e0^-1")) == "e0^5");

  CHECK_THROWS_AS(AbelianGroup({1}), precondition_error);
  CHECK_THROWS_AS(AbelianGroup(std::vector<std::uint64_t>{}), precondition_error);
  CHECK_THROWS_AS(z2.parse_element("e2"), parse_error);
  CHECK_THROWS_AS(z2.parse_element("g0"), parse_error);
}

TEST_CASE("group laws") {
  AbelianGroup g({0, 4, 0});
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    auto a = random_abelian(rng, g, 3, 2, 5);
    auto b = random_abelian(rng, g, 3, 2, 5);
    auto c = random_abelian(rng, g, 3, 2, 5);
    CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    CHECK(g.mul(a, b) == g.mul(b, a));
    CHECK(g.mul(a, g.inv(a)).is_identity());
    CHECK(g.mul(a, g.identity()) == a);
  }
}

TEST_CASE("enumeration order and injectivity") {
  AbelianGroup z = AbelianGroup::infinite_rank();
  const char* expected[] = {"1",       "e0",       "e0^-1",     "e1",       "e1^-1",
                            "e2",      "e2^-1",    "e0^2",      "e0 e1",    "e0 e1^-1",
                            "e0 e2",   "e0 e2^-1", "e0^-2",     "e0^-1 e1", "e0^-1 e1^-1",
                            "e0^-1 e2"};
  auto en = z.enumerator();
  for (const char* e : expected) CHECK(z.format_element(*en.next()) == e);

  AbelianGroup z16 = AbelianGroup::free_abelian(16);
  auto en16 = z16.enumerator();
  std::set<std::string> seen;
  for (int i = 0; i < 10000; ++i) {
    auto v = en16.next();
    REQUIRE(v.has_value());
    CHECK(seen.insert(z16.format_element(*v)).second);
  }

  auto enw = z.enumerator();
  std::set<std::string> seen_w;
  for (int i = 0; i < 10000; ++i) CHECK(seen_w.insert(z.format_element(*enw.next())).second);
}

TEST_CASE("mixed moduli enumerate canonically") {
  AbelianGroup g({2, 0});
  const char* expected[] = {"1",     "e0",      "e1",       "e1^-1", "e0 e1",
                            "e0 e1^-1", "e1^2", "e1^-2",    "e0 e1^2"};
  auto en = g.enumerator();
  for (const char* e : expected) CHECK(g.format_element(*en.next()) == e);
}

TEST_CASE("finite groups exhaust") {
  AbelianGroup k({2, 2});
  auto en = k.enumerator();
  std::set<std::string> seen;
  for (int i = 0; i < 4; ++i) {
    auto v = en.next();
    REQUIRE(v.has_value());
    seen.insert(k.format_element(*v));
  }
  CHECK(!en.next().has_value());
  CHECK(seen == std::set<std::string>{"1", "e0", "e1", "e0 e1"});
  CHECK(k.size() == 4);
  CHECK(!AbelianGroup({2, 0}).size().has_value());
}

TEST_CASE("literal round-trips") {
  AbelianGroup g({0, 6, 0, 0});
  Rng rng(12);
  for (int i = 0; i < 500; ++i) {
    auto a = random_abelian(rng, g, 4, 3, 7);
    CHECK(g.parse_element(g.format_element(a)) == a);
  }
}

TEST_CASE("indexing past a finite group fails loudly") {
  AbelianGroup k({2});
  CHECK(element_at(k, 1) == k.gen(0));
  CHECK_THROWS_AS(element_at(k, 2), precondition_error);
}
