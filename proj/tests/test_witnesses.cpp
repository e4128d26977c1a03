#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "zariski/random.hpp"
#include "zariski/witnesses.hpp"

using namespace zariski;

namespace {
const FreeGroup f2(2);
const FreeGroup fw = FreeGroup::infinite_rank();
Word W(const char* s) { return f2.parse_element(s); }

template <class G>
WitnessFamily<G> family(const G& b, std::initializer_list<const char*> texts) {
  std::vector<Monomial<G>> ms;
  for (const char* t : texts) ms.push_back(parse_monomial(b, t));
  return WitnessFamily<G>::over(b, std::move(ms));
}
}  // namespace

TEST_CASE("separation witness, generic scan") {
  auto Wf = family(f2, {"x g0 x^-1 g1^-1"});
  Word x = separation_witness(Wf, {Word{}}, 10000);
  CHECK(f2.format_element(x) == "g0");  // first enumerated non-excluded witness
  CHECK(intersection_member(Wf, x));

  // constant non-unit evaluation admits the first non-unit element
  AbelianGroup ab = AbelianGroup::free_abelian(2);
  auto Wc = family(ab, {"e0 x e0^-1 x^-1 e1"});
  auto xa = separation_witness(Wc, {}, 100);
  CHECK(ab.format_element(xa) == "e0");

  CHECK_THROWS_AS(separation_witness(family(f2, {"x g0 x^-1 g0^-1"}), {}, 100),
                  precondition_error);  // vanishes at the identity
}

TEST_CASE("separation witness, fresh-generator path") {
  auto Wf = family(fw, {"g0 x g1 x^-1 g2", "x^2 g3 x^-1 g4 x^-1"});
  Word x = separation_witness(Wf, {}, 10);
  CHECK(fw.format_element(x) == "g5");
  CHECK(intersection_member(Wf, x));

  Word x2 = separation_witness(Wf, {fw.parse_element("g5")}, 10);
  CHECK(fw.format_element(x2) == "g6");

  // the generic path must agree that both answers are witnesses even if it
  // would pick another element first
  auto Wsmall = family(fw, {"x g0 x^-1 g1^-1"});
  Word fresh = separation_witness(Wsmall, {}, 10);
  CHECK(fw.format_element(fresh) == "g2");
  auto en = fw.enumerator();
  bool fresh_seen_valid = intersection_member(Wsmall, fresh);
  CHECK(fresh_seen_valid);
}

TEST_CASE("budget exhaustion is reported") {
  // x commutes with g0: satisfied only by powers of g0, none of weight 1 is
  // excluded, so an absurd exclusion list forces a deep scan
  auto Wf = family(f2, {"x g0 x^-1 g1^-1"});
  std::vector<Word> exclude;
  auto en = f2.enumerator();
  for (int i = 0; i < 50; ++i) exclude.push_back(*en.next());
  CHECK_THROWS_AS(separation_witness(Wf, exclude, 10), budget_exhausted);
}

TEST_CASE("abelian co-zero subgroup") {
  AbelianGroup a6 = AbelianGroup::free_abelian(6);
  auto W1 = family(a6, {"e0 x x^-1"});  // evaluates to e0 everywhere
  SubAlphabet h = abelian_cozero_subalphabet(W1);
  CHECK(h.excluded == std::vector<std::uint64_t>{0});
  CHECK(h.members_up_to_rank() == std::vector<std::uint64_t>{1, 2, 3, 4, 5});

  auto W2 = family(a6, {"e0 e3^2 x x^-1", "e1"});
  SubAlphabet h2 = abelian_cozero_subalphabet(W2);
  CHECK(h2.excluded == std::vector<std::uint64_t>{0, 1, 3});
  CHECK(h2.members_up_to_rank() == std::vector<std::uint64_t>{2, 4, 5});

  SubAlphabet h3 = abelian_cozero_subalphabet(WitnessFamily<AbelianGroup>::over(a6, {}));
  CHECK(h3.excluded.empty());

  CHECK_THROWS_AS(abelian_cozero_subalphabet(family(a6, {"e0 x e0^-1 x^-1"})),
                  precondition_error);

  // sampled subgroup elements verify, and commutativity gives w(h) = w(1) h^k
  auto W4 = family(a6, {"e0 x e1 x e2 x^-2", "e1^2 x^3 e0"});
  SubAlphabet h4 = abelian_cozero_subalphabet(W4);
  Rng rng(51);
  for (int i = 0; i < 100; ++i) {
    AbelianElement s = random_subalphabet_abelian(rng, a6, h4, 3, 3, 6);
    for (const auto& m : W4.monomials) {
      CHECK(cozero_contains(m, s));
      std::int64_t total = 0;
      for (int e : m.exps) total += e;
      CHECK(eval_monomial(m, s) ==
            a6.mul(eval_monomial(m, a6.identity()), a6.pow(s, total)));
    }
  }
}

TEST_CASE("free co-zero subgroup") {
  FreeGroup f4(4);
  auto W1 = family(f4, {"g0 x g1 x^-1", "x g0 x g1^-1 x^-1"});
  SubAlphabet h = free_cozero_subalphabet(W1);
  CHECK(h.members_up_to_rank() == std::vector<std::uint64_t>{2, 3});

  auto W2 = family(fw, {"x g0 x^-1 g1^-1"});
  SubAlphabet h2 = free_cozero_subalphabet(W2);
  CHECK(h2.contains(2));
  CHECK(!h2.contains(0));
  CHECK(subalphabet_prefix(h2, 3) == std::vector<std::uint64_t>{2, 3, 4});

  Rng rng(52);
  for (int i = 0; i < 100; ++i) {
    Word s = random_subalphabet_word(rng, h2, 4, 6);
    for (const auto& m : W2.monomials) CHECK(cozero_contains(m, s));
  }
  Word sample = mul(fw.gen(2), inv(fw.gen(3)));
  for (const auto& m : W2.monomials) CHECK(cozero_contains(m, sample));

  FreeGroup f1(1);
  CHECK_THROWS_AS(free_cozero_subalphabet(family(f1, {"g0 x x^-1"})), precondition_error);
  CHECK_THROWS_AS(free_cozero_subalphabet(family(f4, {"x g0 x^-1 g0^-1"})), precondition_error);
}

TEST_CASE("set powers") {
  auto p = set_power(f2, {Word{}, W("g0")}, 2);
  std::set<std::string> keys;
  for (const Word& w : p) keys.insert(f2.format_element(w));
  CHECK(keys == std::set<std::string>{"1", "g0", "g0^2"});

  auto p1 = set_power(f2, {W("g0"), W("g1")}, 1);
  CHECK(p1.size() == 2);

  CHECK_THROWS_AS(set_power(f2, {W("g0")}, 0), precondition_error);

  // symmetric input, symmetric output
  std::vector<Word> sym{Word{}, W("g0"), W("g0^-1"), W("g1"), W("g1^-1")};
  auto p3 = set_power(f2, sym, 3);
  std::set<std::string> k3;
  for (const Word& w : p3) k3.insert(f2.format_element(w));
  for (const Word& w : p3) CHECK(k3.contains(f2.format_element(inv(w))));
  CHECK(k3.contains("1"));
}

TEST_CASE("symmetric set, generic path") {
  std::vector<std::vector<Word>> sets{{W("g0")}, {W("g1")}};
  auto st = build_symmetric_set(f2, sets, 6, 20000);
  REQUIRE(st.points.size() == 6);
  CHECK(st.points[0].is_identity());
  CHECK(!st.fresh_path);
  std::set<std::string> distinct;
  for (const Word& x : st.points) CHECK(distinct.insert(f2.format_element(x)).second);
  CHECK(!verify_symmetric_set(f2, sets, st).has_value());

  // the coefficient set recurrence holds and stays symmetric
  REQUIRE(st.coeffs.has_value());
  std::vector<Word> expect = st.initial_coeffs;
  for (std::size_t k = 1; k < st.points.size(); ++k) {
    expect.push_back(f2.identity());
    expect.push_back(st.points[k - 1]);
    expect.push_back(inv(st.points[k - 1]));
    expect = set_power(f2, expect, st.degree);
  }
  std::set<std::string> got, want;
  for (const Word& w : *st.coeffs) got.insert(f2.format_element(w));
  for (const Word& w : expect) want.insert(f2.format_element(w));
  CHECK(got == want);
  for (const Word& w : *st.coeffs) CHECK(got.contains(f2.format_element(inv(w))));

  CHECK_THROWS_AS(build_symmetric_set(f2, {{W("g0")}, {W("g0^-1")}}, 4, 1000),
                  precondition_error);
}

TEST_CASE("symmetric set, fresh-generator path") {
  std::vector<std::vector<Word>> sets{{fw.parse_element("g0")},
                                      {fw.parse_element("g1"), fw.parse_element("g0 g1")},
                                      {fw.parse_element("g2")}};
  auto st = build_symmetric_set(fw, sets, 6, 1000);
  REQUIRE(st.points.size() == 6);
  CHECK(st.points[0].is_identity());
  CHECK(st.fresh_path);
  CHECK(!verify_symmetric_set(fw, sets, st).has_value());
  // later points are fresh generators, pairwise distinct
  std::set<std::string> distinct;
  for (const Word& x : st.points) CHECK(distinct.insert(fw.format_element(x)).second);
  for (std::size_t j = 1; j < st.points.size(); ++j) CHECK(st.points[j].weight() == 1);
}

TEST_CASE("symmetric family shape") {
  std::vector<std::vector<Word>> sets{{W("g0")}, {W("g1")}};
  auto st = build_symmetric_set(f2, sets, 4, 20000);
  auto X = st.symmetric_family();
  std::set<std::string> keys;
  for (const Word& x : X) keys.insert(f2.format_element(x));
  CHECK(keys.contains("1"));
  for (const Word& x : X) CHECK(keys.contains(f2.format_element(inv(x))));
}

TEST_CASE("fresh and enumeration paths cross-validate") {
  auto Wf = family(fw, {"x g0 x^-1 g1^-1", "g1 x g0 x^-1"});
  Word fresh = separation_witness(Wf, {}, 100, WitnessPath::automatic);
  Word scanned = separation_witness(Wf, {}, 100000, WitnessPath::enumeration);
  CHECK(fw.format_element(fresh) == "g2");
  CHECK(!scanned.is_identity());
  CHECK(intersection_member(Wf, fresh));
  CHECK(intersection_member(Wf, scanned));

  // on finite rank both spellings are the same scan
  auto W2 = family(f2, {"x g0 x^-1 g1^-1"});
  CHECK(separation_witness(W2, {}, 100) ==
        separation_witness(W2, {}, 100, WitnessPath::enumeration));
}
