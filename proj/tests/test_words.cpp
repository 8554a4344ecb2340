#include "descent/word.hpp"

#include <random>

#include "catch_amalgamated.hpp"

using namespace descent;

namespace {

Word rand_word(std::mt19937& rng, int rank, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<int> raw;
  int n = len(rng);
  for (int k = 0; k < n; ++k) raw.push_back(gen(rng) * (sgn(rng) ? 1 : -1));
  return Word(rank, raw);
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(reduce({1, -1, 2}, 2) == Word::generator(2, 2));
  CHECK(reduce({}, 2).is_identity());
  CHECK(reduce({1, 2, -2, -1, 3}, 3) == Word::generator(3, 3));
  CHECK_THROWS_AS(reduce({4}, 3), std::invalid_argument);

  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    Word a = rand_word(rng, 3, 8), b = rand_word(rng, 3, 8);
    // reduction is idempotent and compatible with concatenation
    std::vector<int> cat = a.letters();
    cat.insert(cat.end(), b.letters().begin(), b.letters().end());
    CHECK(Word(3, cat) == multiply(a, b));
    CHECK(Word(3, a.letters()) == a);
  }
}

TEST_CASE("group operations") {
  Word x1 = Word::generator(2, 1), x2 = Word::generator(2, 2);
  CHECK(multiply(x1, invert(x1)).is_identity());
  CHECK(invert(multiply(x1, x2)) == multiply(invert(x2), invert(x1)));
  CHECK(cyclic_reduce(conjugate(x1, x2)) == x2);
  CHECK_THROWS_AS(multiply(x1, Word::generator(3, 1)), std::invalid_argument);
}

TEST_CASE("conjugacy decision with witness") {
  Word x1 = Word::generator(2, 1), x2 = Word::generator(2, 2);
  auto w = conjugate_test(conjugate(x1, x2), x2);
  REQUIRE(w.has_value());
  CHECK(conjugate(*w, x2) == conjugate(x1, x2));

  CHECK(!conjugate_test(x1, x2).has_value());

  auto rot = conjugate_test(multiply(x2, x1), multiply(x1, x2));
  REQUIRE(rot.has_value());
  CHECK(conjugate(*rot, multiply(x1, x2)) == multiply(x2, x1));
}

TEST_CASE("conjugacy agrees with brute-force conjugator search") {
  std::mt19937 rng(11);
  std::vector<Word> shorts;
  for (int raw1 : {0, 1, -1, 2, -2})
    for (int raw2 : {0, 1, -1, 2, -2}) {
      std::vector<int> v;
      if (raw1) v.push_back(raw1);
      if (raw2) v.push_back(raw2);
      shorts.push_back(Word(2, v));
    }
  for (int t = 0; t < 60; ++t) {
    Word a = rand_word(rng, 2, 4), b = rand_word(rng, 2, 4);
    bool brute = false;
    for (auto const& w : shorts) brute = brute || conjugate(w, b) == a;
    auto fast = conjugate_test(a, b);
    if (brute) CHECK(fast.has_value());
    if (fast) CHECK(conjugate(*fast, b) == a);
  }
}

TEST_CASE("map application and composition") {
  FreeMap id2 = FreeMap::identity(2);
  std::mt19937 rng(3);
  Word w = rand_word(rng, 2, 10);
  CHECK(apply_map(id2, w) == w);

  // f = conjugation by x1 x2
  FreeMap f;
  f.rank = 2;
  Word c = multiply(Word::generator(2, 1), Word::generator(2, 2));
  f.images = {conjugate(c, Word::generator(2, 1)), conjugate(c, Word::generator(2, 2))};
  FreeMap finv;
  finv.rank = 2;
  finv.images = {conjugate(invert(c), Word::generator(2, 1)),
                 conjugate(invert(c), Word::generator(2, 2))};
  CHECK(compose_maps(f, finv) == id2);
  for (int t = 0; t < 30; ++t) {
    Word u = rand_word(rng, 2, 8), v = rand_word(rng, 2, 8);
    CHECK(apply_map(f, multiply(u, v)) == multiply(apply_map(f, u), apply_map(f, v)));
  }
}

TEST_CASE("inner automorphism recognition") {
  auto conj_by = [](Word const& w) {
    FreeMap f;
    f.rank = w.rank();
    for (int i = 1; i <= w.rank(); ++i)
      f.images.push_back(conjugate(w, Word::generator(w.rank(), i)));
    return f;
  };

  Word x1 = Word::generator(2, 1);
  auto w1 = is_inner(conj_by(x1));
  REQUIRE(w1.has_value());
  CHECK(*w1 == x1);

  auto wid = is_inner(FreeMap::identity(3));
  REQUIRE(wid.has_value());
  CHECK(wid->is_identity());

  // Artin sigma_1 on F_2 is not inner
  FreeMap artin1;
  artin1.rank = 2;
  artin1.images = {conjugate(Word::generator(2, 1), Word::generator(2, 2)),
                   Word::generator(2, 1)};
  CHECK(!is_inner(artin1).has_value());

  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    Word w = rand_word(rng, 3, 6);
    auto rec = is_inner(conj_by(w));
    REQUIRE(rec.has_value());
    for (int i = 1; i <= 3; ++i)
      CHECK(conjugate(*rec, Word::generator(3, i)) == conjugate(w, Word::generator(3, i)));
  }

  FreeMap bad;
  bad.rank = 2;
  bad.images = {Word(2), Word::generator(2, 2)};
  CHECK_THROWS_AS(is_inner(bad), std::invalid_argument);
}
