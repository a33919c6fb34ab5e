#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liaison/json_io.hpp"
#include "liaison/oracle.hpp"

using namespace liaison;

TEST_CASE("enumerate_admissible") {
  SearchWindow tiny{0, 2, 2, 3};
  auto chars = enumerate_admissible(tiny);
  auto contains = [&](const IntFn& f) {
    for (const auto& c : chars)
      if (c.fn() == f) return true;
    return false;
  };
  CHECK(contains(IntFn{{0, -1}, {1, 1}}));
  CHECK(contains(IntFn{{0, -1}, {1, -1}, {2, 2}}));
  CHECK(contains(IntFn{{0, -1}, {2, 1}}));
  // Count frozen on first run.
  CHECK(chars.size() == 4);

  CHECK(enumerate_admissible(SearchWindow{0, 0, 3, 3}).empty());

  auto wide = enumerate_admissible(SearchWindow{0, 3, 3, 3});
  bool has_skew = false;
  for (const auto& c : wide)
    if (c.fn() == IntFn{{0, -1}, {1, -1}, {2, 3}, {3, -1}}) has_skew = true;
  CHECK(has_skew);

  // Deterministic total order.
  for (std::size_t i = 1; i < chars.size(); ++i) CHECK(chars[i - 1] < chars[i]);
}

TEST_CASE("hilbert_oracle closed forms") {
  CHECK(hilbert_oracle(parse_oracle_config("disjoint-lines(2)"), 2) == 4);
  CHECK(hilbert_oracle(parse_oracle_config("line"), 1) == 2);
  CHECK(hilbert_oracle(parse_oracle_config("ci(2,2)"), 2) == 2);
  CHECK(hilbert_oracle(parse_oracle_config("four-lines-on-quadric"), 2) == 1);
  CHECK(hilbert_oracle(parse_oracle_config("four-lines-on-quadric"), 4) == 15);
  CHECK(hilbert_oracle(parse_oracle_config("seminatural(10,0)"), 5) == 5);
  CHECK(hilbert_oracle(parse_oracle_config("line"), -1) == 0);
  CHECK_THROWS_AS(parse_oracle_config("cube"), invalid_input);
  CHECK_THROWS_AS(parse_oracle_config("ci(2)"), invalid_input);

  // line = seminatural(1,0) = disjoint-lines(1).
  for (Deg l = -1; l <= 8; ++l) {
    long long a = hilbert_oracle(parse_oracle_config("line"), l);
    CHECK(a == hilbert_oracle(parse_oracle_config("seminatural(1,0)"), l));
    CHECK(a == hilbert_oracle(parse_oracle_config("disjoint-lines(1)"), l));
  }
}

TEST_CASE("gamma_from_oracle") {
  CHECK(gamma_from_oracle(parse_oracle_config("disjoint-lines(2)")).fn() ==
        IntFn{{0, -1}, {1, -1}, {2, 3}, {3, -1}});
  CHECK(gamma_from_oracle(parse_oracle_config("four-lines-on-quadric")).fn() ==
        IntFn{{0, -1}, {1, -1}, {4, 5}, {5, -3}});
  CHECK(gamma_from_oracle(parse_oracle_config("seminatural(10,0)")).fn() ==
        IntFn{{0, -1}, {1, -1}, {2, -1}, {3, -1}, {4, -1}, {5, 4}, {6, 7}, {7, -6}});
  CHECK(gamma_from_oracle(parse_oracle_config("ci(2,2)")).fn() ==
        IntFn{{0, -1}, {1, -1}, {2, 1}, {3, 1}});
}

TEST_CASE("claims are clean on a reduced window, serial equals parallel") {
  SearchWindow w{0, 4, 2, 2};
  for (const std::string& name : claim_names()) {
    ClaimReport par = check_claim(name, w, RunMode::parallel);
    ClaimReport ser = check_claim(name, w, RunMode::serial);
    INFO(name);
    CHECK(par.instances == ser.instances);
    CHECK(par.counterexamples == ser.counterexamples);
    CHECK(par.ok());
    CHECK(par.instances > 0);
  }
  CHECK_THROWS_AS(check_claim("nonsense", w), invalid_input);
}
