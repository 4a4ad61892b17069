#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "atomlat/entail.hpp"

using namespace atomlat;

namespace {
using Names = std::vector<std::string>;
TableRef tbl(Names n) { return ConstantTable::make(std::move(n)); }
}  // namespace

TEST_CASE("transitivity") {
  auto t = tbl({"a", "b", "c"});
  std::vector<Duple> r = {make_duple(*t, {"a"}, {"b"}),
                          make_duple(*t, {"b"}, {"c"})};
  CHECK(entails_oracle(*t, r, make_duple(*t, {"a"}, {"c"})));
}

TEST_CASE("inclusion base relation") {
  auto t = tbl({"a", "b", "c"});
  CHECK(entails_oracle(*t, {}, make_duple(*t, {"a"}, {"a", "b"})));
  CHECK_FALSE(entails_oracle(*t, {}, make_duple(*t, {"a"}, {"b"})));
}

TEST_CASE("join rule") {
  auto t = tbl({"a", "b", "c"});
  std::vector<Duple> r = {make_duple(*t, {"a"}, {"b"}),
                          make_duple(*t, {"c"}, {"b"})};
  CHECK(entails_oracle(*t, r, make_duple(*t, {"a", "c"}, {"b"})));
}

TEST_CASE("monotone composition") {
  auto t = tbl({"a", "b", "c", "d"});
  std::vector<Duple> r = {make_duple(*t, {"a"}, {"b"})};
  CHECK(entails_oracle(*t, r, make_duple(*t, {"a", "c"}, {"b", "c"})));
  CHECK(entails_oracle(*t, r, make_duple(*t, {"a"}, {"b", "d"})));
  CHECK_FALSE(entails_oracle(*t, r, make_duple(*t, {"a", "c"}, {"b", "d"})));
}

TEST_CASE("second trivial embedding does not force a below c") {
  auto t = tbl({"a", "b", "c", "d", "e"});
  std::vector<Duple> r = {
      make_duple(*t, {"d"}, {"a"}), make_duple(*t, {"d"}, {"c"}),
      make_duple(*t, {"e"}, {"b"}), make_duple(*t, {"e"}, {"c"})};
  CHECK_FALSE(entails_oracle(*t, r, make_duple(*t, {"a"}, {"c"})));
  CHECK(entails_oracle(*t, r, make_duple(*t, {"d"}, {"a", "c"})));
  CHECK(entails_oracle(*t, r, make_duple(*t, {"d", "e"}, {"a", "b"})));
}

TEST_CASE("fourth trivial embedding forces c below a b") {
  auto t = tbl({"a", "b", "c", "d", "e"});
  std::vector<Duple> r = {
      make_duple(*t, {"d"}, {"a"}), make_duple(*t, {"d"}, {"c"}),
      make_duple(*t, {"e"}, {"b"}), make_duple(*t, {"e"}, {"c"}),
      make_duple(*t, {"c"}, {"a", "b"})};
  CHECK(entails_oracle(*t, r, make_duple(*t, {"c"}, {"a", "b"})));
  CHECK(entails_oracle(*t, r, make_duple(*t, {"c", "d"}, {"a", "b"})));
  CHECK_FALSE(entails_oracle(*t, r, make_duple(*t, {"c"}, {"a"})));
}

TEST_CASE("negative duples report consistency with the freest reading") {
  auto t = tbl({"a", "b", "c"});
  std::vector<Duple> r = {make_duple(*t, {"a"}, {"b"})};
  CHECK(entails_oracle(*t, r, make_duple(*t, {"a"}, {"c"}, false)));
  CHECK_FALSE(entails_oracle(*t, r, make_duple(*t, {"a"}, {"b"}, false)));
}

TEST_CASE("size guard") {
  Names big;
  for (int i = 0; i < 13; ++i) big.push_back("c" + std::to_string(i));
  auto t = tbl(big);
  CHECK_THROWS_AS(
      entails_oracle(*t, {}, make_duple(*t, {"c0"}, {"c1"})),
      ResourceLimit);
}
