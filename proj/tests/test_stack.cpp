#include <sstream>

#include "doctest.h"
#include "itenc/codec.hpp"
#include "itenc/enumerate.hpp"
#include "itenc/stack_machine.hpp"
#include "oracles.hpp"

using itenc::stackauto::accepts_E;
using itenc::stackauto::accepts_partition_lang;

TEST_CASE("stack machine discipline") {
  itenc::stackauto::StackMachine m;
  CHECK(m.cursor_at_root());
  CHECK_THROWS_AS(m.pop(), std::logic_error);
  CHECK_THROWS_AS(m.cursor_down(), std::logic_error);
  m.push(itenc::stackauto::Token::kOne);
  m.push(itenc::stackauto::Token::kOne);
  m.cursor_down();
  CHECK(m.depth() == 1);
  CHECK_THROWS_AS(m.push(itenc::stackauto::Token::kOne), std::logic_error);
  m.cursor_to_top();
  m.pop();
  CHECK(m.height() == 1);
  CHECK(m.pops() <= m.pushes());
}

TEST_CASE("accepts_E") {
  CHECK(accepts_E("mrtltff"));
  CHECK(accepts_E("mrlff"));
  CHECK(accepts_E("f"));
  CHECK_FALSE(accepts_E("ff"));
  CHECK_FALSE(accepts_E("tf"));
  CHECK_FALSE(accepts_E(""));
  CHECK_FALSE(accepts_E("mtf"));  // leaves a slot open
  CHECK(accepts_E("mrtff"));
  CHECK_THROWS_AS(accepts_E("mxf"), std::invalid_argument);
}

TEST_CASE("accepts_E agrees with validate on every short string") {
  for (std::size_t len = 0; len <= 7; ++len)
    oracle::for_each_string("lrmft", len, [&](const std::string& s) {
      REQUIRE_MESSAGE(accepts_E(s) == itenc::validate(itenc::Codeword(s)).legal, s);
    });
}

TEST_CASE("accepts_E trace") {
  std::ostringstream trace;
  accepts_E("mtf", &trace);
  CHECK(trace.str() == "m start depth=0 height=1\nt start depth=1 height=1\nf start depth=0 height=0\n");
}

TEST_CASE("partition language") {
  CHECK(accepts_partition_lang("abb"));
  CHECK_FALSE(accepts_partition_lang("aab"));
  CHECK(accepts_partition_lang("a"));
  CHECK(accepts_partition_lang("ab"));
  CHECK_FALSE(accepts_partition_lang("abba"));  // last block shorter than the one before
  CHECK_FALSE(accepts_partition_lang(""));
  CHECK_FALSE(accepts_partition_lang("b"));
  CHECK(accepts_partition_lang("abbaa"));
  CHECK(accepts_partition_lang("aabbbaaa"));
  CHECK_FALSE(accepts_partition_lang("aabbbaaab"));
  CHECK_THROWS_AS(accepts_partition_lang("abc"), std::invalid_argument);
}

TEST_CASE("partition language counts partitions") {
  CHECK(oracle::partitions(10) == 42);
  for (std::size_t n = 1; n <= 14; ++n) {
    std::uint64_t accepted = 0;
    oracle::for_each_string("ab", n, [&](const std::string& s) {
      if (accepts_partition_lang(s)) ++accepted;
    });
    CHECK_MESSAGE(accepted == oracle::partitions(n), n);
  }
}
