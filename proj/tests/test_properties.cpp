#include <doctest.h>

#include <sstream>

#include "ffkakeya/properties.hpp"

using namespace ffkakeya;

TEST_CASE("hasse derivative matches the shift expansion") { CHECK(check_hasse_oracle(40, 1).pass); }

TEST_CASE("multiplicity lemmas") { CHECK(check_multiplicity_lemmas(40, 2).pass); }

TEST_CASE("vandermonde identity") { CHECK(check_vandermonde(3, 6, 6).pass); }

TEST_CASE("existence under the counting inequality") { CHECK(check_existence(25, 3).pass); }

TEST_CASE("schwartz-zippel with multiplicities") { CHECK(check_schwartz_zippel(40, 4).pass); }

TEST_CASE("field laws") { CHECK(check_field_laws(5).pass); }

TEST_CASE("lex laws") { CHECK(check_lex_laws(100, 6).pass); }

TEST_CASE("set laws") { CHECK(check_set_laws(20, 7).pass); }

TEST_CASE("partition laws") { CHECK(check_partition_laws(50, 8).pass); }

TEST_CASE("property certificates do not depend on the job count") {
  CHECK(check_existence(12, 9, 1).dump() == check_existence(12, 9, 3).dump());
  CHECK(check_hasse_oracle(10, 9, 1).dump() == check_hasse_oracle(10, 9, 4).dump());
}
