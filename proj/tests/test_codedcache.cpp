// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "tbench/codedcache.hpp"

using namespace tbench::codedcache;

TEST_CASE("caching gain") {
  CHECK(cc_gain({6, 0.0, 3, 1}) == 0.0);
  CHECK(cc_gain({6, 1.0, 3, 3}) == doctest::Approx(2.0)); // K=6, M/N=1/3
  CHECK(cc_gain({7, 5.0, 5, 1}) == doctest::Approx(7.0)); // full caching: t = K
  CHECK_THROWS_AS(cc_gain({6, 4.0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(cc_gain({0, 1.0, 3, 1}), std::invalid_argument);
}

TEST_CASE("delivery reduction factor") {
  CHECK(rate_reduction_factor({6, 0.0, 3, 1}) == 1.0);
  CHECK(rate_reduction_factor({6, 1.0, 3, 3}) == doctest::Approx(3.0));
  CHECK(rate_reduction_factor({4, 2.0, 2, 1}) == doctest::Approx(5.0)); // t=K
  CHECK(rate_reduction_factor({9, 1.0, 7, 1}) >= 1.0);
}

TEST_CASE("multi-antenna degrees of freedom are additive") {
  CHECK(multiantenna_dof({6, 0.0, 3, 1}) == doctest::Approx(1.0));
  CHECK(multiantenna_dof({6, 1.0, 3, 3}) == doctest::Approx(5.0)); // t=2, L=3
  CHECK(multiantenna_dof({6, 0.0, 3, 4}) == doctest::Approx(4.0));
}

TEST_CASE("subpacketization counts") {
  CHECK(subpacketization_mn({6, 0.0, 3, 1}) == 1);
  CHECK(subpacketization_mn({6, 1.0, 3, 1}) == 15);      // C(6,2)
  CHECK(subpacketization_mn({20, 10.0, 20, 1}) == 184756); // C(20,10)
  CHECK_THROWS_AS(subpacketization_mn({7, 1.0, 3, 1}), std::invalid_argument);
}

TEST_CASE("subpacketization symmetry in t and K-t") {
  for (std::uint64_t k : {8ULL, 12ULL, 20ULL}) {
    for (std::uint64_t t = 0; t <= k; ++t) {
      const CacheConfig a{k, static_cast<double>(t), k, 1};
      const CacheConfig b{k, static_cast<double>(k - t), k, 1};
      CHECK(subpacketization_mn(a) == subpacketization_mn(b));
    }
  }
}
