#include <doctest.h>

#include "cmoment/demos.hpp"
#include "cmoment/error.hpp"
#include "support.hpp"

using namespace cmoment;
using namespace testing_support;

TEST_CASE("every scenario passes and carries an anchor") {
  for (const auto& name : demos::names()) {
    CAPTURE(name);
    const io::json out = demos::run(name);
    CHECK(out.at("demo") == name);
    CHECK_FALSE(out.at("anchor").get<std::string>().empty());
    CHECK(out.at("passed") == true);
    CHECK_FALSE(out.at("checks").empty());
    for (const auto& chk : out.at("checks")) CHECK(chk.at("passed") == true);
  }
}

TEST_CASE("scenarios are deterministic") {
  for (const auto& name : demos::names()) CHECK(demos::run(name).dump() == demos::run(name).dump());
}

TEST_CASE("scenario options are validated") {
  CHECK_THROWS_AS(demos::run("nope"), DomainError);
  CHECK_THROWS_AS(demos::run("snu2", {0.5, 0}), RangeError);
  CHECK_THROWS_AS(demos::run("snu2", {2.0, std::nullopt}), DomainError);
}

TEST_CASE("shifted pair shares moments but differs") {
  for (int nodes = 1; nodes <= 4; ++nodes) {
    const demos::ShiftedPair p = demos::shifted_gauss_pair(nodes);
    CHECK(p.shared_order == 2 * nodes - 1);
    CHECK_FALSE(approx_equal(p.mu1, p.mu2));
    for (int total = 0; total <= p.shared_order; ++total)
      for (int m = 0; m <= total; ++m) {
        const Complex a = moment_oracle(p.mu1, m, total - m), b = moment_oracle(p.mu2, m, total - m);
        CHECK(std::abs(a - b) <= 1e-10 * (1 + std::abs(a)));
      }
    const Complex a = moment_oracle(p.mu1, p.shared_order + 1, 0);
    const Complex b = moment_oracle(p.mu2, p.shared_order + 1, 0);
    CHECK(std::abs(a - b) > 1e-6);
  }
  CHECK_THROWS(demos::shifted_gauss_pair(0));
}
