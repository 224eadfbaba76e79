#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "core.hpp"
#include "doctest.h"

using namespace ppc;

TEST_CASE("euclidean distance examples") {
  CHECK(euclidean(Point(0, 0), Point(0, 0)) == 0.0);
  CHECK(euclidean(Point(0, 0), Point(3, 4)) == 5.0);
  CHECK(euclidean(Point(1, 1), Point(-1, -1)) == doctest::Approx(2.0 * std::sqrt(2.0)));
  CHECK_THROWS_AS(euclidean(Point(0, 0), Point({1.0, 2.0, 3.0})), std::invalid_argument);
}

TEST_CASE("window validation and geometry") {
  Window w = Window::unit_square();
  CHECK(w.measure() == doctest::Approx(1.0));
  CHECK(w.diameter() == doctest::Approx(std::sqrt(2.0)));
  CHECK(w.contains(Point(0.5, 0.5)));
  CHECK(w.contains(Point(1.0, 1.0)));  // boundary inclusive
  CHECK_FALSE(w.contains(Point(1.1, 0.5)));

  Window box({-1.0, 2.0}, {3.0, 5.0});
  CHECK(box.measure() == doctest::Approx(12.0));
  CHECK(box.diameter() == doctest::Approx(5.0));

  CHECK_THROWS_AS(Window({0.0, 0.0}, {1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(Window({0.0}, {1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(Window({}, {}), std::invalid_argument);
}

TEST_CASE("point pattern containment and finiteness") {
  Window w = Window::unit_square();
  PointPattern ok(w, {Point(0.2, 0.3), Point(1.0, 0.0)});
  CHECK(ok.size() == 2);
  CHECK_FALSE(ok.empty());
  CHECK(PointPattern(w, {}).empty());

  CHECK_THROWS_AS(PointPattern(w, {Point(1.5, 0.5)}), std::invalid_argument);
  CHECK_THROWS_AS(PointPattern(w, {Point({0.5})}), std::invalid_argument);
  const double nan = std::nan("");
  CHECK_THROWS_AS(PointPattern(w, {Point(nan, 0.5)}), std::invalid_argument);
}

TEST_CASE("max_label") {
  Window w = Window::unit_square();
  std::vector<LabeledPattern> data;
  data.push_back({PointPattern(w, {}), 0});
  data.push_back({PointPattern(w, {}), 2});
  data.push_back({PointPattern(w, {}), 1});
  CHECK(max_label(data) == 2);
}
