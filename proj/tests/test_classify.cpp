#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "classify.hpp"
#include "doctest.h"
#include "rng.hpp"
#include "simulate.hpp"
#include "test_util.hpp"

using namespace ppc;
using ppc_test::random_pattern;

namespace {

BayesClassifier two_constant_classes(double l1, double l2) {
  Window w = Window::unit_square();
  std::vector<IntensitySpec> specs;
  specs.emplace_back([l1](const Point&) { return l1; }, w, l1 > 0 ? l1 : 1.0);
  specs.emplace_back([l2](const Point&) { return l2; }, w, l2 > 0 ? l2 : 1.0);
  return BayesClassifier::from_intensities(specs, {0.5, 0.5});
}

}  // namespace

TEST_CASE("empty pattern scores are minus the integrated intensities") {
  auto clf = two_constant_classes(2.0, 1.0);
  PointPattern e(Window::unit_square(), {});
  CHECK(clf.score(e, 0) == doctest::Approx(std::log(0.5) - 2.0));
  CHECK(clf.score(e, 1) == doctest::Approx(std::log(0.5) - 1.0));
  CHECK(clf.classify(e) == 1);  // smallest integrated intensity wins
}

TEST_CASE("constant intensities give the count-threshold rule") {
  auto clf = two_constant_classes(2.0, 1.0);
  Window w = Window::unit_square();
  Rng rng(5150);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    auto x = random_pattern(w, rng.index(7), rng);
    double diff = clf.score(x, 0) - clf.score(x, 1);
    CHECK(diff == doctest::Approx(-1.0 + double(x.size()) * std::log(2.0)));
    CHECK(clf.classify(x) == (x.size() >= 2 ? 0 : 1));
    ++checked;
  }
  CHECK(checked == 200);
  CHECK(clf.classify(PointPattern(w, {Point(0.5, 0.5)})) == 1);
  CHECK(clf.classify(PointPattern(w, {Point(0.2, 0.2), Point(0.8, 0.8)})) == 0);
}

TEST_CASE("identical classes tie to class 0") {
  auto clf = two_constant_classes(3.0, 3.0);
  Window w = Window::unit_square();
  Rng rng(99);
  for (int t = 0; t < 50; ++t) {
    auto x = random_pattern(w, rng.index(6), rng);
    CHECK(clf.score(x, 0) == doctest::Approx(clf.score(x, 1)));
    CHECK(clf.classify(x) == 0);
  }
}

TEST_CASE("log-domain score equals the literal likelihood ratio") {
  Window w = Window::unit_square();
  std::vector<IntensitySpec> specs;
  specs.emplace_back([](const Point& p) { return 1e-3 + 1e3 * p[0] * p[1]; }, w, 1e3 + 1.0);
  specs.emplace_back([](const Point& p) { return 5.0 + 40.0 * p[0]; }, w, 45.0);
  auto clf = BayesClassifier::from_intensities(specs, {0.3, 0.7}, 128);

  auto literal_log_score = [&](const PointPattern& x, int cls) {
    long double prod = cls == 0 ? 0.3L : 0.7L;
    for (const Point& p : x.points()) prod *= (long double)(specs[cls].evaluate(p));
    return double(std::log(prod)) - integrated_intensity(specs[cls], 128);
  };
  Rng rng(2024);
  for (int t = 0; t < 100; ++t) {
    auto x = random_pattern(w, rng.index(51), rng);
    for (int cls = 0; cls < 2; ++cls) {
      double s = clf.score(x, cls), ref = literal_log_score(x, cls);
      CHECK(std::abs(s - ref) <= 1e-9 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("priors must be positive and are normalized") {
  Window w = Window::unit_square();
  std::vector<IntensitySpec> specs;
  specs.emplace_back([](const Point&) { return 1.0; }, w, 1.0);
  specs.emplace_back([](const Point&) { return 1.0; }, w, 1.0);
  CHECK_THROWS_AS(BayesClassifier::from_intensities(specs, {1.0, 0.0}), std::invalid_argument);
  auto clf = BayesClassifier::from_intensities(specs, {2.0, 6.0});
  CHECK(clf.prior(0) == doctest::Approx(0.25));
  CHECK(clf.prior(1) == doctest::Approx(0.75));
}

TEST_CASE("knn vote rules") {
  // hand-computed: votes 2:1 for class 0 among the 3 nearest
  CHECK(knn_vote({0.1, 0.2, 0.9}, {0, 0, 1}, 3, 2) == 0);
  // k=1 takes the single nearest
  CHECK(knn_vote({0.5, 0.01, 0.3}, {0, 1, 0}, 1, 2) == 1);
  // distance tie: lower training index enters the neighbor set first
  CHECK(knn_vote({0.2, 0.2, 0.9}, {1, 0, 0}, 1, 2) == 1);
  // label tie at k=2 goes to the smaller class
  CHECK(knn_vote({0.1, 0.2, 0.9}, {1, 0, 0}, 2, 2) == 0);
  CHECK_THROWS_AS(knn_vote({0.1}, {0}, 2, 1), std::invalid_argument);
}

TEST_CASE("knn classifier on patterns") {
  Window w = Window::unit_square();
  Rng rng(31);
  std::vector<LabeledPattern> train;
  for (int i = 0; i < 30; ++i) train.push_back({random_pattern(w, 3 + rng.index(3), rng), 0});
  for (int i = 0; i < 20; ++i) train.push_back({random_pattern(w, 40 + rng.index(5), rng), 1});

  for (auto kind : {D0Kind::Cardinality, D0Kind::Hellinger, D0Kind::KullbackLeibler}) {
    KnnClassifier one(train, 1, PatternMetric::combined(w, kind));
    // query equal to a training pattern recovers its label
    CHECK(one.classify(train[5].pattern) == 0);
    CHECK(one.classify(train[40].pattern) == 1);
  }
  KnnClassifier h1(train, 1, PatternMetric::hausdorff_only(w));
  CHECK(h1.classify(train[33].pattern) == 1);

  // k = n: majority class (30 vs 20) regardless of the query
  KnnClassifier all(train, int(train.size()), PatternMetric::hausdorff_only(w));
  CHECK(all.classify(random_pattern(w, 45, rng)) == 0);
  CHECK(all.classify(random_pattern(w, 2, rng)) == 0);
}

TEST_CASE("knn decisions are invariant to training permutation and window scale") {
  Window w = Window::unit_square();
  Rng rng(62);
  std::vector<LabeledPattern> train;
  for (int i = 0; i < 12; ++i) train.push_back({random_pattern(w, 2 + rng.index(8), rng), i % 3});
  std::vector<PointPattern> queries;
  for (int i = 0; i < 15; ++i) queries.push_back(random_pattern(w, 2 + rng.index(8), rng));

  std::vector<LabeledPattern> shuffled = train;
  std::shuffle(shuffled.begin(), shuffled.end(), rng.engine());

  // scaled copy: multiply every coordinate and the window by 10
  auto scale = [](const PointPattern& p) {
    std::vector<Point> pts;
    for (const Point& q : p.points()) pts.push_back(Point(q[0] * 10.0, q[1] * 10.0));
    return PointPattern(Window::square(0.0, 10.0), std::move(pts));
  };
  std::vector<LabeledPattern> scaled;
  for (const auto& t : train) scaled.push_back({scale(t.pattern), t.label});

  Window ws = Window::square(0.0, 10.0);
  for (auto kind : {D0Kind::Cardinality, D0Kind::Hellinger}) {
    KnnClassifier base(train, 3, PatternMetric::combined(w, kind));
    KnnClassifier perm(shuffled, 3, PatternMetric::combined(w, kind));
    KnnClassifier big(scaled, 3, PatternMetric::combined(ws, kind));
    for (const auto& q : queries) {
      int want = base.classify(q);
      CHECK(perm.classify(q) == want);
      CHECK(big.classify(scale(q)) == want);
    }
  }
}

TEST_CASE("knn classifier validation") {
  Window w = Window::unit_square();
  std::vector<LabeledPattern> train = {{PointPattern(w, {Point(0.1, 0.1)}), 0},
                                       {PointPattern(w, {Point(0.9, 0.9)}), 2}};
  auto m = PatternMetric::hausdorff_only(w);
  CHECK_THROWS_AS(KnnClassifier(train, 0, m), std::invalid_argument);
  CHECK_THROWS_AS(KnnClassifier(train, 3, m), std::invalid_argument);
  // class 1 has no training pattern
  CHECK_THROWS_AS(KnnClassifier(train, 1, m), std::invalid_argument);
}
