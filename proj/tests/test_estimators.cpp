#include <doctest.h>

#include <cmath>
#include <sstream>

#include "robomendel/estimators.hpp"
#include "robomendel/rng.hpp"

using namespace robomendel;

namespace {

OutcomeModel coin_model(double pa) {
    return OutcomeModel::discrete(
        DiscreteDistribution(OutcomeSpace({"a", "b"}), {pa, 1.0 - pa}));
}

std::vector<std::string> draws_from(Rng& rng, double pa, int n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(rng.bernoulli(pa) ? "a" : "b");
    return out;
}

}  // namespace

TEST_CASE("empirical log likelihood examples") {
    const auto model = coin_model(0.5);
    CHECK(empirical_log_likelihood(ObservationSample::of_labels({"a", "a", "a", "a"}), model) ==
          doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(empirical_log_likelihood(ObservationSample::of_labels({"a", "b"}), model) ==
          doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("empirical log likelihood LLN under the true model") {
    Rng rng(101);
    const int n = 1000;
    const auto sample = ObservationSample::of_labels(draws_from(rng, 0.9, n));
    const auto model = coin_model(0.9);
    const double le = empirical_log_likelihood(sample, model);
    const double h = -(0.9 * std::log2(0.9) + 0.1 * std::log2(0.1));
    // Standard error of the per-observation log-likelihood values.
    double mean = 0.0;
    std::vector<double> per;
    for (const auto& label : sample.labels()) {
        per.push_back(std::log2(label == "a" ? 0.9 : 0.1));
        mean += per.back();
    }
    mean /= n;
    double ss = 0.0;
    for (const double v : per) ss += (v - mean) * (v - mean);
    const double se = std::sqrt(ss / (n - 1.0)) / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(le - (-h)) < 3.0 * se + 1e-9);
}

TEST_CASE("zero likelihood names the observation") {
    const auto model = OutcomeModel::discrete(
        DiscreteDistribution(OutcomeSpace({"a", "b"}), {1.0, 0.0}));
    try {
        empirical_log_likelihood(ObservationSample::of_labels({"a", "b", "a"}), model);
        FAIL("expected ZeroLikelihoodError");
    } catch (const ZeroLikelihoodError& e) {
        CHECK(std::string(e.what()).find("observation 1") != std::string::npos);
        CHECK(std::string(e.what()).find("b") != std::string::npos);
    }
}

TEST_CASE("empirical entropy examples") {
    CHECK(empirical_entropy(ObservationSample::of_labels({"a", "a", "a", "a"})) == 0.0);
    CHECK(empirical_entropy(ObservationSample::of_labels({"a", "b", "a", "b"})) ==
          doctest::Approx(1.0).epsilon(1e-12));

    Rng rng(33);
    std::vector<double> xs;
    for (int i = 0; i < 10000; ++i) xs.push_back(rng.normal(0.0, 1.0));
    CHECK(empirical_entropy(ObservationSample::of_values(xs)) ==
          doctest::Approx(2.047).epsilon(0.025));
}

TEST_CASE("empirical entropy edge cases") {
    CHECK_THROWS_AS(empirical_entropy(ObservationSample::of_values({1.0, 1.0, 1.0})),
                    DegenerateSampleError);
    CHECK_THROWS_AS(empirical_entropy(ObservationSample::of_values({1.0})), InvalidArgumentError);
}

TEST_CASE("empirical entropy is shift invariant") {
    Rng rng(34);
    std::vector<double> xs, shifted;
    for (int i = 0; i < 500; ++i) {
        xs.push_back(rng.normal(2.0, 3.0));
        shifted.push_back(xs.back() + 1234.5);
    }
    CHECK(empirical_entropy(ObservationSample::of_values(xs)) ==
          doctest::Approx(empirical_entropy(ObservationSample::of_values(shifted))).epsilon(1e-9));
}

TEST_CASE("empirical information examples") {
    const auto model = coin_model(0.5);
    const auto sample = ObservationSample::of_labels({"a", "b", "a", "a"});
    CHECK(empirical_information(sample, model, model) == 0.0);

    // Exactly-90%-white sample scored with the fitted model vs the stale one.
    std::vector<std::string> flowers;
    for (int i = 0; i < 9; ++i) flowers.push_back("Wh");
    flowers.push_back("Pu");
    const auto fitted = OutcomeModel::discrete(
        DiscreteDistribution(OutcomeSpace({"Wh", "Pu"}), {0.9, 0.1}));
    const auto stale = OutcomeModel::discrete(
        DiscreteDistribution(OutcomeSpace({"Wh", "Pu"}), {0.001, 0.999}));
    const double expected = 0.9 * std::log2(0.9 / 0.001) + 0.1 * std::log2(0.1 / 0.999);
    CHECK(expected == doctest::Approx(8.5).epsilon(0.01));
    CHECK(empirical_information(ObservationSample::of_labels(flowers), fitted, stale) ==
          doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("potential information is near zero under the true model") {
    Rng rng(55);
    for (const int n : {100, 1000, 10000}) {
        const auto sample = ObservationSample::of_labels(draws_from(rng, 0.7, n));
        const auto est = potential_information(sample, coin_model(0.7));
        double ss = 0.0;
        for (const double v : est.per_observation) ss += (v - est.mean) * (v - est.mean);
        const double se = std::sqrt(ss / (n - 1.0)) / std::sqrt(static_cast<double>(n));
        CHECK(std::abs(est.mean) < 3.0 * se + 0.02);
        CHECK(est.lower_bound < est.mean);
        CHECK(est.lower_bound < 0.05);
    }
}

TEST_CASE("potential information converges to the relative entropy") {
    // Truth 0.7/0.3 scored under 0.4/0.6.
    const double d = 0.7 * std::log2(0.7 / 0.4) + 0.3 * std::log2(0.3 / 0.6);
    Rng rng(56);
    for (const int n : {100, 1000, 10000}) {
        const auto sample = ObservationSample::of_labels(draws_from(rng, 0.7, n));
        const auto est = potential_information(sample, coin_model(0.4));
        double ss = 0.0;
        for (const double v : est.per_observation) ss += (v - est.mean) * (v - est.mean);
        const double se = std::sqrt(ss / (n - 1.0)) / std::sqrt(static_cast<double>(n));
        // The plug-in entropy bias shrinks with n; allow it alongside 3 SE.
        CHECK(std::abs(est.mean - d) < 3.0 * se + 0.05);
    }
}

TEST_CASE("lower bound approaches the mean as n grows") {
    Rng rng(57);
    double prev_gap = 1e9;
    std::vector<double> scaled_gaps;
    for (const int n : {100, 1000, 10000}) {
        const auto sample = ObservationSample::of_labels(draws_from(rng, 0.7, n));
        const auto est = potential_information(sample, coin_model(0.4));
        const double gap = est.mean - est.lower_bound;
        CHECK(gap >= 0.0);
        CHECK(gap < prev_gap);
        prev_gap = gap;
        scaled_gaps.push_back(gap * std::sqrt(static_cast<double>(n)));
    }
    // gap ~ n^(-1/2): sqrt(n)-scaled gaps stay flat across two decades.
    CHECK(scaled_gaps[2] == doctest::Approx(scaled_gaps[0]).epsilon(0.25));
}

TEST_CASE("single gaussian outlier dominates the per-observation values") {
    Rng rng(58);
    std::vector<double> xs;
    for (int i = 0; i < 100; ++i) xs.push_back(rng.normal(0.0, 1.0));
    xs.push_back(10.0);  // ten standard deviations out
    const auto est = potential_information(ObservationSample::of_values(xs),
                                           OutcomeModel::gaussian(GaussianTraitModel(0.0, 1.0)));
    CHECK(est.per_observation.back() > 50.0);
    CHECK(est.lower_bound <= 0.0);
    CHECK(localize(est, 1).front() == 100);
}

TEST_CASE("per-observation values average to the mean") {
    Rng rng(59);
    const auto sample = ObservationSample::of_labels(draws_from(rng, 0.6, 1000));
    const auto est = potential_information(sample, coin_model(0.4));
    double avg = 0.0;
    for (const double v : est.per_observation) avg += v;
    avg /= static_cast<double>(est.per_observation.size());
    CHECK(avg == doctest::Approx(est.mean).epsilon(1e-9));
}

TEST_CASE("single observation yields no confident bound") {
    const auto est = potential_information(ObservationSample::of_labels({"a"}), coin_model(0.5));
    CHECK(std::isinf(est.lower_bound));
    CHECK(est.lower_bound < 0.0);
}

TEST_CASE("localize tie break and bounds") {
    IpEstimate est;
    est.per_observation = {1.0, 1.0, 1.0, 1.0};
    est.mean = 1.0;
    const auto top = localize(est, 3);
    CHECK(top == std::vector<std::size_t>{0, 1, 2});
    CHECK_THROWS_AS(localize(est, 5), InvalidArgumentError);

    est.per_observation = {0.1, 5.0, 0.2, 5.0};
    const auto ranked = localize(est, 2);
    CHECK(ranked == std::vector<std::size_t>{1, 3});
}

TEST_CASE("normal quantile reference values") {
    CHECK(normal_quantile(0.95) == doctest::Approx(1.6448536269514722).epsilon(1e-9));
    CHECK(normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-9));
    CHECK(normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("observation file loading") {
    std::istringstream labels("Pu\nWh\tplant-1\n\nPu\n");
    const auto s1 = ObservationSample::load(labels);
    CHECK(s1.is_discrete());
    CHECK(s1.size() == 3);
    CHECK(s1.labels()[1] == "Wh");
    CHECK(s1.tags()[1] == "plant-1");

    std::istringstream values("1.5\n-2.0\n3e-1\n");
    const auto s2 = ObservationSample::load(values);
    CHECK_FALSE(s2.is_discrete());
    CHECK(s2.values()[2] == doctest::Approx(0.3));

    std::istringstream empty("");
    CHECK(ObservationSample::load(empty).empty());
}

TEST_CASE("observation files round trip") {
    const auto original =
        ObservationSample::of_labels({"Pu", "Wh", "Pu"}, {"p0", "p1", "p2"});
    std::ostringstream out;
    original.save(out);
    std::istringstream in(out.str());
    const auto loaded = ObservationSample::load(in);
    CHECK(loaded.labels() == original.labels());
    CHECK(loaded.tags() == original.tags());

    const auto values = ObservationSample::of_values({1.25, -0.5, 3.0});
    std::ostringstream vout;
    values.save(vout);
    std::istringstream vin(vout.str());
    CHECK(ObservationSample::load(vin).values() == values.values());
}
