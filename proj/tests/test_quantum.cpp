#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>

#include "contextlab/quantum.hpp"
#include "contextlab/rng.hpp"

using namespace contextlab;

namespace {

// Digits of a basis index, party 0 first (big-endian).
std::vector<int> digits_of(long long idx, int d, int n) {
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = static_cast<int>(idx % d);
        idx /= d;
    }
    return out;
}

long long index_of(const std::vector<int>& digits, int d) {
    long long idx = 0;
    for (int x : digits) idx = idx * d + x;
    return idx;
}

Observable standard_observable(int d) {
    std::vector<FloatRay> members;
    std::vector<std::string> labels;
    for (int k = 0; k < d; ++k) {
        members.push_back(FloatRay::canonical(standard_basis_vector<FloatScalar>(d, k)));
        labels.push_back(std::to_string(k));
    }
    return Observable::with_labels(OrthoBasis<FloatScalar>::checked(d, members), labels);
}

}  // namespace

TEST_CASE("integer power and permutation parity") {
    CHECK(int_pow(3, 3) == 27);
    CHECK(int_pow(5, 0) == 1);
    CHECK(permutation_sign({0, 1, 2}) == 1);
    CHECK(permutation_sign({1, 0, 2}) == -1);
    CHECK(permutation_sign({1, 2, 0}) == 1);
    CHECK(permutation_sign({3, 2, 1, 0}) == 1);
}

TEST_CASE("two-party antisymmetric state is the singlet") {
    StateVector s = supersinglet(2);
    REQUIRE(s.amps.size() == 4);
    double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(s.amps[1] - std::complex<double>(r, 0)) < 1e-15);   // |01>
    CHECK(std::abs(s.amps[2] - std::complex<double>(-r, 0)) < 1e-15);  // |10>
    CHECK(std::abs(s.amps[0]) == 0.0);
    CHECK(std::abs(s.amps[3]) == 0.0);
}

TEST_CASE("antisymmetry is exact for d = 2, 3, 4") {
    for (int d : {2, 3, 4}) {
        StateVector s = supersinglet(d);
        REQUIRE(s.amps.size() == int_pow(d, d));
        double norm = s.amps.squaredNorm();
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-14));

        for (long long idx = 0; idx < s.amps.size(); ++idx) {
            std::vector<int> dig = digits_of(idx, d, d);
            bool repeated = false;
            std::vector<bool> seen(static_cast<std::size_t>(d), false);
            for (int x : dig) {
                if (seen[static_cast<std::size_t>(x)]) repeated = true;
                seen[static_cast<std::size_t>(x)] = true;
            }
            if (repeated) {
                CHECK(std::abs(s.amps[idx]) == 0.0);
                continue;
            }
            // Swapping any two parties flips the amplitude's sign exactly.
            for (int a = 0; a + 1 < d; ++a) {
                std::vector<int> sw = dig;
                std::swap(sw[static_cast<std::size_t>(a)], sw[static_cast<std::size_t>(a + 1)]);
                std::complex<double> here = s.amps[idx];
                std::complex<double> there = s.amps[index_of(sw, d)];
                CHECK(here == -there);
            }
        }
    }
}

TEST_CASE("invariance under collective unitaries") {
    std::mt19937_64 rng = make_rng(fork_seed(20250825, "invariance"));
    for (int d : {2, 3}) {
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
            Eigen::MatrixXcd u = random_su(d, rng);
            REQUIRE(is_unitary(u));
            worst = std::max(worst, check_unitary_invariance(d, u));
        }
        INFO("d = " << d);
        CHECK(worst < 1e-10);
    }

    // A non-special unitary works too: the determinant is a global phase.
    Eigen::MatrixXcd u = random_su(3, rng) * std::polar(1.0, 0.7);
    CHECK(check_unitary_invariance(3, u) < 1e-10);
}

TEST_CASE("single-party reduction is maximally mixed") {
    for (int d : {2, 3, 4}) {
        StateVector s = supersinglet(d);
        Eigen::MatrixXcd rho = reduced_single_party(s);
        Eigen::MatrixXcd target = Eigen::MatrixXcd::Identity(d, d) / double(d);
        CHECK((rho - target).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("local unitaries act on the right tensor slot") {
    StateVector s = supersinglet(2);
    Eigen::MatrixXcd z(2, 2);
    z << 1, 0, 0, -1;
    StateVector zs = apply_local_unitary(s, z, 0);
    // Z on party 0 leaves |01> alone and flips the sign of |10>.
    CHECK(std::abs(zs.amps[1] - s.amps[1]) < 1e-15);
    CHECK(std::abs(zs.amps[2] + s.amps[2]) < 1e-15);
    CHECK(std::abs(zs.amps.norm() - 1.0) < 1e-14);
    CHECK_THROWS_AS(apply_local_unitary(s, z, 2), error);
}

TEST_CASE("joint probabilities of the singlet in the standard basis") {
    StateVector s = supersinglet(2);
    std::vector<Observable> obs{standard_observable(2), standard_observable(2)};

    CHECK(joint_probability(s, obs, {{"0", "0"}}) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(joint_probability(s, obs, {{"1", "1"}}) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(joint_probability(s, obs, {{"0", "1"}}) == doctest::Approx(0.5));
    CHECK(joint_probability(s, obs, {{"1", "0"}}) == doctest::Approx(0.5));

    // Marginalizing one party: empty label means "any outcome".
    CHECK(joint_probability(s, obs, {{"0", ""}}) == doctest::Approx(0.5));
    CHECK(joint_probability(s, obs, {{"", "1"}}) == doctest::Approx(0.5));
    CHECK(joint_probability(s, obs, {{"", ""}}) == doctest::Approx(1.0));

    CHECK_THROWS_AS(joint_probability(s, obs, {{"0", "bogus"}}), error);
}

TEST_CASE("three parties never repeat an outcome") {
    StateVector s = supersinglet(3);
    std::vector<Observable> obs(3, standard_observable(3));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            double p = joint_probability(
                s, obs, {{std::to_string(a), std::to_string(b), ""}});
            if (a == b)
                CHECK(p < 1e-14);
            else
                CHECK(p == doctest::Approx(1.0 / 6.0));
        }
}

TEST_CASE("sampling is deterministic per seed and matches the distribution") {
    StateVector s = supersinglet(2);
    std::vector<Observable> obs{standard_observable(2), standard_observable(2)};

    JointOutcome a = sample_joint(s, obs, 123);
    JointOutcome b = sample_joint(s, obs, 123);
    CHECK(a.labels == b.labels);

    std::map<std::vector<std::string>, int> freq;
    for (int r = 0; r < 4000; ++r) freq[sample_joint(s, obs, fork_seed(9, r)).labels]++;
    CHECK(freq[{"0", "0"}] == 0);
    CHECK(freq[{"1", "1"}] == 0);
    CHECK(freq[{"0", "1"}] + freq[{"1", "0"}] == 4000);
    CHECK(freq[{"0", "1"}] > 1700);  // ~2000 expected; 7.5 sigma guard band
    CHECK(freq[{"1", "0"}] > 1700);
}

TEST_CASE("observable labels index both ways") {
    Observable o = standard_observable(3);
    CHECK(o.index_of_label("1") == 1);
    CHECK(o.index_of_label("nope") == -1);
    CHECK_THROWS_AS(supersinglet(1), error);
    CHECK_THROWS_AS(supersinglet(6), error);
}
