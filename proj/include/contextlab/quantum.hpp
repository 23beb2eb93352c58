#pragma once

#include <Eigen/Dense>

#include <random>
#include <string>
#include <vector>

#include "contextlab/ray.hpp"

namespace contextlab {

/// Pure state of n qudits with local dimension d. Index convention is
/// big-endian: party 0 owns the most significant digit, so
/// |i_0 i_1 ... i_{n-1}> sits at position sum_k i_k * d^(n-1-k).
struct StateVector {
    int d = 0;
    int n = 0;
    Eigen::VectorXcd amps;

    static StateVector make(int d, int n, Eigen::VectorXcd amps);
};

long long int_pow(int base, int exp);

/// Parity of a permutation of 0..len-1: +1 for even, -1 for odd.
int permutation_sign(const std::vector<int>& perm);

/// The totally antisymmetric state of d parties with d levels each:
/// amplitude sign/sqrt(d!) on every permutation basis state, 0 elsewhere.
/// Supported for 2 <= d <= 5.
StateVector supersinglet(int d);

bool is_unitary(const Eigen::MatrixXcd& u, double tol = 1e-10);

StateVector apply_local_unitary(const StateVector& s, const Eigen::MatrixXcd& u, int party);

/// || U^(x)d |S> - e^{i phi} |S> || with the phase read off the
/// largest-magnitude amplitude (ties: lowest index). Zero for any unitary
/// u, since the state absorbs det(u) as a global phase.
double check_unitary_invariance(int d, const Eigen::MatrixXcd& u);

/// Density matrix of party 0 after tracing out the others.
Eigen::MatrixXcd reduced_single_party(const StateVector& s);

/// Haar-ish special unitary: QR of a Gaussian matrix with the R-diagonal
/// phase fix, then det normalized to 1.
Eigen::MatrixXcd random_su(int d, std::mt19937_64& rng);

/// Projective measurement with d outcomes: one projector per basis member,
/// tagged by a label. Labels are global ray identifiers so that distinct
/// observables sharing an eigenvector can share the label; callers managing
/// several observables must assign labels from one registry (the default
/// here just stringifies each ray).
struct Observable {
    OrthoBasis<FloatScalar> basis;
    std::vector<std::string> outcome_labels;

    static Observable from_basis(const OrthoBasis<FloatScalar>& b);
    static Observable with_labels(OrthoBasis<FloatScalar> b, std::vector<std::string> labels);
    int index_of_label(const std::string& label) const;  // -1 if absent
};

/// One outcome label per party; empty string marks a party whose outcome
/// is unspecified (marginalized over).
struct JointOutcome {
    std::vector<std::string> labels;
};

/// Probability that every specified party observes its labeled outcome,
/// computed by applying the corresponding projectors analytically.
double joint_probability(const StateVector& s, const std::vector<Observable>& obs,
                         const JointOutcome& outcome);

/// Draws a full outcome tuple from the joint distribution;
/// seed-deterministic.
JointOutcome sample_joint(const StateVector& s, const std::vector<Observable>& obs,
                          uint64_t seed);

}  // namespace contextlab
