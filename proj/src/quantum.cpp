#include "contextlab/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "contextlab/rng.hpp"

namespace contextlab {

namespace {

constexpr double kNormTol = 1e-12;

Eigen::VectorXcd ray_column(const FloatRay& r) {
    Eigen::VectorXcd v(r.dim());
    for (int k = 0; k < r.dim(); ++k) v(k) = r.vec()[k];
    v /= v.norm();
    return v;
}

// Applies u to one party's index, leaving the rest untouched.
Eigen::VectorXcd apply_on_party(const Eigen::VectorXcd& amps, const Eigen::MatrixXcd& u, int d,
                                int n, int party) {
    long long stride = int_pow(d, n - 1 - party);
    long long total = amps.size();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(total);
    for (long long base = 0; base < total; ++base) {
        long long digit = (base / stride) % d;
        if (digit != 0) continue;
        for (int r = 0; r < d; ++r) {
            std::complex<double> acc = 0;
            for (int c = 0; c < d; ++c) acc += u(r, c) * amps(base + c * stride);
            out(base + r * stride) = acc;
        }
    }
    return out;
}

Eigen::VectorXcd project_on_party(const Eigen::VectorXcd& amps, const Eigen::VectorXcd& v, int d,
                                  int n, int party) {
    long long stride = int_pow(d, n - 1 - party);
    long long total = amps.size();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(total);
    for (long long base = 0; base < total; ++base) {
        long long digit = (base / stride) % d;
        if (digit != 0) continue;
        std::complex<double> overlap = 0;
        for (int c = 0; c < d; ++c) overlap += std::conj(v(c)) * amps(base + c * stride);
        for (int r = 0; r < d; ++r) out(base + r * stride) = overlap * v(r);
    }
    return out;
}

}  // namespace

long long int_pow(int base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

StateVector StateVector::make(int d, int n, Eigen::VectorXcd amps) {
    if (d < 2 || n < 1) throw error("state needs d >= 2, n >= 1");
    if (amps.size() != int_pow(d, n)) throw error("amplitude count != d^n");
    if (std::abs(amps.squaredNorm() - 1.0) > kNormTol) throw error("state not unit norm");
    StateVector s;
    s.d = d;
    s.n = n;
    s.amps = std::move(amps);
    return s;
}

int permutation_sign(const std::vector<int>& perm) {
    int len = static_cast<int>(perm.size());
    std::vector<bool> seen(static_cast<size_t>(len), false);
    for (int v : perm) {
        if (v < 0 || v >= len || seen[static_cast<size_t>(v)]) throw error("not a permutation");
        seen[static_cast<size_t>(v)] = true;
    }
    int inversions = 0;
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j)
            if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

StateVector supersinglet(int d) {
    if (d < 2 || d > 5) throw error("supersinglet supports d in 2..5");
    long long total = int_pow(d, d);
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(total);
    std::vector<int> perm(static_cast<size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    double fact = 1;
    for (int k = 2; k <= d; ++k) fact *= k;
    double scale = 1.0 / std::sqrt(fact);
    do {
        long long idx = 0;
        for (int k = 0; k < d; ++k) idx = idx * d + perm[static_cast<size_t>(k)];
        amps(idx) = permutation_sign(perm) * scale;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return StateVector::make(d, d, std::move(amps));
}

bool is_unitary(const Eigen::MatrixXcd& u, double tol) {
    if (u.rows() != u.cols() || u.rows() == 0) return false;
    Eigen::MatrixXcd delta =
        u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    return delta.cwiseAbs().maxCoeff() < tol;
}

StateVector apply_local_unitary(const StateVector& s, const Eigen::MatrixXcd& u, int party) {
    if (party < 0 || party >= s.n) throw error("party out of range");
    if (u.rows() != s.d || u.cols() != s.d) throw error("unitary size != d");
    if (!is_unitary(u)) throw error("matrix not unitary");
    StateVector out = s;
    out.amps = apply_on_party(s.amps, u, s.d, s.n, party);
    return out;
}

double check_unitary_invariance(int d, const Eigen::MatrixXcd& u) {
    if (!is_unitary(u)) throw error("matrix not unitary");
    StateVector s = supersinglet(d);
    Eigen::VectorXcd rotated = s.amps;
    for (int party = 0; party < d; ++party) rotated = apply_on_party(rotated, u, d, d, party);

    int best = 0;
    for (int i = 1; i < rotated.size(); ++i)
        if (std::abs(rotated(i)) > std::abs(rotated(best))) best = i;
    std::complex<double> phase(1.0, 0.0);
    if (std::abs(s.amps(best)) > 1e-15 && std::abs(rotated(best)) > 1e-15) {
        phase = rotated(best) / s.amps(best);
        phase /= std::abs(phase);
    }
    return (rotated - phase * s.amps).norm();
}

Eigen::MatrixXcd reduced_single_party(const StateVector& s) {
    long long rest = int_pow(s.d, s.n - 1);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(s.d, s.d);
    for (int i = 0; i < s.d; ++i)
        for (int j = 0; j < s.d; ++j) {
            std::complex<double> acc = 0;
            for (long long r = 0; r < rest; ++r)
                acc += s.amps(i * rest + r) * std::conj(s.amps(j * rest + r));
            rho(i, j) = acc;
        }
    return rho;
}

Eigen::MatrixXcd random_su(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> nd(0.0, 1.0);
    Eigen::MatrixXcd z(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) z(i, j) = std::complex<double>(nd(rng), nd(rng));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < d; ++i) {
        std::complex<double> diag = r(i, i);
        std::complex<double> lambda = std::abs(diag) > 1e-15 ? diag / std::abs(diag)
                                                             : std::complex<double>(1, 0);
        q.col(i) *= lambda;
    }
    std::complex<double> det = q.determinant();
    double arg = std::arg(det);
    std::complex<double> root = std::polar(1.0, arg / d);
    return q / root;
}

Observable Observable::from_basis(const OrthoBasis<FloatScalar>& b) {
    std::vector<std::string> labels;
    labels.reserve(b.members.size());
    for (const FloatRay& r : b.members) labels.push_back(to_string(r));
    return with_labels(b, std::move(labels));
}

Observable Observable::with_labels(OrthoBasis<FloatScalar> b, std::vector<std::string> labels) {
    if (labels.size() != b.members.size()) throw error("label count != basis size");
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] == labels[j]) throw error("duplicate outcome label: " + labels[i]);
    Observable o;
    o.basis = std::move(b);
    o.outcome_labels = std::move(labels);
    return o;
}

int Observable::index_of_label(const std::string& label) const {
    for (size_t i = 0; i < outcome_labels.size(); ++i)
        if (outcome_labels[i] == label) return static_cast<int>(i);
    return -1;
}

double joint_probability(const StateVector& s, const std::vector<Observable>& obs,
                         const JointOutcome& outcome) {
    if (static_cast<int>(obs.size()) != s.n) throw error("need one observable per party");
    if (static_cast<int>(outcome.labels.size()) != s.n) throw error("need one label per party");
    Eigen::VectorXcd cur = s.amps;
    for (int party = 0; party < s.n; ++party) {
        const Observable& o = obs[static_cast<size_t>(party)];
        if (o.basis.dim != s.d) throw error("observable dimension mismatch");
        const std::string& label = outcome.labels[static_cast<size_t>(party)];
        if (label.empty()) continue;  // marginalized party
        int idx = o.index_of_label(label);
        if (idx < 0) throw error("label not in observable: " + label);
        cur = project_on_party(cur, ray_column(o.basis.members[static_cast<size_t>(idx)]), s.d,
                               s.n, party);
    }
    return cur.squaredNorm();
}

JointOutcome sample_joint(const StateVector& s, const std::vector<Observable>& obs,
                          uint64_t seed) {
    if (static_cast<int>(obs.size()) != s.n) throw error("need one observable per party");
    Eigen::VectorXcd cur = s.amps;
    for (int party = 0; party < s.n; ++party) {
        const Observable& o = obs[static_cast<size_t>(party)];
        if (o.basis.dim != s.d) throw error("observable dimension mismatch");
        Eigen::MatrixXcd u(s.d, s.d);
        for (int c = 0; c < s.d; ++c) u.col(c) = ray_column(o.basis.members[static_cast<size_t>(c)]);
        // Columns are the measured basis, so amplitudes in that basis come
        // from u^dagger.
        cur = apply_on_party(cur, u.adjoint(), s.d, s.n, party);
    }
    Eigen::VectorXd probs = cur.cwiseAbs2();
    double total = probs.sum();
    std::mt19937_64 rng = make_rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double r = unif(rng) * total;
    long long pick = probs.size() - 1;
    double acc = 0;
    for (long long i = 0; i < probs.size(); ++i) {
        acc += probs(i);
        if (r <= acc) {
            pick = i;
            break;
        }
    }
    JointOutcome out;
    out.labels.resize(static_cast<size_t>(s.n));
    for (int party = s.n - 1; party >= 0; --party) {
        int digit = static_cast<int>(pick % s.d);
        pick /= s.d;
        out.labels[static_cast<size_t>(party)] =
            obs[static_cast<size_t>(party)].outcome_labels[static_cast<size_t>(digit)];
    }
    return out;
}

}  // namespace contextlab
