#include "hardedge/experiments/energy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hardedge/core/errors.hpp"

namespace hardedge {

namespace {

constexpr Eigen::Index kBlock = 256;

void check_inputs(const SampleSet& a, const SampleSet& b) {
  if (a.rows() == 0 || b.rows() == 0) throw EmptySample("energy: empty sample");
  if (a.cols() != b.cols()) throw DomainError("energy: dimension mismatch");
}

SampleSet pool(const SampleSet& a, const SampleSet& b) {
  SampleSet z(a.rows() + b.rows(), a.cols());
  z << a, b;
  return z;
}

// Column 0 is the observed split, columns 1..n_perm the permuted ones; each
// column holds 1/na on the first group and -1/nb on the second, so the energy
// statistic of the split is -v^T D v.
Eigen::MatrixXd split_weights(Eigen::Index na, Eigen::Index nb, int n_perm, RandomSource& rng) {
  const Eigen::Index n = na + nb;
  const double wa = 1.0 / static_cast<double>(na);
  const double wb = -1.0 / static_cast<double>(nb);
  Eigen::MatrixXd v(n, n_perm + 1);
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  for (Eigen::Index i = 0; i < n; ++i) v(i, 0) = i < na ? wa : wb;
  for (int p = 1; p <= n_perm; ++p) {
    for (std::size_t i = idx.size() - 1; i > 0; --i) std::swap(idx[i], idx[rng.uniform_index(i + 1)]);
    for (Eigen::Index r = 0; r < n; ++r) v(idx[static_cast<std::size_t>(r)], p) = r < na ? wa : wb;
  }
  return v;
}

// D block between rows [i0, i0+bi) and [j0, j0+bj) of z.
void distance_block(const SampleSet& z, Eigen::Index i0, Eigen::Index bi, Eigen::Index j0,
                    Eigen::Index bj, Eigen::MatrixXd& out) {
  const Eigen::Index d = z.cols();
  out.setZero(bi, bj);
  for (Eigen::Index j = 0; j < bj; ++j) {
    double* col = out.col(j).data();
    for (Eigen::Index k = 0; k < d; ++k) {
      const double zj = z(j0 + j, k);
      const double* zi = z.col(k).data() + i0;
      for (Eigen::Index i = 0; i < bi; ++i) {
        const double diff = zi[i] - zj;
        col[i] += diff * diff;
      }
    }
    for (Eigen::Index i = 0; i < bi; ++i) col[i] = std::sqrt(col[i]);
  }
}

// q[p] = v_p^T D v_p for every column of v.
std::vector<double> quadratic_forms(const SampleSet& z, const Eigen::MatrixXd& v) {
  const Eigen::Index n = z.rows();
  const Eigen::Index cols = v.cols();
  const Eigen::Index nblocks = (n + kBlock - 1) / kBlock;
  std::vector<Eigen::VectorXd> partial(static_cast<std::size_t>(nblocks));

#pragma omp parallel for schedule(dynamic, 1)
  for (Eigen::Index bi = 0; bi < nblocks; ++bi) {
    const Eigen::Index i0 = bi * kBlock;
    const Eigen::Index ni = std::min(kBlock, n - i0);
    Eigen::MatrixXd dblk;
    Eigen::MatrixXd w;
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(cols);
    for (Eigen::Index bj = bi; bj < nblocks; ++bj) {
      const Eigen::Index j0 = bj * kBlock;
      const Eigen::Index nj = std::min(kBlock, n - j0);
      distance_block(z, i0, ni, j0, nj, dblk);
      w.noalias() = dblk * v.middleRows(j0, nj);
      const double factor = bj == bi ? 1.0 : 2.0;
      acc += factor * (v.middleRows(i0, ni).cwiseProduct(w)).colwise().sum().transpose();
    }
    partial[static_cast<std::size_t>(bi)] = std::move(acc);
  }

  Eigen::VectorXd total = Eigen::VectorXd::Zero(cols);
  for (const auto& p : partial) total += p;
  return std::vector<double>(total.data(), total.data() + cols);
}

// Same quantity for d = 1 from one sort: sum_{i,j} v_i v_j |z_i - z_j| =
// 2 sum_j v_j (z_j V_{<j} - Z_{<j}) in sorted order.
std::vector<double> quadratic_forms_1d(const SampleSet& z, const Eigen::MatrixXd& v) {
  const Eigen::Index n = z.rows();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return z(x, 0) < z(y, 0); });
  std::vector<double> q(static_cast<std::size_t>(v.cols()));
#pragma omp parallel for schedule(static)
  for (Eigen::Index p = 0; p < v.cols(); ++p) {
    double vs = 0.0, zs = 0.0, acc = 0.0;
    for (Eigen::Index r = 0; r < n; ++r) {
      const Eigen::Index j = order[static_cast<std::size_t>(r)];
      const double vj = v(j, p);
      const double zj = z(j, 0);
      acc += vj * (zj * vs - zs);
      vs += vj;
      zs += vj * zj;
    }
    q[static_cast<std::size_t>(p)] = 2.0 * acc;
  }
  return q;
}

PermutationTest finish(const std::vector<double>& q, int n_perm) {
  PermutationTest t;
  t.n_perm = n_perm;
  t.statistic = -q[0];
  const double tol = 1e-12 * std::abs(t.statistic);
  int ge = 0;
  for (int p = 1; p <= n_perm; ++p)
    if (-q[static_cast<std::size_t>(p)] >= t.statistic - tol) ++ge;
  t.pvalue = (1.0 + ge) / (1.0 + n_perm);
  return t;
}

}  // namespace

SampleSet to_sample_set(const std::vector<OrderedConfig>& configs) {
  if (configs.empty()) return SampleSet(0, 0);
  const auto d = static_cast<Eigen::Index>(configs.front().size());
  SampleSet s(static_cast<Eigen::Index>(configs.size()), d);
  for (std::size_t r = 0; r < configs.size(); ++r) {
    if (static_cast<Eigen::Index>(configs[r].size()) != d)
      throw DomainError("to_sample_set: configurations differ in length");
    for (Eigen::Index k = 0; k < d; ++k)
      s(static_cast<Eigen::Index>(r), k) = configs[r][static_cast<std::size_t>(k)];
  }
  return s;
}

SampleSet to_sample_set(const std::vector<double>& values) {
  SampleSet s(static_cast<Eigen::Index>(values.size()), 1);
  for (std::size_t r = 0; r < values.size(); ++r) s(static_cast<Eigen::Index>(r), 0) = values[r];
  return s;
}

double energy_distance(const SampleSet& a, const SampleSet& b) {
  check_inputs(a, b);
  const SampleSet z = pool(a, b);
  RandomSource unused(0, 0);
  const Eigen::MatrixXd v = split_weights(a.rows(), b.rows(), 0, unused);
  const std::vector<double> q = z.cols() == 1 ? quadratic_forms_1d(z, v) : quadratic_forms(z, v);
  return -q[0];
}

PermutationTest energy_permutation_test(const SampleSet& a, const SampleSet& b, int n_perm,
                                        RandomSource& rng) {
  check_inputs(a, b);
  if (n_perm < 200) throw ParameterError("energy_permutation_test: n_perm must be at least 200");
  const SampleSet z = pool(a, b);
  const Eigen::MatrixXd v = split_weights(a.rows(), b.rows(), n_perm, rng);
  const std::vector<double> q = z.cols() == 1 ? quadratic_forms_1d(z, v) : quadratic_forms(z, v);
  return finish(q, n_perm);
}

PermutationTest energy_permutation_test_serial(const SampleSet& a, const SampleSet& b,
                                               int n_perm, RandomSource& rng) {
  check_inputs(a, b);
  if (n_perm < 200) throw ParameterError("energy_permutation_test: n_perm must be at least 200");
  const SampleSet z = pool(a, b);
  const Eigen::Index n = z.rows();
  const Eigen::MatrixXd v = split_weights(a.rows(), b.rows(), n_perm, rng);
  Eigen::MatrixXd dist(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) dist(i, j) = (z.row(i) - z.row(j)).norm();
  std::vector<double> q(static_cast<std::size_t>(n_perm + 1));
  for (int p = 0; p <= n_perm; ++p) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) acc += v(i, p) * dist(i, j) * v(j, p);
    q[static_cast<std::size_t>(p)] = acc;
  }
  return finish(q, n_perm);
}

}  // namespace hardedge
