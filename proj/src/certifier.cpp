#include "eqlift/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "eqlift/error.hpp"

namespace eqlift {
namespace {

std::vector<long> prime_factors(long v) {
  std::vector<long> out;
  for (long p = 2; p * p <= v; ++p)
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  if (v > 1) out.push_back(v);
  return out;
}

// Prime-factor mask over the primes occurring in the candidate set.
using Mask = std::vector<std::uint64_t>;

bool disjoint(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return false;
  return true;
}

void merge_into(Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
}

class CoprimeSearch {
 public:
  CoprimeSearch(std::vector<long> values, std::vector<Mask> masks)
      : values_(std::move(values)), masks_(std::move(masks)) {}

  std::vector<long> solve() {
    if (values_.empty()) return {};
    Mask used(masks_.front().size(), 0);
    std::vector<int> current;
    descend(0, used, current);
    std::vector<long> out;
    for (int i : best_) out.push_back(values_[i]);
    return out;
  }

 private:
  // Include-first DFS over ascending values visits equal-size subsets in
  // lexicographic order; only strict improvements replace the incumbent, so
  // the result is the lexicographically smallest maximum.
  void descend(std::size_t i, const Mask& used, std::vector<int>& current) {
    if (current.size() > best_.size()) best_ = current;
    if (i == values_.size()) return;
    std::size_t compatible = 0;
    for (std::size_t j = i; j < values_.size(); ++j) compatible += disjoint(used, masks_[j]);
    if (current.size() + compatible <= best_.size()) return;
    for (std::size_t j = i; j < values_.size(); ++j) {
      if (!disjoint(used, masks_[j])) continue;
      Mask next = used;
      merge_into(next, masks_[j]);
      current.push_back(static_cast<int>(j));
      descend(j + 1, next, current);
      current.pop_back();
      // Bound again: the incumbent may have grown inside the subtree.
      std::size_t rest = 0;
      for (std::size_t k = j + 1; k < values_.size(); ++k) rest += disjoint(used, masks_[k]);
      if (current.size() + rest <= best_.size()) return;
    }
  }

  std::vector<long> values_;
  std::vector<Mask> masks_;
  std::vector<int> best_;
};

long lcm_capped(std::span<const long> values, long cap) {
  long acc = 1;
  for (long v : values) {
    acc = std::lcm(acc, v);
    if (acc >= cap) return cap;
  }
  return acc;
}

void require_pairwise_coprime(std::span<const long> lengths) {
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] < 2)
      throw Error(ErrorKind::domain, "orbit length " + std::to_string(lengths[i]) + " is not > 1");
    for (std::size_t j = i + 1; j < lengths.size(); ++j)
      if (std::gcd(lengths[i], lengths[j]) != 1)
        throw Error(ErrorKind::domain, "lengths " + std::to_string(lengths[i]) + " and " +
                                           std::to_string(lengths[j]) + " are not coprime");
  }
}

std::complex<double> root_of_unity(long k, long w) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(w));
}

}  // namespace

OrbitProfile max_coprime_subset(std::span<const long> lengths) {
  OrbitProfile profile;
  profile.lengths.assign(lengths.begin(), lengths.end());
  std::vector<long> values(lengths.begin(), lengths.end());
  for (long v : values)
    if (v <= 1) throw Error(ErrorKind::domain, "orbit length " + std::to_string(v) + " is not > 1");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<std::vector<long>> factors;
  std::vector<long> primes;
  for (long v : values) {
    factors.push_back(prime_factors(v));
    primes.insert(primes.end(), factors.back().begin(), factors.back().end());
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  const std::size_t words = (primes.size() + 63) / 64;
  std::vector<Mask> masks;
  for (const auto& f : factors) {
    Mask m(std::max<std::size_t>(words, 1), 0);
    for (long p : f) {
      const auto idx = static_cast<std::size_t>(std::lower_bound(primes.begin(), primes.end(), p) - primes.begin());
      m[idx / 64] |= std::uint64_t{1} << (idx % 64);
    }
    masks.push_back(std::move(m));
  }
  profile.chosen = CoprimeSearch(values, masks).solve();
  profile.l = static_cast<int>(profile.chosen.size());
  profile.bound = 2 * profile.l;
  return profile;
}

OrbitProfile coprime_profile_of_orbits(std::span<const long> orbit_lengths) {
  std::vector<long> nontrivial;
  for (long v : orbit_lengths)
    if (v > 1) nontrivial.push_back(v);
  auto profile = max_coprime_subset(nontrivial);
  profile.lengths.assign(orbit_lengths.begin(), orbit_lengths.end());
  return profile;
}

Eigen::Matrix2d rotation(double angle) {
  Eigen::Matrix2d r;
  r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return r;
}

OrthogonalOperator OrthogonalOperator::from_dense(Eigen::MatrixXd a) {
  OrthogonalOperator op;
  op.dense = std::move(a);
  return op;
}

OrthogonalOperator OrthogonalOperator::from_blocks(std::vector<RotationBlock> blocks, int identity_tail) {
  for (auto& b : blocks) {
    if (b.den <= 0) throw Error(ErrorKind::domain, "rotation angle denominator must be positive");
    const long g = std::gcd(b.num, b.den);
    b.num /= g;
    b.den /= g;
    b.num = ((b.num % b.den) + b.den) % b.den;
  }
  const int m = 2 * static_cast<int>(blocks.size()) + identity_tail;
  OrthogonalOperator op;
  op.dense = Eigen::MatrixXd::Identity(m, m);
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(blocks[j].num) /
                         static_cast<double>(blocks[j].den);
    op.dense.block<2, 2>(2 * static_cast<long>(j), 2 * static_cast<long>(j)) = rotation(angle);
  }
  op.blocks = std::move(blocks);
  op.identity_tail = identity_tail;
  return op;
}

void require_orthogonal(const Eigen::MatrixXd& a, double tol) {
  if (a.rows() != a.cols() || a.rows() == 0) throw Error(ErrorKind::matrix_domain, "matrix is not square");
  const double err = (a.transpose() * a - Eigen::MatrixXd::Identity(a.rows(), a.cols())).cwiseAbs().maxCoeff();
  if (err > tol)
    throw Error(ErrorKind::matrix_domain, "matrix is not orthogonal (max |A^T A - I| = " + std::to_string(err) + ")");
}

std::optional<long> matrix_orbit_length(const Eigen::MatrixXd& a, const Eigen::VectorXd& x, long cap,
                                        double tol) {
  require_orthogonal(a, tol);
  if (x.size() != a.rows()) throw Error(ErrorKind::matrix_domain, "vector size does not match matrix");
  if (x.norm() == 0.0) throw Error(ErrorKind::domain, "orbit length of the zero vector");
  const double scale = std::max(1.0, x.norm());
  Eigen::VectorXd y = x;
  for (long k = 1; k <= cap; ++k) {
    y = a * y;
    if ((y - x).norm() <= tol * scale) return k;
  }
  return std::nullopt;
}

OrbitAverage orbit_average(const Eigen::MatrixXd& a, const Eigen::VectorXd& x, long w, double tol) {
  if (w < 1) throw Error(ErrorKind::orbit_length, "orbit length must be >= 1");
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(x.size());
  Eigen::VectorXd y = x;
  for (long k = 0; k < w; ++k) {
    sum += y;
    y = a * y;
  }
  if ((y - x).norm() > tol * std::max(1.0, x.norm()))
    throw Error(ErrorKind::orbit_length, "A^" + std::to_string(w) + " x != x");
  OrbitAverage out;
  out.mean = sum / static_cast<double>(w);
  out.deviation = x - out.mean;
  return out;
}

Eigen::VectorXd geometric_sum_apply(const Eigen::MatrixXd& a, const Eigen::VectorXd& v, long w) {
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(v.size());
  Eigen::VectorXd y = v;
  for (long k = 0; k < w; ++k) {
    sum += y;
    y = a * y;
  }
  return sum;
}

double geometric_sum_det(const Eigen::MatrixXd& a, long w) {
  if (w < 1) throw Error(ErrorKind::domain, "w must be >= 1");
  const auto n = a.rows();
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
  for (long k = 0; k < w; ++k) {
    sum += power;
    power = power * a;
  }
  return sum.partialPivLu().determinant();
}

bool geometric_sum_vanishes(std::span<const RotationBlock> blocks, long w) {
  for (const auto& b : blocks) {
    const long den = b.den / std::gcd(b.num, b.den);
    if (den > 1 && w % den == 0) return true;
  }
  return false;
}

std::vector<std::complex<double>> schur_eigenvalues(const Eigen::MatrixXd& a) {
  Eigen::RealSchur<Eigen::MatrixXd> schur(a, /*computeU=*/false);
  const Eigen::MatrixXd& t = schur.matrixT();
  std::vector<std::complex<double>> out;
  const long n = t.rows();
  for (long i = 0; i < n;) {
    if (i + 1 < n && t(i + 1, i) != 0.0) {
      const double p = 0.5 * (t(i, i) - t(i + 1, i + 1));
      const double mean = 0.5 * (t(i, i) + t(i + 1, i + 1));
      const std::complex<double> disc = std::sqrt(std::complex<double>(p * p + t(i, i + 1) * t(i + 1, i)));
      out.push_back(mean + disc);
      out.push_back(mean - disc);
      i += 2;
    } else {
      out.emplace_back(t(i, i), 0.0);
      ++i;
    }
  }
  return out;
}

std::optional<long> eigen_match(const Eigen::MatrixXd& a, long w, double tol) {
  if (w < 2) return std::nullopt;
  const auto eig = schur_eigenvalues(a);
  for (long k = 1; k < w; ++k) {
    const auto root = root_of_unity(k, w);
    for (const auto& lambda : eig)
      if (std::abs(lambda - root) <= tol) return k;
  }
  return std::nullopt;
}

std::optional<long> eigen_match(std::span<const RotationBlock> blocks, long w) {
  if (w < 2) return std::nullopt;
  for (long k = 1; k < w; ++k)
    for (const auto& b : blocks) {
      // k/w == +-num/den (mod 1)  <=>  k*den -+ num*w == 0 (mod w*den)
      const long modulus = w * b.den;
      const long plus = ((k * b.den - b.num * w) % modulus + modulus) % modulus;
      const long minus = ((k * b.den + b.num * w) % modulus + modulus) % modulus;
      if (plus == 0 || minus == 0) return k;
    }
  return std::nullopt;
}

DimensionAudit audit_claimed_dimension(std::span<const CertificateRecord> records, int claimed_dim) {
  DimensionAudit audit;
  audit.claimed_dim = claimed_dim;
  for (const auto& r : records) {
    // e^(2 pi i k / w) is real only for 2k == w, i.e. the eigenvalue -1; any
    // other root arrives with its conjugate since A is real.
    if (2 * r.k == r.w)
      ++audit.real_minus_one;
    else
      ++audit.conjugate_pairs;
  }
  audit.forced_eigenvalues = 2 * audit.conjugate_pairs + audit.real_minus_one;
  audit.product_sign = (audit.real_minus_one % 2 == 0) ? 1 : -1;
  if (claimed_dim < audit.forced_eigenvalues) {
    audit.verdict = Verdict::contradiction;
    audit.reason = "counting: " + std::to_string(audit.forced_eigenvalues) +
                   " forced eigenvalues exceed dimension " + std::to_string(claimed_dim);
  } else if (claimed_dim == audit.forced_eigenvalues && audit.product_sign < 0) {
    audit.verdict = Verdict::contradiction;
    audit.reason = "determinant: the spectrum is exactly " + std::to_string(audit.conjugate_pairs) +
                   " conjugate pairs and " + std::to_string(audit.real_minus_one) +
                   " eigenvalue -1, whose product is negative, but det A = +1";
  } else {
    audit.verdict = Verdict::consistent;
    audit.reason = "dimension " + std::to_string(claimed_dim) + " accommodates the forced spectrum";
  }
  return audit;
}

SpectralCertificate certify(const OrthogonalOperator& op, std::span<const Witness> witnesses, double tol,
                            std::optional<int> claimed_dim, long orbit_cap) {
  const Eigen::MatrixXd& a = op.dense;
  require_orthogonal(a, tol);
  const double det = a.determinant();
  if (std::abs(det + 1.0) <= tol)
    throw Error(ErrorKind::not_special_orthogonal, "det A = -1");
  if (std::abs(det - 1.0) > tol)
    throw Error(ErrorKind::matrix_domain, "det A = " + std::to_string(det) + " is not +-1");

  std::vector<long> lengths;
  for (const auto& wit : witnesses) lengths.push_back(wit.length);
  require_pairwise_coprime(lengths);
  const long cap = lcm_capped(lengths, orbit_cap);

  SpectralCertificate cert;
  cert.m = op.dim();
  cert.tol = tol;
  for (const auto& wit : witnesses) {
    if (wit.point.size() != a.rows())
      throw Error(ErrorKind::witness, "witness point has the wrong dimension");
    const auto found = matrix_orbit_length(a, wit.point, cap, tol);
    if (!found || *found != wit.length)
      throw Error(ErrorKind::witness, "claimed orbit length " + std::to_string(wit.length) + ", found " +
                                          (found ? std::to_string(*found) : std::string("none")));
    CertificateRecord rec;
    rec.w = wit.length;
    if (op.blocks) {
      rec.det_residual = geometric_sum_vanishes(*op.blocks, rec.w) ? 0.0 : std::abs(geometric_sum_det(a, rec.w));
      const auto k = eigen_match(*op.blocks, rec.w);
      rec.k = k.value_or(0);
    } else {
      rec.det_residual = std::abs(geometric_sum_det(a, rec.w));
      rec.k = eigen_match(a, rec.w, tol).value_or(0);
    }
    if (rec.k == 0)
      throw Error(ErrorKind::inconsistency, "no eigenvalue e^(2 pi i k/" + std::to_string(rec.w) +
                                                ") found for a verified orbit");
    rec.root = root_of_unity(rec.k, rec.w);
    cert.records.push_back(rec);
  }
  cert.s = static_cast<int>(cert.records.size());
  for (std::size_t i = 0; i < cert.records.size(); ++i)
    for (std::size_t j = i + 1; j < cert.records.size(); ++j)
      if (cert.records[i].k * cert.records[j].w == cert.records[j].k * cert.records[i].w)
        cert.roots_distinct = false;

  bool residuals_ok = true;
  for (const auto& r : cert.records) residuals_ok = residuals_ok && r.det_residual <= tol;

  if (!residuals_ok) {
    cert.verdict = Verdict::contradiction;
    cert.reason = "a geometric sum is nonsingular for a verified orbit length";
  } else if (!cert.roots_distinct) {
    cert.verdict = Verdict::contradiction;
    cert.reason = "matched roots of unity are not pairwise distinct";
  } else if (cert.m >= 2 * cert.s) {
    cert.verdict = Verdict::consistent;
    cert.reason = "m = " + std::to_string(cert.m) + " >= 2s = " + std::to_string(2 * cert.s);
  } else {
    cert.verdict = Verdict::contradiction;
    cert.reason = "m = " + std::to_string(cert.m) + " < 2s = " + std::to_string(2 * cert.s);
  }
  if (claimed_dim) {
    cert.audit = audit_claimed_dimension(cert.records, *claimed_dim);
    if (cert.audit->verdict == Verdict::contradiction) {
      cert.verdict = Verdict::contradiction;
      cert.reason = cert.audit->reason;
    }
  }
  return cert;
}

TightRotation make_tight_rotation(std::span<const long> lengths) {
  require_pairwise_coprime(lengths);
  std::vector<RotationBlock> blocks;
  for (long w : lengths) blocks.push_back({1, w});
  TightRotation out{OrthogonalOperator::from_blocks(std::move(blocks)), {}};
  const int m = out.op.dim();
  for (std::size_t j = 0; j < lengths.size(); ++j) {
    Witness wit;
    wit.point = Eigen::VectorXd::Zero(m);
    wit.point(2 * static_cast<long>(j)) = 1.0;
    wit.length = lengths[j];
    out.witnesses.push_back(std::move(wit));
  }
  return out;
}

std::string to_string(Verdict v) { return v == Verdict::consistent ? "consistent" : "contradiction"; }

}  // namespace eqlift
