#pragma once

// Lower bound on the equivariant embedding dimension for cyclic actions:
// pairwise coprime orbit lengths w_1..w_s > 1 of A in SO(m) force m >= 2s.

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eqlift {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr long kDefaultOrbitCap = 1'000'000;

struct OrbitProfile {
  std::vector<long> lengths;  // input multiset, as given
  std::vector<long> chosen;   // ascending, pairwise coprime, each > 1
  int l = 0;
  int bound = 0;  // 2 l
};

/// Exact maximum-cardinality pairwise coprime subset of the distinct input
/// values, lexicographically smallest among the maxima. Throws domain on a
/// value <= 1.
OrbitProfile max_coprime_subset(std::span<const long> lengths);

/// Same, after dropping values <= 1 (orbit multisets include fixed points).
OrbitProfile coprime_profile_of_orbits(std::span<const long> orbit_lengths);

/// Rotation by 2 pi num / den in one 2x2 block.
struct RotationBlock {
  long num = 0;
  long den = 1;
};

/// An orthogonal operator given densely, optionally with its exact
/// block-rotation form (block-diagonal 2x2 rotations followed by
/// `identity_tail` ones).
struct OrthogonalOperator {
  Eigen::MatrixXd dense;
  std::optional<std::vector<RotationBlock>> blocks;
  int identity_tail = 0;

  int dim() const { return static_cast<int>(dense.rows()); }
  static OrthogonalOperator from_dense(Eigen::MatrixXd a);
  static OrthogonalOperator from_blocks(std::vector<RotationBlock> blocks, int identity_tail = 0);
};

Eigen::Matrix2d rotation(double angle);

/// Throws matrix_domain if A is not square or not orthogonal within tol.
void require_orthogonal(const Eigen::MatrixXd& a, double tol);

/// Smallest k in [1, cap] with |A^k x - x| <= tol, or nullopt.
std::optional<long> matrix_orbit_length(const Eigen::MatrixXd& a, const Eigen::VectorXd& x,
                                        long cap, double tol);

struct OrbitAverage {
  Eigen::VectorXd mean;       // (x + A x + ... + A^(w-1) x) / w
  Eigen::VectorXd deviation;  // x - mean
};

/// Throws orbit_length unless A^w x == x within tol.
OrbitAverage orbit_average(const Eigen::MatrixXd& a, const Eigen::VectorXd& x, long w, double tol);

/// (I + A + ... + A^(w-1)) applied to v.
Eigen::VectorXd geometric_sum_apply(const Eigen::MatrixXd& a, const Eigen::VectorXd& v, long w);

/// det(I + A + ... + A^(w-1)).
double geometric_sum_det(const Eigen::MatrixXd& a, long w);
/// Exact zero test for the block form: true iff some block angle makes the
/// geometric sum vanish.
bool geometric_sum_vanishes(std::span<const RotationBlock> blocks, long w);

/// Eigenvalues of a real matrix read from its real Schur form.
std::vector<std::complex<double>> schur_eigenvalues(const Eigen::MatrixXd& a);

/// Smallest k in [1, w-1] with e^(2 pi i k / w) an eigenvalue of A within tol.
std::optional<long> eigen_match(const Eigen::MatrixXd& a, long w, double tol);
/// Exact version for the block form.
std::optional<long> eigen_match(std::span<const RotationBlock> blocks, long w);

struct Witness {
  Eigen::VectorXd point;
  long length = 0;
};

struct CertificateRecord {
  long w = 0;
  double det_residual = 0.0;
  long k = 0;
  std::complex<double> root;
};

enum class Verdict { consistent, contradiction };

/// Re-derivation of the eigenvalue inventory against a claimed dimension.
struct DimensionAudit {
  int claimed_dim = 0;
  int forced_eigenvalues = 0;  // conjugate pairs count 2, a real -1 counts 1
  int conjugate_pairs = 0;
  int real_minus_one = 0;
  int product_sign = 1;  // sign of the product of the forced eigenvalues
  Verdict verdict = Verdict::consistent;
  std::string reason;
};

struct SpectralCertificate {
  int m = 0;
  int s = 0;
  std::vector<CertificateRecord> records;
  bool roots_distinct = true;
  Verdict verdict = Verdict::consistent;
  double tol = kDefaultTolerance;
  std::string reason;
  std::optional<DimensionAudit> audit;
};

/// Audits a claimed ambient dimension against the matched roots: fewer slots
/// than forced eigenvalues is a counting contradiction; an exactly-filled
/// inventory with a negative product contradicts det A = +1.
DimensionAudit audit_claimed_dimension(std::span<const CertificateRecord> records, int claimed_dim);

/// Verifies each witness orbit length, records the geometric-sum residual and
/// matched root per length, and decides m >= 2s. With `claimed_dim`, also runs
/// the dimension audit and reports its verdict.
/// Throws not_special_orthogonal, matrix_domain, domain (lengths not pairwise
/// coprime or <= 1) or witness.
SpectralCertificate certify(const OrthogonalOperator& op, std::span<const Witness> witnesses,
                            double tol = kDefaultTolerance,
                            std::optional<int> claimed_dim = std::nullopt,
                            long orbit_cap = kDefaultOrbitCap);

struct TightRotation {
  OrthogonalOperator op;
  std::vector<Witness> witnesses;
};

/// Block-diagonal rotations by 2 pi / w_j in SO(2s) with one unit witness per
/// block. Throws domain for non-coprime input or a length < 2.
TightRotation make_tight_rotation(std::span<const long> lengths);

std::string to_string(Verdict v);

}  // namespace eqlift
