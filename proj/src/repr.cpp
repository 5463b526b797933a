#include "gainline/repr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "gainline/error.hpp"

namespace gainline {

UnitaryRepresentation::UnitaryRepresentation(GroupPtr group, std::vector<Eigen::MatrixXcd> images,
                                             bool irreducible, std::string name, double tol)
    : group_(std::move(group)), images_(std::move(images)), irreducible_(irreducible),
      name_(std::move(name)) {
  if (!group_) throw StructuralError("representation needs a group");
  const std::size_t n = group_->order();
  if (images_.size() != n)
    throw ValidationError("representation needs one image per group element");
  degree_ = static_cast<std::size_t>(images_[0].rows());
  if (degree_ == 0) throw ValidationError("representation degree must be positive");
  const auto k = static_cast<Eigen::Index>(degree_);
  for (const auto& m : images_)
    if (m.rows() != k || m.cols() != k) throw ValidationError("representation images must all be k x k");

  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(k, k);
  if ((images_[0] - id).cwiseAbs().maxCoeff() > tol)
    throw ValidationError("representation must send the identity to the identity matrix");
  for (std::size_t g = 0; g < n; ++g) {
    if ((images_[g].adjoint() * images_[g] - id).cwiseAbs().maxCoeff() > tol)
      throw ValidationError("image of " + group_->label(Element(g)) + " is not unitary");
    for (std::size_t h = 0; h < n; ++h) {
      const auto gh = group_->multiply(Element(g), Element(h));
      if ((images_[g] * images_[h] - images_[gh.id]).cwiseAbs().maxCoeff() > tol)
        throw ValidationError("representation is not a homomorphism at (" +
                              group_->label(Element(g)) + ", " + group_->label(Element(h)) + ")");
    }
  }
}

namespace {

using Cd = std::complex<double>;

Eigen::MatrixXcd scalar1(Cd z) {
  Eigen::MatrixXcd m(1, 1);
  m(0, 0) = z;
  return m;
}

// Index-2 subgroup containing all squares, or empty when G has no sign character.
std::vector<Element> index_two_subgroup(const FiniteGroup& g) {
  std::vector<Element> squares;
  for (auto x : g.elements()) squares.push_back(g.multiply(x, x));
  auto k = g.generated_subgroup(squares);
  // G / <squares> is an elementary abelian 2-group; each extra generator halves the index.
  while (k.size() * 2 < g.order()) {
    for (auto x : g.elements()) {
      if (!std::binary_search(k.begin(), k.end(), x)) {
        auto gens = k;
        gens.push_back(x);
        k = g.generated_subgroup(gens);
        break;
      }
    }
  }
  if (k.size() * 2 != g.order()) return {};
  return k;
}

}  // namespace

UnitaryRepresentation builtin_representation(const GroupPtr& group, const std::string& which,
                                             long long parameter) {
  if (!group) throw StructuralError("builtin_representation needs a group");
  const std::size_t n = group->order();
  std::vector<Eigen::MatrixXcd> images;

  if (which == "trivial") {
    images.assign(n, scalar1(1.0));
    return UnitaryRepresentation(group, std::move(images), true, "trivial");
  }

  if (which == "sign_character") {
    auto kernel = index_two_subgroup(*group);
    if (kernel.empty())
      throw ValidationError("group " + group->name() + " has no subgroup of index 2");
    for (auto x : group->elements())
      images.push_back(scalar1(std::binary_search(kernel.begin(), kernel.end(), x) ? 1.0 : -1.0));
    return UnitaryRepresentation(group, std::move(images), true, "sign_character");
  }

  if (which == "root_of_unity") {
    const auto fam = group->family();
    if (fam != GroupFamily::Cyclic && fam != GroupFamily::Sign && fam != GroupFamily::T4)
      throw ValidationError("root_of_unity applies only to cyclic groups");
    // In these families index a is the a-th power of the generator.
    for (std::size_t a = 0; a < n; ++a) {
      const long long e = ((parameter % static_cast<long long>(n)) * static_cast<long long>(a)) %
                          static_cast<long long>(n);
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(n);
      // Exact values at quarter turns keep T4 and sign images integral.
      Cd z = std::polar(1.0, theta);
      if (4 * e % static_cast<long long>(n) == 0) {
        static constexpr Cd quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        z = quarter[(4 * e / static_cast<long long>(n)) % 4];
      }
      images.push_back(scalar1(z));
    }
    return UnitaryRepresentation(group, std::move(images), true, "root_of_unity");
  }

  if (which == "q8_2dim") {
    if (group->family() != GroupFamily::Quaternion8)
      throw ValidationError("q8_2dim applies only to the quaternion group");
    const Cd I(0.0, 1.0);
    Eigen::MatrixXcd one = Eigen::MatrixXcd::Identity(2, 2);
    Eigen::MatrixXcd qi(2, 2), qj(2, 2), qk(2, 2);
    qi << 0.0, -1.0, 1.0, 0.0;
    qj << 0.0, I, I, 0.0;
    qk << -I, 0.0, 0.0, I;
    // Labels are ordered 1, -1, i, -i, j, -j, k, -k.
    for (const auto& m : {one, qi, qj, qk}) {
      images.push_back(m);
      images.push_back(-m);
    }
    return UnitaryRepresentation(group, std::move(images), true, "q8_2dim");
  }

  if (which == "regular") {
    const auto k = static_cast<Eigen::Index>(n);
    for (auto g : group->elements()) {
      Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(k, k);
      for (auto h : group->elements()) p(group->multiply(g, h).id, h.id) = 1.0;
      images.push_back(std::move(p));
    }
    return UnitaryRepresentation(group, std::move(images), n == 1, "regular");
  }

  throw ValidationError("unknown built-in representation \"" + which + "\"");
}

Eigen::MatrixXcd fourier(const AlgebraElement& f, const UnitaryRepresentation& pi) {
  if (!same_group(f.group(), pi.group()))
    throw StructuralError("fourier: representation is defined on a different group");
  const auto k = static_cast<Eigen::Index>(pi.degree());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(k, k);
  for (const auto& [g, c] : f.terms()) out += c * pi(g);
  return out;
}

RepresentedMatrix fourier(const CGMatrix& a, const UnitaryRepresentation& pi) {
  if (!same_group(a.group(), pi.group()))
    throw StructuralError("fourier: representation is defined on a different group");
  const auto k = static_cast<Eigen::Index>(pi.degree());
  RepresentedMatrix out{a.rows(), a.cols(), pi.degree(),
                        Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(a.rows()) * k,
                                               static_cast<Eigen::Index>(a.cols()) * k)};
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero())
        out.data.block(static_cast<Eigen::Index>(i) * k, static_cast<Eigen::Index>(j) * k, k, k) =
            fourier(a(i, j), pi);
  return out;
}

Eigen::MatrixXcd block_scalar(std::size_t n, const UnitaryRepresentation& pi, Element g) {
  const auto k = static_cast<Eigen::Index>(pi.degree());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n) * k,
                                                static_cast<Eigen::Index>(n) * k);
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(n); ++i) out.block(i * k, i * k, k, k) = pi(g);
  return out;
}

// ---------------------------------------------------------------------------
// Cyclic Jacobi for complex Hermitian matrices.
//
// Each rotation J acts on the (p, q) plane with J_pp = J_qq = c, J_pq = s e,
// J_qp = -s conj(e), where e = a_pq / |a_pq|. A <- J^H A J annihilates a_pq.

EigenDecomposition hermitian_eigen(const Eigen::MatrixXcd& m, double hermitian_tol) {
  if (m.rows() != m.cols()) throw ValidationError("hermitian_eigen: matrix must be square");
  const Eigen::Index n = m.rows();
  EigenDecomposition out;
  out.values = Eigen::VectorXd::Zero(n);
  out.vectors = Eigen::MatrixXcd::Identity(n, n);
  if (n == 0) return out;

  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > hermitian_tol * scale)
    throw ValidationError("matrix is not Hermitian within tolerance");

  Eigen::MatrixXcd a = 0.5 * (m + m.adjoint());
  Eigen::MatrixXcd& v = out.vectors;
  const double frob = a.norm();
  const double target = std::numeric_limits<double>::epsilon() * frob;

  auto off_norm = [&] {
    double s = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) s += std::norm(a(p, q));
    return std::sqrt(2.0 * s);
  };

  constexpr int kMaxSweeps = 100;
  for (out.sweeps = 0; out.sweeps < kMaxSweeps; ++out.sweeps) {
    if (off_norm() <= target) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Cd apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Cd e = apq / mag;
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Cd se = s * e, sec = s * std::conj(e);

        for (Eigen::Index r = 0; r < n; ++r) {  // A <- A J
          const Cd arp = a(r, p), arq = a(r, q);
          a(r, p) = c * arp - sec * arq;
          a(r, q) = se * arp + c * arq;
        }
        for (Eigen::Index r = 0; r < n; ++r) {  // A <- J^H A
          const Cd apr = a(p, r), aqr = a(q, r);
          a(p, r) = c * apr - se * aqr;
          a(q, r) = sec * apr + c * aqr;
        }
        for (Eigen::Index r = 0; r < n; ++r) {  // V <- V J
          const Cd vrp = v(r, p), vrq = v(r, q);
          v(r, p) = c * vrp - sec * vrq;
          v(r, q) = se * vrp + c * vrq;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
      }
    }
  }
  if (out.sweeps == kMaxSweeps) throw Error("Jacobi iteration did not converge");

  std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto x, auto y) { return a(x, x).real() < a(y, y).real(); });
  Eigen::MatrixXcd sorted(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = a(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(i)]).real();
    sorted.col(i) = v.col(idx[static_cast<std::size_t>(i)]);
  }
  out.vectors = std::move(sorted);
  return out;
}

Spectrum hermitian_spectrum(const Eigen::MatrixXcd& m, double hermitian_tol) {
  auto d = hermitian_eigen(m, hermitian_tol);
  return Spectrum{std::vector<double>(d.values.data(), d.values.data() + d.values.size())};
}

Spectrum hermitian_spectrum(const RepresentedMatrix& m, double hermitian_tol) {
  return hermitian_spectrum(m.data, hermitian_tol);
}

RepresentedGainMatrices represented_gain_matrices(const GainFunction& psi, CentralWeakInvolution s,
                                                  const UnitaryRepresentation& pi) {
  return {fourier(gain_adjacency(psi), pi), fourier(s_laplacian(psi, s), pi)};
}

Spectrum pi_spectrum(const GainFunction& psi, const UnitaryRepresentation& pi) {
  return hermitian_spectrum(fourier(gain_adjacency(psi), pi));
}

}  // namespace gainline
