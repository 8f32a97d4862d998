#include "qubitinv/bloch.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <memory>
#include <mutex>

namespace qubitinv {

SubsetId::SubsetId(std::vector<int> sites) : sites_(std::move(sites)) {
  if (sites_.empty()) throw Error(ErrorCode::BadSubset, "empty subset");
  if (sites_.front() < 1)
    throw Error(ErrorCode::BadSubset, "site indices are 1-based");
  if (sites_.back() > 31)
    throw Error(ErrorCode::BadSubset, "site index too large");
  for (std::size_t k = 1; k < sites_.size(); ++k)
    if (sites_[k] <= sites_[k - 1])
      throw Error(ErrorCode::BadSubset, "subset not strictly increasing");
}

SubsetId SubsetId::from_mask(unsigned mask) {
  std::vector<int> sites;
  for (int j = 1; mask; ++j, mask >>= 1)
    if (mask & 1u) sites.push_back(j);
  return SubsetId(std::move(sites));
}

SubsetId SubsetId::parse(std::string_view key) {
  std::vector<int> sites;
  while (!key.empty()) {
    const auto comma = key.find(',');
    const auto token = key.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw Error(ErrorCode::BadSubset, "bad subset key '" + std::string(key) + "'");
    sites.push_back(value);
    if (comma == std::string_view::npos) break;
    key.remove_prefix(comma + 1);
    if (key.empty()) throw Error(ErrorCode::BadSubset, "trailing comma in subset key");
  }
  return SubsetId(std::move(sites));
}

unsigned SubsetId::mask() const noexcept {
  unsigned m = 0;
  for (int j : sites_) m |= 1u << (j - 1);
  return m;
}

std::string SubsetId::key() const {
  std::string s;
  for (std::size_t k = 0; k < sites_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(sites_[k]);
  }
  return s;
}

std::size_t pow3(std::size_t k) {
  std::size_t r = 1;
  while (k--) r *= 3;
  return r;
}

SubsetLayout::SubsetLayout(int n) : n_(n) {
  if (n < 1 || n > kMaxBlochSites)
    throw Error(ErrorCode::TooLarge, "site count " + std::to_string(n) +
                                         " outside [1, " +
                                         std::to_string(kMaxBlochSites) + "]");
  const unsigned full = 1u << n;
  masks_.reserve(full - 1);
  for (unsigned m = 1; m < full; ++m) masks_.push_back(m);
  // Cardinality first, then lexicographic on the ascending site lists.
  std::sort(masks_.begin(), masks_.end(), [](unsigned x, unsigned y) {
    const int px = std::popcount(x), py = std::popcount(y);
    if (px != py) return px < py;
    return SubsetId::from_mask(x).sites() < SubsetId::from_mask(y).sites();
  });
  offset_.assign(full, 0);
  length_.assign(full, 0);
  for (unsigned m : masks_) {
    offset_[m] = total_;
    length_[m] = pow3(static_cast<std::size_t>(std::popcount(m)));
    total_ += length_[m];
  }
}

const SubsetLayout& layout_for(int n) {
  if (n < 1 || n > kMaxBlochSites)
    throw Error(ErrorCode::TooLarge, "site count " + std::to_string(n) +
                                         " outside [1, " +
                                         std::to_string(kMaxBlochSites) + "]");
  static std::array<std::unique_ptr<SubsetLayout>, kMaxBlochSites + 1> cache;
  static std::array<std::once_flag, kMaxBlochSites + 1> once;
  std::call_once(once[n], [n] { cache[n] = std::make_unique<SubsetLayout>(n); });
  return *cache[n];
}

DensityOperator::DensityOperator(int n, Eigen::MatrixXcd matrix)
    : n_(n), matrix_(std::move(matrix)) {
  if (n < 1 || n > kMaxMatrixSites)
    throw Error(ErrorCode::TooLarge, "matrix model supports 1 <= n <= " +
                                         std::to_string(kMaxMatrixSites));
  const Eigen::Index dim = Eigen::Index{1} << n;
  if (matrix_.rows() != dim || matrix_.cols() != dim)
    throw Error(ErrorCode::SizeMismatch,
                "density matrix must be " + std::to_string(dim) + "x" +
                    std::to_string(dim));
  // Conjugation by a badly conditioned element loses digits in the trace.
  const double scale = std::max(1.0, matrix_.cwiseAbs().maxCoeff());
  if (std::abs(matrix_.trace() - 1.0) > kTraceTolerance * scale)
    throw Error(ErrorCode::TraceNotOne, "trace of density operator is not 1");
}

namespace {

// A Pauli string ⊗_j σ_{code_j} (code 0 = identity, 1..3 = x,y,z) is monomial:
// column c has its single nonzero in row c ^ flip, where flip marks the sites
// carrying σx or σy. Site j (1-based) sits at bit n − j.
struct PauliString {
  unsigned flip = 0;
  std::vector<int> codes;  // per site, index j-1
};

cplx pauli_entry(int code, unsigned row_bit, unsigned col_bit) {
  switch (code) {
    case 0:
    case 1: return 1.0;
    case 2: return row_bit ? kI : -kI;  // σy: [[0,−i],[i,0]]
    default: return col_bit ? -1.0 : 1.0;
  }
}

PauliString make_string(int n, unsigned mask, std::size_t flat) {
  PauliString p;
  p.codes.assign(static_cast<std::size_t>(n), 0);
  // Decode φ: last site in the subset is fastest-varying.
  for (int j = n; j >= 1; --j) {
    if (!(mask & (1u << (j - 1)))) continue;
    p.codes[static_cast<std::size_t>(j - 1)] = static_cast<int>(flat % 3) + 1;
    flat /= 3;
  }
  for (int j = 1; j <= n; ++j) {
    const int code = p.codes[static_cast<std::size_t>(j - 1)];
    if (code == 1 || code == 2) p.flip |= 1u << (n - j);
  }
  return p;
}

// P[row][col] for row = col ^ flip.
cplx string_entry(int n, const PauliString& p, unsigned col) {
  const unsigned row = col ^ p.flip;
  cplx v = 1.0;
  for (int j = 1; j <= n; ++j) {
    const int code = p.codes[static_cast<std::size_t>(j - 1)];
    if (code == 0) continue;
    const unsigned shift = static_cast<unsigned>(n - j);
    v *= pauli_entry(code, (row >> shift) & 1u, (col >> shift) & 1u);
  }
  return v;
}

}  // namespace

BlochState to_bloch(const DensityOperator& rho) {
  if (std::abs(rho.trace() - 1.0) > kTraceTolerance)
    throw Error(ErrorCode::TraceNotOne, "trace of density operator is not 1");
  const int n = rho.n();
  const auto& m = rho.matrix();
  const unsigned dim = 1u << n;
  BlochState b(n);
  for (unsigned mask : b.layout().masks()) {
    auto comp = b.component(mask);
    for (std::size_t flat = 0; flat < comp.size(); ++flat) {
      const PauliString p = make_string(n, mask, flat);
      // tr(Pρ) = Σ_c P[c^flip][c] · ρ[c][c^flip]
      cplx acc = 0.0;
      for (unsigned c = 0; c < dim; ++c)
        acc += string_entry(n, p, c) * m(c, c ^ p.flip);
      comp[flat] = acc;
    }
  }
  return b;
}

DensityOperator from_bloch(const BlochState& b) {
  const int n = b.n();
  if (n > kMaxMatrixSites)
    throw Error(ErrorCode::TooLarge, "matrix model supports n <= " +
                                         std::to_string(kMaxMatrixSites));
  const unsigned dim = 1u << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
  for (unsigned mask : b.layout().masks()) {
    auto comp = b.component(mask);
    for (std::size_t flat = 0; flat < comp.size(); ++flat) {
      if (comp[flat] == cplx{}) continue;
      const PauliString p = make_string(n, mask, flat);
      for (unsigned c = 0; c < dim; ++c)
        m(c ^ p.flip, c) += comp[flat] * string_entry(n, p, c);
    }
  }
  m /= static_cast<double>(dim);
  return DensityOperator(n, std::move(m));
}

std::vector<cplx> component(const BlochState& b, const SubsetId& subset) {
  auto c = b.component(subset);
  return {c.begin(), c.end()};
}

}  // namespace qubitinv
