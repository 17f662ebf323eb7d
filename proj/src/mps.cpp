#include "nqs/mps.hpp"

#include <Eigen/SVD>
#include <algorithm>

namespace nqs {

MpsState::MpsState(std::vector<MpsSite> sites, Boundary boundary)
    : sites_(std::move(sites)), boundary_(boundary) {
  if (sites_.empty()) throw ShapeError("empty MPS");
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    const MpsSite& s = sites_[i];
    if (s.slice[0].rows() != s.slice[1].rows() || s.slice[0].cols() != s.slice[1].cols()) {
      throw ShapeError("site " + std::to_string(i) + ": physical slices disagree in shape");
    }
    if (i + 1 < sites_.size() && s.right_dim() != sites_[i + 1].left_dim()) {
      throw ShapeError("bond mismatch between sites " + std::to_string(i) + " and " +
                       std::to_string(i + 1));
    }
  }
  if (boundary_ == Boundary::kOpen) {
    if (sites_.front().left_dim() != 1 || sites_.back().right_dim() != 1) {
      throw ShapeError("open-boundary MPS must have unit end bonds");
    }
  } else if (sites_.front().left_dim() != sites_.back().right_dim()) {
    throw ShapeError("periodic MPS must have matching wrap-around bonds");
  }
}

std::vector<int> MpsState::bond_dims() const {
  std::vector<int> dims;
  for (std::size_t i = 0; i + 1 < sites_.size(); ++i) dims.push_back(sites_[i].right_dim());
  return dims;
}

Complex mps_amplitude(const MpsState& mps, const SpinConfiguration& v) {
  if (v.size() != mps.n_sites()) throw ShapeError("configuration size != MPS sites");
  Eigen::MatrixXcd acc = mps.sites().front().slice[static_cast<std::size_t>(v.bit(0))];
  for (int i = 1; i < mps.n_sites(); ++i) {
    acc = acc * mps.sites()[static_cast<std::size_t>(i)].slice[static_cast<std::size_t>(v.bit(i))];
  }
  if (mps.boundary() == Boundary::kOpen) return acc(0, 0);
  return acc.trace();
}

namespace {

struct HiddenWindow {
  int j;
  int lo;
  int hi;  // inclusive
};

// SVD truncation keeping relative singular values above cutoff.
void truncated_svd(const Eigen::MatrixXcd& m, double cutoff, Eigen::MatrixXcd& u,
                   Eigen::VectorXd& sv, Eigen::MatrixXcd& vdag) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  int rank = 0;
  const double top = s.size() > 0 ? s(0) : 0.0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) > cutoff * top) ++rank;
  }
  rank = std::max(rank, 1);
  u = svd.matrixU().leftCols(rank);
  sv = s.head(rank);
  vdag = svd.matrixV().leftCols(rank).adjoint();
}

}  // namespace

RbmMpsConversion rbm_to_mps(const RbmState& s, const MpsOptions& opt) {
  if (s.hidden_domain() != SpinConvention::kZeroOne ||
      s.visible_domain() != SpinConvention::kZeroOne) {
    throw UnsupportedConventionError(
        "MPS conversion assumes zero-one units; run convert_convention first");
  }
  const int n = s.n_visible();
  const int nh = s.n_hidden();

  Complex log_scale(0, 0);
  std::vector<HiddenWindow> windows;
  for (int j = 0; j < nh; ++j) {
    int lo = -1, hi = -1;
    for (int i = 0; i < n; ++i) {
      if (s.W(i, j) == Complex(0, 0)) continue;
      if (lo < 0) lo = i;
      hi = i;
    }
    if (lo < 0) {
      // disconnected unit: a global factor 1 + e^{b_j}
      log_scale += std::log(1.0 + std::exp(s.b(j)));
      continue;
    }
    windows.push_back(HiddenWindow{j, lo, hi});
  }

  // crossing sets per cut c (between site c-1 and c), ascending by unit
  std::vector<std::vector<int>> crossing(static_cast<std::size_t>(n + 1));
  for (const HiddenWindow& w : windows) {
    for (int c = w.lo + 1; c <= w.hi; ++c) crossing[static_cast<std::size_t>(c)].push_back(w.j);
  }
  for (int c = 0; c <= n; ++c) {
    const auto& set = crossing[static_cast<std::size_t>(c)];
    if ((std::int64_t{1} << set.size()) > opt.max_bond) {
      throw CapacityError("bond dimension 2^" + std::to_string(set.size()) + " at cut " +
                          std::to_string(c) + " exceeds the configured cap");
    }
  }

  auto window_of = [&](int j) {
    for (const HiddenWindow& w : windows) {
      if (w.j == j) return w;
    }
    throw InternalError("unknown hidden window");
  };

  std::vector<MpsSite> sites(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto& left = crossing[static_cast<std::size_t>(i)];
    const auto& right = crossing[static_cast<std::size_t>(i + 1)];
    const int dl = 1 << left.size();
    const int dr = 1 << right.size();
    MpsSite site;
    site.slice[0] = Eigen::MatrixXcd::Zero(dl, dr);
    site.slice[1] = Eigen::MatrixXcd::Zero(dl, dr);
    for (int v = 0; v <= 1; ++v) {
      for (int li = 0; li < dl; ++li) {
        for (int ri = 0; ri < dr; ++ri) {
          // hidden values seen from both bonds must agree
          bool consistent = true;
          auto value_of = [&](int j) -> int {
            for (std::size_t k = 0; k < left.size(); ++k) {
              if (left[k] == j) return (li >> k) & 1;
            }
            for (std::size_t k = 0; k < right.size(); ++k) {
              if (right[k] == j) return (ri >> k) & 1;
            }
            return -1;
          };
          for (std::size_t k = 0; k < right.size(); ++k) {
            const int j = right[k];
            const bool in_left = std::find(left.begin(), left.end(), j) != left.end();
            if (!in_left) continue;
            int lv = -1;
            for (std::size_t kk = 0; kk < left.size(); ++kk) {
              if (left[kk] == j) lv = (li >> kk) & 1;
            }
            if (lv != ((ri >> k) & 1)) {
              consistent = false;
              break;
            }
          }
          if (!consistent) continue;

          Complex expo = s.a(i) * static_cast<double>(v);
          Complex factor(1, 0);
          // units active at this site via either bond
          std::vector<int> active = left;
          for (std::size_t k = 0; k < right.size(); ++k) {
            if (std::find(active.begin(), active.end(), right[k]) == active.end()) {
              active.push_back(right[k]);
            }
          }
          for (int j : active) {
            const int hj = value_of(j);
            expo += s.W(i, j) * static_cast<double>(v * hj);
            const HiddenWindow w = window_of(j);
            if (w.hi == i) expo += s.b(j) * static_cast<double>(hj);  // close the unit here
          }
          // single-site windows: summed locally
          for (const HiddenWindow& w : windows) {
            if (w.lo == i && w.hi == i) {
              factor *= 1.0 + std::exp(s.b(w.j) + s.W(i, w.j) * static_cast<double>(v));
            }
          }
          site.slice[static_cast<std::size_t>(v)](li, ri) = factor * std::exp(expo);
        }
      }
    }
    sites[static_cast<std::size_t>(i)] = std::move(site);
  }

  // compression: left-to-right then right-to-left truncated SVD sweeps
  for (int i = 0; i + 1 < n; ++i) {
    MpsSite& a = sites[static_cast<std::size_t>(i)];
    const int dl = a.left_dim();
    const int dr = a.right_dim();
    Eigen::MatrixXcd m(2 * dl, dr);
    m.topRows(dl) = a.slice[0];
    m.bottomRows(dl) = a.slice[1];
    Eigen::MatrixXcd u, vdag;
    Eigen::VectorXd sv;
    truncated_svd(m, opt.svd_cutoff, u, sv, vdag);
    const int rank = static_cast<int>(sv.size());
    a.slice[0] = u.topRows(dl);
    a.slice[1] = u.bottomRows(dl);
    const Eigen::MatrixXcd carry = sv.asDiagonal() * vdag;
    MpsSite& b = sites[static_cast<std::size_t>(i + 1)];
    b.slice[0] = carry * b.slice[0];
    b.slice[1] = carry * b.slice[1];
    (void)rank;
  }
  for (int i = n - 1; i > 0; --i) {
    MpsSite& a = sites[static_cast<std::size_t>(i)];
    const int dl = a.left_dim();
    const int dr = a.right_dim();
    Eigen::MatrixXcd m(dl, 2 * dr);
    m.leftCols(dr) = a.slice[0];
    m.rightCols(dr) = a.slice[1];
    Eigen::MatrixXcd u, vdag;
    Eigen::VectorXd sv;
    truncated_svd(m, opt.svd_cutoff, u, sv, vdag);
    a.slice[0] = vdag.leftCols(dr);
    a.slice[1] = vdag.rightCols(dr);
    const Eigen::MatrixXcd carry = u * sv.asDiagonal();
    MpsSite& b = sites[static_cast<std::size_t>(i - 1)];
    b.slice[0] = b.slice[0] * carry;
    b.slice[1] = b.slice[1] * carry;
  }

  MpsState mps(std::move(sites), Boundary::kOpen);
  RbmMpsConversion out{std::move(mps), log_scale, {}};
  out.bond_dims = out.mps.bond_dims();
  return out;
}

}  // namespace nqs
