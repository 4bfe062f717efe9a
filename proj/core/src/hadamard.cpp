// Copyright 2026 The gptlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gptlab/hadamard/hadamard.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gptlab/core/algebra.hpp"
#include "gptlab/core/parallel.hpp"
#include "gptlab/core/random.hpp"
#include "gptlab/core/tolerances.hpp"

namespace gptlab::hadamard {

namespace {

void check_bits(int n) {
  if (n < 1 || n > kMaxBits) {
    std::ostringstream os;
    os << "hadamard: N = " << n << " outside [1, " << kMaxBits << "]";
    throw std::domain_error(os.str());
  }
}

Matrix diag_of(std::uint32_t mu, int n) {
  return hadamard_vector(mu, n).to_real().asDiagonal();
}

Vector extremal(const Vector& m) {
  Vector v(m.size() + 1);
  v(0) = 0.5;
  v.tail(m.size()) = 0.5 * m;
  return v;
}

}  // namespace

BitString::BitString(std::uint32_t value, int n) : value_(value), n_(n) {
  check_bits(n);
  if (value >= (std::uint32_t{1} << n)) {
    std::ostringstream os;
    os << "BitString: " << value << " does not fit in " << n << " bits";
    throw std::domain_error(os.str());
  }
}

BitString operator^(BitString a, BitString b) {
  if (a.n_ != b.n_) throw std::invalid_argument("BitString: length mismatch");
  return BitString(a.value_ ^ b.value_, a.n_);
}

Index block_size(int n) {
  check_bits(n);
  return Index{1} << n;
}

Index local_dim(int n) { return block_size(n) - 1; }

HadamardVector::HadamardVector(int n, std::vector<std::int8_t> components)
    : n_(n), components_(std::move(components)) {
  check_bits(n);
  if (components_.size() != static_cast<std::size_t>(block_size(n))) {
    throw std::invalid_argument("HadamardVector: length must be 2^N");
  }
}

Vector HadamardVector::to_real() const {
  Vector v(static_cast<Index>(components_.size()));
  for (std::size_t i = 0; i < components_.size(); ++i) v(static_cast<Index>(i)) = components_[i];
  return v;
}

HadamardVector hadamard_vector(BitString mu) {
  const std::size_t size = std::size_t{1} << mu.bits();
  std::vector<std::int8_t> c(size);
  for (std::size_t nu = 0; nu < size; ++nu) {
    c[nu] = (std::popcount(mu.value() & static_cast<std::uint32_t>(nu)) & 1) ? -1 : 1;
  }
  return HadamardVector(mu.bits(), std::move(c));
}

HadamardVector hadamard_vector(std::uint32_t mu, int n) { return hadamard_vector(BitString(mu, n)); }

HadamardVector elementwise_product(const HadamardVector& a, const HadamardVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("elementwise_product: length mismatch");
  std::vector<std::int8_t> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = static_cast<std::int8_t>(a[i] * b[i]);
  return HadamardVector(a.bits(), std::move(c));
}

std::int64_t dot(const HadamardVector& a, const HadamardVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BipartiteState entangled_state(std::uint32_t mu, int n) { return BipartiteState(diag_of(mu, n)); }

BipartiteEffect entangled_effect(std::uint32_t mu, int n) {
  return BipartiteEffect(std::ldexp(1.0, -n) * diag_of(mu, n));
}

BipartiteMeasurement bell_measurement(int n) {
  BipartiteMeasurement m;
  const auto size = static_cast<std::uint32_t>(block_size(n));
  for (std::uint32_t mu = 0; mu < size; ++mu) m.effects.push_back(entangled_effect(mu, n));
  return m;
}

Transformation local_transformation(std::uint32_t mu, int n) {
  return Transformation(diag_of(mu, n));
}

MembershipReport verify_max_tensor_membership(const BipartiteState& phi, int n, int samples,
                                              std::uint64_t seed,
                                              std::optional<std::uint32_t> pure_mu) {
  const Index size = block_size(n);
  if (phi.rows() != size || phi.cols() != size) {
    throw std::invalid_argument("verify_max_tensor_membership: shape does not match N");
  }
  MembershipReport report;
  report.min_value = 1.0;
  report.max_value = 0.0;

  ++report.checks;
  const double norm = bipartite_contract(BipartiteEffect::unit(size, size), phi);
  if (std::abs(norm - 1.0) > kExactTol) {
    report.violations.push_back({Vector(), Vector(), norm, "u_AB . phi != 1"});
  }

  Vector t_hat;
  if (pure_mu) t_hat = hadamard_vector(*pure_mu, n).to_real().tail(size - 1);

  Rng rng = make_rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Vector alpha = random_unit_vector(size - 1, rng);
    const Vector beta = random_unit_vector(size - 1, rng);
    const BipartiteEffect e(extremal(alpha) * extremal(beta).transpose());
    const double p = bipartite_contract(e, phi);
    ++report.checks;
    report.min_value = std::min(report.min_value, p);
    report.max_value = std::max(report.max_value, p);
    if (p < -kExactTol || p > 1.0 + kExactTol) {
      report.violations.push_back({alpha, beta, p, "product effect probability outside [0,1]"});
    }
    if (pure_mu) {
      const double expected = 0.25 * (1.0 + alpha.dot(t_hat.cwiseProduct(beta)));
      if (std::abs(p - expected) > kExactTol) {
        report.violations.push_back({alpha, beta, p, "value differs from 1/4 (1 + alpha . T beta)"});
      }
      if (p > 0.5 + kExactTol) {
        report.violations.push_back({alpha, beta, p, "value exceeds 1/2"});
      }
    }
  }
  return report;
}

BipartiteState local_tomography(const std::function<double(const BipartiteEffect&)>& oracle,
                                Index rows, Index cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("local_tomography: empty shape");
  // Local effects: index 0 is u, otherwise 1/2 (1, s v_k).
  auto local = [](Index dim, Index k, int sign) {
    Vector v = Vector::Zero(dim);
    if (k == 0) {
      v(0) = 1.0;
    } else {
      v(0) = 0.5;
      v(k) = 0.5 * sign;
    }
    return v;
  };
  auto prob = [&](Index i, int s, Index j, int t) {
    return oracle(BipartiteEffect(local(rows, i, s) * local(cols, j, t).transpose()));
  };

  Matrix phi(rows, cols);
  phi(0, 0) = prob(0, 1, 0, 1);
  for (Index i = 1; i < rows; ++i) phi(i, 0) = prob(i, 1, 0, 1) - prob(i, -1, 0, 1);
  for (Index j = 1; j < cols; ++j) phi(0, j) = prob(0, 1, j, 1) - prob(0, 1, j, -1);
  // P(s,t) = 1/4 (1 + s a + t b + s t c), so c = sum_st s t P(s,t).
  for (Index i = 1; i < rows; ++i) {
    for (Index j = 1; j < cols; ++j) {
      double c = 0.0;
      for (int s : {1, -1})
        for (int t : {1, -1}) c += s * t * prob(i, s, j, t);
      phi(i, j) = c;
    }
  }
  return BipartiteState(std::move(phi));
}

std::vector<SuiteCheck> verify_group_laws(int n_max) {
  check_bits(n_max);
  SuiteCheck ortho{"orthogonality d_mu . d_mu' = 2^N delta", true, 0, {}};
  SuiteCheck columns{"column sums sum_mu (d_mu)_nu = 2^N delta_nu0", true, 0, {}};
  SuiteCheck closure{"elementwise product d_mu o d_mu' = d_(mu^mu')", true, 0, {}};
  SuiteCheck group{"composition T_mu T_mu' = T_(mu^mu')", true, 0, {}};
  SuiteCheck det{"det T_hat_mu = +1 for N >= 2", true, 0, {}};

  auto fail = [](SuiteCheck& c, const std::string& detail) {
    if (c.passed) c.detail = detail;
    c.passed = false;
  };

  for (int n = 1; n <= n_max; ++n) {
    const auto size = static_cast<std::uint32_t>(block_size(n));
    std::vector<HadamardVector> d;
    std::vector<Matrix> t;
    for (std::uint32_t mu = 0; mu < size; ++mu) {
      d.push_back(hadamard_vector(mu, n));
      t.push_back(local_transformation(mu, n).matrix());
    }
    for (std::uint32_t nu = 0; nu < size; ++nu) {
      std::int64_t s = 0;
      for (std::uint32_t mu = 0; mu < size; ++mu) s += d[mu][nu];
      ++columns.checks;
      if (s != (nu == 0 ? std::int64_t{size} : 0)) {
        fail(columns, "N=" + std::to_string(n) + " nu=" + std::to_string(nu));
      }
    }
    if (n >= 2) {
      for (std::uint32_t mu = 0; mu < size; ++mu) {
        ++det.checks;
        int negatives = 0;
        for (std::uint32_t nu = 1; nu < size; ++nu) negatives += d[mu][nu] < 0;
        if (negatives % 2 != 0) fail(det, "N=" + std::to_string(n) + " mu=" + std::to_string(mu));
      }
    }
    // Rows of the pair table are independent; each writes its own slot.
    std::vector<std::array<SuiteCheck, 3>> rows(size);
    parallel_for(size, [&](std::size_t mu) {
      auto& [o, c, g] = rows[mu];
      for (std::uint32_t nu = 0; nu < size; ++nu) {
        const std::string where = "N=" + std::to_string(n) + " mu=" + std::to_string(mu) +
                                  " mu'=" + std::to_string(nu);
        ++o.checks;
        if (dot(d[mu], d[nu]) != (mu == nu ? std::int64_t{size} : 0)) fail(o, where);
        ++c.checks;
        if (!(elementwise_product(d[mu], d[nu]) == d[mu ^ nu])) fail(c, where);
        ++g.checks;
        if (!(t[mu] * t[nu] == t[mu ^ nu])) fail(g, where);
      }
    });
    for (auto& [o, c, g] : rows) {
      for (auto [dst, src] : {std::pair{&ortho, &o}, {&closure, &c}, {&group, &g}}) {
        dst->checks += src->checks;
        if (!src->passed) fail(*dst, src->detail);
      }
    }
  }
  return {ortho, columns, closure, group, det};
}

std::vector<SuiteCheck> verify_consistency(int n_max, int trials, std::uint64_t seed) {
  check_bits(n_max);
  SuiteCheck local{"T_mu maps local states into the unit ball", true, 0, {}};
  SuiteCheck product{"T_mu maps product states to valid product states", true, 0, {}};
  SuiteCheck entangled{"T_mu phi_nu = phi_(mu^nu)", true, 0, {}};
  auto fail = [](SuiteCheck& c, const std::string& detail) {
    if (c.passed) c.detail = detail;
    c.passed = false;
  };
  for (int n = 1; n <= n_max; ++n) {
    const auto size = static_cast<std::uint32_t>(block_size(n));
    const Index dim = size - 1;
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(n));
    for (std::uint32_t mu = 0; mu < size; ++mu) {
      const Transformation t = local_transformation(mu, n);
      for (std::uint32_t nu = 0; nu < size; ++nu) {
        ++entangled.checks;
        if (!(apply_on_a(t, entangled_state(nu, n)).matrix() == entangled_state(mu ^ nu, n).matrix())) {
          fail(entangled, "N=" + std::to_string(n) + " mu=" + std::to_string(mu) +
                              " nu=" + std::to_string(nu));
        }
      }
      for (int k = 0; k < trials; ++k) {
        Vector ra(dim + 1), rb(dim + 1);
        ra << 1.0, random_ball_point(dim, rng);
        rb << 1.0, random_ball_point(dim, rng);
        const State wa(ra), wb(rb);
        const State out = apply(t, wa);
        ++local.checks;
        if (out.bloch().norm() > 1.0 + kExactTol ||
            std::abs(out.bloch().norm() - wa.bloch().norm()) > kExactTol) {
          fail(local, "N=" + std::to_string(n) + " mu=" + std::to_string(mu));
        }
        const BipartiteState moved = apply_on_a(t, product_state(wa, wb));
        ++product.checks;
        const double dev = (moved.matrix() - product_state(out, wb).matrix()).cwiseAbs().maxCoeff();
        const auto [ra_out, rb_out] = reduced_states(moved);
        if (dev > kExactTol || ra_out.bloch().norm() > 1.0 + kExactTol ||
            rb_out.bloch().norm() > 1.0 + kExactTol) {
          fail(product, "N=" + std::to_string(n) + " mu=" + std::to_string(mu));
        }
      }
    }
  }
  return {local, product, entangled};
}

}  // namespace gptlab::hadamard
