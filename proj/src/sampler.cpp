#include "nqs/sampler.hpp"

#include <cmath>
#include <vector>

namespace nqs {

namespace {

constexpr int kMaxFullSumSites = 16;
constexpr int kStartAttempts = 4096;

SpinConfiguration random_config(int n, std::mt19937_64& rng, std::optional<int> sector) {
  SpinConfiguration v = SpinConfiguration::zeros(n);
  if (sector) {
    if (*sector < 0 || *sector > n) throw DomainError("sector outside [0, n]");
    // place *sector ones at random positions
    std::vector<int> sites(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sites[static_cast<std::size_t>(i)] = i;
    for (int k = 0; k < *sector; ++k) {
      std::uniform_int_distribution<int> pick(k, n - 1);
      std::swap(sites[static_cast<std::size_t>(k)], sites[static_cast<std::size_t>(pick(rng))]);
      v.set_bit(sites[static_cast<std::size_t>(k)], 1);
    }
    return v;
  }
  std::uniform_int_distribution<int> bit(0, 1);
  for (int i = 0; i < n; ++i) v.set_bit(i, bit(rng));
  return v;
}

// Shared sampling driver: walks the chain and hands each kept sample to sink.
template <class Sink>
double run_chain(const NqsState& psi, const PauliStringHamiltonian& h, int n_samples,
                 std::uint64_t seed, const SamplerOptions& opt, Sink&& sink) {
  MetropolisChain chain = MetropolisChain::start(psi, seed, opt.sector);
  const int n = psi.n_visible();
  const int burn = static_cast<int>(std::ceil(opt.burn_in_fraction * n_samples));
  const int thin = opt.sweep_factor * n + 1;  // odd stride: decouples flip parity
  for (int s = 0; s < burn + n_samples; ++s) {
    for (int t = 0; t < thin; ++t) metropolis_step(chain, psi, opt.move);
    if (s < burn) continue;
    const Complex e = local_energy(h, psi, chain.current);
    sink(chain, e);
  }
  return chain.acceptance();
}

double binned_stderr(const std::vector<Complex>& values, Complex mean) {
  const std::size_t n = values.size();
  if (n < 2) return 0.0;
  const std::size_t n_bins = std::min<std::size_t>(32, n);
  const std::size_t per_bin = n / n_bins;
  double var = 0.0;
  std::size_t used = 0;
  for (std::size_t bin = 0; bin < n_bins; ++bin) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = bin * per_bin; k < (bin + 1) * per_bin; ++k) acc += values[k];
    const Complex bm = acc / static_cast<double>(per_bin);
    var += std::norm(bm - mean);
    ++used;
  }
  var /= static_cast<double>(used);
  return std::sqrt(var / static_cast<double>(used));
}

}  // namespace

MetropolisChain MetropolisChain::start(const NqsState& psi, std::uint64_t seed,
                                       std::optional<int> sector) {
  MetropolisChain chain;
  chain.rng.seed(seed);
  for (int attempt = 0; attempt < kStartAttempts; ++attempt) {
    chain.current = random_config(psi.n_visible(), chain.rng, sector);
    chain.current_log_amp = psi.log_amplitude(chain.current);
    if (!chain.current_log_amp.is_zero) return chain;
  }
  throw TrainingError("could not find a nonzero-amplitude start configuration");
}

void metropolis_step(MetropolisChain& chain, const NqsState& psi, ProposalMove move) {
  const int n = chain.current.size();
  ++chain.step_count;
  SpinConfiguration proposal = chain.current;
  if (move == ProposalMove::kSingleFlip) {
    std::uniform_int_distribution<int> site(0, n - 1);
    proposal.flip(site(chain.rng));
  } else {
    std::uniform_int_distribution<int> site(0, n - 1);
    const int i = site(chain.rng);
    int j = site(chain.rng);
    while (j == i) j = site(chain.rng);
    if (proposal.bit(i) == proposal.bit(j)) return;  // no-op exchange, rejected
    proposal.flip(i);
    proposal.flip(j);
  }
  const LogAmplitude cand = psi.log_amplitude(proposal);
  if (cand.is_zero) return;  // auto-reject
  const double log_ratio = 2.0 * (cand.log.real() - chain.current_log_amp.log.real());
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (log_ratio >= 0.0 || unit(chain.rng) < std::exp(log_ratio)) {
    chain.current = std::move(proposal);
    chain.current_log_amp = cand;
    ++chain.accept_count;
  }
}

EnergyEstimate estimate_energy(const NqsState& psi, const PauliStringHamiltonian& h,
                               int n_samples, std::uint64_t seed, const SamplerOptions& opt) {
  if (n_samples < 1) throw DomainError("estimate_energy needs n_samples >= 1");
  const int chains = std::max(1, opt.n_chains);
  std::vector<std::vector<Complex>> per_chain(static_cast<std::size_t>(chains));
  std::vector<double> acc(static_cast<std::size_t>(chains), 0.0);
  const int quota = n_samples / chains;
  par::for_each_index(chains, [&](std::int64_t c) {
    const int mine = quota + (c == 0 ? n_samples % chains : 0);
    per_chain[static_cast<std::size_t>(c)].reserve(static_cast<std::size_t>(mine));
    acc[static_cast<std::size_t>(c)] =
        run_chain(psi, h, mine, seed + static_cast<std::uint64_t>(c), opt,
                  [&](const MetropolisChain&, Complex e) {
                    per_chain[static_cast<std::size_t>(c)].push_back(e);
                  });
  });
  std::vector<Complex> values;
  values.reserve(static_cast<std::size_t>(n_samples));
  double mean_acc = 0.0;
  for (int c = 0; c < chains; ++c) {
    const auto& v = per_chain[static_cast<std::size_t>(c)];
    values.insert(values.end(), v.begin(), v.end());
    mean_acc += acc[static_cast<std::size_t>(c)] / chains;
  }
  Complex mean(0.0, 0.0);
  for (const Complex& e : values) mean += e;
  mean /= static_cast<double>(values.size());
  return EnergyEstimate{mean, binned_stderr(values, mean), mean_acc};
}

GradientEstimate estimate_gradient(const TrainableState& psi, const PauliStringHamiltonian& h,
                                   int n_samples, std::uint64_t seed, const SamplerOptions& opt) {
  if (n_samples < 1) throw DomainError("estimate_gradient needs n_samples >= 1");
  const int chains = std::max(1, opt.n_chains);
  const int p = psi.n_parameters();
  struct ChainAcc {
    Eigen::VectorXcd eo;
    Eigen::VectorXcd o;
    std::vector<Complex> energies;
    double acceptance = 0.0;
  };
  std::vector<ChainAcc> accs(static_cast<std::size_t>(chains));
  const int quota = n_samples / chains;
  par::for_each_index(chains, [&](std::int64_t c) {
    ChainAcc& acc = accs[static_cast<std::size_t>(c)];
    acc.eo = Eigen::VectorXcd::Zero(p);
    acc.o = Eigen::VectorXcd::Zero(p);
    const int mine = quota + (c == 0 ? n_samples % chains : 0);
    acc.energies.reserve(static_cast<std::size_t>(mine));
    acc.acceptance = run_chain(psi, h, mine, seed + static_cast<std::uint64_t>(c), opt,
                               [&](const MetropolisChain& chain, Complex e) {
                                 const Eigen::VectorXcd oc =
                                     psi.log_derivatives(chain.current).conjugate();
                                 acc.eo += e * oc;
                                 acc.o += oc;
                                 acc.energies.push_back(e);
                               });
  });
  Eigen::VectorXcd eo = Eigen::VectorXcd::Zero(p);
  Eigen::VectorXcd o = Eigen::VectorXcd::Zero(p);
  std::vector<Complex> values;
  double mean_acc = 0.0;
  for (int c = 0; c < chains; ++c) {
    const ChainAcc& acc = accs[static_cast<std::size_t>(c)];
    eo += acc.eo;
    o += acc.o;
    values.insert(values.end(), acc.energies.begin(), acc.energies.end());
    mean_acc += acc.acceptance / chains;
  }
  const double total = static_cast<double>(values.size());
  Complex mean(0.0, 0.0);
  for (const Complex& e : values) mean += e;
  mean /= total;
  GradientEstimate out;
  out.gradient = 2.0 * (eo / total - mean * (o / total));
  out.energy_mean = mean;
  out.energy_stderr = binned_stderr(values, mean);
  out.acceptance = mean_acc;
  return out;
}

namespace {

// Enumerates basis indices, optionally restricted to a magnetization sector,
// and exposes log-amplitudes for the weight pass.
struct FullSumGrid {
  std::vector<std::uint64_t> indices;
  std::vector<LogAmplitude> logs;
  double max_log_weight = 0.0;
};

FullSumGrid full_sum_grid(const NqsState& psi, std::optional<int> sector, Exec exec) {
  const int n = psi.n_visible();
  if (n > kMaxFullSumSites) {
    throw CapacityError("full-sum mode limited to " + std::to_string(kMaxFullSumSites) +
                        " sites");
  }
  FullSumGrid grid;
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    if (sector && std::popcount(idx) != *sector) continue;
    grid.indices.push_back(idx);
  }
  grid.logs.resize(grid.indices.size());
  par::for_each_index(
      static_cast<std::int64_t>(grid.indices.size()),
      [&](std::int64_t k) {
        const SpinConfiguration v = SpinConfiguration::from_index(
            grid.indices[static_cast<std::size_t>(k)], n);
        grid.logs[static_cast<std::size_t>(k)] = psi.log_amplitude(v);
      },
      exec);
  bool any = false;
  for (const LogAmplitude& l : grid.logs) {
    if (l.is_zero) continue;
    const double lw = 2.0 * l.log.real();
    if (!any || lw > grid.max_log_weight) grid.max_log_weight = lw;
    any = true;
  }
  if (!any) throw ZeroAmplitudeError("state vanishes on the whole enumeration domain");
  return grid;
}

}  // namespace

EnergyEstimate full_sum_energy(const NqsState& psi, const PauliStringHamiltonian& h,
                               std::optional<int> sector, Exec exec) {
  const FullSumGrid grid = full_sum_grid(psi, sector, exec);
  const int n = psi.n_visible();
  struct Acc {
    double w = 0.0;
    Complex we{0.0, 0.0};
  };
  const Acc total = par::reduce_chunked<Acc>(
      static_cast<std::int64_t>(grid.indices.size()), Acc{},
      [&](std::int64_t begin, std::int64_t end) {
        Acc acc;
        for (std::int64_t k = begin; k < end; ++k) {
          const LogAmplitude& l = grid.logs[static_cast<std::size_t>(k)];
          if (l.is_zero) continue;
          const double w = std::exp(2.0 * l.log.real() - grid.max_log_weight);
          const SpinConfiguration v = SpinConfiguration::from_index(
              grid.indices[static_cast<std::size_t>(k)], n);
          acc.w += w;
          acc.we += w * local_energy(h, psi, v);
        }
        return acc;
      },
      [](Acc a, const Acc& b) {
        a.w += b.w;
        a.we += b.we;
        return a;
      },
      exec);
  return EnergyEstimate{total.we / total.w, 0.0, 1.0};
}

GradientEstimate full_sum_gradient(const TrainableState& psi, const PauliStringHamiltonian& h,
                                   std::optional<int> sector, Exec exec) {
  const FullSumGrid grid = full_sum_grid(psi, sector, exec);
  const int n = psi.n_visible();
  const int p = psi.n_parameters();
  struct Acc {
    double w = 0.0;
    Complex we{0.0, 0.0};
    Eigen::VectorXcd eo;
    Eigen::VectorXcd o;
  };
  Acc init;
  init.eo = Eigen::VectorXcd::Zero(p);
  init.o = Eigen::VectorXcd::Zero(p);
  const Acc total = par::reduce_chunked<Acc>(
      static_cast<std::int64_t>(grid.indices.size()), init,
      [&](std::int64_t begin, std::int64_t end) {
        Acc acc;
        acc.eo = Eigen::VectorXcd::Zero(p);
        acc.o = Eigen::VectorXcd::Zero(p);
        for (std::int64_t k = begin; k < end; ++k) {
          const LogAmplitude& l = grid.logs[static_cast<std::size_t>(k)];
          if (l.is_zero) continue;
          const double w = std::exp(2.0 * l.log.real() - grid.max_log_weight);
          const SpinConfiguration v = SpinConfiguration::from_index(
              grid.indices[static_cast<std::size_t>(k)], n);
          const Complex e = local_energy(h, psi, v);
          const Eigen::VectorXcd oc = psi.log_derivatives(v).conjugate();
          acc.w += w;
          acc.we += w * e;
          acc.eo += (w * e) * oc;
          acc.o += w * oc;
        }
        return acc;
      },
      [](Acc a, const Acc& b) {
        a.w += b.w;
        a.we += b.we;
        a.eo += b.eo;
        a.o += b.o;
        return a;
      },
      exec);
  GradientEstimate out;
  const Complex mean = total.we / total.w;
  out.gradient = 2.0 * (total.eo / total.w - mean * (total.o / total.w));
  out.energy_mean = mean;
  out.energy_stderr = 0.0;
  out.acceptance = 1.0;
  return out;
}

}  // namespace nqs
