#include "vvlab/sweep.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "vvlab/kernels.hpp"
#include "vvlab/norms.hpp"

namespace vvlab {

namespace {

NormSpec spec_for(std::size_t col) {
  switch (col) {
    case 0: return NormSpec::lp(2.0);
    case 1: return NormSpec::hs(1);
    case 2: return NormSpec::dk(2);
    case 3: return NormSpec::hs_frac(1.5);
    case 4: return NormSpec::hs_frac(2.5);
  }
  throw std::logic_error("spec_for: bad column");
}

// sup over shared frames of norm(phi_a - phi_b) + norm(u_a - u_b).
std::array<double, 5> frame_errors(const Trajectory& vis, const Trajectory& ref) {
  const Grid& g = vis.frames.front().state.grid;
  std::array<double, 5> sup{};
  Field dphi(g.n), du(g.n);
  const std::size_t nframes = std::min(vis.frames.size(), ref.frames.size());
  for (std::size_t j = 0; j < nframes; ++j) {
    const SymState& a = vis.frames[j].state;
    const SymState& b = ref.frames[j].state;
    for (std::size_t i = 0; i < g.n; ++i) {
      dphi[i] = a.phi[i] - b.phi[i];
      du[i] = a.u[i] - b.u[i];
    }
    for (std::size_t c = 0; c < 5; ++c) {
      const NormSpec spec = spec_for(c);
      const double e = norm(g, dphi, spec) + norm(g, du, spec);
      if (e > sup[c]) sup[c] = e;
    }
  }
  return sup;
}

}  // namespace

SweepResult sweep(const SweepConfig& cfg) {
  if (cfg.epsilons.size() < 3)
    throw std::invalid_argument("sweep: need at least 3 epsilon values");
  for (double e : cfg.epsilons)
    if (!(e > 0.0 && e <= 1.0))
      throw std::invalid_argument("sweep: epsilon values must lie in (0, 1]");
  for (std::size_t i = 1; i < cfg.epsilons.size(); ++i)
    if (!(cfg.epsilons[i] <= cfg.epsilons[i - 1]))
      throw std::invalid_argument("sweep: epsilon list must be nonincreasing");

  // Shared inviscid reference.
  SimConfig ref_cfg = cfg.base;
  ref_cfg.mode = Mode::Euler;
  Trajectory ref = run(ref_cfg);
  if (ref.failed())
    throw std::runtime_error("sweep: inviscid reference failed at t = " +
                             std::to_string(ref.failure->time));

  SweepResult result;
  result.rows.resize(cfg.epsilons.size());

  auto run_member = [&](std::size_t idx) {
    SweepRow& row = result.rows[idx];
    row.epsilon = cfg.epsilons[idx];
    SimConfig member = cfg.base;
    member.mode = Mode::NS;
    member.params.epsilon = row.epsilon;
    Trajectory vis = run(member);
    if (vis.failed()) {
      row.ok = false;
      row.failure = vis.failure->reason;
      return;
    }
    row.err = frame_errors(vis, ref);
    double supj = 0.0;
    for (const StepRecord& s : vis.steps) supj = std::max(supj, s.apriori);
    if (vis.steps.empty()) supj = apriori_sup(apriori_series(vis, member.params));
    row.sup_apriori = supj;
    row.ok = true;
  };

  const int nthreads =
      std::max(1, std::min<int>(cfg.threads, static_cast<int>(cfg.epsilons.size())));
  if (nthreads == 1) {
    for (std::size_t i = 0; i < cfg.epsilons.size(); ++i) run_member(i);
  } else {
    // Each worker owns whole runs; node-level kernels stay serial inside.
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
      kernels::set_thread_serial(true);
      for (;;) {
        const std::size_t idx = cursor.fetch_add(1);
        if (idx >= cfg.epsilons.size()) return;
        run_member(idx);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::size_t ok_count = 0;
  for (const auto& r : result.rows)
    if (r.ok) ++ok_count;
  if (ok_count < 3)
    throw std::runtime_error("sweep: fewer than 3 members completed; cannot fit rates");

  for (std::size_t c = 0; c < 5; ++c) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : result.rows)
      if (r.ok && r.err[c] > 0.0) pts.push_back({r.epsilon, r.err[c]});
    if (pts.size() >= 3) result.fits.push_back(fit_rate(kSweepNorms[c], pts));

    bool mono = true;
    const SweepRow* prev = nullptr;
    for (const auto& r : result.rows) {
      if (!r.ok) continue;
      if (prev && !(r.err[c] <= prev->err[c])) mono = false;
      prev = &r;
    }
    result.monotone[c] = mono;
  }

  double jmin = 0, jmax = 0;
  bool first = true;
  for (const auto& r : result.rows) {
    if (!r.ok) continue;
    if (first || r.sup_apriori < jmin) jmin = r.sup_apriori;
    if (first || r.sup_apriori > jmax) jmax = r.sup_apriori;
    first = false;
  }
  result.apriori_ratio = jmin > 0 ? jmax / jmin : 0.0;
  return result;
}

}  // namespace vvlab
