// Copyright 2026 The sptprobe Authors
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

#include "sptprobe/harness/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "sptprobe/circuits/execute.hpp"
#include "sptprobe/circuits/library.hpp"
#include "sptprobe/entanglement/estimators.hpp"
#include "sptprobe/entanglement/oracle.hpp"
#include "sptprobe/harness/tomography.hpp"
#include "sptprobe/noise/channels.hpp"
#include "sptprobe/qsim/ops.hpp"
#include "sptprobe/qsim/rng.hpp"
#include "sptprobe/symmetry/classify.hpp"
#include "sptprobe/symmetry/parity.hpp"

namespace sptprobe::harness {
namespace {

Cell num(double v) { return std::isfinite(v) ? Cell{v} : Cell{}; }
Cell integer(std::uint64_t v) { return static_cast<std::int64_t>(v); }
// Exact zeros instead of 1e-17 noise in oracle columns.
Cell clean(double v) { return num(std::abs(v) < 1e-12 ? 0.0 : v); }

ExperimentConfig checked(const ExperimentConfig& cfg, Experiment e) {
  ExperimentConfig c = cfg;
  c.experiment = e;
  c.validate();
  return c;
}

Report new_report(const ExperimentConfig& c, std::vector<std::string> columns) {
  Report r;
  r.kind = to_string(c.experiment);
  r.seed = c.seed;
  r.config = to_json(c);
  r.columns = std::move(columns);
  return r;
}

std::uint64_t run_seed(const ExperimentConfig& c, std::size_t run) { return derive_seed(c.seed, run); }

/// One run keeps its own shot-level error; several runs use the spread of
/// the run means.
Estimate combine_runs(const std::vector<Estimate>& per_run) {
  if (per_run.size() == 1) return per_run.front();
  std::vector<double> v;
  v.reserve(per_run.size());
  for (const auto& e : per_run) v.push_back(e.value);
  return mean_estimate(v);
}

template <class F>
Estimate across_runs(std::size_t runs, F&& f) {
  std::vector<Estimate> v;
  v.reserve(runs);
  for (std::size_t r = 0; r < runs; ++r) v.push_back(f(r));
  return combine_runs(v);
}

Estimate neg_log(const Estimate& s) {
  if (!(s.value > 0.0)) return {std::nan(""), std::nan("")};
  return {0.0 - std::log(s.value), s.std_error / s.value};
}

std::vector<Qubit> prefix(unsigned l_a) {
  std::vector<Qubit> v(l_a);
  std::iota(v.begin(), v.end(), 0u);
  return v;
}

// Per-row values of the three estimators, mirroring estimators.cpp.
double swap_value(std::uint64_t row, unsigned L, unsigned l_a) {
  const std::uint64_t both = row & (row >> L) & ((std::uint64_t{1} << l_a) - 1);
  return (std::popcount(both) & 1) ? -1.0 : 1.0;
}

double parity_value(std::uint64_t row, unsigned l_a) {
  return (std::popcount(row & ((std::uint64_t{1} << l_a) - 1)) & 1) ? -1.0 : 1.0;
}

Complex modified_value(std::uint64_t row, unsigned L, unsigned l_a) {
  const auto& table = modified_swap_decode_table();
  Complex prod{1.0, 0.0};
  for (unsigned i = 0; i < l_a; ++i) prod *= table[((row >> i) & 1) | (((row >> (L + i)) & 1) << 1)];
  return prod;
}

template <class T, class F>
T expectation(const std::vector<double>& dist, F&& f) {
  T e{};
  for (std::size_t row = 0; row < dist.size(); ++row) {
    if (dist[row] != 0.0) e += dist[row] * f(static_cast<std::uint64_t>(row));
  }
  return e;
}

bool agrees(double est, double se, double oracle) {
  return std::abs(est - oracle) <= std::max(3.0 * se, 1e-9);
}

/// Share of rows whose estimate lies within 3 SE of the oracle.
Json agreement(const Report& r) {
  const std::size_t e = r.column("estimate"), s = r.column("stderr"), o = r.column("oracle");
  std::size_t total = 0, within = 0;
  for (const auto& row : r.rows) {
    const double est = as_double(row[e]), se = as_double(row[s]), orc = as_double(row[o]);
    if (std::isnan(est) || std::isnan(se) || std::isnan(orc)) continue;
    ++total;
    within += agrees(est, se, orc);
  }
  return {{"compared", total},
          {"within_3se", within},
          {"fraction", total ? static_cast<double>(within) / static_cast<double>(total) : 1.0}};
}

MixedState resource_state(const ExperimentConfig& c) {
  const Circuit prep = state_prep_circuit(c.state, c.L, c.boundary);
  if (c.noise.has_gate_noise()) return final_mixed_state(prep, c.noise);
  return MixedState::from_pure(final_state(prep));
}

SymmetryAction default_action(unsigned L, Boundary boundary, unsigned l_a) {
  const auto sites = prefix(l_a);
  if (boundary == Boundary::open) {
    return SymmetryAction::z2(sublattice_parity(L, boundary, ParityKind::subsystem, l_a).restricted(sites));
  }
  return SymmetryAction::z2xz2(restricted_parity(L, l_a, true).restricted(sites),
                               restricted_parity(L, l_a, false).restricted(sites));
}

// The symmetric bias flips the measured bit both ways: a Pauli flip
// conjugated into the measurement frame.
KrausChannel symmetric_bias_channel(double eps, char basis) {
  const Eigen::MatrixXcd flip = basis == 'Z' ? Gate::x(0).matrix() : Gate::z(0).matrix();
  return KrausChannel({std::sqrt(1.0 - eps) * Eigen::MatrixXcd::Identity(2, 2), std::sqrt(eps) * flip},
                      std::string("symmetric_bias_") + basis);
}

}  // namespace

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; !stop && (i = next++) < n;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          stop = true;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

Report run_entropy(const ExperimentConfig& cfg, unsigned threads) {
  const ExperimentConfig c = checked(cfg, Experiment::entropy);
  const unsigned L = c.L;
  const Circuit circ = swap_test_circuit(L, L, c.boundary, c.state);

  std::vector<std::vector<Estimate>> per_run(c.runs);
  parallel_for(c.runs, threads, [&](std::size_t r) {
    const ShotRecord rec = execute(circ, c.noise, c.shots, run_seed(c, r));
    for (unsigned l_a = 1; l_a <= L; ++l_a) per_run[r].push_back(estimate_S2_from_shots(rec, l_a));
  });
  const auto dist = exact_distribution(circ, c.noise);

  Report rep = new_report(c, {"L_A", "quantity", "estimate", "stderr", "oracle"});
  for (unsigned l_a = 1; l_a <= L; ++l_a) {
    const Estimate s2 = across_runs(c.runs, [&](std::size_t r) { return per_run[r][l_a - 1]; });
    const double oracle =
        expectation<double>(dist, [&](std::uint64_t row) { return swap_value(row, L, l_a); });
    const Estimate nl = neg_log(s2);
    rep.rows.push_back({integer(l_a), "S2", num(s2.value), num(s2.std_error), clean(oracle)});
    rep.rows.push_back({integer(l_a), "neg_log_S2", num(nl.value), num(nl.std_error),
                        oracle > 0.0 ? clean(0.0 - std::log(oracle)) : Cell{}});
  }
  rep.diagnostics["agreement"] = agreement(rep);
  return rep;
}

Report run_resolved(const ExperimentConfig& cfg, unsigned threads) {
  const ExperimentConfig c = checked(cfg, Experiment::resolved);
  const unsigned L = c.L;
  const Circuit plain = swap_test_circuit(L, L, Boundary::open, c.state);
  const Circuit modified = modified_swap_test_circuit(L, L, c.state, Boundary::open);
  const Circuit prob = symmetry_resolved_probability_circuit(L, c.state, Boundary::open);

  std::vector<std::vector<ResolvedEstimate>> per_run(c.runs);
  parallel_for(c.runs, threads, [&](std::size_t r) {
    const std::uint64_t s = run_seed(c, r);
    const ShotRecord rp = execute(plain, c.noise, c.shots, derive_seed(s, 0));
    const ShotRecord rm = execute(modified, c.noise, c.shots, derive_seed(s, 1));
    const ShotRecord rq = execute(prob, c.noise, c.shots, derive_seed(s, 2));
    for (unsigned l_a = 1; l_a <= L; ++l_a) per_run[r].push_back(estimate_resolved_from_shots(rp, rm, rq, l_a));
  });
  const auto d_plain = exact_distribution(plain, c.noise);
  const auto d_mod = exact_distribution(modified, c.noise);
  const auto d_prob = exact_distribution(prob, c.noise);

  Report rep = new_report(c, {"L_A", "sector", "moment", "estimate", "stderr", "oracle"});
  Json sectors = Json::array();
  bool degenerate = true, degenerate_oracle = true;
  for (unsigned l_a = 1; l_a <= L; ++l_a) {
    auto pick = [&](auto member) {
      return across_runs(c.runs, [&](std::size_t r) { return per_run[r][l_a - 1].*member; });
    };
    const Estimate s1p = pick(&ResolvedEstimate::s1_plus), s1m = pick(&ResolvedEstimate::s1_minus);
    const Estimate s2p = pick(&ResolvedEstimate::s2_plus), s2m = pick(&ResolvedEstimate::s2_minus);
    // Sector gaps: S1(+) - S1(-) = <P_A>, S2(+) - S2(-) = Re Tr[rho^2 P_A].
    const Estimate g1 = across_runs(c.runs, [&](std::size_t r) {
      const auto& e = per_run[r][l_a - 1];
      return Estimate{e.s1_plus.value - e.s1_minus.value, 2.0 * e.s1_plus.std_error};
    });
    const Estimate g2 = across_runs(c.runs, [&](std::size_t r) { return per_run[r][l_a - 1].trace_rho2_p.real; });
    double imag = 0.0;
    for (std::size_t r = 0; r < c.runs; ++r) imag += per_run[r][l_a - 1].trace_rho2_p.imag;
    imag /= static_cast<double>(c.runs);

    const double e_par = expectation<double>(d_prob, [&](std::uint64_t row) { return parity_value(row, l_a); });
    const double e_s2 = expectation<double>(d_plain, [&](std::uint64_t row) { return swap_value(row, L, l_a); });
    const Complex e_tr =
        expectation<Complex>(d_mod, [&](std::uint64_t row) { return modified_value(row, L, l_a); });

    rep.rows.push_back({integer(l_a), "+", integer(1), num(s1p.value), num(s1p.std_error), clean((1 + e_par) / 2)});
    rep.rows.push_back({integer(l_a), "+", integer(2), num(s2p.value), num(s2p.std_error),
                        clean((e_s2 + e_tr.real()) / 2)});
    rep.rows.push_back({integer(l_a), "-", integer(1), num(s1m.value), num(s1m.std_error), clean((1 - e_par) / 2)});
    rep.rows.push_back({integer(l_a), "-", integer(2), num(s2m.value), num(s2m.std_error),
                        clean((e_s2 - e_tr.real()) / 2)});

    const double tol = c.degeneracy_tol;
    const bool deg = std::abs(g1.value) <= std::max(3 * g1.std_error, tol) &&
                     std::abs(g2.value) <= std::max(3 * g2.std_error, tol);
    const bool deg_oracle = std::abs(e_par) <= tol && std::abs(e_tr.real()) <= tol;
    if (l_a < L) {
      degenerate = degenerate && deg;
      degenerate_oracle = degenerate_oracle && deg_oracle;
    }
    sectors.push_back({{"L_A", l_a},
                       {"s1_gap", g1.value},
                       {"s1_gap_stderr", g1.std_error},
                       {"s2_gap", g2.value},
                       {"s2_gap_stderr", g2.std_error},
                       {"imag_trace_rho2_p", imag},
                       {"oracle_s1_gap", std::abs(e_par) < 1e-12 ? 0.0 : e_par},
                       {"oracle_s2_gap", std::abs(e_tr.real()) < 1e-12 ? 0.0 : e_tr.real()},
                       {"degenerate", deg}});
  }
  rep.diagnostics["sectors"] = std::move(sectors);
  // Over the proper subsystems 1..L-1.
  rep.diagnostics["degenerate"] = degenerate;
  rep.diagnostics["degenerate_oracle"] = degenerate_oracle;
  rep.diagnostics["agreement"] = agreement(rep);
  return rep;
}

Report run_teleport(const ExperimentConfig& cfg, unsigned threads) {
  const ExperimentConfig c = checked(cfg, Experiment::teleport);
  struct Point {
    double alpha, beta;
  };
  std::vector<Point> points;
  for (double a : c.teleport.alphas) {
    for (BetaMode m : c.teleport.modes) {
      const double b = m == BetaMode::plus ? a : -a;
      points.push_back({a, b == 0.0 ? 0.0 : b});
    }
  }
  constexpr std::array<char, 3> kBases = {'X', 'Y', 'Z'};
  const auto correction = PauliCorrection::wire();
  const std::size_t n_states = kAllInputStates.size();

  // circuits[p][s * 3 + b]
  std::vector<std::vector<Circuit>> circuits(points.size());
  unsigned outcome_bit = 0;
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (InputState s : kAllInputStates) {
      for (char basis : kBases) {
        Circuit circ = teleportation_circuit(input_prep_gates(s), points[p].alpha, points[p].beta,
                                             c.teleport.kind, c.teleport.angle_sign);
        outcome_bit = append_basis_measurement(circ, kTeleportOutput, basis);
        circuits[p].push_back(std::move(circ));
      }
    }
  }

  // tomo[p][run][state]
  std::vector<std::vector<std::vector<TomographyResult>>> tomo(
      points.size(), std::vector<std::vector<TomographyResult>>(c.runs));
  parallel_for(points.size() * c.runs, threads, [&](std::size_t job) {
    const std::size_t p = job / c.runs, r = job % c.runs;
    const std::uint64_t s0 = run_seed(c, r);
    for (std::size_t s = 0; s < n_states; ++s) {
      std::array<ShotRecord, 3> rec;
      for (std::size_t b = 0; b < 3; ++b) {
        const std::size_t k = s * 3 + b;
        rec[b] = execute(circuits[p][k], c.noise, c.shots, derive_seed(s0, p * 3 * n_states + k));
      }
      tomo[p][r].push_back(tomography(rec[0], rec[1], rec[2], outcome_bit, correction));
    }
  });
  std::vector<std::array<double, 6>> oracle(points.size());
  parallel_for(points.size(), threads, [&](std::size_t p) {
    for (std::size_t s = 0; s < n_states; ++s) {
      std::array<double, 3> bloch{};
      for (std::size_t b = 0; b < 3; ++b) {
        bloch[b] = corrected_expectation(exact_distribution(circuits[p][s * 3 + b], c.noise), kBases[b],
                                         outcome_bit, correction);
      }
      oracle[p][s] = fidelity(bloch, kAllInputStates[s]);
    }
  });

  Report rep = new_report(c, {"alpha", "beta", "state", "estimate", "stderr", "oracle"});
  Json diag = Json::array();
  for (std::size_t p = 0; p < points.size(); ++p) {
    std::vector<Estimate> fid;
    double max_norm = 0.0;
    for (std::size_t s = 0; s < n_states; ++s) {
      const InputState in = kAllInputStates[s];
      fid.push_back(across_runs(c.runs, [&](std::size_t r) { return corrected_fidelity(tomo[p][r][s], in); }));
      std::array<double, 3> mean{};
      for (std::size_t r = 0; r < c.runs; ++r) {
        const auto b = tomo[p][r][s].bloch();
        for (int k = 0; k < 3; ++k) mean[k] += b[k] / static_cast<double>(c.runs);
      }
      max_norm = std::max(max_norm, std::hypot(mean[0], mean[1], mean[2]));
      rep.rows.push_back({num(points[p].alpha), num(points[p].beta), to_string(in), num(fid[s].value),
                          num(fid[s].std_error), clean(oracle[p][s])});
    }
    const auto arg = static_cast<std::size_t>(
        std::min_element(fid.begin(), fid.end(), [](const Estimate& a, const Estimate& b) {
          return a.value < b.value;
        }) - fid.begin());
    const double oracle_min = *std::min_element(oracle[p].begin(), oracle[p].end());
    rep.rows.push_back({num(points[p].alpha), num(points[p].beta), "min", num(fid[arg].value),
                        num(fid[arg].std_error), clean(oracle_min)});
    diag.push_back({{"alpha", points[p].alpha},
                    {"beta", points[p].beta},
                    {"argmin", to_string(kAllInputStates[arg])},
                    {"max_bloch_norm", max_norm}});
  }
  rep.diagnostics["points"] = std::move(diag);
  rep.diagnostics["agreement"] = agreement(rep);
  return rep;
}

Report run_classify(const ExperimentConfig& cfg, unsigned threads) {
  const ExperimentConfig c = checked(cfg, Experiment::classify);
  const unsigned L = c.L;
  const MixedState rho = MixedState::from_pure(final_state(state_prep_circuit(c.state, L, c.boundary)));
  const auto frame = parity_frame(c.state, L, c.boundary);

  // On a ring, a one-site complement lets a sublattice parity fit inside A,
  // which already anticommutes with the edge flips; stop at L - 2 there.
  const std::size_t per_entry = c.boundary == Boundary::open ? L - 1 : L - 2;
  std::vector<Classification> results(c.classify.size() * per_entry);
  parallel_for(results.size(), threads, [&](std::size_t job) {
    const ClassifyEntry& entry = c.classify[job / per_entry];
    const unsigned l_a = static_cast<unsigned>(job % per_entry) + 1;
    ClassificationContext ctx{rho, prefix(l_a), edge_flip_operators(L, c.boundary, l_a), std::nullopt,
                              c.commutator_tol};
    ctx.sector_operator = sublattice_parity(L, c.boundary, ParityKind::subsystem, l_a).restricted(prefix(l_a));
    if (entry.kind == ClassifyEntry::Kind::readout_bias) {
      std::vector<ChannelApplication> apps;
      for (Qubit q = 0; q < L; ++q) {
        apps.push_back({entry.bias.variant == BiasVariant::asymmetric
                            ? readout_bias_channel(entry.bias.epsilon, frame[q])
                            : symmetric_bias_channel(entry.bias.epsilon, frame[q]),
                        {q}});
      }
      results[job] = classify_channel(apps, ctx);
    } else {
      const auto ch = make_channel(entry.channel);
      results[job] = classify_channel(ch ? *ch : KrausChannel::identity(1), ctx);
    }
  });

  Report rep = new_report(c, {"channel", "parameter", "L_A", "verdict", "witness", "sector_gap"});
  for (std::size_t job = 0; job < results.size(); ++job) {
    const ClassifyEntry& entry = c.classify[job / per_entry];
    const auto& res = results[job];
    rep.rows.push_back({entry.label(), num(entry.parameter()), integer(job % per_entry + 1),
                        to_string(res.verdict), clean(res.witness),
                        res.sector_gap ? clean(*res.sector_gap) : Cell{}});
  }
  rep.diagnostics["tolerance"] = c.commutator_tol;
  return rep;
}

Report run_oracle(const ExperimentConfig& cfg, unsigned threads) {
  const ExperimentConfig c = checked(cfg, Experiment::oracle);
  const unsigned L = c.L;
  std::vector<unsigned> sizes;
  if (c.symmetry) {
    sizes.push_back(c.symmetry->l_a);
  } else {
    for (unsigned l_a = 1; l_a <= L; ++l_a) sizes.push_back(l_a);
  }
  const MixedState rho = resource_state(c);

  std::vector<EntanglementReport> reports(sizes.size());
  parallel_for(sizes.size(), threads, [&](std::size_t i) {
    const unsigned l_a = sizes[i];
    const MixedState rho_a = partial_trace(rho, prefix(l_a));
    const SymmetryAction action = c.symmetry ? c.symmetry->action() : default_action(L, c.boundary, l_a);
    reports[i] = entanglement_report(rho_a, l_a, action, c.max_moment, c.degeneracy_tol);
  });

  Report rep = new_report(c, {"L_A", "quantity", "index", "sector", "value"});
  Json diag = Json::array();
  for (const auto& er : reports) {
    const Cell la = integer(er.l_a);
    for (std::size_t i = 0; i < er.spectrum.size(); ++i) {
      rep.rows.push_back({la, "eigenvalue", integer(i + 1), Cell{}, clean(er.spectrum[i])});
    }
    for (const auto& [n, s] : er.renyi) rep.rows.push_back({la, "renyi", integer(n), Cell{}, clean(s)});
    for (const auto& [key, v] : er.resolved) {
      rep.rows.push_back({la, "resolved", integer(key.second), er.sector_labels.at(key.first), clean(v)});
    }
    const DegeneracyResult d = degeneracy_check(er, c.degeneracy_tol);
    rep.rows.push_back({la, "degeneracy_gap", integer(d.worst_moment), Cell{}, clean(d.gap)});
    diag.push_back({{"L_A", er.l_a}, {"degenerate", d.degenerate}, {"sectors", er.sector_labels}});
  }
  rep.diagnostics["subsystems"] = std::move(diag);
  return rep;
}

Report run_experiment(const ExperimentConfig& cfg, unsigned threads) {
  switch (cfg.experiment) {
    case Experiment::entropy: return run_entropy(cfg, threads);
    case Experiment::resolved: return run_resolved(cfg, threads);
    case Experiment::teleport: return run_teleport(cfg, threads);
    case Experiment::classify: return run_classify(cfg, threads);
    case Experiment::oracle: return run_oracle(cfg, threads);
  }
  throw std::invalid_argument("unknown experiment");
}

}  // namespace sptprobe::harness
