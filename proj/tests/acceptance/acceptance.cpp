// Copyright 2026 The wigner-dfe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.
//
//   acceptance <path-to-dfe> [--only N]

#include "../oracle.hpp"

#include "wdfe/errors.hpp"
#include "wdfe/harness.hpp"
#include "wdfe/magic.hpp"
#include "wdfe/stabilizer.hpp"
#include "wdfe/targets.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace wdfe;
namespace fs = std::filesystem;

namespace {

// Collects failed checks with a short reason; the first few are reported.
class Checker {
public:
    void expect(bool ok, const std::string& what)
    {
        ++checks_;
        if (!ok) {
            if (failures_.size() < 5) {
                failures_.push_back(what);
            }
            ++failed_;
        }
    }
    bool ok() const { return failed_ == 0; }
    std::string summary() const
    {
        std::ostringstream s;
        s << checks_ << " checks";
        if (failed_ > 0) {
            s << ", " << failed_ << " failed:";
            for (const std::string& f : failures_) {
                s << " [" << f << "]";
            }
        }
        return s.str();
    }

private:
    std::size_t checks_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> failures_;
};

std::string str(double x)
{
    std::ostringstream s;
    s.precision(6);
    s << x;
    return s.str();
}

std::vector<Matrix> random_kraus(std::size_t dim, int count, RngStream& rng)
{
    const Matrix big = random_unitary(dim * static_cast<std::size_t>(count), rng);
    std::vector<Matrix> k;
    for (int i = 0; i < count; ++i) {
        k.push_back(big.block(static_cast<Eigen::Index>(i * dim), 0, static_cast<Eigen::Index>(dim),
                              static_cast<Eigen::Index>(dim)));
    }
    return k;
}

// ---------------------------------------------------------------------------
// 1. Structural identities.

std::string criterion_structural(Checker& c)
{
    RngStream rng(101);
    for (int n : {1, 2}) {
        for (int d : {3, 5, 7}) {
            const SystemSpec s(d, n);
            const std::string tag = s.to_string();
            const PhaseSpace& space = *PhaseSpace::shared(s);
            const oracle::DensePhaseSpace ref(d, n);
            const std::size_t P = s.points();
            const auto D = static_cast<double>(s.dim());

            for (std::size_t u = 0; u < P; ++u) {
                const Matrix& a = ref.A[u];
                // The cached family equals T_u A_0 T_u^dagger built densely.
                c.expect(max_abs(space.point_operator(u).dense() - a) <= 1e-10, tag + " cache vs dense A_u");
                c.expect(hermiticity_residual(a) <= 1e-10, tag + " Hermiticity");
                c.expect(std::abs(a.trace() - Complex(1.0)) <= 1e-10, tag + " unit trace");
                const Eigen::SelfAdjointEigenSolver<Matrix> eig(a, Eigen::EigenvaluesOnly);
                c.expect(eig.eigenvalues().cwiseAbs().maxCoeff() <= 1.0 + 1e-10, tag + " operator norm");
            }
            // Orthogonality over all pairs from the monomial form: A_u has
            // one entry per column, so tr[A_u A_v] is a sum over matches.
            for (std::size_t u = 0; u < P; ++u) {
                const MonomialMatrix& au = space.point_operator(u);
                for (std::size_t v = 0; v < P; ++v) {
                    const MonomialMatrix& av = space.point_operator(v);
                    Complex t = 0.0;
                    for (std::size_t j = 0; j < au.dim(); ++j) {
                        const std::uint32_t i = au.target[j];
                        if (av.target[i] == j) {
                            t += av.coeff[i] * au.coeff[j];
                        }
                    }
                    c.expect(std::abs(t - Complex(u == v ? D : 0.0)) <= 1e-10, tag + " orthogonality");
                }
            }
            // Reconstruction, density bounds and Lemma 2.
            for (int trial = 0; trial < 5; ++trial) {
                const Matrix h = random_hermitian(s.dim(), rng);
                const WignerFunction wh = wigner_of_operator(space, h);
                const auto expect_h = ref.wigner(h);
                double diff = 0.0;
                for (std::size_t u = 0; u < P; ++u) {
                    diff = std::max(diff, std::abs(wh.values(static_cast<Eigen::Index>(u)) - expect_h[u]));
                }
                c.expect(diff <= 1e-10, tag + " Wigner vs dense trace");
                c.expect(max_abs(reconstruct(space, wh) - h) <= 1e-9, tag + " reconstruction");

                const Matrix rho = random_density(s.dim(), rng);
                const WignerFunction wr = wigner_of_operator(space, rho);
                c.expect(std::abs(wr.values.sum() - 1.0) <= 1e-9, tag + " density sum");
                c.expect(wr.values.cwiseAbs().maxCoeff() <= 1.0 / D + 1e-12, tag + " density bound");

                const Vector psi = random_state(s.dim(), rng);
                const WignerFunction wp = wigner_of_state(space, psi);
                c.expect(std::abs(D * wp.values.squaredNorm() - 1.0) <= 1e-9, tag + " purity identity");
                const double dense = psi.dot(rho * psi).real();
                c.expect(std::abs(wigner_inner_product(wp, wr) - dense) <= 1e-9, tag + " overlap formula");
            }
            // Channel column normalization.
            const std::vector<QuantumChannel> channels = {
                QuantumChannel::identity(s), QuantumChannel::depolarizing(s, 0.1),
                QuantumChannel::unitary(s, random_unitary(s.dim(), rng)), QuantumChannel(s, random_kraus(s.dim(), 3, rng))};
            for (const QuantumChannel& ch : channels) {
                const ChannelWigner cw = wigner_of_channel(space, ch);
                const double worst = (cw.values.colwise().sum().array() - 1.0).abs().maxCoeff();
                c.expect(worst <= 1e-9, tag + " column sums " + str(worst));
            }
        }
    }
    return "d in {3,5,7}, n in {1,2}";
}

// ---------------------------------------------------------------------------
// 2. Hudson.

std::string criterion_hudson(Checker& c)
{
    RngStream rng(202);
    std::ostringstream note;
    for (auto [n, expected] : {std::pair{1, std::size_t{12}}, std::pair{2, std::size_t{360}}}) {
        const SystemSpec s(3, n);
        const oracle::DensePhaseSpace ref(3, n);
        const auto D = static_cast<double>(s.dim());
        const auto states = enumerate_stabilizer_states(s);
        c.expect(states.size() == expected, s.to_string() + " count " + std::to_string(states.size()));
        for (const StabilizerState& st : states) {
            // Dense oracle Wigner function, not the library's.
            const auto w = ref.wigner(projector(st.vector));
            std::size_t support = 0;
            bool values_ok = true;
            for (double x : w) {
                const bool zero = std::abs(x) <= 1e-10;
                const bool full = std::abs(x - 1.0 / D) <= 1e-10;
                values_ok = values_ok && (zero || full);
                support += full;
            }
            c.expect(values_ok, s.to_string() + " values in {0, 1/D}");
            c.expect(support == s.dim(), s.to_string() + " support size");
        }
        for (int i = 0; i < 50; ++i) {
            const auto w = ref.wigner(projector(random_state(s.dim(), rng)));
            c.expect(*std::min_element(w.begin(), w.end()) < -1e-10, s.to_string() + " random state negativity");
        }
        note << states.size() << (n == 1 ? " + " : "");
    }
    note << " stabilizer states, 100 random states";
    return note.str();
}

// ---------------------------------------------------------------------------
// 3. Magic measures.

std::string criterion_magic(Checker& c)
{
    RngStream rng(303);
    const SystemSpec s(3, 1);
    const SystemSpec s2(3, 2);
    const PhaseSpace& space = *PhaseSpace::shared(s);
    const PhaseSpace& space2 = *PhaseSpace::shared(s2);

    // State library: stabilizer states, named states, random pure and mixed states.
    std::vector<std::pair<std::string, Matrix>> library;
    std::vector<Vector> pure;
    for (const SystemSpec& sys : {s, s2}) {
        for (const StabilizerState& st : enumerate_stabilizer_states(sys)) {
            pure.push_back(st.vector);
        }
        for (const std::string& name : named_state_names()) {
            pure.push_back(named_state(sys, name));
        }
        for (int i = 0; i < 50; ++i) {
            pure.push_back(random_state(sys.dim(), rng));
        }
        const auto D = static_cast<double>(sys.dim());
        library.emplace_back("maximally mixed", Matrix::Identity(sys.dim(), sys.dim()) / D);
        for (int i = 0; i < 20; ++i) {
            library.emplace_back("random density", random_density(sys.dim(), rng));
            const Vector t = named_state(sys, "strange_state");
            library.emplace_back("depolarized strange", prepare_state(sys, t, NoiseModel::depolarizing(0.05 * i)));
        }
    }
    for (const Vector& v : pure) {
        library.emplace_back("pure", projector(v));
    }
    std::size_t positive = 0;
    for (const auto& [name, rho] : library) {
        const PhaseSpace& sp = rho.rows() == 3 ? space : space2;
        const WignerFunction w = wigner_of_operator(sp, rho);
        const bool nonneg = w.values.minCoeff() >= -1e-10;
        const double mana = mana_state(w);
        positive += nonneg;
        c.expect((mana == 0.0) == nonneg, name + ": mana zero iff Wigner-positive");
    }
    for (const Vector& v : pure) {
        const PhaseSpace& sp = v.size() == 3 ? space : space2;
        const WignerFunction w = wigner_of_state(sp, v);
        c.expect(mana_state(w) <= wigner_rank_state(w).log_wigner_rank + 1e-9, "mana <= chi_log");
    }

    // Channel faithfulness over the whole group plus random unitaries.
    const auto group = clifford_group(s, default_generators(s));
    c.expect(group.size() == 216, "group size " + std::to_string(group.size()));
    for (const CliffordElement& g : group) {
        const MagicReport r = wigner_rank_channel(wigner_of_channel(space, QuantumChannel::unitary(s, g.matrix)));
        c.expect(r.log_wigner_rank == 0.0 && is_clifford(space, g.matrix), "Clifford element has chi_log 0");
    }
    for (int i = 0; i < 50; ++i) {
        const Matrix u = random_unitary(3, rng);
        const MagicReport r = wigner_rank_channel(wigner_of_channel(space, QuantumChannel::unitary(s, u)));
        c.expect(r.log_wigner_rank > 0.0 && !is_clifford(space, u), "random unitary has chi_log > 0");
    }

    // Tensor additivity: integer ranks multiply.
    for (int i = 0; i < 10; ++i) {
        const Vector a = i % 2 ? random_state(3, rng) : named_state(s, "t_state");
        const Vector b = i % 3 ? random_state(3, rng) : named_state(s, "zero");
        const MagicReport ra = wigner_rank_state(wigner_of_state(space, a));
        const MagicReport rb = wigner_rank_state(wigner_of_state(space, b));
        const MagicReport rab = wigner_rank_state(wigner_of_state(space2, kron(a, b)));
        c.expect(rab.wigner_rank == ra.wigner_rank * rb.wigner_rank, "state rank multiplies");
        c.expect(std::abs(rab.log_wigner_rank - ra.log_wigner_rank - rb.log_wigner_rank) <= 1e-12,
                 "state chi_log adds");

        const Matrix ua = i % 2 ? group[static_cast<std::size_t>(i * 17)].matrix : t_gate(3);
        const Matrix ub = i % 3 ? random_unitary(3, rng) : t_gate(3) * fourier_gate(3);
        const auto cr = [&](const PhaseSpace& sp, const Matrix& u) {
            return wigner_rank_channel(wigner_of_channel(sp, QuantumChannel::unitary(sp.system(), u)));
        };
        const MagicReport ca = cr(space, ua);
        const MagicReport cb = cr(space, ub);
        const MagicReport cab = cr(space2, kron(ua, ub));
        c.expect(cab.wigner_rank == ca.wigner_rank * cb.wigner_rank, "channel rank multiplies");
        c.expect(std::abs(cab.log_wigner_rank - ca.log_wigner_rank - cb.log_wigner_rank) <= 1e-12,
                 "channel chi_log adds");
    }

    // Subadditivity under composition; pairs mix Haar unitaries with
    // Clifford-dressed T gates so that ranks are not all maximal.
    for (int i = 0; i < 100; ++i) {
        auto draw = [&]() -> Matrix {
            if (rng.uniform() < 0.5) {
                return random_unitary(3, rng);
            }
            const Matrix& g1 = group[rng.next_u64() % group.size()].matrix;
            const Matrix& g2 = group[rng.next_u64() % group.size()].matrix;
            return g1 * t_gate(3) * g2;
        };
        const Matrix u1 = draw();
        const Matrix u2 = draw();
        const auto chi = [&](const Matrix& u) {
            return wigner_rank_channel(wigner_of_channel(space, QuantumChannel::unitary(s, u))).log_wigner_rank;
        };
        c.expect(chi(u1 * u2) <= chi(u1) + chi(u2) + 1e-9, "composition subadditivity");
    }
    return std::to_string(library.size()) + " library states (" + std::to_string(positive) +
           " Wigner-positive), 216 Clifford + 50 random unitaries, 100 composed pairs";
}

// ---------------------------------------------------------------------------
// 4. Estimator coverage.

struct CoverageCase {
    std::string protocol;
    Json target;
    double noise_p;
    std::string backend = "bernoulli";
};

std::string criterion_coverage(Checker& c)
{
    const std::vector<CoverageCase> cases = {
        {"state_l2", {{"kind", "named"}, {"name", "zero"}}, 0.3},
        {"state_l2", {{"kind", "named"}, {"name", "t_state"}}, 0.3},
        {"state_l1", {{"kind", "named"}, {"name", "strange_state"}}, 0.3},
        {"state_stabilizer", {{"kind", "stabilizer_index"}, {"index", 5}}, 0.3},
        {"channel_l2", {{"kind", "named"}, {"name", "identity"}}, 0.1},
        {"channel_l2", {{"kind", "named"}, {"name", "t_gate"}}, 0.1, "physical"},
        {"channel_l1", {{"kind", "named"}, {"name", "t_gate"}}, 0.1},
        {"channel_l1", {{"kind", "named"}, {"name", "t_gate"}}, 0.1, "physical"},
        {"channel_clifford", {{"kind", "named"}, {"name", "fourier"}}, 0.1},
        {"channel_clifford", {{"kind", "named"}, {"name", "fourier"}}, 0.1, "physical"},
    };
    std::ostringstream note;
    double worst = 1.0;
    std::uint64_t seed = 4000;
    for (const CoverageCase& k : cases) {
        const Json cfg = {{"system", {{"d", 3}, {"n", 1}}},
                          {"protocol", k.protocol},
                          {"target", k.target},
                          {"noise", {{"kind", "depolarizing"}, {"p", k.noise_p}}},
                          {"epsilon", 0.2},
                          {"delta", 0.2},
                          {"seed", seed++},
                          {"trials", 200},
                          {"backend", k.backend}};
        const Experiment e = parse_experiment(cfg);
        const auto rows = run_trials(e, 1);
        double within = 0.0, sum = 0.0, sq = 0.0;
        for (const TrialRow& r : rows) {
            within += r.within_epsilon;
            sum += r.estimate;
        }
        const double n = static_cast<double>(rows.size());
        const double mean = sum / n;
        for (const TrialRow& r : rows) {
            sq += (r.estimate - mean) * (r.estimate - mean);
        }
        const double se = std::sqrt(sq / (n - 1.0)) / std::sqrt(n);
        const double exact = rows.front().exact;
        const double coverage = within / n;
        worst = std::min(worst, coverage);
        const std::string tag = k.protocol + "/" + k.target.value("name", "stab") + "/" + k.backend;
        c.expect(coverage >= 0.70, tag + " coverage " + str(coverage));
        c.expect(std::abs(mean - exact) <= 4.0 * se || (se == 0.0 && mean == exact),
                 tag + " mean " + str(mean) + " vs " + str(exact) + " se " + str(se));
    }
    note << cases.size() << " protocol/target/backend cases x 200 runs, worst coverage " << str(worst);
    return note.str();
}

// ---------------------------------------------------------------------------
// 5. Shot-schedule exactness.

std::uint64_t ceil_u(double x) { return static_cast<std::uint64_t>(std::ceil(x)); }

std::string criterion_schedule(Checker& c)
{
    RngStream rng(505);
    const SystemSpec s(3, 1);
    const auto space = PhaseSpace::shared(s);
    std::vector<StateTarget> states;
    for (const std::string& name : named_state_names()) {
        states.emplace_back(space, named_state(s, name));
    }
    std::vector<ChannelTarget> channels;
    for (const char* name : {"identity", "fourier", "t_gate"}) {
        channels.emplace_back(space, QuantumChannel::unitary(s, named_unitary(s, name)));
    }
    std::size_t mismatches = 0;
    auto same = [&](std::uint64_t a, std::uint64_t b, const std::string& what) {
        mismatches += a != b;
        c.expect(a == b, what + " " + std::to_string(a) + " vs " + std::to_string(b));
    };
    for (int i = 0; i < 1000; ++i) {
        const double eps = 0.05 + 0.9 * rng.uniform();
        const double delta = 0.01 + 0.98 * rng.uniform();
        const double w = 0.001 + 0.999 * rng.uniform();
        const double lg = std::log(4.0 / delta);
        ProtocolConfig cfg;
        cfg.epsilon = eps;
        cfg.delta = delta;

        const StateTarget& st = states[static_cast<std::size_t>(i) % states.size()];
        const ChannelTarget& ct = channels[static_cast<std::size_t>(i) % channels.size()];
        const std::uint64_t k1 = ceil_u(8.0 / (eps * eps * delta));
        const std::uint64_t k2 = ceil_u(8.0 * st.l1() / (eps * eps * delta));
        const std::uint64_t k5 = ceil_u(8.0 * ct.delta() / (eps * eps * delta));
        const std::uint64_t k3 = ceil_u(8.0 * lg / (eps * eps));

        cfg.protocol = Protocol::state_l2;
        same(planned_k(st, cfg), k1, "K P1");
        cfg.protocol = Protocol::state_l1;
        same(planned_k(st, cfg), k2, "K P2");
        cfg.protocol = Protocol::state_stabilizer;
        same(planned_k(st, cfg), k3, "K P3");
        cfg.protocol = Protocol::channel_l2;
        same(planned_k(ct, cfg), k1, "K P4");
        cfg.protocol = Protocol::channel_l1;
        same(planned_k(ct, cfg), k5, "K P5");
        cfg.protocol = Protocol::channel_clifford;
        same(planned_k(ct, cfg), k3, "K P6");

        same(schedule::nk_weighted(eps, delta, k1, 1.0 / 3.0, w / 3.0),
             ceil_u(8.0 * (1.0 / 3.0) * (1.0 / 3.0) / (k1 * (w / 3.0) * (w / 3.0) * eps * eps) * lg), "N_k P1");
        same(schedule::nk_uniform(eps, delta, k2, st.l1()), ceil_u(8.0 * st.l1() * st.l1() / (k2 * eps * eps) * lg),
             "N_k P2");
        same(schedule::nk_uniform(eps, delta, k3, 1.0), ceil_u(8.0 / (k3 * eps * eps) * lg), "N_k P3/P6");
        same(schedule::nk_weighted(eps, delta, k1, 1.0, w), ceil_u(8.0 / (k1 * w * w * eps * eps) * lg), "N_k P4");
        same(schedule::nk_uniform(eps, delta, k5, ct.delta()),
             ceil_u(8.0 * ct.delta() * ct.delta() / (k5 * eps * eps) * lg), "N_k P5");
    }
    // Engine-level: the N_k recorded by real runs match a replay of the draws.
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const StateTarget& st = states[seed % states.size()];
        StateSampler dev(space, projector(st.psi()));
        ProtocolConfig cfg;
        cfg.protocol = Protocol::state_l2;
        cfg.epsilon = 0.3;
        cfg.delta = 0.3;
        cfg.seed = seed;
        const EstimationResult r = estimate(st, dev, cfg);
        for (std::uint64_t k = 0; k < r.K; ++k) {
            RngStream replay = RngStream::derive(seed, {k});
            const double w = st.wigner().values(static_cast<Eigen::Index>(st.l2_distribution().draw(replay)));
            same(r.Nk[k], ceil_u(8.0 * (1.0 / 3.0) * (1.0 / 3.0) / (r.K * w * w * 0.09) * std::log(4.0 / 0.3)),
                 "run N_k P1");
        }
    }
    same(schedule::k_chebyshev(0.1, 0.05), 16000, "spot K P1");
    same(schedule::k_hoeffding(0.1, 0.05), 3506, "spot K P3");
    return "1000 tuples x 11 formulas + replayed runs, " + std::to_string(mismatches) + " mismatches";
}

// ---------------------------------------------------------------------------
// 6. Sample-complexity bounds.

std::string criterion_bounds(Checker& c)
{
    std::ostringstream note;
    auto base = [](const std::string& protocol, const Json& target, int n) {
        return Json{{"system", {{"d", 3}, {"n", n}}},
                    {"protocol", protocol},
                    {"target", target},
                    {"noise", {{"kind", "depolarizing"}, {"p", protocol.rfind("state", 0) == 0 ? 0.3 : 0.1}}},
                    {"epsilon", 0.3},
                    {"delta", 0.3},
                    {"seed", 606},
                    {"trials", 50}};
    };
    // Three state targets of increasing magic, and three unitaries.
    const std::vector<Json> state_targets = {Json{{"kind", "named"}, {"name", "zero"}},
                                             Json{{"kind", "interpolated"}, {"t", 0.5}},
                                             Json{{"kind", "named"}, {"name", "strange_state"}}};
    const std::vector<Json> unitary_targets = {Json{{"kind", "named"}, {"name", "fourier"}},
                                               Json{{"kind", "named"}, {"name", "t_gate"}}};
    double worst_ratio = 0.0;
    auto check_bound = [&](const Json& cfg) {
        const Experiment e = parse_experiment(cfg);
        const PreparedExperiment p(e);
        const auto rows = run_trials(p, e.trials, 0, 1);
        double mean = 0.0;
        for (const TrialRow& r : rows) {
            mean += static_cast<double>(r.total_samples);
        }
        mean /= static_cast<double>(rows.size());
        const double bound = p.bound_total_samples();
        worst_ratio = std::max(worst_ratio, mean / bound);
        c.expect(mean <= bound * 1.05, cfg.at("protocol").get<std::string>() + " mean " + str(mean) + " > bound " +
                                           str(bound));
    };
    std::vector<double> deltas;
    for (const Json& t : state_targets) {
        check_bound(base("state_l2", t, 1));
        check_bound(base("state_l1", t, 1));
        deltas.push_back(PreparedExperiment(parse_experiment(base("state_l1", t, 1))).magic_delta());
    }
    c.expect(deltas[0] < deltas[1] && deltas[1] < deltas[2], "targets of increasing magic");
    for (const Json& t : unitary_targets) {
        check_bound(base("channel_l2", t, 1));
        check_bound(base("channel_l1", t, 1));
    }
    note << "worst measured/bound " << str(worst_ratio);

    // Protocols 3 and 6: N = K exactly and independent of n.
    for (const char* protocol : {"state_stabilizer", "channel_clifford"}) {
        std::vector<std::uint64_t> totals;
        for (int n : {1, 2}) {
            const Json target = std::string(protocol) == "state_stabilizer"
                                    ? Json{{"kind", "named"}, {"name", "zero"}}
                                    : Json{{"kind", "named"}, {"name", "fourier"}};
            const Experiment e = parse_experiment(base(protocol, target, n));
            const PreparedExperiment p(e);
            for (const TrialRow& r : run_trials(p, e.trials, 0, 1)) {
                c.expect(r.total_samples == r.K && r.K == p.planned_k(), std::string(protocol) + " N = K");
                totals.push_back(r.total_samples);
            }
        }
        c.expect(std::adjacent_find(totals.begin(), totals.end(), std::not_equal_to<>()) == totals.end(),
                 std::string(protocol) + " identical across n");
    }

    // Protocol 2 sample counts are non-decreasing in Delta_psi along the
    // interpolation family.
    Json sweep = base("state_l1", Json{{"kind", "named"}, {"name", "zero"}}, 1);
    sweep["sweep"] = Json{{"axis", "magic_interpolation"},
                          {"values", {0.0, 0.25, 0.5, 0.75, 1.0}},
                          {"trials_per_point", 50}};
    auto rows = run_sweep(parse_sweep(sweep), 1);
    for (const SweepRow& r : rows) {
        c.expect(r.within_bound, "sweep row within bound");
    }
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) { return a.magic_delta < b.magic_delta; });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        c.expect(rows[i].mean_total_samples >= rows[i - 1].mean_total_samples, "monotone in Delta_psi");
    }
    note << "; P2 samples monotone over 5 interpolation points";
    return note.str();
}

// ---------------------------------------------------------------------------
// 7. Oracle cross-validation.

std::string criterion_oracles(Checker& c)
{
    RngStream rng(707);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const SystemSpec s(3, 1 + i % 2);
        const Vector psi = random_state(s.dim(), rng);
        const Matrix rho = random_density(s.dim(), rng);
        const double dense = exact_state_fidelity(psi, rho);
        const double wig = exact_state_fidelity_wigner(*PhaseSpace::shared(s), psi, rho);
        worst = std::max(worst, std::abs(dense - wig));
        c.expect(std::abs(dense - wig) <= 1e-9, "state fidelity routes agree");
    }
    const SystemSpec s(3, 1);
    const PhaseSpace& space = *PhaseSpace::shared(s);
    const double f = exact_channel_fidelity(space, QuantumChannel::identity(s), QuantumChannel::depolarizing(s, 0.1));
    c.expect(std::abs(f - (0.9 + 0.1 / 9.0)) <= 1e-9, "identity vs depolarizing(0.1) " + str(f));
    // Channel routes against the dense Choi oracle.
    for (int i = 0; i < 20; ++i) {
        const Matrix u = random_unitary(3, rng);
        const QuantumChannel lam(s, random_kraus(3, 2, rng), 0.1 * (i % 4));
        const QuantumChannel target = QuantumChannel::unitary(s, u);
        const double ref = oracle::channel_fidelity(u, lam.kraus_operators());
        c.expect(std::abs(exact_channel_fidelity(space, target, lam) - ref) <= 1e-9, "channel Wigner route");
        c.expect(std::abs(exact_channel_fidelity_kraus(target, lam) - ref) <= 1e-9, "channel Kraus route");
    }
    return "100 random state pairs (max gap " + str(worst) + "), F(id, dep 0.1) = " + format_number(f);
}

// ---------------------------------------------------------------------------
// 8. CLI reproducibility.

std::string read_file(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string criterion_reproducibility(Checker& c, const std::string& dfe)
{
    c.expect(fs::exists(dfe), "dfe binary at " + dfe);
    const fs::path dir = fs::temp_directory_path() / "wdfe_acceptance";
    fs::create_directories(dir);
    const std::vector<std::pair<std::string, Json>> configs = {
        {"run", Json::parse(R"({"system":{"d":3,"n":1},"protocol":"state_l1",
            "target":{"kind":"named","name":"strange_state"},"noise":{"kind":"depolarizing","p":0.3},
            "epsilon":0.2,"delta":0.2,"seed":42,"trials":40})")},
        {"run", Json::parse(R"({"system":{"d":3,"n":2},"protocol":"channel_l2",
            "target":{"kind":"named","name":"t_gate"},"noise":{"kind":"unitary_perturbation","strength":0.2,"seed":3},
            "epsilon":0.3,"delta":0.3,"seed":7,"trials":16,"backend":"physical"})")},
        {"sweep", Json::parse(R"({"system":{"d":3,"n":1},"protocol":"state_l2",
            "target":{"kind":"named","name":"zero"},"noise":{"kind":"depolarizing","p":0.3},
            "epsilon":0.3,"delta":0.3,"seed":11,
            "sweep":{"axis":"noise_p","values":[0.1,0.2,0.3],"trials_per_point":12}})")},
    };
    std::size_t compared = 0;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const auto& [mode, cfg] = configs[i];
        const fs::path cfg_path = dir / ("config" + std::to_string(i) + ".json");
        write_text_file(cfg_path.string(), cfg.dump(2));
        std::vector<std::string> outputs;
        for (int workers : {1, 8, 1}) {
            const fs::path out = dir / ("out" + std::to_string(i) + "_" + std::to_string(outputs.size()) + ".csv");
            const std::string cmd = "\"" + dfe + "\" " + mode + " --config \"" + cfg_path.string() + "\" --out \"" +
                                    out.string() + "\" --workers " + std::to_string(workers);
            c.expect(std::system(cmd.c_str()) == 0, "command failed: " + cmd);
            outputs.push_back(read_file(out));
        }
        c.expect(!outputs[0].empty(), "non-empty output");
        c.expect(outputs[0] == outputs[1], mode + " config " + std::to_string(i) + ": 1 vs 8 workers differ");
        c.expect(outputs[0] == outputs[2], mode + " config " + std::to_string(i) + ": repeat differs");
        compared += 3;
    }
    return std::to_string(configs.size()) + " configs, " + std::to_string(compared) +
           " CLI runs at 1/8/1 workers byte-identical";
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-dfe> [--only N]\n";
        return 2;
    }
    const std::string dfe = argv[1];
    int only = 0;
    if (argc >= 4 && std::string(argv[2]) == "--only") {
        only = std::atoi(argv[3]);
    }

    using Fn = std::function<std::string(Checker&)>;
    const std::vector<std::pair<std::string, Fn>> criteria = {
        {"structural identities", criterion_structural},
        {"Hudson", criterion_hudson},
        {"magic measures", criterion_magic},
        {"estimator coverage", criterion_coverage},
        {"shot-schedule exactness", criterion_schedule},
        {"sample-complexity bounds", criterion_bounds},
        {"oracle cross-validation", criterion_oracles},
        {"reproducibility", [&](Checker& c) { return criterion_reproducibility(c, dfe); }},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && static_cast<std::size_t>(only) != i + 1) {
            continue;
        }
        Checker c;
        std::string note;
        const auto start = std::chrono::steady_clock::now();
        try {
            note = criteria[i].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && c.ok();
        std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): " << (c.ok() ? "PASS" : "FAIL") << " | "
                  << note << " | " << c.summary() << " | " << str(secs) << " s" << std::endl;
    }
    return all ? 0 : 1;
}
