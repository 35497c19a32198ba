// Acceptance run: one line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "support.hpp"

using namespace mlink;
using mlink::testing::I64;

namespace {

using E = ExtendedCost<I64>;
using Path = std::vector<Index>;

struct Outcome {
  long checks = 0;
  long failures = 0;
  std::string first;
  std::string extra;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  bool pass() const { return failures == 0 && checks > 0; }
};

// peak cells seen per N by criteria 2 and 6
std::map<Index, std::pair<std::size_t, std::size_t>> g_peaks;

void note_peak(Index n, std::size_t peak) {
  auto [it, fresh] = g_peaks.try_emplace(n, peak, peak);
  if (!fresh) {
    it->second.first = std::min(it->second.first, peak);
    it->second.second = std::max(it->second.second, peak);
  }
}

std::vector<mlink::testing::Named> grid_instances(Index n) { return mlink::testing::small_instances(n, 50); }

std::string tag(const std::string& name, Index n, Index m) {
  return name + " N=" + std::to_string(n) + " M=" + std::to_string(m);
}

Outcome exhaustive_equivalence() {
  Outcome out;
  for (Index n = 4; n <= 12; ++n)
    for (const auto& inst : grid_instances(n)) {
      const auto b = brute_force(inst.cost);
      for (Index m = 1; m <= n - 1; ++m) {
        const auto r = shortest_m_link_path(inst.cost, m);
        out.expect(E(r.path.length) == b.f(m, n) && r.path.links() == m && r.path.front() == 1 &&
                       r.path.back() == n && path_length(inst.cost, std::span<const Index>(r.path.nodes)) == r.path.length,
                   tag(inst.name, n, m));
      }
    }
  return out;
}

Outcome large_equivalence() {
  Outcome out;
  for (Index n : {Index{200}, Index{500}, Index{1000}})
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto o = gen_random_monge<I64>(n, seed);
      const DpTable<I64> table = dp_full(o, 3 * n / 4);
      for (Index m : {Index{2}, n / 4, n / 2, 3 * n / 4, n - 2}) {
        const auto r = shortest_m_link_path(o, m);
        const I64 want = m <= 3 * n / 4 ? table.value(m, n) : dp_full(o, m).value(m, n);
        out.expect(r.path.length == want && r.path.links() == m,
                   tag("random/" + std::to_string(seed), n, m));
        note_peak(n, r.stats.peak_cells);
      }
    }
  return out;
}

// Depth of every node in the minimal and maximal trees of view(lambda).
std::pair<std::vector<Index>, std::vector<Index>> depths(const ContractedView<I64>& view, I64 lambda,
                                                          SptStrategy strategy = SptStrategy::Online) {
  return {all_depths(build_spt(view.with_lambda(lambda), SptMode::Min, strategy)),
          all_depths(build_spt(view.with_lambda(lambda), SptMode::Max, strategy))};
}

Path random_path(std::mt19937_64& rng, Index from, Index to, Index links) {
  Path inner;
  for (Index v = from + 1; v < to; ++v) inner.push_back(v);
  std::shuffle(inner.begin(), inner.end(), rng);
  inner.resize(static_cast<std::size_t>(links - 1));
  std::sort(inner.begin(), inner.end());
  Path p = {from};
  p.insert(p.end(), inner.begin(), inner.end());
  p.push_back(to);
  return p;
}

Outcome window_suite() {
  Outcome out;
  for (Index n = 4; n <= 12; n += 2)
    for (const auto& inst : mlink::testing::small_instances(n, 20, 10))
      for (Index s : {Index{1}, Index{2}}) {
        const ContractedView<I64> view(inst.cost, s, {});
        const auto b = brute_force(view);
        const auto lambdas = mlink::testing::lambda_samples(b);
        std::vector<std::pair<std::vector<Index>, std::vector<Index>>> per_lambda;
        for (I64 lambda : lambdas) {
          per_lambda.push_back(depths(view, lambda));
          const auto& [lo, hi] = per_lambda.back();
          for (Index j = s + 1; j <= n; ++j) {
            const auto k = static_cast<std::size_t>(j);
            for (Index m = 1; m <= j - s; ++m) {
              out.expect((lo[k] <= m) == (E(lambda) <= b.delta(m, j)), "window/min " + tag(inst.name, j, m));
              out.expect((hi[k] >= m) == (E(lambda) >= b.delta(m - 1, j)), "window/max " + tag(inst.name, j, m));
            }
            if (j > s + 1) {
              out.expect(lo[k - 1] <= lo[k] && hi[k - 1] <= hi[k], "depth monotone in n " + inst.name);
            }
          }
        }
        // Larger lambda, deeper trees: d^max(l1) <= d^min(l2) for l1 < l2.
        for (std::size_t a = 0; a + 1 < lambdas.size(); ++a)
          for (Index j = s + 1; j <= n; ++j) {
            const auto k = static_cast<std::size_t>(j);
            out.expect(per_lambda[a].second[k] <= per_lambda[a + 1].first[k], "lambda monotone " + inst.name);
          }
        // Window nesting along every optimal path.
        for (Index j = s + 2; j <= n; ++j)
          for (Index m = 2; m <= j - s; ++m)
            for (const Path& p : b.optimal_paths(m, j))
              for (Index i = 1; i < m; ++i) {
                const auto outer = b.window(i, p[static_cast<std::size_t>(i)]);
                const auto inner = b.window(i + 1, p[static_cast<std::size_t>(i + 1)]);
                out.expect(outer.lo <= inner.lo && inner.hi <= outer.hi, "vertical " + tag(inst.name, j, m));
              }
      }

  std::mt19937_64 rng(2024);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Index n = 12;
    const auto o = seed % 4 == 3 ? mlink::testing::tie_heavy(n, seed) : gen_random_monge<I64>(n, seed);
    for (int t = 0; t < 50; ++t) {
      const Index u0 = std::uniform_int_distribution<Index>(1, 4)(rng);
      const Index v0 = std::uniform_int_distribution<Index>(u0, 5)(rng);
      const Index u_end = std::uniform_int_distribution<Index>(9, n)(rng);
      const Index v_end = std::uniform_int_distribution<Index>(v0 + 1, u_end)(rng);
      const Index m2 = std::uniform_int_distribution<Index>(1, v_end - v0)(rng);
      const Index m1 = std::uniform_int_distribution<Index>(1, std::min(m2, u_end - u0))(rng);
      const Index m = std::uniform_int_distribution<Index>(m1, m2)(rng);
      const Path p = random_path(rng, u0, u_end, m1);
      const Path q = random_path(rng, v0, v_end, m2);
      const Path plus = swap_plus(q, p, m);
      const Path minus = swap_minus(q, p, m);
      auto len = [&](const Path& x) { return path_length(o, std::span<const Index>(x)); };
      out.expect(static_cast<Index>(plus.size()) == m + 1 && static_cast<Index>(minus.size()) == m1 + m2 - m + 1 &&
                     len(plus) + len(minus) <= len(p) + len(q),
                 "swap seed=" + std::to_string(seed));
    }
  }
  return out;
}

Outcome depth_suite() {
  Outcome out;
  std::size_t fewest = SIZE_MAX;
  for (Index n = 4; n <= 12; ++n)
    for (const auto& inst : mlink::testing::small_instances(n, 20, 10)) {
      const auto b = brute_force(inst.cost);
      std::vector<I64> lambdas = mlink::testing::lambda_samples(b);
      for (I64 extra = -50; lambdas.size() < 20; extra += 7) lambdas.push_back(extra);
      fewest = std::min(fewest, lambdas.size());
      const ContractedView<I64> view(inst.cost);
      for (I64 lambda : lambdas)
        for (SptStrategy st : {SptStrategy::Online, SptStrategy::DivideConquer}) {
          const auto [lo, hi] = depths(view, lambda, st);
          for (Index j = 2; j <= n; ++j) {
            const auto k = static_cast<std::size_t>(j);
            out.expect(lo[k] == b.dmin(lambda, j) && hi[k] == b.dmax(lambda, j),
                       "depth " + tag(inst.name, j, 0) + " lambda=" + std::to_string(lambda));
            // equal depths form intervals: a depth never returns after it changed
            if (j > 2) out.expect(lo[k - 1] <= lo[k] && hi[k - 1] <= hi[k], "consecutive " + inst.name);
          }
        }
    }
  out.extra = "fewest lambdas per instance " + std::to_string(fewest);
  return out;
}

Index brute_pivot(const BruteForce<I64>& b, Index m, Index big) {
  for (Index r = b.root() + m + 1; r <= b.size() - big + m; ++r)
    if (b.delta(m, r) <= b.delta(big, b.size())) return r;
  return -1;
}

Outcome probe_suite() {
  Outcome out;
  long hits = 0, contractions = 0;
  for (Index n : {Index{8}, Index{10}, Index{12}})
    for (const auto& inst : mlink::testing::small_instances(n, 20, 10)) {
      const auto original = brute_force(inst.cost);
      for (Index big = 4; big <= n - 2; ++big) {
        const auto target = original.window(big, n);
        for (Index m = 2; m <= big - 2; ++m) {
          const std::string where = tag(inst.name, n, big) + " m=" + std::to_string(m);
          DpWorkspace<I64> ws(n);
          SolverState<I64> state(inst.cost, ws, big);
          const ProbeOutcome<I64> res = probe(state, m);
          if (res.hit) {
            ++hits;
            out.expect(target.contains(res.lambda), "hit outside window " + where);
            continue;
          }
          ++contractions;
          const Index r = brute_pivot(original, m, big);
          out.expect(res.pivot == r && state.s == r - 1 && state.remaining == big - m, "pivot " + where);
          const ContractedView<I64> next = state.view();
          out.expect(verify_submodular(next, CheckMode::Exhaustive).ok, "contracted not Monge " + where);
          out.expect(brute_force(next).window(big - m, n) == target, "window moved " + where);
        }
      }
    }
  out.extra = std::to_string(hits) + " hits, " + std::to_string(contractions) + " contractions";
  if (hits == 0 || contractions == 0) out.expect(false, "both probe outcomes must occur");
  return out;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Outcome scaling_suite() {
  Outcome out;
  constexpr int kSeeds = 20;
  std::vector<double> logn, logr, means;
  char buf[256];
  for (Index n : {Index{512}, Index{1024}, Index{2048}, Index{4096}, Index{8192}}) {
    const Index m = n / 2;
    const double scale = std::sqrt(static_cast<double>(n) * static_cast<double>(m) * static_cast<double>(n - m) *
                                   std::log2(static_cast<double>(n - m)));
    double sum = 0;
    for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
      const auto o = gen_random_monge<I64>(n, seed);
      const auto r = shortest_m_link_path(o, m);
      sum += static_cast<double>(r.stats.base_evals) / scale;
      note_peak(n, r.stats.peak_cells);
      if (n >= 2048) {
        o.reset_evals();
        const I64 want = dp_length(o, m);
        out.expect(r.stats.base_evals < o.evals(), "cc not below dp at N=" + std::to_string(n));
        out.expect(r.path.length == want, "cc disagrees with dp at N=" + std::to_string(n));
      }
    }
    const double mean = sum / kSeeds;
    means.push_back(mean);
    logn.push_back(std::log(static_cast<double>(n)));
    logr.push_back(std::log(mean));
  }
  const double band = *std::max_element(means.begin(), means.end()) / *std::min_element(means.begin(), means.end());
  const double slope = fit_slope(logn, logr);
  out.expect(band <= 3.0, "band " + std::to_string(band));
  out.expect(slope <= 0.1, "slope " + std::to_string(slope));
  std::snprintf(buf, sizeof buf, "mean ratios %.2f %.2f %.2f %.2f %.2f, band %.2f, slope %.3f", means[0], means[1],
                means[2], means[3], means[4], band, slope);
  out.extra = buf;
  return out;
}

Outcome space_suite() {
  Outcome out;
  constexpr std::size_t kC0 = 8, kC1 = 64;
  double worst = 0;
  for (const auto& [n, range] : g_peaks) {
    const auto bound = kC0 * static_cast<std::size_t>(n) + kC1;
    out.expect(range.second <= bound, "peak " + std::to_string(range.second) + " at N=" + std::to_string(n));
    worst = std::max(worst, static_cast<double>(range.second) / static_cast<double>(n));
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "worst peak/N %.2f over %zu sizes (bound 8N + 64)", worst, g_peaks.size());
  out.extra = buf;
  return out;
}

Outcome pbf_suite() {
  Outcome out;
  constexpr double kPbfWork = 10.0;
  double worst = 0;
  for (Index n = 4; n <= 12; ++n)
    for (const auto& inst : grid_instances(n)) {
      DpWorkspace<I64> ws(n);
      for (Index s = 1; s < n; ++s)
        for (Index m = 1; s + m < n; ++m)
          for (Index last = s + m + 1; last <= n; ++last) {
            inst.cost.reset_evals();
            pbf(ContractedView<I64>(inst.cost, s, {}), m, last, ws);
            const double unit = static_cast<double>(m * (last - s + 2 - m));
            const double used = static_cast<double>(inst.cost.evals());
            worst = std::max(worst, used / unit);
            out.expect(used <= kPbfWork * unit, "pbf " + tag(inst.name, last, m) + " s=" + std::to_string(s));
          }
    }
  char buf[96];
  std::snprintf(buf, sizeof buf, "C = 10, worst measured %.2f", worst);
  out.extra = buf;
  return out;
}

Outcome segmentation_suite() {
  Outcome out;
  const std::vector<double> steps = {0, 1, 2, 10, 11, 12};
  const Segmentation seg = segment(steps, 2);
  out.expect(seg.breakpoints == std::vector<Index>{3}, "breakpoints");
  out.expect(std::abs(seg.sse - 4.0) < 1e-9, "sse " + std::to_string(seg.sse));
  const std::vector<double> flat(9, 3.5);
  for (Index m = 1; m <= 9; ++m) out.expect(std::abs(segment(flat, m).sse) < 1e-12, "flat M=" + std::to_string(m));
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"oracle equivalence, exhaustive N 4..12", exhaustive_equivalence},
      {"oracle equivalence, N 200/500/1000 vs dp", large_equivalence},
      {"window, depth/lambda monotonicity, nesting, swap", window_suite},
      {"tree depths and consecutiveness vs brute force", depth_suite},
      {"probe pivot, contraction, window coincidence", probe_suite},
      {"work scaling N 512..8192, cc below dp", scaling_suite},
      {"peak cells <= 8N + 64, criteria 2 and 6", space_suite},
      {"pbf work <= 10 m (n-s+2-m)", pbf_suite},
      {"segmentation demo", segmentation_suite},
  };
  int failed = 0, k = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass();
    std::printf("criterion %d: %s  %s  [%ld checks, %.1fs]", ++k, o.pass() ? "PASS" : "FAIL", c.name, o.checks, secs);
    if (!o.extra.empty()) std::printf("  %s", o.extra.c_str());
    if (!o.pass()) std::printf("  (%ld failures, first: %s)", o.failures, o.first.c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%s: %d of %d criteria failed\n", failed ? "FAIL" : "PASS", failed, k);
  return failed ? 1 : 0;
}
