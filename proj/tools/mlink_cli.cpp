#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mlink/mlink.hpp"

using namespace mlink;

namespace {

enum Exit { kOk = 0, kUsage = 1, kBadInput = 2, kInternal = 3 };

struct Source {
  std::string gen;
  std::string file;
  Index n = 0;
  std::uint64_t seed = 1;
};

struct Budget {
  Index m = 0;
  double frac = 0.0;
};

struct Common {
  std::string mode = "int";
  std::string spt = "online";
  int verbosity = 0;
};

void add_source(CLI::App* cmd, Source& src) {
  auto* gen = cmd->add_option("--gen", src.gen, "generator family")
                  ->check(CLI::IsMember({"convex-sq", "linear", "random"}));
  auto* file = cmd->add_option("--file", src.file, "explicit instance file");
  gen->excludes(file);
  cmd->add_option("--n", src.n, "number of nodes (with --gen)");
  cmd->add_option("--seed", src.seed, "generator seed");
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--mode", c.mode, "numeric mode")->check(CLI::IsMember({"int", "float"}));
  cmd->add_option("--spt", c.spt, "shortest-path-tree strategy")->check(CLI::IsMember({"online", "dnc"}));
  cmd->add_option("--verbosity", c.verbosity, "0 quiet, 1 stage trace");
}

SptStrategy parse_strategy(const std::string& s) { return s == "dnc" ? SptStrategy::DivideConquer : SptStrategy::Online; }

template <class T>
CostOracle<T> load(const Source& src) {
  if (!src.file.empty()) {
    std::ifstream in(src.file);
    require(static_cast<bool>(in), "cannot open instance file");
    return read_instance<T>(in);
  }
  require(!src.gen.empty(), "need --gen or --file");
  require(src.n >= 2, "--n must be >= 2");
  return generate<T>(parse_family(src.gen), src.n, src.seed);
}

Index resolve_links(const Budget& b, Index n) {
  if (b.m > 0) return b.m;
  require(b.frac > 0.0 && b.frac < 1.0, "need --m or --m-frac in (0, 1)");
  const auto m = static_cast<Index>(std::llround(b.frac * static_cast<double>(n)));
  return std::clamp<Index>(m, 1, n - 1);
}

void print_nodes(const std::vector<Index>& nodes) {
  std::cout << "nodes";
  for (Index v : nodes) std::cout << ' ' << v;
  std::cout << '\n';
}

template <class T>
int run_solve(const Source& src, const Budget& budget, const std::string& algo, const Common& c, bool check) {
  const CostOracle<T> o = load<T>(src);
  const Index n = o.size();
  const Index m = resolve_links(budget, n);
  require(m >= 1 && m <= n - 1, "need 1 <= M <= N-1");

  if (check) {
    const MongeCheck mc = n <= 64 ? verify_submodular(o, CheckMode::Exhaustive)
                                  : verify_submodular_sampled(o, 1, n, 20 * n, src.seed);
    if (!mc.ok) {
      std::cerr << "warning: instance is not Monge at (" << mc.quad[0] << ", " << mc.quad[1] << ", " << mc.quad[2]
                << ", " << mc.quad[3] << "); result is not guaranteed optimal\n";
    }
    o.reset_evals();
  }

  if (algo == "brute") {
    require(n <= BruteForce<T>::kMaxNodes, "brute force supports N <= 14");
    const BruteForce<T> b = brute_force(o);
    const auto& best = b.optimal_paths(m, n).front();
    print_nodes(best);
    std::cout << "length " << b.f(m, n) << '\n';
    std::cout << "paths " << b.path_count(m, n) << '\n';
    return kOk;
  }
  if (algo == "dp") {
    const DpTable<T> t = dp_full(o, m);
    const LinkPath<T> p = t.path(m, n);
    print_nodes(p.nodes);
    std::cout << "length " << p.length << '\n';
    std::cout << "base_evals " << o.evals() << '\n';
    return kOk;
  }

  const CcOptions opt{parse_strategy(c.spt), false, false};
  const SolveResult<T> r = shortest_m_link_path(o, m, opt);
  print_nodes(r.path.nodes);
  std::cout << "length " << r.path.length << '\n';
  std::cout << "base_evals " << r.stats.base_evals << '\n';
  std::cout << "peak_cells " << r.stats.peak_cells << '\n';
  std::cout << "stages " << r.stats.stages << " hits " << r.stats.hits << (r.stats.small ? " (single pbf)" : "") << '\n';
  if (c.verbosity >= 1) {
    Index k = 0;
    for (const auto& p : r.stats.trace) {
      std::cout << "stage " << ++k << ": s=" << p.root_before << " m=" << p.m << " depth_queries=" << p.samples;
      if (p.hit) {
        std::cout << " hit lambda=" << p.lambda << '\n';
      } else {
        std::cout << " pivot=" << p.pivot << '\n';
      }
    }
  }
  return kOk;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

struct BenchGrid {
  std::string sizes = "1024,2048,4096";
  std::string fracs = "0.5";
  std::string families = "random";
  std::string seeds = "1";
  std::string algos = "cc,dp";
  std::string csv;
  bool check = false;
};

template <class T>
int run_bench(const BenchGrid& g, const Common& c) {
  constexpr Index kMaxNodes = Index{1} << 22;
  constexpr std::size_t kMaxCells = 4096;
  std::vector<Index> sizes;
  for (const auto& s : split(g.sizes)) sizes.push_back(std::stoll(s));
  std::vector<double> fracs;
  for (const auto& s : split(g.fracs)) fracs.push_back(std::stod(s));
  std::vector<std::uint64_t> seeds;
  for (const auto& s : split(g.seeds)) seeds.push_back(std::stoull(s));
  const auto families = split(g.families);
  const auto algos = split(g.algos);
  for (const auto& a : algos) require(a == "cc" || a == "dp", "bench algorithms are cc and dp");
  for (Index n : sizes) {
    require(n >= 4, "bench sizes must be >= 4");
    if (n > kMaxNodes) throw PreconditionError("bench: N above 4194304 exceeds the memory guard; split the grid");
  }
  if (sizes.size() * fracs.size() * families.size() * seeds.size() > kMaxCells)
    throw PreconditionError("bench: more than 4096 grid cells; run several smaller grids");

  std::ofstream file;
  if (!g.csv.empty()) {
    file.open(g.csv);
    require(static_cast<bool>(file), "cannot open --csv output");
  }
  std::ostream& out = g.csv.empty() ? std::cout : file;
  out << "family,N,M,algo,base_evals,wall_ns,peak_cells,stages,hits\n";

  const CcOptions opt{parse_strategy(c.spt), false, false};
  std::map<Index, bool> cc_below;
  for (const auto& fam : families) {
    const Family family = parse_family(fam);
    for (Index n : sizes)
      for (double frac : fracs)
        for (std::uint64_t seed : seeds) {
          const Index m = std::clamp<Index>(static_cast<Index>(std::llround(frac * static_cast<double>(n))), 1, n - 1);
          std::optional<std::uint64_t> cc_evals, dp_evals;
          std::optional<T> cc_len, dp_len;
          for (const auto& algo : algos) {
            const CostOracle<T> o = generate<T>(family, n, seed);
            const auto t0 = std::chrono::steady_clock::now();
            std::size_t peak = 0;
            Index stages = 0, hits = 0;
            if (algo == "cc") {
              const SolveResult<T> r = shortest_m_link_path(o, m, opt);
              peak = r.stats.peak_cells;
              stages = r.stats.stages;
              hits = r.stats.hits;
              cc_evals = o.evals();
              cc_len = r.path.length;
            } else {
              dp_len = dp_length(o, m, &peak);
              dp_evals = o.evals();
            }
            const auto ns =
                std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0).count();
            out << fam << ',' << n << ',' << m << ',' << algo << ',' << o.evals() << ',' << ns << ',' << peak << ','
                << stages << ',' << hits << '\n';
          }
          if (cc_len && dp_len && !(*cc_len == *dp_len)) {
            std::cerr << "error: cc and dp disagree at N=" << n << " M=" << m << " seed=" << seed << '\n';
            return kInternal;
          }
          if (cc_evals && dp_evals) {
            auto it = cc_below.try_emplace(n, true).first;
            it->second = it->second && *cc_evals < *dp_evals;
          }
        }
  }
  if (g.check) {
    for (const auto& [n, below] : cc_below)
      std::cerr << "cc below dp at N=" << n << ": " << (below ? "yes" : "no") << '\n';
  }
  return kOk;
}

int run_segment(const std::string& path, Index m, const Common& c) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open data file");
  const std::vector<double> data = read_data(in);
  require(data.size() >= 2, "data file needs at least 2 numbers");
  const Segmentation seg = segment(data, m, CcOptions{parse_strategy(c.spt), false, false});
  std::cout << "breakpoints";
  for (Index b : seg.breakpoints) std::cout << ' ' << b;
  std::cout << "\nmeans";
  for (double x : seg.means) std::cout << ' ' << x;
  std::cout << "\nsse " << seg.sse << '\n';
  return kOk;
}

template <class T>
int run_verify(const Source& src, const std::string& how) {
  const CostOracle<T> o = load<T>(src);
  MongeCheck mc;
  if (how == "exhaustive") {
    mc = verify_submodular(o, CheckMode::Exhaustive);
  } else if (how == "adjacent") {
    mc = verify_submodular(o, CheckMode::Adjacent);
  } else {
    mc = verify_submodular_sampled(o, 1, o.size(), 20 * o.size(), src.seed);
  }
  if (mc.ok) {
    std::cout << "monge yes\n";
    return kOk;
  }
  std::cout << "monge no: violated at (" << mc.quad[0] << ", " << mc.quad[1] << ", " << mc.quad[2] << ", "
            << mc.quad[3] << ")\n";
  return kBadInput;
}

template <class T>
int run_gen(const Source& src, const std::string& out_path) {
  const CostOracle<T> o = load<T>(src);
  if (out_path.empty()) {
    write_instance(std::cout, o);
    return kOk;
  }
  std::ofstream out(out_path);
  require(static_cast<bool>(out), "cannot open --out file");
  write_instance(out, o);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest M-link paths in Monge DAGs"};
  app.require_subcommand(1);

  Source src;
  Budget budget;
  Common common;
  std::string algo = "cc";
  bool check = false;
  auto* solve = app.add_subcommand("solve", "shortest M-link 1-N path");
  add_source(solve, src);
  add_common(solve, common);
  auto* m_opt = solve->add_option("--m", budget.m, "number of links");
  auto* frac_opt = solve->add_option("--m-frac", budget.frac, "links as a fraction of N");
  m_opt->excludes(frac_opt);
  solve->add_option("--algo", algo, "algorithm")->check(CLI::IsMember({"cc", "dp", "brute"}));
  solve->add_flag("--check", check, "verify the Monge property first (exhaustive up to 64 nodes, else sampled)");

  BenchGrid grid;
  auto* bench = app.add_subcommand("bench", "benchmark grid, CSV output");
  bench->add_option("--n", grid.sizes, "comma-separated N list");
  bench->add_option("--m-frac", grid.fracs, "comma-separated M/N list");
  bench->add_option("--gen", grid.families, "comma-separated families");
  bench->add_option("--seed", grid.seeds, "comma-separated seeds");
  bench->add_option("--algo", grid.algos, "comma-separated subset of cc,dp");
  bench->add_option("--csv", grid.csv, "write CSV here instead of stdout");
  bench->add_flag("--check", grid.check, "report whether cc used fewer evaluations than dp per N");
  add_common(bench, common);

  std::string data_path;
  Index seg_m = 0;
  auto* seg = app.add_subcommand("segment", "optimal M-segment piecewise-constant fit");
  seg->add_option("--file", data_path, "data file, one number per line")->required();
  seg->add_option("--m", seg_m, "number of segments")->required();
  seg->add_option("--spt", common.spt, "shortest-path-tree strategy")->check(CLI::IsMember({"online", "dnc"}));

  std::string how = "exhaustive";
  auto* verify = app.add_subcommand("verify", "check the Monge property");
  add_source(verify, src);
  verify->add_option("--mode", common.mode, "numeric mode")->check(CLI::IsMember({"int", "float"}));
  verify->add_option("--check", how, "exhaustive, adjacent or sampled")
      ->check(CLI::IsMember({"exhaustive", "adjacent", "sampled"}));

  std::string out_path;
  auto* gen = app.add_subcommand("gen", "write a generated instance in the explicit format");
  gen->add_option("--gen", src.gen, "generator family")
      ->required()
      ->check(CLI::IsMember({"convex-sq", "linear", "random"}));
  gen->add_option("--n", src.n, "number of nodes")->required();
  gen->add_option("--seed", src.seed, "generator seed");
  gen->add_option("--mode", common.mode, "numeric mode")->check(CLI::IsMember({"int", "float"}));
  gen->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }
  if (solve->parsed() && budget.m == 0 && budget.frac == 0.0) {
    std::cerr << "solve: one of --m or --m-frac is required\n";
    return kUsage;
  }
  if ((solve->parsed() || verify->parsed()) && src.gen.empty() && src.file.empty()) {
    std::cerr << "one of --gen or --file is required\n";
    return kUsage;
  }

  const bool real = common.mode == "float";
  try {
    if (solve->parsed()) {
      return real ? run_solve<double>(src, budget, algo, common, check)
                  : run_solve<std::int64_t>(src, budget, algo, common, check);
    }
    if (bench->parsed()) return real ? run_bench<double>(grid, common) : run_bench<std::int64_t>(grid, common);
    if (seg->parsed()) return run_segment(data_path, seg_m, common);
    if (verify->parsed()) return real ? run_verify<double>(src, how) : run_verify<std::int64_t>(src, how);
    if (gen->parsed()) return real ? run_gen<double>(src, out_path) : run_gen<std::int64_t>(src, out_path);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kUsage;
}
