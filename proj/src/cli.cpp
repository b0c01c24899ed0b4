#include "utlab/cli.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>

#include "utlab/catalog.hpp"
#include "utlab/galois.hpp"
#include "utlab/num_theory.hpp"
#include "utlab/set_orbits.hpp"

namespace utlab {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

GroupInfo info_of(const PermGroup& G, const std::string& address) {
  return {G.name().empty() ? address : G.name(), G.degree(), G.order().str()};
}

Verdict from_status(UtStatus s) {
  switch (s) {
    case UtStatus::Holds: return Verdict::Holds;
    case UtStatus::Fails: return Verdict::Fails;
    case UtStatus::Undecided: return Verdict::Undecided;
  }
  return Verdict::Error;
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("witness failed re-validation: " + what);
}

// No member of the orbit of i_set lies inside j_set.
bool no_image_inside(const PermGroup& G, const KSet& i_set, const KSet& j_set) {
  for (const auto& s : orbit_of_set(G, i_set).member_sets())
    if (std::all_of(s.begin(), s.end(), [&](Point p) { return j_set.contains(p); })) return false;
  return true;
}

void add_map_witness(ReportEntry& e, const Transformation& a) {
  e.witness["map"] = a.to_string();
  e.witness["kernel"] = a.kernel().to_string();
  e.witness["image"] = a.image().to_string();
}

}  // namespace

Report cmd_homog(const std::string& group, std::size_t i, std::size_t j) {
  const auto t0 = Clock::now();
  const auto G = resolve_group(group);
  Report r;
  r.group = info_of(G, group);
  ReportEntry e;
  e.label = i == j ? std::to_string(i) + "-homogeneous"
                   : "(" + std::to_string(i) + "," + std::to_string(j) + ")-homogeneous";
  e.method = "set orbits";
  const auto res = is_ij_homogeneous(G, i, j);
  e.verdict = res.holds ? Verdict::Holds : Verdict::Fails;
  if (!res.holds) {
    require(no_image_inside(G, res.i_set, res.j_set), "an image of the i-set lies in the j-set");
    e.witness["i_set"] = res.i_set.to_string();
    e.witness["j_set"] = res.j_set.to_string();
  }
  e.info["orbits on " + std::to_string(i) + "-sets"] = std::to_string(orbits_on_ksets(G, i).size());
  e.seconds = since(t0);
  r.entries.push_back(std::move(e));
  r.seconds = since(t0);
  return r;
}

Report cmd_ut(const std::string& group, std::size_t k, const UtBudget& budget) {
  const auto t0 = Clock::now();
  const auto G = resolve_group(group);
  Report r;
  r.group = info_of(G, group);
  ReportEntry e;
  e.label = std::to_string(k) + "-ut";
  const auto v = has_kut(G, k, budget);
  e.verdict = from_status(v.status);
  e.method = v.method;
  if (v.fails()) {
    require(v.orbit_rep && v.partition && verify_witness(G, *v.orbit_rep, *v.partition),
            "the orbit meets the partition in a section");
    e.witness["orbit"] = v.orbit_rep->to_string();
    e.witness["partition"] = v.partition->to_string();
  }
  if (v.graphs_connected) e.info["graphs connected"] = *v.graphs_connected ? "yes" : "no";
  if (!v.profile.empty()) e.info["frontier profile"] = join(v.profile);
  if (!v.note.empty()) e.info["note"] = v.note;
  e.seconds = since(t0);
  r.entries.push_back(std::move(e));
  r.seconds = since(t0);
  return r;
}

Report cmd_regular_map(const std::string& group, const std::string& map) {
  const auto t0 = Clock::now();
  const auto G = resolve_group(group);
  const auto a = Transformation::parse(map);
  if (a.degree() != G.degree()) throw InvalidArgument("regular: the map and the group have different degrees");
  Report r;
  r.group = info_of(G, group);
  ReportEntry e;
  e.label = "regular in <a,G>";
  e.method = "orbit of the image";
  e.info["rank"] = std::to_string(a.rank());
  const auto res = is_regular_in(a, G);
  e.verdict = res.regular ? Verdict::Holds : Verdict::Fails;
  if (res.regular) {
    e.info["g"] = res.g->to_cycle_string();
  } else {
    // Re-check directly: no image of image(a) is a section of kernel(a).
    const auto kernel = a.kernel();
    for (const auto& s : orbit_of_set(G, a.image()).member_sets())
      require(!is_section(s, kernel), "an image is a section of the kernel");
    add_map_witness(e, a);
  }
  e.seconds = since(t0);
  r.entries.push_back(std::move(e));
  r.seconds = since(t0);
  return r;
}

Report cmd_regular_rank(const std::string& group, std::size_t rank, RegularityMode mode, bool quasi) {
  const auto t0 = Clock::now();
  const auto G = resolve_group(group);
  Report r;
  r.group = info_of(G, group);
  ReportEntry e;
  e.label = "rank-" + std::to_string(rank) + (quasi ? " quasi-permutations" : " maps") + " regular";
  e.method = mode == RegularityMode::Direct ? "direct" : quasi ? "homogeneity" : "k-ut";
  const auto res = quasi ? quasi_regularity_classifier(G, rank, mode) : regular_for_all_rank_k(G, rank, mode);
  e.verdict = from_status(res.status);
  if (res.status == UtStatus::Fails) {
    require(res.witness && res.witness->rank() == rank && !is_regular_in(*res.witness, G),
            "the map is regular");
    add_map_witness(e, *res.witness);
  }
  e.seconds = since(t0);
  r.entries.push_back(std::move(e));
  r.seconds = since(t0);
  return r;
}

Report cmd_agl(std::uint64_t p) {
  const auto t0 = Clock::now();
  const auto rep = agl_criterion(p);
  const std::string name = "AGL(1," + std::to_string(p) + ")";
  const auto G = build(parse_group_name(name));
  Report r;
  r.group = info_of(G, "catalog:" + name);
  r.columns = {"c", "|<-1,c,c-1>|", "generates"};
  for (const auto& row : rep.rows)
    r.rows.push_back({std::to_string(row.c), std::to_string(row.order), row.order == p - 1 ? "yes" : "no"});
  ReportEntry e;
  e.label = "3-ut";
  e.method = "criterion";
  e.verdict = rep.verdict ? Verdict::Holds : Verdict::Fails;
  if (!rep.verdict) {
    const std::uint64_t c = rep.witnesses.front();
    const std::uint64_t gens[] = {p - 1, c, c - 1};
    require(subgroup_order(p, gens) < p - 1, "c generates");
    // H = <-1, c, c-1> as field elements.
    std::vector<std::uint64_t> H{1};
    for (std::size_t i = 0; i < H.size(); ++i)
      for (std::uint64_t g : gens) {
        const std::uint64_t x = H[i] * g % p;
        if (std::find(H.begin(), H.end(), x) == H.end()) H.push_back(x);
      }
    std::sort(H.begin(), H.end());
    // ({0}, H, rest) has no section in the orbit of {0, 1, c}.
    std::vector<std::vector<Point>> blocks(3);
    std::vector<char> inH(p, 0);
    for (auto h : H) inH[h] = 1;
    for (std::uint64_t x = 0; x < p; ++x) blocks[x == 0 ? 0 : inH[x] ? 1 : 2].push_back(agl_point(p, x));
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    const SetPartition part(p, blocks);
    const KSet apex{agl_point(p, 0), agl_point(p, 1), agl_point(p, c)};
    const auto orbit_rep = orbit_of_set(G, apex).representative;
    require(verify_witness(G, orbit_rep, part), "the partition has a section");
    e.witness["c"] = std::to_string(c);
    e.witness["H"] = "{" + join(H) + "}";
    e.witness["orbit"] = orbit_rep.to_string();
    e.witness["partition"] = part.to_string();
    e.info["witnesses"] = std::to_string(rep.witnesses.size()) + " of " + std::to_string(p - 2);
  }
  e.info["labelling"] = "0 is point 1, w^i is point i+2 for the least primitive root w";
  e.seconds = since(t0);
  r.entries.push_back(std::move(e));
  r.seconds = since(t0);
  return r;
}

Report cmd_sieve(std::uint64_t limit) {
  const auto t0 = Clock::now();
  Report r;
  r.columns = {"p", "3-ut", "least c", "|<-1,c,c-1>|"};
  for (const auto& row : sieve_problem1(limit))
    r.rows.push_back({std::to_string(row.p), row.verdict ? "holds" : "fails",
                      row.min_witness ? std::to_string(*row.min_witness) : "-", std::to_string(row.order)});
  r.seconds = since(t0);
  return r;
}

Report cmd_verify(Suite suite, std::uint64_t seed,
                  const std::function<void(const CriterionResult&)>& progress) {
  const auto t0 = Clock::now();
  Report r;
  for (const auto& c : run_suite(suite, seed, progress)) {
    ReportEntry e;
    e.label = "criterion " + std::to_string(c.id) + ": " + c.title;
    e.verdict = c.outcome;
    e.method = "acceptance";
    e.info["detail"] = c.detail;
    e.seconds = c.seconds;
    r.entries.push_back(std::move(e));
  }
  r.seconds = since(t0);
  return r;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"ut-lab: k-homogeneity, universal transversals and regularity of permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  int threads = 0;
  std::uint64_t seed = 1;
  app.add_flag("--json", json, "Print the report as JSON");
  app.add_option("--threads", threads, "OpenMP threads (0 keeps the default)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "Seed for every random sample");

  std::string group;
  std::size_t i = 0, j = 0, k = 0, rank = 0;
  auto* homog = app.add_subcommand("homog", "(i,j)-homogeneity; i = j tests i-homogeneity");
  homog->add_option("--group", group, "catalog:NAME@DEGREE or file:PATH")->required();
  homog->add_option("--i", i)->required();
  homog->add_option("--j", j)->required();

  bool show_witness = false;
  UtBudget budget;
  auto* ut = app.add_subcommand("ut", "k-universal transversal property");
  ut->add_option("--group", group, "catalog:NAME@DEGREE or file:PATH")->required();
  ut->add_option("--k", k)->required();
  ut->add_flag("--witness", show_witness, "Print the failure witness");
  ut->add_option("--method", budget.method)->check(CLI::IsMember({"auto", "naive", "extend"}));
  ut->add_option("--naive-budget", budget.naive_checks, "Largest S(n,k) times orbits for the naive decider");
  ut->add_option("--frontier-cap", budget.frontier_cap, "Largest frontier of the extension decider");

  std::string map;
  bool direct = false, quasi = false;
  auto* regular = app.add_subcommand("regular", "regularity of one map or of every rank-k map");
  regular->add_option("--group", group, "catalog:NAME@DEGREE or file:PATH")->required();
  auto* map_opt = regular->add_option("--map", map, "Images of 1..n, e.g. 1,1,3,3,5,5");
  auto* rank_opt = regular->add_option("--rank", rank, "Every map of this rank");
  map_opt->excludes(rank_opt);
  regular->add_flag("--direct", direct, "Check one map per kernel and image orbit")->needs(rank_opt);
  regular->add_flag("--quasi", quasi, "Only quasi-permutations")->needs(rank_opt);

  std::uint64_t p = 0, limit = 0;
  auto* agl = app.add_subcommand("agl", "the criterion for AGL(1,p)");
  auto* p_opt = agl->add_option("--p", p, "A prime p >= 5");
  auto* sieve_opt = agl->add_option("--sieve-limit", limit, "Primes p = 11 mod 12 up to this bound");
  p_opt->excludes(sieve_opt);

  std::string suite = "small";
  auto* verify = app.add_subcommand("verify", "acceptance suites");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"small", "paper", "long"}));

  try {
    app.parse(argc, argv);
    if (regular->parsed() && map_opt->count() + rank_opt->count() == 0)
      throw CLI::RequiredError("--map or --rank");
    if (agl->parsed() && p_opt->count() + sieve_opt->count() == 0)
      throw CLI::RequiredError("--p or --sieve-limit");
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  if (threads > 0) omp_set_num_threads(threads);
  budget.parallel = threads != 1;

  std::string command = "ut-lab";
  for (int a = 1; a < argc; ++a) command += std::string(" ") + argv[a];

  const auto t0 = Clock::now();
  Report report;
  try {
    if (homog->parsed()) {
      report = cmd_homog(group, i, j);
    } else if (ut->parsed()) {
      report = cmd_ut(group, k, budget);
    } else if (regular->parsed()) {
      const auto mode = direct ? RegularityMode::Direct : RegularityMode::Delegate;
      report = map_opt->count() ? cmd_regular_map(group, map) : cmd_regular_rank(group, rank, mode, quasi);
    } else if (agl->parsed()) {
      report = p_opt->count() ? cmd_agl(p) : cmd_sieve(limit);
    } else if (verify->parsed()) {
      auto progress = [&](const CriterionResult& c) {
        if (json) return;
        out << "criterion " << c.id << " " << outcome_tag(c.outcome) << " " << c.title << " ("
            << c.seconds << " s)\n  " << c.detail << "\n"
            << std::flush;
      };
      report = cmd_verify(parse_suite(suite), seed, progress);
    }
  } catch (const std::exception& e) {
    report = Report{};
    report.error = e.what();
    report.seconds = since(t0);
  }
  report.command = command;

  if (json) out << to_json(report) << "\n";
  else out << to_text(report, show_witness || !ut->parsed());
  return report.exit_code();
}

}  // namespace utlab
