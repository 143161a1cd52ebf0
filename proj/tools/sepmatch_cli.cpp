// sepmatch command line: instance generation, solving, verification,
// reduction dumps, and a CSV benchmark harness.
//
// Exit codes: 0 success / feasible, 1 infeasible matching, 2 usage or
// structural error, 3 resource cap exceeded.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "sepmatch/sepmatch.hpp"

namespace fs = std::filesystem;
using namespace sepmatch;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spew(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot open '" + path + "' for writing");
  out << content;
}

int resolve_cap(int flag_cap) {
  if (flag_cap > 0) return flag_cap;
  if (const char* env = std::getenv("SEPMATCH_CAP")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return default_oracle_cap;
}

metric metric_from_name(const std::string& name, const std::string& wx,
                        const std::string& wy) {
  metric m;
  if (name == "l1")
    m.kind = metric_kind::l1;
  else if (name == "linf")
    m.kind = metric_kind::linf;
  else if (name == "wlinf")
    m.kind = metric_kind::wlinf;
  else if (name == "l2")
    m.kind = metric_kind::l2;
  else
    throw parse_error("unknown metric '" + name + "'");
  if (m.kind == metric_kind::wlinf) {
    m.wx = parse_rat(wx);
    m.wy = parse_rat(wy);
  }
  return m;
}

std::vector<std::vector<int>> parse_sets_arg(const std::string& text) {
  std::vector<std::vector<int>> sets;
  std::stringstream outer(text);
  std::string group;
  while (std::getline(outer, group, ';')) {
    std::vector<int> s;
    std::stringstream inner(group);
    std::string elem;
    while (std::getline(inner, elem, ',')) s.push_back(std::stoi(elem));
    sets.push_back(std::move(s));
  }
  return sets;
}

solve_report run_algorithm(const instance& g, const std::string& name, int t, int cap) {
  if (name == "greedy") return solve_approx(g, algo_spec::greedy());
  if (name == "local-search") return solve_approx(g, algo_spec::local_search(t));
  if (name == "setpack") return solve_approx(g, algo_spec::set_pack());
  if (name == "exact") return brute_force(g, cap);
  if (name == "interval-exact") return interval_exact(g);
  if (name == "classical") {
    auto t0 = std::chrono::steady_clock::now();
    solve_report rep;
    rep.result = classical_max_matching(g);
    rep.value = matching_value(g, rep.result);
    rep.algorithm = "classical";
    rep.guarantee = "exact (s = 0)";
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
  }
  throw parse_error("unknown algorithm '" + name + "'");
}

struct bench_row {
  std::string instance_name;
  std::string algorithm;
  std::string value;
  std::string oracle;
  std::string ratio;
  double elapsed_ms = 0;
};

int run_bench(const std::string& corpus, const std::vector<std::string>& algorithms,
              int repeat, int jobs, int cap) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(corpus))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  struct task_ctx {
    fs::path file;
    std::optional<instance> inst;
    std::optional<rat> oracle;
  };
  std::vector<task_ctx> ctx(files.size());
  std::mutex err_mutex;
  for (std::size_t i = 0; i < files.size(); ++i) {
    ctx[i].file = files[i];
    try {
      ctx[i].inst = parse_instance(slurp(files[i].string()));
      try {
        ctx[i].oracle = brute_force(*ctx[i].inst, cap).value;
      } catch (const size_cap_error&) {
        // ratio column stays empty
      }
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lock(err_mutex);
      std::cerr << files[i].string() << ": " << e.what() << "\n";
    }
  }

  struct task {
    std::size_t inst_idx;
    std::size_t algo_idx;
    int rep;
  };
  std::vector<task> tasks;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (!ctx[i].inst) continue;
    for (std::size_t a = 0; a < algorithms.size(); ++a)
      for (int r = 0; r < repeat; ++r) tasks.push_back({i, a, r});
  }

  std::vector<std::optional<bench_row>> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= tasks.size()) break;
      const task& tk = tasks[k];
      const task_ctx& c = ctx[tk.inst_idx];
      try {
        solve_report rep = run_algorithm(*c.inst, algorithms[tk.algo_idx], 2, cap);
        bench_row row;
        row.instance_name = c.file.filename().string();
        row.algorithm = algorithms[tk.algo_idx];
        row.value = to_string(rep.value);
        if (c.oracle) {
          row.oracle = to_string(*c.oracle);
          if (rep.value > rat(0)) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.4f", to_double(*c.oracle / rep.value));
            row.ratio = buf;
          } else if (*c.oracle == rat(0)) {
            row.ratio = "1.0000";
          }
        }
        row.elapsed_ms = rep.elapsed_ms;
        rows[k] = std::move(row);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(err_mutex);
        std::cerr << c.file.string() << " [" << algorithms[tk.algo_idx]
                  << "]: " << e.what() << "\n";
      }
    }
  };
  int nthreads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::cout << "instance,algorithm,value,oracle,ratio,elapsed_ms\n";
  for (const auto& row : rows) {
    if (!row) continue;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", row->elapsed_ms);
    std::cout << row->instance_name << ',' << row->algorithm << ',' << row->value << ','
              << row->oracle << ',' << row->ratio << ',' << buf << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sepmatch: bipartite matching with separation constraints"};
  app.require_subcommand(1);
  std::function<int()> action;

  // ---- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  gen->require_subcommand(1);
  std::string out_path = "-";
  std::uint64_t seed = 1;
  for (auto* sub : {gen}) {
    (void)sub;
  }

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--out", out_path, "output file (default stdout)");
    sub->add_option("--seed", seed, "RNG seed");
  };

  {
    auto* sub = gen->add_subcommand("random", "random path instance");
    auto a = std::make_shared<int>(6);
    auto b = std::make_shared<int>(12);
    auto s = std::make_shared<long long>(1);
    auto density = std::make_shared<double>(0.3);
    auto g = std::make_shared<int>(1);
    auto bilateral = std::make_shared<bool>(false);
    auto weighted = std::make_shared<bool>(false);
    sub->add_option("--a", *a, "size of A");
    sub->add_option("--b", *b, "number of path positions");
    sub->add_option("--s", *s, "separation parameter");
    sub->add_option("--density", *density, "edge probability");
    sub->add_option("--g", *g, "group size");
    sub->add_flag("--bilateral", *bilateral, "separation on both sides");
    sub->add_flag("--weighted", *weighted, "attach random rational weights");
    add_common(sub);
    sub->callback([=, &action, &out_path, &seed]() {
      action = [=, &out_path, &seed]() {
        auto inst =
            gen_random_path(*a, *b, *s, *density, seed, *g, *bilateral, *weighted);
        spew(out_path, serialize_instance(inst));
        return 0;
      };
    });
  }
  {
    auto* sub = gen->add_subcommand("interval", "interval-structured path instance");
    auto a = std::make_shared<int>(5);
    auto b = std::make_shared<int>(12);
    auto s = std::make_shared<long long>(1);
    auto len_min = std::make_shared<int>(1);
    auto len_max = std::make_shared<int>(4);
    sub->add_option("--a", *a, "size of A");
    sub->add_option("--b", *b, "number of path positions");
    sub->add_option("--s", *s, "separation parameter");
    sub->add_option("--len-min", *len_min, "minimum interval length (0 allows empty)");
    sub->add_option("--len-max", *len_max, "maximum interval length");
    add_common(sub);
    sub->callback([=, &action, &out_path, &seed]() {
      action = [=, &out_path, &seed]() {
        auto inst = gen_interval_instance(*a, *b, *s, *len_min, *len_max, seed);
        spew(out_path, serialize_instance(inst));
        return 0;
      };
    });
  }
  {
    auto* sub = gen->add_subcommand("grid", "grid instance");
    auto a = std::make_shared<int>(6);
    auto b1 = std::make_shared<int>(4);
    auto b2 = std::make_shared<int>(4);
    auto s = std::make_shared<std::string>("1");
    auto met = std::make_shared<std::string>("l1");
    auto wx = std::make_shared<std::string>("1");
    auto wy = std::make_shared<std::string>("1");
    auto density = std::make_shared<double>(0.3);
    auto weighted = std::make_shared<bool>(false);
    sub->add_option("--a", *a, "size of A");
    sub->add_option("--beta1", *b1, "grid rows");
    sub->add_option("--beta2", *b2, "grid columns");
    sub->add_option("--s", *s, "separation parameter (rational, e.g. 3/2)");
    sub->add_option("--metric", *met, "l1 | linf | wlinf | l2");
    sub->add_option("--wx", *wx, "wlinf column weight");
    sub->add_option("--wy", *wy, "wlinf row weight");
    sub->add_option("--density", *density, "edge probability");
    sub->add_flag("--weighted", *weighted, "attach random rational weights");
    add_common(sub);
    sub->callback([=, &action, &out_path, &seed]() {
      action = [=, &out_path, &seed]() {
        auto inst = gen_grid_instance(*a, *b1, *b2, parse_rat(*s),
                                      metric_from_name(*met, *wx, *wy), *density, seed,
                                      *weighted);
        spew(out_path, serialize_instance(inst));
        return 0;
      };
    });
  }
  {
    auto* sub = gen->add_subcommand("gadget", "hardness gadget from a 3-set-packing instance");
    auto u = std::make_shared<int>(6);
    auto M = std::make_shared<int>(3);
    auto s = std::make_shared<long long>(1);
    auto planted = std::make_shared<bool>(false);
    auto sets = std::make_shared<std::string>("");
    sub->add_option("--u", *u, "universe size (multiple of 3)");
    sub->add_option("--M", *M, "number of subsets");
    sub->add_option("--s", *s, "separation parameter (>= 1)");
    sub->add_flag("--planted", *planted, "plant a perfect packing (YES instance)");
    sub->add_option("--sets", *sets, "explicit subsets, e.g. \"1,2,3;2,3,4;4,5,6\"");
    add_common(sub);
    sub->callback([=, &action, &out_path, &seed]() {
      action = [=, &out_path, &seed]() {
        set_packing_instance sp;
        if (!sets->empty())
          sp = make_setpacking(*u, parse_sets_arg(*sets));
        else
          sp = gen_3sp(*u, *M, *planted, seed);
        spew(out_path, serialize_instance(gadget_from_3sp(sp, *s)));
        return 0;
      };
    });
  }

  // ---- solve --------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("solve", "solve an instance, report JSON on stdout");
    auto file = std::make_shared<std::string>();
    auto algorithm = std::make_shared<std::string>();
    auto t = std::make_shared<int>(2);
    auto cap = std::make_shared<int>(0);
    sub->add_option("instance", *file, "instance file")->required();
    sub->add_option("--algorithm", *algorithm,
                    "greedy | local-search | setpack | exact | interval-exact | classical")
        ->required();
    sub->add_option("--t", *t, "swap size for local search");
    sub->add_option("--cap", *cap, "oracle edge cap (default 40, env SEPMATCH_CAP)");
    sub->callback([=, &action]() {
      action = [=]() {
        instance g = parse_instance(slurp(*file));
        solve_report rep = run_algorithm(g, *algorithm, *t, resolve_cap(*cap));
        std::cout << serialize_report(g, rep);
        return 0;
      };
    });
  }

  // ---- verify -------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("verify", "check a matching against an instance");
    auto inst_file = std::make_shared<std::string>();
    auto match_file = std::make_shared<std::string>();
    sub->add_option("instance", *inst_file, "instance file")->required();
    sub->add_option("matching", *match_file, "matching file")->required();
    sub->callback([=, &action]() {
      action = [=]() {
        instance g = parse_instance(slurp(*inst_file));
        matching m = parse_matching(slurp(*match_file), g);
        auto violations = matching_violations(g, m);
        if (violations.empty()) {
          std::cout << "feasible\n";
          return 0;
        }
        for (const auto& v : violations) {
          std::cout << v.field;
          if (v.index) std::cout << "[" << *v.index << "]";
          std::cout << ": " << v.message << "\n";
        }
        return 1;
      };
    });
  }

  // ---- bench --------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("bench", "run algorithms over a corpus, CSV on stdout");
    auto corpus = std::make_shared<std::string>();
    auto algos = std::make_shared<std::string>("greedy,local-search");
    auto repeat = std::make_shared<int>(1);
    auto jobs = std::make_shared<int>(1);
    auto cap = std::make_shared<int>(0);
    sub->add_option("corpus", *corpus, "directory of instance .json files")->required();
    sub->add_option("--algorithms", *algos, "comma-separated algorithm list");
    sub->add_option("--repeat", *repeat, "repetitions per (instance, algorithm)");
    sub->add_option("--jobs", *jobs, "worker threads");
    sub->add_option("--cap", *cap, "oracle edge cap for the ratio column");
    sub->callback([=, &action]() {
      action = [=]() {
        std::vector<std::string> names;
        std::stringstream ss(*algos);
        std::string name;
        while (std::getline(ss, name, ',')) names.push_back(name);
        return run_bench(*corpus, names, *repeat, *jobs, resolve_cap(*cap));
      };
    });
  }

  // ---- reduce -------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("reduce", "dump a reduction artifact");
    auto file = std::make_shared<std::string>();
    auto what = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>("-");
    sub->add_option("instance", *file, "instance file")->required();
    sub->add_option("--what", *what, "conflict | setpack | jobs")->required();
    sub->add_option("-o,--out", *out, "output file (default stdout)");
    sub->callback([=, &action]() {
      action = [=]() {
        instance g = parse_instance(slurp(*file));
        if (*what == "conflict")
          spew(*out, dump_conflict(build_conflict(g)));
        else if (*what == "setpack")
          spew(*out, serialize_setpacking(setpack_from_s1(g)));
        else if (*what == "jobs")
          spew(*out, serialize_jobset(jobs_from_interval(g)));
        else
          throw parse_error("unknown reduction '" + *what + "'");
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const size_cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
