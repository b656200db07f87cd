#include "psrecon_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>

#include <json.hpp>

namespace psrecon::cli {

namespace {

using Clock = std::chrono::steady_clock;
using ordered_json = nlohmann::ordered_json;

int fail(std::ostream& err, const std::exception& e) {
  err << "error: " << e.what() << '\n';
  return kInvalidInput;
}

template <typename F>
int guarded(Streams io, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::OverBudget) {
      io.err << "error: " << e.what() << '\n';
      return kOverBudget;
    }
    return fail(io.err, e);
  } catch (const std::exception& e) {
    return fail(io.err, e);
  }
}

CompositionMultiset load(const std::string& path, const Options& opt,
                         Streams io) {
  return read_compositions(read_input(path, io.in), opt.expect);
}

}  // namespace

int cmd_compose(const std::string& path, const Options& opt, Streams io) {
  return guarded(io, [&] {
    const StringMultiset u = parse_strings(read_input(path, io.in));
    const CompositionMultiset m = compose_multiset(u);
    io.out << write_compositions(m, opt.format.value_or(Format::Json));
    return kOk;
  });
}

int cmd_reconstruct(const std::string& path, const Options& opt, Streams io) {
  return guarded(io, [&] {
    const auto r = reconstruct_one(load(path, opt, io));
    io.out << write_strings(r.strings, opt.format.value_or(Format::Text));
    return kOk;
  });
}

int cmd_enumerate(const std::string& path, const Options& opt, Streams io) {
  return guarded(io, [&] {
    const auto result =
        reconstruct_all(load(path, opt, io), EnumerateOptions{opt.jobs});
    io.out << write_classes(result.classes, opt.count_only,
                            opt.format.value_or(Format::Text));
    return kOk;
  });
}

int cmd_oracle(const std::string& path, const Options& opt, Streams io) {
  return guarded(io, [&] {
    const auto classes = brute_force_all(load(path, opt, io));
    io.out << write_classes(classes, opt.count_only,
                            opt.format.value_or(Format::Text));
    return kOk;
  });
}

int cmd_check_unique(const std::string& path, const Options& opt, Streams io) {
  return guarded(io, [&] {
    const auto report = check_unique(load(path, opt, io));
    const auto& w = report.witness;
    if (opt.format.value_or(Format::Text) == Format::Json) {
      ordered_json doc;
      doc["unique"] = report.unique;
      if (w) {
        ordered_json wj;
        wj["rows"] = {w->m1, w->m2};
        auto ivs = ordered_json::array();
        for (const auto& iv : w->intervals) ivs.push_back({iv.lo, iv.hi});
        wj["intervals"] = std::move(ivs);
        wj["swapped"] = {w->swapped.lo, w->swapped.hi};
        auto strs = ordered_json::array();
        for (const auto& t : w->counterexample.members()) {
          strs.push_back(t.str());
        }
        wj["counterexample"] = std::move(strs);
        doc["witness"] = std::move(wj);
      }
      io.out << doc.dump() << '\n';
    } else {
      io.out << (report.unique ? "unique" : "not unique") << '\n';
      if (w) {
        io.out << "rows " << w->m1 << ' ' << w->m2 << '\n' << "intervals";
        for (const auto& iv : w->intervals) io.out << ' ' << iv;
        io.out << "\nswapped " << w->swapped << "\ncounterexample:\n"
               << write_strings(w->counterexample, Format::Text);
      }
    }
    return report.unique ? kOk : kNotUnique;
  });
}

SelftestReport selftest(int n_max, int h_max, unsigned jobs) {
  SelftestReport report;
  const auto start = Clock::now();
  for_each_instance(n_max, h_max,
                    [&](const StringMultiset&, const CompositionMultiset& m) {
                      ++report.instances;
                      const auto fast = reconstruct_all(m, {jobs}).classes;
                      const auto slow = brute_force_all(m);
                      const bool unique = check_unique(m).unique;
                      if (fast == slow && unique == (slow.size() == 1)) {
                        ++report.passed;
                      } else {
                        ++report.failed;
                      }
                    });
  report.seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

int cmd_selftest(int n_max, int h_max, const Options& opt, Streams io) {
  return guarded(io, [&] {
    const OracleLimits limits;
    if (n_max < 1 || h_max < 1 || n_max > limits.max_n ||
        h_max > limits.max_h) {
      throw Error(ErrorCode::OverBudget,
                  "selftest bounds must satisfy 1 <= n_max <= " +
                      std::to_string(limits.max_n) + ", 1 <= h_max <= " +
                      std::to_string(limits.max_h));
    }
    const auto r = selftest(n_max, h_max, opt.jobs);
    if (opt.format.value_or(Format::Text) == Format::Json) {
      io.out << ordered_json{{"instances", r.instances},
                             {"passed", r.passed},
                             {"failed", r.failed},
                             {"seconds", r.seconds}}
                    .dump()
             << '\n';
    } else {
      io.out << "instances " << r.instances << "\npassed " << r.passed
             << "\nfailed " << r.failed << "\nseconds " << r.seconds << '\n';
    }
    return r.failed == 0 ? kOk : kInvalidInput;
  });
}

int cmd_bench(const BenchOptions& bench, const Options& opt, Streams io) {
  return guarded(io, [&] {
    std::mt19937_64 rng(bench.seed);
    struct Row {
      int n, h;
      double median_us;
    };
    std::vector<Row> rows;
    for (auto [n, h] : {std::pair{64, 4}, {128, 4}, {128, 8}, {256, 8},
                        {256, 16}}) {
      std::vector<double> times;
      for (int r = 0; r < bench.repeats; ++r) {
        const auto m = compose_multiset(random_multiset(rng, n, h, n / 2));
        const auto t0 = Clock::now();
        const auto result = reconstruct_one(m);
        const auto t1 = Clock::now();
        if (!is_solution(result.cwf, m)) {
          throw Error(ErrorCode::GreedyInfeasible, "bench produced a non-solution");
        }
        times.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
      }
      std::nth_element(times.begin(), times.begin() + times.size() / 2,
                       times.end());
      rows.push_back({n, h, times[times.size() / 2]});
    }
    if (opt.format.value_or(Format::Text) == Format::Json) {
      auto arr = ordered_json::array();
      for (const auto& r : rows) {
        arr.push_back({{"n", r.n}, {"h", r.h}, {"median_us", r.median_us}});
      }
      io.out << ordered_json{{"seed", bench.seed}, {"reconstruct_one", arr}}.dump()
             << '\n';
    } else {
      io.out << "seed " << bench.seed << '\n';
      for (const auto& r : rows) {
        io.out << "n=" << r.n << " h=" << r.h << " median_us=" << r.median_us
               << '\n';
      }
    }
    return kOk;
  });
}

}  // namespace psrecon::cli
