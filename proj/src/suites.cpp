#include "crslab/suites.hpp"

#include <functional>
#include <stdexcept>
#include <string>

#include "crslab/crs.hpp"
#include "crslab/parallel.hpp"
#include "crslab/weighted.hpp"

namespace crslab {

namespace {

using Task = std::function<Report()>;

std::vector<unsigned> range_u(unsigned lo, unsigned hi) {
  std::vector<unsigned> out;
  for (unsigned v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

std::vector<unsigned> s_grid(const SuiteOptions& o) {
  return o.s_values.value_or(std::vector<unsigned>{1, 2});
}

std::vector<unsigned> r_grid(const SuiteOptions& o, unsigned lo, unsigned default_max) {
  if (o.r_values) return *o.r_values;
  return range_u(lo, o.r_max.value_or(default_max));
}

std::vector<std::uint64_t> k_grid(const SuiteOptions& o, std::uint64_t lo,
                                  std::uint64_t default_max) {
  if (o.k_values) return *o.k_values;
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = lo; k <= o.k_max.value_or(default_max); ++k) out.push_back(k);
  return out;
}

bool within_guard(std::uint64_t k, unsigned s) { return pow(k, s) <= kOracleGuard; }

void identities_tasks(const SuiteOptions& o, std::vector<Task>& tasks) {
  const auto rs = r_grid(o, 1, 8);
  for (unsigned s : s_grid(o)) {
    for (auto k : k_grid(o, 1, s == 1 ? 30 : 20)) {
      if (within_guard(k, s)) tasks.emplace_back([=] { return Report(check_crs_agreement(k, s)); });
    }
    for (auto k : k_grid(o, 2, 30)) {
      if (k >= 2 && within_guard(k, s)) tasks.emplace_back([=] { return Report(check_zero_sum(k, s)); });
    }
    for (auto k : k_grid(o, 2, 12)) {
      if (k < 2 || !within_guard(k, s)) continue;
      for (unsigned r : rs) {
        tasks.emplace_back([=] { return Report(check_three_forms(k, r, s)); });
      }
    }
  }
  for (unsigned s = 1; s <= 3; ++s) {
    for (unsigned r = 1; r <= 10; ++r) {
      tasks.emplace_back([=] { return Report(check_unit_dispatch(r, s)); });
    }
  }
}

void thm31_tasks(const SuiteOptions& o, std::vector<Task>& tasks) {
  const auto eps_list = o.eps.value_or(std::vector<Rational>{Rational(1, 2), Rational(1, 4)});
  const auto rs = r_grid(o, 2, 8);
  for (const auto& eps : eps_list) {
    std::vector<Factorization> ks;
    if (o.k_values) {
      for (auto k : *o.k_values) ks.push_back(factorization_of(k));
    } else {
      ks = theorem_3_1_candidates(eps);
    }
    for (const auto& k : ks) {
      for (unsigned r : rs) {
        for (unsigned s : s_grid(o)) {
          tasks.emplace_back([=] { return Report(check_theorem_3_1(k, r, s, eps)); });
        }
      }
    }
  }
}

void thm32_tasks(const SuiteOptions& o, std::vector<Task>& tasks) {
  const auto variants = o.variants.value_or(
      std::vector<SequenceVariant>{SequenceVariant::Window, SequenceVariant::WindowTimes2});
  const auto rs = o.r_values ? *o.r_values
                             : (o.r_max ? range_u(1, *o.r_max) : std::vector<unsigned>{2, 3});
  const auto ns = o.n_values.value_or(std::vector<std::uint64_t>{2, 5, 10, 20, 40});
  const Rational lambda = o.lambda.value_or(Rational(2));
  const Rational tol = o.tolerance.value_or(Rational(1, 20));
  for (auto v : variants) {
    for (unsigned r : rs) {
      for (unsigned s : s_grid(o)) {
        tasks.emplace_back(
            [=] { return Report(check_theorem_3_2(v, r, s, ns, lambda, tol)); });
      }
    }
  }
}

void thm33_tasks(const SuiteOptions& o, std::vector<Task>& tasks) {
  const std::uint64_t x_max = o.x.value_or(200);
  const auto ss = s_grid(o);
  for (unsigned r : r_grid(o, 1, 10)) {
    for (unsigned s : ss) {
      tasks.emplace_back([=] {
        const auto averages = average_over_k_prefix(x_max, r, s);
        std::size_t argmin = 0;
        for (std::size_t i = 1; i < averages.size(); ++i) {
          if (averages[i] < averages[argmin]) argmin = i;
        }
        CheckReport c = make_check(
            "thm33",
            {{"x_max", std::to_string(x_max)}, {"r", std::to_string(r)}, {"s", std::to_string(s)}},
            averages[argmin], Relation::Greater, Rational(0), "Theorem 3.3");
        c.details = {{"statistic", "minimum of average_over_k(x) over 1 <= x <= x_max"},
                     {"argmin_x", std::to_string(argmin + 1)},
                     {"average_at_x_max", averages.back().str()}};
        return Report(std::move(c));
      });
    }
  }
  for (unsigned s : ss) {
    for (std::uint64_t k = 1; k <= 10; ++k) {
      tasks.emplace_back([=] { return Report(check_limit_trend(k, s, 20, 40)); });
    }
  }
}

void thm34_tasks(const SuiteOptions& o, std::vector<Task>& tasks) {
  const auto ks = k_grid(o, 2, 20);
  for (unsigned s : s_grid(o)) {
    for (auto k : ks) {
      if (k < 2 || !within_guard(k, s)) continue;
      tasks.emplace_back([=] { return Report(check_theorem_3_4(k, s)); });
    }
  }
}

void corollary_tasks(const SuiteOptions& o, std::vector<Task>& tasks) {
  const auto ks = k_grid(o, 1, 30);
  const auto rs = r_grid(o, 1, 10);
  for (unsigned s : s_grid(o)) {
    for (auto k : ks) {
      for (unsigned r : rs) {
        tasks.emplace_back([=] { return Report(check_corollary(k, r, s)); });
      }
    }
  }
}

}  // namespace

bool report_passed(const Report& r) {
  if (const auto* c = std::get_if<CheckReport>(&r)) return c->holds;
  return std::get<ConvergenceReport>(r).converged;
}

std::vector<Report> run_suite(std::string_view name, const SuiteOptions& opts) {
  std::vector<Task> tasks;
  const bool all = name == "all";
  bool known = all;
  auto select = [&](std::string_view suite, void (*build)(const SuiteOptions&, std::vector<Task>&)) {
    if (all || name == suite) {
      build(opts, tasks);
      known = true;
    }
  };
  select("identities", identities_tasks);
  select("thm31", thm31_tasks);
  select("thm32", thm32_tasks);
  select("thm33", thm33_tasks);
  select("thm34", thm34_tasks);
  select("corollary", corollary_tasks);
  if (!known) throw std::invalid_argument("unknown suite: " + std::string(name));
  return parallel_map(tasks.size(), opts.threads, [&](std::size_t i) { return tasks[i](); });
}

}  // namespace crslab
