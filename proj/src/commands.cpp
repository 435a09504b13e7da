#include "cnchar/commands.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cnchar/frobenius.hpp"
#include "cnchar/models.hpp"
#include "cnchar/paths.hpp"
#include "cnchar/specialise.hpp"
#include "cnchar/verify.hpp"

namespace cnchar {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runs job(0..count-1) on the configured number of workers; results land
// in caller-owned slots so output order stays fixed.
void parallel_for(int count, const std::function<void(int)>& job) {
  const int workers = std::min(thread_count(), count);
  if (workers <= 1) {
    for (int j = 0; j < count; ++j) job(j);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex guard;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int j; (j = next++) < count;) {
        try {
          job(j);
        } catch (...) {
          std::lock_guard lock(guard);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<int> grounds(int n, int i) {
  if (i < -1 || i > n) throw UsageError("--i must lie in 0..n");
  std::vector<int> out;
  for (int g = 0; g <= n; ++g)
    if (i < 0 || g == i) out.push_back(g);
  return out;
}

std::string text_series(const TruncatedSeries& s) {
  std::ostringstream os;
  for (const auto& [term, c] : s.terms()) {
    os << "q^" << term.first << " [";
    for (std::size_t j = 0; j < term.second.exponents.size(); ++j) os << (j ? "," : "") << term.second.exponents[j];
    os << "] " << c << "\n";
  }
  return os.str();
}

SecondaryInt parse_part(const std::string& s, int m) {
  // size:x,y with letters given as ranks 1..m
  int size, x, y;
  char colon, comma;
  std::istringstream is(s);
  if (!(is >> size >> colon >> x >> comma >> y) || colon != ':' || comma != ',' || !is.eof())
    throw UsageError("--seed expects size:x,y");
  if (x < 1 || y < 1 || x > m || y > m) throw UsageError("--seed letters must be ranks in 1..m");
  return make_secondary(size, Letter{x}, Letter{y});
}

nlohmann::json part_json(SecondaryInt a) { return {{"size", a.size}, {"x", a.x.rank}, {"y", a.y.rank}}; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Level-1 C_n^(1) characters: partition models, bijections and product checks"};
  app.require_subcommand(1);
  int status = 0;

  int n = 2, i = -1, N = 10, m = 4;
  std::string model = "rho", format = "json", bijection = "phi", seed;
  std::vector<int> kvec;
  bool odd = false, list = false;

  auto* energy = app.add_subcommand("verify-energy", "Compare the two energy formulas on every ordered pair");
  energy->add_option("--n", n)->required()->check(CLI::Range(2, 8));
  energy->callback([&] {
    auto r = verify_energy(n);
    out << r.to_json().dump() << "\n";
    status = r.mismatches == 0 ? 0 : 1;
  });

  auto* chr = app.add_subcommand("char", "Colour-tracked truncated character from one model");
  chr->add_option("--n", n)->required()->check(CLI::Range(2, 8));
  chr->add_option("--i", i)->required();
  chr->add_option("--model", model)->check(CLI::IsMember({"exact", "atleast", "rho", "frobenius", "paths"}));
  chr->add_option("--N", N)->required()->check(CLI::Range(0, 60));
  chr->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  chr->callback([&] {
    if (i < 0 || i > n) throw UsageError("--i must lie in 0..n");
    TruncatedSeries s = model == "exact"       ? enumerate_grounded(n, i, Relation::Exact, N)
                        : model == "atleast"   ? enumerate_grounded(n, i, Relation::AtLeast, N)
                        : model == "rho"       ? enumerate_rho(n, i, N)
                        : model == "frobenius" ? enumerate_frobenius(n, i, N)
                                               : enumerate_paths_model(2 * n, omega(2 * n, i), N);
    out << (format == "json" ? s.to_json().dump() + "\n" : text_series(s));
  });

  auto* models = app.add_subcommand("verify-models", "Cross-model equality for every ground");
  models->add_option("--n", n)->required()->check(CLI::Range(2, 8));
  models->add_option("--N", N)->required()->check(CLI::Range(0, 40));
  models->add_option("--i", i, "single ground (default: all)");
  models->callback([&] {
    auto gs = grounds(n, i);
    std::vector<nlohmann::json> rows(gs.size());
    std::atomic<bool> ok{true};
    parallel_for(static_cast<int>(gs.size()), [&](int j) {
      auto r = verify_models(n, gs[static_cast<std::size_t>(j)], N);
      if (!r.ok()) ok = false;
      rows[static_cast<std::size_t>(j)] = r.to_json();
    });
    out << nlohmann::json{{"n", n}, {"N", N}, {"grounds", rows}, {"ok", ok.load()}}.dump() << "\n";
    status = ok ? 0 : 1;
  });

  auto* spec = app.add_subcommand("specialize", "Dilated paths model against the level-1 product");
  spec->add_option("--n", n)->required()->check(CLI::Range(1, 8));
  spec->add_option("--i", i)->required();
  spec->add_option("--N", N)->required()->check(CLI::Range(0, 80));
  spec->callback([&] {
    if (i < 0 || i > n) throw UsageError("--i must lie in 0..n");
    auto lhs = dilated_paths_model(n, i, N);
    auto rhs = product_level_one(n, i, N);
    auto mm = first_mismatch(lhs, rhs);
    auto j = mismatch_json(mm);
    std::vector<std::string> coeffs;
    for (const auto& c : lhs.q_coefficients()) coeffs.push_back(c.str());
    j["n"] = n;
    j["i"] = i;
    j["N"] = N;
    j["coefficients"] = coeffs;
    out << j.dump() << "\n";
    status = mm ? 1 : 0;
  });

  auto* cmpp = app.add_subcommand("cmpp-check", "Brute-force admissible partitions against the product side");
  cmpp->add_option("--n", n)->required()->check(CLI::Range(1, 6));
  cmpp->add_option("--k", kvec, "k_0,...,k_n")->required()->delimiter(',')->check(CLI::NonNegativeNumber);
  cmpp->add_option("--N", N)->required()->check(CLI::Range(0, 40));
  cmpp->add_flag("--odd", odd, "odd moduli variant");
  cmpp->callback([&] {
    if (static_cast<int>(kvec.size()) != n + 1) throw UsageError("--k needs n+1 entries");
    auto r = cmpp_check(n, kvec, N, odd);
    out << r.to_json().dump() << "\n";
    status = r.ok ? 0 : 1;
  });

  auto* dot = app.add_subcommand("crystal-dot", "DOT graph of the crystal");
  dot->add_option("--n", n)->required()->check(CLI::Range(2, 8));
  dot->callback([&] { out << Crystal(n).to_dot(); });

  auto* rt = app.add_subcommand("roundtrip", "Check a bijection in both directions");
  rt->add_option("--n", n)->required()->check(CLI::Range(2, 8));
  rt->add_option("--N", N)->required()->check(CLI::Range(0, 30));
  rt->add_option("--bijection", bijection)->required()->check(CLI::IsMember({"phi", "frobenius", "lambda"}));
  rt->add_option("--i", i, "single ground (default: all)");
  rt->callback([&] {
    auto gs = grounds(n, i);
    std::vector<nlohmann::json> rows(gs.size());
    std::atomic<long> failures{0};
    parallel_for(static_cast<int>(gs.size()), [&](int j) {
      const int g = gs[static_cast<std::size_t>(j)];
      auto r = bijection == "phi"         ? roundtrip_phi(n, g, N)
               : bijection == "frobenius" ? roundtrip_frobenius(n, g, N)
                                          : roundtrip_lambda(n, g, N);
      failures += r.failures;
      rows[static_cast<std::size_t>(j)] = r.to_json();
    });
    out << nlohmann::json{{"bijection", bijection}, {"grounds", rows}, {"failures", failures.load()}}.dump() << "\n";
    status = failures == 0 ? 0 : 1;
  });

  auto* paths = app.add_subcommand("paths", "Paths through a part");
  paths->add_option("--m", m, "alphabet length")->check(CLI::Range(1, 12));
  paths->add_option("--seed", seed, "part as size:x,y with letter ranks")->required();
  paths->add_flag("--list", list, "print every path");
  paths->callback([&] {
    auto a = parse_part(seed, m);
    auto ps = paths_through(a, m);
    nlohmann::json j{{"part", part_json(a)}, {"count", ps.size()}};
    if (list) {
      auto arr = nlohmann::json::array();
      for (const auto& p : ps) {
        auto row = nlohmann::json::array();
        for (const auto& e : p) row.push_back(part_json(e));
        arr.push_back(row);
      }
      j["paths"] = arr;
    }
    out << j.dump() << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}

}  // namespace cnchar
