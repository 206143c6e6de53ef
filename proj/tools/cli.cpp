#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "abelian/characterize.hpp"
#include "abelian/complexity.hpp"
#include "abelian/error.hpp"
#include "abelian/powers.hpp"
#include "abelian/recipe_io.hpp"
#include "abelian/words.hpp"

namespace abelian::cli {

  namespace {
    using nlohmann::json;

    // Mirrors the keys accepted by `run <config.json>`.
    struct Config {
      std::string                  recipe;
      std::optional<std::size_t>   len;
      std::optional<std::size_t>   n_max;
      std::optional<std::size_t>   prefix_len;
      std::size_t                  k = 2;
      std::string                  slope = "golden";
      std::uint64_t                pos   = 1;
      std::optional<std::uint64_t> M;
      std::size_t                  r = 4;
      std::string                  out;
      unsigned                     jobs = 1;
      std::optional<std::size_t>   p;
      std::string                  variant = "morphism";
      std::string                  mode;   // powers: brute | vdw | sturmian
      std::string                  claim;  // verify
      std::string                  config_path;
      std::uint64_t                seed = 0;
    };

    class UsageError : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    void emit(Config const& cfg, std::string const& text, std::ostream& out) {
      if (cfg.out.empty()) {
        out << text;
        return;
      }
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) {
        throw UsageError("cannot open '" + cfg.out + "' for writing");
      }
      f << text;
    }

    RecipePtr need_recipe(Config const& cfg, char const* fallback = nullptr) {
      if (!cfg.recipe.empty()) {
        return resolve_recipe(cfg.recipe);
      }
      if (fallback == nullptr) {
        throw UsageError("--recipe is required");
      }
      return preset_recipe(fallback);
    }

    std::size_t prefix_length(Config const& cfg, std::size_t n_max,
                              std::size_t margin) {
      std::size_t const len = cfg.prefix_len.value_or(margin * n_max);
      if (len < n_max) {
        throw UsageError("--prefix-len must be >= --nmax");
      }
      return len;
    }

    ////////////////////////////////////////////////////////////////////
    // generate / profile
    ////////////////////////////////////////////////////////////////////

    int cmd_generate(Config const& cfg, std::ostream& out) {
      if (!cfg.len) {
        throw UsageError("--len is required");
      }
      auto const w = prefix_of(*need_recipe(cfg), *cfg.len);
      emit(cfg, w.to_string() + "\n", out);
      return kOk;
    }

    int cmd_profile(Config const& cfg, std::ostream& out, std::ostream& err) {
      if (!cfg.n_max || *cfg.n_max == 0) {
        throw UsageError("--nmax is required and must be positive");
      }
      std::size_t const n_max = *cfg.n_max;
      std::size_t const len   = prefix_length(cfg, n_max, 64);
      auto const        w     = prefix_of(*need_recipe(cfg), len);
      auto const profile = compute_profile(w, n_max, true, ProfileOptions{cfg.jobs});
      emit(cfg, profile_csv(profile), out);
      err << "prefix_len=" << len << " ratio=" << (len / n_max) << "\n";
      return kOk;
    }

    ////////////////////////////////////////////////////////////////////
    // powers
    ////////////////////////////////////////////////////////////////////

    int write_certificate(Config const&                 cfg,
                          AbelianPowerOccurrence const& occ,
                          WordRecipe const&             recipe,
                          json                          extra,
                          std::ostream&                 out) {
      json cert = certificate_json(occ, recipe);
      if (!check_certificate(cert)) {
        throw InconsistencyError("certificate failed re-verification");
      }
      for (auto const& [key, value] : extra.items()) {
        cert[key] = value;
      }
      emit(cfg, cert.dump(2) + "\n", out);
      return kOk;
    }

    int cmd_powers(Config const& cfg, std::ostream& out, std::ostream& err) {
      if (cfg.k == 0) {
        throw UsageError("--k must be positive");
      }
      if (cfg.mode == "sturmian") {
        auto const alpha = resolve_slope(cfg.slope);
        auto const found = SturmianLocator(alpha).at(cfg.pos, cfg.k);
        auto const recipe =
            make_recipe(recipe::Characteristic{alpha});
        json extra{{"case", found.which == SturmianCase::one ? 1 : 2},
                   {"pair",
                    {{"short", found.pair.short_period.str()},
                     {"long", found.pair.long_period.str()},
                     {"index", found.pair.index}}}};
        return write_certificate(cfg, found.occurrence, *recipe, extra, out);
      }

      auto const        recipe = need_recipe(cfg);
      std::size_t const len    = cfg.len.value_or(4096);
      auto const        w      = prefix_of(*recipe, len);

      if (cfg.mode == "brute") {
        for (std::size_t start = 0; start < w.size(); ++start) {
          if (auto ell = min_abelian_period(w, start, cfg.k, w.size())) {
            AbelianPowerOccurrence occ{start, *ell, cfg.k,
                                       parikh(w.window(start, *ell), w.alphabet())};
            return write_certificate(cfg, occ, *recipe, json::object(), out);
          }
        }
        err << "no Abelian " << cfg.k << "-power in a prefix of length " << len
            << "\n";
        return kFailed;
      }

      // vdw
      std::uint64_t M = 0;
      if (cfg.M) {
        M = *cfg.M;
      } else {
        M = std::max<std::uint64_t>(1, balance_bound(w, std::min<std::size_t>(len, 1024)));
        err << "M=" << M << " (measured balance)\n";
      }
      auto const weights = congo_weights(M, w.alphabet());
      auto const found = vdw_power_search(w, cfg.k, weights, SearchOptions{cfg.jobs});
      if (!found) {
        err << "no progression found in a prefix of length " << len << "\n";
        return kFailed;
      }
      return write_certificate(cfg, *found, *recipe, json{{"M", M}}, out);
    }

    ////////////////////////////////////////////////////////////////////
    // verify
    ////////////////////////////////////////////////////////////////////

    using Task = std::function<CheckReport()>;

    std::vector<std::string> const kClaims = {
        "thue-morse", "sturmian",       "rauzy", "periodicity",
        "max-complexity", "balance", "congo", "all"};

    Task claim_task(Config const& cfg, std::string const& claim) {
      std::size_t const n_max = cfg.n_max.value_or(256);
      if (n_max == 0) {
        throw UsageError("--nmax must be positive");
      }
      if (claim == "thue-morse") {
        auto const r   = need_recipe(cfg, "tm");
        auto const len = prefix_length(cfg, n_max, 64);
        return [=] {
          return tm_profile_check(prefix_of(*r, len), n_max, len / n_max);
        };
      }
      if (claim == "sturmian") {
        auto const r   = need_recipe(cfg, "fibonacci");
        auto const len = prefix_length(cfg, n_max, 64);
        return [=] {
          return sturmian_profile_check(prefix_of(*r, len), n_max,
                                        std::min<std::size_t>(n_max, 256));
        };
      }
      if (claim == "rauzy") {
        if (cfg.variant != "hubert" && cfg.variant != "morphism") {
          throw UsageError("--variant must be hubert or morphism");
        }
        auto const r = need_recipe(
            cfg, cfg.variant == "hubert" ? "hubert" : "rauzy-morphism");
        auto const len = prefix_length(cfg, n_max, 64);
        return [=] { return rauzy_constant3_check(*r, n_max, len); };
      }
      if (claim == "periodicity") {
        if (!cfg.p || *cfg.p == 0) {
          throw UsageError("--p is required and must be positive");
        }
        auto const        r   = need_recipe(cfg);
        std::size_t const p   = *cfg.p;
        std::size_t const len = cfg.prefix_len.value_or(64 * p);
        if (len < p + 1) {
          throw UsageError("--prefix-len must be >= p + 1");
        }
        return [=] { return periodicity_via_parikh(prefix_of(*r, len), p); };
      }
      if (claim == "max-complexity") {
        auto const r   = need_recipe(cfg, "max-complexity");
        auto const len = prefix_length(cfg, n_max, 8);
        return [=] { return max_complexity_check(prefix_of(*r, len), n_max); };
      }
      if (claim == "balance") {
        auto const r   = need_recipe(cfg, "tm");
        auto const len = prefix_length(cfg, n_max, 64);
        return [=] { return balance_bridge_check(prefix_of(*r, len), n_max); };
      }
      if (claim == "congo") {
        std::uint64_t const M = cfg.M.value_or(3);
        std::size_t const   r = cfg.r;
        return [=] { return congo_check(M, r); };
      }
      throw UsageError("unknown claim '" + claim + "'");
    }

    std::vector<CheckReport> run_tasks(std::vector<Task> const& tasks,
                                       unsigned                 jobs) {
      std::vector<std::optional<CheckReport>> results(tasks.size());
      std::vector<std::exception_ptr>         errors(tasks.size());
      std::atomic<std::size_t>                next{0};
      auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
          try {
            results[i] = tasks[i]();
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      };
      unsigned const           n = std::clamp<unsigned>(jobs, 1, tasks.size());
      std::vector<std::thread> pool;
      for (unsigned t = 1; t < n; ++t) {
        pool.emplace_back(worker);
      }
      worker();
      for (auto& th : pool) {
        th.join();
      }
      std::vector<CheckReport> out;
      for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (errors[i]) {
          std::rethrow_exception(errors[i]);
        }
        out.push_back(std::move(*results[i]));
      }
      return out;
    }

    int cmd_verify(Config const& cfg, std::ostream& out) {
      std::vector<Task> tasks;
      if (cfg.claim == "all") {
        for (auto const& c : {"thue-morse", "sturmian", "max-complexity",
                              "balance", "congo"}) {
          Config plain = cfg;
          plain.recipe.clear();
          tasks.push_back(claim_task(plain, c));
        }
        for (auto const& v : {"hubert", "morphism"}) {
          Config plain = cfg;
          plain.recipe.clear();
          plain.variant = v;
          tasks.push_back(claim_task(plain, "rauzy"));
        }
      } else {
        tasks.push_back(claim_task(cfg, cfg.claim));
      }
      auto const reports = run_tasks(tasks, cfg.jobs);

      std::size_t passed = 0;
      std::string csv    = std::string(kReportCsvHeader) + "\n";
      for (auto const& r : reports) {
        out << r.text() << "\n";
        csv += r.csv_row() + "\n";
        passed += r.pass ? 1 : 0;
      }
      out << passed << "/" << reports.size() << " claims pass\n";
      if (!cfg.out.empty()) {
        emit(cfg, csv, out);
      }
      return passed == reports.size() ? kOk : kFailed;
    }

    ////////////////////////////////////////////////////////////////////
    // run <config.json>
    ////////////////////////////////////////////////////////////////////

    std::string scalar_arg(json const& v) {
      if (v.is_string()) {
        return v.get<std::string>();
      }
      if (v.is_number_unsigned() || v.is_number_integer()) {
        if (v.get<std::int64_t>() <= 0) {
          throw UsageError("numeric config fields must be positive");
        }
        return std::to_string(v.get<std::int64_t>());
      }
      if (v.is_object() || v.is_array()) {
        return v.dump();
      }
      throw UsageError("unsupported config value " + v.dump());
    }

    std::vector<std::string> config_to_args(json const& j) {
      if (!j.is_object() || !j.contains("command")) {
        throw UsageError("config must be an object with a 'command' field");
      }
      static std::map<std::string, std::string> const flags = {
          {"recipe", "--recipe"},   {"len", "--len"},     {"n_max", "--nmax"},
          {"prefix_len", "--prefix-len"}, {"k", "--k"},   {"slope", "--slope"},
          {"pos", "--pos"},         {"M", "--M"},         {"r", "--r"},
          {"out", "--out"},         {"jobs", "--jobs"},   {"p", "--p"},
          {"variant", "--variant"}, {"seed", "--seed"}};
      std::vector<std::string> args{j.at("command").get<std::string>()};
      if (args[0] == "run") {
        throw UsageError("config command cannot be 'run'");
      }
      if (j.contains("mode")) {
        args.push_back(j.at("mode").get<std::string>());
      }
      if (j.contains("claim")) {
        args.push_back(j.at("claim").get<std::string>());
      }
      for (auto const& [key, value] : j.items()) {
        if (key == "command" || key == "mode" || key == "claim") {
          continue;
        }
        auto it = flags.find(key);
        if (it == flags.end()) {
          throw UsageError("unknown config field '" + key + "'");
        }
        if (key == "seed") {
          if (!value.is_number_unsigned()) {
            throw UsageError("seed must be a non-negative integer");
          }
          args.push_back(it->second);
          args.push_back(std::to_string(value.get<std::uint64_t>()));
          continue;
        }
        args.push_back(it->second);
        args.push_back(scalar_arg(value));
      }
      if (j.contains("n_max") && j.contains("prefix_len")
          && j.at("prefix_len").get<std::int64_t>() < j.at("n_max").get<std::int64_t>()) {
        throw UsageError("prefix_len must be >= n_max");
      }
      return args;
    }

    int dispatch(std::vector<std::string> const& args,
                 std::ostream&                   out,
                 std::ostream&                   err,
                 bool                            allow_run);

    int cmd_run(Config const& cfg, std::ostream& out, std::ostream& err) {
      std::ifstream in(cfg.config_path);
      if (!in) {
        throw UsageError("cannot read config '" + cfg.config_path + "'");
      }
      json const j = json::parse(in);
      return dispatch(config_to_args(j), out, err, false);
    }

    int dispatch(std::vector<std::string> const& args,
                 std::ostream&                   out,
                 std::ostream&                   err,
                 bool                            allow_run) {
      Config   cfg;
      CLI::App app{"Abelian complexity and Abelian powers of infinite words",
                   "abelian"};
      app.require_subcommand(1);

      auto* gen = app.add_subcommand("generate", "Print a prefix as digits");
      gen->add_option("--recipe", cfg.recipe, "Preset, inline JSON or file")
          ->required();
      gen->add_option("--len", cfg.len, "Prefix length")->required();
      gen->add_option("--out", cfg.out, "Output file");

      auto* prof = app.add_subcommand("profile", "CSV of n, rho_ab, rho, balance");
      prof->add_option("--recipe", cfg.recipe, "Preset, inline JSON or file")->required();
      prof->add_option("--nmax", cfg.n_max, "Largest factor length")->required();
      prof->add_option("--prefix-len", cfg.prefix_len, "Default 64 * nmax");
      prof->add_option("--jobs", cfg.jobs, "Worker threads");
      prof->add_option("--out", cfg.out, "CSV file instead of stdout");

      auto* pow = app.add_subcommand("powers", "Find an Abelian k-power");
      pow->add_option("mode", cfg.mode, "brute | vdw | sturmian")
          ->required()
          ->check(CLI::IsMember({"brute", "vdw", "sturmian"}));
      pow->add_option("--recipe", cfg.recipe, "Word for brute and vdw");
      pow->add_option("--len", cfg.len, "Prefix length (default 4096)");
      pow->add_option("--k", cfg.k, "Exponent (default 2)");
      pow->add_option("--M", cfg.M, "Balance bound (default: measured)");
      pow->add_option("--slope", cfg.slope, "Slope for sturmian (default golden)");
      pow->add_option("--pos", cfg.pos, "1-based position");
      pow->add_option("--jobs", cfg.jobs, "Worker threads");
      pow->add_option("--out", cfg.out, "Certificate file instead of stdout");

      auto* ver = app.add_subcommand("verify", "Check a claim on a prefix");
      ver->add_option("claim", cfg.claim)->required()->check(CLI::IsMember(kClaims));
      ver->add_option("--recipe", cfg.recipe, "Word to check");
      ver->add_option("--nmax", cfg.n_max, "Check range (default 256)");
      ver->add_option("--prefix-len", cfg.prefix_len, "Default 64 * nmax");
      ver->add_option("--p", cfg.p, "Period for periodicity");
      ver->add_option("--variant", cfg.variant, "hubert | morphism, for rauzy");
      ver->add_option("--k", cfg.k, "Accepted for config symmetry");
      ver->add_option("--M", cfg.M, "Largest M for congo (default 3)");
      ver->add_option("--r", cfg.r, "Largest r for congo (default 4)");
      ver->add_option("--jobs", cfg.jobs, "Worker threads for all");
      ver->add_option("--out", cfg.out, "CSV report file");

      CLI::App* run = nullptr;
      if (allow_run) {
        run = app.add_subcommand("run", "Execute a JSON config");
        run->add_option("config", cfg.config_path, "JSON config file")->required();
      }
      for (auto* sub : {gen, prof, pow, ver}) {
        sub->add_option("--seed", cfg.seed, "Recorded for reproducibility");
      }

      std::vector<std::string> reversed(args.rbegin(), args.rend());
      try {
        app.parse(reversed);
      } catch (CLI::ParseError const& e) {
        int const code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
      }
      if (cfg.jobs == 0) {
        throw UsageError("--jobs must be positive");
      }

      if (gen->parsed()) {
        return cmd_generate(cfg, out);
      }
      if (prof->parsed()) {
        return cmd_profile(cfg, out, err);
      }
      if (pow->parsed()) {
        return cmd_powers(cfg, out, err);
      }
      if (ver->parsed()) {
        return cmd_verify(cfg, out);
      }
      if (run != nullptr && run->parsed()) {
        return cmd_run(cfg, out, err);
      }
      return kUsage;
    }
  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    try {
      return dispatch(args, out, err, true);
    } catch (UsageError const& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    } catch (PreconditionError const& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    } catch (nlohmann::json::exception const& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    } catch (BudgetError const& e) {
      err << "resource limit: " << e.what() << "\n";
      return kResource;
    } catch (PrecisionError const& e) {
      err << "precision: " << e.what() << "\n";
      return kResource;
    } catch (std::bad_alloc const&) {
      err << "resource limit: out of memory\n";
      return kResource;
    } catch (InconsistencyError const& e) {
      err << "verification failed: " << e.what() << "\n";
      return kFailed;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
  }

}  // namespace abelian::cli
