#include "abelian/powers.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "abelian/error.hpp"
#include "abelian/recipe_io.hpp"

namespace abelian {

  bool verify_abelian_power(WordPrefix const& w,
                            std::size_t       start,
                            std::size_t       ell,
                            std::size_t       k) {
    if (ell == 0 || k == 0) {
      throw PreconditionError("verify_abelian_power: ell and k must be >= 1");
    }
    if (start > w.size() || ell > (w.size() - start) / k) {
      throw std::out_of_range("Abelian power [" + std::to_string(start) + ", "
                              + std::to_string(start) + " + "
                              + std::to_string(k) + "*" + std::to_string(ell)
                              + ") outside prefix of length "
                              + std::to_string(w.size()));
    }
    ParikhVector const first = parikh(w.window(start, ell), w.alphabet());
    for (std::size_t j = 1; j < k; ++j) {
      if (parikh(w.window(start + j * ell, ell), w.alphabet()) != first) {
        return false;
      }
    }
    return true;
  }

  std::optional<std::size_t> min_abelian_period(WordPrefix const& w,
                                                std::size_t       start,
                                                std::size_t       k,
                                                std::size_t       ell_max) {
    if (k == 0 || start >= w.size()) {
      return std::nullopt;
    }
    std::size_t const cap = std::min(ell_max, (w.size() - start) / k);
    if (cap == 0) {
      return std::nullopt;
    }
    // Per-letter prefix sums over the part of the word any candidate uses.
    std::size_t const p    = w.alphabet();
    std::size_t const span = k * cap;
    std::vector<std::uint32_t> sums((span + 1) * p, 0);
    for (std::size_t t = 0; t < span; ++t) {
      std::copy_n(&sums[t * p], p, &sums[(t + 1) * p]);
      ++sums[(t + 1) * p + w[start + t]];
    }
    auto count = [&](std::size_t from, std::size_t to, std::size_t a) {
      return sums[to * p + a] - sums[from * p + a];
    };
    for (std::size_t ell = 1; ell <= cap; ++ell) {
      bool ok = true;
      for (std::size_t j = 1; j < k && ok; ++j) {
        for (std::size_t a = 0; a < p && ok; ++a) {
          ok = count(j * ell, (j + 1) * ell, a) == count(0, ell, a);
        }
      }
      if (ok) {
        return ell;
      }
    }
    return std::nullopt;
  }

  CongoWeights congo_weights(std::uint64_t M, std::size_t r) {
    if (M == 0 || r == 0) {
      throw PreconditionError("congo_weights: M and r must be >= 1");
    }
    CongoWeights w;
    w.M = M;
    w.r = r;
    BigInt sum = 0;
    for (std::size_t i = 0; i < r; ++i) {
      BigInt const a = (i == 0) ? BigInt(1) : BigInt(M) * sum + 1;
      w.alphas.push_back(a);
      sum += a;
    }
    w.N = BigInt(M) * sum + 1;
    return w;
  }

  bool congo_only_trivial_zero(CongoWeights const& w) {
    std::int64_t const  M = static_cast<std::int64_t>(w.M);
    std::vector<std::int64_t> c(w.r, -M);
    while (true) {
      bool const zero = std::all_of(c.begin(), c.end(),
                                    [](std::int64_t x) { return x == 0; });
      if (!zero) {
        BigInt s = 0;
        for (std::size_t i = 0; i < w.r; ++i) {
          s += BigInt(c[i]) * w.alphas[i];
        }
        if (s % w.N == 0) {
          return false;
        }
      }
      std::size_t i = 0;
      while (i < w.r && c[i] == M) {
        c[i] = -M;
        ++i;
      }
      if (i == w.r) {
        return true;
      }
      ++c[i];
    }
  }

  std::optional<AbelianPowerOccurrence>
  vdw_power_search(WordPrefix const&   w,
                   std::size_t         k,
                   CongoWeights const& weights,
                   SearchOptions       opts) {
    if (k == 0) {
      throw PreconditionError("vdw_power_search: k must be >= 1");
    }
    if (weights.r != w.alphabet() || weights.alphas.size() != weights.r) {
      throw PreconditionError("vdw_power_search: weights.r must equal the "
                              "alphabet size");
    }
    if (weights.N >= (BigInt(1) << 62)) {
      throw PreconditionError("vdw_power_search: modulus N too large");
    }
    std::uint64_t const        N = static_cast<std::uint64_t>(weights.N);
    std::vector<std::uint64_t> alpha_mod(weights.r);
    for (std::size_t a = 0; a < weights.r; ++a) {
      alpha_mod[a] = static_cast<std::uint64_t>(weights.alphas[a] % weights.N);
    }
    // nu[t] = (weighted sum of w[0..t)) mod N, so nu[0] = 0.
    std::size_t const          L = w.size();
    std::vector<std::uint64_t> nu(L + 1, 0);
    for (std::size_t t = 0; t < L; ++t) {
      nu[t + 1] = (nu[t] + alpha_mod[w[t]]) % N;
    }

    std::size_t const s_max = L / k;
    // Hit for one s: smallest t0 with nu constant along t0, t0 + s, ...
    auto scan = [&](std::size_t s) -> std::optional<std::size_t> {
      std::size_t const reach = k * s;
      for (std::size_t t0 = 0; t0 + reach <= L; ++t0) {
        std::uint64_t const v  = nu[t0];
        bool               ok = true;
        for (std::size_t j = 1; j <= k && ok; ++j) {
          ok = nu[t0 + j * s] == v;
        }
        if (ok) {
          return t0;
        }
      }
      return std::nullopt;
    };

    std::optional<std::pair<std::size_t, std::size_t>> hit;  // (s, t0)
    unsigned const jobs = std::max(1u, opts.jobs);
    if (jobs == 1) {
      for (std::size_t s = 1; s <= s_max && !hit; ++s) {
        if (auto t0 = scan(s)) {
          hit.emplace(s, *t0);
        }
      }
    } else {
      // Worker t owns s = t + 1, t + 1 + jobs, ...; all stop once their s
      // exceeds the best s found so far, so the winner is the global minimum.
      std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
      std::mutex               mu;
      std::vector<std::thread> workers;
      for (unsigned t = 0; t < jobs; ++t) {
        workers.emplace_back([&, t] {
          for (std::size_t s = 1 + t; s <= s_max && s < best.load(); s += jobs) {
            if (auto t0 = scan(s)) {
              std::lock_guard<std::mutex> lock(mu);
              if (!hit || s < hit->first) {
                hit.emplace(s, *t0);
                best.store(s);
              }
              return;
            }
          }
        });
      }
      for (auto& th : workers) {
        th.join();
      }
    }
    if (!hit) {
      return std::nullopt;
    }
    auto const [s, t0] = *hit;
    if (!verify_abelian_power(w, t0, s, k)) {
      throw InconsistencyError(
          "nu-progression at start " + std::to_string(t0) + ", period "
          + std::to_string(s) + " is not an Abelian power: M = "
          + std::to_string(weights.M) + " is too small for this word");
    }
    return AbelianPowerOccurrence{t0, s, k, parikh(w.window(t0, s), w.alphabet())};
  }

  ////////////////////////////////////////////////////////////////////////
  // Sturmian words
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct DeltaForms {
      AffineThreshold delta;              // delta
      AffineThreshold alpha_minus_delta;  // alpha - delta
      AffineThreshold one_minus_delta;    // 1 - delta
      AffineThreshold min_form;           // min(delta, alpha - delta)
    };

    DeltaForms delta_forms(Slope const& slope, DeltaPolicy const& d) {
      DeltaForms f;
      f.delta             = {d.u, d.v};
      f.alpha_minus_delta = {-d.u, 1 - d.v};
      f.one_minus_delta   = {1 - d.u, -d.v};
      if (slope.sign(f.delta) <= 0 || slope.sign(f.alpha_minus_delta) <= 0) {
        throw PreconditionError("delta must satisfy 0 < delta < alpha");
      }
      // delta - (alpha - delta) = 2u + (2v - 1) alpha
      bool const delta_smaller
          = slope.sign(AffineThreshold{2 * d.u, 2 * d.v - 1}) < 0;
      f.min_form = delta_smaller ? f.delta : f.alpha_minus_delta;
      return f;
    }

    PeriodPair period_pair(Slope const& slope, std::size_t k,
                           DeltaPolicy const& d) {
      if (k == 0) {
        throw PreconditionError("k must be >= 1");
      }
      if (!slope.expansion().below_half()) {
        throw PreconditionError("sturmian_period_pair requires alpha < 1/2");
      }
      auto const forms = delta_forms(slope, d);
      Rational const kk(static_cast<unsigned long long>(k));
      for (std::size_t n = 0;; n += 2) {
        Convergent const next = slope.convergent(n + 1);
        Rational const   q(next.q);
        // q_{n+1} * min(delta, alpha - delta) - k > 0
        AffineThreshold const test{q * forms.min_form.u - kk,
                                   q * forms.min_form.v};
        if (slope.sign(test) > 0) {
          return PeriodPair{slope.convergent(n).q, next.q, n};
        }
      }
    }

    std::size_t to_size(BigInt const& x) {
      if (x > BigInt(std::numeric_limits<std::uint32_t>::max())) {
        throw BudgetError("Abelian period " + x.str()
                          + " too large to materialize");
      }
      return static_cast<std::size_t>(x);
    }
  }  // namespace

  PeriodPair sturmian_period_pair(ContinuedFraction const& alpha,
                                  std::size_t              k,
                                  DeltaPolicy const&       delta) {
    return period_pair(Slope(alpha), k, delta);
  }

  SturmianLocator::SturmianLocator(ContinuedFraction alpha, Options opts)
      : complemented_(!alpha.below_half()),
        original_(alpha),
        work_(complemented_ ? alpha.complement() : alpha),
        opts_(std::move(opts)) {
    delta_forms(work_, opts_.delta);
  }

  PeriodPair SturmianLocator::pair(std::size_t k) const {
    return period_pair(work_, k, opts_.delta);
  }

  SturmianPower SturmianLocator::at(std::uint64_t i, std::size_t k) const {
    if (i == 0) {
      throw PreconditionError("positions in c_alpha are 1-based");
    }
    SturmianPower result;
    result.pair      = pair(k);
    auto const forms = delta_forms(work_, opts_.delta);
    BigInt const ii(i);
    AffineThreshold const alpha_form{0, 1};

    // Case 1: {i a} < a - d  or  a <= {i a} < 1 - d
    // Case 2: a - d <= {i a} < a  or  1 - d <= {i a} < 1
    using std::strong_ordering;
    bool const below_a_minus_d
        = work_.compare_frac(ii, forms.alpha_minus_delta) == strong_ordering::less;
    bool const below_a
        = work_.compare_frac(ii, alpha_form) == strong_ordering::less;
    bool const below_one_minus_d
        = work_.compare_frac(ii, forms.one_minus_delta) == strong_ordering::less;
    bool const case_one = below_a_minus_d || (!below_a && below_one_minus_d);
    result.which = case_one ? SturmianCase::one : SturmianCase::two;

    std::size_t const ell = to_size(case_one ? result.pair.short_period
                                             : result.pair.long_period);
    std::size_t const start = static_cast<std::size_t>(i - 1);
    std::size_t const len   = start + k * ell;
    auto const        word  = characteristic_prefix(original_, len);

    if (opts_.check_rotation) {
      // Case 1, {i a} < a - d and Case 2, {i a} < a: R = 1; otherwise R = 0.
      int const predicted = (case_one ? below_a_minus_d : below_a) ? 1 : 0;
      AffineThreshold const one_minus_alpha{1, -1};
      for (std::size_t j = 1; j <= k; ++j) {
        std::uint64_t const n = i + j * ell - 1;
        int const r = work_.frac_less_than(BigInt(n), one_minus_alpha) ? 0 : 1;
        int const letter = complemented_ ? 1 - word[n - 1] : word[n - 1];
        if (r != predicted || letter != r) {
          throw InconsistencyError(
              "R^" + std::to_string(n) + "(alpha) = " + std::to_string(r)
              + ", expected " + std::to_string(predicted) + " (word letter "
              + std::to_string(letter) + ")");
        }
        if (j < k
            && !abelian_equivalent(word.window(start + (j - 1) * ell, ell),
                                   word.window(start + j * ell, ell), 2)) {
          throw InconsistencyError("consecutive blocks " + std::to_string(j)
                                   + " and " + std::to_string(j + 1)
                                   + " are not Abelian equivalent");
        }
      }
    }

    if (!verify_abelian_power(word, start, ell, k)) {
      throw InconsistencyError("no Abelian " + std::to_string(k)
                               + "-power of period " + std::to_string(ell)
                               + " at position " + std::to_string(i));
    }
    result.occurrence = AbelianPowerOccurrence{
        start, ell, k, parikh(word.window(start, ell), 2)};
    return result;
  }

  SturmianPower sturmian_power_at(ContinuedFraction const& alpha,
                                  std::uint64_t            i,
                                  std::size_t              k,
                                  DeltaPolicy const&       delta) {
    return SturmianLocator(alpha, SturmianLocator::Options{delta, false})
        .at(i, k);
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificates
  ////////////////////////////////////////////////////////////////////////

  nlohmann::json certificate_json(AbelianPowerOccurrence const& occ,
                                  WordRecipe const&             recipe) {
    return nlohmann::json{{"start", occ.start},
                          {"period", occ.period},
                          {"exponent", occ.exponent},
                          {"block_parikh", occ.block_parikh.counts()},
                          {"recipe", recipe_to_json(recipe)}};
  }

  bool check_certificate(nlohmann::json const& cert, GenerationLimits limits) {
    auto const start  = cert.at("start").get<std::size_t>();
    auto const period = cert.at("period").get<std::size_t>();
    auto const k      = cert.at("exponent").get<std::size_t>();
    auto const counts = cert.at("block_parikh").get<std::vector<std::uint64_t>>();
    auto const recipe = recipe_from_json(cert.at("recipe"));
    if (period == 0 || k == 0) {
      return false;
    }
    auto const w = prefix_of(*recipe, start + k * period, limits);
    return verify_abelian_power(w, start, period, k)
           && parikh(w.window(start, period), w.alphabet()).counts() == counts;
  }

}  // namespace abelian
