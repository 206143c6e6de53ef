#include "abelian/complexity.hpp"

#include <algorithm>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "abelian/error.hpp"
#include "suffix_array.hpp"

namespace abelian {

  std::uint64_t ParikhVector::total() const noexcept {
    std::uint64_t t = 0;
    for (auto c : counts_) {
      t += c;
    }
    return t;
  }

  std::string ParikhVector::to_string() const {
    std::string out = "(";
    for (std::size_t a = 0; a < counts_.size(); ++a) {
      if (a != 0) {
        out += ",";
      }
      out += std::to_string(counts_[a]);
    }
    return out + ")";
  }

  ParikhVector parikh(std::span<Letter const> w, std::size_t alphabet) {
    ParikhVector v(alphabet);
    for (Letter a : w) {
      if (a >= alphabet) {
        throw PreconditionError("letter outside alphabet in parikh()");
      }
      ++v[a];
    }
    return v;
  }

  ParikhVector parikh(WordPrefix const& w) {
    return parikh(w.symbols(), w.alphabet());
  }

  bool abelian_equivalent(std::span<Letter const> u,
                          std::span<Letter const> v,
                          std::size_t             alphabet) {
    return u.size() == v.size() && parikh(u, alphabet) == parikh(v, alphabet);
  }

  namespace {
    void check_range(WordPrefix const& w, std::size_t n_max) {
      if (n_max > w.size()) {
        throw PreconditionError("n_max = " + std::to_string(n_max)
                                + " exceeds prefix length "
                                + std::to_string(w.size()));
      }
    }

    struct WindowStats {
      std::uint64_t classes = 0;
      std::uint64_t balance = 0;
    };

    // Set of Parikh vectors of one window length. Vectors are keyed by their
    // first p - 1 entries (the last is fixed by the length) in mixed radix
    // n + 1; a dense bitmap is used when the key space is small.
    class ClassSet {
     public:
      ClassSet(std::size_t alphabet, std::size_t n) {
        std::size_t const radix = n + 1;
        std::uint64_t     space = 1;
        bool              fits  = true;
        weights_.assign(alphabet, 0);
        for (std::size_t a = 0; a + 1 < alphabet; ++a) {
          weights_[a] = space;
          if (space > (std::uint64_t(1) << 62) / radix) {
            fits = false;
            break;
          }
          space *= radix;
        }
        if (!fits) {
          mode_ = Mode::vectors;
        } else if (space <= (std::uint64_t(1) << 24)) {
          mode_ = Mode::dense;
          dense_.assign(space, 0);
        } else {
          mode_ = Mode::hashed;
        }
      }

      bool keyed() const noexcept {
        return mode_ != Mode::vectors;
      }
      std::uint64_t weight(Letter a) const noexcept {
        return weights_[a];
      }
      std::uint64_t key_of(std::vector<std::uint32_t> const& counts) const {
        std::uint64_t k = 0;
        for (std::size_t a = 0; a + 1 < counts.size(); ++a) {
          k += weights_[a] * counts[a];
        }
        return k;
      }

      void insert(std::uint64_t key, std::vector<std::uint32_t> const& counts) {
        switch (mode_) {
          case Mode::dense:
            if (dense_[key] == 0) {
              dense_[key] = 1;
              ++size_;
            }
            break;
          case Mode::hashed:
            if (hashed_.insert(key).second) {
              ++size_;
            }
            break;
          case Mode::vectors:
            if (vectors_.insert(counts).second) {
              ++size_;
            }
            break;
        }
      }

      std::uint64_t size() const noexcept {
        return size_;
      }

     private:
      enum class Mode { dense, hashed, vectors };
      Mode                                  mode_ = Mode::dense;
      std::vector<std::uint64_t>            weights_;
      std::vector<std::uint8_t>             dense_;
      std::unordered_set<std::uint64_t>     hashed_;
      std::set<std::vector<std::uint32_t>>  vectors_;
      std::uint64_t                         size_ = 0;
    };

    // Slides a length-n window across s. Consecutive windows differ by one
    // leaving and one entering letter, so each step touches two counts.
    WindowStats scan_windows(std::span<Letter const> s,
                             std::size_t             alphabet,
                             std::size_t             n,
                             bool                    want_classes) {
      if (n == 0) {
        return {1, 0};
      }
      std::vector<std::uint32_t> counts(alphabet, 0);
      for (std::size_t i = 0; i < n; ++i) {
        ++counts[s[i]];
      }
      std::vector<std::uint32_t> lo(counts), hi(counts);
      std::optional<ClassSet>    classes;
      std::uint64_t              key = 0;
      if (want_classes) {
        classes.emplace(alphabet, n);
        key = classes->key_of(counts);
        classes->insert(key, counts);
      }
      std::size_t const last = s.size() - n;
      for (std::size_t i = 0; i < last; ++i) {
        Letter const out = s[i];
        Letter const in  = s[i + n];
        if (out == in) {
          continue;
        }
        --counts[out];
        ++counts[in];
        lo[out] = std::min(lo[out], counts[out]);
        hi[in]  = std::max(hi[in], counts[in]);
        if (classes) {
          if (classes->keyed()) {
            key = key - classes->weight(out) + classes->weight(in);
          }
          classes->insert(key, counts);
        }
      }
      WindowStats st;
      st.classes = classes ? classes->size() : 0;
      for (std::size_t a = 0; a < alphabet; ++a) {
        st.balance = std::max<std::uint64_t>(st.balance, hi[a] - lo[a]);
      }
      return st;
    }

    // Runs f(n) for n = 1..n_max, split round-robin over `jobs` threads.
    template <typename F>
    void for_each_length(std::size_t n_max, unsigned jobs, F&& f) {
      jobs = std::max(1u, jobs);
      if (jobs == 1 || n_max < 2) {
        for (std::size_t n = 1; n <= n_max; ++n) {
          f(n);
        }
        return;
      }
      std::vector<std::thread> workers;
      for (unsigned t = 0; t < jobs; ++t) {
        workers.emplace_back([&, t] {
          for (std::size_t n = 1 + t; n <= n_max; n += jobs) {
            f(n);
          }
        });
      }
      for (auto& w : workers) {
        w.join();
      }
    }
  }  // namespace

  std::vector<std::uint64_t> abelian_profile(WordPrefix const& w,
                                             std::size_t       n_max,
                                             ProfileOptions    opts) {
    check_range(w, n_max);
    std::vector<std::uint64_t> rho_ab(n_max + 1, 1);
    for_each_length(n_max, opts.jobs, [&](std::size_t n) {
      rho_ab[n] = scan_windows(w.symbols(), w.alphabet(), n, true).classes;
    });
    return rho_ab;
  }

  std::set<ParikhVector> parikh_classes(WordPrefix const& w, std::size_t n) {
    if (n == 0 || n > w.size()) {
      throw PreconditionError("parikh_classes: need 1 <= n <= |w|");
    }
    std::set<ParikhVector> out;
    ParikhVector           v = parikh(w.window(0, n), w.alphabet());
    out.insert(v);
    for (std::size_t i = 0; i + n < w.size(); ++i) {
      if (w[i] == w[i + n]) {
        continue;
      }
      --v[w[i]];
      ++v[w[i + n]];
      out.insert(v);
    }
    return out;
  }

  std::vector<std::uint64_t> subword_profile(WordPrefix const& w,
                                             std::size_t       n_max) {
    check_range(w, n_max);
    std::vector<std::uint64_t> rho(n_max + 1, 1);
    if (n_max == 0) {
      return rho;
    }
    // Suffixes sharing a length-n prefix are contiguous in suffix-array
    // order, so rho(n) = #(suffixes of length >= n) - #{i : lcp[i] >= n}.
    auto const sa  = detail::suffix_array(w.symbols());
    auto const lcp = detail::lcp_array(w.symbols(), sa);
    std::vector<std::uint64_t> at_least(n_max + 2, 0);
    for (std::size_t i = 1; i < lcp.size(); ++i) {
      ++at_least[std::min<std::size_t>(lcp[i], n_max + 1)];
    }
    for (std::size_t v = n_max + 1; v-- > 0;) {
      at_least[v] += at_least[v + 1];
    }
    for (std::size_t n = 1; n <= n_max; ++n) {
      rho[n] = (w.size() - n + 1) - at_least[n];
    }
    return rho;
  }

  std::uint64_t balance_bound(WordPrefix const& w, std::size_t n_max) {
    check_range(w, n_max);
    std::uint64_t c = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
      c = std::max(c, scan_windows(w.symbols(), w.alphabet(), n, false).balance);
    }
    return c;
  }

  std::uint64_t ComplexityProfile::running_balance(std::size_t n) const {
    std::uint64_t c = 0;
    for (std::size_t m = 1; m <= n && m < balance.size(); ++m) {
      c = std::max(c, balance[m]);
    }
    return c;
  }

  ComplexityProfile compute_profile(WordPrefix const& w,
                                    std::size_t       n_max,
                                    bool              with_subword,
                                    ProfileOptions    opts) {
    check_range(w, n_max);
    ComplexityProfile p;
    p.n_max      = n_max;
    p.prefix_len = w.size();
    p.rho_ab.assign(n_max + 1, 1);
    p.balance.assign(n_max + 1, 0);
    for_each_length(n_max, opts.jobs, [&](std::size_t n) {
      auto const st = scan_windows(w.symbols(), w.alphabet(), n, true);
      p.rho_ab[n]   = st.classes;
      p.balance[n]  = st.balance;
    });
    p.balance_C = p.running_balance(n_max);
    if (with_subword) {
      p.rho = subword_profile(w, n_max);
    }
    return p;
  }

  std::string profile_csv(ComplexityProfile const& profile) {
    std::ostringstream out;
    out << "n,rho_ab,rho,balance_running\n";
    std::uint64_t running = 0;
    for (std::size_t n = 1; n <= profile.n_max; ++n) {
      running = std::max(running, profile.balance[n]);
      out << n << ',' << profile.rho_ab[n] << ',';
      if (profile.rho) {
        out << (*profile.rho)[n];
      }
      out << ',' << running << '\n';
    }
    return out.str();
  }

  BigInt max_abelian_complexity(std::uint64_t n, std::uint64_t k) {
    if (k == 0) {
      throw PreconditionError("max_abelian_complexity: k must be >= 1");
    }
    // binom(n + k - 1, r) with r = min(k - 1, n)
    std::uint64_t const r = std::min<std::uint64_t>(k - 1, n);
    BigInt              c = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
      c = c * BigInt(n + k - 1 - r + i) / i;
    }
    return c;
  }

}  // namespace abelian
