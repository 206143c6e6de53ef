#include "abelian/characterize.hpp"

#include <map>
#include <sstream>

#include "abelian/error.hpp"
#include "abelian/powers.hpp"

namespace abelian {

  std::string Witness::to_string() const {
    std::ostringstream out;
    out << "n=" << n;
    if (!positions.empty()) {
      out << " positions=";
      for (std::size_t i = 0; i < positions.size(); ++i) {
        out << (i ? " " : "") << positions[i];
      }
    }
    if (!vectors.empty()) {
      out << " vectors=";
      for (std::size_t i = 0; i < vectors.size(); ++i) {
        out << (i ? " " : "") << vectors[i].to_string();
      }
    }
    if (!note.empty()) {
      out << " note=" << note;
    }
    return out.str();
  }

  std::string CheckReport::text() const {
    std::string out = claim + ": " + (pass ? "PASS" : "FAIL") + " on prefix ("
                      + range + ")";
    if (witness) {
      out += "\n  witness: " + witness->to_string();
    }
    return out;
  }

  namespace {
    std::string csv_field(std::string const& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
      }
      std::string out = "\"";
      for (char c : s) {
        out += c;
        if (c == '"') {
          out += '"';
        }
      }
      return out + "\"";
    }
  }  // namespace

  std::string CheckReport::csv_row() const {
    return csv_field(claim) + "," + csv_field(range) + ","
           + (pass ? "pass" : "fail") + ","
           + csv_field(witness ? witness->to_string() : "");
  }

  namespace {
    std::string range_text(std::size_t n_max, std::size_t len) {
      return "n=1.." + std::to_string(n_max) + " |w|=" + std::to_string(len);
    }

    // First occurrence of each Parikh class of length-n windows, in order of
    // position. At most `cap` classes are listed.
    Witness class_witness(WordPrefix const& w, std::size_t n, std::size_t cap) {
      Witness                  wit;
      std::set<ParikhVector> seen;
      ParikhVector             v = parikh(w.window(0, n), w.alphabet());
      for (std::size_t i = 0;; ++i) {
        if (seen.insert(v).second && wit.positions.size() < cap) {
          wit.positions.push_back(i);
          wit.vectors.push_back(v);
        }
        if (i + n >= w.size()) {
          break;
        }
        --v[w[i]];
        ++v[w[i + n]];
      }
      wit.n = n;
      return wit;
    }

    CheckReport profile_check(std::string       claim,
                              WordPrefix const& w,
                              std::size_t       n_max,
                              auto              expected) {
      CheckReport report;
      report.claim = std::move(claim);
      report.range = range_text(n_max, w.size());
      auto const rho_ab = abelian_profile(w, n_max);
      report.pass       = true;
      for (std::size_t n = 1; n <= n_max; ++n) {
        std::uint64_t const want = expected(n);
        if (rho_ab[n] != want) {
          report.pass    = false;
          report.witness = class_witness(w, n, 16);
          report.witness->note = "rho_ab=" + std::to_string(rho_ab[n])
                                 + " expected " + std::to_string(want);
          break;
        }
      }
      return report;
    }
  }  // namespace

  CheckReport tm_profile_check(WordPrefix const& w,
                               std::size_t       n_max,
                               std::size_t       margin) {
    if (n_max == 0) {
      throw PreconditionError("tm_profile_check: n_max must be >= 1");
    }
    if (w.size() / margin < n_max) {
      throw PreconditionError("tm_profile_check: prefix of length "
                              + std::to_string(w.size()) + " is shorter than "
                              + std::to_string(margin) + " * n_max");
    }
    return profile_check("thue-morse-profile", w, n_max, [](std::size_t n) {
      return n % 2 == 1 ? std::uint64_t(2) : std::uint64_t(3);
    });
  }

  std::vector<MuDecomposition> mu_preimage_decompose(WordPrefix const& w) {
    std::vector<MuDecomposition> found;
    for (std::size_t offset = 0; offset < 2; ++offset) {
      if (offset > w.size()) {
        break;
      }
      MuDecomposition d;
      d.offset = offset;
      if (offset == 1) {
        d.prepended = w[0];
      }
      bool        ok = d.prepended.value_or(0) <= 1;
      std::size_t i  = offset;
      for (; ok && i + 1 < w.size(); i += 2) {
        Letter const a = w[i];
        Letter const b = w[i + 1];
        ok = (a == 0 && b == 1) || (a == 1 && b == 0);
        d.preimage.push_back(a);
      }
      if (!ok) {
        continue;
      }
      if (i < w.size()) {
        ok         = w[i] <= 1;
        d.dangling = true;
      }
      if (ok) {
        found.push_back(std::move(d));
      }
    }
    return found;
  }

  CheckReport periodicity_via_parikh(WordPrefix const& w, std::size_t p) {
    if (p == 0 || w.size() < p + 1) {
      throw PreconditionError("periodicity_via_parikh: need p >= 1 and |w| >= p + 1");
    }
    CheckReport report;
    report.claim = "periodicity p=" + std::to_string(p);
    report.range = "windows of length " + std::to_string(p) + " |w|="
                   + std::to_string(w.size());

    std::optional<std::size_t> parikh_break;  // first i with Psi(i) != Psi(i+1)
    ParikhVector               v = parikh(w.window(0, p), w.alphabet());
    ParikhVector const         first = v;
    for (std::size_t i = 0; i + p < w.size(); ++i) {
      --v[w[i]];
      ++v[w[i + p]];
      if (v != first) {
        parikh_break = i;
        break;
      }
    }
    std::optional<std::size_t> direct_break;  // first i with w_i != w_{i+p}
    for (std::size_t i = 0; i + p < w.size(); ++i) {
      if (w[i] != w[i + p]) {
        direct_break = i;
        break;
      }
    }
    // Windows i and i+1 differ exactly when w_i != w_{i+p}, so the two scans
    // must stop at the same index.
    if (parikh_break != direct_break) {
      throw InconsistencyError("periodicity_via_parikh: Parikh and direct scans disagree");
    }
    report.pass = !parikh_break.has_value();
    if (!report.pass) {
      std::size_t const i = *parikh_break;
      Witness           wit;
      wit.n         = p;
      wit.positions = {i, i + 1};
      wit.vectors   = {parikh(w.window(i, p), w.alphabet()),
                       parikh(w.window(i + 1, p), w.alphabet())};
      wit.note      = "w[" + std::to_string(i) + "]!=w["
                 + std::to_string(i + p) + "]";
      report.witness = std::move(wit);
    }
    return report;
  }

  std::optional<std::pair<std::size_t, std::size_t>>
  special_factor_witnesses(WordPrefix const& w, std::size_t k) {
    if (k < 2) {
      throw PreconditionError("special_factor_witnesses: k must be >= 2");
    }
    std::optional<std::size_t> u, v;
    for (std::size_t i = 0; i + k <= w.size() && !(u && v); ++i) {
      Letter const a = w[i];
      Letter const b = w[i + k - 1];
      if (!u && a == 0 && b == 1) {
        u = i;
      }
      if (!v && a == 1 && b == 0) {
        v = i;
      }
    }
    if (u && v) {
      return std::make_pair(*u, *v);
    }
    return std::nullopt;
  }

  namespace {
    bool binary_inner(RecipePtr const& inner) {
      return inner && alphabet_of(*inner) <= 2;
    }

    bool rauzy_shape(WordRecipe const& r) {
      Morphism const f = Morphism::ternary_012_021();
      if (std::holds_alternative<recipe::Hubert>(r.node)) {
        return true;
      }
      if (auto const* img = std::get_if<recipe::Image>(&r.node)) {
        return img->morphism == f && binary_inner(img->inner);
      }
      if (auto const* fp = std::get_if<recipe::FixedPoint>(&r.node)) {
        return fp->post && *fp->post == f
               && fp->morphism.source_alphabet() <= 2;
      }
      return false;
    }
  }  // namespace

  CheckReport rauzy_constant3_check(WordRecipe const&          recipe,
                                    std::size_t                n_max,
                                    std::optional<std::size_t> prefix_len,
                                    GenerationLimits           limits) {
    if (n_max == 0) {
      throw PreconditionError("rauzy_constant3_check: n_max must be >= 1");
    }
    if (!rauzy_shape(recipe)) {
      throw PreconditionError(
          "rauzy_constant3_check: recipe must be hubert(slope) or the image "
          "of a binary word under 0->012, 1->021");
    }
    std::size_t const len = prefix_len.value_or(64 * n_max);
    if (len < n_max) {
      throw PreconditionError("rauzy_constant3_check: prefix_len < n_max");
    }
    auto const w = prefix_of(recipe, len, limits);
    return profile_check("rauzy-constant-3", w, n_max,
                         [](std::size_t) { return std::uint64_t(3); });
  }

  CheckReport sturmian_profile_check(WordPrefix const& w,
                                     std::size_t       n_max,
                                     std::size_t       subword_n_max) {
    CheckReport report = profile_check("sturmian-profile", w, n_max,
                                       [](std::size_t) { return std::uint64_t(2); });
    report.range += " rho:n=1.." + std::to_string(subword_n_max);
    if (!report.pass) {
      return report;
    }
    auto const rho = subword_profile(w, subword_n_max);
    for (std::size_t n = 1; n <= subword_n_max; ++n) {
      if (rho[n] != n + 1) {
        report.pass    = false;
        report.witness = Witness{n, {}, {}, "rho=" + std::to_string(rho[n])
                                                + " expected " + std::to_string(n + 1)};
        break;
      }
    }
    return report;
  }

  CheckReport max_complexity_check(WordPrefix const& w, std::size_t n_max) {
    std::uint64_t const p = w.alphabet();
    return profile_check("max-complexity", w, n_max, [p](std::size_t n) {
      return static_cast<std::uint64_t>(max_abelian_complexity(n, p));
    });
  }

  CheckReport balance_bridge_check(WordPrefix const& w, std::size_t n_max) {
    auto const  profile = compute_profile(w, n_max, false);
    CheckReport report;
    report.claim = "balance-bridge";
    report.range = range_text(n_max, w.size());
    std::uint64_t K = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
      K = std::max(K, profile.rho_ab[n]);
    }
    std::uint64_t const C = profile.balance_C;
    report.pass           = C + 1 <= K;
    if (!report.pass) {
      report.witness = Witness{n_max, {}, {}, "balance " + std::to_string(C)
                                                  + " > K-1 with K=" + std::to_string(K)};
      return report;
    }
    BigInt const bound = boost::multiprecision::pow(BigInt(C + 1),
                                                    static_cast<unsigned>(w.alphabet()));
    for (std::size_t n = 1; n <= n_max; ++n) {
      if (BigInt(profile.rho_ab[n]) > bound) {
        report.pass    = false;
        report.witness = class_witness(w, n, 16);
        report.witness->note = "rho_ab=" + std::to_string(profile.rho_ab[n])
                               + " > (C+1)^p=" + bound.str();
        break;
      }
    }
    return report;
  }

  CheckReport congo_check(std::uint64_t M_max, std::size_t r_max) {
    CheckReport report;
    report.claim = "congo";
    report.range = "M=1.." + std::to_string(M_max) + " r=1.." + std::to_string(r_max);
    report.pass  = true;
    for (std::uint64_t M = 1; M <= M_max && report.pass; ++M) {
      for (std::size_t r = 1; r <= r_max && report.pass; ++r) {
        if (!congo_only_trivial_zero(congo_weights(M, r))) {
          report.pass    = false;
          report.witness = Witness{0, {}, {}, "nontrivial zero for M=" + std::to_string(M)
                                                  + " r=" + std::to_string(r)};
        }
      }
    }
    return report;
  }

}  // namespace abelian
